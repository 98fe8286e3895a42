#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "mvdr/image.hpp"

namespace mvdr {

// Sniffs PNG/JPEG from the payload and decodes to interleaved RGB in [0,1].
// 8-bit channels are scaled by 1/255, 16-bit PNG channels by 1/65535. `name`
// is only used in error messages. Throws DecodeError / UnsupportedFormatError.
RgbImage decode_image(std::span<const uint8_t> bytes, const std::string& name);

RgbImage decode_image_file(const std::filesystem::path& path);

// Decodes a grayscale image file (depth maps) to a single plane in [0,1];
// color inputs are averaged channel-wise.
Plane decode_gray_file(const std::filesystem::path& path);

std::vector<uint8_t> read_file_bytes(const std::filesystem::path& path);

// PNG writers, used by the synthetic dataset generator and the tests. Values
// are clamped to [0,1] and quantized to the target bit depth.
void write_png_rgb8(const std::filesystem::path& path, const RgbImage& image);
void write_png_gray16(const std::filesystem::path& path, const Plane& plane);

} // namespace mvdr
