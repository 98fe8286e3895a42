#include "mvdr/image_codec.hpp"

#include <algorithm>
#include <cmath>
#include <csetjmp>
#include <cstdio>
#include <cstring>
#include <fstream>

#include <jpeglib.h>
#include <png.h>

#include "mvdr/error.hpp"

namespace mvdr {

namespace {

constexpr uint8_t kPngSig[8] = {0x89, 0x50, 0x4E, 0x47, 0x0D, 0x0A, 0x1A, 0x0A};

bool looks_like_png(std::span<const uint8_t> bytes) {
    return bytes.size() >= 8 && std::memcmp(bytes.data(), kPngSig, 8) == 0;
}

bool looks_like_jpeg(std::span<const uint8_t> bytes) {
    return bytes.size() >= 3 && bytes[0] == 0xFF && bytes[1] == 0xD8 && bytes[2] == 0xFF;
}

// ---- PNG ----

struct PngMemSource {
    const uint8_t* data;
    size_t size;
    size_t pos;
};

void png_mem_read(png_structp png, png_bytep out, png_size_t n) {
    auto* src = static_cast<PngMemSource*>(png_get_io_ptr(png));
    if (src->pos + n > src->size)
        png_error(png, "unexpected end of data");
    std::memcpy(out, src->data + src->pos, n);
    src->pos += n;
}

void png_store_error(png_structp png, png_const_charp msg) {
    auto* err = static_cast<std::string*>(png_get_error_ptr(png));
    if (err && err->empty())
        *err = msg;
    png_longjmp(png, 1);
}

void png_swallow_warning(png_structp, png_const_charp) {}

RgbImage decode_png(std::span<const uint8_t> bytes, const std::string& name) {
    std::string errmsg;
    png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, &errmsg,
                                             png_store_error, png_swallow_warning);
    if (!png)
        throw DecodeError(name + ": failed to initialize PNG decoder");
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_read_struct(&png, nullptr, nullptr);
        throw DecodeError(name + ": failed to initialize PNG decoder");
    }

    PngMemSource src{bytes.data(), bytes.size(), 0};
    // Rows are owned here so they survive the longjmp path and are freed on throw.
    std::vector<uint8_t> rowbuf;
    std::vector<png_bytep> rowptrs;
    RgbImage out;

    if (setjmp(png_jmpbuf(png))) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw DecodeError(name + ": " + (errmsg.empty() ? "corrupt PNG data" : errmsg));
    }

    png_set_read_fn(png, &src, png_mem_read);
    png_read_info(png, info);

    png_uint_32 width = png_get_image_width(png, info);
    png_uint_32 height = png_get_image_height(png, info);
    int bit_depth = png_get_bit_depth(png, info);
    int color_type = png_get_color_type(png, info);

    if (color_type == PNG_COLOR_TYPE_PALETTE)
        png_set_palette_to_rgb(png);
    if (color_type == PNG_COLOR_TYPE_GRAY && bit_depth < 8)
        png_set_expand_gray_1_2_4_to_8(png);
    if (png_get_valid(png, info, PNG_INFO_tRNS))
        png_set_tRNS_to_alpha(png);
    if (color_type == PNG_COLOR_TYPE_GRAY || color_type == PNG_COLOR_TYPE_GRAY_ALPHA)
        png_set_gray_to_rgb(png);
    png_set_strip_alpha(png);
    png_read_update_info(png, info);

    bit_depth = png_get_bit_depth(png, info);
    size_t rowbytes = png_get_rowbytes(png, info);
    size_t expected = static_cast<size_t>(width) * 3 * (bit_depth == 16 ? 2 : 1);
    if (rowbytes != expected)
        png_error(png, "unexpected PNG row layout");

    rowbuf.resize(rowbytes * height);
    rowptrs.resize(height);
    for (png_uint_32 y = 0; y < height; ++y)
        rowptrs[y] = rowbuf.data() + y * rowbytes;
    png_read_image(png, rowptrs.data());
    png_read_end(png, nullptr);
    png_destroy_read_struct(&png, &info, nullptr);

    out.width = static_cast<int>(width);
    out.height = static_cast<int>(height);
    out.data.resize(static_cast<size_t>(width) * height * 3);
    size_t n = out.data.size();
    if (bit_depth == 16) {
        // PNG stores 16-bit samples big-endian.
        for (size_t i = 0; i < n; ++i) {
            uint16_t v = static_cast<uint16_t>((rowbuf[2 * i] << 8) | rowbuf[2 * i + 1]);
            out.data[i] = v / 65535.0;
        }
    } else {
        for (size_t i = 0; i < n; ++i)
            out.data[i] = rowbuf[i] / 255.0;
    }
    return out;
}

// ---- JPEG ----

struct JpegErrorMgr {
    jpeg_error_mgr pub;
    jmp_buf jump;
    char message[JMSG_LENGTH_MAX];
};

void jpeg_error_exit(j_common_ptr cinfo) {
    auto* err = reinterpret_cast<JpegErrorMgr*>(cinfo->err);
    (*cinfo->err->format_message)(cinfo, err->message);
    longjmp(err->jump, 1);
}

void jpeg_swallow_message(j_common_ptr, int) {}

RgbImage decode_jpeg(std::span<const uint8_t> bytes, const std::string& name) {
    jpeg_decompress_struct cinfo;
    JpegErrorMgr jerr;
    cinfo.err = jpeg_std_error(&jerr.pub);
    jerr.pub.error_exit = jpeg_error_exit;
    jerr.pub.emit_message = jpeg_swallow_message;
    jerr.message[0] = '\0';

    std::vector<uint8_t> rowbuf;
    RgbImage out;

    if (setjmp(jerr.jump)) {
        jpeg_destroy_decompress(&cinfo);
        throw DecodeError(name + ": " + (jerr.message[0] ? jerr.message : "corrupt JPEG data"));
    }

    jpeg_create_decompress(&cinfo);
    jpeg_mem_src(&cinfo, bytes.data(), static_cast<unsigned long>(bytes.size()));
    jpeg_read_header(&cinfo, TRUE);
    cinfo.out_color_space = JCS_RGB;
    jpeg_start_decompress(&cinfo);

    size_t width = cinfo.output_width;
    size_t height = cinfo.output_height;
    size_t rowbytes = width * 3;
    rowbuf.resize(rowbytes * height);
    while (cinfo.output_scanline < cinfo.output_height) {
        JSAMPROW row = rowbuf.data() + static_cast<size_t>(cinfo.output_scanline) * rowbytes;
        jpeg_read_scanlines(&cinfo, &row, 1);
    }
    jpeg_finish_decompress(&cinfo);
    jpeg_destroy_decompress(&cinfo);

    out.width = static_cast<int>(width);
    out.height = static_cast<int>(height);
    out.data.resize(rowbuf.size());
    for (size_t i = 0; i < rowbuf.size(); ++i)
        out.data[i] = rowbuf[i] / 255.0;
    return out;
}

uint8_t quantize8(double v) {
    double c = std::clamp(v, 0.0, 1.0);
    return static_cast<uint8_t>(std::lround(c * 255.0));
}

uint16_t quantize16(double v) {
    double c = std::clamp(v, 0.0, 1.0);
    return static_cast<uint16_t>(std::lround(c * 65535.0));
}

struct PngFileWriter {
    FILE* f = nullptr;
    png_structp png = nullptr;
    png_infop info = nullptr;

    ~PngFileWriter() {
        if (png)
            png_destroy_write_struct(&png, info ? &info : nullptr);
        if (f)
            std::fclose(f);
    }
};

void write_png(const std::filesystem::path& path, int width, int height, int bit_depth,
               int color_type, const std::vector<uint8_t>& rows, size_t rowbytes) {
    std::string errmsg;
    PngFileWriter w;
    w.f = std::fopen(path.c_str(), "wb");
    if (!w.f)
        throw IoError("cannot open " + path.string() + " for writing");
    w.png = png_create_write_struct(PNG_LIBPNG_VER_STRING, &errmsg, png_store_error,
                                    png_swallow_warning);
    if (!w.png)
        throw IoError(path.string() + ": failed to initialize PNG encoder");
    w.info = png_create_info_struct(w.png);
    if (!w.info)
        throw IoError(path.string() + ": failed to initialize PNG encoder");

    if (setjmp(png_jmpbuf(w.png)))
        throw IoError(path.string() + ": " + (errmsg.empty() ? "PNG write failed" : errmsg));

    png_init_io(w.png, w.f);
    png_set_IHDR(w.png, w.info, width, height, bit_depth, color_type, PNG_INTERLACE_NONE,
                 PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(w.png, w.info);
    for (int y = 0; y < height; ++y)
        png_write_row(w.png, const_cast<png_bytep>(rows.data() + static_cast<size_t>(y) * rowbytes));
    png_write_end(w.png, nullptr);
}

} // namespace

RgbImage decode_image(std::span<const uint8_t> bytes, const std::string& name) {
    if (looks_like_png(bytes))
        return decode_png(bytes, name);
    if (looks_like_jpeg(bytes))
        return decode_jpeg(bytes, name);
    throw UnsupportedFormatError(name + ": unsupported image format (expected PNG or JPEG)");
}

std::vector<uint8_t> read_file_bytes(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open " + path.string());
    std::vector<uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                               std::istreambuf_iterator<char>());
    if (in.bad())
        throw IoError("failed to read " + path.string());
    return bytes;
}

RgbImage decode_image_file(const std::filesystem::path& path) {
    return decode_image(read_file_bytes(path), path.string());
}

Plane decode_gray_file(const std::filesystem::path& path) {
    RgbImage img = decode_image_file(path);
    Plane p(img.width, img.height);
    size_t n = p.data.size();
    for (size_t i = 0; i < n; ++i)
        p.data[i] = (img.data[3 * i] + img.data[3 * i + 1] + img.data[3 * i + 2]) / 3.0;
    return p;
}

void write_png_rgb8(const std::filesystem::path& path, const RgbImage& image) {
    size_t rowbytes = static_cast<size_t>(image.width) * 3;
    std::vector<uint8_t> rows(rowbytes * image.height);
    for (size_t i = 0; i < image.data.size(); ++i)
        rows[i] = quantize8(image.data[i]);
    write_png(path, image.width, image.height, 8, PNG_COLOR_TYPE_RGB, rows, rowbytes);
}

void write_png_gray16(const std::filesystem::path& path, const Plane& plane) {
    size_t rowbytes = static_cast<size_t>(plane.width) * 2;
    std::vector<uint8_t> rows(rowbytes * plane.height);
    for (size_t i = 0; i < plane.data.size(); ++i) {
        uint16_t v = quantize16(plane.data[i]);
        rows[2 * i] = static_cast<uint8_t>(v >> 8); // big-endian per PNG spec
        rows[2 * i + 1] = static_cast<uint8_t>(v & 0xFF);
    }
    write_png(path, plane.width, plane.height, 16, PNG_COLOR_TYPE_GRAY, rows, rowbytes);
}

} // namespace mvdr
