#pragma once

#include <optional>
#include <string>
#include <vector>

namespace mvdr {

// Single-channel raster, row-major. Planes produced by the image layer hold
// intensities in [0,1]; intermediate feature maps reuse the type without that
// bound.
struct Plane {
    int width = 0;
    int height = 0;
    std::vector<double> data; // data.size() == width * height

    Plane() = default;
    Plane(int w, int h, double fill = 0.0)
        : width(w), height(h), data(static_cast<size_t>(w) * h, fill) {}

    double& at(int x, int y) { return data[static_cast<size_t>(y) * width + x]; }
    double at(int x, int y) const { return data[static_cast<size_t>(y) * width + x]; }

    bool operator==(const Plane&) const = default;
};

// Interleaved RGB triples in [0,1].
struct RgbImage {
    int width = 0;
    int height = 0;
    std::vector<double> data; // data.size() == width * height * 3

    double& at(int x, int y, int ch) { return data[(static_cast<size_t>(y) * width + x) * 3 + ch]; }
    double at(int x, int y, int ch) const { return data[(static_cast<size_t>(y) * width + x) * 3 + ch]; }
};

enum class View { R = 0, G = 1, B = 2, Gray = 3, Depth = 4 };

// Splice/layout order is fixed: R, G, B, Gray, Depth.
const char* view_name(View v);
View view_from_name(const std::string& name); // throws ArgumentError on unknown name

// Per-sample bundle of view planes sharing one resolution.
struct ViewSet {
    Plane r, g, b, gray;
    std::optional<Plane> depth;

    int width() const { return r.width; }
    int height() const { return r.height; }

    const Plane& plane(View v) const;
};

// Bilinear resample with pixel centers at (i + 0.5) / n. Output stays in the
// input's value range. Zero target dimension throws ArgumentError.
Plane resize_bilinear(const Plane& plane, int target_width, int target_height);
RgbImage resize_bilinear(const RgbImage& image, int target_width, int target_height);

// Channel-wise split plus BT.601 luminance; depth passed through unchanged.
// Depth dimensions must match the image's or a ShapeError is thrown.
ViewSet split_views(const RgbImage& image, std::optional<Plane> depth = std::nullopt);

} // namespace mvdr
