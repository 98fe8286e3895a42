#include "mvdr/image.hpp"

#include <algorithm>
#include <cmath>

#include "mvdr/error.hpp"

namespace mvdr {

const char* view_name(View v) {
    switch (v) {
    case View::R: return "r";
    case View::G: return "g";
    case View::B: return "b";
    case View::Gray: return "gray";
    case View::Depth: return "depth";
    }
    return "?";
}

View view_from_name(const std::string& name) {
    for (View v : {View::R, View::G, View::B, View::Gray, View::Depth})
        if (name == view_name(v))
            return v;
    throw ArgumentError("unknown view name: '" + name + "' (expected r, g, b, gray or depth)");
}

const Plane& ViewSet::plane(View v) const {
    switch (v) {
    case View::R: return r;
    case View::G: return g;
    case View::B: return b;
    case View::Gray: return gray;
    case View::Depth:
        if (!depth)
            throw ShapeError("view set has no depth plane");
        return *depth;
    }
    throw ArgumentError("invalid view");
}

namespace {

struct Tap {
    int lo, hi;
    double frac;
};

// Source coordinate for output index i with half-pixel alignment, clamped to
// the valid sample range.
Tap tap_for(int i, int in_size, int out_size) {
    double src = (i + 0.5) * static_cast<double>(in_size) / out_size - 0.5;
    double lo = std::floor(src);
    Tap t;
    t.frac = src - lo;
    t.lo = std::clamp(static_cast<int>(lo), 0, in_size - 1);
    t.hi = std::clamp(static_cast<int>(lo) + 1, 0, in_size - 1);
    return t;
}

void check_target(int w, int h) {
    if (w < 1 || h < 1)
        throw ArgumentError("resize target dimensions must be >= 1, got " +
                            std::to_string(w) + "x" + std::to_string(h));
}

} // namespace

Plane resize_bilinear(const Plane& plane, int target_width, int target_height) {
    check_target(target_width, target_height);
    if (plane.width == target_width && plane.height == target_height)
        return plane;
    Plane out(target_width, target_height);
    for (int y = 0; y < target_height; ++y) {
        Tap ty = tap_for(y, plane.height, target_height);
        for (int x = 0; x < target_width; ++x) {
            Tap tx = tap_for(x, plane.width, target_width);
            double top = (1.0 - tx.frac) * plane.at(tx.lo, ty.lo) + tx.frac * plane.at(tx.hi, ty.lo);
            double bot = (1.0 - tx.frac) * plane.at(tx.lo, ty.hi) + tx.frac * plane.at(tx.hi, ty.hi);
            out.at(x, y) = (1.0 - ty.frac) * top + ty.frac * bot;
        }
    }
    return out;
}

RgbImage resize_bilinear(const RgbImage& image, int target_width, int target_height) {
    check_target(target_width, target_height);
    if (image.width == target_width && image.height == target_height)
        return image;
    RgbImage out;
    out.width = target_width;
    out.height = target_height;
    out.data.resize(static_cast<size_t>(target_width) * target_height * 3);
    for (int y = 0; y < target_height; ++y) {
        Tap ty = tap_for(y, image.height, target_height);
        for (int x = 0; x < target_width; ++x) {
            Tap tx = tap_for(x, image.width, target_width);
            for (int ch = 0; ch < 3; ++ch) {
                double top = (1.0 - tx.frac) * image.at(tx.lo, ty.lo, ch) +
                             tx.frac * image.at(tx.hi, ty.lo, ch);
                double bot = (1.0 - tx.frac) * image.at(tx.lo, ty.hi, ch) +
                             tx.frac * image.at(tx.hi, ty.hi, ch);
                out.at(x, y, ch) = (1.0 - ty.frac) * top + ty.frac * bot;
            }
        }
    }
    return out;
}

ViewSet split_views(const RgbImage& image, std::optional<Plane> depth) {
    if (depth && (depth->width != image.width || depth->height != image.height))
        throw ShapeError("depth plane " + std::to_string(depth->width) + "x" +
                         std::to_string(depth->height) + " does not match image " +
                         std::to_string(image.width) + "x" + std::to_string(image.height));
    ViewSet vs;
    vs.r = Plane(image.width, image.height);
    vs.g = Plane(image.width, image.height);
    vs.b = Plane(image.width, image.height);
    vs.gray = Plane(image.width, image.height);
    size_t n = static_cast<size_t>(image.width) * image.height;
    for (size_t i = 0; i < n; ++i) {
        double r = image.data[3 * i];
        double g = image.data[3 * i + 1];
        double b = image.data[3 * i + 2];
        vs.r.data[i] = r;
        vs.g.data[i] = g;
        vs.b.data[i] = b;
        vs.gray.data[i] = 0.299 * r + 0.587 * g + 0.114 * b;
    }
    vs.depth = std::move(depth);
    return vs;
}

} // namespace mvdr
