#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "mvdr/image.hpp"

namespace mvdr {

// One convolution layer: N fixed-size 3x3 kernels plus one bias per output map.
struct ConvLayerParams {
    std::vector<std::array<double, 9>> kernels; // row-major 3x3
    std::vector<double> biases;                 // biases.size() == kernels.size()

    size_t maps() const { return kernels.size(); }
    bool operator==(const ConvLayerParams&) const = default;
};

// A stage is one convolution layer followed by one mean-pooling layer.
struct Stage {
    ConvLayerParams conv;
    int pool = 2;

    bool operator==(const Stage&) const = default;
};

struct NetworkConfig {
    std::vector<Stage> stages;
    uint64_t seed = 0;

    bool operator==(const NetworkConfig&) const = default;
};

// Stage layout without weights: (map count, pooling window) per stage.
struct NetworkShape {
    std::vector<std::pair<int, int>> stages;

    static NetworkShape default_shape() { return {{{8, 2}, {8, 2}}}; }
    bool operator==(const NetworkShape&) const = default;
};

struct FeatureVector {
    std::string view;
    std::vector<double> values;
};

// Valid cross-correlation of a 3x3 kernel (no flip, stride 1, no padding):
// out[i][j] = sum_{u,v} plane[i+u][j+v] * kernel[u*3+v] + bias. Output is
// (width-2) x (height-2); planes smaller than the kernel throw ShapeError.
Plane conv2d_valid(const Plane& plane, const std::array<double, 9>& kernel, double bias);

double sigmoid(double x);

// Non-overlapping k x k mean pooling; trailing rows/columns that do not fill a
// window are dropped. k == 0 throws ArgumentError.
Plane pool_mean(const Plane& plane, int window);

// Fills kernels and biases from a seeded generator, uniform in
// [-sqrt(6/18), +sqrt(6/18)] (fan-based bound for 3x3 kernels). Same seed
// gives bit-identical parameters.
NetworkConfig init_weights(uint64_t seed, const NetworkShape& shape);

// Closed-form output length for a view of the given size, without running the
// network. Throws ConfigError if a stage exhausts the plane.
size_t feature_length(const NetworkConfig& net, int width, int height);

// Per stage: every input map is convolved with every kernel, pre-activations
// are summed per output map plus the map's bias, passed through the sigmoid,
// then mean-pooled. Surviving maps are flattened row-major in kernel order.
FeatureVector extract_features(const Plane& view, const NetworkConfig& net,
                               const std::string& view_label);

} // namespace mvdr
