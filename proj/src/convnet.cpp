#include "mvdr/convnet.hpp"

#include <cmath>

#include "mvdr/error.hpp"
#include "mvdr/rng.hpp"

namespace mvdr {

namespace {

void check_conv_input(const Plane& plane) {
    if (plane.width < 3 || plane.height < 3)
        throw ShapeError("plane " + std::to_string(plane.width) + "x" +
                         std::to_string(plane.height) + " is smaller than the 3x3 kernel");
}

// Accumulates the raw cross-correlation of `plane` into `acc` (same dims).
void conv_accumulate(const Plane& plane, const std::array<double, 9>& kernel, Plane& acc) {
    int ow = plane.width - 2;
    int oh = plane.height - 2;
    for (int y = 0; y < oh; ++y) {
        for (int x = 0; x < ow; ++x) {
            double s = 0.0;
            for (int u = 0; u < 3; ++u) {
                const double* row = &plane.data[static_cast<size_t>(y + u) * plane.width + x];
                s += row[0] * kernel[u * 3 + 0] + row[1] * kernel[u * 3 + 1] +
                     row[2] * kernel[u * 3 + 2];
            }
            acc.at(x, y) += s;
        }
    }
}

} // namespace

Plane conv2d_valid(const Plane& plane, const std::array<double, 9>& kernel, double bias) {
    check_conv_input(plane);
    Plane out(plane.width - 2, plane.height - 2, bias);
    conv_accumulate(plane, kernel, out);
    return out;
}

double sigmoid(double x) {
    // Split form keeps exp() bounded and makes sigmoid(x) + sigmoid(-x) land
    // on 1.0 to the last ulp.
    if (x >= 0.0)
        return 1.0 / (1.0 + std::exp(-x));
    double e = std::exp(x);
    return e / (1.0 + e);
}

Plane pool_mean(const Plane& plane, int window) {
    if (window <= 0)
        throw ArgumentError("pooling window must be >= 1, got " + std::to_string(window));
    if (window == 1)
        return plane;
    int ow = plane.width / window;
    int oh = plane.height / window;
    Plane out(ow, oh);
    double inv = 1.0 / (static_cast<double>(window) * window);
    for (int y = 0; y < oh; ++y) {
        for (int x = 0; x < ow; ++x) {
            double s = 0.0;
            for (int v = 0; v < window; ++v)
                for (int u = 0; u < window; ++u)
                    s += plane.at(x * window + u, y * window + v);
            out.at(x, y) = s * inv;
        }
    }
    return out;
}

NetworkConfig init_weights(uint64_t seed, const NetworkShape& shape) {
    if (shape.stages.empty())
        throw ArgumentError("network needs at least one stage");
    const double bound = std::sqrt(6.0 / 18.0);
    UniformRng rng(seed);
    NetworkConfig net;
    net.seed = seed;
    for (auto [maps, pool] : shape.stages) {
        if (maps < 1)
            throw ArgumentError("stage map count must be >= 1");
        if (pool < 1)
            throw ArgumentError("pooling window must be >= 1");
        Stage stage;
        stage.pool = pool;
        stage.conv.kernels.resize(maps);
        stage.conv.biases.resize(maps);
        for (int m = 0; m < maps; ++m) {
            for (double& w : stage.conv.kernels[m])
                w = rng.next(-bound, bound);
            stage.conv.biases[m] = rng.next(-bound, bound);
        }
        net.stages.push_back(std::move(stage));
    }
    return net;
}

size_t feature_length(const NetworkConfig& net, int width, int height) {
    if (net.stages.empty())
        throw ConfigError("network has no stages");
    int w = width, h = height;
    size_t maps = 1;
    for (size_t s = 0; s < net.stages.size(); ++s) {
        const Stage& stage = net.stages[s];
        if (w < 3 || h < 3)
            throw ConfigError("stage " + std::to_string(s) + ": plane exhausted (" +
                              std::to_string(w) + "x" + std::to_string(h) +
                              " is smaller than the 3x3 kernel)");
        w -= 2;
        h -= 2;
        w /= stage.pool;
        h /= stage.pool;
        if (w < 1 || h < 1)
            throw ConfigError("stage " + std::to_string(s) + ": pooling by " +
                              std::to_string(stage.pool) + " exhausts the plane");
        maps = stage.conv.maps();
    }
    return maps * static_cast<size_t>(w) * static_cast<size_t>(h);
}

FeatureVector extract_features(const Plane& view, const NetworkConfig& net,
                               const std::string& view_label) {
    // Validates the whole stage chain up front so errors name the stage.
    feature_length(net, view.width, view.height);

    std::vector<Plane> maps{view};
    for (const Stage& stage : net.stages) {
        std::vector<Plane> next;
        next.reserve(stage.conv.maps());
        for (size_t m = 0; m < stage.conv.maps(); ++m) {
            Plane acc(maps[0].width - 2, maps[0].height - 2, stage.conv.biases[m]);
            for (const Plane& in : maps)
                conv_accumulate(in, stage.conv.kernels[m], acc);
            for (double& v : acc.data)
                v = sigmoid(v);
            next.push_back(pool_mean(acc, stage.pool));
        }
        maps = std::move(next);
    }

    FeatureVector fv;
    fv.view = view_label;
    for (const Plane& m : maps)
        fv.values.insert(fv.values.end(), m.data.begin(), m.data.end());
    return fv;
}

} // namespace mvdr
