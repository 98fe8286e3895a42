#pragma once

#include <string>
#include <vector>

#include "mvdr/matrix.hpp"

namespace mvdr {

struct BinaryProblem {
    const Matrix& x;            // m rows of width d
    std::vector<double> y;      // +1 / -1
    double c = 1.0;             // soft-margin penalty, > 0
};

struct SvmTrainOptions {
    double tolerance = 1e-4; // max dual-feasibility gap at convergence
    int max_epochs = 10000;
};

// Solver output for one binary problem; alphas and the per-epoch dual
// objective are kept for diagnostics.
struct BinaryResult {
    std::vector<double> weights;
    double bias = 0.0;
    std::vector<double> alphas;
    int epochs = 0;
    double gap = 0.0; // final dual-feasibility violation
    std::vector<double> dual_objectives; // one entry per epoch boundary
};

// One-vs-rest linear model: one (weights, bias) per class, in manifest order.
struct SvmModel {
    std::vector<std::string> classes;
    std::vector<std::vector<double>> weights;
    std::vector<double> biases;
    double c = 1.0;

    size_t dim() const { return weights.empty() ? 0 : weights[0].size(); }
    bool operator==(const SvmModel&) const = default;
};

// Soft-margin dual: min 1/2 a'Qa - sum(a) with 0 <= a_i <= C and
// sum(a_i y_i) = 0, Q_ij = y_i y_j x_i.x_j. Pairs of coordinates are updated
// in deterministic cyclic order, which keeps the equality constraint exact;
// convergence is declared when the bias-interval violation falls to
// `tolerance`. weights = sum(a_i y_i x_i); bias averages y_i - w.x_i over free
// support vectors, falling back to the midpoint of the two class-extreme
// decision values when no alpha is strictly inside (0, C).
BinaryResult train_binary(const BinaryProblem& problem, const SvmTrainOptions& opts = {});

double decision(std::span<const double> weights, double bias, std::span<const double> x);

SvmModel train_multiclass(const Matrix& x, const std::vector<int>& labels,
                          const std::vector<std::string>& classes, double c,
                          const SvmTrainOptions& opts = {});

std::vector<double> decision_values(const SvmModel& model, std::span<const double> x);

// Argmax of the per-class decision values; ties go to the lowest class index.
int predict(const SvmModel& model, std::span<const double> x);

} // namespace mvdr
