#pragma once

#include <vector>

#include "mvdr/fusion.hpp"
#include "mvdr/matrix.hpp"

namespace mvdr {

// Column statistics of the training matrix. Stds use the population
// denominator m. Columns whose deviation vanishes are masked: they
// standardize to 0 and are excluded from the eigenproblem and projection.
struct Standardization {
    std::vector<double> means;
    std::vector<double> stds; // 0 for masked columns
    std::vector<uint8_t> zero_variance_mask;

    size_t dim() const { return means.size(); }
    size_t unmasked_count() const;
    bool operator==(const Standardization&) const = default;
};

struct StandardizeResult {
    Matrix a; // standardized matrix, m x n
    Standardization stats;
};

struct EigenPair {
    double value = 0.0;
    std::vector<double> vector; // unit norm
};

// Standardization statistics, eigenpairs of the correlation matrix (descending,
// ties kept in diagonal order, sign fixed so the largest-magnitude entry is
// positive) and the retained component count.
struct PcaModel {
    Standardization standardization;
    std::vector<double> eigenvalues;  // one per unmasked feature, descending
    Matrix eigenvectors;              // k x n: row j = eigenvector j over all n features
    size_t retained = 0;              // w, smallest prefix reaching `threshold`
    double threshold = 0.85;

    size_t input_dim() const { return standardization.dim(); }
    bool operator==(const PcaModel&) const = default;
};

// Column z-scores with the population std (divide by m). m >= 1; an empty
// matrix throws ShapeError.
StandardizeResult standardize(const Matrix& x);

// Pearson correlation between columns of the standardized matrix, computed
// with the inner re-centering spelled out (column means of A are ~0, so this
// matches the plain normalized cross product up to round-off). Masked columns
// get 0 off-diagonal and 1 on the diagonal.
Matrix correlation(const Matrix& a);

// All eigenpairs of a symmetric matrix by cyclic Jacobi rotations. Converged
// when the off-diagonal Frobenius norm falls to 1e-10 of the input norm;
// throws NumericalError after 100 sweeps without convergence.
std::vector<EigenPair> eigen_symmetric(const Matrix& s);

// Smallest w with (sum of the first w eigenvalues) / (sum of all) >= threshold.
// Values must be sorted descending; an all-zero spectrum throws NumericalError.
size_t select_components(const std::vector<double>& sorted_values, double threshold);

PcaModel fit_pca(const FeatureMatrix& x, double threshold);
PcaModel fit_pca(const Matrix& x, double threshold);

// Standardizes with the stored statistics (masked columns contribute 0) and
// projects onto the top `retained` eigenvectors.
std::vector<double> project(const PcaModel& model, std::span<const double> row);
Matrix project(const PcaModel& model, const Matrix& x);

} // namespace mvdr
