#include "mvdr/pca.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "mvdr/error.hpp"

namespace mvdr {

size_t Standardization::unmasked_count() const {
    size_t k = 0;
    for (uint8_t m : zero_variance_mask)
        k += m ? 0 : 1;
    return k;
}

StandardizeResult standardize(const Matrix& x) {
    size_t m = x.rows(), n = x.cols();
    if (m == 0 || n == 0)
        throw ShapeError("cannot standardize an empty matrix");

    StandardizeResult res;
    res.stats.means.resize(n);
    res.stats.stds.resize(n);
    res.stats.zero_variance_mask.resize(n);
    res.a = Matrix(m, n);

    for (size_t j = 0; j < n; ++j) {
        double mean = 0.0;
        for (size_t i = 0; i < m; ++i)
            mean += x(i, j);
        mean /= static_cast<double>(m);
        double var = 0.0;
        for (size_t i = 0; i < m; ++i) {
            double d = x(i, j) - mean;
            var += d * d;
        }
        double std = std::sqrt(var / static_cast<double>(m));
        // A constant column can pick up round-off of order eps*|mean| in its
        // deviations; treat anything at that scale as zero variance.
        bool masked = std <= 1e-12 * std::max(1.0, std::abs(mean));
        res.stats.means[j] = mean;
        res.stats.stds[j] = masked ? 0.0 : std;
        res.stats.zero_variance_mask[j] = masked ? 1 : 0;
        if (masked) {
            for (size_t i = 0; i < m; ++i)
                res.a(i, j) = 0.0;
        } else {
            for (size_t i = 0; i < m; ++i)
                res.a(i, j) = (x(i, j) - mean) / std;
        }
    }
    return res;
}

Matrix correlation(const Matrix& a) {
    size_t m = a.rows(), n = a.cols();
    if (m == 0 || n == 0)
        throw ShapeError("cannot correlate an empty matrix");

    // Center each column on its own mean before the normalized cross product.
    Matrix centered(m, n);
    std::vector<double> norms(n);
    for (size_t j = 0; j < n; ++j) {
        double mean = 0.0;
        for (size_t i = 0; i < m; ++i)
            mean += a(i, j);
        mean /= static_cast<double>(m);
        double ss = 0.0;
        for (size_t i = 0; i < m; ++i) {
            double d = a(i, j) - mean;
            centered(i, j) = d;
            ss += d * d;
        }
        norms[j] = std::sqrt(ss);
    }

    Matrix r(n, n);
    for (size_t i = 0; i < n; ++i) {
        r(i, i) = 1.0;
        bool dead_i = norms[i] <= 0.0;
        for (size_t j = i + 1; j < n; ++j) {
            double v = 0.0;
            if (!dead_i && norms[j] > 0.0) {
                double dot = 0.0;
                for (size_t k = 0; k < m; ++k)
                    dot += centered(k, i) * centered(k, j);
                v = dot / (norms[i] * norms[j]);
            }
            r(i, j) = v;
            r(j, i) = v;
        }
    }
    return r;
}

namespace {

double offdiag_frobenius(const Matrix& a) {
    size_t n = a.rows();
    double s = 0.0;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            s += 2.0 * a(i, j) * a(i, j);
    return std::sqrt(s);
}

double frobenius(const Matrix& a) {
    double s = 0.0;
    for (double v : a.data())
        s += v * v;
    return std::sqrt(s);
}

// One Jacobi rotation zeroing a(p,q), applied symmetrically. Eigenvectors are
// accumulated transposed (row i of vt = vector i) so both updates walk rows.
// Rotation parameters per Golub & Van Loan.
void jacobi_rotate(Matrix& a, Matrix& vt, size_t p, size_t q) {
    double apq = a(p, q);
    if (apq == 0.0)
        return;
    double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
    double t;
    if (std::abs(theta) > 1e150) {
        t = 1.0 / (2.0 * theta); // avoids theta*theta overflow
    } else {
        t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        if (theta < 0.0)
            t = -t;
    }
    double c = 1.0 / std::sqrt(t * t + 1.0);
    double s = t * c;
    double tau = s / (1.0 + c);

    size_t n = a.rows();
    double app = a(p, p), aqq = a(q, q);
    a(p, p) = app - t * apq;
    a(q, q) = aqq + t * apq;
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    double* ap = a.row(p).data();
    double* aq = a.row(q).data();
    for (size_t k = 0; k < n; ++k) {
        if (k == p || k == q)
            continue;
        double akp = ap[k], akq = aq[k];
        ap[k] = akp - s * (akq + tau * akp);
        aq[k] = akq + s * (akp - tau * akq);
        a(k, p) = ap[k];
        a(k, q) = aq[k];
    }
    double* vp = vt.row(p).data();
    double* vq = vt.row(q).data();
    for (size_t k = 0; k < n; ++k) {
        double vkp = vp[k], vkq = vq[k];
        vp[k] = vkp - s * (vkq + tau * vkp);
        vq[k] = vkq + s * (vkp - tau * vkq);
    }
}

void fix_sign(std::vector<double>& vec) {
    size_t best = 0;
    double best_abs = -1.0;
    for (size_t i = 0; i < vec.size(); ++i) {
        double a = std::abs(vec[i]);
        if (a > best_abs) {
            best_abs = a;
            best = i;
        }
    }
    if (vec[best] < 0.0)
        for (double& v : vec)
            v = -v;
}

} // namespace

std::vector<EigenPair> eigen_symmetric(const Matrix& s) {
    size_t n = s.rows();
    if (n == 0 || s.cols() != n)
        throw ShapeError("eigen_symmetric needs a non-empty square matrix");

    Matrix a = s;
    Matrix vt(n, n); // row i = accumulated eigenvector i
    for (size_t i = 0; i < n; ++i)
        vt(i, i) = 1.0;

    const double tol = 1e-10 * frobenius(s);
    const int max_sweeps = 100;
    bool converged = offdiag_frobenius(a) <= tol;
    for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
        for (size_t p = 0; p + 1 < n; ++p)
            for (size_t q = p + 1; q < n; ++q)
                jacobi_rotate(a, vt, p, q);
        converged = offdiag_frobenius(a) <= tol;
    }
    if (!converged)
        throw NumericalError("Jacobi eigensolver did not converge in 100 sweeps (off-diagonal "
                             "residual " +
                             std::to_string(offdiag_frobenius(a)) + ")");

    std::vector<size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](size_t x, size_t y) { return a(x, x) > a(y, y); });

    std::vector<EigenPair> pairs(n);
    for (size_t r = 0; r < n; ++r) {
        size_t idx = order[r];
        pairs[r].value = a(idx, idx);
        auto row = vt.row(idx);
        pairs[r].vector.assign(row.begin(), row.end());
        fix_sign(pairs[r].vector);
    }
    return pairs;
}

size_t select_components(const std::vector<double>& sorted_values, double threshold) {
    if (sorted_values.empty())
        throw NumericalError("cannot select components from an empty spectrum");
    if (!(threshold > 0.0) || threshold > 1.0)
        throw ArgumentError("variance threshold must lie in (0, 1], got " +
                            std::to_string(threshold));
    double total = std::accumulate(sorted_values.begin(), sorted_values.end(), 0.0);
    if (!(total > 0.0))
        throw NumericalError("degenerate spectrum: eigenvalue total is not positive");
    double cum = 0.0;
    for (size_t w = 0; w < sorted_values.size(); ++w) {
        cum += sorted_values[w];
        if (cum / total >= threshold)
            return w + 1;
    }
    return sorted_values.size(); // round-off kept the ratio a hair below 1
}

PcaModel fit_pca(const Matrix& x, double threshold) {
    auto [a, stats] = standardize(x);
    Matrix r = correlation(a);

    // The eigenproblem runs on the unmasked principal submatrix; masked axes
    // carry no variance and stay out of the spectrum and the projection.
    std::vector<size_t> keep;
    keep.reserve(stats.dim());
    for (size_t j = 0; j < stats.dim(); ++j)
        if (!stats.zero_variance_mask[j])
            keep.push_back(j);
    if (keep.empty())
        throw NumericalError("degenerate input: every feature column is constant");

    Matrix sub(keep.size(), keep.size());
    for (size_t i = 0; i < keep.size(); ++i)
        for (size_t j = 0; j < keep.size(); ++j)
            sub(i, j) = r(keep[i], keep[j]);

    std::vector<EigenPair> pairs = eigen_symmetric(sub);

    PcaModel model;
    model.standardization = std::move(stats);
    model.threshold = threshold;
    model.eigenvalues.resize(pairs.size());
    model.eigenvectors = Matrix(pairs.size(), model.standardization.dim());
    for (size_t p = 0; p < pairs.size(); ++p) {
        model.eigenvalues[p] = pairs[p].value;
        for (size_t i = 0; i < keep.size(); ++i)
            model.eigenvectors(p, keep[i]) = pairs[p].vector[i];
    }
    model.retained = select_components(model.eigenvalues, threshold);
    return model;
}

PcaModel fit_pca(const FeatureMatrix& x, double threshold) {
    return fit_pca(x.data, threshold);
}

std::vector<double> project(const PcaModel& model, std::span<const double> row) {
    size_t n = model.input_dim();
    if (row.size() != n)
        throw ShapeError("projection input has " + std::to_string(row.size()) +
                         " features, model expects " + std::to_string(n));
    std::vector<double> z(n);
    for (size_t j = 0; j < n; ++j)
        z[j] = model.standardization.zero_variance_mask[j]
                   ? 0.0
                   : (row[j] - model.standardization.means[j]) / model.standardization.stds[j];
    std::vector<double> out(model.retained);
    for (size_t c = 0; c < model.retained; ++c) {
        double s = 0.0;
        auto u = model.eigenvectors.row(c);
        for (size_t j = 0; j < n; ++j)
            s += z[j] * u[j];
        out[c] = s;
    }
    return out;
}

Matrix project(const PcaModel& model, const Matrix& x) {
    Matrix out(x.rows(), model.retained);
    for (size_t i = 0; i < x.rows(); ++i) {
        std::vector<double> p = project(model, x.row(i));
        std::copy(p.begin(), p.end(), out.row(i).begin());
    }
    return out;
}

} // namespace mvdr
