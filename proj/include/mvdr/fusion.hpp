#pragma once

#include <string>
#include <vector>

#include "mvdr/convnet.hpp"
#include "mvdr/matrix.hpp"

namespace mvdr {

// Column segments of the spliced matrix: (view name, segment length) in splice
// order.
using ViewLayout = std::vector<std::pair<std::string, size_t>>;

// Row-per-sample spliced feature matrix plus labels.
struct FeatureMatrix {
    Matrix data; // rows x cols
    std::vector<int> labels;
    ViewLayout view_layout;

    size_t rows() const { return data.rows(); }
    size_t cols() const { return data.cols(); }
};

struct SplicedRow {
    std::vector<double> values;
    int label = 0;
};

// Concatenates per-view feature vectors in the given order. Every vector must
// match `layout` by name and length; a missing or misplaced view raises a
// FusionError naming the sample and the view.
SplicedRow splice(const std::vector<FeatureVector>& parts, const ViewLayout& layout,
                  int label, const std::string& sample_name);

ViewLayout layout_from_parts(const std::vector<FeatureVector>& parts);

// Stacks spliced rows in input order; ragged rows raise a ShapeError.
FeatureMatrix assemble(const std::vector<SplicedRow>& rows, const ViewLayout& layout);

// CSV dump with header "label,f0,f1,...", full double precision.
void dump_features_csv(const FeatureMatrix& fm, const std::string& path);

} // namespace mvdr
