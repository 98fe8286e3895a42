#include "mvdr/fusion.hpp"

#include <cinttypes>
#include <cstdio>
#include <numeric>

#include "mvdr/error.hpp"

namespace mvdr {

ViewLayout layout_from_parts(const std::vector<FeatureVector>& parts) {
    ViewLayout layout;
    layout.reserve(parts.size());
    for (const FeatureVector& fv : parts)
        layout.emplace_back(fv.view, fv.values.size());
    return layout;
}

SplicedRow splice(const std::vector<FeatureVector>& parts, const ViewLayout& layout,
                  int label, const std::string& sample_name) {
    if (parts.size() != layout.size()) {
        // Name the first configured view the sample does not provide.
        for (size_t i = 0; i < layout.size(); ++i) {
            bool found = false;
            for (const FeatureVector& fv : parts)
                found = found || fv.view == layout[i].first;
            if (!found)
                throw FusionError("sample " + sample_name + ": missing view '" +
                                  layout[i].first + "'");
        }
        throw FusionError("sample " + sample_name + ": view count does not match layout");
    }
    SplicedRow row;
    row.label = label;
    size_t total = 0;
    for (const auto& [name, len] : layout)
        total += len;
    row.values.reserve(total);
    for (size_t i = 0; i < layout.size(); ++i) {
        if (parts[i].view != layout[i].first)
            throw FusionError("sample " + sample_name + ": expected view '" + layout[i].first +
                              "' at position " + std::to_string(i) + ", got '" + parts[i].view +
                              "'");
        if (parts[i].values.size() != layout[i].second)
            throw FusionError("sample " + sample_name + ": view '" + parts[i].view + "' has " +
                              std::to_string(parts[i].values.size()) + " features, layout expects " +
                              std::to_string(layout[i].second));
        row.values.insert(row.values.end(), parts[i].values.begin(), parts[i].values.end());
    }
    return row;
}

FeatureMatrix assemble(const std::vector<SplicedRow>& rows, const ViewLayout& layout) {
    if (rows.empty())
        throw ShapeError("cannot assemble an empty feature matrix");
    size_t cols = rows[0].values.size();
    if (cols == 0)
        throw ShapeError("feature rows are empty");
    FeatureMatrix fm;
    fm.view_layout = layout;
    fm.data = Matrix(rows.size(), cols);
    fm.labels.reserve(rows.size());
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].values.size() != cols)
            throw ShapeError("ragged feature rows: row " + std::to_string(i) + " has " +
                             std::to_string(rows[i].values.size()) + " values, expected " +
                             std::to_string(cols));
        std::copy(rows[i].values.begin(), rows[i].values.end(), fm.data.row(i).begin());
        fm.labels.push_back(rows[i].label);
    }
    return fm;
}

void dump_features_csv(const FeatureMatrix& fm, const std::string& path) {
    FILE* f = std::fopen(path.c_str(), "w");
    if (!f)
        throw IoError("cannot open " + path + " for writing");
    std::fputs("label", f);
    for (size_t j = 0; j < fm.cols(); ++j)
        std::fprintf(f, ",f%zu", j);
    std::fputc('\n', f);
    for (size_t i = 0; i < fm.rows(); ++i) {
        std::fprintf(f, "%d", fm.labels[i]);
        for (size_t j = 0; j < fm.cols(); ++j)
            std::fprintf(f, ",%.17g", fm.data(i, j));
        std::fputc('\n', f);
    }
    if (std::fclose(f) != 0)
        throw IoError("failed to write " + path);
}

} // namespace mvdr
