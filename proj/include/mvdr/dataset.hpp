#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "mvdr/image.hpp"

namespace mvdr {

struct LabeledSample {
    ViewSet views;
    int label = 0;
    std::string source; // image path, kept for error reporting
};

struct Dataset {
    std::vector<std::string> classes; // index = label
    std::vector<LabeledSample> samples;
};

// Reads `root/classes.txt` (one class name per line, line index = label).
std::vector<std::string> read_class_manifest(const std::filesystem::path& root);

// Expected layout: root/<class>/<image>.{png,jpg,jpeg} with an optional
// sibling depth map root/<class>/<image>.depth.png. Every image is decoded,
// resized to width x height and split into view planes. Samples are ordered
// lexicographically by path. Manifest classes must exist and be non-empty;
// directories missing from the manifest are rejected.
Dataset load_dataset(const std::filesystem::path& root, int width, int height);

// Path of the depth map sibling for an image path (x.png -> x.depth.png).
std::filesystem::path depth_path_for(const std::filesystem::path& image_path);

} // namespace mvdr
