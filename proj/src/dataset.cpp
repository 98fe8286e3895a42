#include "mvdr/dataset.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>

#include "mvdr/error.hpp"
#include "mvdr/image_codec.hpp"

namespace fs = std::filesystem;

namespace mvdr {

namespace {

bool has_image_extension(const fs::path& p) {
    std::string ext = p.extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return ext == ".png" || ext == ".jpg" || ext == ".jpeg";
}

bool is_depth_file(const fs::path& p) {
    std::string stem = p.stem().string(); // "x.depth.png" -> stem "x.depth"
    return stem.size() > 6 && stem.ends_with(".depth");
}

} // namespace

std::filesystem::path depth_path_for(const std::filesystem::path& image_path) {
    fs::path p = image_path;
    p.replace_extension();
    p += ".depth.png";
    return p;
}

std::vector<std::string> read_class_manifest(const fs::path& root) {
    fs::path manifest = root / "classes.txt";
    std::ifstream in(manifest);
    if (!in)
        throw DatasetError("missing class manifest " + manifest.string());
    std::vector<std::string> classes;
    std::set<std::string> seen;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        if (!seen.insert(line).second)
            throw DatasetError(manifest.string() + ": duplicate class name '" + line + "'");
        classes.push_back(line);
    }
    if (classes.empty())
        throw DatasetError(manifest.string() + ": no classes listed");
    return classes;
}

Dataset load_dataset(const fs::path& root, int width, int height) {
    if (!fs::is_directory(root))
        throw DatasetError("dataset root " + root.string() + " is not a directory");

    Dataset ds;
    ds.classes = read_class_manifest(root);

    std::map<std::string, int> label_of;
    for (size_t i = 0; i < ds.classes.size(); ++i)
        label_of[ds.classes[i]] = static_cast<int>(i);

    // Class directories not named in the manifest are an error, not data.
    for (const auto& entry : fs::directory_iterator(root)) {
        if (!entry.is_directory())
            continue;
        std::string name = entry.path().filename().string();
        if (!label_of.count(name))
            throw DatasetError("directory " + entry.path().string() +
                               " is not listed in classes.txt");
    }

    std::vector<std::pair<std::string, int>> files; // (path, label)
    for (const std::string& cls : ds.classes) {
        fs::path dir = root / cls;
        if (!fs::is_directory(dir))
            throw DatasetError("missing class directory " + dir.string());
        size_t before = files.size();
        for (const auto& entry : fs::directory_iterator(dir)) {
            if (!entry.is_regular_file())
                continue;
            const fs::path& p = entry.path();
            if (!has_image_extension(p) || is_depth_file(p))
                continue;
            files.emplace_back(p.string(), label_of[cls]);
        }
        if (files.size() == before)
            throw DatasetError("class directory " + dir.string() + " contains no images");
    }

    std::sort(files.begin(), files.end());

    ds.samples.reserve(files.size());
    for (const auto& [path, label] : files) {
        RgbImage img = resize_bilinear(decode_image_file(path), width, height);
        std::optional<Plane> depth;
        fs::path dp = depth_path_for(path);
        if (fs::exists(dp))
            depth = resize_bilinear(decode_gray_file(dp), width, height);
        LabeledSample sample;
        sample.views = split_views(img, std::move(depth));
        sample.label = label;
        sample.source = path;
        ds.samples.push_back(std::move(sample));
    }
    return ds;
}

} // namespace mvdr
