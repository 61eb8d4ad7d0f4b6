#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "irfocus/frame.hpp"

namespace irfocus {

struct ManifestEntry {
    int index = 0; // 1-based, consecutive
    double position_mm = 0.0;
    std::string file; // frame path relative to the manifest

    bool operator==(const ManifestEntry&) const = default;
};

/// On-disk description of one focus sweep: protocol metadata plus an ordered
/// list of frame files.
struct StackManifest {
    int version = 1;
    std::string label;
    double ambient_c = 0.0;
    double object_temp_c = 0.0;
    double object_distance_mm = 0.0;
    std::vector<ManifestEntry> entries;

    bool operator==(const StackManifest&) const = default;
};

void write_manifest(const StackManifest& manifest, const std::filesystem::path& path);
StackManifest read_manifest(const std::filesystem::path& path);

/// Reads the manifest and every referenced frame into a FocusStack.
FocusStack load_stack(const std::filesystem::path& manifest_path);

} // namespace irfocus
