#include "irfocus/manifest.hpp"

#include <fstream>

#include <json.hpp>

#include "irfocus/pgm.hpp"

namespace irfocus {

namespace {

using nlohmann::json;

void validate_manifest(const StackManifest& m) {
    if (m.version != 1) {
        throw FormatError("manifest: unsupported version " + std::to_string(m.version));
    }
    if (m.entries.empty()) {
        throw FormatError("manifest: entries must not be empty");
    }
    for (std::size_t i = 0; i < m.entries.size(); ++i) {
        if (m.entries[i].index != static_cast<int>(i) + 1) {
            throw FormatError("manifest: non-consecutive index " +
                              std::to_string(m.entries[i].index) + " at entry " +
                              std::to_string(i) + " (expected " + std::to_string(i + 1) + ")");
        }
        if (i > 0 && !(m.entries[i].position_mm > m.entries[i - 1].position_mm)) {
            throw FormatError("manifest: positions must be strictly increasing (entry " +
                              std::to_string(i + 1) + ")");
        }
        if (m.entries[i].file.empty()) {
            throw FormatError("manifest: empty file name at entry " + std::to_string(i + 1));
        }
    }
}

const json& require(const json& j, const char* field) {
    const auto it = j.find(field);
    if (it == j.end()) {
        throw FormatError(std::string("manifest: missing field '") + field + "'");
    }
    return *it;
}

double require_number(const json& j, const char* field) {
    const json& v = require(j, field);
    if (!v.is_number()) {
        throw FormatError(std::string("manifest: field '") + field + "' must be a number");
    }
    return v.get<double>();
}

std::string require_string(const json& j, const char* field) {
    const json& v = require(j, field);
    if (!v.is_string()) {
        throw FormatError(std::string("manifest: field '") + field + "' must be a string");
    }
    return v.get<std::string>();
}

} // namespace

void write_manifest(const StackManifest& manifest, const std::filesystem::path& path) {
    validate_manifest(manifest);
    json j;
    j["version"] = manifest.version;
    j["label"] = manifest.label;
    j["ambient_c"] = manifest.ambient_c;
    j["object_temp_c"] = manifest.object_temp_c;
    j["object_distance_mm"] = manifest.object_distance_mm;
    json entries = json::array();
    for (const ManifestEntry& e : manifest.entries) {
        entries.push_back({{"index", e.index}, {"position_mm", e.position_mm}, {"file", e.file}});
    }
    j["entries"] = std::move(entries);

    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot open for writing: " + path.string());
    }
    out << j.dump(2) << "\n";
    if (!out) {
        throw IoError("write failed: " + path.string());
    }
}

StackManifest read_manifest(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open for reading: " + path.string());
    }
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw FormatError("manifest: invalid JSON in " + path.string() + ": " + e.what());
    }

    StackManifest m;
    const json& version = require(j, "version");
    if (!version.is_number_integer()) {
        throw FormatError("manifest: field 'version' must be an integer");
    }
    m.version = version.get<int>();
    m.label = require_string(j, "label");
    m.ambient_c = require_number(j, "ambient_c");
    m.object_temp_c = require_number(j, "object_temp_c");
    m.object_distance_mm = require_number(j, "object_distance_mm");

    const json& entries = require(j, "entries");
    if (!entries.is_array()) {
        throw FormatError("manifest: field 'entries' must be an array");
    }
    for (const json& e : entries) {
        ManifestEntry entry;
        const json& index = require(e, "index");
        if (!index.is_number_integer()) {
            throw FormatError("manifest: entry field 'index' must be an integer");
        }
        entry.index = index.get<int>();
        entry.position_mm = require_number(e, "position_mm");
        entry.file = require_string(e, "file");
        m.entries.push_back(std::move(entry));
    }
    validate_manifest(m);
    return m;
}

FocusStack load_stack(const std::filesystem::path& manifest_path) {
    const StackManifest m = read_manifest(manifest_path);
    const std::filesystem::path dir = manifest_path.parent_path();

    std::vector<ThermalFrame> frames;
    std::vector<double> positions;
    frames.reserve(m.entries.size());
    positions.reserve(m.entries.size());
    for (const ManifestEntry& e : m.entries) {
        const std::filesystem::path frame_path = dir / e.file;
        if (!std::filesystem::exists(frame_path)) {
            throw IoError("manifest entry " + std::to_string(e.index) +
                          " references missing frame file: " + frame_path.string());
        }
        frames.push_back(read_pgm(frame_path));
        positions.push_back(e.position_mm);
    }

    StackMetadata meta;
    meta.ambient_c = m.ambient_c;
    meta.object_temp_c = m.object_temp_c;
    meta.label = m.label;
    return FocusStack(std::move(frames), std::move(positions), std::move(meta));
}

} // namespace irfocus
