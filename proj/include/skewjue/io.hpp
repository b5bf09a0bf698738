#pragma once

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "partition.hpp"

namespace skewjue {

// Insertion-ordered JSON so serialized output is a pure function of the data.
using Json = nlohmann::ordered_json;

inline constexpr const char* kVersion = "0.1.0";

// Shortest round-trip-exact decimal; never emits locale-dependent separators.
inline std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return std::string(buf);
}

// Provenance carried by every output file: the exact command line, the seed,
// and the realized parameters (ordered key/value pairs).
struct MetaInfo {
    std::string command;
    std::uint64_t seed = 0;
    std::vector<std::pair<std::string, std::string>> params;

    void add(const std::string& key, const std::string& value) { params.emplace_back(key, value); }
    void add(const std::string& key, long long value) { add(key, std::to_string(value)); }
    void add(const std::string& key, double value) { add(key, format_double(value)); }
};

inline std::vector<std::string> csv_meta_lines(const MetaInfo& meta) {
    std::vector<std::string> lines;
    lines.push_back(std::string("# version: ") + kVersion);
    lines.push_back("# command: " + meta.command);
    lines.push_back("# seed: " + std::to_string(meta.seed));
    for (const auto& [key, value] : meta.params) lines.push_back("# " + key + ": " + value);
    return lines;
}

inline void meta_to_json(Json& j, const MetaInfo& meta) {
    j["version"] = kVersion;
    j["command"] = meta.command;
    j["seed"] = meta.seed;
    Json params = Json::object();
    for (const auto& [key, value] : meta.params) params[key] = value;
    j["parameters"] = std::move(params);
}

inline Json partition_to_json(const Partition& la) {
    Json arr = Json::array();
    for (int part : la.parts()) arr.push_back(part);
    return arr;
}

// Compact one-line array form "[2,1]" used inside CSV cells.
inline std::string partition_cell(const std::vector<int>& parts) {
    std::string out = "\"[";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts[i]);
    }
    out += "]\"";
    return out;
}

inline std::string partition_cell(const Partition& la) { return partition_cell(la.parts()); }

// Binary mode plus explicit '\n' keeps output byte-identical across runs.
inline void write_text(const std::string& path, const std::string& body) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("write_text: cannot open " + path);
    out << body;
    if (!out) throw std::runtime_error("write_text: write failed on " + path);
}

inline void write_lines(const std::string& path, const std::vector<std::string>& lines) {
    std::string body;
    for (const std::string& line : lines) {
        body += line;
        body += '\n';
    }
    write_text(path, body);
}

inline void write_json(const std::string& path, const Json& j) { write_text(path, j.dump(2) + "\n"); }

}  // namespace skewjue
