#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "slatesim/errors.hpp"

namespace slatesim::jsonutil {

using nlohmann::json;

// Checked field access. Every failure names the offending JSON path so a
// config error is actionable without opening the schema docs.

inline std::string join(const std::string& path, const std::string& key) {
    return path.empty() ? key : path + "." + key;
}

inline const json& require(const json& j, const std::string& path, const std::string& key) {
    if (!j.is_object() || !j.contains(key)) {
        throw ConfigError(join(path, key) + ": required field is missing");
    }
    return j.at(key);
}

inline double get_number(const json& j, const std::string& path, const std::string& key,
                         double fallback) {
    if (!j.is_object() || !j.contains(key)) return fallback;
    const json& v = j.at(key);
    if (!v.is_number()) throw ConfigError(join(path, key) + ": expected a number");
    return v.get<double>();
}

inline double require_number(const json& j, const std::string& path, const std::string& key) {
    const json& v = require(j, path, key);
    if (!v.is_number()) throw ConfigError(join(path, key) + ": expected a number");
    return v.get<double>();
}

inline int64_t get_int(const json& j, const std::string& path, const std::string& key,
                       int64_t fallback) {
    if (!j.is_object() || !j.contains(key)) return fallback;
    const json& v = j.at(key);
    if (!v.is_number_integer()) throw ConfigError(join(path, key) + ": expected an integer");
    return v.get<int64_t>();
}

inline bool get_bool(const json& j, const std::string& path, const std::string& key,
                     bool fallback) {
    if (!j.is_object() || !j.contains(key)) return fallback;
    const json& v = j.at(key);
    if (!v.is_boolean()) throw ConfigError(join(path, key) + ": expected a boolean");
    return v.get<bool>();
}

inline std::string get_string(const json& j, const std::string& path, const std::string& key,
                              const std::string& fallback) {
    if (!j.is_object() || !j.contains(key)) return fallback;
    const json& v = j.at(key);
    if (!v.is_string()) throw ConfigError(join(path, key) + ": expected a string");
    return v.get<std::string>();
}

inline std::string require_string(const json& j, const std::string& path, const std::string& key) {
    const json& v = require(j, path, key);
    if (!v.is_string()) throw ConfigError(join(path, key) + ": expected a string");
    return v.get<std::string>();
}

inline std::vector<double> get_number_array(const json& j, const std::string& path,
                                            const std::string& key,
                                            std::vector<double> fallback = {}) {
    if (!j.is_object() || !j.contains(key)) return fallback;
    const json& v = j.at(key);
    if (!v.is_array()) throw ConfigError(join(path, key) + ": expected an array of numbers");
    std::vector<double> out;
    out.reserve(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!v[i].is_number()) {
            throw ConfigError(join(path, key) + "[" + std::to_string(i) +
                              "]: expected a number");
        }
        out.push_back(v[i].get<double>());
    }
    return out;
}

inline void check_range(double value, double lo, double hi, const std::string& path,
                        const std::string& key) {
    if (value < lo || value > hi) {
        throw ConfigError(join(path, key) + ": value " + std::to_string(value) +
                          " outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
}

inline void check_positive(double value, const std::string& path, const std::string& key) {
    if (!(value > 0.0)) {
        throw ConfigError(join(path, key) + ": value must be > 0");
    }
}

/// 64-bit FNV-1a over the canonical (sorted-key) dump; used as the config
/// digest stamped into logs and checkpoints.
inline std::string digest(const json& j) {
    const std::string s = j.dump();
    uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

}  // namespace slatesim::jsonutil
