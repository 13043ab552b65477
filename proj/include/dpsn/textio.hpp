#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace dpsn {

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

std::string trim(const std::string& s);
std::vector<std::string> split(const std::string& s, char delim);

/// Shortest round-trip decimal for a double ("%.17g" narrowed when possible).
std::string fmt_double(double v);
/// Fixed-point with the given number of decimals.
std::string fmt_fixed(double v, int decimals);

/// Flat `key = value` document. `#` starts a comment, blank lines are
/// skipped, keys keep file order.
struct KeyValues {
    std::map<std::string, std::string> values;
    std::vector<std::string> order;

    bool has(const std::string& key) const { return values.count(key) != 0; }
    std::string get_string(const std::string& key, const std::string& fallback) const;
    double get_double(const std::string& key, double fallback) const;
    std::size_t get_size(const std::string& key, std::size_t fallback) const;
    std::uint64_t get_u64(const std::string& key, std::uint64_t fallback) const;
    bool get_bool(const std::string& key, bool fallback) const;
};

KeyValues parse_key_values_text(const std::string& text, const std::string& origin);
KeyValues parse_key_values_file(const std::string& path);

}  // namespace dpsn
