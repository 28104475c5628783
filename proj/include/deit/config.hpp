#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "deit/numerics.hpp"

namespace deit::jobs {

class ConfigError : public Error {
public:
    using Error::Error;
};

/// Flat key-value configuration with INI-style section headers. Keys are
/// addressed as "section.key"; values are strings until typed accessors
/// parse them. Later assignments (including --set overrides) win.
class Config {
public:
    static Config parse_file(const std::string& path);
    static Config parse_text(const std::string& text, const std::string& origin = "<text>");

    void set(const std::string& dotted_key, const std::string& value);
    bool has(const std::string& dotted_key) const;

    std::string get_string(const std::string& key, const std::string& fallback) const;
    double get_double(const std::string& key, double fallback) const;
    int get_int(const std::string& key, int fallback) const;
    std::vector<double> get_double_list(const std::string& key,
                                        const std::vector<double>& fallback) const;

    const std::map<std::string, std::string>& entries() const { return values_; }

private:
    std::map<std::string, std::string> values_;
    std::map<std::string, std::string> origins_;  // key -> "file:line" for diagnostics

    [[noreturn]] void fail(const std::string& key, const std::string& what) const;
};

/// Grid specification: strictly increasing, at least 2 points.
struct Grid {
    double start = 0, stop = 1;
    int points = 2;

    std::vector<double> values() const;
    void validate(const std::string& name) const;
};

}  // namespace deit::jobs
