#include "deit/config.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace deit::jobs {

namespace {

std::string trim(const std::string& s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

}  // namespace

Config Config::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_text(ss.str(), path);
}

Config Config::parse_text(const std::string& text, const std::string& origin) {
    Config cfg;
    std::istringstream in(text);
    std::string line, section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto comment = line.find_first_of("#;");
        if (comment != std::string::npos) line = line.substr(0, comment);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ConfigError(origin + ":" + std::to_string(lineno) + ": unterminated section header");
            section = trim(line.substr(1, line.size() - 2));
            if (section.empty())
                throw ConfigError(origin + ":" + std::to_string(lineno) + ": empty section name");
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(origin + ":" + std::to_string(lineno) + ": expected key = value, got '" + line + "'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty())
            throw ConfigError(origin + ":" + std::to_string(lineno) + ": empty key");
        const std::string dotted = section.empty() ? key : section + "." + key;
        cfg.values_[dotted] = value;
        cfg.origins_[dotted] = origin + ":" + std::to_string(lineno);
    }
    return cfg;
}

void Config::set(const std::string& dotted_key, const std::string& value) {
    if (dotted_key.empty()) throw ConfigError("--set: empty key");
    values_[dotted_key] = value;
    origins_[dotted_key] = "<override>";
}

bool Config::has(const std::string& key) const { return values_.count(key) > 0; }

void Config::fail(const std::string& key, const std::string& what) const {
    const auto o = origins_.find(key);
    const std::string where = o == origins_.end() ? "" : " (" + o->second + ")";
    throw ConfigError("config field '" + key + "'" + where + ": " + what);
}

std::string Config::get_string(const std::string& key, const std::string& fallback) const {
    const auto it = values_.find(key);
    return it == values_.end() ? fallback : it->second;
}

double Config::get_double(const std::string& key, double fallback) const {
    const auto it = values_.find(key);
    if (it == values_.end()) return fallback;
    try {
        size_t pos = 0;
        const double v = std::stod(it->second, &pos);
        if (pos != it->second.size()) fail(key, "trailing characters in number '" + it->second + "'");
        return v;
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception&) {
        fail(key, "not a number: '" + it->second + "'");
    }
}

int Config::get_int(const std::string& key, int fallback) const {
    const auto it = values_.find(key);
    if (it == values_.end()) return fallback;
    try {
        size_t pos = 0;
        const int v = std::stoi(it->second, &pos);
        if (pos != it->second.size()) fail(key, "trailing characters in integer '" + it->second + "'");
        return v;
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception&) {
        fail(key, "not an integer: '" + it->second + "'");
    }
}

std::vector<double> Config::get_double_list(const std::string& key,
                                            const std::vector<double>& fallback) const {
    const auto it = values_.find(key);
    if (it == values_.end()) return fallback;
    std::vector<double> out;
    std::istringstream ss(it->second);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) fail(key, "empty list element");
        try {
            out.push_back(std::stod(item));
        } catch (const std::exception&) {
            fail(key, "not a number: '" + item + "'");
        }
    }
    if (out.empty()) fail(key, "empty list");
    return out;
}

std::vector<double> Grid::values() const {
    validate("grid");
    std::vector<double> v(points);
    for (int i = 0; i < points; ++i)
        v[i] = start + (stop - start) * double(i) / double(points - 1);
    return v;
}

void Grid::validate(const std::string& name) const {
    if (points < 2) throw ConfigError(name + ": needs at least 2 points");
    if (!(stop > start)) throw ConfigError(name + ": stop must exceed start");
}

}  // namespace deit::jobs
