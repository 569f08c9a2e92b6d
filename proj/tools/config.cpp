#include "config.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace hexa::cli {

namespace {
std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}
}  // namespace

Config Config::parse(const std::string& text) {
    Config c;
    std::istringstream in(text);
    std::string line;
    int n = 0;
    while (std::getline(in, line)) {
        ++n;
        line = trim(line.substr(0, line.find('#')));
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("config line " + std::to_string(n) + ": expected key = value");
        std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
        if (std::find_if(std::begin(kConfigKeys), std::end(kConfigKeys), [&](const char* k) { return key == k; }) ==
            std::end(kConfigKeys))
            throw std::invalid_argument("config line " + std::to_string(n) + ": unknown key '" + key + "'");
        if (value.empty()) throw std::invalid_argument("config line " + std::to_string(n) + ": empty value for " + key);
        c.v_[key] = value;
    }
    return c;
}

Config Config::load(const std::filesystem::path& file) {
    std::ifstream f(file);
    if (!f) throw std::runtime_error("cannot read config " + file.string());
    std::stringstream ss;
    ss << f.rdbuf();
    return parse(ss.str());
}

std::optional<std::string> Config::get(const std::string& key) const {
    auto it = v_.find(key);
    if (it == v_.end()) return std::nullopt;
    return it->second;
}

}  // namespace hexa::cli
