#pragma once
// key = value defaults for the command line; '#' starts a comment.

#include <filesystem>
#include <map>
#include <optional>
#include <string>

namespace hexa::cli {

class Config {
public:
    static Config load(const std::filesystem::path& file);
    static Config parse(const std::string& text);
    std::optional<std::string> get(const std::string& key) const;
    const std::map<std::string, std::string>& values() const { return v_; }

private:
    std::map<std::string, std::string> v_;
};

// keys a config file may set
inline const char* const kConfigKeys[] = {"system", "depth", "steps", "order", "mmax", "radius", "radius_cap", "scale"};

}  // namespace hexa::cli
