#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace latlab {

// Flat "key = value" text with optional [section] headers; no nesting.
// Lines starting with '#' or ';' are comments. Keys before the first header
// belong to the unnamed section "".
class KeyValueConfig {
 public:
  static KeyValueConfig parse(std::string_view text);
  static KeyValueConfig load(const std::string& path);

  bool has(std::string_view section, std::string_view key) const;
  std::optional<std::string> get(std::string_view section, std::string_view key) const;
  std::string require(std::string_view section, std::string_view key) const;
  double require_double(std::string_view section, std::string_view key) const;

  void set(const std::string& section, const std::string& key, std::string value);

  const std::map<std::string, std::map<std::string, std::string>>& sections() const {
    return sections_;
  }

 private:
  std::map<std::string, std::map<std::string, std::string>> sections_;
};

// Parses "1,2.5,1e3" into doubles; throws ConfigError on junk.
std::vector<double> parse_double_list(std::string_view text);
double parse_double(std::string_view text);

}  // namespace latlab
