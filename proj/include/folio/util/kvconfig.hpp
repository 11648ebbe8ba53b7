#pragma once

#include <map>
#include <string>
#include <vector>

namespace folio::util {

// Plain-text `key=value` configuration. Lines starting with '#' and blank
// lines are ignored; a key may repeat (collected in file order).
class KvConfig {
 public:
  static KvConfig parse_text(const std::string& text);
  static KvConfig load_file(const std::string& path);

  bool has(const std::string& key) const;
  std::string get(const std::string& key) const;  // throws if absent
  std::string get_or(const std::string& key, const std::string& def) const;
  int64_t get_int(const std::string& key, int64_t def) const;
  double get_double(const std::string& key, double def) const;
  bool get_bool(const std::string& key, bool def) const;
  std::vector<std::string> get_all(const std::string& key) const;

  void set(const std::string& key, const std::string& value);

  // Every key=value pair, file order. Used to echo configs into reports.
  const std::vector<std::pair<std::string, std::string>>& entries() const { return entries_; }
  std::string to_text() const;

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
  std::multimap<std::string, size_t> by_key_;
};

std::vector<std::string> split(const std::string& s, char delim);
std::string trim(const std::string& s);

}  // namespace folio::util
