#include "folio/util/kvconfig.hpp"

#include <fstream>
#include <sstream>

#include "folio/util/errors.hpp"

namespace folio::util {

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char delim) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, delim)) out.push_back(cur);
  return out;
}

KvConfig KvConfig::parse_text(const std::string& text) {
  KvConfig cfg;
  std::istringstream is(text);
  std::string line;
  size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    size_t eq = t.find('=');
    if (eq == std::string::npos)
      throw DataError("config line " + std::to_string(lineno) + ": expected key=value");
    cfg.set(trim(t.substr(0, eq)), trim(t.substr(eq + 1)));
  }
  return cfg;
}

KvConfig KvConfig::load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open config file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_text(ss.str());
}

void KvConfig::set(const std::string& key, const std::string& value) {
  by_key_.emplace(key, entries_.size());
  entries_.emplace_back(key, value);
}

bool KvConfig::has(const std::string& key) const { return by_key_.count(key) > 0; }

std::string KvConfig::get(const std::string& key) const {
  auto it = by_key_.find(key);
  if (it == by_key_.end()) throw DataError("missing config key: " + key);
  return entries_[it->second].second;
}

std::string KvConfig::get_or(const std::string& key, const std::string& def) const {
  auto it = by_key_.find(key);
  return it == by_key_.end() ? def : entries_[it->second].second;
}

int64_t KvConfig::get_int(const std::string& key, int64_t def) const {
  if (!has(key)) return def;
  try {
    return std::stoll(get(key));
  } catch (const std::exception&) {
    throw DataError("config key " + key + " is not an integer");
  }
}

double KvConfig::get_double(const std::string& key, double def) const {
  if (!has(key)) return def;
  try {
    return std::stod(get(key));
  } catch (const std::exception&) {
    throw DataError("config key " + key + " is not a number");
  }
}

bool KvConfig::get_bool(const std::string& key, bool def) const {
  if (!has(key)) return def;
  std::string v = get(key);
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  throw DataError("config key " + key + " is not a boolean");
}

std::vector<std::string> KvConfig::get_all(const std::string& key) const {
  std::vector<std::string> out;
  auto [lo, hi] = by_key_.equal_range(key);
  std::vector<size_t> idx;
  for (auto it = lo; it != hi; ++it) idx.push_back(it->second);
  std::sort(idx.begin(), idx.end());
  for (size_t i : idx) out.push_back(entries_[i].second);
  return out;
}

std::string KvConfig::to_text() const {
  std::ostringstream os;
  for (const auto& [k, v] : entries_) os << k << "=" << v << "\n";
  return os.str();
}

}  // namespace folio::util
