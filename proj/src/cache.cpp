#include "galled_census/cache.hpp"

#include <fstream>
#include <json.hpp>

namespace galled {

namespace {

using nlohmann::json;

json table_to_json(const std::vector<std::vector<Integer>>& rows) {
  json out = json::object();
  for (std::size_t n = 2; n < rows.size(); ++n) {
    for (std::size_t k = 0; k < rows[n].size(); ++k) {
      out[std::to_string(n) + "," + std::to_string(k)] = rows[n][k].get_str();
    }
  }
  return out;
}

std::vector<std::vector<Integer>> table_from_json(const json& obj) {
  int n_max = 1;
  for (const auto& [key, value] : obj.items()) {
    auto comma = key.find(',');
    if (comma == std::string::npos) throw std::runtime_error("cache: malformed key " + key);
    n_max = std::max(n_max, std::stoi(key.substr(0, comma)));
  }
  std::vector<std::vector<Integer>> rows(n_max + 1);
  for (int n = 2; n <= n_max; ++n) rows[n].resize(n);
  for (const auto& [key, value] : obj.items()) {
    auto comma = key.find(',');
    int n = std::stoi(key.substr(0, comma));
    int k = std::stoi(key.substr(comma + 1));
    if (n < 2 || k < 0 || k > n - 1) throw std::runtime_error("cache: key out of range " + key);
    Integer v;
    if (v.set_str(value.get<std::string>(), 10) != 0) {
      throw std::runtime_error("cache: bad integer at " + key);
    }
    rows[n][k] = std::move(v);
  }
  // every (n,k) cell must be present: absence would silently read as zero
  std::size_t expected = 0;
  for (int n = 2; n <= n_max; ++n) expected += n;
  if (obj.size() != expected) throw std::runtime_error("cache: table has missing cells");
  return rows;
}

}  // namespace galled::(anonymous)

CacheFile load_cache(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cache: cannot open " + path);
  json doc = json::parse(in);
  if (!doc.contains("format_version") || doc["format_version"].get<int>() != kCacheFormatVersion) {
    throw std::runtime_error("cache: unsupported format version in " + path);
  }
  CacheFile cache;
  if (doc.contains("provenance")) cache.provenance = doc["provenance"].get<std::string>();
  if (doc.contains("n_table") && !doc["n_table"].empty()) {
    cache.n_table = NTable::from_rows(table_from_json(doc["n_table"]));
  }
  if (doc.contains("b_table") && !doc["b_table"].empty()) {
    cache.b_table = BTable::from_rows(table_from_json(doc["b_table"]));
  }
  return cache;
}

void save_cache(const std::string& path, const CacheFile& cache) {
  json doc;
  doc["format_version"] = kCacheFormatVersion;
  doc["provenance"] = cache.provenance;
  doc["n_table"] = cache.n_table ? table_to_json(cache.n_table->rows()) : json::object();
  doc["b_table"] = cache.b_table ? table_to_json(cache.b_table->rows()) : json::object();
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cache: cannot write " + path);
  out << doc.dump(1) << "\n";
}

}  // namespace galled
