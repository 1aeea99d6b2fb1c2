#include "lsub/data.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace lsub {

std::string data_file(const std::string& name) {
  if (const char* dir = std::getenv("LS_DATA_DIR")) {
    std::ifstream in(std::string(dir) + "/" + name);
    if (in) {
      std::ostringstream ss;
      ss << in.rdbuf();
      return ss.str();
    }
  }
  const auto& files = detail::embedded_data_files();
  auto it = files.find(name);
  if (it == files.end()) throw domain_error("unknown data table: " + name);
  return std::string(it->second);
}

std::vector<std::vector<std::string>> data_rows(const std::string& name) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(data_file(name));
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cols;
    size_t start = 0;
    while (true) {
      size_t tab = line.find('\t', start);
      if (tab == std::string::npos) {
        cols.push_back(line.substr(start));
        break;
      }
      cols.push_back(line.substr(start, tab - start));
      start = tab + 1;
    }
    rows.push_back(std::move(cols));
  }
  return rows;
}

Nat data_sporadic_order(const std::string& name) {
  static const std::map<std::string, Nat> table = [] {
    std::map<std::string, Nat> t;
    for (const auto& row : data_rows("sporadic_orders.tsv")) {
      if (row.size() != 2) throw domain_error("sporadic_orders.tsv: bad row");
      t.emplace(row[0], Nat(row[1]));
    }
    return t;
  }();
  auto it = table.find(name);
  if (it == table.end()) throw domain_error("unknown sporadic group: " + name);
  return it->second;
}

}  // namespace lsub
