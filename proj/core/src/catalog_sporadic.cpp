#include <algorithm>

#include "lsub/catalog.hpp"
#include "lsub/data.hpp"
#include "lsub/structure.hpp"

namespace lsub {

std::vector<SubgroupDescriptor> sporadic_maximals(const GroupId& g) {
  if (!g.is_sporadic()) throw domain_error("sporadic_maximals: sporadic group expected");
  const std::string& name = g.spo().name;
  std::vector<SubgroupDescriptor> out;
  for (const auto& row : data_rows("sporadic_maximals.tsv")) {
    if (row.size() < 5) throw domain_error("sporadic_maximals.tsv: bad row");
    if (row[0] != name) continue;
    SubgroupDescriptor d;
    d.collection = Collection::TableEntry;
    d.type_label = row[1];
    d.params = {{"classes", std::stol(row[2])}};
    d.maximal = row[3] == "1";
    d.provisional = row[4] == "1";
    if (d.provisional) {
      // Undetermined almost simple candidate: socle order is a lower bound,
      // |Aut(socle)| an upper bound; both sides are far from large.
      d.order = eval_order(row[1]);
      d.order_is_exact = false;
      d.provenance = "undetermined candidate, socle order recorded";
    } else {
      d.order = eval_order(row[1]);
    }
    out.push_back(std::move(d));
  }
  if (out.empty()) throw domain_error("no maximal subgroup data for " + name);
  std::sort(out.begin(), out.end(),
            [](const SubgroupDescriptor& x, const SubgroupDescriptor& y) {
              return x.sort_key() < y.sort_key();
            });
  return out;
}

}  // namespace lsub
