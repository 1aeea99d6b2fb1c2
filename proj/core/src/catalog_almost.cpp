#include <algorithm>

#include "lsub/catalog.hpp"
#include "lsub/data.hpp"

namespace lsub {

namespace {

void add_linear_rows(std::vector<AlmostSimpleRow>& out, unsigned n, PrimePower q) {
  // Type GL_m(q) x GL_{n-m}(q) novelties, 1 <= m < n/2:
  // |H cap G0| = d^{-1} |GL_m(q)| |SL_{n-m}(q)|.
  GroupId g = GroupId::classical(ClassicalFamily::Linear, n, q);
  FactoredNat G = order_simple(g);
  Nat d = classical_d(ClassicalFamily::Linear, n, q);
  for (unsigned m = 1; 2 * m < n; ++m) {
    AlmostSimpleRow r;
    r.socle = g.name();
    r.type_label = "GL_" + std::to_string(m) + " x GL_" + std::to_string(n - m);
    r.condition = "1 <= m < n/2";
    r.subgroup_order = (order_gl(m, q) * order_sl(n - m, q))
                           .divide_exact(FactoredNat::from_value(d));
    r.ambient_order = G;
    r.expect_bound = true;
    r.provenance = "pair stabilizer novelty under the graph automorphism";
    out.push_back(std::move(r));
  }
}

void add_o8_rows(std::vector<AlmostSimpleRow>& out, PrimePower q) {
  GroupId g = GroupId::classical(ClassicalFamily::OrthogonalPlus, 8, q);
  FactoredNat G = order_simple(g);
  {
    AlmostSimpleRow r;
    r.socle = g.name();
    r.type_label = "G_2(" + std::to_string(q.q) + ")";
    r.condition = "triality";
    r.subgroup_order = order_exceptional_universal(ExceptionalType::G2, q);
    r.ambient_order = G;
    r.expect_bound = true;
    r.provenance = "fixed points of the triality automorphism";
    out.push_back(std::move(r));
  }
}

void add_e6_rows(std::vector<AlmostSimpleRow>& out, PrimePower q) {
  GroupId g = GroupId::exceptional(ExceptionalType::E6, q);
  AlmostSimpleRow r;
  r.socle = g.name();
  r.type_label = "(q-1)D_5(q)";
  r.condition = "graph novelty";
  r.subgroup_order = qpow_minus_1(q, 1) * order_psomega(10, q, FormSign::Plus);
  r.ambient_order = order_simple(g);
  r.expect_bound = true;
  r.provenance = "Levi-torus normalizer, lower normalization";
  out.push_back(std::move(r));
}

}  // namespace

std::vector<AlmostSimpleRow> almost_simple_table(const std::optional<GroupId>& socle) {
  std::vector<AlmostSimpleRow> out;

  // Constant rows from the embedded table.
  for (const auto& row : data_rows("almost_simple_table.tsv")) {
    if (row.size() < 7) throw domain_error("almost_simple_table.tsv: bad row");
    AlmostSimpleRow r;
    r.socle = row[1];
    r.type_label = row[2];
    r.subgroup_order = FactoredNat::from_value(Nat(row[3]));
    r.ambient_order = FactoredNat::from_value(Nat(row[4]));
    r.expect_bound = row[5] == "1";
    r.condition = row[0];
    r.provenance = row[6];
    out.push_back(std::move(r));
  }

  // Parameterized families, instantiated for the requested socle.
  if (socle) {
    const GroupId& g0 = *socle;
    if (g0.is_classical()) {
      const auto& c = g0.cls();
      if (c.family == ClassicalFamily::Linear && c.n >= 3)
        add_linear_rows(out, c.n, c.q);
      if (c.family == ClassicalFamily::OrthogonalPlus && c.n == 8)
        add_o8_rows(out, c.q);
    }
    if (g0.is_exceptional() && g0.exc().type == ExceptionalType::E6)
      add_e6_rows(out, g0.exc().q);
    std::string name = g0.name();
    std::erase_if(out, [&](const AlmostSimpleRow& r) { return r.socle != name; });
  }
  return out;
}

}  // namespace lsub
