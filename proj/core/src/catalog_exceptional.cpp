#include <algorithm>
#include <sstream>

#include "lsub/catalog.hpp"
#include "lsub/data.hpp"

namespace lsub {

namespace {

FactoredNat fnat(unsigned long v) { return FactoredNat::from_value(Nat(v)); }

// Universal order of an untwisted simple component of the given type/rank:
// q^N prod(q^{d_i} - 1).
FactoredNat component_universal(char type, unsigned rank, PrimePower q) {
  unsigned long N = 0;
  std::vector<unsigned> degs;
  switch (type) {
    case 'A':
      N = (unsigned long)rank * (rank + 1) / 2;
      for (unsigned i = 2; i <= rank + 1; ++i) degs.push_back(i);
      break;
    case 'B':
    case 'C':
      N = (unsigned long)rank * rank;
      for (unsigned i = 1; i <= rank; ++i) degs.push_back(2 * i);
      break;
    case 'D':
      N = (unsigned long)rank * (rank - 1);
      for (unsigned i = 1; i + 1 <= rank; ++i) degs.push_back(2 * i);
      degs.push_back(rank);
      break;
    case 'E':
      if (rank == 6) { N = 36; degs = {2, 5, 6, 8, 9, 12}; }
      else if (rank == 7) { N = 63; degs = {2, 6, 8, 10, 12, 14, 18}; }
      else throw domain_error("component_universal: bad E rank");
      break;
    default:
      throw domain_error("component_universal: bad type");
  }
  FactoredNat r = FactoredNat::from_prime_power(q.p, (unsigned long)q.a * N);
  for (unsigned dgr : degs) r *= qpow_minus_1(q, dgr);
  return r;
}

struct Levi {
  std::vector<std::pair<char, unsigned>> comps;
  unsigned long pos_roots() const {
    unsigned long n = 0;
    for (auto [t, r] : comps) {
      switch (t) {
        case 'A': n += (unsigned long)r * (r + 1) / 2; break;
        case 'B': case 'C': n += (unsigned long)r * r; break;
        case 'D': n += (unsigned long)r * (r - 1); break;
        case 'E': n += (r == 6) ? 36 : 63; break;
      }
    }
    return n;
  }
};

// Semisimple part of the Levi of the maximal parabolic P_i (Bourbaki node i).
Levi levi_of(ExceptionalType t, unsigned i) {
  using C = std::pair<char, unsigned>;
  switch (t) {
    case ExceptionalType::G2:
      return {{C{'A', 1}}};
    case ExceptionalType::F4:
      switch (i) {
        case 1: return {{C{'C', 3}}};
        case 2: return {{C{'A', 1}, C{'A', 2}}};
        case 3: return {{C{'A', 2}, C{'A', 1}}};
        case 4: return {{C{'B', 3}}};
      }
      break;
    case ExceptionalType::E6:
      switch (i) {
        case 1: case 6: return {{C{'D', 5}}};
        case 2: return {{C{'A', 5}}};
        case 3: case 5: return {{C{'A', 1}, C{'A', 4}}};
        case 4: return {{C{'A', 2}, C{'A', 1}, C{'A', 2}}};
      }
      break;
    case ExceptionalType::E7:
      switch (i) {
        case 1: return {{C{'D', 6}}};
        case 2: return {{C{'A', 6}}};
        case 3: return {{C{'A', 1}, C{'A', 5}}};
        case 4: return {{C{'A', 2}, C{'A', 1}, C{'A', 3}}};
        case 5: return {{C{'A', 4}, C{'A', 2}}};
        case 6: return {{C{'D', 5}, C{'A', 1}}};
        case 7: return {{C{'E', 6}}};
      }
      break;
    case ExceptionalType::E8:
      switch (i) {
        case 1: return {{C{'D', 7}}};
        case 2: return {{C{'A', 7}}};
        case 3: return {{C{'A', 1}, C{'A', 6}}};
        case 4: return {{C{'A', 2}, C{'A', 1}, C{'A', 4}}};
        case 5: return {{C{'A', 4}, C{'A', 3}}};
        case 6: return {{C{'D', 5}, C{'A', 2}}};
        case 7: return {{C{'E', 6}, C{'A', 1}}};
        case 8: return {{C{'E', 7}}};
      }
      break;
    default:
      break;
  }
  throw domain_error("levi_of: bad node");
}

unsigned exceptional_rank(ExceptionalType t) {
  switch (t) {
    case ExceptionalType::E8: return 8;
    case ExceptionalType::E7: return 7;
    case ExceptionalType::E6: return 6;
    case ExceptionalType::F4: return 4;
    case ExceptionalType::G2: return 2;
    default: return 0;  // twisted types handled separately
  }
}

Nat d_of(ExceptionalType t, PrimePower q) {
  switch (t) {
    case ExceptionalType::E7: return gcd(Nat(2), Nat(q.q) - 1);
    case ExceptionalType::E6: return gcd(Nat(3), Nat(q.q) - 1);
    case ExceptionalType::TwE6: return gcd(Nat(3), Nat(q.q) + 1);
    default: return 1;
  }
}

void add_parabolic(std::vector<SubgroupDescriptor>& out, std::string lbl,
                   FactoredNat order, unsigned node) {
  SubgroupDescriptor d;
  d.collection = Collection::Parabolic;
  d.type_label = std::move(lbl);
  d.params = {{"i", (long)node}};
  d.order = std::move(order);
  d.provenance = "maximal parabolic";
  out.push_back(std::move(d));
}

void parabolics(std::vector<SubgroupDescriptor>& out, ExceptionalType t, PrimePower q) {
  unsigned long N = 0;
  switch (t) {
    case ExceptionalType::E8: N = 120; break;
    case ExceptionalType::E7: N = 63; break;
    case ExceptionalType::E6: N = 36; break;
    case ExceptionalType::F4: N = 24; break;
    case ExceptionalType::G2: N = 6; break;
    default: break;
  }
  FactoredNat d = FactoredNat::from_value(d_of(t, q));
  if (unsigned rank = exceptional_rank(t)) {
    for (unsigned i = 1; i <= rank; ++i) {
      Levi L = levi_of(t, i);
      FactoredNat lev;
      for (auto [ct, cr] : L.comps) lev *= component_universal(ct, cr, q);
      FactoredNat order = FactoredNat::from_prime_power(q.p, q.a * (N - L.pos_roots())) *
                          qpow_minus_1(q, 1) * lev;
      add_parabolic(out, "P_" + std::to_string(i), order.divide_exact(d), i);
    }
    return;
  }
  switch (t) {
    case ExceptionalType::TwB2:
      add_parabolic(out, "P_1",
                    FactoredNat::from_prime_power(q.p, q.a * 2) * qpow_minus_1(q, 1), 1);
      return;
    case ExceptionalType::TwG2:
      add_parabolic(out, "P_1",
                    FactoredNat::from_prime_power(q.p, q.a * 3) * qpow_minus_1(q, 1), 1);
      return;
    case ExceptionalType::TwF4:
      add_parabolic(out, "P_1",
                    FactoredNat::from_prime_power(q.p, q.a * 10) *
                        order_exceptional_universal(ExceptionalType::TwB2, q) *
                        qpow_minus_1(q, 1),
                    1);
      add_parabolic(out, "P_2",
                    FactoredNat::from_prime_power(q.p, q.a * 11) * order_gl(2, q), 2);
      return;
    case ExceptionalType::TriD4:
      add_parabolic(out, "P_1",
                    FactoredNat::from_prime_power(q.p, q.a * 9) *
                        order_sl(2, q.extension(3)) * qpow_minus_1(q, 1),
                    1);
      add_parabolic(out, "P_2",
                    FactoredNat::from_prime_power(q.p, q.a * 11) * order_sl(2, q) *
                        qpow_minus_1(q, 3),
                    2);
      return;
    case ExceptionalType::TwE6: {
      FactoredNat d = FactoredNat::from_value(d_of(t, q));
      PrimePower q2 = q.extension(2);
      // orbit {2}: 2A5-Levi
      FactoredNat p2 = FactoredNat::from_prime_power(q.p, q.a * 21) * order_su(6, q) *
                       qpow_plus_1(q, 1);
      add_parabolic(out, "P_2",
                    p2.divide_exact(FactoredNat::from_value(gcd(Nat(6), Nat(q.q) + 1)))
                        .divide_exact(d),
                    2);
      // orbit {1,6}: 2D4-Levi
      FactoredNat p16 = FactoredNat::from_prime_power(q.p, q.a * 24) *
                        order_so(8, q, FormSign::Minus) * qpow_minus_1(q, 2);
      add_parabolic(out, "P_16", p16.divide_exact(d), 1);
      // orbit {4}: 2(A2 x A2) x A1 Levi
      FactoredNat p4 = FactoredNat::from_prime_power(q.p, q.a * 29) * order_sl(3, q2) *
                       order_sl(2, q) * qpow_minus_1(q, 1);
      add_parabolic(out, "P_4", p4.divide_exact(d), 4);
      // orbit {3,5}: 2(A1 x A1) x A2 Levi
      FactoredNat p35 = FactoredNat::from_prime_power(q.p, q.a * 31) * order_sl(2, q2) *
                        order_sl(3, q) * qpow_minus_1(q, 1);
      add_parabolic(out, "P_35", p35.divide_exact(d), 3);
      return;
    }
    default:
      throw domain_error("parabolics: unhandled type");
  }
}

// --- Table rows --------------------------------------------------------------

struct RecipeCtx {
  ExceptionalType type;
  PrimePower q;
  int eps;  // +1 for untwisted E6, -1 for 2E6; 0 otherwise
};

FactoredNat e6_like_simple(int eps, PrimePower q) {
  return order_simple(GroupId::exceptional(
      eps > 0 ? ExceptionalType::E6 : ExceptionalType::TwE6, q));
}

FactoredNat recipe_order(const std::string& recipe, const RecipeCtx& c) {
  const PrimePower q = c.q;
  Nat qn(q.q);
  FactoredNat two = FactoredNat::from_prime_power(2, 1);
  Nat d2 = gcd(Nat(2), qn - 1);
  auto sub = [&](unsigned k) { return *q.subfield(k); };

  if (recipe == "a1e7")
    return order_sl(2, q) * order_simple(GroupId::exceptional(ExceptionalType::E7, q));
  if (recipe == "d8") return order_so(16, q, FormSign::Plus);
  if (recipe == "a2e6p") return two * order_sl(3, q) * e6_like_simple(+1, q);
  if (recipe == "a2e6m") return two * order_su(3, q) * e6_like_simple(-1, q);
  if (recipe == "sub2") return order_exceptional_subfield(c.type, sub(2), 2, c.eps);
  if (recipe == "sub3") return order_exceptional_subfield(c.type, sub(3), 3, c.eps);
  if (recipe == "twsub2")
    return order_exceptional_subfield(ExceptionalType::TwE6, sub(2), 2, -1);
  if (recipe == "exo_e8_2") return FactoredNat::from_prime_power(2, 15) * order_sl(5, PrimePower(2, 1));
  if (recipe == "exo_e8_5") return FactoredNat::from_prime_power(5, 3) * order_sl(3, PrimePower(5, 1));
  if (recipe == "qm1e6")
    return (qpow_minus_1(q, 1) * e6_like_simple(+1, q) *
            FactoredNat::from_value(gcd(Nat(3), qn - 1)) * two)
        .divide_exact(FactoredNat::from_value(d2));
  if (recipe == "qp1twe6")
    return (qpow_plus_1(q, 1) * e6_like_simple(-1, q) *
            FactoredNat::from_value(gcd(Nat(3), qn + 1)) * two)
        .divide_exact(FactoredNat::from_value(d2));
  if (recipe == "a1d6")
    return order_sl(2, q) * order_so(12, q, FormSign::Plus);
  if (recipe == "a7p")
    return (order_sl(8, q) * two * FactoredNat::from_value(d2))
        .divide_exact(FactoredNat::from_value(gcd(Nat(8), qn - 1)));
  if (recipe == "a7m")
    return (order_su(8, q) * two * FactoredNat::from_value(d2))
        .divide_exact(FactoredNat::from_value(gcd(Nat(8), qn + 1)));
  if (recipe == "a1f4")
    return (order_sl(2, q) *
            order_simple(GroupId::exceptional(ExceptionalType::F4, q)))
        .divide_exact(FactoredNat::from_value(d2));
  if (recipe == "a1a5") {
    FactoredNat sl6 = (c.eps > 0) ? order_sl(6, q) : order_su(6, q);
    Nat shared = d2 * gcd(Nat(3), (c.eps > 0) ? qn - 1 : qn + 1);
    return (order_sl(2, q) * sl6).divide_exact(FactoredNat::from_value(shared));
  }
  if (recipe == "f4fix")
    return order_simple(GroupId::exceptional(ExceptionalType::F4, q));
  if (recipe == "c4fix") return order_psp(8, q);
  if (recipe == "qp1d5m")
    return qpow_plus_1(q, 1) * order_so(10, q, FormSign::Minus);
  if (recipe == "t2d4") {
    FactoredNat tor = (c.eps > 0) ? qpow_minus_1(q, 1).pow(2) : qpow_plus_1(q, 1).pow(2);
    Nat d = (c.eps > 0) ? gcd(Nat(3), qn - 1) : gcd(Nat(3), qn + 1);
    return (tor * order_so(8, q, FormSign::Plus) * fnat(6))
        .divide_exact(FactoredNat::from_value(d));
  }
  if (recipe == "t3d4") {
    Nat tor = qn * qn + ((c.eps > 0) ? qn : -qn) + 1;
    Nat d = (c.eps > 0) ? gcd(Nat(3), qn - 1) : gcd(Nat(3), qn + 1);
    return (FactoredNat::from_value(tor) *
            order_simple(GroupId::exceptional(ExceptionalType::TriD4, q)) * fnat(3))
        .divide_exact(FactoredNat::from_value(d));
  }
  if (recipe == "fi22") return FactoredNat::from_value(data_sporadic_order("Fi22"));
  if (recipe == "b4") {
    if (q.p == 2) return order_sp(8, q);
    return order_psomega(9, q, FormSign::Odd) * two;
  }
  if (recipe == "d4s3") {
    FactoredNat spin = order_psomega(8, q, FormSign::Plus);
    if (q.p != 2) spin *= fnat(4);
    return spin * fnat(6);
  }
  if (recipe == "tri3d4")
    return order_simple(GroupId::exceptional(ExceptionalType::TriD4, q)) * fnat(3);
  if (recipe == "a1c3")
    return (order_sl(2, q) * order_sp(6, q)).divide_exact(two);
  if (recipe == "c4p2") return order_sp(8, q);
  if (recipe == "tw2f4") {
    if (q.q == 2) return order_exceptional_universal(ExceptionalType::TwF4, q);
    return order_simple(GroupId::exceptional(ExceptionalType::TwF4, q));
  }
  if (recipe == "const634023936") return fnat(634023936);
  if (recipe == "const12130560") return fnat(12130560);
  if (recipe == "exo_f4_3") return FactoredNat::from_prime_power(3, 3) * order_sl(3, PrimePower(3, 1));
  if (recipe == "exo_e6_3") return FactoredNat::from_prime_power(3, 6) * order_sl(3, PrimePower(3, 1));
  if (recipe == "a2p") return two * order_sl(3, q);
  if (recipe == "a2m") return two * order_su(3, q);
  if (recipe == "a1a1")
    return (two * order_sl(2, q).pow(2)).divide_exact(FactoredNat::from_value(d2));
  if (recipe == "tw2g2") {
    PrimePower qq = q;  // ambient G2(q), q = 3^(2m+1)
    return order_exceptional_universal(ExceptionalType::TwG2, qq);
  }
  if (recipe == "constJ1") return FactoredNat::from_value(data_sporadic_order("J1"));
  if (recipe == "const12096") return fnat(12096);
  if (recipe == "const1092") return fnat(1092);
  if (recipe == "constJ2") return FactoredNat::from_value(data_sporadic_order("J2"));
  if (recipe == "exo_g2_2") return fnat(1344);
  if (recipe == "sp4_2") return order_sp(4, q) * two;
  if (recipe == "szsz")
    return two * order_exceptional_universal(ExceptionalType::TwB2, q).pow(2);
  if (recipe == "tfsub" || recipe == "tgsub" || recipe == "tbsub") {
    // smallest odd prime index subfield
    for (unsigned k : {3u, 5u, 7u, 11u, 13u}) {
      if (q.a % k == 0) {
        ExceptionalType t = recipe == "tfsub" ? ExceptionalType::TwF4
                          : recipe == "tgsub" ? ExceptionalType::TwG2
                                              : ExceptionalType::TwB2;
        return order_exceptional_subfield(t, sub(k), k);
      }
    }
    throw domain_error("no odd-index subfield");
  }
  if (recipe == "ree_a1") return order_sl(2, q);  // 2 x L_2(q), q odd: |SL_2(q)|
  if (recipe == "const52") return fnat(52);
  if (recipe == "sz_torus1") return fnat(2 * (q.q - 1));
  if (recipe == "sz_torus2" || recipe == "sz_torus3") {
    unsigned long r = 1ul << ((q.a + 1) / 2);
    unsigned long tor = (recipe == "sz_torus2") ? q.q + r + 1 : q.q - r + 1;
    return fnat(4 * tor);
  }
  if (recipe == "d4a1a1")
    return (two * order_sl(2, q.extension(3)) * order_sl(2, q))
        .divide_exact(FactoredNat::from_value(d2));
  if (recipe == "d4a2p")
    return FactoredNat::from_value(qn * qn + qn + 1) * order_sl(3, q) * two;
  if (recipe == "d4a2m")
    return FactoredNat::from_value(qn * qn - qn + 1) * order_su(3, q) * two;
  if (recipe == "g2fix") return order_exceptional_universal(ExceptionalType::G2, q);
  if (recipe == "const1176") return fnat(1176);
  throw domain_error("unknown recipe: " + recipe);
}

bool condition_holds(const std::string& cond, const RecipeCtx& c) {
  const PrimePower& q = c.q;
  if (cond == "always") return true;
  if (cond == "podd" || cond == "qodd") return q.p != 2;
  if (cond == "p2") return q.p == 2;
  if (cond == "sq") return q.a % 2 == 0;
  if (cond == "cube") return q.a % 3 == 0;
  if (cond == "qne2") return q.q != 2;
  if (cond == "p2aodd") return q.p == 2 && q.a % 2 == 1;
  if (cond == "ree_cond") return q.p == 3 && q.a % 2 == 1;
  if (cond == "qp_ne5") return q.a == 1 && q.p != 2 && q.p != 5;
  if (cond == "qp_ne3") return q.a == 1 && q.p >= 5;
  if (cond == "qp_ge5") return q.a == 1 && q.p >= 5;
  if (cond == "qp_odd") return q.a == 1 && q.p != 2;
  if (cond == "oddsub") {
    for (unsigned k : {3u, 5u, 7u, 11u, 13u})
      if (q.a % k == 0) return true;
    return false;
  }
  if (cond.rfind("q=", 0) == 0) return q.q == std::stoul(cond.substr(2));
  if (cond.rfind("qin", 0) == 0) {
    std::istringstream ss(cond.substr(3));
    std::string tok;
    while (std::getline(ss, tok, ','))
      if (std::stoul(tok) == q.q) return true;
    return false;
  }
  throw domain_error("unknown condition: " + cond);
}

}  // namespace

std::vector<SubgroupDescriptor> exceptional_table(const GroupId& g) {
  if (!g.is_exceptional())
    throw domain_error("exceptional_table: exceptional group expected");
  const auto& e = g.exc();
  std::vector<SubgroupDescriptor> out;
  parabolics(out, e.type, e.q);

  RecipeCtx ctx{e.type, e.q,
                e.type == ExceptionalType::E6 ? +1
                : e.type == ExceptionalType::TwE6 ? -1 : 0};
  std::string ambient = exceptional_name(e.type);
  for (const auto& row : data_rows("exceptional_table.tsv")) {
    if (row.size() < 7) throw domain_error("exceptional_table.tsv: bad row");
    if (row[0] != ambient) continue;
    if (!condition_holds(row[2], ctx)) continue;
    SubgroupDescriptor d;
    d.collection = Collection::TableEntry;
    d.type_label = row[1];
    d.order = recipe_order(row[3], ctx);
    d.order_is_exact = row[4] == "1";
    d.table_asserts_large = row[5] == "1";
    d.provenance = row[6];
    out.push_back(std::move(d));
  }
  std::sort(out.begin(), out.end(),
            [](const SubgroupDescriptor& x, const SubgroupDescriptor& y) {
              return x.sort_key() < y.sort_key();
            });
  return out;
}

}  // namespace lsub
