#include <algorithm>

#include "lsub/catalog.hpp"

// Candidates H < GL_n(q) with SL_n(q) not inside H. Orders are exact; the
// maximality flags encode the published side conditions for the wreath and
// subfield rows.

namespace lsub {

namespace {

FactoredNat fnat(unsigned long v) { return FactoredNat::from_value(Nat(v)); }

}  // namespace

std::vector<SubgroupDescriptor> gln_catalog(unsigned n, PrimePower q) {
  if (n < 2 || q.q < 2) throw domain_error("gln_catalog: n, q >= 2");
  std::vector<SubgroupDescriptor> out;
  auto add = [&](Collection c, std::string lbl, FactoredNat order,
                 std::map<std::string, long> params, bool maximal,
                 std::string prov = "") {
    SubgroupDescriptor d;
    d.collection = c;
    d.type_label = std::move(lbl);
    d.order = std::move(order);
    d.params = std::move(params);
    d.maximal = maximal;
    d.provenance = std::move(prov);
    out.push_back(std::move(d));
  };

  FactoredNat G = order_gl(n, q);
  Nat qm1 = Nat(q.q) - 1;

  // C1: parabolic P_i.
  for (unsigned i = 1; i < n; ++i)
    add(Collection::C1, "P_" + std::to_string(i),
        G.divide_exact(gaussian_binomial(n, i, q)), {{"i", (long)i}}, true);

  // C2: GL_m wr S_t.
  for (unsigned t = 2; t <= n; ++t) {
    if (n % t) continue;
    unsigned m = n / t;
    if (m == 1 && q.q == 2) continue;  // trivial torus
    bool maximal = true;
    if (t == 2 && ((n == 2 && (q.q == 3 || q.q == 5)) || (n == 4 && q.q == 2)))
      maximal = false;
    if (t == 3 && (q.q == 2 || (n == 3 && q.q == 4))) maximal = false;
    if (t >= 4 && m == 1 && !(n == 4 && (q.q == 5 || q.q == 7))) maximal = false;
    add(Collection::C2, "GL_" + std::to_string(m) + " wr S_" + std::to_string(t),
        order_gl(m, q).pow(t) * factorial(t), {{"t", (long)t}, {"m", (long)m}}, maximal);
  }

  // C3: GL_{n/k}(q^k).k.
  for (unsigned k : {2u, 3u, 5u, 7u, 11u}) {
    if (k > n || n % k) continue;
    add(Collection::C3, "GL_" + std::to_string(n / k) + "(q^" + std::to_string(k) + ")",
        order_gl(n / k, q.extension(k)) * fnat(k), {{"k", (long)k}}, true);
  }

  // C4 / C7 tensor candidates (never large).
  for (unsigned a = 2; a * a < n; ++a) {
    if (n % a) continue;
    add(Collection::C4, "GL_" + std::to_string(a) + " (x) GL_" + std::to_string(n / a),
        (order_gl(a, q) * order_gl(n / a, q)).divide_exact(FactoredNat::from_value(qm1)),
        {{"a", (long)a}}, true);
  }
  if (n >= 9) {
    for (unsigned a = 3; a * a <= n; ++a) {
      if (a * a != n) continue;
      add(Collection::C7, "GL_" + std::to_string(a) + " wr-tensor S_2",
          (order_gl(a, q).pow(2) * fnat(2)).divide_exact(FactoredNat::from_value(qm1)),
          {{"a", (long)a}}, true);
    }
  }

  // C5: subfield GL_n(q0) . (q-1)/(q0-1).
  for (unsigned k : {2u, 3u, 5u, 7u}) {
    auto q0 = q.subfield(k);
    if (!q0) continue;
    Nat index_part = qm1 / (Nat(q0->q) - 1);
    bool maximal = gcd(Nat(n), index_part) == 1;
    add(Collection::C5, "GL_" + std::to_string(n) + "(" + std::to_string(q0->q) + ")",
        order_gl(n, *q0) * FactoredNat::from_value(index_part),
        {{"k", (long)k}, {"q0", (long)q0->q}}, maximal);
  }

  // C6: extraspecial normalizers, n = 2 or 3.
  if (n == 2 && q.a == 1 && q.p % 2 == 1 && (q.p % 8 == 3 || q.p % 8 == 5)) {
    add(Collection::C6, "2^{1+2}_-.O_2^-(2)", fnat(24) * FactoredNat::from_value(qm1),
        {{"r", 2}}, true);
  }
  if (n == 3 && q.q % 3 == 1 && q.q % 9 != 1) {
    unsigned ord = (q.p % 3 == 1) ? 1 : 2;
    if (q.a == ord)
      add(Collection::C6, "3^{1+2}.Sp_2(3)", fnat(216) * FactoredNat::from_value(qm1),
          {{"r", 3}}, true);
  }

  // C8: forms.
  if (n >= 4 && n % 2 == 0) {
    bool maximal = gcd(Nat(n / 2), qm1) == 1;
    add(Collection::C8, "Sp_" + std::to_string(n) + "(q)",
        order_sp(n, q) * FactoredNat::from_value(qm1), {{"f", 1}}, maximal);
  }
  if (q.p != 2 && n >= 3) {
    bool maximal = gcd(Nat(n), qm1) == gcd(Nat(n), Nat(2));
    if (n % 2) {
      add(Collection::C8, "O_" + std::to_string(n) + "(q)",
          (order_go(n, q, FormSign::Odd) * FactoredNat::from_value(qm1))
              .divide_exact(fnat(2)),
          {{"f", 2}, {"eps", 0}}, maximal);
    } else {
      for (int e : {+1, -1}) {
        add(Collection::C8,
            "O_" + std::to_string(n) + (e > 0 ? "^+" : "^-") + "(q)",
            (order_go(n, q, e > 0 ? FormSign::Plus : FormSign::Minus) *
             FactoredNat::from_value(qm1))
                .divide_exact(fnat(2)),
            {{"f", 2}, {"eps", e}}, maximal);
      }
    }
  }
  if (n >= 3 && q.a % 2 == 0) {
    PrimePower q0 = *q.subfield(2);
    bool maximal = gcd(Nat(n), Nat(q0.q) - 1) == 1;
    add(Collection::C8, "GU_" + std::to_string(n) + "(" + std::to_string(q0.q) + ")",
        (order_gu(n, q0) * FactoredNat::from_value(qm1))
            .divide_exact(FactoredNat::from_value(Nat(q0.q) + 1)),
        {{"f", 3}, {"q0", (long)q0.q}}, maximal);
  }

  // S: the sporadic-style rows.
  if (n == 5 && q.q == 3)
    add(Collection::S, "2xM_11", fnat(15840), {}, true, "cross-characteristic");
  if (n == 4 && q.q == 2)
    add(Collection::S, "A_7", fnat(2520), {}, true, "alternating embedding");
  if (n == 3 && q.q == 11)
    add(Collection::S, "10xL_2(7)", fnat(1680), {}, true, "cross-characteristic");

  std::sort(out.begin(), out.end(),
            [](const SubgroupDescriptor& x, const SubgroupDescriptor& y) {
              return x.sort_key() < y.sort_key();
            });
  return out;
}

}  // namespace lsub
