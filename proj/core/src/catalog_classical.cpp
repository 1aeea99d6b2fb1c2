#include <algorithm>
#include <sstream>

#include "lsub/catalog.hpp"
#include "lsub/data.hpp"
#include "lsub/structure.hpp"

// Geometric subgroup candidates of the finite simple classical groups, with
// exact orders. Order formulas follow the standard subgroup-structure
// references; each class records its parameters so the verification drivers
// can evaluate the published largeness conditions row by row.

namespace lsub {

namespace {

FactoredNat fnat(unsigned long v) { return FactoredNat::from_value(Nat(v)); }
FactoredNat fprime(unsigned long p, unsigned long e) {
  return FactoredNat::from_prime_power(Nat(p), e);
}

std::string label(std::string s) { return s; }

std::string subn(const std::string& base, unsigned n, unsigned long q) {
  std::ostringstream os;
  os << base << "_" << n << "(" << q << ")";
  return os.str();
}

// |Z(Omega_n^eps(q))| for n even (the scalar -1 when it has spinor norm 0).
unsigned omega_center(unsigned n, PrimePower q, FormSign sign) {
  if (n % 2 || q.p == 2) return 1;
  Nat t = pow_nat(q.q, n / 2);
  if (sign == FormSign::Plus) t -= 1; else t += 1;
  return mpz_divisible_ui_p(t.get_mpz_t(), 4) ? 2 : 1;
}

FormSign sign_of(int e) { return e > 0 ? FormSign::Plus : FormSign::Minus; }

struct Builder {
  std::vector<SubgroupDescriptor> out;

  SubgroupDescriptor& add(Collection c, std::string type_label, FactoredNat order,
                          std::map<std::string, long> params = {},
                          std::string provenance = "") {
    SubgroupDescriptor d;
    d.collection = c;
    d.type_label = std::move(type_label);
    d.order = std::move(order);
    d.params = std::move(params);
    d.provenance = std::move(provenance);
    out.push_back(std::move(d));
    return out.back();
  }
};

// ---------------------------------------------------------------------------
// Totally singular subspace counts
// ---------------------------------------------------------------------------

FactoredNat ts_count_linear(unsigned n, unsigned i, PrimePower q) {
  return gaussian_binomial(n, i, q);
}

FactoredNat ts_count_symplectic(unsigned n, unsigned i, PrimePower q) {
  // prod_{j=0}^{i-1} (q^{n-2j} - 1) / prod_{j=1}^{i} (q^j - 1)
  FactoredNat num, den;
  for (unsigned j = 0; j < i; ++j) num *= qpow_minus_1(q, n - 2 * j);
  for (unsigned j = 1; j <= i; ++j) den *= qpow_minus_1(q, j);
  return num.divide_exact(den);
}

FactoredNat ts_count_unitary(unsigned n, unsigned i, PrimePower q) {
  // prod_{j=0}^{i-1} (q^{n-2j} - (-1)^{n-2j})(q^{n-1-2j} - (-1)^{n-1-2j})
  //   / prod_{j=1}^{i} (q^{2j} - 1)
  FactoredNat num, den;
  for (unsigned j = 0; j < i; ++j) {
    unsigned a = n - 2 * j, b = n - 1 - 2 * j;
    num *= (a % 2 == 0) ? qpow_minus_1(q, a) : qpow_plus_1(q, a);
    num *= (b % 2 == 0) ? qpow_minus_1(q, b) : qpow_plus_1(q, b);
  }
  for (unsigned j = 1; j <= i; ++j) den *= qpow_minus_1(q, 2 * j);
  return num.divide_exact(den);
}

FactoredNat ts_count_orthogonal(unsigned n, unsigned i, PrimePower q, FormSign sign) {
  // Witt index w and companion exponent e: (q^{w-j}-1)(q^{w-j+e}+1) pattern.
  unsigned w;
  int e;
  if (sign == FormSign::Odd) { w = (n - 1) / 2; e = 0; }
  else if (sign == FormSign::Plus) { w = n / 2; e = -1; }
  else { w = n / 2 - 1; e = +1; }
  if (i > w) throw domain_error("ts_count_orthogonal: i exceeds Witt index");
  FactoredNat num, den;
  for (unsigned j = 0; j < i; ++j) {
    num *= qpow_minus_1(q, w - j);
    unsigned comp = (unsigned)((int)(w - j) + e);
    if (comp > 0) num *= qpow_plus_1(q, comp);
    else num *= fnat(2);  // q^0 + 1
  }
  for (unsigned j = 1; j <= i; ++j) den *= qpow_minus_1(q, j);
  return num.divide_exact(den);
}

}  // namespace

std::string collection_name(Collection c) {
  switch (c) {
    case Collection::C1: return "C1";
    case Collection::C2: return "C2";
    case Collection::C3: return "C3";
    case Collection::C4: return "C4";
    case Collection::C5: return "C5";
    case Collection::C6: return "C6";
    case Collection::C7: return "C7";
    case Collection::C8: return "C8";
    case Collection::S: return "S";
    case Collection::A: return "A";
    case Collection::Parabolic: return "P";
    case Collection::TableEntry: return "T";
  }
  return "?";
}

std::string SubgroupDescriptor::sort_key() const {
  std::ostringstream os;
  os << collection_name(collection) << "|" << type_label << "|";
  for (auto& [k, v] : params) os << k << "=" << v << ",";
  return os.str();
}

FactoredNat gaussian_binomial(unsigned n, unsigned i, PrimePower q) {
  if (i > n) throw domain_error("gaussian_binomial: i > n");
  FactoredNat num, den;
  for (unsigned j = 0; j < i; ++j) num *= qpow_minus_1(q, n - j);
  for (unsigned j = 1; j <= i; ++j) den *= qpow_minus_1(q, j);
  return num.divide_exact(den);
}

FactoredNat isotropic_subspace_count(const GroupId& g, unsigned i) {
  const auto& c = g.cls();
  switch (c.family) {
    case ClassicalFamily::Linear: return ts_count_linear(c.n, i, c.q);
    case ClassicalFamily::Unitary: return ts_count_unitary(c.n, i, c.q);
    case ClassicalFamily::Symplectic: return ts_count_symplectic(c.n, i, c.q);
    case ClassicalFamily::OrthogonalOdd:
      return ts_count_orthogonal(c.n, i, c.q, FormSign::Odd);
    case ClassicalFamily::OrthogonalPlus:
      return ts_count_orthogonal(c.n, i, c.q, FormSign::Plus);
    case ClassicalFamily::OrthogonalMinus:
      return ts_count_orthogonal(c.n, i, c.q, FormSign::Minus);
  }
  throw domain_error("isotropic_subspace_count: bad family");
}

ExactRat c5_largeness_f(ClassicalFamily family, unsigned n, PrimePower q0) {
  Nat q = q0.q;
  if (family == ClassicalFamily::Linear) {
    Nat qc = pow_nat(q0.q, 3);
    bool branch = p_part_exponent(q * q + q + 1, 3) >= 1 &&
                  p_part_exponent(q - 1, 3) >= p_part_exponent(n, 3) &&
                  p_part_exponent(n, 3) >= 1;
    Nat num = gcd(Nat(n), qc - 1);
    Nat den = pow_nat(gcd(Nat(n), q - 1), 3);
    ExactRat f(num, den);
    return branch ? f * ExactRat(27) : f;
  }
  if (family == ClassicalFamily::Unitary) {
    Nat qc = pow_nat(q0.q, 3);
    bool branch = p_part_exponent(q * q - q + 1, 3) >= 1 &&
                  p_part_exponent(q + 1, 3) >= p_part_exponent(n, 3) &&
                  p_part_exponent(n, 3) >= 1;
    Nat num = gcd(Nat(n), qc + 1);
    Nat den = pow_nat(gcd(Nat(n), q + 1), 3);
    ExactRat f(num, den);
    return branch ? f * ExactRat(27) : f;
  }
  throw domain_error("c5_largeness_f: linear/unitary only");
}

FactoredNat c5_subfield_order(ClassicalFamily family, unsigned n, PrimePower q0,
                              unsigned k) {
  PrimePower q = q0.extension(k);
  if (family == ClassicalFamily::Linear) {
    // |H| = (q0-1)^{-1} (q0-1, (q-1)/d) |SL_n(q0)|, d = (n, q-1)
    Nat d = gcd(Nat(n), Nat(q.q) - 1);
    Nat c = gcd(Nat(q0.q) - 1, (Nat(q.q) - 1) / d);
    return (order_sl(n, q0) * FactoredNat::from_value(c))
        .divide_exact(qpow_minus_1(q0, 1));
  }
  if (family == ClassicalFamily::Unitary) {
    Nat d = gcd(Nat(n), Nat(q.q) + 1);
    Nat c = gcd(Nat(q0.q) + 1, (Nat(q.q) + 1) / d);
    return (order_su(n, q0) * FactoredNat::from_value(c))
        .divide_exact(qpow_plus_1(q0, 1));
  }
  throw domain_error("c5_subfield_order: linear/unitary only");
}

namespace {

// ---------------------------------------------------------------------------
// Linear groups
// ---------------------------------------------------------------------------

void linear_geometric(Builder& b, unsigned n, PrimePower q) {
  GroupId g = GroupId::classical(ClassicalFamily::Linear, n, q);
  FactoredNat G = order_simple(g);
  Nat d = classical_d(ClassicalFamily::Linear, n, q);

  // C1: maximal parabolic P_i, 1 <= i <= n-1.
  for (unsigned i = 1; i <= n - 1; ++i) {
    b.add(Collection::C1, "P_" + std::to_string(i),
          G.divide_exact(gaussian_binomial(n, i, q)), {{"i", (long)i}});
  }

  // C2: GL_m(q) wr S_t, m = n/t.
  for (unsigned t = 2; t <= n; ++t) {
    if (n % t) continue;
    unsigned m = n / t;
    if (m == 1 && q.q < 5 && !(n == 2 && q.q == 4)) continue;
    FactoredNat h = qpow_minus_1(q, 1).pow(t - 1) * order_sl(m, q).pow(t) * factorial(t);
    auto& desc = b.add(Collection::C2, "GL_" + std::to_string(m) + " wr S_" + std::to_string(t),
                       h.divide_exact(FactoredNat::from_value(d)),
                       {{"t", (long)t}, {"m", (long)m}});
    if (n == 4 && q.q == 2 && t == 2) desc.maximal = false;  // inside the C8 / A8 geometry
    if (n == 2) {
      bool max = (q.p == 2) ? q.q >= 4 : q.q >= 13;
      desc.maximal = max;
    }
  }

  // C3: GL_{n/k}(q^k).k for prime k | n.
  for (unsigned k : {2u, 3u, 5u, 7u, 11u}) {
    if (k > n || n % k) continue;
    unsigned m = n / k;
    PrimePower qk = q.extension(k);
    FactoredNat h = (order_gl(m, qk) * fnat(k))
                        .divide_exact(qpow_minus_1(q, 1))
                        .divide_exact(FactoredNat::from_value(d));
    auto& desc = b.add(Collection::C3, "GL_" + std::to_string(m) + "(q^" + std::to_string(k) + ")",
                       h, {{"k", (long)k}, {"m", (long)m}});
    if (n == 2 && (q.q == 7 || q.q == 9)) desc.maximal = false;
  }

  // C4: GL_a x GL_{n/a} tensor, 2 <= a < n/a.
  for (unsigned a = 2; a * a < n; ++a) {
    if (n % a) continue;
    unsigned m = n / a;
    Nat c = gcd(gcd(Nat(q.q) - 1, Nat(a)), Nat(m));
    FactoredNat h = (order_sl(a, q) * order_sl(m, q) * FactoredNat::from_value(c))
                        .divide_exact(FactoredNat::from_value(d));
    b.add(Collection::C4, "GL_" + std::to_string(a) + " (x) GL_" + std::to_string(m), h,
          {{"a", (long)a}, {"m", (long)m}});
  }

  // C5: subfield GL_n(q0), q = q0^k, k prime.
  for (unsigned k : {2u, 3u, 5u, 7u}) {
    auto q0 = q.subfield(k);
    if (!q0) continue;
    FactoredNat h = c5_subfield_order(ClassicalFamily::Linear, n, *q0, k);
    b.add(Collection::C5, subn("GL", n, q0->q), h,
          {{"k", (long)k}, {"q0", (long)q0->q}});
  }

  // C6: extraspecial normalizers with exact orders (n = 2, 3, 4).
  if (n == 2 && q.a == 1 && q.p >= 5) {
    bool s4 = (q.p % 8 == 1 || q.p % 8 == 7);
    auto& desc = b.add(Collection::C6, "2^{1+2}_-.O_2^-(2)", fnat(s4 ? 24 : 12),
                       {{"r", 2}});
    if (!s4 && (q.p % 10 == 1 || q.p % 10 == 9)) desc.maximal = false;  // A4 < A5
  }
  if (n == 3 && q.q % 3 == 1) {
    // realized over the minimal field with q = p^{ord_3(p)}
    unsigned ord = (q.p % 3 == 1) ? 1 : 2;
    if (q.a == ord) {
      unsigned long h = (q.q % 9 == 1) ? 216 : 72;
      b.add(Collection::C6, "3^{1+2}.Q_8", fnat(h), {{"r", 3}});
    }
  }
  if (n == 4 && q.a == 1 && q.p % 4 == 1) {
    unsigned long top = (q.p % 8 == 1) ? 11520 : 5760;  // 2^4.Sp_4(2) vs 2^4.A_6
    b.add(Collection::C6, (q.p % 8 == 1) ? "2^4.Sp_4(2)" : "2^4.A_6", fnat(top),
          {{"r", 2}});
  }

  // C7: tensor-cube GL_a wr S_t with a >= 3 (n = a^t); only a=3, t=2 in range.
  for (unsigned a = 3; a * a <= n; ++a) {
    if (a * a != n) continue;
    // |H| = 2 |GL_a(q)|^2 (q-1, a) / ((q-1)^2 (q-1, a^2))
    FactoredNat h = (order_gl(a, q).pow(2) * fnat(2) *
                     FactoredNat::from_value(gcd(Nat(q.q) - 1, Nat(a))))
                        .divide_exact(qpow_minus_1(q, 1).pow(2))
                        .divide_exact(FactoredNat::from_value(gcd(Nat(q.q) - 1, Nat(a * a))));
    auto& desc = b.add(Collection::C7, "GL_" + std::to_string(a) + " wr-tensor S_2", h,
                       {{"a", (long)a}, {"t", 2}});
    desc.order_is_exact = false;
  }

  // C8: Sp_n(q) (n even), O_n^eps(q) (q odd), U_n(q0) (q = q0^2).
  if (n >= 4 && n % 2 == 0) {
    FactoredNat h = order_psp(n, q) * FactoredNat::from_value(gcd(Nat(n / 2), Nat(q.q) - 1));
    b.add(Collection::C8, subn("Sp", n, q.q), h, {{"t", 0}});
  }
  if (q.p != 2 && n >= 3) {
    if (n % 2) {
      b.add(Collection::C8, subn("O", n, q.q), order_so(n, q, FormSign::Odd), {{"eps", 0}});
    } else {
      b.add(Collection::C8, subn("O", n, q.q) + "^+", order_so(n, q, FormSign::Plus),
            {{"eps", 1}});
      b.add(Collection::C8, subn("O", n, q.q) + "^-", order_so(n, q, FormSign::Minus),
            {{"eps", -1}});
    }
  }
  if (n >= 3 && q.a % 2 == 0) {
    PrimePower q0 = *q.subfield(2);
    auto& desc = b.add(Collection::C8, subn("U", n, q0.q), order_psu(n, q0),
                       {{"q0", (long)q0.q}});
    desc.order_is_exact = false;  // PSU normalization; largeness is monotone in it
    desc.provenance = "unitary form stabilizer, PSU lower normalization";
  }
}

// ---------------------------------------------------------------------------
// Unitary groups
// ---------------------------------------------------------------------------

void unitary_geometric(Builder& b, unsigned n, PrimePower q) {
  GroupId g = GroupId::classical(ClassicalFamily::Unitary, n, q);
  FactoredNat G = order_simple(g);
  Nat d = classical_d(ClassicalFamily::Unitary, n, q);

  // C1 parabolic P_i (totally singular i-subspaces), i <= n/2.
  for (unsigned i = 1; i <= n / 2; ++i)
    b.add(Collection::C1, "P_" + std::to_string(i),
          G.divide_exact(ts_count_unitary(n, i, q)), {{"i", (long)i}});

  // C1 nondegenerate GU_m x GU_{n-m}, m < n/2.
  for (unsigned m = 1; 2 * m < n; ++m) {
    FactoredNat h = (order_gu(m, q) * order_gu(n - m, q))
                        .divide_exact(qpow_plus_1(q, 1))
                        .divide_exact(FactoredNat::from_value(d));
    b.add(Collection::C1, "GU_" + std::to_string(m) + " x GU_" + std::to_string(n - m), h,
          {{"m", (long)m}});
  }

  // C2: GU_m wr S_t and GL_{n/2}(q^2).
  for (unsigned t = 2; t <= n; ++t) {
    if (n % t) continue;
    unsigned m = n / t;
    FactoredNat h = (qpow_plus_1(q, 1).pow(t - 1) * order_su(m, q).pow(t) * factorial(t))
                        .divide_exact(FactoredNat::from_value(d));
    b.add(Collection::C2, "GU_" + std::to_string(m) + " wr S_" + std::to_string(t), h,
          {{"t", (long)t}, {"m", (long)m}});
  }
  if (n % 2 == 0) {
    PrimePower q2 = q.extension(2);
    FactoredNat h = (fnat(2) * qpow_minus_1(q, 1) * order_sl(n / 2, q2))
                        .divide_exact(FactoredNat::from_value(d));
    b.add(Collection::C2, "GL_" + std::to_string(n / 2) + "(q^2)", h,
          {{"t", 2}, {"m", (long)(n / 2)}, {"gl", 1}});
  }

  // C3: GU_{n/k}(q^k).k for odd prime k | n.
  for (unsigned k : {3u, 5u, 7u, 11u}) {
    if (k > n || n % k) continue;
    unsigned m = n / k;
    PrimePower qk = q.extension(k);
    FactoredNat h = (order_gu(m, qk) * fnat(k))
                        .divide_exact(qpow_plus_1(q, 1))
                        .divide_exact(FactoredNat::from_value(d));
    b.add(Collection::C3, "GU_" + std::to_string(m) + "(q^" + std::to_string(k) + ")", h,
          {{"k", (long)k}, {"m", (long)m}});
  }

  // C5: subfield GU_n(q0) for odd prime k, plus Sp_n(q) / O_n^eps(q).
  for (unsigned k : {3u, 5u, 7u}) {
    auto q0 = q.subfield(k);
    if (!q0) continue;
    FactoredNat h = c5_subfield_order(ClassicalFamily::Unitary, n, *q0, k);
    b.add(Collection::C5, subn("GU", n, q0->q), h, {{"k", (long)k}, {"q0", (long)q0->q}});
  }
  if (n % 2 == 0) {
    FactoredNat h = order_psp(n, q);
    auto& desc = b.add(Collection::C5, subn("Sp", n, q.q), h, {{"form", 1}});
    desc.provenance = "symplectic form subgroup, PSp normalization";
  }
  if (q.p != 2) {
    if (n % 2) {
      FactoredNat h = (qpow_plus_1(q, 1) * order_so(n, q, FormSign::Odd))
                          .divide_exact(FactoredNat::from_value(d));
      auto& desc = b.add(Collection::C5, subn("O", n, q.q), h, {{"form", 2}, {"eps", 0}});
      desc.order_is_exact = false;
    } else {
      for (int e : {+1, -1}) {
        FactoredNat h = (qpow_plus_1(q, 1) * order_so(n, q, sign_of(e)))
                            .divide_exact(FactoredNat::from_value(d));
        auto& desc = b.add(Collection::C5,
                           subn("O", n, q.q) + (e > 0 ? "^+" : "^-"), h,
                           {{"form", 2}, {"eps", e}});
        desc.order_is_exact = false;
      }
    }
  }

  // C6: extraspecial normalizers (n = 3, 4).
  if (n == 3 && q.a == 1 && q.p % 3 == 2) {
    unsigned long h = (q.p % 9 == 8) ? 216 : 72;
    auto& desc = b.add(Collection::C6, "3^{1+2}.Q_8", fnat(h), {{"r", 3}});
    if (q.p == 5) desc.maximal = false;  // 3^2.Q_8 < U_3(5) is non-maximal
  }
  if (n == 4 && q.a == 1 && q.p % 4 == 3) {
    unsigned long top = (q.p % 8 == 7) ? 11520 : 5760;
    b.add(Collection::C6, (q.p % 8 == 7) ? "2^4.Sp_4(2)" : "2^4.A_6", fnat(top), {{"r", 2}});
  }

  // C4 / C7 tensor types: never large; enumerate the in-range shapes.
  for (unsigned a = 2; a * a < n; ++a) {
    if (n % a) continue;
    unsigned m = n / a;
    Nat c = gcd(gcd(Nat(q.q) + 1, Nat(a)), Nat(m));
    FactoredNat h = (order_su(a, q) * order_su(m, q) * FactoredNat::from_value(c))
                        .divide_exact(FactoredNat::from_value(d));
    b.add(Collection::C4, "GU_" + std::to_string(a) + " (x) GU_" + std::to_string(m), h,
          {{"a", (long)a}, {"m", (long)m}});
  }
  for (unsigned a = 3; a * a <= n; ++a) {
    if (a * a != n) continue;
    FactoredNat h = (order_gu(a, q).pow(2) * fnat(2) *
                     FactoredNat::from_value(gcd(Nat(q.q) + 1, Nat(a))))
                        .divide_exact(qpow_plus_1(q, 1).pow(2))
                        .divide_exact(FactoredNat::from_value(gcd(Nat(q.q) + 1, Nat(a * a))));
    auto& desc = b.add(Collection::C7, "GU_" + std::to_string(a) + " wr-tensor S_2", h,
                       {{"a", (long)a}, {"t", 2}});
    desc.order_is_exact = false;
  }
}

// ---------------------------------------------------------------------------
// Symplectic groups
// ---------------------------------------------------------------------------

void symplectic_geometric(Builder& b, unsigned n, PrimePower q) {
  GroupId g = GroupId::classical(ClassicalFamily::Symplectic, n, q);
  FactoredNat G = order_simple(g);
  Nat d = classical_d(ClassicalFamily::Symplectic, n, q);

  for (unsigned i = 1; i <= n / 2; ++i)
    b.add(Collection::C1, "P_" + std::to_string(i),
          G.divide_exact(ts_count_symplectic(n, i, q)), {{"i", (long)i}});

  for (unsigned m = 2; 2 * m < n; m += 2) {
    FactoredNat h = (order_sp(m, q) * order_sp(n - m, q))
                        .divide_exact(FactoredNat::from_value(d));
    b.add(Collection::C1, "Sp_" + std::to_string(m) + " x Sp_" + std::to_string(n - m), h,
          {{"m", (long)m}});
  }

  // C2: Sp_m wr S_t (q > 2 when m = 2) and GL_{n/2}(q) (q odd).
  for (unsigned t = 2; t <= n / 2; ++t) {
    if (n % t) continue;
    unsigned m = n / t;
    if (m % 2) continue;
    if (m == 2 && q.q == 2) continue;  // Sp_2(2) wr S_t lies in an orthogonal group
    FactoredNat h = (order_sp(m, q).pow(t) * factorial(t))
                        .divide_exact(FactoredNat::from_value(d));
    b.add(Collection::C2, "Sp_" + std::to_string(m) + " wr S_" + std::to_string(t), h,
          {{"t", (long)t}, {"m", (long)m}});
  }
  if (q.p != 2) {
    FactoredNat h = (order_gl(n / 2, q) * fnat(2)).divide_exact(FactoredNat::from_value(d));
    b.add(Collection::C2, "GL_" + std::to_string(n / 2) + "(q)", h,
          {{"t", 2}, {"m", (long)(n / 2)}, {"gl", 1}});
  }

  // C3: Sp_{n/k}(q^k) (n/k even) and GU_{n/2}(q).
  for (unsigned k : {2u, 3u, 5u}) {
    if (n % k || (n / k) % 2) continue;
    unsigned m = n / k;
    PrimePower qk = q.extension(k);
    FactoredNat h = (order_sp(m, qk) * fnat(k)).divide_exact(FactoredNat::from_value(d));
    b.add(Collection::C3, "Sp_" + std::to_string(m) + "(q^" + std::to_string(k) + ")", h,
          {{"k", (long)k}, {"m", (long)m}});
  }
  {
    FactoredNat h = (order_gu(n / 2, q) * fnat(2)).divide_exact(FactoredNat::from_value(d));
    b.add(Collection::C3, "GU_" + std::to_string(n / 2) + "(q)", h,
          {{"k", 2}, {"m", (long)(n / 2)}, {"gu", 1}});
  }

  // C5: Sp_n(q0), q = q0^k.
  for (unsigned k : {2u, 3u, 5u}) {
    auto q0 = q.subfield(k);
    if (!q0) continue;
    b.add(Collection::C5, subn("Sp", n, q0->q), order_psp(n, *q0),
          {{"k", (long)k}, {"q0", (long)q0->q}});
  }

  // C6: 2-group normalizers for n = 2^m, q = p odd.
  if ((n == 4 || n == 8) && q.a == 1 && q.p != 2) {
    bool full = (q.p % 8 == 1 || q.p % 8 == 7);
    unsigned long top = (n == 4) ? (full ? 120ul : 60ul) : (full ? 51840ul : 25920ul);
    std::string lbl = (n == 4) ? (full ? "2^4.O_4^-(2)" : "2^4.Omega_4^-(2)")
                               : (full ? "2^6.O_6^-(2)" : "2^6.Omega_6^-(2)");
    b.add(Collection::C6, lbl, fprime(2, (n == 4) ? 4 : 6) * fnat(top), {{"r", 2}});
  }

  // C4: Sp_a (x) O_b tensor types (q odd), never large.
  if (q.p != 2) {
    for (unsigned a = 2; a < n; a += 2) {
      if (n % a) continue;
      unsigned m = n / a;
      if (m < 3 || m == a) continue;  // odd-dimensional orthogonal factor needed
      if (m % 2 == 0) continue;
      FactoredNat h = (order_sp(a, q) * order_so(m, q, FormSign::Odd))
                          .divide_exact(FactoredNat::from_value(d));
      auto& desc = b.add(Collection::C4,
                         "Sp_" + std::to_string(a) + " (x) O_" + std::to_string(m), h,
                         {{"a", (long)a}, {"m", (long)m}});
      desc.order_is_exact = false;
    }
  }

  // C7: Sp_2 wr-tensor S_t (q odd), n = 2^t; never large.
  if (q.p != 2) {
    for (unsigned t = 3; t <= 3; ++t) {
      if (n != (1u << t)) continue;
      FactoredNat h = order_sp(2, q).pow(t) * factorial(t);
      auto& desc = b.add(Collection::C7, "Sp_2 wr-tensor S_" + std::to_string(t), h,
                         {{"a", 2}, {"t", (long)t}});
      desc.order_is_exact = false;
    }
  }

  // C8 (q even): O_n^+(q) and O_n^-(q).
  if (q.p == 2) {
    b.add(Collection::C8, subn("O", n, q.q) + "^+", order_so(n, q, FormSign::Plus),
          {{"eps", 1}});
    b.add(Collection::C8, subn("O", n, q.q) + "^-", order_so(n, q, FormSign::Minus),
          {{"eps", -1}});
  }
}

// ---------------------------------------------------------------------------
// Orthogonal groups
// ---------------------------------------------------------------------------

void orthogonal_geometric(Builder& b, unsigned n, PrimePower q, FormSign sign) {
  ClassicalFamily fam = sign == FormSign::Odd ? ClassicalFamily::OrthogonalOdd
                        : sign == FormSign::Plus ? ClassicalFamily::OrthogonalPlus
                                                 : ClassicalFamily::OrthogonalMinus;
  GroupId g = GroupId::classical(fam, n, q);
  FactoredNat G = order_simple(g);
  unsigned z = omega_center(n, q, sign);
  int eps = sign == FormSign::Plus ? 1 : sign == FormSign::Minus ? -1 : 0;

  unsigned witt = sign == FormSign::Odd ? (n - 1) / 2
                  : sign == FormSign::Plus ? n / 2 : n / 2 - 1;

  // C1 parabolics.
  for (unsigned i = 1; i <= witt; ++i) {
    if (sign == FormSign::Plus && i == witt - 1) continue;  // P_{m-1,m} is a novelty
    FactoredNat count = ts_count_orthogonal(n, i, q, sign);
    if (sign == FormSign::Plus && i == witt) {
      // two classes of maximal totally singular subspaces
      b.add(Collection::C1, "P_" + std::to_string(i) + "a",
            (G * fnat(2)).divide_exact(count), {{"i", (long)i}, {"cls", 1}});
      b.add(Collection::C1, "P_" + std::to_string(i) + "b",
            (G * fnat(2)).divide_exact(count), {{"i", (long)i}, {"cls", 2}});
      continue;
    }
    b.add(Collection::C1, "P_" + std::to_string(i), G.divide_exact(count),
          {{"i", (long)i}});
  }

  // C1 nondegenerate-subspace stabilizers.
  if (q.p == 2) {
    // nonsingular point stabilizer Sp_{n-2}(q)
    b.add(Collection::C1, subn("Sp", n - 2, q.q), order_sp(n - 2, q), {{"m", 1}});
    for (unsigned a = 2; a < n - a; a += 2) {
      unsigned m = n - a;
      for (int e1 : {+1, -1}) {
        int e2 = eps * e1;
        FactoredNat h = (order_go(a, q, sign_of(e1)) * order_go(m, q, sign_of(e2)))
                            .divide_exact(fnat(2));
        b.add(Collection::C1,
              "O_" + std::to_string(a) + (e1 > 0 ? "^+" : "^-") + " x O_" +
                  std::to_string(m) + (e2 > 0 ? "^+" : "^-"),
              h, {{"m", (long)a}, {"eps1", e1}});
      }
    }
  } else {
    for (unsigned a = 1; a < n - a; ++a) {
      unsigned m = n - a;
      auto add_pair = [&](FormSign s1, FormSign s2, std::string lbl, long tag) {
        FactoredNat h = (order_go(a, q, s1) * order_go(m, q, s2))
                            .divide_exact(fnat(4 * z));
        b.add(Collection::C1, std::move(lbl), h, {{"m", (long)a}, {"eps1", tag}});
      };
      if (a % 2 == 1 && m % 2 == 1) {
        // both odd; ambient sign is determined by the discriminants
        add_pair(FormSign::Odd, FormSign::Odd,
                 "O_" + std::to_string(a) + " x O_" + std::to_string(m), 0);
      } else if (a % 2 == 1) {
        int e2 = eps ? eps : 0;
        // odd + even: even part carries the ambient type when n odd we need
        // both signs for the even factor
        for (int e : {+1, -1}) {
          if (n % 2 == 0 && e != eps) continue;  // wrong ambient type
          add_pair(FormSign::Odd, sign_of(e),
                   "O_" + std::to_string(a) + " x O_" + std::to_string(m) +
                       (e > 0 ? "^+" : "^-"),
                   e);
        }
        (void)e2;
      } else if (m % 2 == 1) {
        for (int e : {+1, -1}) {
          if (n % 2 == 0 && e != eps) continue;
          add_pair(sign_of(e), FormSign::Odd,
                   "O_" + std::to_string(a) + (e > 0 ? "^+" : "^-") + " x O_" +
                       std::to_string(m),
                   e);
        }
      } else {
        for (int e1 : {+1, -1}) {
          int e2 = eps * e1;
          add_pair(sign_of(e1), sign_of(e2),
                   "O_" + std::to_string(a) + (e1 > 0 ? "^+" : "^-") + " x O_" +
                       std::to_string(m) + (e2 > 0 ? "^+" : "^-"),
                   e1);
        }
      }
    }
  }

  // C2: O_m^{eps'} wr S_t.
  for (unsigned t = 2; t <= n; ++t) {
    if (n % t) continue;
    unsigned m = n / t;
    if (m == 1) {
      // orthonormal-frame stabilizer: q = p odd prime
      if (q.p == 2 || q.a != 1) continue;
      // ambient type of the orthonormal form
      if (n % 2 == 0) {
        int e = (q.p % 4 == 1 || n % 4 == 0) ? +1 : -1;
        if (e != eps) continue;
      }
      FactoredNat h = fprime(2, n - 2) * factorial(n);
      auto& desc = b.add(Collection::C2, "O_1 wr S_" + std::to_string(n),
                         h.divide_exact(fnat(z)), {{"t", (long)t}, {"m", 1}, {"epsp", 0}});
      if (n == 8 && eps == 1 && q.q == 3) desc.maximal = false;  // Kleidman
      continue;
    }
    if (m % 2 == 1) {
      if (q.p == 2) continue;
      // ambient sign for t even: orthonormal-style rule; t odd: odd ambient
      if (t % 2 == 0 && n % 2 == 0) {
        int e = (q.p % 4 == 1 || n % 4 == 0) ? +1 : -1;
        if (e != eps) continue;
      }
      FactoredNat h = (order_go(m, q, FormSign::Odd).pow(t) * factorial(t))
                          .divide_exact(fnat(4 * z));
      b.add(Collection::C2, "O_" + std::to_string(m) + " wr S_" + std::to_string(t), h,
            {{"t", (long)t}, {"m", (long)m}, {"epsp", 0}});
      continue;
    }
    for (int e1 : {+1, -1}) {
      int amb = (e1 == -1 && t % 2 == 1) ? -1 : +1;  // ambient type = (eps')^t
      if (amb != eps) continue;
      FactoredNat h = order_go(m, q, sign_of(e1)).pow(t) * factorial(t);
      h = (q.p == 2) ? h.divide_exact(fnat(2)) : h.divide_exact(fnat(4 * z));
      b.add(Collection::C2,
            "O_" + std::to_string(m) + (e1 > 0 ? "^+" : "^-") + " wr S_" +
                std::to_string(t),
            h, {{"t", (long)t}, {"m", (long)m}, {"epsp", e1}});
    }
  }

  // C2: GL_{n/2}(q) pair stabilizer (eps = +, n/2 even).
  if (eps == 1 && (n / 2) % 2 == 0) {
    FactoredNat h = (q.p == 2) ? order_gl(n / 2, q) * fnat(2)
                               : (order_gl(n / 2, q) * fnat(2)).divide_exact(fnat(2 * z));
    auto& desc = b.add(Collection::C2, "GL_" + std::to_string(n / 2) + "(q)", h,
                       {{"t", 2}, {"m", (long)(n / 2)}, {"gl", 1}});
    desc.order_is_exact = false;
  }

  // C3: O_{n/2}^{eps'}(q^2) and GU_{n/2}(q).
  {
    unsigned m = n / 2;
    PrimePower q2 = q.extension(2);
    if (m % 2 == 0) {
      // eps' matches the ambient sign
      if (eps != 0) {
        FactoredNat so2 = order_so(m, q2, sign_of(eps));
        FactoredNat h = (q.p == 2) ? so2 * fnat(2)
                                   : (so2 * fnat(2)).divide_exact(fnat(2 * z));
        auto& desc = b.add(Collection::C3,
                           "O_" + std::to_string(m) + (eps > 0 ? "^+" : "^-") + "(q^2)", h,
                           {{"k", 2}, {"m", (long)m}, {"epsp", eps}});
        desc.order_is_exact = false;
      }
    } else if (q.p != 2 && eps == -1) {
      FactoredNat so2 = order_so(m, q2, FormSign::Odd);
      FactoredNat h = (so2 * fnat(2)).divide_exact(fnat(2 * z));
      auto& desc = b.add(Collection::C3, "O_" + std::to_string(m) + "(q^2)", h,
                         {{"k", 2}, {"m", (long)m}, {"epsp", 0}});
      desc.order_is_exact = false;
    }
    // GU_{n/2}(q): ambient sign (-1)^{n/2}
    int amb = (m % 2 == 0) ? +1 : -1;
    if (n % 2 == 0 && amb == eps) {
      FactoredNat h = (q.p == 2)
                          ? order_gu(m, q) * fnat(2)
                          : (order_gu(m, q) * fnat(2)).divide_exact(fnat(2 * z));
      auto& desc = b.add(Collection::C3, "GU_" + std::to_string(m) + "(q)", h,
                         {{"k", 2}, {"m", (long)m}, {"gu", 1}});
      desc.order_is_exact = false;
    }
  }

  // C4: Sp_a (x) Sp_{n/a} (q odd, eps = +), a < n/a both even.
  if (q.p != 2 && eps == 1) {
    for (unsigned a = 2; a * a < n; a += 2) {
      if (n % a) continue;
      unsigned m = n / a;
      if (m % 2) continue;
      FactoredNat h = (order_sp(a, q) * order_sp(m, q)).divide_exact(fnat(2 * z));
      auto& desc = b.add(Collection::C4,
                         "Sp_" + std::to_string(a) + " (x) Sp_" + std::to_string(m), h,
                         {{"a", (long)a}, {"m", (long)m}});
      desc.order_is_exact = false;
    }
  }

  // C5: subfield O_n^{eps'}(q0).
  for (unsigned k : {2u, 3u, 5u}) {
    auto q0 = q.subfield(k);
    if (!q0) continue;
    if (k == 2) {
      // Only a plus-type or odd-dimensional form extends a subfield form.
      if (sign == FormSign::Minus) continue;
      if (sign == FormSign::Plus) {
        for (int e1 : {+1, -1}) {
          // For n = 8 the minus-type subfield subgroup is carried by the
          // irreducible almost simple table instead.
          if (e1 == -1 && n == 8) continue;
          FactoredNat h = order_psomega(n, *q0, sign_of(e1));
          auto& desc = b.add(Collection::C5,
                             subn("O", n, q0->q) + (e1 > 0 ? "^+" : "^-"), h,
                             {{"k", 2}, {"q0", (long)q0->q}, {"epsp", e1}});
          desc.order_is_exact = false;
        }
      } else {
        auto& desc = b.add(Collection::C5, subn("O", n, q0->q),
                           order_psomega(n, *q0, FormSign::Odd),
                           {{"k", 2}, {"q0", (long)q0->q}, {"epsp", 0}});
        desc.order_is_exact = false;
      }
    } else {
      FactoredNat h = order_psomega(n, *q0, sign);
      auto& desc = b.add(Collection::C5, subn("O", n, q0->q), h,
                         {{"k", (long)k}, {"q0", (long)q0->q}, {"epsp", eps}});
      desc.order_is_exact = false;
    }
  }

  // C6: n = 8, eps = +, q = p odd.
  if (n == 8 && eps == 1 && q.a == 1 && q.p != 2) {
    bool full = (q.p % 8 == 1 || q.p % 8 == 7);
    unsigned long top = full ? 40320ul : 20160ul;  // O_6^+(2) vs Omega_6^+(2)
    auto& desc = b.add(Collection::C6, full ? "2^6.O_6^+(2)" : "2^6.Omega_6^+(2)",
                       fprime(2, 6) * fnat(top), {{"r", 2}});
    if (q.p == 3) desc.maximal = false;  // Kleidman
  }

  // C7: Sp_2(q) wr-tensor S_3 inside O_8^+(q), q even.
  if (n == 8 && eps == 1 && q.p == 2) {
    FactoredNat h = order_sp(2, q).pow(3) * factorial(3);
    auto& desc = b.add(Collection::C7, "Sp_2 wr-tensor S_3", h, {{"a", 2}, {"t", 3}});
    desc.maximal = false;  // Kleidman
  }
}

}  // namespace

std::vector<SubgroupDescriptor> classical_geometric(const GroupId& g) {
  if (!g.is_classical()) throw domain_error("classical_geometric: classical group expected");
  Builder b;
  const auto& c = g.cls();
  switch (c.family) {
    case ClassicalFamily::Linear: linear_geometric(b, c.n, c.q); break;
    case ClassicalFamily::Unitary: unitary_geometric(b, c.n, c.q); break;
    case ClassicalFamily::Symplectic: symplectic_geometric(b, c.n, c.q); break;
    case ClassicalFamily::OrthogonalOdd:
      orthogonal_geometric(b, c.n, c.q, FormSign::Odd);
      break;
    case ClassicalFamily::OrthogonalPlus:
      orthogonal_geometric(b, c.n, c.q, FormSign::Plus);
      break;
    case ClassicalFamily::OrthogonalMinus:
      orthogonal_geometric(b, c.n, c.q, FormSign::Minus);
      break;
  }
  std::sort(b.out.begin(), b.out.end(),
            [](const SubgroupDescriptor& x, const SubgroupDescriptor& y) {
              return x.sort_key() < y.sort_key();
            });
  return std::move(b.out);
}

namespace {

std::string substitute_field(std::string label, const std::string& var,
                             unsigned long value) {
  std::string needle = "(" + var + ")";
  auto pos = label.find(needle);
  while (pos != std::string::npos) {
    label.replace(pos, needle.size(), "(" + std::to_string(value) + ")");
    pos = label.find(needle);
  }
  return label;
}

}  // namespace

std::vector<SubgroupDescriptor> s_collection(const GroupId& g) {
  if (!g.is_classical()) throw domain_error("s_collection: classical group expected");
  const auto& c = g.cls();
  std::vector<SubgroupDescriptor> out;
  for (const auto& row : data_rows("s_collection.tsv")) {
    // family n q_cond label in_A provenance
    if (row.size() < 6) throw domain_error("s_collection.tsv: bad row");
    if (row[0] != family_name(c.family)) continue;
    if (std::stoul(row[1]) != c.n) continue;
    const std::string& qc = row[2];
    unsigned long qv = c.q.q;
    bool match = false;
    std::optional<unsigned long> q0;
    if (qc == "any") {
      match = true;
    } else if (qc == "podd") {
      match = c.q.p != 2;
    } else if (qc == "p2") {
      match = c.q.p == 2;
    } else if (qc == "sq") {
      auto sub = c.q.subfield(2);
      if (sub) { match = true; q0 = sub->q; }
    } else if (qc == "cubepodd") {
      auto sub = c.q.subfield(3);
      if (sub && c.q.p != 2) { match = true; q0 = sub->q; }
    } else if (qc == "szcond") {
      match = c.q.p == 2 && c.q.a > 1 && c.q.a % 2 == 1;
    } else if (qc.rfind("in:", 0) == 0) {
      std::istringstream ss(qc.substr(3));
      std::string tok;
      while (std::getline(ss, tok, ',')) match |= (std::stoul(tok) == qv);
    } else {
      match = std::stoul(qc) == qv;
    }
    if (!match) continue;
    std::string label = substitute_field(row[3], "q", qv);
    if (q0) label = substitute_field(label, "q0", *q0);
    SubgroupDescriptor d;
    d.collection = (row[4] == "1") ? Collection::A : Collection::S;
    d.type_label = label;
    d.provenance = row[5];
    d.order = eval_order(label);
    out.push_back(std::move(d));
  }
  std::sort(out.begin(), out.end(),
            [](const SubgroupDescriptor& x, const SubgroupDescriptor& y) {
              return x.sort_key() < y.sort_key();
            });
  return out;
}

bool liebeck_bound_holds(const GroupId& g, const SubgroupDescriptor& desc) {
  if (desc.collection == Collection::A)
    throw domain_error("liebeck_bound_holds: not applicable to the A-collection");
  const auto& c = g.cls();
  unsigned u = (c.family == ClassicalFamily::Unitary) ? 2 : 1;
  FactoredNat bound = fprime(c.q.p, (unsigned long)c.q.a * 3 * u * c.n);
  return desc.order < bound;
}

}  // namespace lsub
