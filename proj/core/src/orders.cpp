#include "lsub/orders.hpp"

#include <array>
#include <set>

#include "lsub/data.hpp"

namespace lsub {

namespace {

const std::set<std::string>& sporadic_names() {
  static const std::set<std::string> names = {
      "M11", "M12", "M22", "M23", "M24", "J1",  "J2",  "J3",  "J4",
      "Co1", "Co2", "Co3", "Fi22", "Fi23", "Fi24'", "HS", "McL", "He",
      "Ru",  "Suz", "O'N", "HN",  "Ly",  "Th",  "B",   "M",   "2F4(2)'"};
  return names;
}

bool odd_power_of(const PrimePower& q, unsigned long p) {
  return q.p == p && q.a % 2 == 1;
}

}  // namespace

std::string family_name(ClassicalFamily f) {
  switch (f) {
    case ClassicalFamily::Linear: return "L";
    case ClassicalFamily::Unitary: return "U";
    case ClassicalFamily::Symplectic: return "S";
    case ClassicalFamily::OrthogonalPlus: return "O+";
    case ClassicalFamily::OrthogonalMinus: return "O-";
    case ClassicalFamily::OrthogonalOdd: return "O";
  }
  return "?";
}

std::string exceptional_name(ExceptionalType t) {
  switch (t) {
    case ExceptionalType::E8: return "E8";
    case ExceptionalType::E7: return "E7";
    case ExceptionalType::E6: return "E6";
    case ExceptionalType::TwE6: return "2E6";
    case ExceptionalType::F4: return "F4";
    case ExceptionalType::G2: return "G2";
    case ExceptionalType::TwF4: return "2F4";
    case ExceptionalType::TwG2: return "2G2";
    case ExceptionalType::TwB2: return "2B2";
    case ExceptionalType::TriD4: return "3D4";
  }
  return "?";
}

GroupId GroupId::alternating(unsigned n) {
  if (n < 5) throw domain_error("Alt(n): need n >= 5");
  return GroupId(Alt{n});
}

GroupId GroupId::classical(ClassicalFamily f, unsigned n, PrimePower q) {
  switch (f) {
    case ClassicalFamily::Linear:
      if (n < 2) throw domain_error("L_n(q): need n >= 2");
      if (n == 2 && q.q < 4) throw domain_error("L_2(2), L_2(3) are not simple");
      break;
    case ClassicalFamily::Unitary:
      if (n < 3) throw domain_error("U_n(q): need n >= 3");
      if (n == 3 && q.q == 2) throw domain_error("U_3(2) is not simple");
      break;
    case ClassicalFamily::Symplectic:
      if (n < 4 || n % 2) throw domain_error("Sp_n(q): need n >= 4 even");
      if (n == 4 && q.q == 2)
        throw domain_error("Sp_4(2) is not simple; use Alt(6) or L_2(9)");
      break;
    case ClassicalFamily::OrthogonalOdd:
      if (n < 7 || n % 2 == 0) throw domain_error("O_n(q): need n >= 7 odd");
      if (q.p == 2) throw domain_error("O_n(q), n odd: need q odd");
      break;
    case ClassicalFamily::OrthogonalPlus:
    case ClassicalFamily::OrthogonalMinus:
      if (n < 8 || n % 2) throw domain_error("O_n^eps(q): need n >= 8 even");
      break;
  }
  return GroupId(Classical{f, n, q});
}

GroupId GroupId::classical(ClassicalFamily f, unsigned n, unsigned long q) {
  return classical(f, n, PrimePower::from_q(q));
}

GroupId GroupId::exceptional(ExceptionalType t, PrimePower q) {
  switch (t) {
    case ExceptionalType::TwB2:
      if (!odd_power_of(q, 2) || q.q < 8)
        throw domain_error("2B2(q): need q = 2^(2m+1) > 2");
      break;
    case ExceptionalType::TwG2:
      if (!odd_power_of(q, 3) || q.q < 27)
        throw domain_error("2G2(q): need q = 3^(2m+1) > 3");
      break;
    case ExceptionalType::TwF4:
      if (!odd_power_of(q, 2) || q.q < 8)
        throw domain_error("2F4(q): need q = 2^(2m+1) > 2; 2F4(2)' is sporadic");
      break;
    case ExceptionalType::G2:
      if (q.q < 3) throw domain_error("G2(2) is not simple; G2(2)' = U_3(3)");
      break;
    default:
      break;
  }
  return GroupId(Exceptional{t, q});
}

GroupId GroupId::exceptional(ExceptionalType t, unsigned long q) {
  return exceptional(t, PrimePower::from_q(q));
}

GroupId GroupId::sporadic(const std::string& name) {
  if (!sporadic_names().count(name))
    throw domain_error("unknown sporadic group: " + name);
  return GroupId(Sporadic{name});
}

std::string GroupId::name() const {
  if (is_alternating()) return "A" + std::to_string(alt().n);
  if (is_sporadic()) return spo().name;
  if (is_exceptional())
    return exceptional_name(exc().type) + "(" + std::to_string(exc().q.q) + ")";
  const auto& c = cls();
  std::string f = family_name(c.family);
  std::string base;
  switch (c.family) {
    case ClassicalFamily::OrthogonalPlus: base = "O" + std::to_string(c.n) + "+"; break;
    case ClassicalFamily::OrthogonalMinus: base = "O" + std::to_string(c.n) + "-"; break;
    case ClassicalFamily::OrthogonalOdd: base = "O" + std::to_string(c.n); break;
    default: base = f + std::to_string(c.n); break;
  }
  return base + "(" + std::to_string(c.q.q) + ")";
}

FactoredNat qpow_minus_1(PrimePower q, unsigned i) {
  return FactoredNat::from_value(pow_nat(q.q, i) - 1);
}

FactoredNat qpow_plus_1(PrimePower q, unsigned i) {
  return FactoredNat::from_value(pow_nat(q.q, i) + 1);
}

FactoredNat order_gl(unsigned a, PrimePower q) {
  if (a < 1) throw domain_error("order_gl: a >= 1");
  // q^{a(a-1)/2} * prod_{i=1..a} (q^i - 1)
  FactoredNat r = FactoredNat::from_prime_power(q.p, (unsigned long)q.a * a * (a - 1) / 2);
  for (unsigned i = 1; i <= a; ++i) r *= qpow_minus_1(q, i);
  return r;
}

FactoredNat order_gu(unsigned a, PrimePower q) {
  if (a < 1) throw domain_error("order_gu: a >= 1");
  // q^{a(a-1)/2} * prod_{i=1..a} (q^i - (-1)^i)
  FactoredNat r = FactoredNat::from_prime_power(q.p, (unsigned long)q.a * a * (a - 1) / 2);
  for (unsigned i = 1; i <= a; ++i)
    r *= (i % 2 == 0) ? qpow_minus_1(q, i) : qpow_plus_1(q, i);
  return r;
}

FactoredNat order_sp(unsigned a, PrimePower q) {
  if (a < 2 || a % 2) throw domain_error("order_sp: a >= 2 even");
  unsigned m = a / 2;
  // q^{m^2} * prod_{i=1..m} (q^{2i} - 1)
  FactoredNat r = FactoredNat::from_prime_power(q.p, (unsigned long)q.a * m * m);
  for (unsigned i = 1; i <= m; ++i) r *= qpow_minus_1(q, 2 * i);
  return r;
}

FactoredNat order_so(unsigned a, PrimePower q, FormSign sign) {
  FactoredNat alpha =
      q.p == 2 ? FactoredNat::from_prime_power(2, 1) : FactoredNat::one();
  if (sign == FormSign::Odd) {
    if (a % 2 == 0) throw domain_error("order_so: odd type needs a odd");
    if (a < 1) throw domain_error("order_so: a >= 1");
    unsigned m = (a - 1) / 2;
    // alpha * q^{m^2} * prod_{i=1..m}(q^{2i} - 1), alpha = (2, q)
    FactoredNat r = FactoredNat::from_prime_power(q.p, (unsigned long)q.a * m * m);
    for (unsigned i = 1; i <= m; ++i) r *= qpow_minus_1(q, 2 * i);
    return alpha * r;
  }
  if (a % 2 || a < 2) throw domain_error("order_so: plus/minus type needs a >= 2 even");
  unsigned m = a / 2;
  // alpha * q^{m(m-1)} * (q^m -+ 1) * prod_{i=1..m-1}(q^{2i} - 1)
  FactoredNat r = FactoredNat::from_prime_power(q.p, (unsigned long)q.a * m * (m - 1));
  r *= (sign == FormSign::Plus) ? qpow_minus_1(q, m) : qpow_plus_1(q, m);
  for (unsigned i = 1; i + 1 <= m; ++i) r *= qpow_minus_1(q, 2 * i);
  return alpha * r;
}

FactoredNat order_sl(unsigned a, PrimePower q) {
  if (a == 1) return FactoredNat::one();
  return order_gl(a, q).divide_exact(qpow_minus_1(q, 1));
}

FactoredNat order_su(unsigned a, PrimePower q) {
  if (a == 1) return FactoredNat::one();
  return order_gu(a, q).divide_exact(qpow_plus_1(q, 1));
}

FactoredNat order_omega(unsigned a, PrimePower q, FormSign sign) {
  FactoredNat so = order_so(a, q, sign);
  // Index of Omega in SO is 2 in all cases covered here (a >= 2; for q even
  // SO means the full isometry group O).
  if (a == 2) {
    // SO_2^eps is a torus of order q -+ 1 (q odd); Omega has index 2.
    return so.divide_exact(FactoredNat::from_prime_power(2, 1));
  }
  if (a == 1) return FactoredNat::one();
  return so.divide_exact(FactoredNat::from_prime_power(2, 1));
}

FactoredNat order_go(unsigned a, PrimePower q, FormSign sign) {
  FactoredNat so = order_so(a, q, sign);
  if (q.p == 2) return so;  // alpha already accounts for the factor 2
  return so * FactoredNat::from_prime_power(2, 1);
}

Nat classical_d(ClassicalFamily f, unsigned n, const PrimePower& q) {
  switch (f) {
    case ClassicalFamily::Linear: return gcd(n, Nat(q.q) - 1);
    case ClassicalFamily::Unitary: return gcd(n, Nat(q.q) + 1);
    case ClassicalFamily::Symplectic: return gcd(2, Nat(q.q) - 1);
    case ClassicalFamily::OrthogonalOdd: return 2;
    case ClassicalFamily::OrthogonalPlus:
      return gcd(4, pow_nat(q.q, n / 2) - 1);
    case ClassicalFamily::OrthogonalMinus:
      return gcd(4, pow_nat(q.q, n / 2) + 1);
  }
  return 1;
}

FactoredNat order_psl(unsigned n, PrimePower q) {
  FactoredNat d = FactoredNat::from_value(gcd(n, Nat(q.q) - 1));
  return order_sl(n, q).divide_exact(d);
}

FactoredNat order_psu(unsigned n, PrimePower q) {
  FactoredNat d = FactoredNat::from_value(gcd(n, Nat(q.q) + 1));
  return order_su(n, q).divide_exact(d);
}

FactoredNat order_psp(unsigned n, PrimePower q) {
  FactoredNat d = FactoredNat::from_value(gcd(2, Nat(q.q) - 1));
  return order_sp(n, q).divide_exact(d);
}

FactoredNat order_psomega(unsigned n, PrimePower q, FormSign sign) {
  if (sign == FormSign::Odd) {
    if (q.p == 2) throw domain_error("order_psomega: odd type needs q odd");
    return order_so(n, q, sign).divide_exact(FactoredNat::from_prime_power(2, 1));
  }
  unsigned m = n / 2;
  Nat eps_part = pow_nat(q.q, m);
  if (sign == FormSign::Plus) eps_part -= 1; else eps_part += 1;
  Nat e = gcd(Nat(4), eps_part);
  // |POmega_{2m}^eps(q)| = q^{m(m-1)} (q^m - eps) prod(q^{2i}-1) / (4, q^m - eps)
  FactoredNat r = FactoredNat::from_prime_power(q.p, (unsigned long)q.a * m * (m - 1));
  r *= (sign == FormSign::Plus) ? qpow_minus_1(q, m) : qpow_plus_1(q, m);
  for (unsigned i = 1; i + 1 <= m; ++i) r *= qpow_minus_1(q, 2 * i);
  return r.divide_exact(FactoredNat::from_value(e));
}

namespace {

struct ExcShape {
  unsigned long n_pos_roots;            // exponent of q
  std::vector<std::pair<unsigned, int>> cyclotomic;  // (i, +-1): q^i - sign... value q^i - s
};

// q^N * prod (q^i - s_i); s = +1 encodes q^i - 1, s = -1 encodes q^i + 1.
FactoredNat exc_product(const ExcShape& shape, PrimePower q) {
  FactoredNat r = FactoredNat::from_prime_power(q.p, (unsigned long)q.a * shape.n_pos_roots);
  for (auto [i, s] : shape.cyclotomic)
    r *= (s > 0) ? qpow_minus_1(q, i) : qpow_plus_1(q, i);
  return r;
}

ExcShape exc_shape(ExceptionalType t) {
  using P = std::pair<unsigned, int>;
  switch (t) {
    case ExceptionalType::E8:
      return {120, {P{2,1}, P{8,1}, P{12,1}, P{14,1}, P{18,1}, P{20,1}, P{24,1}, P{30,1}}};
    case ExceptionalType::E7:
      return {63, {P{2,1}, P{6,1}, P{8,1}, P{10,1}, P{12,1}, P{14,1}, P{18,1}}};
    case ExceptionalType::E6:
      return {36, {P{2,1}, P{5,1}, P{6,1}, P{8,1}, P{9,1}, P{12,1}}};
    case ExceptionalType::TwE6:
      return {36, {P{2,1}, P{5,-1}, P{6,1}, P{8,1}, P{9,-1}, P{12,1}}};
    case ExceptionalType::F4:
      return {24, {P{2,1}, P{6,1}, P{8,1}, P{12,1}}};
    case ExceptionalType::G2:
      return {6, {P{2,1}, P{6,1}}};
    case ExceptionalType::TwF4:
      return {12, {P{6,-1}, P{4,1}, P{3,-1}, P{1,1}}};
    case ExceptionalType::TwG2:
      return {3, {P{3,-1}, P{1,1}}};
    case ExceptionalType::TwB2:
      return {2, {P{2,-1}, P{1,1}}};
    case ExceptionalType::TriD4:
      return {12, {P{6,1}, P{2,1}}};  // plus the q^8+q^4+1 part added below
  }
  throw domain_error("exc_shape: bad type");
}

Nat exc_center_divisor(ExceptionalType t, const PrimePower& q) {
  switch (t) {
    case ExceptionalType::E7: return gcd(2, Nat(q.q) - 1);
    case ExceptionalType::E6: return gcd(3, Nat(q.q) - 1);
    case ExceptionalType::TwE6: return gcd(3, Nat(q.q) + 1);
    default: return 1;
  }
}

}  // namespace

FactoredNat order_exceptional_universal(ExceptionalType t, PrimePower q) {
  FactoredNat r = exc_product(exc_shape(t), q);
  if (t == ExceptionalType::TriD4)
    r *= FactoredNat::from_value(pow_nat(q.q, 8) + pow_nat(q.q, 4) + 1);
  return r;
}

FactoredNat order_simple(const GroupId& g) {
  if (g.is_alternating()) {
    return factorial(g.alt().n).divide_exact(FactoredNat::from_prime_power(2, 1));
  }
  if (g.is_sporadic()) {
    return FactoredNat::from_value(data_sporadic_order(g.spo().name));
  }
  if (g.is_exceptional()) {
    const auto& e = g.exc();
    FactoredNat u = order_exceptional_universal(e.type, e.q);
    Nat d = exc_center_divisor(e.type, e.q);
    return u.divide_exact(FactoredNat::from_value(d));
  }
  const auto& c = g.cls();
  switch (c.family) {
    case ClassicalFamily::Linear: return order_psl(c.n, c.q);
    case ClassicalFamily::Unitary: return order_psu(c.n, c.q);
    case ClassicalFamily::Symplectic: return order_psp(c.n, c.q);
    case ClassicalFamily::OrthogonalOdd: return order_psomega(c.n, c.q, FormSign::Odd);
    case ClassicalFamily::OrthogonalPlus: return order_psomega(c.n, c.q, FormSign::Plus);
    case ClassicalFamily::OrthogonalMinus: return order_psomega(c.n, c.q, FormSign::Minus);
  }
  throw domain_error("order_simple: bad family");
}

FactoredNat order_exceptional_subfield(ExceptionalType t, PrimePower q0, unsigned k,
                                       int eps) {
  if (k < 2) throw domain_error("order_exceptional_subfield: k >= 2");
  switch (t) {
    case ExceptionalType::E7: {
      if (k == 3) {
        // |H| = f(q0) for q even, f(q0)/2 for q odd, with f the universal order.
        FactoredNat f = order_exceptional_universal(ExceptionalType::E7, q0);
        if (q0.p == 2) return f;
        return f.divide_exact(FactoredNat::from_prime_power(2, 1));
      }
      // k = 2 (or larger prime): the simple subfield group.
      return order_simple(GroupId::exceptional(ExceptionalType::E7, q0));
    }
    case ExceptionalType::E6:
    case ExceptionalType::TwE6: {
      ExceptionalType sub = (eps > 0) ? ExceptionalType::E6 : ExceptionalType::TwE6;
      FactoredNat simple = order_simple(GroupId::exceptional(sub, q0));
      if (k == 3) {
        long rem = (long)(q0.q % 3);
        bool inndiag = (eps > 0) ? (rem == 1) : (rem == 2);
        if (inndiag) {
          Nat shifted = Nat(q0.q) + (eps > 0 ? -1 : 1);
          return simple * FactoredNat::from_value(gcd(Nat(3), shifted));
        }
      }
      return simple;
    }
    default:
      // d = 1 for these types, so the universal order is the simple order;
      // for degenerate small q0 (G2(2), 2B2(2), 2G2(3), 2F4(2)) the subfield
      // subgroup is the full non-simple group, whose order is the universal
      // product as well.
      return order_exceptional_universal(t, q0);
  }
}

}  // namespace lsub
