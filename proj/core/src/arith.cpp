#include "lsub/arith.hpp"

#include <algorithm>
#include <cstdint>
#include <mutex>
#include <sstream>

namespace lsub {

namespace {

const std::vector<unsigned long>& small_primes() {
  static const std::vector<unsigned long> primes = [] {
    constexpr unsigned long limit = 1000000;
    std::vector<bool> sieve(limit + 1, true);
    std::vector<unsigned long> out;
    for (unsigned long i = 2; i <= limit; ++i) {
      if (!sieve[i]) continue;
      out.push_back(i);
      for (unsigned long j = i * i; j <= limit; j += i) sieve[j] = false;
    }
    return out;
  }();
  return primes;
}

// Brent's variant of Pollard rho; n must be odd composite, not a prime power
// of a small prime (callers strip those first).
Nat pollard_rho(const Nat& n) {
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(0xbadc0ffeUL);
  while (true) {
    Nat y = rng.get_z_range(n - 3) + 2;
    Nat c = rng.get_z_range(n - 2) + 1;
    Nat m = 128, g = 1, r = 1, q = 1, x, ys;
    while (g == 1) {
      x = y;
      for (Nat i = 0; i < r; ++i) y = (y * y + c) % n;
      Nat k = 0;
      while (k < r && g == 1) {
        ys = y;
        Nat bound = std::min(m, Nat(r - k));
        for (Nat i = 0; i < bound; ++i) {
          y = (y * y + c) % n;
          q = q * abs(x - y) % n;
        }
        g = gcd(q, n);
        k += m;
      }
      r *= 2;
    }
    if (g == n) {
      g = 1;
      while (g == 1) {
        ys = (ys * ys + c) % n;
        g = gcd(abs(x - ys), n);
      }
    }
    if (g != n) return g;
  }
}

void factor_into(Nat n, std::map<Nat, unsigned long>& out) {
  if (n <= 1) return;
  if (is_prime(n)) {
    out[n] += 1;
    return;
  }
  // Perfect powers first so rho only sees squarefree-ish composites.
  if (mpz_perfect_power_p(n.get_mpz_t())) {
    for (unsigned long e = 2; e <= mpz_sizeinbase(n.get_mpz_t(), 2); ++e) {
      Nat root;
      if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), e) != 0) {
        std::map<Nat, unsigned long> sub;
        factor_into(root, sub);
        for (auto& [p, k] : sub) out[p] += k * e;
        return;
      }
    }
  }
  Nat d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

bool is_prime(const Nat& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

std::map<Nat, unsigned long> factor_integer(Nat n) {
  if (n < 1) throw domain_error("factor_integer: argument must be >= 1");
  std::map<Nat, unsigned long> out;
  if (n == 1) return out;
  Nat root;
  mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
  for (unsigned long p : small_primes()) {
    if (root < p) {
      if (n > 1) out[n] += 1;  // no factor <= sqrt(n): n is prime
      return out;
    }
    unsigned long k = mpz_remove(n.get_mpz_t(), n.get_mpz_t(), Nat(p).get_mpz_t());
    if (k) {
      out[p] += k;
      if (n == 1) return out;
      if (is_prime(n)) {
        out[n] += 1;
        return out;
      }
      mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    }
  }
  if (n > 1) factor_into(n, out);
  return out;
}

Nat gcd(const Nat& a, const Nat& b) {
  if (a == 0 && b == 0) throw domain_error("gcd(0,0) undefined");
  Nat g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Nat lcm(const Nat& a, const Nat& b) {
  if (a < 1 || b < 1) throw domain_error("lcm: arguments must be >= 1");
  Nat l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

Nat pow_nat(const Nat& base, unsigned long e) {
  Nat r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

FactoredNat FactoredNat::from_value(Nat v) {
  if (v < 1) throw domain_error("FactoredNat: value must be >= 1");
  FactoredNat f;
  f.value_ = v;
  if (v > 1) f.pieces_.push_back(std::move(v));
  return f;
}

FactoredNat FactoredNat::from_prime_power(const Nat& p, unsigned long e) {
  if (!is_prime(p)) throw domain_error("FactoredNat::from_prime_power: p not prime");
  FactoredNat f;
  if (e > 0) {
    f.known_[p] = e;
    f.value_ = pow_nat(p, e);
  }
  return f;
}

std::map<Nat, unsigned long> FactoredNat::factorization() const {
  std::map<Nat, unsigned long> out = known_;
  for (const Nat& piece : pieces_) {
    for (auto& [p, k] : factor_integer(piece)) out[p] += k;
  }
  return out;
}

FactoredNat& FactoredNat::operator*=(const FactoredNat& rhs) {
  value_ *= rhs.value_;
  for (auto& [p, k] : rhs.known_) known_[p] += k;
  pieces_.insert(pieces_.end(), rhs.pieces_.begin(), rhs.pieces_.end());
  return *this;
}

FactoredNat FactoredNat::pow(unsigned long e) const {
  FactoredNat r;
  if (e == 0) return r;
  mpz_pow_ui(r.value_.get_mpz_t(), value_.get_mpz_t(), e);
  for (auto& [p, k] : known_) r.known_[p] = k * e;
  for (const Nat& piece : pieces_)
    for (unsigned long i = 0; i < e; ++i) r.pieces_.push_back(piece);
  return r;
}

FactoredNat FactoredNat::divide_exact(const FactoredNat& d) const {
  if (!mpz_divisible_p(value_.get_mpz_t(), d.value().get_mpz_t()))
    throw domain_error("divide_exact: " + d.str() + " does not divide " + str());
  FactoredNat r = *this;
  r.value_ /= d.value();
  // Remove the divisor prime by prime, preferring the known part; divisors in
  // order formulas are small so factoring them fully is cheap.
  for (auto& [p, need0] : d.factorization()) {
    unsigned long need = need0;
    auto it = r.known_.find(p);
    if (it != r.known_.end()) {
      unsigned long take = std::min(need, it->second);
      it->second -= take;
      need -= take;
      if (it->second == 0) r.known_.erase(it);
    }
    // Pull the rest out of unfactored pieces.
    for (size_t i = 0; need > 0 && i < r.pieces_.size(); ++i) {
      while (need > 0 && mpz_divisible_p(r.pieces_[i].get_mpz_t(), p.get_mpz_t())) {
        r.pieces_[i] /= p;
        --need;
      }
    }
    if (need > 0)
      throw domain_error("divide_exact: internal piece bookkeeping failed");
  }
  std::erase_if(r.pieces_, [](const Nat& x) { return x == 1; });
  return r;
}

bool FactoredNat::divides(const FactoredNat& m) const {
  return mpz_divisible_p(m.value().get_mpz_t(), value_.get_mpz_t()) != 0;
}

std::string FactoredNat::factored_str() const {
  auto f = factorization();
  if (f.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (auto& [p, k] : f) {
    if (!first) os << " * ";
    first = false;
    os << p.get_str();
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

bool FactoredNat::check_invariant() const {
  Nat prod = 1;
  for (auto& [p, k] : known_) {
    if (!is_prime(p) || k == 0) return false;
    prod *= pow_nat(p, k);
  }
  for (const Nat& piece : pieces_) {
    if (piece <= 1) return false;
    prod *= piece;
  }
  return prod == value_;
}

FactoredNat factorial(unsigned long t) {
  if (t >= 1000000)
    throw domain_error("factorial: argument too large for the prime sieve");
  // Legendre's formula: v_p(t!) = sum_i floor(t / p^i).
  FactoredNat r;
  for (unsigned long p : small_primes()) {
    if (p > t) break;
    unsigned long e = 0;
    for (unsigned long pk = p; pk <= t; pk *= p) {
      e += t / pk;
      if (pk > t / p) break;  // next pk would overflow
    }
    r *= FactoredNat::from_prime_power(p, e);
  }
  return r;
}

unsigned long p_part_exponent(const Nat& m, const Nat& b) {
  if (m < 1) throw domain_error("p_part: m must be >= 1");
  if (!is_prime(b)) throw domain_error("p_part: b must be prime");
  Nat rest;
  return mpz_remove(rest.get_mpz_t(), m.get_mpz_t(), b.get_mpz_t());
}

FactoredNat p_part(const FactoredNat& m, const Nat& b) {
  return FactoredNat::from_prime_power(b, p_part_exponent(m.value(), b));
}

std::optional<Nat> zsigmondy(const Nat& c, unsigned long d) {
  if (c < 2) throw domain_error("zsigmondy: c must be >= 2");
  if (d < 3) throw domain_error("zsigmondy: d must be >= 3");
  if (c == 2 && d == 6) return std::nullopt;
  unsigned long cl = mpz_get_ui(c.get_mpz_t());
  Nat target = pow_nat(c, d) - 1;
  Nat best = 0;
  for (auto& [p, k] : factor_integer(target)) {
    (void)k;
    // p is primitive iff the multiplicative order of c mod p is exactly d.
    bool primitive = true;
    for (unsigned long i = 1; i < d && primitive; ++i) {
      if (d % i != 0) continue;
      Nat r;
      mpz_powm_ui(r.get_mpz_t(), Nat(cl).get_mpz_t(), i, p.get_mpz_t());
      if (r == 1) primitive = false;
    }
    if (primitive && p > best) best = p;
  }
  if (best == 0) return std::nullopt;
  return best;
}

ExactRat::ExactRat(const Nat& num, const Nat& den) : v_(num, den) {
  if (den == 0) throw domain_error("ExactRat: zero denominator");
  v_.canonicalize();
}

ExactRat& ExactRat::operator/=(const ExactRat& r) {
  if (r.v_ == 0) throw domain_error("ExactRat: division by zero");
  v_ /= r.v_;
  return *this;
}

ExactRat ExactRat::pow(unsigned long e) const {
  Nat n, d;
  mpz_pow_ui(n.get_mpz_t(), v_.get_num().get_mpz_t(), e);
  mpz_pow_ui(d.get_mpz_t(), v_.get_den().get_mpz_t(), e);
  return ExactRat(n, d);
}

ExactRat one_minus_qpow(unsigned long q, long i) {
  if (q < 2) throw domain_error("one_minus_qpow: q must be >= 2");
  if (i >= 0) return ExactRat(1) - ExactRat(pow_nat(q, i));
  return ExactRat(1) - ExactRat(Nat(1), pow_nat(q, -i));
}

PrimePower::PrimePower(unsigned long p_, unsigned a_) : p(p_), a(a_) {
  if (!is_prime(Nat(p_))) throw domain_error("PrimePower: p not prime");
  if (a_ < 1) throw domain_error("PrimePower: exponent must be >= 1");
  Nat v = pow_nat(p_, a_);
  if (!v.fits_ulong_p()) throw domain_error("PrimePower: q overflows");
  q = v.get_ui();
}

std::optional<PrimePower> PrimePower::try_from_q(unsigned long qv) {
  if (qv < 2) return std::nullopt;
  Nat n(qv);
  // Smallest prime factor must be the only one.
  Nat p = 2;
  if (n % 2 != 0) {
    p = 3;
    while (p * p <= n && n % p != 0) p += 2;
    if (p * p > n) p = n;
  }
  unsigned a = 0;
  Nat m = n;
  while (m % p == 0) {
    m /= p;
    ++a;
  }
  if (m != 1) return std::nullopt;
  PrimePower pp;
  pp.p = p.get_ui();
  pp.a = a;
  pp.q = qv;
  return pp;
}

PrimePower PrimePower::from_q(unsigned long qv) {
  auto pp = try_from_q(qv);
  if (!pp) throw domain_error("PrimePower: " + std::to_string(qv) + " is not a prime power");
  return *pp;
}

std::optional<PrimePower> PrimePower::subfield(unsigned k) const {
  if (k == 0 || a % k != 0) return std::nullopt;
  return PrimePower(p, a / k);
}

PrimePower PrimePower::extension(unsigned k) const {
  if (k == 0) throw domain_error("PrimePower::extension: k must be >= 1");
  return PrimePower(p, a * k);  // ctor rejects overflow
}

std::vector<unsigned long> prime_powers_upto(unsigned long lo, unsigned long hi) {
  std::vector<unsigned long> out;
  for (unsigned long q = std::max<unsigned long>(lo, 2); q <= hi; ++q) {
    if (PrimePower::try_from_q(q)) out.push_back(q);
  }
  return out;
}

}  // namespace lsub
