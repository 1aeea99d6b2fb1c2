#pragma once

#include <gmpxx.h>

#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lsub {

using Nat = mpz_class;

/// Thrown when an operation's arguments violate its contract.
class domain_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

bool is_prime(const Nat& n);

/// Prime factorization by trial division (primes up to 10^6) followed by
/// Brent-cycle Pollard rho on the remaining composite part.
std::map<Nat, unsigned long> factor_integer(Nat n);

Nat gcd(const Nat& a, const Nat& b);
Nat lcm(const Nat& a, const Nat& b);
Nat pow_nat(const Nat& base, unsigned long e);

/// Exact natural number carried with as much of its prime factorization as
/// the construction path knows. Unfactored construction pieces are kept
/// separate so that factorization() only ever has to factor formula-sized
/// chunks (q^i +- 1 and friends), never the assembled product.
class FactoredNat {
 public:
  FactoredNat() : value_(1) {}

  static FactoredNat one() { return FactoredNat(); }
  static FactoredNat from_value(Nat v);
  static FactoredNat from_prime_power(const Nat& p, unsigned long e);

  const Nat& value() const { return value_; }

  /// Full prime factorization; completes the lazy pieces on demand.
  /// Pure: the object is not mutated, callers may share across threads.
  std::map<Nat, unsigned long> factorization() const;

  FactoredNat& operator*=(const FactoredNat& rhs);
  friend FactoredNat operator*(FactoredNat A, const FactoredNat& b) {
    A *= b;
    return A;
  }

  FactoredNat pow(unsigned long e) const;

  /// Exact division; throws domain_error when d does not divide *this.
  FactoredNat divide_exact(const FactoredNat& d) const;

  bool divides(const FactoredNat& m) const;

  FactoredNat cube() const { return pow(3); }

  std::strong_ordering operator<=>(const FactoredNat& rhs) const {
    int c = cmp(value_, rhs.value_);
    return c < 0 ? std::strong_ordering::less
         : c > 0 ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
  }
  bool operator==(const FactoredNat& rhs) const { return value_ == rhs.value_; }

  std::string str() const { return value_.get_str(); }
  /// "2^10 * 3^4 * 7" style rendering of factorization().
  std::string factored_str() const;

  // Internal consistency: value == product(known) * product(pieces).
  bool check_invariant() const;

 private:
  Nat value_;
  std::map<Nat, unsigned long> known_;  // prime -> exponent
  std::vector<Nat> pieces_;             // unfactored parts, each > 1
};

FactoredNat factorial(unsigned long t);

/// Largest power of prime b dividing m (as a FactoredNat, i.e. b^k).
FactoredNat p_part(const FactoredNat& m, const Nat& b);
unsigned long p_part_exponent(const Nat& m, const Nat& b);

/// Largest prime dividing c^d - 1 but no c^i - 1 with i < d.
/// Requires d >= 3; empty exactly for (c,d) = (2,6).
std::optional<Nat> zsigmondy(const Nat& c, unsigned long d);

/// Exact rational; always normalized (gcd(|num|, den) = 1, den > 0).
class ExactRat {
 public:
  ExactRat() : v_(0) {}
  ExactRat(long n) : v_(n) { v_.canonicalize(); }
  ExactRat(const Nat& n) : v_(n) {}
  ExactRat(const Nat& num, const Nat& den);
  static ExactRat from_factored(const FactoredNat& num, const FactoredNat& den) {
    return ExactRat(num.value(), den.value());
  }

  Nat numerator() const { return v_.get_num(); }
  Nat denominator() const { return v_.get_den(); }

  ExactRat& operator+=(const ExactRat& r) { v_ += r.v_; return *this; }
  ExactRat& operator-=(const ExactRat& r) { v_ -= r.v_; return *this; }
  ExactRat& operator*=(const ExactRat& r) { v_ *= r.v_; return *this; }
  ExactRat& operator/=(const ExactRat& r);

  friend ExactRat operator+(ExactRat a, const ExactRat& b) { return a += b; }
  friend ExactRat operator-(ExactRat a, const ExactRat& b) { return a -= b; }
  friend ExactRat operator*(ExactRat a, const ExactRat& b) { return a *= b; }
  friend ExactRat operator/(ExactRat a, const ExactRat& b) { return a /= b; }

  std::strong_ordering operator<=>(const ExactRat& rhs) const {
    int c = cmp(v_, rhs.v_);
    return c < 0 ? std::strong_ordering::less
         : c > 0 ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
  }
  bool operator==(const ExactRat& rhs) const { return v_ == rhs.v_; }

  ExactRat pow(unsigned long e) const;

  std::string str() const { return v_.get_str(); }

 private:
  mpq_class v_;
};

/// 1 - q^{-i} and relatives, exact.
ExactRat one_minus_qpow(unsigned long q, long i);

/// q = p^a with p prime, a >= 1.
struct PrimePower {
  unsigned long p = 0;
  unsigned a = 0;
  unsigned long q = 0;

  PrimePower() = default;
  PrimePower(unsigned long p_, unsigned a_);
  /// Recognize q as a prime power; throws domain_error otherwise.
  static PrimePower from_q(unsigned long q);
  static std::optional<PrimePower> try_from_q(unsigned long q);

  /// q must be q0^k for this to return q0.
  std::optional<PrimePower> subfield(unsigned k) const;
  /// q^k as a PrimePower (checked for overflow).
  PrimePower extension(unsigned k) const;

  bool operator==(const PrimePower&) const = default;
};

/// All prime powers in [lo, hi], ascending.
std::vector<unsigned long> prime_powers_upto(unsigned long lo, unsigned long hi);

}  // namespace lsub
