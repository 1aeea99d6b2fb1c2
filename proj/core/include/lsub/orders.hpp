#pragma once

#include <string>
#include <variant>

#include "lsub/arith.hpp"

namespace lsub {

enum class ClassicalFamily {
  Linear,
  Unitary,
  Symplectic,
  OrthogonalPlus,
  OrthogonalMinus,
  OrthogonalOdd,
};

enum class ExceptionalType { E8, E7, E6, TwE6, F4, G2, TwF4, TwG2, TwB2, TriD4 };

enum class FormSign { Plus, Minus, Odd };

std::string family_name(ClassicalFamily f);
std::string exceptional_name(ExceptionalType t);

/// Tagged identifier of a (near-)simple group. Construction validates the
/// family's simplicity/existence constraints; degenerate parameters such as
/// Sp_4(2), U_3(2), L_2(3), G_2(2) or 2B2(2) are rejected.
class GroupId {
 public:
  struct Alt {
    unsigned n;
    bool operator==(const Alt&) const = default;
  };
  struct Classical {
    ClassicalFamily family;
    unsigned n;
    PrimePower q;
    bool operator==(const Classical&) const = default;
  };
  struct Exceptional {
    ExceptionalType type;
    PrimePower q;
    bool operator==(const Exceptional&) const = default;
  };
  struct Sporadic {
    std::string name;  // canonical ATLAS-style name; Tits group is "2F4(2)'"
    bool operator==(const Sporadic&) const = default;
  };

  static GroupId alternating(unsigned n);
  static GroupId classical(ClassicalFamily f, unsigned n, PrimePower q);
  static GroupId classical(ClassicalFamily f, unsigned n, unsigned long q);
  static GroupId exceptional(ExceptionalType t, PrimePower q);
  static GroupId exceptional(ExceptionalType t, unsigned long q);
  static GroupId sporadic(const std::string& name);

  bool is_alternating() const { return std::holds_alternative<Alt>(v_); }
  bool is_classical() const { return std::holds_alternative<Classical>(v_); }
  bool is_exceptional() const { return std::holds_alternative<Exceptional>(v_); }
  bool is_sporadic() const { return std::holds_alternative<Sporadic>(v_); }

  const Alt& alt() const { return std::get<Alt>(v_); }
  const Classical& cls() const { return std::get<Classical>(v_); }
  const Exceptional& exc() const { return std::get<Exceptional>(v_); }
  const Sporadic& spo() const { return std::get<Sporadic>(v_); }

  /// "A12", "L3(5)", "U4(2)", "S6(2)", "O8+(3)", "O7(3)", "E8(2)", "2B2(8)", "M24".
  std::string name() const;

  bool operator==(const GroupId&) const = default;

 private:
  std::variant<Alt, Classical, Exceptional, Sporadic> v_;
  explicit GroupId(std::variant<Alt, Classical, Exceptional, Sporadic> v) : v_(std::move(v)) {}
};

// Full classical group orders, exact and structurally factored.
FactoredNat order_gl(unsigned a, PrimePower q);
FactoredNat order_gu(unsigned a, PrimePower q);
FactoredNat order_sp(unsigned a, PrimePower q);
FactoredNat order_so(unsigned a, PrimePower q, FormSign sign);

FactoredNat order_sl(unsigned a, PrimePower q);
FactoredNat order_su(unsigned a, PrimePower q);
// Omega_a^eps(q) (the derived subgroup of SO; not yet mod center).
FactoredNat order_omega(unsigned a, PrimePower q, FormSign sign);
/// |O_a^eps(q)| = 2|SO| for q odd, = |SO| for q even (full isometry group
/// modulo nothing; for q even SO is taken to be O).
FactoredNat order_go(unsigned a, PrimePower q, FormSign sign);

/// Simple group order for any valid GroupId.
FactoredNat order_simple(const GroupId& g);

/// Simple classical order without constructing a GroupId (used for subgroup
/// order recipes where the parameters may be outside the simple range).
FactoredNat order_psl(unsigned n, PrimePower q);
FactoredNat order_psu(unsigned n, PrimePower q);
FactoredNat order_psp(unsigned n, PrimePower q);
FactoredNat order_psomega(unsigned n, PrimePower q, FormSign sign);

/// Universal (simply-connected) exceptional group order q^N prod(q^{d_i}-1);
/// equals d * |simple|.
FactoredNat order_exceptional_universal(ExceptionalType t, PrimePower q);

/// Order of the subfield subgroup of type t over q0 inside t(q0^k), following
/// the parity/congruence case split the ambient simple group imposes.
/// eps distinguishes the twisted/untwisted E6 forms (+1 untwisted, -1 twisted).
FactoredNat order_exceptional_subfield(ExceptionalType t, PrimePower q0, unsigned k,
                                       int eps = +1);

/// (n, q-1)-style center divisors.
Nat classical_d(ClassicalFamily f, unsigned n, const PrimePower& q);

/// q^i - 1 / q^i + 1 as lazily factored values.
FactoredNat qpow_minus_1(PrimePower q, unsigned i);
FactoredNat qpow_plus_1(PrimePower q, unsigned i);

}  // namespace lsub
