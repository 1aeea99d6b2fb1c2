#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lsub/arith.hpp"

namespace lsub {

/// Parse failure with position and the token set that would have been valid.
class ParseError : public std::runtime_error {
 public:
  ParseError(size_t pos, std::string expected, std::string msg)
      : std::runtime_error(msg), position(pos), expected(std::move(expected)) {}
  size_t position;
  std::string expected;
};

/// AST of an ATLAS-style structure string. Only the order matters, so '.'
/// and ':' both build Extension nodes and leading small factors such as
/// "2S_4" are plain products.
struct StructureExpr {
  enum class Kind { Power, Cyclic, Named, Product, Extension, Wreath, Bracket };
  Kind kind = Kind::Cyclic;

  // Power: base^(sum of exp_terms), braced when written p^{a+b+...}.
  // Cyclic: base holds n. Bracket: children[0] holds the inner expression.
  Nat base = 0;
  std::vector<unsigned long> exp_terms;
  bool braced = false;

  // Named
  std::string name_base;                    // "L", "Co", "G2", "2E6", "O'N", ...
  std::optional<unsigned long> name_sub;    // _n
  int name_sign = 0;                        // +1 / -1 for O_n^+ / O_n^-
  std::optional<unsigned long> name_field;  // (q)
  bool name_tick = false;                   // trailing '

  // Class decoration like the "_1" in "3_1" (order-neutral, kept for render).
  std::string decoration;

  std::vector<StructureExpr> children;
  std::vector<char> seps;  // Extension: '.'/':' per join; Product: 'x' or 0 (juxtaposed)

  bool operator==(const StructureExpr& o) const;
};

StructureExpr parse_structure(std::string_view s);
std::string render(const StructureExpr& e);
FactoredNat eval_order(const StructureExpr& e);

inline FactoredNat eval_order(std::string_view s) { return eval_order(parse_structure(s)); }

/// Names the parser can resolve, for error messages and docs.
std::vector<std::string> known_name_inventory();

}  // namespace lsub
