#pragma once

#include <string>
#include <vector>

#include "lsub/arith.hpp"

namespace lsub {

enum class LieType { A, B, C, D, E6, E7, E8, F4, G2 };

/// Lie type plus rank; dimension = 2N + r with N the positive root count.
struct RootDatum {
  LieType type;
  unsigned rank;

  RootDatum(LieType t, unsigned r);
  unsigned long positive_roots() const;
  unsigned long dimension() const;
  std::string name() const;
};

unsigned long dim_group(const RootDatum& d);

/// Dimension of the maximal parabolic P_i (Bourbaki node i), computed from
/// the root subsystem left after deleting node i.
unsigned long dim_parabolic(const RootDatum& d, unsigned i);

/// 3 dim H >= dim G.
bool is_large_algebraic(unsigned long h_dim, unsigned long g_dim);

/// dim G <= 2 dim A + dim B.
bool triple_dim_necessary(unsigned long a_dim, unsigned long b_dim, unsigned long g_dim);

struct AlgCheck {
  std::string name;
  bool ok;
  std::string detail;
};

/// The dimension-table verification battery:
///  (a) every irreducible-table row is large under its conditions,
///  (b) exceptional parabolic dimensions match the embedded table and are large,
///  (c) the geometric scan for SL/Sp/SO with n <= n_max matches the published
///      classification,
///  (d) the almost simple rows respect dim H <= 3n.
std::vector<AlgCheck> verify_algebraic_tables(unsigned n_max = 40);

}  // namespace lsub
