#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lsub/arith.hpp"
#include "lsub/orders.hpp"

namespace lsub {

enum class Collection { C1, C2, C3, C4, C5, C6, C7, C8, S, A, Parabolic, TableEntry };
std::string collection_name(Collection c);

/// A maximal-subgroup candidate with an exact (or documented-normalization)
/// order. `params` carries the class parameters (i, t, k, a, m, q0, eps, ...).
struct SubgroupDescriptor {
  Collection collection = Collection::TableEntry;
  std::string type_label;
  std::map<std::string, long> params;
  FactoredNat order;
  bool maximal = true;
  bool provisional = false;   // candidate not confirmed in the source tables
  bool order_is_exact = true; // false: stored order is a documented normalization
  bool table_asserts_large = false;  // the table's verdict, used when inexact
  std::string provenance;

  long param(const std::string& k, long dflt = 0) const {
    auto it = params.find(k);
    return it == params.end() ? dflt : it->second;
  }
  std::string sort_key() const;
};

// --- alternating groups ---------------------------------------------------

/// Intransitive, imprimitive and primitive candidate subgroups of Alt(n).
/// For n <= 24 the primitive part comes from the curated table; for larger n
/// it is the product-action / subset-action / residual-bound generators.
std::vector<SubgroupDescriptor> alt_subgroup_types(unsigned n);

// --- classical groups ------------------------------------------------------

/// Geometric (C1-C8) candidates with exact orders and maximality flags.
std::vector<SubgroupDescriptor> classical_geometric(const GroupId& g);

/// The gcd quantity governing largeness of index-3 subfield subgroups;
/// the subgroup is large iff f > 1.
ExactRat c5_largeness_f(ClassicalFamily family, unsigned n, PrimePower q0);

/// Order of the index-3 subfield subgroup of L_n(q0^3) / U_n(q0^3).
FactoredNat c5_subfield_order(ClassicalFamily family, unsigned n, PrimePower q0,
                              unsigned k);

/// Irreducible almost simple candidates (S-collection) recorded for g, with
/// the alternating fully-deleted-module rows tagged Collection::A.
std::vector<SubgroupDescriptor> s_collection(const GroupId& g);

/// |H| < q^{3un} with u = 2 for unitary ambient, else 1.
/// Precondition: desc came from s_collection and is not in the A-collection.
bool liebeck_bound_holds(const GroupId& g, const SubgroupDescriptor& desc);

/// Number of totally singular i-subspaces (exact), used for parabolic orders.
FactoredNat isotropic_subspace_count(const GroupId& g, unsigned i);
FactoredNat gaussian_binomial(unsigned n, unsigned i, PrimePower q);

// --- exceptional groups ----------------------------------------------------

/// Maximal parabolics (computed Levi-product orders) plus the embedded
/// non-parabolic candidate rows matching g's parameters.
std::vector<SubgroupDescriptor> exceptional_table(const GroupId& g);

// --- sporadic groups ------------------------------------------------------

std::vector<SubgroupDescriptor> sporadic_maximals(const GroupId& g);

// --- general linear groups -------------------------------------------------

/// Candidates H < GL_n(q) with SL_n(q) not contained in H.
std::vector<SubgroupDescriptor> gln_catalog(unsigned n, PrimePower q);

// --- almost simple groups --------------------------------------------------

struct AlmostSimpleRow {
  std::string socle;        // printable ambient socle / group label
  std::string type_label;   // type of H (or H cap G0)
  std::string condition;    // human-readable side condition
  FactoredNat subgroup_order;
  FactoredNat ambient_order;
  bool expect_bound;        // whether |H cap G0|^3 >= |G0| is asserted to hold
  std::string provenance;
};

/// All rows of the almost-simple tables (socle filter optional).
std::vector<AlmostSimpleRow> almost_simple_table(
    const std::optional<GroupId>& socle = std::nullopt);

}  // namespace lsub
