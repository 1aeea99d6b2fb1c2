#include <algorithm>

#include "lsub/catalog.hpp"
#include "lsub/data.hpp"
#include "lsub/structure.hpp"

namespace lsub {

namespace {

// C(a, b) as unsigned long; returns 0 on overflow past `cap`.
unsigned long binom(unsigned a, unsigned b, unsigned long cap) {
  if (b > a) return 0;
  Nat r = 1;
  for (unsigned i = 0; i < b; ++i) {
    r *= (a - i);
    r /= (i + 1);
  }
  if (r > cap) return 0;
  return r.get_ui();
}

FactoredNat half(const FactoredNat& v) {
  return v.divide_exact(FactoredNat::from_prime_power(2, 1));
}

}  // namespace

std::vector<SubgroupDescriptor> alt_subgroup_types(unsigned n) {
  if (n < 5) throw domain_error("alt_subgroup_types: n >= 5");
  std::vector<SubgroupDescriptor> out;

  // (a) intransitive: (S_k x S_{n-k}) cap A_n, 1 <= k < n/2.
  for (unsigned k = 1; 2 * k < n; ++k) {
    SubgroupDescriptor d;
    d.collection = Collection::C1;
    d.type_label = "S_" + std::to_string(k) + " x S_" + std::to_string(n - k);
    d.params = {{"k", (long)k}};
    d.order = half(factorial(k) * factorial(n - k));
    d.provenance = "intransitive, k-set stabilizer";
    out.push_back(std::move(d));
  }

  // (b) imprimitive: (S_k wr S_{n/k}) cap A_n, k | n, 2 <= k <= n/2.
  for (unsigned k = 2; k * 2 <= n; ++k) {
    if (n % k) continue;
    unsigned t = n / k;
    SubgroupDescriptor d;
    d.collection = Collection::C2;
    d.type_label = "S_" + std::to_string(k) + " wr S_" + std::to_string(t);
    d.params = {{"k", (long)k}, {"t", (long)t}};
    d.order = half(factorial(k).pow(t) * factorial(t));
    if (n == 8 && k == 2) d.maximal = false;  // lies in the affine group AGL_3(2)
    d.provenance = "imprimitive, block partition";
    out.push_back(std::move(d));
  }

  // (c) primitive candidates.
  if (n <= 24) {
    for (const auto& row : data_rows("alt_primitive.tsv")) {
      if (row.size() < 5) throw domain_error("alt_primitive.tsv: bad row");
      if (std::stoul(row[0]) != n) continue;
      SubgroupDescriptor d;
      d.collection = Collection::TableEntry;
      d.type_label = row[1];
      d.params = {{"classes", std::stol(row[2])}};
      d.order = eval_order(row[1]);
      d.maximal = row[3] == "1";
      d.provenance = row[4];
      out.push_back(std::move(d));
    }
  } else {
    // product action: S_a wr S_b with n = a^b, a >= 5, b >= 2
    for (unsigned a = 5; a * a <= n; ++a) {
      unsigned long pw = a;
      unsigned b = 1;
      while (pw < n && pw <= n / a) { pw *= a; ++b; }
      if (pw == n && b >= 2) {
        SubgroupDescriptor d;
        d.collection = Collection::TableEntry;
        d.type_label = "S_" + std::to_string(a) + " wr S_" + std::to_string(b) +
                       " (product action)";
        d.params = {{"a", (long)a}, {"b", (long)b}};
        d.order = half(factorial(a).pow(b) * factorial(b));
        d.provenance = "primitive product action";
        out.push_back(std::move(d));
      }
    }
    // subset action: S_a on b-subsets, n = C(a,b), 2 <= b <= a-2
    for (unsigned a = 5; a <= 2 * n; ++a) {
      for (unsigned b = 2; b + 2 <= a; ++b) {
        if (binom(a, b, n) != n) continue;
        SubgroupDescriptor d;
        d.collection = Collection::TableEntry;
        d.type_label = "S_" + std::to_string(a) + " on " + std::to_string(b) + "-subsets";
        d.params = {{"a", (long)a}, {"b", (long)b}};
        // (S_a cap A_n) has index 2 in S_a iff a transposition moves an odd
        // number of subsets, i.e. C(a-2, b-1) is odd.
        bool odd = binom(a - 2, b - 1, (unsigned long)-1) % 2 == 1;
        d.order = odd ? half(factorial(a)) : factorial(a);
        d.provenance = "primitive subset action";
        out.push_back(std::move(d));
      }
    }
    // residual primitive groups, represented by the degree bound only
    SubgroupDescriptor d;
    d.collection = Collection::TableEntry;
    d.type_label = "primitive residual (order bound)";
    unsigned long lg = 0;
    for (unsigned long m = n; m > 1; m /= 2) ++lg;
    d.order = FactoredNat::from_value(pow_nat(n, 1 + lg));
    d.order_is_exact = false;
    d.provenance = "upper bound n^(1+floor(log2 n)) for the remaining primitive groups";
    out.push_back(std::move(d));
  }

  std::sort(out.begin(), out.end(),
            [](const SubgroupDescriptor& x, const SubgroupDescriptor& y) {
              return x.sort_key() < y.sort_key();
            });
  return out;
}

}  // namespace lsub
