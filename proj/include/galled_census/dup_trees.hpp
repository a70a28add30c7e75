#pragma once

#include <map>
#include <vector>

#include "galled_census/one_component.hpp"

namespace galled {

// Memoized table of B_n^(k), the dup-tree analogue of N_n^(k):
//
//   B_n^(k) = (n+k-2) B_n^(k-1)
//           + 1/2 sum_{d=1}^{k-1} C(k-1,d) (2d-1)!! (B_{n-d}^(k-1-d) - B_{n-d+1}^(k-1-d))
//
// with B_n^(0) = (2n-5)!! and B_n^(1) = (n-1)(2n-5)!!. Same out-of-range and
// integrality conventions as NTable.
class BTable {
 public:
  static BTable build(int n_max);

  int n_max() const { return n_max_; }
  const Integer& get(int n, int k) const;
  void extend(int new_n_max);

  static BTable from_rows(std::vector<std::vector<Integer>> rows);
  const std::vector<std::vector<Integer>>& rows() const { return rows_; }

 private:
  BTable() = default;
  void fill_row(int n);

  int n_max_ = 1;
  std::vector<std::vector<Integer>> rows_;
  Integer zero_ = 0;
};

// Table lookup with range checking: 2 <= n <= n_max, 0 <= k <= n-1.
Integer b_value(int n, int k, const BTable& table);

// DU_n = sum_k C(n,k) B_{n+1}^(k): dup-trees with n distinct labels.
Integer dup_total(int n, const BTable& table);

// DU_n = sum_k 2^(n-k) 1-GN_{n,k}: independent cross-validation path
// (every non-repeated label of a twin-cherry-free dup-tree may or may not be
// blown up into a twin cherry).
Integer dup_total_via_relation(int n, const NTable& table);

// DU_{n,k} = sum_{l<=k} C(n-l, k-l) 1-GN_{n,l}: dup-trees with exactly k
// repeated labels.
Integer dup_by_repeats(int n, int k, const NTable& table);

// Twin-cherry-free dup-trees biject with one-component galled networks, so
// these are the one-component counts verbatim.
Integer fdu_total(int n, const NTable& table);
Integer fdu_by_repeats(int n, int k, const NTable& table);

// Direct enumeration oracle: builds every rooted binary leaf-labeled tree on
// each label multiset (each of the n labels used once, the chosen k twice),
// deduplicated by canonical form. Returns counts keyed by k. Refuses n > 4.
std::map<int, Integer> enumerate_dup_trees(int n, bool twin_cherry_free);

}  // namespace galled
