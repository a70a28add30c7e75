#pragma once

#include <string>
#include <vector>

#include "galled_census/arith.hpp"

namespace galled {

// Memoized table of N_n^(k): the number of one-component galled networks with
// n-1 leaves whose k reticulation children carry the labels 1..k.
//
// Rows are filled eagerly for n = 2..n_max, k = 0..n-1 by the recurrence
//
//   N_n^(k) = (n+k-3) N_n^(k-1) + (k-1) N_n^(k-2)
//           + 1/2 sum_{d=1}^{k-1} C(k-1,d) (2d-1)!! (N_{n-d}^(k-1-d) - N_{n-d+1}^(k-1-d))
//
// with N_n^(0) = (2n-5)!! and N_n^(1) = (n-2)(2n-5)!!. Out-of-support entries
// (n < 2, k < 0, k > n-1) read as zero. The inner sum is always even; the
// halving is checked and any odd sum is a hard error.
class NTable {
 public:
  static NTable build(int n_max);

  int n_max() const { return n_max_; }

  // Zero outside the support; throws std::out_of_range for n > n_max.
  const Integer& get(int n, int k) const;

  // Grows the table in place (no-op if new_n_max <= n_max).
  void extend(int new_n_max);

  // Deserialization hook for the cache file; validates shape, not values.
  static NTable from_rows(std::vector<std::vector<Integer>> rows);
  const std::vector<std::vector<Integer>>& rows() const { return rows_; }

 private:
  NTable() = default;
  void fill_row(int n);

  int n_max_ = 1;
  std::vector<std::vector<Integer>> rows_;  // rows_[n] holds k = 0..n-1
  Integer zero_ = 0;
};

// 1-GN_{n,k} = C(n,k) * N_{n+1}^(k); needs the table built to n+1.
Integer one_component_count(int n, int k, const NTable& table);

// 1-GN_n = sum_{k=0}^{n} 1-GN_{n,k}.
Integer one_component_total(int n, const NTable& table);

// Totals for 1..n as a vector indexed by leaf count (index 0 unused).
std::vector<Integer> one_component_totals(int n, const NTable& table);

// Result of checking the proved inequalities on every valid (n,k) pair.
struct BoundsReport {
  bool passed = true;
  long checks_run = 0;
  std::string first_failure;  // empty when passed
};

// Checks, for all valid (n,k) with n <= n_max:
//   lower/upper recurrence bounds on N_n^(k)      (2 <= k <= n-1)
//   2 N_n^(k) >= (2n+2k-5) N_{n-1}^(k)            (0 <= k <= n-2)
//   growth and upper bounds on 1-GN_{n,k}, and the cross-n growth bound.
// All comparisons are done cross-multiplied in exact integers.
// Needs the table built to n_max + 1.
BoundsReport verify_bounds(int n_max, const NTable& table);

}  // namespace galled
