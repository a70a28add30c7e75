#include "galled_census/dup_trees.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace galled {

BTable BTable::build(int n_max) {
  if (n_max < 2) throw std::domain_error("BTable: n_max must be >= 2");
  BTable t;
  t.extend(n_max);
  return t;
}

void BTable::extend(int new_n_max) {
  if (new_n_max <= n_max_) return;
  rows_.resize(new_n_max + 1);
  for (int n = std::max(2, n_max_ + 1); n <= new_n_max; ++n) {
    n_max_ = n;
    fill_row(n);
  }
}

const Integer& BTable::get(int n, int k) const {
  if (n < 2 || k < 0 || k > n - 1) return zero_;
  if (n > n_max_) {
    throw std::out_of_range("BTable: entry (" + std::to_string(n) + "," + std::to_string(k) +
                            ") beyond built range " + std::to_string(n_max_));
  }
  return rows_[n][k];
}

void BTable::fill_row(int n) {
  auto& row = rows_[n];
  row.resize(n);
  row[0] = double_factorial(2 * n - 5);
  if (n >= 2) row[1] = (n - 1) * row[0];
  Integer sum, diff, factor;
  for (int k = 2; k <= n - 1; ++k) {
    sum = 0;
    factor = k - 1;  // C(k-1,d) (2d-1)!!, advanced over d as in NTable
    for (int d = 1; d <= k - 1; ++d) {
      diff = get(n - d, k - 1 - d);
      diff -= get(n - d + 1, k - 1 - d);
      sum += factor * diff;
      if (d < k - 1) {
        factor *= (k - 1 - d);
        mpz_divexact_ui(factor.get_mpz_t(), factor.get_mpz_t(), d + 1);
        factor *= (2 * d + 1);
      }
    }
    if (mpz_odd_p(sum.get_mpz_t())) {
      throw std::logic_error("BTable: odd inner sum at (" + std::to_string(n) + "," +
                             std::to_string(k) + ")");
    }
    mpz_tdiv_q_2exp(sum.get_mpz_t(), sum.get_mpz_t(), 1);
    row[k] = (n + k - 2) * row[k - 1] + sum;
  }
}

BTable BTable::from_rows(std::vector<std::vector<Integer>> rows) {
  if (rows.size() < 3) throw std::invalid_argument("BTable: too few rows");
  for (std::size_t n = 2; n < rows.size(); ++n) {
    if (rows[n].size() != n) {
      throw std::invalid_argument("BTable: row " + std::to_string(n) + " has wrong length");
    }
  }
  BTable t;
  t.n_max_ = static_cast<int>(rows.size()) - 1;
  t.rows_ = std::move(rows);
  return t;
}

Integer b_value(int n, int k, const BTable& table) {
  if (n < 2 || n > table.n_max() || k < 0 || k > n - 1) {
    throw std::domain_error("b_value: (n,k) outside the built table");
  }
  return table.get(n, k);
}

Integer dup_total(int n, const BTable& table) {
  if (n < 1) throw std::domain_error("dup_total: n must be >= 1");
  Integer total = 0;
  for (int k = 0; k <= n; ++k) total += binomial(n, k) * table.get(n + 1, k);
  return total;
}

Integer dup_total_via_relation(int n, const NTable& table) {
  if (n < 1) throw std::domain_error("dup_total_via_relation: n must be >= 1");
  Integer total = 0;
  for (int k = 0; k <= n; ++k) {
    total += int_pow(2, n - k) * one_component_count(n, k, table);
  }
  return total;
}

Integer dup_by_repeats(int n, int k, const NTable& table) {
  if (n < 1) throw std::domain_error("dup_by_repeats: n must be >= 1");
  if (k < 0 || k > n) throw std::domain_error("dup_by_repeats: k out of range 0..n");
  Integer total = 0;
  for (int l = 0; l <= k; ++l) {
    total += binomial(n - l, k - l) * one_component_count(n, l, table);
  }
  return total;
}

Integer fdu_total(int n, const NTable& table) { return one_component_total(n, table); }

Integer fdu_by_repeats(int n, int k, const NTable& table) {
  return one_component_count(n, k, table);
}

namespace {

// Canonical encoding: leaf -> "<label>", internal -> "(" + a + b + ")" with
// the child encodings a <= b. Two trees are equal as unordered leaf-labeled
// trees iff their encodings match.
using TreeSet = std::set<std::string>;

bool is_leaf(const std::string& enc) { return enc.empty() || enc[0] != '('; }

// All distinct binary trees on a label multiset, optionally twin-cherry-free.
// A cherry is a pair of leaf children; a twin-cherry has equal labels. The
// property is hereditary, so filtering at each combination step is exact.
TreeSet trees_on_multiset(const std::vector<int>& multiset, bool twin_cherry_free) {
  if (multiset.size() == 1) return {std::to_string(multiset[0])};
  TreeSet out;
  std::size_t m = multiset.size();
  std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
  for (unsigned mask = 1; mask + 1 < (1u << m); ++mask) {
    std::vector<int> left, right;
    for (std::size_t i = 0; i < m; ++i) {
      (mask >> i & 1u ? left : right).push_back(multiset[i]);
    }
    std::sort(left.begin(), left.end());
    std::sort(right.begin(), right.end());
    if (!seen.insert({std::min(left, right), std::max(left, right)}).second) continue;
    TreeSet lt = trees_on_multiset(left, twin_cherry_free);
    TreeSet rt = trees_on_multiset(right, twin_cherry_free);
    for (const auto& a : lt) {
      for (const auto& b : rt) {
        if (twin_cherry_free && is_leaf(a) && is_leaf(b) && a == b) continue;
        out.insert("(" + std::min(a, b) + " " + std::max(a, b) + ")");
      }
    }
  }
  return out;
}

}  // namespace galled::(anonymous)

std::map<int, Integer> enumerate_dup_trees(int n, bool twin_cherry_free) {
  if (n < 1) throw std::domain_error("enumerate_dup_trees: n must be >= 1");
  if (n > 4) {
    throw resource_limit_error("enumerate_dup_trees: refusing n > 4 (multiset trees explode)");
  }
  std::map<int, Integer> counts;
  for (int k = 0; k <= n; ++k) counts[k] = 0;
  // iterate repeated-label subsets as bitmasks over {1..n}
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> multiset;
    int k = 0;
    for (int i = 0; i < n; ++i) {
      multiset.push_back(i + 1);
      if (mask >> i & 1u) {
        multiset.push_back(i + 1);
        ++k;
      }
    }
    std::sort(multiset.begin(), multiset.end());
    counts[k] += static_cast<long>(trees_on_multiset(multiset, twin_cherry_free).size());
  }
  return counts;
}

}  // namespace galled
