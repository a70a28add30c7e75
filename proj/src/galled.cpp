#include "galled_census/galled.hpp"

#include <algorithm>
#include <functional>

#include "galled_census/marked_series.hpp"

namespace galled {

GalledJointTable::GalledJointTable(int n, std::map<std::pair<int, int>, Integer> cells)
    : n_(n), cells_(std::move(cells)), total_(0) {
  for (auto it = cells_.begin(); it != cells_.end();) {
    if (it->second == 0) {
      it = cells_.erase(it);
    } else {
      total_ += it->second;
      ++it;
    }
  }
}

Integer GalledJointTable::count(int k, int j) const {
  auto it = cells_.find({k, j});
  return it == cells_.end() ? Integer(0) : it->second;
}

std::vector<Integer> GalledJointTable::retic_marginal() const {
  std::vector<Integer> m(std::max(1, 2 * n_ - 1));
  for (const auto& [kj, c] : cells_) m[kj.first] += c;
  return m;
}

std::vector<Integer> GalledJointTable::inner_marginal() const {
  std::vector<Integer> m(std::max(1, n_ - 1));
  for (const auto& [kj, c] : cells_) m[kj.second] += c;
  return m;
}

namespace {

enum class MarkMode { joint, retic_only, none };

// Weight of an internal tree node with a leaf children and b subtree
// children: sum_{j=b}^{a+b} C(a,j-b) N_{a+b+1}^(j) u^b w^j, with marks kept
// or evaluated at 1 per mode.
MarkPoly node_weight(int a, int b, const NTable& table, MarkMode mode, int max_u, int max_w) {
  MarkPoly p(max_u, max_w);
  int c = a + b;
  for (int j = b; j <= c; ++j) {
    Rational coeff(binomial(a, j - b) * table.get(c + 1, j));
    switch (mode) {
      case MarkMode::joint: p.add_term(b, j, coeff); break;
      case MarkMode::retic_only: p.add_term(0, j, coeff); break;
      case MarkMode::none: p.add_term(0, 0, coeff); break;
    }
  }
  return p;
}

// Solves H = sum_b A_b(z,w) u^b H^b / b! by iteration, truncated at z^n.
// Each iteration gains one correct z-degree (the right side has valuation
// one higher in the error), so degrees above iter+2 are not computed.
MarkedSeries egf_fixed_point(int n, const NTable& table, MarkMode mode) {
  int max_u = mode == MarkMode::joint ? std::max(0, n - 2) : 0;
  int max_w = mode == MarkMode::none ? 0 : 2 * n - 2;

  // A_b, with the u^b mark and the 1/(a! b!) factor folded into z^a terms
  int b_max = n / 2;
  std::vector<MarkedSeries> weights;
  weights.reserve(b_max + 1);
  Rational fact_b(1);
  for (int b = 0; b <= b_max; ++b) {
    if (b > 0) fact_b /= b;
    MarkedSeries ab(n, max_u, max_w);
    for (int a = std::max(0, 2 - b); a <= n - 2 * b; ++a) {
      MarkPoly w = node_weight(a, b, table, mode, max_u, max_w);
      Rational scale = fact_b / Rational(factorial(a));
      ab.at(a).add_mul_shifted(w, scale, 0, 0);
    }
    weights.push_back(std::move(ab));
  }

  MarkedSeries h(n, max_u, max_w);
  MarkPoly one = MarkPoly::constant(1, max_u, max_w);
  for (int iter = 1; iter <= n; ++iter) {
    int eff = std::min(n, iter + 2);
    MarkedSeries next(n, max_u, max_w);
    MarkedSeries power(n, max_u, max_w);  // H^b
    power.at(0) = one;
    for (int b = 0; 2 * b <= eff; ++b) {
      if (b >= 1) {
        MarkedSeries p(n, max_u, max_w);
        for (int d1 = 0; d1 <= eff; ++d1) {
          const MarkPoly& pa = power.at(d1);
          if (pa.is_zero()) continue;
          for (int d2 = 2; d1 + d2 <= eff; ++d2) {
            const MarkPoly& pb = h.at(d2);
            if (pb.is_zero()) continue;
            p.at(d1 + d2).add_mul(pa, pb);
          }
        }
        power = std::move(p);
      }
      const MarkedSeries& ab = weights[b];
      for (int d1 = 2 * b; d1 <= eff; ++d1) {
        const MarkPoly& pp = power.at(d1);
        if (pp.is_zero()) continue;
        for (int d2 = 0; d1 + d2 <= eff; ++d2) {
          const MarkPoly& wa = ab.at(d2);
          if (wa.is_zero()) continue;
          next.at(d1 + d2).add_mul(pp, wa);
        }
      }
    }
    h = std::move(next);
  }
  return h;
}

std::map<std::pair<int, int>, Integer> cells_from_poly(const MarkPoly& p, const Integer& n_fact) {
  std::map<std::pair<int, int>, Integer> cells;
  for (const auto& [key, c] : p.terms()) {
    Rational v = c * Rational(n_fact);
    cells[{key.w, key.u}] = as_integer(v, "galled count");
  }
  return cells;
}

}  // namespace galled::(anonymous)

GalledJointTable galled_joint(int n, const NTable& table) {
  if (n < 1) throw std::domain_error("galled_joint: n must be >= 1");
  if (n == 1) return GalledJointTable(1, {{{0, 0}, 1}});
  if (table.n_max() < n + 1) {
    throw std::invalid_argument("galled_joint: table must be built to n+1");
  }
  MarkedSeries h = egf_fixed_point(n, table, MarkMode::joint);
  return GalledJointTable(n, cells_from_poly(h.at(n), factorial(n)));
}

Integer galled_total(int n, const NTable& table) {
  if (n < 1) throw std::domain_error("galled_total: n must be >= 1");
  if (n == 1) return 1;
  if (table.n_max() < n + 1) {
    throw std::invalid_argument("galled_total: table must be built to n+1");
  }
  MarkedSeries h = egf_fixed_point(n, table, MarkMode::none);
  return as_integer(h.at(n).coeff(0, 0) * Rational(factorial(n)), "galled total");
}

std::vector<Integer> galled_by_retic(int n, const NTable& table) {
  if (n < 1) throw std::domain_error("galled_by_retic: n must be >= 1");
  if (n == 1) return {Integer(1)};
  if (table.n_max() < n + 1) {
    throw std::invalid_argument("galled_by_retic: table must be built to n+1");
  }
  MarkedSeries h = egf_fixed_point(n, table, MarkMode::retic_only);
  std::vector<Integer> out(2 * n - 1);
  Integer nf = factorial(n);
  for (const auto& [key, c] : h.at(n).terms()) {
    out[key.w] = as_integer(c * Rational(nf), "galled count");
  }
  return out;
}

namespace {

// Enumerates every multifurcating leaf-labeled tree on `leaves` (size >= 2)
// exactly once: the root's children are the blocks of a set partition with
// >= 2 blocks, singleton blocks are leaves, larger blocks recurse over all
// their tree shapes. Calls fn with the weight polynomial of each tree, the
// product of node weights over internal nodes. node_weight already carries
// u^b per node, which marks each subtree child once.
class TreeEnumerator {
 public:
  TreeEnumerator(const NTable& table, int max_u, int max_w)
      : table_(table), max_u_(max_u), max_w_(max_w) {}

  void run(const std::vector<int>& leaves, const std::function<void(const MarkPoly&)>& fn) {
    blocks_.clear();
    partition_rec(leaves, 0, fn);
  }

 private:
  // Assign leaves[i..] to existing or new blocks; at i == size, visit the
  // partition if it has >= 2 blocks.
  void partition_rec(const std::vector<int>& leaves, std::size_t i,
                     const std::function<void(const MarkPoly&)>& fn) {
    if (i == leaves.size()) {
      if (blocks_.size() >= 2) visit_partition(fn);
      return;
    }
    for (std::size_t bi = 0; bi < blocks_.size(); ++bi) {
      blocks_[bi].push_back(leaves[i]);
      partition_rec(leaves, i + 1, fn);
      blocks_[bi].pop_back();
    }
    blocks_.push_back({leaves[i]});
    partition_rec(leaves, i + 1, fn);
    blocks_.pop_back();
  }

  void visit_partition(const std::function<void(const MarkPoly&)>& fn) {
    int a = 0, b = 0;
    std::vector<std::vector<int>> big;
    for (const auto& blk : blocks_) {
      if (blk.size() == 1) {
        ++a;
      } else {
        ++b;
        big.push_back(blk);
      }
    }
    MarkPoly root = node_weight(a, b, table_, MarkMode::joint, max_u_, max_w_);
    product_over_blocks(big, 0, root, fn);
  }

  // Extend `acc` by one subtree choice per non-singleton block.
  void product_over_blocks(const std::vector<std::vector<int>>& big, std::size_t i, MarkPoly acc,
                           const std::function<void(const MarkPoly&)>& fn) {
    if (i == big.size()) {
      fn(acc);
      return;
    }
    // fresh enumerator: blocks_ state is per recursion level
    TreeEnumerator sub(table_, max_u_, max_w_);
    sub.run(big[i], [&](const MarkPoly& wt) {
      MarkPoly next(max_u_, max_w_);
      next.add_mul(acc, wt);
      product_over_blocks(big, i + 1, std::move(next), fn);
    });
  }

  const NTable& table_;
  int max_u_;
  int max_w_;
  std::vector<std::vector<int>> blocks_;
};

}  // namespace galled::(anonymous)

GalledJointTable brute_force_galled(int n, const NTable& table) {
  if (n < 1) throw std::domain_error("brute_force_galled: n must be >= 1");
  if (n > 8) {
    throw resource_limit_error("brute_force_galled: refusing n > 8 (tree count explodes)");
  }
  if (n == 1) return GalledJointTable(1, {{{0, 0}, 1}});
  if (table.n_max() < n + 1) {
    throw std::invalid_argument("brute_force_galled: table must be built to n+1");
  }
  int max_u = std::max(0, n - 2), max_w = 2 * n - 2;
  MarkPoly acc(max_u, max_w);
  std::vector<int> leaves(n);
  for (int i = 0; i < n; ++i) leaves[i] = i + 1;
  TreeEnumerator enumerator(table, max_u, max_w);
  enumerator.run(leaves, [&acc](const MarkPoly& wt) { acc += wt; });
  return GalledJointTable(n, cells_from_poly(acc, 1));
}

Integer galled_max_retic(int n) {
  if (n < 2) throw std::domain_error("galled_max_retic: n must be >= 2");
  return double_factorial(2 * n - 3) * int_pow(3, n - 1);
}

namespace {

// Coefficients of (1 + 2w + 3w^2)^j, the per-cherry reticulation weight
// sum_l C(2,l) N_3^(l) w^l raised to the number of cherries.
std::vector<Integer> cherry_weight_pow(int j) {
  std::vector<Integer> p{1};
  for (int s = 0; s < j; ++s) {
    std::vector<Integer> q(p.size() + 2);
    for (std::size_t i = 0; i < p.size(); ++i) {
      q[i] += p[i];
      q[i + 1] += 2 * p[i];
      q[i + 2] += 3 * p[i];
    }
    p = std::move(q);
  }
  return p;
}

}  // namespace galled::(anonymous)

Integer lower_bound_L(int n, const NTable& table) {
  if (n < 1) throw std::domain_error("lower_bound_L: n must be >= 1");
  Integer total = 0;
  for (int j = 0; 2 * j <= n; ++j) {
    Integer inner = 0;
    for (int l = 0; l <= n - 2 * j; ++l) {
      inner += binomial(n - 2 * j, l) * table.get(n - j + 1, l + j);
    }
    // C(n,2j) (2j)! 3^j / j! = C(n,2j) (2j-1)!! 6^j
    total += binomial(n, 2 * j) * double_factorial(2 * j - 1) * int_pow(6, j) * inner;
  }
  return total;
}

Integer lower_bound_L_joint(int n, int k, int j, const NTable& table) {
  if (n < 1) throw std::domain_error("lower_bound_L_joint: n must be >= 1");
  if (j < 0 || 2 * j > n || k < j) return 0;
  std::vector<Integer> cherry = cherry_weight_pow(j);
  Integer sum = 0;
  for (int l = 0; l <= std::min<int>(2 * j, k - j); ++l) {
    int l_root = k - j - l;
    if (l_root > n - 2 * j) continue;
    sum += cherry[l] * binomial(n - 2 * j, l_root) * table.get(n - j + 1, j + l_root);
  }
  // #trees with j cherry children: C(n,2j) (2j)!/(2^j j!) = C(n,2j) (2j-1)!!
  return binomial(n, 2 * j) * double_factorial(2 * j - 1) * sum;
}

Integer upper_bound_U(int n, const std::vector<Integer>& one_totals) {
  if (n < 1) throw std::domain_error("upper_bound_U: n must be >= 1");
  if (static_cast<int>(one_totals.size()) < n + 1) {
    throw std::invalid_argument("upper_bound_U: totals must cover 1..n");
  }
  int order = n - 1;
  MarkedSeries m(order, 0, 0);
  for (int l = 1; l <= order; ++l) {
    m.at(l).add_term(0, 0, Rational(one_totals[l + 1]) / Rational(factorial(l + 1)));
  }
  MarkedSeries rec = reciprocal_power(m, n, order);
  return as_integer(rec.at(order).coeff(0, 0) * Rational(factorial(n - 1)), "upper bound U");
}

}  // namespace galled
