#pragma once

#include <map>
#include <utility>
#include <vector>

#include "galled_census/one_component.hpp"

namespace galled {

// Exact counts GN_{n,k,j} of galled networks with n leaves, k reticulation
// nodes and j inner reticulation nodes, for one fixed n. Support is
// 0 <= k <= 2n-2, 0 <= j <= min(n-2, k), and k <= n+j.
class GalledJointTable {
 public:
  GalledJointTable(int n, std::map<std::pair<int, int>, Integer> cells);

  int n() const { return n_; }
  const Integer& total() const { return total_; }

  // GN_{n,k,j}; zero outside the support.
  Integer count(int k, int j) const;

  // GN_{n,k} = sum_j GN_{n,k,j}, indexed k = 0..2n-2.
  std::vector<Integer> retic_marginal() const;

  // sum_k GN_{n,k,j}, indexed j = 0..max(0, n-2).
  std::vector<Integer> inner_marginal() const;

  // A network with n leaves and k reticulations has n+k-1 tree nodes.
  static int tree_node_count(int n, int k) { return n + k - 1; }

  const std::map<std::pair<int, int>, Integer>& cells() const { return cells_; }

 private:
  int n_;
  std::map<std::pair<int, int>, Integer> cells_;  // (k, j) -> count
  Integer total_;
};

// Exact joint counts via the marked EGF fixed point
//   H = sum_{a+b>=2} W(a,b;w) (z^a/a!) (uH)^b / b!,
// where W(a,b;w) = sum_{j=b}^{a+b} C(a,j-b) N_{a+b+1}^(j) w^j is the weight of
// an internal tree node with a leaf children and b subtree children. Each
// subtree child sits below an inner reticulation after replacement, hence the
// mark u per H factor. Needs the table built to n+1.
GalledJointTable galled_joint(int n, const NTable& table);

// Same counts by literal enumeration of all multifurcating leaf-labeled trees
// (recursive set partitions), accumulating the per-node weights tree by tree.
// Refuses n > 8.
GalledJointTable brute_force_galled(int n, const NTable& table);

// GN_n, evaluated with the marks set to 1 (much cheaper than the joint table;
// identical fixed point otherwise).
Integer galled_total(int n, const NTable& table);

// GN_{n,k} for k = 0..2n-2, evaluated with only the reticulation mark.
std::vector<Integer> galled_by_retic(int n, const NTable& table);

// GN_{n,2n-2} = (2n-3)!! 3^(n-1): binary trees with every internal node
// replaced by the 2-leaf one-component network in one of N_3^(2) = 3 ways.
Integer galled_max_retic(int n);

// L_n: galled networks whose underlying tree is a root with leaf children and
// cherry children. A lower bound for GN_n, asymptotically tight.
Integer lower_bound_L(int n, const NTable& table);

// L_{n,k,j}: refinement of L_n by reticulations k and inner reticulations j.
// Infeasible (k,j) gives 0.
Integer lower_bound_L_joint(int n, int k, int j, const NTable& table);

// U_n = (n-1)! [z^(n-1)] (1 - M(z))^(-n) with
// M(z) = sum_{l>=1} 1-GN_{l+1}/(l+1)! z^l: an upper bound for GN_n obtained by
// over-counting the reticulation placements of every tree node.
// `one_totals` is indexed by leaf count (entries 2..n used; index 0 unused).
Integer upper_bound_U(int n, const std::vector<Integer>& one_totals);

}  // namespace galled
