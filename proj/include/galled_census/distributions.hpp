#pragma once

#include <map>
#include <optional>
#include <vector>

#include "galled_census/asymptotics.hpp"
#include "galled_census/dup_trees.hpp"
#include "galled_census/galled.hpp"

namespace galled {

// Finitely supported probability mass function with exact rational weights
// (count / total, kept unreduced for faithful export) and a float view.
// Invariant: the counts sum to exactly the total.
template <typename Outcome>
class Pmf {
 public:
  using Cell = std::pair<Outcome, Integer>;

  static Pmf from_counts(std::vector<Cell> counts, Integer total) {
    Pmf p;
    Integer sum = 0;
    for (const auto& [o, c] : counts) {
      if (c < 0) throw std::logic_error("Pmf: negative count");
      sum += c;
    }
    if (sum != total || total <= 0) throw std::logic_error("Pmf: counts do not sum to total");
    p.cells_ = std::move(counts);
    p.total_ = std::move(total);
    return p;
  }

  const std::vector<Cell>& cells() const { return cells_; }
  const Integer& total() const { return total_; }

  Rational weight(const Outcome& o) const {
    for (const auto& [oo, c] : cells_) {
      if (oo == o) return Rational(c) / Rational(total_);
    }
    return Rational(0);
  }

  double prob(const Outcome& o) const { return weight(o).get_d(); }

  std::map<Outcome, double> float_map() const {
    std::map<Outcome, double> m;
    for (const auto& [o, c] : cells_) m[o] = Rational(Rational(c) / Rational(total_)).get_d();
    return m;
  }

  Rational weight_sum() const {
    Rational s(0);
    for (const auto& [o, c] : cells_) s += Rational(c) / Rational(total_);
    return s;
  }

 private:
  std::vector<Cell> cells_;
  Integer total_ = 1;
};

// P(n - Z_n = k) = 1-GN_{n,n-k} / 1-GN_n for k = 0..n: deficiency from the
// maximal reticulation count of a uniform one-component network.
Pmf<int> dist_one_component(int n, const NTable& table);

// P(X_n = j, n - Y_n = y) = GN_{n,n-y,j} / GN_n. Outcomes are (j, y) with
// j = 0..n-2 and y = -j..n; the reindexing from table keys (k, j) to
// (j, y = n-k) happens here and only here.
Pmf<std::pair<int, int>> dist_galled_joint(const GalledJointTable& joint);

// P(n - R_n = k) = DU_{n,n-k} / DU_n for a uniform dup-tree.
Pmf<int> dist_dup_repeats(int n, const NTable& n_table, const BTable& b_table);

// Total variation distance 1/2 sum |p - q| over the union of supports.
template <typename Outcome>
double tv_distance(const Pmf<Outcome>& p, const Pmf<Outcome>& q) {
  Rational tv(0);
  std::map<Outcome, Rational> diff;
  for (const auto& [o, c] : p.cells()) diff[o] += Rational(c) / Rational(p.total());
  for (const auto& [o, c] : q.cells()) diff[o] -= Rational(c) / Rational(q.total());
  for (const auto& [o, d] : diff) tv += abs(d);
  return Rational(tv / 2).get_d();
}

// Same against an analytic reference given as floats; outcomes missing on
// either side count as zero. The reference must carry (essentially) all of
// its mass within its listed support.
template <typename Outcome>
double tv_distance(const Pmf<Outcome>& p, const std::map<Outcome, double>& q) {
  std::map<Outcome, double> diff = p.float_map();
  double tv = 0.0;
  for (const auto& [o, v] : q) diff[o] -= v;
  for (const auto& [o, d] : diff) tv += std::abs(d);
  return tv / 2;
}

// Poisson(lambda) restricted to pmf values >= tail_eps (plus support cover).
std::map<int, double> poisson_reference(double lambda, int at_least = 64,
                                        double tail_eps = 1e-18);

// Float view of the truncated limit law.
std::map<std::pair<int, int>, double> limit_reference(const LimitPmfXY& limit);

// Per-n convergence diagnostics against the limit laws.
struct ConvergenceRow {
  int n = 0;
  double tv_one_component_poisson = 0.0;       // vs Poi(1/2)
  std::optional<double> tv_joint_limit;        // vs limit pmf; only for small n
  double one_component_fraction_gap = 0.0;     // |1-GN_n/GN_n - e^(-3/8)|
  double dup_fraction_gap = 0.0;               // |FDU_n/DU_n - e^(-1/2)|
  double ln_gap_one_component = 0.0;           // ln(exact) - ln(asym), per family
  double ln_gap_galled = 0.0;
  double ln_gap_dup = 0.0;
  double ln_gap_fdu = 0.0;
};

// Computes one row per requested n (each n >= 2). The joint-law distance is
// evaluated only for n <= joint_limit: the full joint table is the one
// genuinely expensive object here. Tables must be built to max(ns)+1.
std::vector<ConvergenceRow> convergence_report(const std::vector<int>& ns, const NTable& n_table,
                                               const BTable& b_table, int joint_limit = 16);

}  // namespace galled
