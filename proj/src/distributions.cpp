#include "galled_census/distributions.hpp"

#include <algorithm>
#include <cmath>

namespace galled {

Pmf<int> dist_one_component(int n, const NTable& table) {
  if (n < 1) throw std::domain_error("dist_one_component: n must be >= 1");
  Integer total = one_component_total(n, table);
  std::vector<Pmf<int>::Cell> cells;
  cells.reserve(n + 1);
  for (int k = 0; k <= n; ++k) {
    cells.emplace_back(k, one_component_count(n, n - k, table));
  }
  return Pmf<int>::from_counts(std::move(cells), std::move(total));
}

Pmf<std::pair<int, int>> dist_galled_joint(const GalledJointTable& joint) {
  int n = joint.n();
  std::vector<Pmf<std::pair<int, int>>::Cell> cells;
  cells.reserve(joint.cells().size());
  for (const auto& [kj, c] : joint.cells()) {
    cells.emplace_back(std::pair<int, int>{kj.second, n - kj.first}, c);
  }
  std::sort(cells.begin(), cells.end());
  return Pmf<std::pair<int, int>>::from_counts(std::move(cells), joint.total());
}

Pmf<int> dist_dup_repeats(int n, const NTable& n_table, const BTable& b_table) {
  if (n < 1) throw std::domain_error("dist_dup_repeats: n must be >= 1");
  Integer total = dup_total(n, b_table);
  std::vector<Pmf<int>::Cell> cells;
  cells.reserve(n + 1);
  for (int k = 0; k <= n; ++k) {
    cells.emplace_back(k, dup_by_repeats(n, n - k, n_table));
  }
  return Pmf<int>::from_counts(std::move(cells), std::move(total));
}

std::map<int, double> poisson_reference(double lambda, int at_least, double tail_eps) {
  std::map<int, double> ref;
  for (int k = 0;; ++k) {
    double v = poisson_pmf(lambda, k);
    ref[k] = v;
    if (k >= at_least && v < tail_eps) break;
  }
  return ref;
}

std::map<std::pair<int, int>, double> limit_reference(const LimitPmfXY& limit) {
  return limit.cells;
}

std::vector<ConvergenceRow> convergence_report(const std::vector<int>& ns, const NTable& n_table,
                                               const BTable& b_table, int joint_limit) {
  const double e38 = std::exp(-3.0 / 8.0);
  const double e12 = std::exp(-1.0 / 2.0);
  LimitPmfXY limit;
  if (std::any_of(ns.begin(), ns.end(), [&](int n) { return n <= joint_limit; })) {
    limit = build_limit_pmf(40, 40);
  }
  std::vector<ConvergenceRow> rows;
  rows.reserve(ns.size());
  for (int n : ns) {
    if (n < 2) throw std::domain_error("convergence_report: each n must be >= 2");
    ConvergenceRow row;
    row.n = n;
    row.tv_one_component_poisson =
        tv_distance(dist_one_component(n, n_table), poisson_reference(0.5));

    Integer one_total = one_component_total(n, n_table);
    Integer gn_total = galled_total(n, n_table);
    Integer du = dup_total(n, b_table);
    row.one_component_fraction_gap =
        std::abs(Rational(Rational(one_total) / Rational(gn_total)).get_d() - e38);
    row.dup_fraction_gap = std::abs(Rational(Rational(one_total) / Rational(du)).get_d() - e12);

    row.ln_gap_one_component = ln(one_total) - log_asym(Family::one_component, n).ln_value;
    row.ln_gap_galled = ln(gn_total) - log_asym(Family::galled, n).ln_value;
    row.ln_gap_dup = ln(du) - log_asym(Family::dup, n).ln_value;
    row.ln_gap_fdu = ln(one_total) - log_asym(Family::fdu, n).ln_value;

    if (n <= joint_limit) {
      row.tv_joint_limit =
          tv_distance(dist_galled_joint(galled_joint(n, n_table)), limit_reference(limit));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace galled
