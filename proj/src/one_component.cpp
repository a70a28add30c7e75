#include "galled_census/one_component.hpp"

#include <sstream>

namespace galled {

NTable NTable::build(int n_max) {
  if (n_max < 2) throw std::domain_error("NTable: n_max must be >= 2");
  NTable t;
  t.extend(n_max);
  return t;
}

void NTable::extend(int new_n_max) {
  if (new_n_max <= n_max_) return;
  rows_.resize(new_n_max + 1);
  for (int n = std::max(2, n_max_ + 1); n <= new_n_max; ++n) {
    // the recurrence reads the current row at lower k (d = 1 gives N_n^(k-2))
    n_max_ = n;
    fill_row(n);
  }
}

const Integer& NTable::get(int n, int k) const {
  if (n < 2 || k < 0 || k > n - 1) return zero_;
  if (n > n_max_) {
    throw std::out_of_range("NTable: entry (" + std::to_string(n) + "," + std::to_string(k) +
                            ") beyond built range " + std::to_string(n_max_));
  }
  return rows_[n][k];
}

void NTable::fill_row(int n) {
  auto& row = rows_[n];
  row.resize(n);
  row[0] = double_factorial(2 * n - 5);
  if (n >= 3) row[1] = (n - 2) * row[0];
  Integer sum, diff, factor;
  for (int k = 2; k <= n - 1; ++k) {
    sum = 0;
    // factor = C(k-1,d) * (2d-1)!!, advanced incrementally over d.
    factor = k - 1;
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
      throw std::logic_error("NTable: odd inner sum at (" + std::to_string(n) + "," +
                             std::to_string(k) + ")");
    }
    mpz_tdiv_q_2exp(sum.get_mpz_t(), sum.get_mpz_t(), 1);
    row[k] = (n + k - 3) * row[k - 1] + (k - 1) * row[k - 2] + sum;
  }
}

NTable NTable::from_rows(std::vector<std::vector<Integer>> rows) {
  if (rows.size() < 3) throw std::invalid_argument("NTable: too few rows");
  for (std::size_t n = 2; n < rows.size(); ++n) {
    if (rows[n].size() != n) {
      throw std::invalid_argument("NTable: row " + std::to_string(n) + " has wrong length");
    }
  }
  NTable t;
  t.n_max_ = static_cast<int>(rows.size()) - 1;
  t.rows_ = std::move(rows);
  return t;
}

Integer one_component_count(int n, int k, const NTable& table) {
  if (n < 1) throw std::domain_error("one_component_count: n must be >= 1");
  if (k < 0 || k > n) throw std::domain_error("one_component_count: k out of range 0..n");
  return binomial(n, k) * table.get(n + 1, k);
}

Integer one_component_total(int n, const NTable& table) {
  Integer total = 0;
  for (int k = 0; k <= n; ++k) total += one_component_count(n, k, table);
  return total;
}

std::vector<Integer> one_component_totals(int n, const NTable& table) {
  std::vector<Integer> totals(n + 1);
  for (int i = 1; i <= n; ++i) totals[i] = one_component_total(i, table);
  return totals;
}

namespace {

std::string cell(const char* name, int n, int k) {
  std::ostringstream os;
  os << name << " fails at n=" << n << " k=" << k;
  return os.str();
}

}  // namespace

BoundsReport verify_bounds(int n_max, const NTable& table) {
  if (table.n_max() < n_max + 1) {
    throw std::invalid_argument("verify_bounds: table must be built to n_max + 1");
  }
  BoundsReport rep;
  auto fail = [&rep](std::string msg) {
    if (rep.passed) {
      rep.passed = false;
      rep.first_failure = std::move(msg);
    }
  };

  for (int n = 2; n <= n_max; ++n) {
    // recurrence-derived bounds on N_n^(k), compared as 2x both sides
    for (int k = 2; k <= n - 1 && rep.passed; ++k) {
      Integer lhs = 2 * table.get(n, k);
      Integer low = 2 * (n + k - 3) * table.get(n, k - 1) + (k - 1) * table.get(n, k - 2);
      Integer high = low + (k - 1) * table.get(n - 1, k - 2);
      ++rep.checks_run;
      if (lhs < low) fail(cell("lower bound on N", n, k));
      if (lhs > high) fail(cell("upper bound on N", n, k));
    }
    // cross-n growth: 2 N_n^(k) >= (2n+2k-5) N_{n-1}^(k)
    for (int k = 0; k <= n - 2 && rep.passed; ++k) {
      ++rep.checks_run;
      if (2 * table.get(n, k) < (2 * n + 2 * k - 5) * table.get(n - 1, k)) {
        fail(cell("cross-n growth of N", n, k));
      }
    }
  }

  for (int n = 2; n <= n_max && rep.passed; ++n) {
    std::vector<Integer> gic(n + 1), gic_prev(n);
    for (int k = 0; k <= n; ++k) gic[k] = one_component_count(n, k, table);
    for (int k = 0; k <= n - 1; ++k) gic_prev[k] = one_component_count(n - 1, k, table);

    // growth in k: (k+1) 1-GN_{n,k+1} >= (n-k)(n+k-1) 1-GN_{n,k}
    for (int k = 0; k <= n - 1 && rep.passed; ++k) {
      ++rep.checks_run;
      if ((k + 1) * gic[k + 1] < Integer(n - k) * (n + k - 1) * gic[k]) {
        fail(cell("growth of 1-GN in k", n, k));
      }
    }
    // upper bound: 1-GN_{n,k} (2n-2)! <= C(n,k) (n+k-2)! 1-GN_{n,n}
    Integer f2n = factorial(2 * n - 2);
    for (int k = 0; k <= n && rep.passed; ++k) {
      ++rep.checks_run;
      if (gic[k] * f2n > binomial(n, k) * factorial(n + k - 2) * gic[n]) {
        fail(cell("upper bound on 1-GN", n, k));
      }
    }
    // growth in n: 2(n-k) 1-GN_{n,k} >= n(2n+2k-3) 1-GN_{n-1,k}
    for (int k = 0; k <= n - 1 && rep.passed; ++k) {
      ++rep.checks_run;
      if (2 * (n - k) * gic[k] < Integer(n) * (2 * n + 2 * k - 3) * gic_prev[k]) {
        fail(cell("growth of 1-GN in n", n, k));
      }
    }
  }
  return rep;
}

}  // namespace galled
