// galled-census: exact and asymptotic enumeration of galled networks,
// one-component galled networks, and dup-trees.

#include <CLI11.hpp>
#include <cstdio>
#include <filesystem>
#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "galled_census/cache.hpp"
#include "galled_census/distributions.hpp"

namespace {

using namespace galled;

constexpr int kJointCap = 60;       // marked-EGF guard, --allow-large overrides
constexpr int kReportJointLimit = 16;  // joint-law distance in `report` up to here

// Lazily built recurrence tables, optionally backed by a cache file.
struct TableStore {
  std::string cache_path;
  std::optional<NTable> nt;
  std::optional<BTable> bt;
  bool dirty = false;

  void load() {
    if (cache_path.empty() || !std::filesystem::exists(cache_path)) return;
    CacheFile file = load_cache(cache_path);
    nt = std::move(file.n_table);
    bt = std::move(file.b_table);
  }

  NTable& need_n(int n_max) {
    n_max = std::max(n_max, 2);
    if (!nt) {
      nt = NTable::build(n_max);
      dirty = true;
    } else if (nt->n_max() < n_max) {
      nt->extend(n_max);
      dirty = true;
    }
    return *nt;
  }

  BTable& need_b(int n_max) {
    n_max = std::max(n_max, 2);
    if (!bt) {
      bt = BTable::build(n_max);
      dirty = true;
    } else if (bt->n_max() < n_max) {
      bt->extend(n_max);
      dirty = true;
    }
    return *bt;
  }

  void save() {
    if (cache_path.empty() || !dirty) return;
    CacheFile file;
    file.n_table = nt;
    file.b_table = bt;
    save_cache(cache_path, file);
  }
};

void print_int(const Integer& v) { std::printf("%s\n", v.get_str().c_str()); }

void guard_joint(int n, bool allow_large) {
  if (n > kJointCap && !allow_large) {
    throw resource_limit_error("galled joint computations above n = " +
                               std::to_string(kJointCap) +
                               " are refused by default; pass --allow-large to override");
  }
}

// ---------------------------------------------------------------- dist I/O

void dist_csv_scalar(const Pmf<int>& pmf) {
  std::printf("k,probability_num,probability_den\n");
  for (const auto& [k, c] : pmf.cells()) {
    std::printf("%d,%s,%s\n", k, c.get_str().c_str(), pmf.total().get_str().c_str());
  }
}

void dist_json_scalar(int n, const std::string& family, const Pmf<int>& pmf) {
  nlohmann::json doc;
  doc["n"] = n;
  doc["family"] = family;
  doc["total"] = pmf.total().get_str();
  auto& cells = doc["cells"] = nlohmann::json::array();
  for (const auto& [k, c] : pmf.cells()) {
    cells.push_back({{"k", k}, {"count", c.get_str()}});
  }
  std::printf("%s\n", doc.dump(1).c_str());
}

void dist_csv_joint(const Pmf<std::pair<int, int>>& pmf) {
  std::printf("j,y,probability_num,probability_den\n");
  for (const auto& [jy, c] : pmf.cells()) {
    std::printf("%d,%d,%s,%s\n", jy.first, jy.second, c.get_str().c_str(),
                pmf.total().get_str().c_str());
  }
}

void dist_json_joint(const GalledJointTable& joint) {
  nlohmann::json doc;
  doc["n"] = joint.n();
  doc["family"] = "galled";
  doc["total"] = joint.total().get_str();
  auto& cells = doc["cells"] = nlohmann::json::array();
  for (const auto& [kj, c] : joint.cells()) {
    cells.push_back({{"k", kj.first}, {"j", kj.second}, {"count", c.get_str()}});
  }
  std::printf("%s\n", doc.dump(1).c_str());
}

// ---------------------------------------------------------------- check suites

// Appendix values of N_n^(k) for n = 2..11. The (9,7) entry is the recurrence
// value; the printed table's 1,287,228,175,056 is a digit transposition (the
// recurrence value reproduces the corrected GN_9 and GN_10 exactly).
const std::vector<std::vector<const char*>> kAppendixN = {
    {"1", "0"},
    {"1", "1", "3"},
    {"3", "6", "20", "87"},
    {"15", "45", "189", "993", "6249"},
    {"105", "420", "2160", "13407", "97182", "804585"},
    {"945", "4725", "28875", "207135", "1701855", "15738765", "161685045"},
    {"10395", "62370", "442260", "3603915", "33121890", "338588685", "3808469970",
     "46726507485"},
    {"135135", "945945", "7640325", "69757065", "709428825", "7946584695", "97162333695",
     "1287228175065", "18363976595055"},
    {"2027025", "16216200", "147026880", "1487243835", "16587636030", "202099078125",
     "2669506204050", "37987475258565", "579247192040580", "9420991174195965"},
    {"34459425", "310134825", "3119591475", "34639019415", "420498508815", "5537451658725",
     "78595220899125", "1195779444849675", "19410597807225345", "334803875697765495",
     "6114381201716874975"},
};

const std::vector<const char*> kGnTable = {
    "1", "6", "240", "20502", "2868990", "589130280", "167357180970",
    "63356654623500", "31092212800634580", "19327089427089478650"};

// GN_{7,7+j-k,j} appendix table, row j = 0..5, column k = 0..7. Cell (0,4)
// carries the recurrence value 126,137,025 = C(7,3) N_8^(3); the printed
// 125,137,025 disagrees with the other appendix table by exactly 10^6.
const std::vector<std::vector<const char*>> kJoint7 = {
    {"46726507485", "26659289790", "7110362385", "1159266150", "126137025", "9287460",
     "436590", "10395"},
    {"18868231935", "20820564765", "12078633735", "3747731400", "692176275", "79858170",
     "5554395", "186795"},
    {"4976625150", "7604859780", "5995908765", "2779284375", "813268575", "145143495",
     "14794920", "686700"},
    {"960639750", "1795456530", "1708006230", "983507175", "366209550", "86543100",
     "11981970", "746235"},
    {"122089275", "260763300", "281838690", "186377625", "80515575", "22424850", "3717000",
     "281925"},
    {"7577955", "17681895", "20896785", "15181425", "7243425", "2242485", "416115", "35595"},
};

int check_tables(TableStore& store, int max_n) {
  if (max_n <= 0) max_n = 11;
  int bad = 0;
  NTable& nt = store.need_n(std::max(max_n, 11));
  for (int n = 2; n <= 11; ++n) {
    for (int k = 0; k <= n - 1; ++k) {
      Integer want(kAppendixN[n - 2][k]);
      if (nt.get(n, k) != want) {
        ++bad;
        std::printf("FAIL N(%d,%d) = %s, expected %s\n", n, k, nt.get(n, k).get_str().c_str(),
                    want.get_str().c_str());
      }
    }
  }
  std::printf("%s N table n=2..11 (65 cells)\n", bad ? "FAIL" : "ok");
  int gn_bad = 0;
  int top = std::min(max_n, 10);
  store.need_n(top + 1);
  for (int n = 1; n <= top; ++n) {
    Integer want(kGnTable[n - 1]);
    Integer got = galled_total(n, nt);
    if (got != want) {
      ++gn_bad;
      std::printf("FAIL GN_%d = %s, expected %s\n", n, got.get_str().c_str(),
                  want.get_str().c_str());
    }
  }
  std::printf("%s GN totals n=1..%d\n", gn_bad ? "FAIL" : "ok", top);
  bad += gn_bad;
  if (max_n >= 7) {
    store.need_n(8);
    GalledJointTable joint = galled_joint(7, nt);
    int joint_bad = 0;
    for (int j = 0; j <= 5; ++j) {
      for (int k = 0; k <= 7; ++k) {
        Integer want(kJoint7[j][k]);
        if (joint.count(7 + j - k, j) != want) ++joint_bad;
      }
    }
    std::printf("%s joint table n=7 (48 cells, cell j=0,k=4 = C(7,3)N_8^(3))\n",
                joint_bad ? "FAIL" : "ok");
    bad += joint_bad;
  }
  return bad ? 1 : 0;
}

int check_bounds(TableStore& store, int max_n) {
  if (max_n <= 0) max_n = 30;
  NTable& nt = store.need_n(max_n + 1);
  BoundsReport rep = verify_bounds(max_n, nt);
  std::printf("%s inequality suite to n=%d (%ld checks)%s%s\n", rep.passed ? "ok" : "FAIL",
              max_n, rep.checks_run, rep.passed ? "" : ": ", rep.first_failure.c_str());
  int bad = rep.passed ? 0 : 1;
  int top = std::min(max_n, 12);
  std::vector<Integer> totals = one_component_totals(top, nt);
  for (int n = 1; n <= top; ++n) {
    Integer L = lower_bound_L(n, nt);
    Integer G = galled_total(n, nt);
    Integer U = upper_bound_U(n, totals);
    bool ok = L <= G && G <= U;
    if (!ok) ++bad;
    std::printf("%s sandwich n=%d: L=%s GN=%s U=%s\n", ok ? "ok" : "FAIL", n,
                L.get_str().c_str(), G.get_str().c_str(), U.get_str().c_str());
  }
  return bad ? 1 : 0;
}

int check_oracle(TableStore& store, int max_n) {
  if (max_n <= 0) max_n = 6;
  int bad = 0;
  int top = std::min(max_n, 8);
  NTable& nt = store.need_n(top + 1);
  for (int n = 1; n <= top; ++n) {
    GalledJointTable a = galled_joint(n, nt);
    GalledJointTable b = brute_force_galled(n, nt);
    bool ok = a.cells() == b.cells();
    if (!ok) ++bad;
    std::printf("%s galled joint vs brute force, n=%d\n", ok ? "ok" : "FAIL", n);
  }
  int dup_top = std::min(max_n, 4);
  for (int n = 1; n <= dup_top; ++n) {
    auto free_counts = enumerate_dup_trees(n, true);
    auto all_counts = enumerate_dup_trees(n, false);
    bool ok = true;
    for (int k = 0; k <= n; ++k) {
      if (free_counts[k] != one_component_count(n, k, nt)) ok = false;
      if (all_counts[k] != dup_by_repeats(n, k, nt)) ok = false;
    }
    if (!ok) ++bad;
    std::printf("%s dup-tree enumeration vs formulas, n=%d\n", ok ? "ok" : "FAIL", n);
  }
  return bad ? 1 : 0;
}

// Reports whether GN_{n,k} rises to k = n and falls beyond; empirical only.
int check_conjecture(TableStore& store, int max_n, bool allow_large) {
  if (max_n <= 0) max_n = 10;
  guard_joint(max_n, allow_large);
  NTable& nt = store.need_n(max_n + 1);
  for (int n = 2; n <= max_n; ++n) {
    std::vector<Integer> by_k = galled_by_retic(n, nt);
    std::string note = "unimodal with peak at n";
    for (int k = 0; k < n; ++k) {
      if (by_k[k] > by_k[k + 1]) {
        note = "not increasing at k=" + std::to_string(k);
        break;
      }
    }
    for (int k = n; k < 2 * n - 2; ++k) {
      if (by_k[k] < by_k[k + 1]) {
        note = "not decreasing at k=" + std::to_string(k);
        break;
      }
    }
    std::printf("n=%d: %s\n", n, note.c_str());
  }
  return 0;  // report only
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact and asymptotic enumeration of galled networks"};
  app.require_subcommand(1);

  TableStore store;
  bool allow_large = false;
  app.add_option("--cache", store.cache_path, "JSON cache file for the recurrence tables");
  app.add_flag("--allow-large", allow_large, "override the joint-table size guard");

  int n = 0, opt_j = 0, opt_k = 0, max_n = 0;
  bool by_retic = false, joint = false, by_repeats = false;
  std::string family, format = "csv", suite;
  std::vector<int> ns;

  auto* cmd_one = app.add_subcommand("one-component", "one-component galled network counts");
  cmd_one->add_option("--n", n, "number of leaves")->required();
  cmd_one->add_flag("--by-retic", by_retic, "per reticulation count");

  auto* cmd_galled = app.add_subcommand("galled", "galled network counts");
  cmd_galled->add_option("--n", n, "number of leaves")->required();
  cmd_galled->add_flag("--joint", joint, "full (k,j) table");
  cmd_galled->add_flag("--by-retic", by_retic, "per reticulation count");

  auto* cmd_dup = app.add_subcommand("dup", "dup-tree counts");
  cmd_dup->add_option("--n", n, "number of distinct labels")->required();
  cmd_dup->add_flag("--by-repeats", by_repeats, "per repeated-label count");

  auto* cmd_fdu = app.add_subcommand("fdu", "twin-cherry-free dup-tree counts");
  cmd_fdu->add_option("--n", n, "number of distinct labels")->required();

  auto* cmd_bounds = app.add_subcommand("bounds", "L_n <= GN_n <= U_n");
  cmd_bounds->add_option("--n", n, "number of leaves")->required();

  auto* cmd_max = app.add_subcommand("max-retic", "GN_{n,2n-2} closed form");
  cmd_max->add_option("--n", n, "number of leaves")->required();

  auto* cmd_dist = app.add_subcommand("dist", "exact distribution of a reticulation statistic");
  cmd_dist->add_option("--family", family, "one-component | galled | dup")->required();
  cmd_dist->add_option("--n", n, "number of leaves / labels")->required();
  cmd_dist->add_option("--format", format, "csv | json");

  auto* cmd_asympt = app.add_subcommand("asympt", "exact vs asymptotic log counts");
  cmd_asympt->add_option("--family", family, "one-component | galled | dup | fdu | near-max")
      ->required();
  cmd_asympt->add_option("--n", n, "number of leaves / labels")->required();
  cmd_asympt->add_option("--k", opt_k, "offset below the maximum (near-max only)");

  auto* cmd_limit = app.add_subcommand("limit-pmf", "limit law P(X=j, Y=k)");
  cmd_limit->add_option("--j", opt_j, "inner reticulation count")->required();
  cmd_limit->add_option("--k", opt_k, "Y outcome (may be negative)")->required();

  auto* cmd_check = app.add_subcommand("check", "self-check suites");
  cmd_check->add_option("--suite", suite, "tables | bounds | oracle | conjecture")->required();
  cmd_check->add_option("--max-n", max_n, "largest n checked");

  auto* cmd_report = app.add_subcommand("report", "convergence diagnostics");
  cmd_report->add_option("--ns", ns, "comma-separated leaf counts")
      ->required()
      ->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return 2;
  }

  try {
    store.load();

    if (cmd_one->parsed()) {
      NTable& nt = store.need_n(n + 1);
      if (by_retic) {
        std::printf("k,count\n");
        for (int k = 0; k <= n; ++k) {
          std::printf("%d,%s\n", k, one_component_count(n, k, nt).get_str().c_str());
        }
      } else {
        print_int(one_component_total(n, nt));
      }
    } else if (cmd_galled->parsed()) {
      NTable& nt = store.need_n(n + 1);
      if (joint) {
        guard_joint(n, allow_large);
        GalledJointTable table = galled_joint(n, nt);
        std::printf("k,j,count\n");
        for (const auto& [kj, c] : table.cells()) {
          std::printf("%d,%d,%s\n", kj.first, kj.second, c.get_str().c_str());
        }
      } else if (by_retic) {
        guard_joint(n, allow_large);
        std::vector<Integer> by_k = galled_by_retic(n, nt);
        std::printf("k,count\n");
        for (std::size_t k = 0; k < by_k.size(); ++k) {
          std::printf("%zu,%s\n", k, by_k[k].get_str().c_str());
        }
      } else {
        print_int(galled_total(n, nt));
      }
    } else if (cmd_dup->parsed()) {
      if (by_repeats) {
        NTable& nt = store.need_n(n + 1);
        std::printf("k,count\n");
        for (int k = 0; k <= n; ++k) {
          std::printf("%d,%s\n", k, dup_by_repeats(n, k, nt).get_str().c_str());
        }
      } else {
        BTable& bt = store.need_b(n + 1);
        print_int(dup_total(n, bt));
      }
    } else if (cmd_fdu->parsed()) {
      NTable& nt = store.need_n(n + 1);
      print_int(fdu_total(n, nt));
    } else if (cmd_bounds->parsed()) {
      NTable& nt = store.need_n(n + 1);
      std::printf("L %s\n", lower_bound_L(n, nt).get_str().c_str());
      std::printf("GN %s\n", galled_total(n, nt).get_str().c_str());
      std::printf("U %s\n",
                  upper_bound_U(n, one_component_totals(n, nt)).get_str().c_str());
    } else if (cmd_max->parsed()) {
      print_int(galled_max_retic(n));
    } else if (cmd_dist->parsed()) {
      if (format != "csv" && format != "json") {
        std::fprintf(stderr, "unknown format: %s\n", format.c_str());
        return 2;
      }
      if (family == "one-component") {
        NTable& nt = store.need_n(n + 1);
        Pmf<int> pmf = dist_one_component(n, nt);
        format == "csv" ? dist_csv_scalar(pmf) : dist_json_scalar(n, family, pmf);
      } else if (family == "dup") {
        NTable& nt = store.need_n(n + 1);
        BTable& bt = store.need_b(n + 1);
        Pmf<int> pmf = dist_dup_repeats(n, nt, bt);
        format == "csv" ? dist_csv_scalar(pmf) : dist_json_scalar(n, family, pmf);
      } else if (family == "galled") {
        guard_joint(n, allow_large);
        NTable& nt = store.need_n(n + 1);
        GalledJointTable table = galled_joint(n, nt);
        format == "csv" ? dist_csv_joint(dist_galled_joint(table)) : dist_json_joint(table);
      } else {
        std::fprintf(stderr, "unknown family: %s\n", family.c_str());
        return 2;
      }
    } else if (cmd_asympt->parsed()) {
      double ln_exact = 0.0, ln_asym = 0.0;
      if (family == "one-component" || family == "fdu") {
        NTable& nt = store.need_n(n + 1);
        ln_exact = ln(one_component_total(n, nt));
        ln_asym = log_asym(family == "fdu" ? Family::fdu : Family::one_component, n).ln_value;
      } else if (family == "galled") {
        NTable& nt = store.need_n(n + 1);
        ln_exact = ln(galled_total(n, nt));
        ln_asym = log_asym(Family::galled, n).ln_value;
      } else if (family == "dup") {
        BTable& bt = store.need_b(n + 1);
        ln_exact = ln(dup_total(n, bt));
        ln_asym = log_asym(Family::dup, n).ln_value;
      } else if (family == "near-max") {
        NTable& nt = store.need_n(n + 1);
        ln_exact = ln(one_component_count(n, n - opt_k, nt));
        ln_asym = log_asym(Family::one_component_near_max, n, opt_k).ln_value;
      } else {
        std::fprintf(stderr, "unknown family: %s\n", family.c_str());
        return 2;
      }
      std::printf("ln_exact %.6f\n", ln_exact);
      std::printf("ln_asym %.6f\n", ln_asym);
      std::printf("gap %.6f\n", ln_exact - ln_asym);
    } else if (cmd_limit->parsed()) {
      std::printf("%.6g\n", limit_pmf_xy(opt_j, opt_k));
    } else if (cmd_check->parsed()) {
      int rc = 0;
      if (suite == "tables") {
        rc = check_tables(store, max_n);
      } else if (suite == "bounds") {
        rc = check_bounds(store, max_n);
      } else if (suite == "oracle") {
        rc = check_oracle(store, max_n);
      } else if (suite == "conjecture") {
        rc = check_conjecture(store, max_n, allow_large);
      } else {
        std::fprintf(stderr, "unknown suite: %s\n", suite.c_str());
        return 2;
      }
      store.save();
      return rc;
    } else if (cmd_report->parsed()) {
      int top = 2;
      for (int v : ns) top = std::max(top, v);
      NTable& nt = store.need_n(top + 1);
      BTable& bt = store.need_b(top + 1);
      auto rows = convergence_report(ns, nt, bt, kReportJointLimit);
      std::printf(
          "n,tv_zn_poisson,tv_joint_limit,one_component_fraction_gap,dup_fraction_gap,"
          "ln_gap_one_component,ln_gap_galled,ln_gap_dup,ln_gap_fdu\n");
      for (const auto& r : rows) {
        std::string joint_col;
        if (r.tv_joint_limit) {
          char buf[32];
          std::snprintf(buf, sizeof buf, "%.6f", *r.tv_joint_limit);
          joint_col = buf;
        }
        std::printf("%d,%.6f,%s,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f\n", r.n,
                    r.tv_one_component_poisson, joint_col.c_str(),
                    r.one_component_fraction_gap, r.dup_fraction_gap, r.ln_gap_one_component,
                    r.ln_gap_galled, r.ln_gap_dup, r.ln_gap_fdu);
      }
    }

    store.save();
  } catch (const resource_limit_error& e) {
    std::fprintf(stderr, "refused: %s\n", e.what());
    return 3;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
