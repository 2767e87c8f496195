// Acceptance suite: each criterion prints exactly one [PASS]/[FAIL] line.
// Run all criteria (no arguments) or a single one with --only N.
// Exit code 0 iff every executed criterion passed.

#include <cstring>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "support/oracles.hpp"
#include "zagdom/zagdom.hpp"

namespace {

using namespace zagdom;

int worker_count() {
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 2 : static_cast<int>(hw);
}

// --- criterion 1: domination DP == brute force on every tree up to n = 12 ----

bool criterion_domination_oracle(std::string& detail) {
  long long checked = 0;
  for (int n = 2; n <= 12; ++n) {
    for (const Tree& t : enumerate_trees(n)) {
      ++checked;
      if (domination_number(t).gamma != gamma_bruteforce(t)) {
        detail = "mismatch on " + to_parent_line(t);
        return false;
      }
    }
  }
  if (checked != 986) {  // sum of free-tree counts for n = 2..12
    detail = "expected 986 trees, enumerated " + std::to_string(checked);
    return false;
  }
  detail = "DP == bruteforce on all " + std::to_string(checked) + " trees, n=2..12";
  return true;
}

// --- criterion 2: enumeration matches the naive Prüfer-dedup oracle ----------

bool criterion_enumeration_oracle(std::string& detail) {
  const std::map<int, long long> expected_counts = {{4, 2}, {7, 11}, {10, 106}};
  for (int n = 2; n <= 10; ++n) {
    auto oracle = oracles::prufer_dedup_oracle(n, worker_count());
    std::set<std::uint64_t> stream_packed;
    std::set<std::string> stream_codes;
    for (const Tree& t : enumerate_trees(n)) {
      stream_packed.insert(oracles::packed_canonical_code(t));
      stream_codes.insert(canonical_code(t).str());
    }
    std::set<std::uint64_t> oracle_packed(oracle.codes.begin(), oracle.codes.end());
    if (stream_packed != oracle_packed) {
      detail = "packed code sets differ at n=" + std::to_string(n);
      return false;
    }
    std::set<std::string> oracle_codes;
    for (const Tree& t : oracle.representatives) oracle_codes.insert(canonical_code(t).str());
    if (stream_codes != oracle_codes) {
      detail = "canonical code sets differ at n=" + std::to_string(n);
      return false;
    }
    auto it = expected_counts.find(n);
    if (it != expected_counts.end() &&
        static_cast<long long>(stream_codes.size()) != it->second) {
      detail = "count at n=" + std::to_string(n) + " is " + std::to_string(stream_codes.size()) +
               ", expected " + std::to_string(it->second);
      return false;
    }
  }
  detail = "stream == oracle for n=2..10; counts at n=4,7,10 are 2,11,106";
  return true;
}

// --- shared sweep for criteria 3-5 -------------------------------------------

const VerificationReport& sweep_report() {
  static VerificationReport report = [] {
    RunConfig cfg;
    cfg.n_min = 2;
    cfg.n_max = 14;
    cfg.jobs = worker_count();
    cfg.thm43 = Thm43Policy::kBoth;
    return verify(cfg);
  }();
  return report;
}

bool criterion_theorem3(std::string& detail) {
  const auto& report = sweep_report();
  for (const auto& v : report.violations) {
    if (v.tag == TheoremTag::kPi1Lower || v.tag == TheoremTag::kPi2Upper) {
      detail = "violation: " + v.detail + " on " + v.tree;
      return false;
    }
  }
  for (const auto& cell : report.cells) {
    if (!cell.min_pi1_attains_bound || !cell.min_pi1_attainers_are_T ||
        !cell.max_pi2_attains_bound || !cell.max_pi2_attainers_are_T) {
      detail = "equality attainment not exactly {T(n,gamma)} in cell (" + std::to_string(cell.n) +
               "," + std::to_string(cell.gamma) + ")";
      return false;
    }
  }
  detail = "0 violations, attainers == {T(n,gamma)} in all " + std::to_string(report.cells.size()) +
           " cells, n<=14";
  return true;
}

bool criterion_theorem41_43(std::string& detail) {
  const auto& report = sweep_report();
  int le_cells = 0;
  bool printed_fails_somewhere = false;
  for (const auto& v : report.violations) {
    if (v.tag == TheoremTag::kPi1Upper || v.tag == TheoremTag::kPi2Lower) {
      detail = "violation: " + v.detail + " on " + v.tree;
      return false;
    }
  }
  for (const auto& cell : report.cells) {
    if (cell.upper_regime != Regime::kGammaLeThird) continue;
    ++le_cells;
    if (!cell.max_pi1_attains_bound || !cell.max_pi1_attainers_match_family ||
        !cell.min_pi2_attains_bound || !cell.min_pi2_attainers_match_family) {
      detail = "attainers != D members in cell (" + std::to_string(cell.n) + "," +
               std::to_string(cell.gamma) + ")";
      return false;
    }
    if (!cell.thm43_consistent_matches_family) {
      detail = "degree-consistent pi2 bound misses D members in cell (" + std::to_string(cell.n) +
               "," + std::to_string(cell.gamma) + ")";
      return false;
    }
    if (!cell.thm43_printed_matches_family) printed_fails_somewhere = true;
  }
  if (!printed_fails_somewhere) {
    detail = "exponent adjudication inconclusive: both variants match every cell";
    return false;
  }
  detail = "0 violations; attainers == D members in all " + std::to_string(le_cells) +
           " gamma<=n/3 cells; adjudication selects the degree-consistent exponent uniquely";
  return true;
}

bool criterion_theorem42_44(std::string& detail) {
  const auto& report = sweep_report();
  int mid_cells = 0, ceil_cells = 0;
  for (const auto& cell : report.cells) {
    if (cell.upper_regime == Regime::kGammaMid) {
      ++mid_cells;
      // Every attainer must be an L member (the harness compared against the
      // full filtered-enumeration family).
      if (!cell.max_pi1_attains_bound || !cell.max_pi1_attainers_match_family ||
          !cell.min_pi2_attains_bound || !cell.min_pi2_attainers_match_family) {
        detail = "attainers not the L members in cell (" + std::to_string(cell.n) + "," +
                 std::to_string(cell.gamma) + ")";
        return false;
      }
    } else if (cell.upper_regime == Regime::kGammaCeilThird) {
      ++ceil_cells;
      BigNat expected = big_pow(4, static_cast<unsigned long long>(cell.n - 2));
      std::string path_code = canonical_code(path_tree(cell.n)).str();
      bool path_attains_max =
          std::find(cell.attainers_max_pi1.begin(), cell.attainers_max_pi1.end(), path_code) !=
          cell.attainers_max_pi1.end();
      bool path_attains_min =
          std::find(cell.attainers_min_pi2.begin(), cell.attainers_min_pi2.end(), path_code) !=
          cell.attainers_min_pi2.end();
      if (cell.max_pi1 != expected || cell.min_pi2 != expected || !path_attains_max ||
          !path_attains_min) {
        detail = "4^(n-2) not attained at P_n in cell (" + std::to_string(cell.n) + "," +
                 std::to_string(cell.gamma) + ")";
        return false;
      }
    }
  }
  // Spot cells from independent hand derivations.
  for (const auto& cell : report.cells) {
    if (cell.n == 6 && cell.gamma == 3) {
      if (cell.max_pi1 != 144 || cell.min_pi2 != 432) {
        detail = "cell (6,3) spot values wrong";
        return false;
      }
    }
    if (cell.n == 9 && cell.gamma == 3) {
      std::string p9 = canonical_code(path_tree(9)).str();
      if (cell.max_pi1 != 16384 ||
          cell.attainers_max_pi1 != std::vector<std::string>{p9}) {
        detail = "cell (9,3) spot values wrong";
        return false;
      }
    }
  }
  detail = "0 violations; L membership holds in all " + std::to_string(mid_cells) +
           " mid-range cells; P_n attains 4^(n-2) in all " + std::to_string(ceil_cells) +
           " ceil(n/3) cells; spot cells (6,3), (9,3) match";
  return true;
}

// --- criterion 6: pendant-vertex lemma over the qualifying sweep -------------

bool criterion_pendant_lemma(std::string& detail) {
  long long checked = 0;
  for (int n = 2; n <= 14; ++n) {
    for (const Tree& t : enumerate_trees(n)) {
      bool degrees_ok = true;
      for (int v = 0; v < n && degrees_ok; ++v) degrees_ok = t.degree(v) <= 3;
      if (!degrees_ok) continue;
      int gamma = domination_number(t).gamma;
      if (3 * gamma < n + 3 || 2 * gamma > n) continue;
      ++checked;
      if (!check_pendant_lemma(t)) {
        detail = "lemma fails on " + to_parent_line(t);
        return false;
      }
    }
  }
  detail = "n1 >= 3*gamma - n (strict under double pendants) on all " + std::to_string(checked) +
           " qualifying trees, n<=14";
  return true;
}

// --- criterion 7: exact monotonicity sweep -----------------------------------

bool criterion_monotonicity(std::string& detail) {
  std::vector<MonotonicitySample> samples;
  for (long long m = 1; m <= 10; ++m) {
    for (long long x = 1; x <= 50; ++x) samples.push_back({x, m});
  }
  if (!check_monotonicity_props(samples)) {
    detail = "a comparison failed in the grid sweep";
    return false;
  }
  detail = "f strictly increasing, g strictly decreasing over x=1..50, m=1..10, exact arithmetic";
  return true;
}

// --- criterion 8: exactness of the big-integer computations ------------------

bool criterion_exactness(std::string& detail) {
  std::string via_indices = to_decimal(pi2(star_tree(64)));
  std::string via_squaring = oracles::DecimalBig::pow(63, 63).str();
  if (via_indices != via_squaring) {
    detail = "pi2(K_{1,63}) != 63^63 by repeated squaring";
    return false;
  }
  for (int n = 2; n <= 12; ++n) {
    for (const Tree& t : enumerate_trees(n)) {
      if (pi2(t) != pi2_vertex_form(t)) {
        detail = "edge form != vertex form on " + to_parent_line(t);
        return false;
      }
    }
  }
  std::mt19937_64 rng(20250810);
  for (int trial = 0; trial < 1000; ++trial) {
    int n = 2 + static_cast<int>(rng() % 199);
    Tree t = oracles::random_labeled_tree(n, rng);
    if (pi2(t) != pi2_vertex_form(t)) {
      detail = "edge form != vertex form on a random tree of order " + std::to_string(n);
      return false;
    }
  }
  detail = "pi2(K_{1,63}) == 63^63 (" + std::to_string(via_squaring.size()) +
           " digits); edge==vertex form on all trees n<=12 and 1000 random trees n<=200";
  return true;
}

// --- criterion 9: byte-identical reports across worker counts ----------------

bool criterion_determinism(std::string& detail) {
  RunConfig cfg;
  cfg.n_min = 2;
  cfg.n_max = 12;
  cfg.jobs = 1;
  auto one = verify(cfg);
  cfg.jobs = 8;
  auto eight = verify(cfg);
  if (to_json(one) != to_json(eight) || to_csv(one) != to_csv(eight)) {
    detail = "reports differ between 1 and 8 workers";
    return false;
  }
  detail = "verify over n<=12 is byte-identical with 1 and 8 workers (json and csv)";
  return true;
}

struct Criterion {
  int id;
  std::string title;
  std::function<bool(std::string&)> run;
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) only = std::atoi(argv[i + 1]);
  }
  std::vector<Criterion> criteria = {
      {1, "domination oracle equivalence", criterion_domination_oracle},
      {2, "enumeration vs Prüfer-dedup oracle", criterion_enumeration_oracle},
      {3, "pi1 lower / pi2 upper bounds with unique extremal tree", criterion_theorem3},
      {4, "pi1 upper / pi2 lower bounds, gamma <= n/3 regime", criterion_theorem41_43},
      {5, "pi1 upper / pi2 lower bounds, mid-gamma regime", criterion_theorem42_44},
      {6, "pendant-vertex lemma sweep", criterion_pendant_lemma},
      {7, "monotonicity of x/(x+m) and x^x/(x+m)^(x+m)", criterion_monotonicity},
      {8, "exact arithmetic cross-checks", criterion_exactness},
      {9, "deterministic parallel verification", criterion_determinism},
  };
  bool all_pass = true;
  for (const auto& c : criteria) {
    if (only != 0 && c.id != only) continue;
    std::string detail;
    bool pass = false;
    try {
      pass = c.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    all_pass = all_pass && pass;
    std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << c.id << " (" << c.title
              << "): " << detail << "\n";
  }
  return all_pass ? 0 : 1;
}
