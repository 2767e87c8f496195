#pragma once

#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "json.hpp"
#include "zagdom/bignat.hpp"
#include "zagdom/bounds.hpp"
#include "zagdom/canonical.hpp"
#include "zagdom/domination.hpp"
#include "zagdom/enumerate.hpp"
#include "zagdom/families.hpp"
#include "zagdom/indices.hpp"
#include "zagdom/tree.hpp"

namespace zagdom {

enum class ReportFormat { kCsv, kJson };

// Which exponent variant of the pi2 lower bound to check and report. kBoth
// checks the degree-consistent variant and adds dedicated columns recording
// which variant the extremal family actually attains.
enum class Thm43Policy { kPrinted, kConsistent, kBoth };

inline const char* to_string(Thm43Policy p) {
  switch (p) {
    case Thm43Policy::kPrinted: return "printed";
    case Thm43Policy::kConsistent: return "consistent";
    case Thm43Policy::kBoth: return "both";
  }
  return "?";
}

struct RunConfig {
  int n_min = 2;
  int n_max = 10;
  std::optional<int> gamma;  // restrict to one domination number
  int jobs = 1;
  ReportFormat format = ReportFormat::kCsv;
  std::string out_path;  // empty = caller handles output
  int cap = kDefaultEnumerationCap;
  Thm43Policy thm43 = Thm43Policy::kBoth;

  void validate() const {
    if (n_min < 2 || n_min > n_max) {
      throw DomainError("need 2 <= n_min <= n_max, got [" + std::to_string(n_min) + ", " +
                        std::to_string(n_max) + "]");
    }
    if (n_max > cap) {
      throw CapExceeded("n_max " + std::to_string(n_max) + " exceeds enumeration cap " +
                        std::to_string(cap));
    }
    if (jobs < 1) throw DomainError("jobs must be >= 1");
  }
};

struct Violation {
  int n = 0;
  int gamma = 0;
  TheoremTag tag = TheoremTag::kPi1Lower;
  std::string tree;  // parent-array form
  std::string detail;
};

// Everything the run learned about one (n, gamma) cell.
struct CellStats {
  int n = 0;
  int gamma = 0;
  long long tree_count = 0;
  BigNat min_pi1, max_pi1, min_pi2, max_pi2;
  std::vector<std::string> attainers_min_pi1, attainers_max_pi1;
  std::vector<std::string> attainers_min_pi2, attainers_max_pi2;

  BigNat pi1_lower_value, pi2_upper_value, pi1_upper_value;
  BigNat pi2_lower_value;          // active variant
  BigNat pi2_lower_printed_value;  // as-printed variant (policy = both)
  Regime upper_regime = Regime::kGeneral;

  // Equality characterization cross-checks.
  bool min_pi1_attains_bound = false;
  bool max_pi2_attains_bound = false;
  bool min_pi1_attainers_are_T = false;
  bool max_pi2_attainers_are_T = false;
  bool max_pi1_attains_bound = false;
  bool min_pi2_attains_bound = false;
  bool max_pi1_attainers_match_family = false;
  bool min_pi2_attainers_match_family = false;
  std::string extremal_family;  // "D", "P" or "L" depending on the regime

  bool thm43_consistent_matches_family = false;
  bool thm43_printed_matches_family = false;
};

struct VerificationReport {
  int n_min = 0;
  int n_max = 0;
  std::optional<int> gamma_filter;
  Thm43Policy thm43 = Thm43Policy::kBoth;
  std::vector<CellStats> cells;          // sorted by (n, gamma)
  std::vector<Violation> violations;     // sorted canonically
  std::map<int, long long> enumerated;   // trees streamed per order
  bool ok() const { return violations.empty(); }
};

namespace detail {

struct CellAgg {
  long long count = 0;
  BigNat min_pi1, max_pi1, min_pi2, max_pi2;
  std::vector<std::string> att_min_pi1, att_max_pi1, att_min_pi2, att_max_pi2;

  void add(const BigNat& p1, const BigNat& p2, const std::string& code) {
    if (count == 0) {
      min_pi1 = max_pi1 = p1;
      min_pi2 = max_pi2 = p2;
      att_min_pi1 = att_max_pi1 = {code};
      att_min_pi2 = att_max_pi2 = {code};
    } else {
      update_min(min_pi1, att_min_pi1, p1, code);
      update_max(max_pi1, att_max_pi1, p1, code);
      update_min(min_pi2, att_min_pi2, p2, code);
      update_max(max_pi2, att_max_pi2, p2, code);
    }
    ++count;
  }

  void merge(const CellAgg& other) {
    if (other.count == 0) return;
    if (count == 0) {
      *this = other;
      return;
    }
    merge_min(min_pi1, att_min_pi1, other.min_pi1, other.att_min_pi1);
    merge_max(max_pi1, att_max_pi1, other.max_pi1, other.att_max_pi1);
    merge_min(min_pi2, att_min_pi2, other.min_pi2, other.att_min_pi2);
    merge_max(max_pi2, att_max_pi2, other.max_pi2, other.att_max_pi2);
    count += other.count;
  }

 private:
  static void update_min(BigNat& best, std::vector<std::string>& att, const BigNat& v,
                         const std::string& code) {
    if (v < best) {
      best = v;
      att = {code};
    } else if (v == best) {
      att.push_back(code);
    }
  }
  static void update_max(BigNat& best, std::vector<std::string>& att, const BigNat& v,
                         const std::string& code) {
    if (v > best) {
      best = v;
      att = {code};
    } else if (v == best) {
      att.push_back(code);
    }
  }
  static void merge_min(BigNat& best, std::vector<std::string>& att, const BigNat& v,
                        const std::vector<std::string>& codes) {
    if (v < best) {
      best = v;
      att = codes;
    } else if (v == best) {
      att.insert(att.end(), codes.begin(), codes.end());
    }
  }
  static void merge_max(BigNat& best, std::vector<std::string>& att, const BigNat& v,
                        const std::vector<std::string>& codes) {
    if (v > best) {
      best = v;
      att = codes;
    } else if (v == best) {
      att.insert(att.end(), codes.begin(), codes.end());
    }
  }
};

struct WorkerResult {
  std::map<std::pair<int, int>, CellAgg> cells;
  std::vector<Violation> violations;
  long long enumerated = 0;
};

struct CellBounds {
  BigNat pi1_lower_v, pi2_upper_v, pi1_upper_v, pi2_lower_consistent, pi2_lower_printed;
  Regime regime;
};

inline CellBounds cell_bounds(int n, int gamma) {
  CellBounds b;
  b.pi1_lower_v = pi1_lower(n, gamma).value;
  b.pi2_upper_v = pi2_upper(n, gamma).value;
  auto up = pi1_upper(n, gamma);
  b.pi1_upper_v = up.value;
  b.regime = up.regime;
  b.pi2_lower_consistent = pi2_lower(n, gamma, Pi2LowerVariant::kDegreeConsistent).value;
  b.pi2_lower_printed = pi2_lower(n, gamma, Pi2LowerVariant::kAsPrinted).value;
  return b;
}

inline void run_worker(int n, int worker, int jobs, const RunConfig& cfg, WorkerResult& out) {
  TreeStream stream(n, std::nullopt, cfg.cap);
  std::map<int, CellBounds> bounds_by_gamma;
  long long index = 0;
  while (auto t = stream.next()) {
    long long my = index++;
    if (my % jobs != worker) continue;
    ++out.enumerated;
    int gamma = domination_number(*t).gamma;
    if (cfg.gamma && gamma != *cfg.gamma) continue;
    BigNat p1 = pi1(*t);
    BigNat p2 = pi2(*t);
    std::string code = canonical_code(*t).str();
    auto it = bounds_by_gamma.find(gamma);
    if (it == bounds_by_gamma.end()) it = bounds_by_gamma.emplace(gamma, cell_bounds(n, gamma)).first;
    const CellBounds& b = it->second;
    const BigNat& active_pi2_lower = (cfg.thm43 == Thm43Policy::kPrinted)
                                         ? b.pi2_lower_printed
                                         : b.pi2_lower_consistent;
    if (p1 < b.pi1_lower_v) {
      out.violations.push_back({n, gamma, TheoremTag::kPi1Lower, to_parent_line(*t),
                                "pi1 " + to_decimal(p1) + " < bound " + to_decimal(b.pi1_lower_v)});
    }
    if (p2 > b.pi2_upper_v) {
      out.violations.push_back({n, gamma, TheoremTag::kPi2Upper, to_parent_line(*t),
                                "pi2 " + to_decimal(p2) + " > bound " + to_decimal(b.pi2_upper_v)});
    }
    if (p1 > b.pi1_upper_v) {
      out.violations.push_back({n, gamma, TheoremTag::kPi1Upper, to_parent_line(*t),
                                "pi1 " + to_decimal(p1) + " > bound " + to_decimal(b.pi1_upper_v)});
    }
    if (p2 < active_pi2_lower) {
      out.violations.push_back({n, gamma, TheoremTag::kPi2Lower, to_parent_line(*t),
                                "pi2 " + to_decimal(p2) + " < bound " + to_decimal(active_pi2_lower)});
    }
    out.cells[{n, gamma}].add(p1, p2, code);
  }
}

inline std::vector<std::string> sorted_codes(std::vector<std::string> codes) {
  std::sort(codes.begin(), codes.end());
  return codes;
}

}  // namespace detail

// Exhaustively checks all four bounds over every tree in range, records
// extremal values, attainers and family memberships per (n, gamma) cell.
// Deterministic: the report is byte-identical for any worker count.
inline VerificationReport verify(const RunConfig& cfg) {
  cfg.validate();
  VerificationReport report;
  report.n_min = cfg.n_min;
  report.n_max = cfg.n_max;
  report.gamma_filter = cfg.gamma;
  report.thm43 = cfg.thm43;

  std::map<std::pair<int, int>, detail::CellAgg> cells;
  for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
    std::vector<detail::WorkerResult> results(static_cast<std::size_t>(cfg.jobs));
    if (cfg.jobs == 1) {
      detail::run_worker(n, 0, 1, cfg, results[0]);
    } else {
      std::vector<std::thread> threads;
      threads.reserve(static_cast<std::size_t>(cfg.jobs));
      for (int j = 0; j < cfg.jobs; ++j) {
        threads.emplace_back(detail::run_worker, n, j, cfg.jobs, std::cref(cfg),
                             std::ref(results[static_cast<std::size_t>(j)]));
      }
      for (auto& th : threads) th.join();
    }
    long long enumerated = 0;
    for (const auto& r : results) {
      enumerated += r.enumerated;
      for (const auto& [key, agg] : r.cells) cells[key].merge(agg);
      report.violations.insert(report.violations.end(), r.violations.begin(), r.violations.end());
    }
    report.enumerated[n] = enumerated;
  }

  std::sort(report.violations.begin(), report.violations.end(),
            [](const Violation& a, const Violation& b) {
              return std::tie(a.n, a.gamma, a.tree, a.tag) < std::tie(b.n, b.gamma, b.tree, b.tag);
            });

  for (auto& [key, agg] : cells) {
    auto [n, gamma] = key;
    CellStats cell;
    cell.n = n;
    cell.gamma = gamma;
    cell.tree_count = agg.count;
    cell.min_pi1 = agg.min_pi1;
    cell.max_pi1 = agg.max_pi1;
    cell.min_pi2 = agg.min_pi2;
    cell.max_pi2 = agg.max_pi2;
    cell.attainers_min_pi1 = detail::sorted_codes(agg.att_min_pi1);
    cell.attainers_max_pi1 = detail::sorted_codes(agg.att_max_pi1);
    cell.attainers_min_pi2 = detail::sorted_codes(agg.att_min_pi2);
    cell.attainers_max_pi2 = detail::sorted_codes(agg.att_max_pi2);

    auto b = detail::cell_bounds(n, gamma);
    cell.pi1_lower_value = b.pi1_lower_v;
    cell.pi2_upper_value = b.pi2_upper_v;
    cell.pi1_upper_value = b.pi1_upper_v;
    cell.pi2_lower_value = (cfg.thm43 == Thm43Policy::kPrinted) ? b.pi2_lower_printed
                                                                : b.pi2_lower_consistent;
    cell.pi2_lower_printed_value = b.pi2_lower_printed;
    cell.upper_regime = b.regime;

    // Theorems 3.1/3.2: unique extremal tree T(n,gamma) in every cell.
    std::string t_code = canonical_code(build_T(n, gamma)).str();
    cell.min_pi1_attains_bound = cell.min_pi1 == cell.pi1_lower_value;
    cell.max_pi2_attains_bound = cell.max_pi2 == cell.pi2_upper_value;
    cell.min_pi1_attainers_are_T = cell.attainers_min_pi1 == std::vector<std::string>{t_code};
    cell.max_pi2_attainers_are_T = cell.attainers_max_pi2 == std::vector<std::string>{t_code};

    // Theorems 4.1-4.4: regime-dependent extremal family.
    cell.max_pi1_attains_bound = cell.max_pi1 == cell.pi1_upper_value;
    cell.min_pi2_attains_bound = cell.min_pi2 == b.pi2_lower_consistent;
    std::vector<std::string> family_codes;
    BigNat family_pi2;
    bool have_family_pi2 = false;
    if (b.regime == Regime::kGammaLeThird) {
      cell.extremal_family = "D";
      for (const Tree& m : build_D_members(n, gamma)) {
        family_codes.push_back(canonical_code(m).str());
        if (!have_family_pi2) {
          family_pi2 = pi2(m);
          have_family_pi2 = true;
        }
      }
    } else if (b.regime == Regime::kGammaCeilThird) {
      cell.extremal_family = "P";
      Tree p = path_tree(n);
      family_codes.push_back(canonical_code(p).str());
      family_pi2 = pi2(p);
      have_family_pi2 = true;
    } else {
      cell.extremal_family = "L";
      for (const Tree& m : build_L_members(n, gamma, cfg.cap)) {
        family_codes.push_back(canonical_code(m).str());
        if (!have_family_pi2) {
          family_pi2 = pi2(m);
          have_family_pi2 = true;
        }
      }
    }
    std::sort(family_codes.begin(), family_codes.end());
    cell.max_pi1_attainers_match_family = cell.attainers_max_pi1 == family_codes;
    cell.min_pi2_attainers_match_family = cell.attainers_min_pi2 == family_codes;
    if (have_family_pi2) {
      cell.thm43_consistent_matches_family = family_pi2 == b.pi2_lower_consistent;
      cell.thm43_printed_matches_family = family_pi2 == b.pi2_lower_printed;
    }
    report.cells.push_back(std::move(cell));
  }
  return report;
}

// --- serialization ------------------------------------------------------------

namespace detail {

inline std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    out += c;
  }
  out += "\"";
  return out;
}

inline std::string join_codes(const std::vector<std::string>& codes) {
  std::string out;
  for (std::size_t i = 0; i < codes.size(); ++i) {
    if (i > 0) out += ";";
    out += codes[i];
  }
  return out;
}

}  // namespace detail

inline std::string to_csv(const VerificationReport& report) {
  std::ostringstream out;
  bool both = report.thm43 == Thm43Policy::kBoth;
  out << "n,gamma,tree_count,min_pi1,max_pi1,min_pi2,max_pi2,"
      << "pi1_lower,pi2_upper,pi1_upper,pi2_lower";
  if (both) out << ",pi2_lower_printed,thm43_consistent_matches_family,thm43_printed_matches_family";
  out << ",regime,extremal_family,min_pi1_attainers_are_T,max_pi2_attainers_are_T,"
      << "max_pi1_attainers_match_family,min_pi2_attainers_match_family,"
      << "attainers_min_pi1,attainers_max_pi1,attainers_min_pi2,attainers_max_pi2\n";
  for (const auto& c : report.cells) {
    out << c.n << "," << c.gamma << "," << c.tree_count << ","
        << detail::csv_quote(to_decimal(c.min_pi1)) << ","
        << detail::csv_quote(to_decimal(c.max_pi1)) << ","
        << detail::csv_quote(to_decimal(c.min_pi2)) << ","
        << detail::csv_quote(to_decimal(c.max_pi2)) << ","
        << detail::csv_quote(to_decimal(c.pi1_lower_value)) << ","
        << detail::csv_quote(to_decimal(c.pi2_upper_value)) << ","
        << detail::csv_quote(to_decimal(c.pi1_upper_value)) << ","
        << detail::csv_quote(to_decimal(c.pi2_lower_value));
    if (both) {
      out << "," << detail::csv_quote(to_decimal(c.pi2_lower_printed_value)) << ","
          << (c.thm43_consistent_matches_family ? 1 : 0) << ","
          << (c.thm43_printed_matches_family ? 1 : 0);
    }
    out << "," << to_string(c.upper_regime) << "," << c.extremal_family << ","
        << (c.min_pi1_attainers_are_T ? 1 : 0) << "," << (c.max_pi2_attainers_are_T ? 1 : 0) << ","
        << (c.max_pi1_attainers_match_family ? 1 : 0) << ","
        << (c.min_pi2_attainers_match_family ? 1 : 0) << ","
        << detail::csv_quote(detail::join_codes(c.attainers_min_pi1)) << ","
        << detail::csv_quote(detail::join_codes(c.attainers_max_pi1)) << ","
        << detail::csv_quote(detail::join_codes(c.attainers_min_pi2)) << ","
        << detail::csv_quote(detail::join_codes(c.attainers_max_pi2)) << "\n";
  }
  if (!report.violations.empty()) {
    out << "\nviolations\nn,gamma,theorem,tree,detail\n";
    for (const auto& v : report.violations) {
      out << v.n << "," << v.gamma << "," << to_string(v.tag) << ","
          << detail::csv_quote(v.tree) << "," << detail::csv_quote(v.detail) << "\n";
    }
  }
  return out.str();
}

inline nlohmann::ordered_json to_json_value(const VerificationReport& report) {
  nlohmann::ordered_json j;
  j["n_min"] = report.n_min;
  j["n_max"] = report.n_max;
  if (report.gamma_filter) {
    j["gamma_filter"] = *report.gamma_filter;
  } else {
    j["gamma_filter"] = nullptr;
  }
  j["thm43_exponent_policy"] = to_string(report.thm43);
  j["violation_count"] = report.violations.size();
  nlohmann::ordered_json cells = nlohmann::ordered_json::array();
  bool both = report.thm43 == Thm43Policy::kBoth;
  for (const auto& c : report.cells) {
    nlohmann::ordered_json cj;
    cj["n"] = c.n;
    cj["gamma"] = c.gamma;
    cj["tree_count"] = c.tree_count;
    cj["min_pi1"] = to_decimal(c.min_pi1);
    cj["max_pi1"] = to_decimal(c.max_pi1);
    cj["min_pi2"] = to_decimal(c.min_pi2);
    cj["max_pi2"] = to_decimal(c.max_pi2);
    cj["bounds"] = {{"pi1_lower", to_decimal(c.pi1_lower_value)},
                    {"pi2_upper", to_decimal(c.pi2_upper_value)},
                    {"pi1_upper", to_decimal(c.pi1_upper_value)},
                    {"pi2_lower", to_decimal(c.pi2_lower_value)}};
    if (both) {
      cj["bounds"]["pi2_lower_printed"] = to_decimal(c.pi2_lower_printed_value);
      cj["thm43_consistent_matches_family"] = c.thm43_consistent_matches_family;
      cj["thm43_printed_matches_family"] = c.thm43_printed_matches_family;
    }
    cj["regime"] = to_string(c.upper_regime);
    cj["extremal_family"] = c.extremal_family;
    cj["min_pi1_attains_bound"] = c.min_pi1_attains_bound;
    cj["max_pi2_attains_bound"] = c.max_pi2_attains_bound;
    cj["min_pi1_attainers_are_T"] = c.min_pi1_attainers_are_T;
    cj["max_pi2_attainers_are_T"] = c.max_pi2_attainers_are_T;
    cj["max_pi1_attains_bound"] = c.max_pi1_attains_bound;
    cj["min_pi2_attains_bound"] = c.min_pi2_attains_bound;
    cj["max_pi1_attainers_match_family"] = c.max_pi1_attainers_match_family;
    cj["min_pi2_attainers_match_family"] = c.min_pi2_attainers_match_family;
    cj["attainers_min_pi1"] = c.attainers_min_pi1;
    cj["attainers_max_pi1"] = c.attainers_max_pi1;
    cj["attainers_min_pi2"] = c.attainers_min_pi2;
    cj["attainers_max_pi2"] = c.attainers_max_pi2;
    cells.push_back(std::move(cj));
  }
  j["cells"] = std::move(cells);
  nlohmann::ordered_json violations = nlohmann::ordered_json::array();
  for (const auto& v : report.violations) {
    violations.push_back({{"n", v.n},
                          {"gamma", v.gamma},
                          {"theorem", to_string(v.tag)},
                          {"tree", v.tree},
                          {"detail", v.detail}});
  }
  j["violations"] = std::move(violations);
  nlohmann::ordered_json enumerated = nlohmann::ordered_json::object();
  for (const auto& [n, count] : report.enumerated) enumerated[std::to_string(n)] = count;
  j["enumerated_trees"] = std::move(enumerated);
  return j;
}

inline std::string to_json(const VerificationReport& report) {
  return to_json_value(report).dump(2) + "\n";
}

inline std::string render_report(const VerificationReport& report, ReportFormat format) {
  return format == ReportFormat::kJson ? to_json(report) : to_csv(report);
}

inline void write_report_file(const VerificationReport& report, ReportFormat format,
                              const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open report path " + path);
  out << render_report(report, format);
  if (!out) throw IoError("failed writing report to " + path);
}

// --- per-tree record and the extremal table ----------------------------------

struct ComputeRecord {
  int n = 0;
  int gamma = 0;
  BigNat m1, m2, pi1, pi2;
};

inline ComputeRecord compute_record(const Tree& t) {
  ComputeRecord r;
  r.n = t.order();
  r.gamma = domination_number(t).gamma;
  r.m1 = m1(t);
  r.m2 = m2(t);
  r.pi1 = pi1(t);
  r.pi2 = pi2(t);
  return r;
}

inline nlohmann::ordered_json to_json_value(const ComputeRecord& r) {
  return {{"n", r.n},         {"gamma", r.gamma},
          {"m1", to_decimal(r.m1)},   {"m2", to_decimal(r.m2)},
          {"pi1", to_decimal(r.pi1)}, {"pi2", to_decimal(r.pi2)}};
}

// One row per feasible gamma: extremal values, bound values, attainer counts.
inline std::string extremal_table(int n, ReportFormat format, int cap = kDefaultEnumerationCap) {
  RunConfig cfg;
  cfg.n_min = cfg.n_max = n;
  cfg.cap = cap;
  cfg.thm43 = Thm43Policy::kBoth;
  VerificationReport report = verify(cfg);
  if (format == ReportFormat::kJson) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& c : report.cells) {
      rows.push_back({{"gamma", c.gamma},
                      {"tree_count", c.tree_count},
                      {"min_pi1", to_decimal(c.min_pi1)},
                      {"max_pi1", to_decimal(c.max_pi1)},
                      {"min_pi2", to_decimal(c.min_pi2)},
                      {"max_pi2", to_decimal(c.max_pi2)},
                      {"pi1_lower", to_decimal(c.pi1_lower_value)},
                      {"pi1_upper", to_decimal(c.pi1_upper_value)},
                      {"pi2_lower", to_decimal(c.pi2_lower_value)},
                      {"pi2_upper", to_decimal(c.pi2_upper_value)},
                      {"min_pi1_attainers", c.attainers_min_pi1.size()},
                      {"max_pi1_attainers", c.attainers_max_pi1.size()},
                      {"min_pi2_attainers", c.attainers_min_pi2.size()},
                      {"max_pi2_attainers", c.attainers_max_pi2.size()}});
    }
    nlohmann::ordered_json j;
    j["n"] = n;
    j["rows"] = std::move(rows);
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "gamma,tree_count,min_pi1,max_pi1,min_pi2,max_pi2,"
      << "pi1_lower,pi1_upper,pi2_lower,pi2_upper,"
      << "min_pi1_attainers,max_pi1_attainers,min_pi2_attainers,max_pi2_attainers\n";
  for (const auto& c : report.cells) {
    out << c.gamma << "," << c.tree_count << "," << detail::csv_quote(to_decimal(c.min_pi1))
        << "," << detail::csv_quote(to_decimal(c.max_pi1)) << ","
        << detail::csv_quote(to_decimal(c.min_pi2)) << ","
        << detail::csv_quote(to_decimal(c.max_pi2)) << ","
        << detail::csv_quote(to_decimal(c.pi1_lower_value)) << ","
        << detail::csv_quote(to_decimal(c.pi1_upper_value)) << ","
        << detail::csv_quote(to_decimal(c.pi2_lower_value)) << ","
        << detail::csv_quote(to_decimal(c.pi2_upper_value)) << ","
        << c.attainers_min_pi1.size() << "," << c.attainers_max_pi1.size() << ","
        << c.attainers_min_pi2.size() << "," << c.attainers_max_pi2.size() << "\n";
  }
  return out.str();
}

}  // namespace zagdom
