// Command-line front end: exact Zagreb-type indices and domination numbers of
// trees, extremal-family construction, isomorph-free enumeration, and
// exhaustive verification of the sharp bounds.
//
// Exit codes: 0 success (and no violations), 1 verification found violations,
// 2 usage or input errors.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "zagdom/zagdom.hpp"

namespace {

int effective_cap() {
  if (const char* env = std::getenv("ZAGREB_DOM_CAP")) {
    try {
      int v = std::stoi(env);
      if (v >= 1) return v;
    } catch (const std::exception&) {
      // fall through to the default
    }
  }
  return zagdom::kDefaultEnumerationCap;
}

zagdom::Tree load_tree(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw zagdom::IoError("cannot open " + path);
  return zagdom::parse_edge_list(in);
}

zagdom::ReportFormat parse_format(const std::string& name) {
  if (name == "csv") return zagdom::ReportFormat::kCsv;
  if (name == "json") return zagdom::ReportFormat::kJson;
  throw zagdom::DomainError("unknown format " + name);
}

zagdom::Thm43Policy parse_policy(const std::string& name) {
  if (name == "printed") return zagdom::Thm43Policy::kPrinted;
  if (name == "consistent") return zagdom::Thm43Policy::kConsistent;
  if (name == "both") return zagdom::Thm43Policy::kBoth;
  throw zagdom::DomainError("unknown thm43 exponent policy " + name);
}

void print_members(const std::vector<zagdom::Tree>& members, bool all) {
  bool first = true;
  for (const auto& t : members) {
    if (!first) std::cout << "\n";
    std::cout << zagdom::to_edge_list(t);
    first = false;
    if (!all) break;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"multiplicative Zagreb indices and domination numbers of trees"};
  app.require_subcommand(1);

  std::string file;
  bool as_json = false;
  auto* compute = app.add_subcommand("compute", "indices and gamma of a tree file");
  compute->add_option("file", file, "edge-list tree file")->required();
  compute->add_flag("--json", as_json, "emit JSON");

  auto* gamma_cmd = app.add_subcommand("gamma", "domination number and witness of a tree file");
  gamma_cmd->add_option("file", file, "edge-list tree file")->required();

  std::string family;
  int cons_n = 0, cons_gamma = 0;
  bool all_members = false;
  auto* construct = app.add_subcommand("construct", "build extremal family members");
  construct->add_option("family", family, "T, D or L")->required()
      ->check(CLI::IsMember({"T", "D", "L"}));
  construct->add_option("n", cons_n, "order")->required();
  construct->add_option("gamma", cons_gamma, "domination number")->required();
  construct->add_flag("--all", all_members, "print every non-isomorphic member");

  int enum_n = 0;
  std::optional<int> enum_gamma;
  auto* enumerate = app.add_subcommand("enumerate", "stream all non-isomorphic trees");
  enumerate->add_option("n", enum_n, "order")->required();
  enumerate->add_option("--gamma", enum_gamma, "restrict to one domination number");

  zagdom::RunConfig cfg;
  std::string format_name = "csv";
  std::string policy_name = "both";
  std::string out_path;
  auto* verify_cmd = app.add_subcommand("verify", "exhaustively verify the four bounds");
  verify_cmd->add_option("--n-min", cfg.n_min, "smallest order")->required();
  verify_cmd->add_option("--n-max", cfg.n_max, "largest order")->required();
  std::optional<int> verify_gamma;
  verify_cmd->add_option("--gamma", verify_gamma, "restrict to one domination number");
  verify_cmd->add_option("--jobs", cfg.jobs, "worker count")->default_val(1);
  verify_cmd->add_option("--format", format_name, "csv or json")->default_val("csv");
  verify_cmd->add_option("--out", out_path, "report path (default stdout)");
  verify_cmd->add_option("--thm43-exponent", policy_name, "printed, consistent or both")
      ->default_val("both");

  int table_n = 0;
  std::string table_format = "csv";
  auto* extremal = app.add_subcommand("extremal", "per-gamma extremal table for one order");
  extremal->add_option("n", table_n, "order")->required();
  extremal->add_option("--format", table_format, "csv or json")->default_val("csv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  int cap = effective_cap();
  try {
    if (compute->parsed()) {
      zagdom::Tree t = load_tree(file);
      auto record = zagdom::compute_record(t);
      if (as_json) {
        std::cout << zagdom::to_json_value(record).dump() << "\n";
      } else {
        std::cout << "n=" << record.n << " gamma=" << record.gamma
                  << " m1=" << zagdom::to_decimal(record.m1)
                  << " m2=" << zagdom::to_decimal(record.m2)
                  << " pi1=" << zagdom::to_decimal(record.pi1)
                  << " pi2=" << zagdom::to_decimal(record.pi2) << "\n";
      }
    } else if (gamma_cmd->parsed()) {
      zagdom::Tree t = load_tree(file);
      auto result = zagdom::domination_number(t);
      std::cout << "gamma=" << result.gamma << " witness=";
      for (std::size_t i = 0; i < result.witness.members.size(); ++i) {
        if (i > 0) std::cout << ",";
        std::cout << result.witness.members[i];
      }
      std::cout << "\n";
    } else if (construct->parsed()) {
      if (family == "T") {
        std::cout << zagdom::to_edge_list(zagdom::build_T(cons_n, cons_gamma));
      } else if (family == "D") {
        print_members(zagdom::build_D_members(cons_n, cons_gamma), all_members);
      } else {
        print_members(zagdom::build_L_members(cons_n, cons_gamma, cap), all_members);
      }
    } else if (enumerate->parsed()) {
      zagdom::TreeStream stream(enum_n, enum_gamma, cap);
      while (auto t = stream.next()) std::cout << zagdom::to_parent_line(*t) << "\n";
    } else if (verify_cmd->parsed()) {
      cfg.gamma = verify_gamma;
      cfg.format = parse_format(format_name);
      cfg.thm43 = parse_policy(policy_name);
      cfg.cap = cap;
      cfg.out_path = out_path;
      auto report = zagdom::verify(cfg);
      if (out_path.empty()) {
        std::cout << zagdom::render_report(report, cfg.format);
      } else {
        zagdom::write_report_file(report, cfg.format, out_path);
      }
      std::cerr << (report.ok() ? "no violations\n"
                                : std::to_string(report.violations.size()) + " violations\n");
      return report.ok() ? 0 : 1;
    } else if (extremal->parsed()) {
      std::cout << zagdom::extremal_table(table_n, parse_format(table_format), cap);
    }
  } catch (const zagdom::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
