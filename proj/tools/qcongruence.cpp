// qcongruence: batch driver for the exact congruence, identity, modular form
// and supercongruence checks.
//
//   qcongruence verify theorem --id 3.1 --n-range 3:25
//   qcongruence verify conjecture --id 4.1 --n-range 3:99 --r-max 3
//   qcongruence verify problem --id 3.6 --n-range 7:199
//   qcongruence verify identity --id chu_vandermonde --params n=6,a=3,c=5
//   qcongruence scan residue --series S5 --n-range 3:99 --power 1
//   qcongruence modform --form f1 --limit 100 --check-closed-form
//   qcongruence supercong --id B2 --p-range 3:499
//   qcongruence numeric --id all
//
// Exit status: 0 when nothing failed or was undefined, 1 otherwise, 2 on a
// usage error.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

#include "qcong/driver.hpp"
#include "qcong/error.hpp"

namespace {

struct CommonFlags {
  std::string format = "text";
  int jobs = 0;
  std::string cache;
  bool force = false;
  bool serial = false;
};

void add_common(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--format", f.format, "Output format: json, csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  cmd->add_option("--jobs", f.jobs, "Worker threads (default: logical CPUs)")->check(CLI::NonNegativeNumber);
  cmd->add_option("--cache", f.cache, "JSON-lines result cache (default: $QCONG_CACHE)");
  cmd->add_flag("--force", f.force, "Recompute even cached passes");
  cmd->add_flag("--serial", f.serial, "Use the serial reference runner");
}

void add_n_range(CLI::App* cmd, std::string& target) {
  cmd->add_option("--n-range", target, "Range of n, A:B")->required();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of q-congruences, identities and supercongruences"};
  app.require_subcommand(1);

  qcong::TaskSpec task;
  CommonFlags common;
  std::string n_range, p_range;
  std::vector<std::string> params;

  CLI::App* verify = app.add_subcommand("verify", "Check theorems, conjectures, problems or identities");
  verify->require_subcommand(1);

  CLI::App* theorem = verify->add_subcommand("theorem", "Cyclotomic congruence theorems");
  theorem->add_option("--id", task.id, "3.1, 3.2, 3.2a, 3.3, 3.4, 3.5, 4.14 or obs")->required();
  add_n_range(theorem, n_range);
  theorem->add_option("--reading", task.reading, "Reading of the observation: divisors or all_below")
      ->check(CLI::IsMember({"divisors", "all_below"}));

  CLI::App* conjecture = verify->add_subcommand("conjecture", "Conjectured congruences");
  conjecture->add_option("--id", task.id, "4.1 or 4.2")->required();
  add_n_range(conjecture, n_range);
  conjecture->add_option("--r-max", task.r_max, "Largest r");

  CLI::App* problem = verify->add_subcommand("problem", "Vanishing asked about in the open problem");
  problem->add_option("--id", task.id, "3.6")->required();
  add_n_range(problem, n_range);

  CLI::App* identity = verify->add_subcommand("identity", "Exact or coefficientwise identity checks");
  identity->add_option("--id", task.id, "Identity name")->required();
  identity->add_option("--order", task.order, "Series order for product identities");
  identity->add_option("--params", params, "Parameters k=v,...")->delimiter(',');

  CLI::App* scan = app.add_subcommand("scan", "Tabulate values");
  scan->require_subcommand(1);
  CLI::App* residue = scan->add_subcommand("residue", "Canonical residues of a truncated sum mod Phi_n^k");
  residue->add_option("--series", task.id, "Preset name (S1..S10) or TermSpec JSON")->required();
  add_n_range(residue, n_range);
  residue->add_option("--power", task.power, "Exponent k of Phi_n");
  residue->add_option("--upper", task.upper_rule, "Truncation: n-1 or (n-1)/2");

  CLI::App* modform = app.add_subcommand("modform", "Eta-product coefficients");
  modform->add_option("--form", task.id, "f1 or f2")->required();
  modform->add_option("--limit", task.limit, "Number of coefficients");
  modform->add_flag("--check-closed-form", task.check_closed_form, "Compare a(p) with the closed form at odd primes");
  modform->add_option("--l-value", task.l_value_s, "Report L(f, s) (advisory)");

  CLI::App* supercong = app.add_subcommand("supercong", "p-adic supercongruences");
  supercong->add_option("--id", task.id, "B2, A2, cong2 or gamma")->required();
  supercong->add_option("--p-range", p_range, "Range of p, A:B")->required();

  CLI::App* numeric = app.add_subcommand("numeric", "Archimedean evaluations");
  numeric->add_option("--id", task.id, "bauer, H1, H2, Lchi4 or all")->required();

  struct Leaf {
    CLI::App* cmd;
    qcong::TaskKind kind;
  };
  const std::vector<Leaf> leaves = {{theorem, qcong::TaskKind::theorem},     {conjecture, qcong::TaskKind::conjecture},
                                    {problem, qcong::TaskKind::problem},     {identity, qcong::TaskKind::identity},
                                    {residue, qcong::TaskKind::scan},        {modform, qcong::TaskKind::modform},
                                    {supercong, qcong::TaskKind::supercong}, {numeric, qcong::TaskKind::numeric}};
  for (const auto& leaf : leaves) add_common(leaf.cmd, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  qcong::RunOptions opts;
  opts.threads = common.jobs;
  opts.force = common.force;
  opts.serial = common.serial;
  if (!common.cache.empty()) {
    opts.cache_path = common.cache;
  } else if (const char* env = std::getenv("QCONG_CACHE"); env && *env) {
    opts.cache_path = env;
  }

  qcong::RunReport report;
  try {
    for (const auto& leaf : leaves) {
      if (leaf.cmd->parsed()) task.kind = leaf.kind;
    }
    if (!n_range.empty()) task.n_range = qcong::parse_range(n_range);
    if (!p_range.empty()) task.p_range = qcong::parse_range(p_range);
    for (const auto& kv : params) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos || eq == 0) throw qcong::Error(qcong::ErrorKind::InvalidArgument, "bad --params entry '" + kv + "'");
      std::size_t used = 0;
      const std::string value = kv.substr(eq + 1);
      long v = 0;
      try {
        v = std::stol(value, &used);
      } catch (const std::logic_error&) {
        used = 0;
      }
      if (used == 0 || used != value.size()) {
        throw qcong::Error(qcong::ErrorKind::InvalidArgument, "bad --params value '" + kv + "'");
      }
      task.params[kv.substr(0, eq)] = v;
    }
    report = qcong::run(task, opts, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }

  qcong::emit(report, qcong::format_from_string(common.format), std::cout);
  return report.exit_code();
}
