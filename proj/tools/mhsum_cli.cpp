// Command-line front end for the mhsum verification library.
//
//   mhsum verify <classical|q|connector|fmzv> [options]   run one statement group
//   mhsum sweep [options]                                  run every statement
//   mhsum show dual <index>                                print the dual index
//                                                          and its transport chain
//
// Options may come from a config file (--config, flat key = value) with
// command-line flags taking precedence.  --report writes the full case list as
// JSON or CSV; the process exits nonzero iff any case FAILs.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mhsum/connect.hpp"
#include "mhsum/index.hpp"
#include "mhsum/report.hpp"
#include "mhsum/sweep.hpp"

namespace {

struct CliOptions {
  std::string config_path;
  int max_weight = 0;
  int max_e = 0;
  int max_N = 0;
  int order = 0;
  std::string q_list;
  std::string primes_list;
  std::string only_list;
  std::string report_path;
  std::string format = "json";

  CLI::Option* config_opt = nullptr;
  CLI::Option* max_weight_opt = nullptr;
  CLI::Option* max_e_opt = nullptr;
  CLI::Option* max_N_opt = nullptr;
  CLI::Option* order_opt = nullptr;
  CLI::Option* q_opt = nullptr;
  CLI::Option* primes_opt = nullptr;
  CLI::Option* only_opt = nullptr;

  void attach(CLI::App* cmd) {
    config_opt = cmd->add_option("--config", config_path,
                                 "Config file (key = value; flags win)");
    max_weight_opt =
        cmd->add_option("--max-weight", max_weight, "Largest index weight swept");
    max_e_opt = cmd->add_option("--max-e", max_e, "Largest shift total swept");
    max_N_opt = cmd->add_option("--max-N", max_N, "Largest truncation level swept");
    order_opt = cmd->add_option("--order", order, "Series truncation order");
    q_opt = cmd->add_option("--q", q_list,
                            "Comma-separated rational q samples in (0,1)");
    primes_opt = cmd->add_option("--primes", primes_list, "Comma-separated primes");
    only_opt = cmd->add_option("--only", only_list,
                               "Comma-separated statement ids to run");
    cmd->add_option("--report", report_path, "Write the full case report here");
    cmd->add_option("--format", format, "Report format")
        ->check(CLI::IsMember({"json", "csv"}));
  }

  mhsum::SweepConfig build() const {
    mhsum::SweepConfig cfg;
    if (config_opt->count() > 0) cfg = mhsum::parse_config_file(config_path);
    if (max_weight_opt->count() > 0) cfg.max_weight = max_weight;
    if (max_e_opt->count() > 0) cfg.max_e = max_e;
    if (max_N_opt->count() > 0) cfg.max_N = max_N;
    if (order_opt->count() > 0) cfg.order = order;
    if (q_opt->count() > 0) {
      cfg.q_points.clear();
      for (const std::string& item : mhsum::detail::split_list(q_list))
        cfg.q_points.push_back(mhsum::Rational::from_string(item));
    }
    if (primes_opt->count() > 0) {
      cfg.primes.clear();
      for (const std::string& item : mhsum::detail::split_list(primes_list))
        cfg.primes.push_back(
            static_cast<std::uint32_t>(mhsum::detail::parse_int(item, "--primes")));
    }
    if (only_opt->count() > 0) cfg.only = mhsum::detail::split_list(only_list);
    return cfg;
  }
};

mhsum::Index parse_index_arg(std::string s) {
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')')
    s = s.substr(1, s.size() - 2);
  if (s.empty()) return mhsum::Index();
  return mhsum::Index::parse(s);
}

// Restricts cfg.only to the given group; ids requested outside it are errors.
void apply_group(mhsum::SweepConfig& cfg, const std::string& group) {
  const std::vector<std::string> ids = mhsum::group_ids(group);
  if (cfg.only.empty()) {
    cfg.only = ids;
    return;
  }
  for (const std::string& id : cfg.only)
    if (std::find(ids.begin(), ids.end(), id) == ids.end())
      throw mhsum::ConfigError("statement '" + id + "' is not in group '" + group +
                               "'");
}

int run_and_report(const mhsum::SweepConfig& cfg, const CliOptions& opts) {
  const std::vector<mhsum::VerificationReport> reports = mhsum::run_sweep(cfg);
  int pass = 0, fail = 0, skip = 0;
  for (const auto& r : reports) {
    switch (r.status) {
      case mhsum::Status::Pass: ++pass; break;
      case mhsum::Status::Fail: ++fail; break;
      case mhsum::Status::Skipped: ++skip; break;
    }
    if (r.status == mhsum::Status::Fail)
      std::cout << "FAIL " << r.identity << " [" << mhsum::params_to_string(r.params)
                << "]\n  lhs = " << r.lhs << "\n  rhs = " << r.rhs << "\n";
  }
  std::cout << reports.size() << " cases: " << pass << " passed, " << fail
            << " failed, " << skip << " skipped\n";
  if (!opts.report_path.empty()) {
    mhsum::emit_report(reports, opts.format, opts.report_path);
    std::cout << "report written to " << opts.report_path << " (" << opts.format
              << ")\n";
  }
  return fail == 0 ? 0 : 1;
}

int show_dual(const std::string& arg) {
  const mhsum::Index k = parse_index_arg(arg);
  if (k.depth() == 0) {
    std::cout << "index: ()\ndual:  ()\n";
    return 0;
  }
  std::cout << "index: " << k.to_string() << "\n";
  std::cout << "dual:  " << mhsum::hoffman_dual(k).to_string() << "\n";
  std::cout << "transport chain:\n";
  for (const mhsum::ConnState& st : mhsum::transport_chain(k))
    std::cout << "  " << st.to_string() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of multiple harmonic sum identities"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "Run one statement group");
  std::string group;
  verify->add_option("group", group, "Statement group")
      ->required()
      ->check(CLI::IsMember({"classical", "q", "connector", "fmzv"}));
  CliOptions verify_opts;
  verify_opts.attach(verify);

  auto* sweep = app.add_subcommand("sweep", "Run every registered statement");
  CliOptions sweep_opts;
  sweep_opts.attach(sweep);

  auto* show = app.add_subcommand("show", "Inspect combinatorial structures");
  show->require_subcommand(1);
  auto* dual = show->add_subcommand("dual", "Print the dual index and chain");
  std::string index_arg;
  dual->add_option("index", index_arg, "Index, e.g. (1,1,2) or 1,1,2")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify->parsed()) {
      mhsum::SweepConfig cfg = verify_opts.build();
      apply_group(cfg, group);
      return run_and_report(cfg, verify_opts);
    }
    if (sweep->parsed()) {
      return run_and_report(sweep_opts.build(), sweep_opts);
    }
    if (show->parsed() && dual->parsed()) {
      return show_dual(index_arg);
    }
  } catch (const mhsum::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
