#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "commands.hpp"

using namespace fgv::cli;

namespace {

struct InputArgs {
  std::string spec_path;
  std::string F = "x^2 + y^2";
  std::string dx;
  std::string dy;
};

void add_input(CLI::App* cmd, InputArgs& in) {
  cmd->add_option("spec", in.spec_path, "problem JSON file ('-' for stdin)");
  cmd->add_option("--F", in.F, "Hamiltonian, when no spec file is given");
  cmd->add_option("--dx", in.dx, "dx coefficient of omega");
  cmd->add_option("--dy", in.dy, "dy coefficient of omega");
}

ProblemSpec resolve(const InputArgs& in) {
  if (!in.spec_path.empty()) {
    if (!in.dx.empty() || !in.dy.empty()) throw InvalidInput("give either a spec file or --dx/--dy, not both");
    return load_spec(in.spec_path);
  }
  if (in.dx.empty() && in.dy.empty()) throw InvalidInput("no problem given: pass a spec file or --dx/--dy");
  return spec_from_texts(in.F, in.dx.empty() ? "0" : in.dx, in.dy.empty() ? "0" : in.dy);
}

int emit(const CommandResult& r, const std::string& json_path, const std::string& csv_path) {
  const std::string text = r.report.dump(2) + "\n";
  if (!r.summary.empty()) std::cout << r.summary;
  if (json_path.empty()) {
    if (r.summary.empty()) std::cout << text;
  } else {
    std::ofstream(json_path) << text;
  }
  if (!csv_path.empty() && !r.samples.empty()) {
    std::ofstream csv(csv_path);
    fgv::write_csv(csv, r.samples);
  }
  if (r.report.contains("error")) {
    std::cerr << "error: " << r.report["error"]["message"].get<std::string>() << '\n';
  }
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Melnikov functions, Francoise pairs and Godbillon-Vey data for dF + eps w = 0"};
  std::string json_path, csv_path;
  bool verify_all = false;
  std::string fixtures_dir = FGV_DEFAULT_FIXTURES_DIR;
  app.add_option("--json", json_path, "write the JSON report here instead of stdout");
  app.add_option("--csv", csv_path, "write oracle samples as CSV");
  app.add_flag("--verify-all", verify_all, "run every fixture and check its expectations");
  app.add_option("--fixtures", fixtures_dir, "fixture directory for --verify-all");

  app.fallthrough();  // subcommands inherit it: --json/--csv work after the subcommand

  InputArgs mel_in, gv_in, orc_in;
  std::optional<unsigned> max_order;
  unsigned k = 0;
  std::string t_list, eps_list;
  unsigned steps = fgv::HolonomyConfig{}.step_count;

  auto* mel = app.add_subcommand("melnikov", "Melnikov functions and Francoise pairs");
  add_input(mel, mel_in);
  mel->add_option("--max-order", max_order, "number of Melnikov functions to compute");

  auto* gv = app.add_subcommand("gv", "Godbillon-Vey pairs, integrability defect, first integral");
  add_input(gv, gv_in);
  gv->add_option("--k", k, "order of the construction")->default_val(0);

  auto* orc = app.add_subcommand("oracle", "numeric displacement and Melnikov estimates");
  add_input(orc, orc_in);
  orc->add_option("--t", t_list, "comma-separated t samples");
  orc->add_option("--eps", eps_list, "comma-separated eps samples");
  orc->add_option("--steps", steps, "RK4 steps per revolution")->check(CLI::Range(100u, 100000000u));

  app.require_subcommand(0, 1);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kSuccess : kInvalidInput;
  }

  CommandResult result;
  if (verify_all) {
    result = guarded([&] { return cmd_verify_all(fixtures_dir); });
  } else if (*mel) {
    result = guarded([&] { return cmd_melnikov(resolve(mel_in), max_order); });
  } else if (*gv) {
    result = guarded([&] { return cmd_gv(resolve(gv_in), k); });
  } else if (*orc) {
    result = guarded([&] {
      OracleOptions opts;
      if (!t_list.empty()) opts.t = parse_real_list(t_list);
      if (orc->count("--eps")) opts.eps = parse_real_list(eps_list);
      opts.config.step_count = steps;
      return cmd_oracle(resolve(orc_in), opts);
    });
  } else {
    std::cout << app.help();
    return kInvalidInput;
  }
  return emit(result, json_path, csv_path);
}
