// Command-line front end: loads a block spec, runs the selected analysis and
// writes the reports. `verify-all` runs every structural check over the
// built-in catalog plus the given spec.
//
// Exit codes: 0 all checks pass, 1 spec or usage error, 2 a verification
// failure (a machine-checked structural claim failed).
#include <iostream>

#include "CLI11.hpp"
#include "blocklab/catalog.hpp"
#include "blocklab/numutil.hpp"
#include "blocklab/verify.hpp"

using namespace blocklab;

namespace {

struct CliOptions {
  std::string spec_path;
  std::string out_dir = "reports";
  std::string format = "json";
  int jobs = 1;
  uint64_t seed = 1;
  int max_irr = 6;
  long scan_budget = 200000;
};

BlockSpec resolve_spec(const CliOptions& cli) {
  BlockSpec spec = load_spec_file(cli.spec_path);
  spec.limits.seed = cli.seed;
  spec.limits.jobs = cli.jobs;
  spec.limits.max_irr = cli.max_irr;
  spec.limits.scan_budget = cli.scan_budget;
  return spec;
}

VerifyOptions to_verify_options(const CliOptions& cli) {
  VerifyOptions o;
  o.out_dir = cli.out_dir;
  o.jobs = cli.jobs;
  o.seed = cli.seed;
  o.max_irr = cli.max_irr;
  o.scan_budget = cli.scan_budget;
  return o;
}

void print_json_or_text(const CliOptions& cli, const Json& j, const std::string& text) {
  if (cli.format == "text")
    std::cout << text;
  else
    std::cout << j.dump(2) << "\n";
}

int report_run(const VerifyRun& run, const CliOptions& cli) {
  bool failed = false;
  Json j = Json::array();
  std::string text;
  for (const auto& c : run.checks) {
    if (!c.passed && !c.skipped) failed = true;
    j.push_back(Json{{"check", c.name},
                     {"status", c.skipped ? "skipped" : (c.passed ? "pass" : "FAIL")},
                     {"detail", c.detail},
                     {"millis", c.millis}});
    text += (c.skipped ? "[skip] " : (c.passed ? "[pass] " : "[FAIL] ")) + c.name +
            (c.detail.empty() ? "" : " - " + c.detail) + "\n";
  }
  print_json_or_text(cli, j, text);
  return failed ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"blocklab: block-theoretic character, isometry and basic-algebra workbench"};
  app.require_subcommand(1);

  CliOptions cli;
  app.add_option("--jobs", cli.jobs, "worker threads for enumerations")->capture_default_str();
  app.add_option("--seed", cli.seed, "seed for sampled checks")->capture_default_str();
  app.add_option("--max-irr", cli.max_irr, "bound for self-isometry enumeration")
      ->capture_default_str();
  app.add_option("--scan-budget", cli.scan_budget, "tuple budget for automorphism scans")
      ->capture_default_str();
  app.add_option("--out", cli.out_dir, "report output directory")->capture_default_str();
  app.add_option("--format", cli.format, "output format: json|text")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();

  auto add_spec_cmd = [&](const std::string& name, const std::string& desc) {
    CLI::App* sub = app.add_subcommand(name, desc);
    sub->add_option("spec", cli.spec_path, "block spec file (JSON)")->required();
    return sub;
  };

  CLI::App* cmd_action = add_spec_cmd("analyze-action", "decompose the inertial action on D");
  CLI::App* cmd_chars = add_spec_cmd("characters", "ordinary/Brauer characters of the block");
  CLI::App* cmd_dec = add_spec_cmd("decomposition", "decomposition and Cartan matrices");
  CLI::App* cmd_q = add_spec_cmd("q-matrix", "q-matrix and basic-algebra model");
  CLI::App* cmd_iso = add_spec_cmd("isometries", "enumerate perfect self-isometries");
  CLI::App* cmd_pic = add_spec_cmd("picard", "Picard structure report");
  CLI::App* cmd_verify = app.add_subcommand(
      "verify-all", "run every structural check over the catalog plus the given spec");
  cmd_verify->add_option("spec", cli.spec_path, "block spec file (JSON), optional");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (cmd_action->parsed()) {
      BlockSpec spec = resolve_spec(cli);
      Json j = action_report(spec);
      write_report(cli.out_dir + "/" + spec.name, "action.json", j);
      print_json_or_text(cli, j, j.dump(2) + "\n");
      return 0;
    }
    if (cmd_chars->parsed() || cmd_dec->parsed()) {
      BlockSpec spec = resolve_spec(cli);
      BlockData data = compute_block(spec);
      Json j = cmd_chars->parsed() ? characters_report(data) : decomposition_report(data);
      write_report(cli.out_dir + "/" + spec.name,
                   cmd_chars->parsed() ? "characters.json" : "decomposition.json", j);
      print_json_or_text(cli, j, j.dump(2) + "\n");
      return 0;
    }
    if (cmd_q->parsed()) {
      BlockSpec spec = resolve_spec(cli);
      if (!spec.inertial->one_simple_module())
        throw SpecError("block has more than one simple module");
      BlockData data = compute_block(spec);
      QMatrixData q = compute_q_matrix(data);
      QPropertyReport props = verify_q_properties(q, spec.p);
      QciAlgebra strict(spec.p, 1, q, QciMode::strict);
      ScanReport scan =
          t_invariance_scan(strict, spec.limits.scan_budget, spec.limits.seed, cli.jobs);
      Json j = qci_report(data, q, props, scan, nullptr);
      write_report(cli.out_dir + "/" + spec.name, "qci.json", j);
      print_json_or_text(cli, j, j.dump(2) + "\n");
      if (scan.t_violations != 0 || !props.all()) return 2;
      return 0;
    }
    if (cmd_iso->parsed()) {
      BlockSpec spec = resolve_spec(cli);
      BlockData data = compute_block(spec);
      IsometryGroup group = enumerate_self_isometries(data, cli.max_irr, cli.jobs);
      BlockSpec d1_spec = sub_block_spec_d1(data);
      BlockData d1_block = compute_block(d1_spec);
      Json j = isometries_report(data, d1_block, group);
      write_report(cli.out_dir + "/" + spec.name, "isometries.json", j);
      print_json_or_text(cli, j, j.dump(2) + "\n");
      return 0;
    }
    if (cmd_pic->parsed()) {
      BlockSpec spec = resolve_spec(cli);
      BlockData data = compute_block(spec);
      BlockSpec d1_spec = sub_block_spec_d1(data);
      BlockData d1_block = compute_block(d1_spec);
      IsometryGroup group;
      const IsometryGroup* gp = nullptr;
      if ((int)data.irr.size() <= cli.max_irr) {
        group = enumerate_self_isometries(data, cli.max_irr, cli.jobs);
        gp = &group;
      }
      PicardReport rep = picard_report(data, d1_block, gp);
      Json j = picard_to_json(rep);
      write_report(cli.out_dir + "/" + spec.name, "picard.json", j);
      write_file(cli.out_dir + "/" + spec.name + "/picard.txt", picard_text_summary(rep));
      print_json_or_text(cli, j, picard_text_summary(rep));
      return 0;
    }
    if (cmd_verify->parsed()) {
      VerifyOptions opt = to_verify_options(cli);
      VerifyRun all = verify_global(opt);
      std::vector<BlockSpec> specs = builtin_catalog();
      if (!cli.spec_path.empty()) specs.push_back(resolve_spec(cli));
      for (const auto& spec : specs) {
        VerifyRun r = verify_block(spec, opt);
        all.checks.insert(all.checks.end(), r.checks.begin(), r.checks.end());
      }
      return report_run(all, cli);
    }
  } catch (const VerificationError& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return 2;
  } catch (const SpecError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
