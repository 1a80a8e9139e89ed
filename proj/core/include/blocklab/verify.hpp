// End-to-end verification driver: runs every machine-checkable structural
// claim over a block spec (and the built-in catalog), optionally emitting
// the JSON reports.
#pragma once

#include "blocklab/spec_io.hpp"

namespace blocklab {

struct VerifyOptions {
  std::string out_dir = "reports";
  bool write_reports = true;
  int jobs = 1;
  uint64_t seed = 1;
  int max_irr = 6;          // self-isometry enumeration bound inside verify
  long scan_budget = 200000;
  int radical_samples = 100;
  int triple_samples = 1000;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  bool skipped = false;
  std::string detail;
  double millis = 0;
};

struct VerifyRun {
  std::vector<CheckResult> checks;
  bool all_passed() const {
    for (const auto& c : checks)
      if (!c.passed && !c.skipped) return false;
    return true;
  }
};

// structural checks + reports for one block
VerifyRun verify_block(const BlockSpec& spec, const VerifyOptions& opt);
// catalog-wide checks (cyclotomic identities, action battery, aut orders,
// radical powers over the group catalog)
VerifyRun verify_global(const VerifyOptions& opt);

// deterministic sparse random element for property tests
QciAlgebra::Elem random_qci_element(const QciAlgebra& a, uint64_t& state);

// 500-sample radical power check for one group (throws on falsification)
void radical_power_suite(const AbelianPGroup& P, int samples, uint64_t seed);

}  // namespace blocklab
