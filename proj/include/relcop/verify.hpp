#pragma once

#include <string>
#include <vector>

namespace relcop {

struct CheckResult {
  int criterion = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyOptions {
  std::string scope = "all";
  int jobs = 1;
  std::string appendix_path = "appendix_order7_bicyclic.txt";
};

// Runs the verify-paper reproduction suite. Scope "all" runs everything;
// otherwise one of: table1, closed-forms, pivot, chordal-iff, umr-unicyclic,
// umr-bicyclic, no-umr, dominance-lemmas, copwin-oracle, disk, conjecture-h,
// appendix.
std::vector<CheckResult> run_paper_checks(const VerifyOptions& opts);

const std::vector<std::string>& verify_scopes();

}  // namespace relcop
