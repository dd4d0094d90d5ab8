#pragma once

#include <string>
#include <vector>

#include "centsplit/frobenius.hpp"
#include "centsplit/lifting.hpp"

namespace centsplit {

// One mechanically checked identity instance.
struct CheckRecord {
  std::string key;
  bool pass;
};

struct SuiteResult {
  std::string name;
  std::vector<CheckRecord> checks;  // sorted by key

  bool passed() const;
  long long failures() const;
};

// The catalog of quasi-simple simply connected types driven by the suites.
std::vector<std::string> catalog_types();

// All alcove points whose Kac labels <alpha_i, lambda> have denominator
// <= max_denominator, together with all alcove vertices and 0.
std::vector<VecQ> alcove_lambda_grid(const RootDatum& R, int max_denominator);

// Suites: "adams-vogan", "involution", "flat", "braid", "theorem1",
// "c-matrix", "theorem2".
std::vector<std::string> available_suites();
SuiteResult run_suite(const std::string& name, unsigned seed,
                      Int oracle_limit = Int(51840));
std::vector<SuiteResult> run_suites(const std::string& selector, unsigned seed,
                                    Int oracle_limit = Int(51840));

}  // namespace centsplit
