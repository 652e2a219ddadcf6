#pragma once

#include "gfc/config.hpp"

namespace gfc {

// One randomized-or-structural identity check, for the check subcommand.
// Every assertion is an exact zero-polynomial statement; detail carries the
// first witness on failure.
struct CheckOutcome {
  std::string name;
  enum class Status { pass, fail, skipped } status;
  std::string detail;
};

// Fixed-order suite: algebra validation, d after d, Bianchi, the evaluation
// (Leibniz) identity, jet/curvature consistency with roundtrip, the reduced
// map composition against its frozen coordinate formula, and the symmetric-
// part counterexample (skipped for abelian algebras, where the claim holds).
std::vector<CheckOutcome> run_identity_suite(const ProblemConfig& cfg);

}  // namespace gfc
