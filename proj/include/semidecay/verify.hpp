#pragma once

// Structural invariant suites over a catalog: "catalog", "lattice", "exponents", "kazhdan".

#include "semidecay/catalog.hpp"

#include <string>
#include <vector>

namespace semidecay {

struct InvariantResult {
  std::string suite;
  std::string name;     // e.g. "weight-sum-zero", "delta_B cross-check"
  std::string subject;  // group / representation it was checked on
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<InvariantResult> results;

  bool passed() const;
  const InvariantResult* first_failure() const;
};

std::vector<std::string> verify_suites();

/// Runs the named suites (all of them when `only` is empty). Throws InvalidInput on an unknown suite.
VerifyReport run_verify(const Catalog& catalog, const std::vector<std::string>& only = {});

}  // namespace semidecay
