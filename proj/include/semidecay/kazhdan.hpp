#pragma once

// Kazhdan constants for the pair (G x| V, V).

#include "semidecay/exponents.hpp"
#include "semidecay/hcfun.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace semidecay {

/// sqrt(2(1-x)) / (sqrt(2(1-x)) + 3) for x = Xi^{1/m} in (0, 1]. Throws InvalidXi.
double kappa(double xi_pow);

/// sqrt(2) / (sqrt(2) + 3), the supremum of kappa (never attained).
double kappa_supremum();

/// min(kappas) / sqrt(N). Throws InvalidInput on an empty list or N != size.
double pair_constant(const std::vector<double>& kappas, int n_components);
double pair_constant(const std::vector<double>& kappas);

struct KazhdanReport {
  Rational p;
  Integer m;
  std::string mechanism;  // "shell_improvement" or "baseline"
  HCEstimate xi;
  double xi_pow = 0;
  double kappa = 0;
};

/// improved exponent (falling back to baseline) -> m, Xi(h) -> kappa(Xi(h)^{1/m}).
/// Throws TrivialElement when h lies in K.
KazhdanReport kazhdan_for_set(const GroupSpec& group, RepKind rep, const CartanPoint& h, long n_samples,
                              std::uint64_t seed);

/// Index of the factor with the smallest p (first one on ties).
std::size_t select_factor(const std::vector<ExponentReport>& factors);

}  // namespace semidecay
