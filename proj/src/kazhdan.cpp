#include "semidecay/kazhdan.hpp"

#include "semidecay/error.hpp"

#include <algorithm>
#include <cmath>

namespace semidecay {

double kappa(double x) {
  if (!(x > 0 && x <= 1)) throw Error(Errc::invalid_xi, "Xi^{1/m} must lie in (0, 1], got " + std::to_string(x));
  const double s = std::sqrt(2 * (1 - x));
  return s / (s + 3);
}

double kappa_supremum() { return std::sqrt(2.0) / (std::sqrt(2.0) + 3); }

double pair_constant(const std::vector<double>& kappas, int n_components) {
  if (kappas.empty()) throw Error(Errc::invalid_input, "no kappa values");
  if (n_components != static_cast<int>(kappas.size()))
    throw Error(Errc::invalid_input, "N must equal the number of kappa values");
  for (double k : kappas)
    if (!(k >= 0 && k < kappa_supremum())) throw Error(Errc::invalid_input, "kappa out of range");
  return *std::min_element(kappas.begin(), kappas.end()) / std::sqrt(static_cast<double>(n_components));
}

double pair_constant(const std::vector<double>& kappas) {
  return pair_constant(kappas, static_cast<int>(kappas.size()));
}

KazhdanReport kazhdan_for_set(const GroupSpec& group, RepKind rep, const CartanPoint& h, long n_samples,
                              std::uint64_t seed) {
  if (!(h.group == group)) throw Error(Errc::invalid_input, "h belongs to a different group");
  if (h.log_coords.cwiseAbs().maxCoeff() == 0) throw Error(Errc::trivial_element, "h lies in K");
  require_numeric(group);

  KazhdanReport out;
  try {
    const ExponentReport r = improved_exponent(group, rep);
    out.p = r.p;
    out.m = r.m;
    out.mechanism = "shell_improvement";
  } catch (const Error& e) {
    if (e.code() != Errc::no_improvement) throw;
    const ExponentReport r = baseline_exponent(group, rep);
    out.p = r.p;
    out.m = r.m;
    out.mechanism = "baseline";
  }
  out.xi = hc_estimate(h, n_samples, seed);
  // Monte Carlo noise can push the estimate just above 1; Xi itself never exceeds 1.
  out.xi_pow = std::min(1.0, std::pow(out.xi.value, 1.0 / out.m.convert_to<double>()));
  out.kappa = kappa(out.xi_pow);
  return out;
}

std::size_t select_factor(const std::vector<ExponentReport>& factors) {
  if (factors.empty()) throw Error(Errc::invalid_input, "no factors");
  std::size_t best = 0;
  for (std::size_t i = 1; i < factors.size(); ++i)
    if (factors[i].p < factors[best].p) best = i;
  return best;
}

}  // namespace semidecay
