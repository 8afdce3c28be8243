#pragma once

// Empirical checks of the c0-disjoint property: K-orbit families acting on shells
//   W_{c0} = { v : |pi(v)| <= c0, 3/4 <= |v| <= 5/4 },
// projection certificates, greedy packing, and a log-log fit of the packing count.

#include <Eigen/Dense>

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace semidecay {

enum class ShellExample { sl3_standard, sl2_adjoint, so12_standard };

std::string_view example_id(ShellExample e);   // "sl3-standard", ...
ShellExample parse_example(std::string_view id);  // accepts '-' or '_'

struct ShellSpec {
  ShellExample example = ShellExample::sl3_standard;
  double c0 = 1e-3;
  static constexpr double inner = 0.75;
  static constexpr double outer = 1.25;
};

/// Throws InvalidParameter unless 0 < c0 < 1/8.
ShellSpec make_shell(ShellExample example, double c0);

/// Parameter domain of the rotation family: z in [-1, 1] (a = sqrt(1 - z^2)) for sl3_standard,
/// theta in [0, pi/4] otherwise.
std::pair<double, double> param_domain(ShellExample example);

/// The K-invariant norm of each model.
double shell_norm(ShellExample example, const Eigen::Vector3d& v);

/// Matrix of the family element. For sl3_standard, plane 2 is h(a,z) in the (e1,e2) plane and
/// plane 3 the (e1,e3) plane; other examples ignore it. Throws InvalidParameter off the domain.
Eigen::Matrix3d rotation_matrix(ShellExample example, double param, int plane = 2);
Eigen::Vector3d rotation_action(ShellExample example, double param, const Eigen::Vector3d& v, int plane = 2);

/// Stratified samples (columns) of one sub-cell of the effective cover of W_{c0}.
int cell_count(ShellExample example);
Eigen::Matrix3Xd sample_cell(const ShellSpec& shell, int cell, long n_samples, std::uint64_t seed);
bool in_cell(const ShellSpec& shell, int cell, const Eigen::Vector3d& v);

/// True iff, for every sub-cell, every sampled v is pushed out of the cell by
/// tau1^-1 tau2 or (for the whole cell) by tau2^-1 tau1. One-sided: may reject disjoint pairs.
bool disjointness_certificate(ShellExample example, double c0, double param1, double param2, long n_samples,
                              std::uint64_t seed);

/// The explicit ladder z_m = 1/4 + 15^2 * 64 * 8 * m * c0 for the sl3 family (real case).
std::vector<double> sl3_ladder(double c0);

struct PackingResult {
  ShellExample example = ShellExample::sl3_standard;
  double c0 = 0;
  std::vector<double> params;
  long count = 0;
  long violations = 0;  // retained pairs failing an independent audit sample
  long samples_per_pair = 0;
  std::uint64_t seed = 0;
};

/// Greedy retention over the grid in increasing order. c0 must lie in (1e-6, 1e-1).
/// The grid spans [1/4, sqrt(15)/4] in z for sl3_standard and [0, pi/4] in theta otherwise.
PackingResult greedy_pack(ShellExample example, double c0, long grid_resolution, long n_samples, std::uint64_t seed);

struct SeparationResult {
  long trials = 0;
  long violations = 0;
  double threshold = 0;  // 15^2 * 64 * 8 * c0
};

/// Samples pairs of A = {(a,z): 1/4 <= a, |z| <= sqrt(15)/4, a^2+|z|^2 = 1} with z in R^dim
/// (dim 1, 2, 4 for L = R, C, H) and |z1 - z2| >= threshold; counts |a1 z2 - a2 z1| < 16 c0.
/// Throws VacuousCheck when the threshold exceeds the diameter of A.
SeparationResult separation_check(double c0, long n_trials, std::uint64_t seed, int dim = 1);

struct FitResult {
  double slope = 0;
  double intercept = 0;
  double r_squared = 0;
};

/// Least squares of log(count) on log(1/c0). Needs >= 4 points with counts >= 2.
FitResult fit_gamma(const std::vector<std::pair<double, long>>& counts);

}  // namespace semidecay
