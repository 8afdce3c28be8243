#pragma once

// Monte Carlo estimates of the Harish-Chandra function
//   Xi(g) = int_K delta_B(gk)^{-1/2} dk
// for SL(n,R), SL(n,C), SO0(1,n) and SU(1,n).
//
// Matrix models. SL(n,F) acts on F^n with B upper triangular and K = SO(n) / SU(n).
// The rank-one groups act on F^{n+1} in the basis (e1, e3, ..., e_{n+1}, e2) where the form
// is x_first * conj(x_last) + conj(x_first) * x_last - sum |x_mid|^2; the Cartan element is
// diag(e^t, 1, ..., 1, e^-t) and alpha(a_t) = e^t.

#include "semidecay/catalog.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <vector>

namespace semidecay {

struct CartanPoint {
  GroupSpec group;
  Eigen::VectorXd log_coords;  // SL(n): (t_1..t_n), sum zero, decreasing; rank one: (t), t >= 0
};

/// Validates the closed positive chamber. Throws InvalidInput.
CartanPoint make_cartan_point(const GroupSpec& group, Eigen::VectorXd log_coords);

/// The ray a_t: (t, 0, ..., 0, -t) for SL(n), (t) for rank one.
CartanPoint ray_point(const GroupSpec& group, double t);

struct HCEstimate {
  double value = 0;
  double std_error = 0;
  long n_samples = 0;
  std::uint64_t seed = 0;
};

/// Throws UnsupportedNumericField (H, non-archimedean) or UnsupportedGroup (other families).
void require_numeric(const GroupSpec& group);
int matrix_size(const GroupSpec& group);

std::vector<Eigen::MatrixXcd> haar_sample(const GroupSpec& group, long count, std::uint64_t seed);

Eigen::MatrixXcd cartan_element(const CartanPoint& point);

/// |diag R| of g = QR; throws DecompositionFailure when g is numerically singular.
Eigen::VectorXd iwasawa_a_part(const GroupSpec& group, const Eigen::MatrixXcd& g);

/// log |alpha_j| for each simple root, from an a-part.
Eigen::VectorXd simple_root_logs(const GroupSpec& group, const Eigen::VectorXd& a_part);

HCEstimate hc_estimate(const CartanPoint& point, long n_samples, std::uint64_t seed);
HCEstimate hc_estimate(const GroupSpec& group, const Eigen::MatrixXcd& g, long n_samples, std::uint64_t seed);

/// Trapezoid rule over K = SO(2) (SL(2,R) and SO0(1,2) only).
double hc_circle_quadrature(const GroupSpec& group, const Eigen::MatrixXcd& g, long nodes = 1L << 18);

struct HCBoundRow {
  double t = 0;
  HCEstimate xi;
  double log_delta = 0;  // log delta_B(a_t)
  double r = 0;          // Xi(a_t) delta_B(a_t)^{1/2}
  double r_std = 0;
  double damped = 0;     // r delta_B(a_t)^{-epsilon}
  double damped_std = 0;
};

struct HCBoundReport {
  double epsilon = 0;
  std::vector<HCBoundRow> rows;
  double min_r = 0;
  bool positive = false;
  bool eventually_nonincreasing = false;  // over the second half of the grid, up to 3 sigma
  bool passed = false;
};

/// Shape check of c1 delta^{-1/2} <= Xi <= c2(eps) delta^{-1/2+eps} along a ray.
/// Every grid point uses the same seed.
HCBoundReport hc_bound_check(const GroupSpec& group, const std::vector<double>& t_grid, double epsilon,
                             long n_samples, std::uint64_t seed);

}  // namespace semidecay
