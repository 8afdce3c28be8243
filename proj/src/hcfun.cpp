#include "semidecay/hcfun.hpp"

#include "semidecay/error.hpp"
#include "semidecay/exponents.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/random/normal_distribution.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <execution>
#include <numeric>
#include <random>

namespace semidecay {

namespace {

using Cd = std::complex<double>;
using Engine = std::mt19937_64;

constexpr long kBlock = 8192;

Engine block_engine(std::uint64_t seed, std::uint64_t block) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(block), static_cast<std::uint32_t>(block >> 32)};
  return Engine(seq);
}

bool is_rank_one(const GroupSpec& g) { return g.family == Family::SO0_1n || g.family == Family::SU_1n; }

// Haar on O(n)/U(n): QR of a Gaussian matrix with the diagonal of R made positive.
template <class Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> haar_unitary(int n, Engine& engine) {
  using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  boost::random::normal_distribution<double> normal;
  Mat z(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      if constexpr (std::is_same_v<Scalar, Cd>) {
        const double re = normal(engine), im = normal(engine);
        z(i, j) = Cd(re, im) / std::sqrt(2.0);
      } else {
        z(i, j) = normal(engine);
      }
    }
  Eigen::HouseholderQR<Mat> qr(z);
  Mat q = qr.householderQ();
  for (int j = 0; j < n; ++j) {
    const Scalar d = qr.matrixQR()(j, j);
    q.col(j) *= d / std::abs(d);
  }
  return q;
}

// Columns (e_first + e_last)/sqrt2, (e_first - e_last)/sqrt2, e_2, ..., e_{d-1}.
Eigen::MatrixXd light_cone_basis(int d) {
  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(d, d);
  const double s = 1 / std::sqrt(2.0);
  c(0, 0) = s;
  c(d - 1, 0) = s;
  c(0, 1) = s;
  c(d - 1, 1) = -s;
  for (int j = 1; j < d - 1; ++j) c(j, j + 1) = 1;
  return c;
}

Eigen::MatrixXcd embed_rank_one(const Eigen::MatrixXcd& u, Cd phase) {
  const int d = static_cast<int>(u.rows()) + 1;
  Eigen::MatrixXcd block = Eigen::MatrixXcd::Zero(d, d);
  block(0, 0) = phase;
  block.bottomRightCorner(d - 1, d - 1) = u;
  const Eigen::MatrixXcd c = light_cone_basis(d).cast<Cd>();
  return c * block * c.adjoint();
}

Eigen::MatrixXcd sample_k(const GroupSpec& g, Engine& engine) {
  switch (g.family) {
    case Family::SL:
      if (g.field.kind == FieldKind::complex) {
        Eigen::MatrixXcd q = haar_unitary<Cd>(g.n, engine);
        q.col(0) *= std::conj(q.determinant());
        return q;
      } else {
        Eigen::MatrixXd q = haar_unitary<double>(g.n, engine);
        if (q.determinant() < 0) q.col(0) *= -1;
        return q.cast<Cd>();
      }
    case Family::SO0_1n: {
      Eigen::MatrixXd u = haar_unitary<double>(g.n, engine);
      if (u.determinant() < 0) u.col(0) *= -1;
      return embed_rank_one(u.cast<Cd>(), 1);
    }
    case Family::SU_1n: {
      Eigen::MatrixXcd u = haar_unitary<Cd>(g.n, engine);
      return embed_rank_one(u, std::conj(u.determinant()));
    }
    default: break;
  }
  throw Error(Errc::unsupported_group, group_name(g));
}

struct Moments {
  long count = 0;
  double mean = 0;
  double m2 = 0;

  void add(double x) {
    ++count;
    const double d = x - mean;
    mean += d / static_cast<double>(count);
    m2 += d * (x - mean);
  }

  void merge(const Moments& o) {
    if (o.count == 0) return;
    const long n = count + o.count;
    const double d = o.mean - mean;
    mean += d * static_cast<double>(o.count) / static_cast<double>(n);
    m2 += o.m2 + d * d * static_cast<double>(count) * static_cast<double>(o.count) / static_cast<double>(n);
    count = n;
  }
};

class Integrand {
 public:
  explicit Integrand(const GroupSpec& g) : group_(g), delta_(to_double(modular_weight(g))) {}

  double operator()(const Eigen::MatrixXcd& gk) const {
    const Eigen::VectorXd logs = simple_root_logs(group_, iwasawa_a_part(group_, gk));
    return std::exp(-0.5 * delta_.dot(logs));
  }

 private:
  GroupSpec group_;
  Eigen::VectorXd delta_;
};

}  // namespace

void require_numeric(const GroupSpec& g) {
  if (g.field.kind == FieldKind::quaternion || g.field.kind == FieldKind::nonarchimedean)
    throw Error(Errc::unsupported_numeric_field, group_name(g) + " has no numerical model");
  if (g.family != Family::SL && !is_rank_one(g))
    throw Error(Errc::unsupported_group, group_name(g) + " has no numerical model");
}

int matrix_size(const GroupSpec& g) {
  require_numeric(g);
  return g.family == Family::SL ? g.n : g.n + 1;
}

CartanPoint make_cartan_point(const GroupSpec& g, Eigen::VectorXd log_coords) {
  require_numeric(g);
  if (g.family == Family::SL) {
    if (log_coords.size() != g.n) throw Error(Errc::invalid_input, "SL(n) Cartan point needs n coordinates");
    if (std::abs(log_coords.sum()) > 1e-9 * (1 + log_coords.cwiseAbs().sum()))
      throw Error(Errc::invalid_input, "SL(n) Cartan coordinates must sum to zero");
    for (int i = 0; i + 1 < g.n; ++i)
      if (log_coords[i] < log_coords[i + 1]) throw Error(Errc::invalid_input, "point outside the positive chamber");
  } else {
    if (log_coords.size() != 1) throw Error(Errc::invalid_input, "rank-one Cartan point needs one coordinate");
    if (log_coords[0] < 0) throw Error(Errc::invalid_input, "point outside the positive chamber");
  }
  return {g, std::move(log_coords)};
}

CartanPoint ray_point(const GroupSpec& g, double t) {
  require_numeric(g);
  if (g.family != Family::SL) return make_cartan_point(g, Eigen::VectorXd::Constant(1, t));
  Eigen::VectorXd c = Eigen::VectorXd::Zero(g.n);
  c[0] = t;
  c[g.n - 1] = -t;
  return make_cartan_point(g, c);
}

std::vector<Eigen::MatrixXcd> haar_sample(const GroupSpec& g, long count, std::uint64_t seed) {
  require_numeric(g);
  if (count < 1) throw Error(Errc::invalid_input, "sample count must be positive");
  std::vector<Eigen::MatrixXcd> out;
  out.reserve(static_cast<std::size_t>(count));
  for (long block = 0; block * kBlock < count; ++block) {
    Engine engine = block_engine(seed, static_cast<std::uint64_t>(block));
    for (long i = block * kBlock; i < std::min(count, (block + 1) * kBlock); ++i) out.push_back(sample_k(g, engine));
  }
  return out;
}

Eigen::MatrixXcd cartan_element(const CartanPoint& p) {
  const int d = matrix_size(p.group);
  Eigen::VectorXcd diag(d);
  if (p.group.family == Family::SL) {
    for (int i = 0; i < d; ++i) diag[i] = std::exp(p.log_coords[i]);
  } else {
    diag.setOnes();
    diag[0] = std::exp(p.log_coords[0]);
    diag[d - 1] = std::exp(-p.log_coords[0]);
  }
  return diag.asDiagonal();
}

Eigen::VectorXd iwasawa_a_part(const GroupSpec& g, const Eigen::MatrixXcd& m) {
  const int d = matrix_size(g);
  if (m.rows() != d || m.cols() != d) throw Error(Errc::invalid_input, "matrix has the wrong size");
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(m);
  Eigen::VectorXd a = qr.matrixQR().diagonal().cwiseAbs();
  const double top = a.maxCoeff();
  if (!std::isfinite(top) || !(a.minCoeff() > 1e-14 * top))
    throw Error(Errc::decomposition_failure, "matrix is numerically singular");
  return a;
}

Eigen::VectorXd simple_root_logs(const GroupSpec& g, const Eigen::VectorXd& a) {
  if (g.family == Family::SL) {
    Eigen::VectorXd out(g.rank);
    for (int j = 0; j < g.rank; ++j) out[j] = std::log(a[j]) - std::log(a[j + 1]);
    return out;
  }
  return Eigen::VectorXd::Constant(1, std::log(a[0]));
}

HCEstimate hc_estimate(const GroupSpec& g, const Eigen::MatrixXcd& m, long n_samples, std::uint64_t seed) {
  require_numeric(g);
  if (n_samples < 1000) throw Error(Errc::invalid_input, "at least 1000 samples are required");
  if (m.rows() != matrix_size(g) || m.cols() != matrix_size(g))
    throw Error(Errc::invalid_input, "matrix has the wrong size");
  // Balance-heuristic mixture of Haar and its pushforward under k -> kappa(m^-1 k), whose density is f^2.
  // Each term x / (1 + x^2) is at most 1/2, so the estimator stays bounded even when f is heavy-tailed.
  const Integrand f(g);
  const Eigen::MatrixXcd m_inv = m.inverse();
  const auto balance = [](double x) { return x / (1 + x * x); };
  const long blocks = (n_samples + kBlock - 1) / kBlock;
  std::vector<Moments> partial(static_cast<std::size_t>(blocks));
  std::vector<long> index(static_cast<std::size_t>(blocks));
  std::iota(index.begin(), index.end(), 0L);
  std::for_each(std::execution::par, index.begin(), index.end(), [&](long block) {
    Engine engine = block_engine(seed, static_cast<std::uint64_t>(block));
    Moments& acc = partial[static_cast<std::size_t>(block)];
    const long end = std::min(n_samples, (block + 1) * kBlock);
    for (long i = block * kBlock; i < end; ++i) {
      const double direct = balance(f(m * sample_k(g, engine)));
      acc.add(direct + balance(f(m_inv * sample_k(g, engine))));
    }
  });
  Moments total;
  for (const auto& p : partial) total.merge(p);  // fixed order keeps results bit-identical
  const double var = total.count > 1 ? total.m2 / static_cast<double>(total.count - 1) : 0.0;
  return {total.mean, std::sqrt(var / static_cast<double>(total.count)), n_samples, seed};
}

HCEstimate hc_estimate(const CartanPoint& p, long n_samples, std::uint64_t seed) {
  return hc_estimate(p.group, cartan_element(p), n_samples, seed);
}

double hc_circle_quadrature(const GroupSpec& g, const Eigen::MatrixXcd& m, long nodes) {
  const bool circle = (g.family == Family::SL && g.n == 2 && g.field.kind == FieldKind::real) ||
                      (g.family == Family::SO0_1n && g.n == 2);
  if (!circle) throw Error(Errc::unsupported_group, group_name(g) + " does not have K = SO(2)");
  if (nodes < 8) throw Error(Errc::invalid_input, "too few quadrature nodes");
  const Integrand f(g);
  const double two_pi = boost::math::constants::two_pi<double>();
  double sum = 0;
  for (long j = 0; j < nodes; ++j) {
    const double th = two_pi * static_cast<double>(j) / static_cast<double>(nodes);
    Eigen::Matrix2cd r;
    r << std::cos(th), -std::sin(th), std::sin(th), std::cos(th);
    const Eigen::MatrixXcd k = g.family == Family::SL ? Eigen::MatrixXcd(r) : embed_rank_one(r, 1);
    sum += f(m * k);
  }
  return sum / static_cast<double>(nodes);
}

HCBoundReport hc_bound_check(const GroupSpec& g, const std::vector<double>& t_grid, double epsilon, long n_samples,
                             std::uint64_t seed) {
  require_numeric(g);
  if (!(g.rank == 1 || (g.family == Family::SL && g.n == 2)))
    throw Error(Errc::invalid_input, "the bound check runs along rank-one or SL(2) rays");
  if (t_grid.empty() || !std::is_sorted(t_grid.begin(), t_grid.end()) ||
      std::adjacent_find(t_grid.begin(), t_grid.end()) != t_grid.end())
    throw Error(Errc::invalid_input, "t grid must be strictly increasing");
  if (!(epsilon > 0)) throw Error(Errc::invalid_input, "epsilon must be positive");

  const double delta = to_double(modular_weight(g)[0]);
  const double alpha_scale = g.family == Family::SL ? 2.0 : 1.0;  // log alpha(a_t) = alpha_scale * t

  HCBoundReport rep;
  rep.epsilon = epsilon;
  for (double t : t_grid) {
    HCBoundRow row;
    row.t = t;
    row.xi = hc_estimate(ray_point(g, t), n_samples, seed);
    row.log_delta = delta * alpha_scale * t;
    const double up = std::exp(0.5 * row.log_delta);
    const double down = std::exp(-epsilon * row.log_delta);
    row.r = row.xi.value * up;
    row.r_std = row.xi.std_error * up;
    row.damped = row.r * down;
    row.damped_std = row.r_std * down;
    rep.rows.push_back(row);
  }
  rep.min_r = std::min_element(rep.rows.begin(), rep.rows.end(), [](auto& a, auto& b) { return a.r < b.r; })->r;
  rep.positive = rep.min_r > 0;
  rep.eventually_nonincreasing = true;
  for (std::size_t i = rep.rows.size() / 2; i + 1 < rep.rows.size(); ++i) {
    const auto& a = rep.rows[i];
    const auto& b = rep.rows[i + 1];
    if (b.damped > a.damped + 3 * std::hypot(a.damped_std, b.damped_std)) rep.eventually_nonincreasing = false;
  }
  rep.passed = rep.positive && rep.eventually_nonincreasing;
  return rep;
}

}  // namespace semidecay
