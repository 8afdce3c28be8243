#include "semidecay/orbitlab.hpp"

#include "semidecay/error.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/random/uniform_real_distribution.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <execution>
#include <limits>
#include <numeric>
#include <random>

namespace semidecay {

namespace {

using Engine = std::mt19937_64;

constexpr int kSectors = 16;
constexpr double kLadderStep = 15.0 * 15.0 * 64.0 * 8.0;  // the separation threshold per unit c0

const double kPi = boost::math::constants::pi<double>();

Engine stream(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)};
  return Engine(seq);
}

// Half-width of the projected coordinate in every sub-cell, in units of c0.
double cell_bound(ShellExample e) { return e == ShellExample::sl3_standard ? 1.5 : 4.0 / 3.0; }

// (v_U, v_h, v_V) coordinates of the adjoint model.
Eigen::Vector3d adjoint_coords(ShellExample e, const Eigen::Vector3d& v) {
  if (e == ShellExample::so12_standard) return {v[0], v[2] / 2, -v[1] / 2};
  return v;
}

// Maps Euclidean coordinates (x, p, q) of the invariant norm back to model coordinates.
Eigen::Vector3d from_normalized(ShellExample e, double x, double p, double q) {
  switch (e) {
    case ShellExample::sl3_standard: return {x, p, q};
    case ShellExample::sl2_adjoint: return {x, p / std::sqrt(2.0), q};
    case ShellExample::so12_standard: return {x, std::sqrt(2.0) * p, q};
  }
  return {x, p, q};
}

Eigen::Matrix3d relative(ShellExample e, double p1, double p2, int plane) {
  return rotation_matrix(e, p1, plane).inverse() * rotation_matrix(e, p2, plane);
}

int cell_plane(ShellExample e, int cell) { return e == ShellExample::sl3_standard ? cell + 2 : 2; }

bool pushes_out(const Eigen::Matrix3d& rel, const Eigen::Matrix3Xd& samples, double bound) {
  if (samples.cols() == 0) return true;
  return (rel.row(0) * samples).cwiseAbs().minCoeff() >= bound;
}

// Maps (v_h, v_V) to the in-plane normalized coordinates (p, q).
Eigen::Matrix2d adjoint_to_normalized(ShellExample e) {
  Eigen::Matrix2d m;
  if (e == ShellExample::so12_standard)
    m << 0, -std::sqrt(2.0), 2, 0;  // v_h = q/2, v_V = -p/sqrt2
  else
    m << std::sqrt(2.0), 0, 0, 1;  // p = sqrt2 v_h, q = v_V
  return m;
}

// A lower bound for inf |row . v| over a sub-cell; exact up to the O(c0^2) radius slack.
// In normalized coordinates (x, p, q) the cell is |x| < w, p^2 + q^2 > 1/4 - 2w^2 and an angular
// set bounded by finitely many lines through the origin, so |row . v| >= rho |n| min|cos| - |alpha| w
// with the minimum taken over the boundary directions and the zero line of the functional.
double cell_floor(const ShellSpec& shell, int cell, const Eigen::RowVector3d& row) {
  const ShellExample e = shell.example;
  const double w = cell_bound(e) * shell.c0;
  const Eigen::Vector3d scale = from_normalized(e, 1, 1, 1);
  const double alpha = row[0] * scale[0];
  if (e == ShellExample::sl3_standard) {
    const int j = cell + 1;
    return 0.25 * std::abs(row[j] * scale[j]) - std::abs(alpha) * w - std::abs(row[3 - j] * scale[3 - j]) * 1.5;
  }
  const Eigen::Vector2d n(row[1] * scale[1], row[2] * scale[2]);
  const double rho = std::sqrt(std::max(0.0, 0.25 - 2 * w * w));
  const Eigen::Matrix2d to_pq = adjoint_to_normalized(e);
  std::vector<Eigen::Vector2d> dirs;
  for (const Eigen::Vector2d& d : {Eigen::Vector2d(1, 4.0 / 3), Eigen::Vector2d(1, -4.0 / 3), Eigen::Vector2d(1, 1),
                                  Eigen::Vector2d(1, -1), Eigen::Vector2d(-shell.c0, 1), Eigen::Vector2d(0, 1),
                                  Eigen::Vector2d(1, 0)})
    dirs.push_back((to_pq * d).normalized());
  if (n.norm() > 0) dirs.push_back(Eigen::Vector2d(-n[1], n[0]).normalized());
  double least = std::numeric_limits<double>::infinity();
  for (const Eigen::Vector2d& d0 : dirs)
    for (const double sign : {1.0, -1.0}) {
      const Eigen::Vector2d d = sign * d0;
      // the direction belongs to the closed angular set if a nearby ray lies in the cell
      bool touches = false;
      for (const double tilt : {-1e-9, 0.0, 1e-9}) {
        const Eigen::Vector2d t = Eigen::Rotation2Dd(tilt) * d;
        touches = touches || in_cell(shell, cell, from_normalized(e, 0, t[0], t[1]));
      }
      if (touches) least = std::min(least, std::abs(n.dot(d)));
    }
  if (!std::isfinite(least)) return std::numeric_limits<double>::infinity();  // empty cell
  return rho * least - std::abs(alpha) * w;
}
struct CellSamples {
  std::vector<Eigen::Matrix3Xd> cells;
};

CellSamples draw_all(const ShellSpec& shell, long n_samples, std::uint64_t seed) {
  CellSamples s;
  for (int c = 0; c < cell_count(shell.example); ++c) s.cells.push_back(sample_cell(shell, c, n_samples, seed));
  return s;
}

bool certified(const ShellSpec& shell, double p1, double p2, const CellSamples& s) {
  const ShellExample e = shell.example;
  if (p1 == p2) return false;
  const double bound = cell_bound(e) * shell.c0;
  for (std::size_t c = 0; c < s.cells.size(); ++c) {
    const int cell = static_cast<int>(c);
    const int plane = cell_plane(e, cell);
    bool out = false;
    for (const auto& rel : {relative(e, p1, p2, plane), relative(e, p2, p1, plane)})
      out = out || (cell_floor(shell, cell, rel.row(0)) >= bound && pushes_out(rel, s.cells[c], bound));
    if (!out) return false;
  }
  return true;
}

}  // namespace

std::string_view example_id(ShellExample e) {
  switch (e) {
    case ShellExample::sl3_standard: return "sl3-standard";
    case ShellExample::sl2_adjoint: return "sl2-adjoint";
    case ShellExample::so12_standard: return "so12-standard";
  }
  return "?";
}

ShellExample parse_example(std::string_view id) {
  std::string s(id);
  std::replace(s.begin(), s.end(), '_', '-');
  if (s == "sl3-standard") return ShellExample::sl3_standard;
  if (s == "sl2-adjoint") return ShellExample::sl2_adjoint;
  if (s == "so12-standard") return ShellExample::so12_standard;
  throw Error(Errc::invalid_input, "unknown example '" + std::string(id) + "'");
}

ShellSpec make_shell(ShellExample example, double c0) {
  if (!(c0 > 0 && c0 < 0.125)) throw Error(Errc::invalid_parameter, "c0 must lie in (0, 1/8)");
  return ShellSpec{example, c0};
}

std::pair<double, double> param_domain(ShellExample e) {
  if (e == ShellExample::sl3_standard) return {-1.0, 1.0};
  return {0.0, kPi / 4};
}

double shell_norm(ShellExample e, const Eigen::Vector3d& v) {
  switch (e) {
    case ShellExample::sl3_standard: return v.norm();
    case ShellExample::sl2_adjoint: return std::sqrt(v[0] * v[0] + 2 * v[1] * v[1] + v[2] * v[2]);
    case ShellExample::so12_standard: return std::sqrt(2 * v[0] * v[0] + v[1] * v[1] / 2 + v[2] * v[2]);
  }
  return v.norm();
}

Eigen::Matrix3d rotation_matrix(ShellExample e, double param, int plane) {
  const auto [lo, hi] = param_domain(e);
  if (!(param >= lo - 1e-15 && param <= hi + 1e-15))
    throw Error(Errc::invalid_parameter, "parameter " + std::to_string(param) + " outside the family domain");
  param = std::clamp(param, lo, hi);
  Eigen::Matrix3d m = Eigen::Matrix3d::Identity();
  switch (e) {
    case ShellExample::sl3_standard: {
      if (plane != 2 && plane != 3) throw Error(Errc::invalid_parameter, "plane must be 2 or 3");
      const double a = std::sqrt(1 - param * param);
      const int j = plane - 1;
      m(0, 0) = a;
      m(0, j) = param;
      m(j, 0) = -param;
      m(j, j) = a;
      return m;
    }
    case ShellExample::sl2_adjoint: {
      // Ad z(theta) on X = [[v_h, v_U], [v_V, -v_h]], z(theta) = [[c, -s], [s, c]].
      const double c = std::cos(param), s = std::sin(param);
      Eigen::Matrix2d z;
      z << c, -s, s, c;
      for (int k = 0; k < 3; ++k) {
        const Eigen::Vector3d b = Eigen::Vector3d::Unit(k);
        Eigen::Matrix2d x;
        x << b[1], b[0], b[2], -b[1];
        const Eigen::Matrix2d y = z * x * z.transpose();
        m.col(k) = Eigen::Vector3d(y(0, 1), y(0, 0), y(1, 0));
      }
      return m;
    }
    case ShellExample::so12_standard: {
      Eigen::Matrix3d t;
      t << -1, -0.5, 0, -1, 0.5, 0, 0, 0, 1;
      Eigen::Matrix3d r = Eigen::Matrix3d::Identity();
      r(1, 1) = std::cos(2 * param);
      r(1, 2) = -std::sin(2 * param);
      r(2, 1) = std::sin(2 * param);
      r(2, 2) = std::cos(2 * param);
      return t.inverse() * r * t;
    }
  }
  return m;
}

Eigen::Vector3d rotation_action(ShellExample e, double param, const Eigen::Vector3d& v, int plane) {
  return rotation_matrix(e, param, plane) * v;
}

int cell_count(ShellExample e) { return e == ShellExample::sl3_standard ? 2 : 3; }

bool in_cell(const ShellSpec& shell, int cell, const Eigen::Vector3d& v) {
  const ShellExample e = shell.example;
  if (cell < 0 || cell >= cell_count(e)) throw Error(Errc::invalid_parameter, "no such cell");
  const double r = shell_norm(e, v);
  if (!(r > 0.5 && r < 1.5) || !(std::abs(v[0]) < cell_bound(e) * shell.c0)) return false;
  if (e == ShellExample::sl3_standard) return std::abs(v[cell + 1]) > 0.25;
  const Eigen::Vector3d a = adjoint_coords(e, v);
  const double vh = a[1], vv = a[2];
  switch (cell) {
    case 0: return 4.0 / 3.0 * std::abs(vh) > std::abs(vv);
    case 1: return std::abs(vh) < std::abs(vv) && vh / vv > -shell.c0;
    default: return std::abs(vh) < std::abs(vv) && vh / vv < 0;
  }
}

Eigen::Matrix3Xd sample_cell(const ShellSpec& shell, int cell, long n_samples, std::uint64_t seed) {
  if (cell < 0 || cell >= cell_count(shell.example)) throw Error(Errc::invalid_parameter, "no such cell");
  if (n_samples < 1) throw Error(Errc::invalid_parameter, "sample count must be positive");
  const double width = cell_bound(shell.example) * shell.c0;
  auto candidate = [&](Engine& engine, int sector) {
    boost::random::uniform_real_distribution<double> u(-1.0, 1.0);
    boost::random::uniform_real_distribution<double> ang(2 * kPi * sector / kSectors, 2 * kPi * (sector + 1) / kSectors);
    boost::random::uniform_real_distribution<double> rad(0.45, 1.5);
    const double x = u(engine) * width;
    const double phi = ang(engine), r = rad(engine);
    return from_normalized(shell.example, x, r * std::cos(phi), r * std::sin(phi));
  };
  // Some sub-cells miss whole sectors; probe first and share the budget among the rest.
  std::vector<int> active;
  for (int sector = 0; sector < kSectors; ++sector) {
    Engine probe = stream(seed, static_cast<std::uint64_t>(cell), kSectors + static_cast<std::uint64_t>(sector));
    for (int k = 0; k < 4096; ++k)
      if (in_cell(shell, cell, candidate(probe, sector))) {
        active.push_back(sector);
        break;
      }
  }
  std::vector<Eigen::Vector3d> pts;
  pts.reserve(static_cast<std::size_t>(n_samples));
  const long n_active = static_cast<long>(active.size());
  for (long i = 0; i < n_active; ++i) {
    const int sector = active[static_cast<std::size_t>(i)];
    const long target = n_samples / n_active + (i < n_samples % n_active ? 1 : 0);
    Engine engine = stream(seed, static_cast<std::uint64_t>(cell), static_cast<std::uint64_t>(sector));
    long got = 0;
    for (long tries = 0; got < target && tries < 5000 * target + 100000; ++tries) {
      const Eigen::Vector3d v = candidate(engine, sector);
      if (in_cell(shell, cell, v)) {
        pts.push_back(v);
        ++got;
      }
    }
  }
  Eigen::Matrix3Xd out(3, static_cast<Eigen::Index>(pts.size()));
  for (std::size_t i = 0; i < pts.size(); ++i) out.col(static_cast<Eigen::Index>(i)) = pts[i];
  return out;
}

bool disjointness_certificate(ShellExample example, double c0, double param1, double param2, long n_samples,
                              std::uint64_t seed) {
  const ShellSpec shell = make_shell(example, c0);
  rotation_matrix(example, param1);
  rotation_matrix(example, param2);
  return certified(shell, param1, param2, draw_all(shell, n_samples, seed));
}

std::vector<double> sl3_ladder(double c0) {
  if (!(c0 > 0)) throw Error(Errc::invalid_parameter, "c0 must be positive");
  const double top = std::floor((std::sqrt(15.0) - 1) / (8 * kLadderStep * c0));
  std::vector<double> z;
  for (long m = 0; m <= static_cast<long>(top); ++m) z.push_back(0.25 + kLadderStep * static_cast<double>(m) * c0);
  return z;
}

PackingResult greedy_pack(ShellExample example, double c0, long grid_resolution, long n_samples, std::uint64_t seed) {
  if (!(c0 > 1e-6 && c0 < 1e-1)) throw Error(Errc::invalid_parameter, "c0 must lie in (1e-6, 1e-1)");
  if (grid_resolution < 2) throw Error(Errc::invalid_parameter, "grid resolution must be at least 2");
  const ShellSpec shell = make_shell(example, c0);
  const CellSamples samples = draw_all(shell, n_samples, seed);

  double lo = 0, hi = kPi / 4;
  if (example == ShellExample::sl3_standard) {
    lo = 0.25;
    hi = std::sqrt(15.0) / 4;
  }
  PackingResult res;
  res.example = example;
  res.c0 = c0;
  res.seed = seed;
  for (const auto& c : samples.cells) res.samples_per_pair += c.cols();

  for (long i = 0; i < grid_resolution; ++i) {
    const double p = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(grid_resolution - 1);
    // Nearest retained parameters are the likeliest to clash; test them first.
    const bool ok = std::all_of(res.params.rbegin(), res.params.rend(),
                                [&](double q) { return certified(shell, q, p, samples); });
    if (ok) res.params.push_back(p);
  }
  res.count = static_cast<long>(res.params.size());

  const CellSamples audit = draw_all(shell, n_samples, seed + 1);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < res.params.size(); ++i)
    for (std::size_t j = i + 1; j < res.params.size(); ++j) pairs.emplace_back(i, j);
  std::atomic<long> bad{0};
  std::for_each(std::execution::par, pairs.begin(), pairs.end(), [&](const auto& ij) {
    if (!certified(shell, res.params[ij.first], res.params[ij.second], audit)) ++bad;
  });
  res.violations = bad.load();
  return res;
}

SeparationResult separation_check(double c0, long n_trials, std::uint64_t seed, int dim) {
  if (!(c0 > 0)) throw Error(Errc::invalid_parameter, "c0 must be positive");
  if (dim != 1 && dim != 2 && dim != 4) throw Error(Errc::invalid_parameter, "dim must be 1, 2 or 4");
  if (n_trials < 1) throw Error(Errc::invalid_parameter, "trial count must be positive");
  const double rmin = 0.25, rmax = std::sqrt(15.0) / 4;
  SeparationResult res;
  res.threshold = kLadderStep * c0;
  if (res.threshold > 2 * rmax) throw Error(Errc::vacuous_check, "no pair of A is that far apart");

  Engine engine = stream(seed, 0x5e9, static_cast<std::uint64_t>(dim));
  boost::random::uniform_real_distribution<double> radius(rmin, rmax);
  boost::random::uniform_real_distribution<double> unit(-1.0, 1.0);
  auto draw = [&]() {
    Eigen::VectorXd z(dim);
    do {
      for (int i = 0; i < dim; ++i) z[i] = unit(engine);
    } while (z.norm() < 1e-3 || z.norm() > 1);
    return Eigen::VectorXd(z.normalized() * radius(engine));
  };
  const long max_attempts = 1000 * n_trials;
  for (long attempt = 0; res.trials < n_trials && attempt < max_attempts; ++attempt) {
    const Eigen::VectorXd z1 = draw(), z2 = draw();
    if ((z1 - z2).norm() < res.threshold) continue;  // hypothesis fails: not a trial
    ++res.trials;
    const double a1 = std::sqrt(1 - z1.squaredNorm()), a2 = std::sqrt(1 - z2.squaredNorm());
    if ((a1 * z2 - a2 * z1).norm() < 16 * c0) ++res.violations;
  }
  if (res.trials == 0) throw Error(Errc::vacuous_check, "no sampled pair met the separation hypothesis");
  return res;
}

FitResult fit_gamma(const std::vector<std::pair<double, long>>& counts) {
  if (counts.size() < 4) throw Error(Errc::fit_failure, "need at least 4 points");
  const auto n = static_cast<Eigen::Index>(counts.size());
  Eigen::VectorXd x(n), y(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& [c0, count] = counts[static_cast<std::size_t>(i)];
    if (!(c0 > 0)) throw Error(Errc::fit_failure, "c0 must be positive");
    if (count < 2) throw Error(Errc::fit_failure, "counts below 2 carry no slope information");
    x[i] = std::log(1 / c0);
    y[i] = std::log(static_cast<double>(count));
  }
  const double xm = x.mean(), ym = y.mean();
  const Eigen::VectorXd dx = x.array() - xm, dy = y.array() - ym;
  const double sxx = dx.squaredNorm();
  if (!(sxx > 1e-12 * (1 + xm * xm))) throw Error(Errc::fit_failure, "c0 values are degenerate");
  FitResult f;
  f.slope = dx.dot(dy) / sxx;
  f.intercept = ym - f.slope * xm;
  const double ss_tot = dy.squaredNorm();
  const double ss_res = (dy - f.slope * dx).squaredNorm();
  f.r_squared = ss_tot > 0 ? 1 - ss_res / ss_tot : 1.0;
  return f;
}

}  // namespace semidecay
