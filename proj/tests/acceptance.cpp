// Acceptance suite: one PASS/FAIL line per criterion. Tolerances are pinned below.
#include "semidecay/catalog.hpp"
#include "semidecay/error.hpp"
#include "semidecay/exponents.hpp"
#include "semidecay/hcfun.hpp"
#include "semidecay/kazhdan.hpp"
#include "semidecay/orbitlab.hpp"
#include "semidecay/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>

using namespace semidecay;

namespace {

// pinned tolerances and run sizes
constexpr long kHcSamples = 1'000'000;
constexpr std::uint64_t kHcSeed = 7;
constexpr double kHcRelTol = 0.01;
constexpr double kSigmas = 3.0;
constexpr double kIdentityTol = 1e-3;
constexpr int kBiKPairs = 10;
constexpr long kPropertySamples = 200'000;
constexpr double kEpsilon = 0.1;
constexpr double kKazhdanTol = 1e-12;
constexpr long kSeparationTrials = 100'000;
constexpr long kPackResolution = 1000;
constexpr long kPackSamples = 4000;
constexpr std::uint64_t kPackSeed = 11;
constexpr double kMinR2 = 0.95;
constexpr double kRoundoff = 1e-12;  // QR of an exact K element returns |r_ii| = 1 +- ulp

struct Outcome {
  bool pass = true;
  std::ostringstream why;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (!pass) why << "; ";
      why << what;
      pass = false;
    }
  }
};

GroupSpec G(Family f, int n, std::optional<int> m = std::nullopt, FieldKind k = FieldKind::real) {
  return make_group(f, n, m, k);
}

std::string str(const Rational& r) { return to_string(r); }

void exact(Outcome& o, const std::string& what, const Rational& got, const Rational& want) {
  o.require(got == want, what + " = " + str(got) + ", expected " + str(want));
}

void table(Outcome& o) {
  int rows = 0;
  for (const auto& row : remark_table({2, 8}, {2, 8})) {
    const int n = row.group.n;
    Rational want;
    switch (row.group.family) {
      case Family::SL: want = 2 * row.group.field.delta_factor; break;
      case Family::SU_1n: want = 2 * n; break;
      case Family::SO0_1n: want = 2 * (n - 1); break;
      case Family::Sp_1n: want = Rational(2 + 4 * n, 3); break;
      case Family::Sp2n: want = 2 * n; break;
      case Family::Sp_nm: want = Rational(4 * n + 4 * *row.group.m - 2, 3); break;
      default: o.require(false, "unexpected row " + row.label); continue;
    }
    exact(o, row.label, row.p, want);
    ++rows;
  }
  o.require(rows == 3 + 4 * 7 + 28, "row count " + std::to_string(rows));
}

void baselines(Outcome& o) {
  auto b = [](const GroupSpec& g, RepKind r = RepKind::standard) { return baseline_exponent(g, r).p; };
  exact(o, "SL(3,R)", b(G(Family::SL, 3)), 12);
  exact(o, "SL(3,C)", b(G(Family::SL, 3, std::nullopt, FieldKind::complex)), 24);
  exact(o, "SL(3,H)", b(G(Family::SL, 3, std::nullopt, FieldKind::quaternion)), 144);
  exact(o, "SL(2,R) adjoint", b(G(Family::SL, 2), RepKind::adjoint), 3);
  exact(o, "SL(2,k_p) adjoint", b(G(Family::SL, 2, std::nullopt, FieldKind::nonarchimedean), RepKind::adjoint), 3);
  exact(o, "SL(2,C) adjoint", b(G(Family::SL, 2, std::nullopt, FieldKind::complex), RepKind::adjoint), 6);
  exact(o, "SO0(1,2)", b(G(Family::SO0_1n, 2)), 3);
  exact(o, "SU(1,2)", b(G(Family::SU_1n, 2)), 36);
  exact(o, "Sp(1,2)", b(G(Family::Sp_1n, 2)), 90);
  for (int n = 2; n <= 6; ++n) {
    exact(o, "SO0(1," + std::to_string(n) + ")", b(G(Family::SO0_1n, n)), 3 * (n - 1));
    exact(o, "SU(1," + std::to_string(n) + ")", b(G(Family::SU_1n, n)), 18 * n);
    exact(o, "Sp(1," + std::to_string(n) + ")", b(G(Family::Sp_1n, n)), 9 * (2 + 4 * n));
  }
  for (int n = 2; n <= 5; ++n)
    exact(o, "Sp(" + std::to_string(2 * n) + ",C)", b(G(Family::Sp2n, n, std::nullopt, FieldKind::complex)),
          2 * pow(Rational(3), 2 * n - 2) * n * (n + 1));
}

void improvements(Outcome& o) {
  auto i = [](const GroupSpec& g) { return improved_exponent(g, RepKind::standard).p; };
  auto h = [](const GroupSpec& g) { return howe_product_exponent(g, RepKind::standard).p; };
  for (auto k : {FieldKind::real, FieldKind::complex, FieldKind::quaternion, FieldKind::nonarchimedean})
    exact(o, group_name(G(Family::SL, 3, std::nullopt, k)), i(G(Family::SL, 3, std::nullopt, k)), 4);
  exact(o, "SO0(1,2)", i(G(Family::SO0_1n, 2)), 2);
  exact(o, "SU(1,2)", i(G(Family::SU_1n, 2)), 4);
  exact(o, "Sp(1,2)", i(G(Family::Sp_1n, 2)), Rational(10, 3));
  for (int n = 2; n <= 8; ++n) {
    exact(o, "SO0(1,n)", i(G(Family::SO0_1n, n)), 2 * (n - 1));
    exact(o, "SU(1,n)", i(G(Family::SU_1n, n)), 2 * n);
    exact(o, "Sp(1,n)", i(G(Family::Sp_1n, n)), Rational(2 + 4 * n, 3));
  }
  for (int n = 1; n <= 8; ++n)
    for (auto k : {FieldKind::real, FieldKind::complex, FieldKind::nonarchimedean})
      exact(o, group_name(G(Family::Sp2n, n, std::nullopt, k)), h(G(Family::Sp2n, n, std::nullopt, k)), 2 * n);
  for (int n = 2; n <= 8; ++n)
    for (int m = n; m <= 8; ++m) {
      exact(o, group_name(G(Family::SU_nm, n, m)), h(G(Family::SU_nm, n, m)), 2 * (n + m - 1));
      exact(o, group_name(G(Family::Sp_nm, n, m)), h(G(Family::Sp_nm, n, m)), Rational(4 * m + 4 * n - 2, 3));
    }
}

double sl2r_oracle(double t) {
  return 2 / std::numbers::pi * std::exp(-t) * std::comp_ellint_1(std::sqrt(1 - std::exp(-4 * t)));
}

void hc_numerics(Outcome& o) {
  const GroupSpec g = G(Family::SL, 2);
  for (double t : {0.5, 1.0, 2.0, 4.0}) {
    const auto est = hc_estimate(ray_point(g, t), kHcSamples, kHcSeed);
    const double want = sl2r_oracle(t);
    const double quad = hc_circle_quadrature(g, cartan_element(ray_point(g, t)));
    o.require(std::abs(quad - want) < 1e-9 * want, "quadrature disagrees with the oracle at t=" + std::to_string(t));
    const double tol = std::max(kSigmas * est.std_error, kHcRelTol * quad);
    o.require(std::abs(est.value - quad) <= tol, "t=" + std::to_string(t) + ": MC " + std::to_string(est.value) +
                                                     " vs " + std::to_string(quad));
  }
  const auto e = hc_estimate(ray_point(g, 0), kHcSamples, kHcSeed);
  o.require(std::abs(e.value - 1) <= kIdentityTol, "Xi(e) = " + std::to_string(e.value));

  const Eigen::MatrixXcd a = cartan_element(ray_point(g, 1.0));
  const auto base = hc_estimate(g, a, kHcSamples, kHcSeed);
  const auto k1 = haar_sample(g, kBiKPairs, 1001);
  const auto k2 = haar_sample(g, kBiKPairs, 2002);
  for (int i = 0; i < kBiKPairs; ++i) {
    const auto x = hc_estimate(g, Eigen::MatrixXcd(k1[i] * a * k2[i]), kHcSamples, kHcSeed + 1 + i);
    const double dev = std::abs(x.value - base.value);
    o.require(dev < kSigmas * std::hypot(x.std_error, base.std_error), "bi-K pair " + std::to_string(i));
  }
}

void hc_properties(Outcome& o) {
  for (const GroupSpec& g : {G(Family::SL, 2), G(Family::SL, 2, std::nullopt, FieldKind::complex), G(Family::SL, 3),
                             G(Family::SO0_1n, 3), G(Family::SU_1n, 2)}) {
    HCEstimate prev{1.0, 0.0, 0, 0};
    for (double t : {0.0, 0.5, 1.0, 2.0, 3.0, 4.0}) {
      const auto est = hc_estimate(ray_point(g, t), kPropertySamples, kHcSeed);
      const std::string at = group_name(g) + " t=" + std::to_string(t);
      o.require(est.value > 0 && est.value <= 1 + kSigmas * est.std_error + kRoundoff, "range at " + at);
      o.require(prev.value >= est.value - kSigmas * std::hypot(prev.std_error, est.std_error) - kRoundoff,
                "monotone at " + at);
      prev = est;
    }
  }
  const auto r = hc_bound_check(G(Family::SL, 2), {1, 2, 3, 4, 5, 6, 7, 8}, kEpsilon, kPropertySamples, kHcSeed);
  o.require(r.passed, "bound check on SL(2,R)");
  const auto c = hc_bound_check(G(Family::SL, 2, std::nullopt, FieldKind::complex), {1, 2, 3, 4, 5, 6}, kEpsilon,
                                kPropertySamples, kHcSeed);
  o.require(c.passed, "bound check on SL(2,C)");
}

void kazhdan_formulas(Outcome& o) {
  o.require(kappa(1.0) == 0.0, "kappa(1)");
  o.require(kappa(0.5) == 0.25, "kappa(1/2)");
  double prev = kappa(0.01);
  for (int i = 2; i <= 100; ++i) {
    const double k = kappa(i / 100.0);
    o.require(k < prev, "kappa not strictly decreasing at " + std::to_string(i));
    prev = k;
  }
  o.require(std::abs(pair_constant({0.25}, 1) - 0.25) < kKazhdanTol, "N=1");
  o.require(std::abs(pair_constant({0.1, 0.2, 0.3, 0.25}, 4) - 0.05) < kKazhdanTol, "N=4");
  o.require(std::abs(pair_constant({0.3, 0.3}, 2) - 0.3 / std::sqrt(2.0)) < kKazhdanTol, "N=2");
}

void packing(Outcome& o) {
  for (double c0 : {1e-5, 1e-6, 1e-7}) {
    const auto s = separation_check(c0, kSeparationTrials, 13);
    o.require(s.violations == 0 && s.trials == kSeparationTrials,
              "separation at c0=" + std::to_string(c0) + ": " + std::to_string(s.violations) + " violations");
  }
  struct Band {
    ShellExample e;
    double lo, hi;
  };
  for (const Band& b : {Band{ShellExample::sl3_standard, 0.8, 1.25}, Band{ShellExample::sl2_adjoint, 0.35, 0.65}}) {
    std::vector<std::pair<double, long>> counts;
    std::string trace;
    for (int k = 4; k <= 9; ++k) {
      const double c0 = std::ldexp(1.0, -k);
      const auto r = greedy_pack(b.e, c0, kPackResolution, kPackSamples, kPackSeed);
      o.require(r.violations == 0, std::string(example_id(b.e)) + " audit violations");
      counts.emplace_back(c0, r.count);
      trace += (trace.empty() ? "" : ",") + std::to_string(r.count);
    }
    std::printf("  %s counts [%s]\n", std::string(example_id(b.e)).c_str(), trace.c_str());
    FitResult f;
    try {
      f = fit_gamma(counts);
    } catch (const Error& e) {
      o.require(false, std::string(example_id(b.e)) + " " + e.what());
      continue;
    }
    std::printf("  %s slope %.4f r2 %.4f\n", std::string(example_id(b.e)).c_str(), f.slope, f.r_squared);
    o.require(f.slope >= b.lo && f.slope <= b.hi && f.r_squared >= kMinR2,
              std::string(example_id(b.e)) + " slope " + std::to_string(f.slope) + " r2 " + std::to_string(f.r_squared));
  }
}

void structural(Outcome& o) {
  const VerifyReport rep = run_verify(builtin_catalog());
  if (!rep.passed()) {
    const auto* f = rep.first_failure();
    o.require(false, f ? f->name + " (" + f->subject + ")" : "verify failed");
  }
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<void(Outcome&)> run;
  };
  const Criterion criteria[] = {
      {"exact table reproduction", table},
      {"exact baselines", baselines},
      {"exact improvements", improvements},
      {"Harish-Chandra numerics", hc_numerics},
      {"Xi property suite", hc_properties},
      {"Kazhdan formulas", kazhdan_formulas},
      {"orbit packing", packing},
      {"structural invariants", structural},
  };
  int failed = 0, index = 0;
  for (const auto& c : criteria) {
    ++index;
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %d %s (%.1fs)%s%s\n", o.pass ? "PASS" : "FAIL", index, c.name, secs, o.pass ? "" : ": ",
                o.pass ? "" : o.why.str().c_str());
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
