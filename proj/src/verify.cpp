#include "semidecay/verify.hpp"

#include "semidecay/error.hpp"
#include "semidecay/exponents.hpp"
#include "semidecay/kazhdan.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace semidecay {

namespace {

std::string rep_name(const CatalogRep& r) { return group_name(r.group) + " " + std::string(rep_id(r.kind)); }

class Recorder {
 public:
  Recorder(VerifyReport& out, std::string suite) : out_(out), suite_(std::move(suite)) {}

  void check(const std::string& name, const std::string& subject, bool ok, std::string detail = {}) {
    out_.results.push_back({suite_, name, subject, ok, ok ? std::string() : std::move(detail)});
  }

  // Runs `body`; an exception counts as a failure of `name`.
  void guarded(const std::string& name, const std::string& subject, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      check(name, subject, false, e.what());
    }
  }

 private:
  VerifyReport& out_;
  std::string suite_;
};

void catalog_suite(const Catalog& cat, VerifyReport& out) {
  Recorder rec(out, "catalog");
  for (const auto& g : cat.groups) {
    const std::string name = group_name(g.group);
    rec.guarded("delta_B cross-check", name, [&] {
      const WeightVector got = modular_weight(g.roots, g.group.rank);
      const WeightVector want = stated_modular_weight(g.group);
      rec.check("delta_B cross-check", name, got == want, "roots give " + to_string(got) + ", stated " + to_string(want));
    });
  }
  for (const auto& imp : cat.improvements) {
    const std::string name = group_name(imp.group) + " " + std::string(rep_id(imp.rep));
    rec.guarded("improvement-strength", name, [&] {
      auto it = std::find_if(cat.reps.begin(), cat.reps.end(),
                             [&](const CatalogRep& r) { return r.group == imp.group && r.kind == imp.rep; });
      if (it == cat.reps.end()) throw Error(Errc::invalid_input, "improvement without representation");
      const Rational q = q_factor(it->weights);
      rec.check("improvement-strength", name, imp.gamma < 0 && -imp.gamma >= q,
                "gamma " + to_string(imp.gamma) + " vs q " + to_string(q));
    });
  }
}

void lattice_suite(const Catalog& cat, VerifyReport& out) {
  Recorder rec(out, "lattice");
  for (const auto& r : cat.reps) {
    const std::string name = rep_name(r);
    const RepWeights& w = r.weights;
    rec.guarded("weight-sum-zero", name, [&] {
      const WeightVector s = weight_sum(w);
      rec.check("weight-sum-zero", name, is_zero(s), "sum is " + to_string(s));
    });
    rec.guarded("root-in-weight-span", name, [&] {
      Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic> m(w.rank(), static_cast<Eigen::Index>(w.distinct()));
      for (std::size_t i = 0; i < w.distinct(); ++i) m.col(static_cast<Eigen::Index>(i)) = w.entries[i].weight;
      const Eigen::Index rank = exact_rank(m);
      rec.check("root-in-weight-span", name, rank == r.group.rank,
                "weights span rank " + std::to_string(rank) + " of " + std::to_string(r.group.rank));
    });
    rec.guarded("positive-lambda-coordinates", name, [&] {
      rec.check("positive-lambda-coordinates", name, all_positive(w.lambda()), "lambda = " + to_string(w.lambda()));
    });
    rec.guarded("weight-order", name, [&] {
      const RepWeights o = order_weights(w);
      const Rational top = weight_length(o.lambda(), o.varrho());
      bool ok = o.lambda() == w.lambda() && o.varrho() == w.varrho();
      for (const auto& e : o.entries) ok = ok && weight_length(o.lambda(), e.weight) <= top;
      rec.check("weight-order", name, ok, "stored extremes disagree with the canonical order");
    });
  }
}

void exponents_suite(const Catalog& cat, VerifyReport& out) {
  Recorder rec(out, "exponents");
  auto minimal = [&](const std::string& name, const ExponentReport& r) {
    rec.check("m-minimality", name, 2 * Rational(r.m) >= r.p && 2 * Rational(r.m - 1) < r.p,
              "m = " + r.m.str() + " for p = " + to_string(r.p));
  };
  for (const auto& r : cat.reps) {
    const std::string name = rep_name(r);
    const CatalogGroup* g = cat.find_group(r.group);
    if (!g) {
      rec.check("m-minimality", name, false, "representation of an uncatalogued group");
      continue;
    }
    rec.guarded("m-minimality", name, [&] {
      const WeightVector delta = modular_weight(g->roots, g->group.rank);
      const ExponentReport base = baseline_exponent(delta, r.weights);
      minimal(name, base);
      if (const ImprovementRecord* imp = cat.find_improvement(r.group, r.kind)) {
        const ExponentReport better = imp->mechanism == Mechanism::howe_product
                                          ? howe_product_exponent(delta, r.weights, -imp->gamma)
                                          : improved_exponent(delta, r.weights, imp->gamma);
        minimal(name, better);
        rec.check("dominance", name, better.p <= base.p,
                  "improved " + to_string(better.p) + " exceeds baseline " + to_string(base.p));
      }
      if (r.group.rank == 1) minimal(name, rank1_prime_exponent(delta, r.weights));
    });
  }
}

void kazhdan_suite(VerifyReport& out) {
  Recorder rec(out, "kazhdan");
  rec.guarded("kappa-monotonicity", "kappa", [&] {
    bool ok = kappa(1.0) == 0.0 && kappa(0.5) == 0.25;
    double prev = kappa(1e-9);
    ok = ok && prev < kappa_supremum();
    for (int i = 1; i <= 100; ++i) {
      const double k = kappa(i / 100.0);
      ok = ok && k < prev;
      prev = k;
    }
    rec.check("kappa-monotonicity", "kappa", ok, "kappa is not strictly decreasing on (0, 1]");
  });
}

}  // namespace

bool VerifyReport::passed() const { return first_failure() == nullptr; }

const InvariantResult* VerifyReport::first_failure() const {
  auto it = std::find_if(results.begin(), results.end(), [](const InvariantResult& r) { return !r.passed; });
  return it == results.end() ? nullptr : &*it;
}

std::vector<std::string> verify_suites() { return {"catalog", "lattice", "exponents", "kazhdan"}; }

VerifyReport run_verify(const Catalog& cat, const std::vector<std::string>& only) {
  const auto known = verify_suites();
  for (const auto& s : only)
    if (std::find(known.begin(), known.end(), s) == known.end())
      throw Error(Errc::invalid_input, "unknown suite '" + s + "'");
  auto wanted = [&](const std::string& s) { return only.empty() || std::find(only.begin(), only.end(), s) != only.end(); };
  VerifyReport out;
  if (wanted("catalog")) catalog_suite(cat, out);
  if (wanted("lattice")) lattice_suite(cat, out);
  if (wanted("exponents")) exponents_suite(cat, out);
  if (wanted("kazhdan")) kazhdan_suite(out);
  return out;
}

}  // namespace semidecay
