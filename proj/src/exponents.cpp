#include "semidecay/exponents.hpp"

#include "semidecay/error.hpp"

#include <algorithm>

namespace semidecay {

namespace {

WeightVector extreme_difference(const RepWeights& w) {
  const RepWeights ordered = order_weights(w);
  return ordered.lambda() - ordered.varrho();
}

}  // namespace

std::string_view provenance_id(DecayProvenance p) {
  switch (p) {
    case DecayProvenance::baseline_Lambda: return "baseline_Lambda";
    case DecayProvenance::improved_gamma: return "improved_gamma";
    case DecayProvenance::rank1_beta: return "rank1_beta";
    case DecayProvenance::howe_sum: return "howe_sum";
  }
  return "?";
}

WeightVector modular_weight(const std::vector<RootEntry>& roots, Eigen::Index rank) {
  WeightVector total = zero_weight(rank);
  for (const auto& r : roots) {
    if (r.root.size() != rank) throw Error(Errc::rank_mismatch, "root of wrong rank");
    total += Rational(r.multiplicity) * r.root;
  }
  return total;
}

WeightVector modular_weight(const GroupSpec& group) { return modular_weight(lookup_root_data(group), group.rank); }

Rational q_factor(const RepWeights& weights) {
  const RepWeights ordered = order_weights(weights);
  const int count = static_cast<int>(ordered.distinct());
  if (count < 2) throw Error(Errc::degenerate_representation, "a representation needs at least two weights");
  const Rational third(1, 3);
  return ordered.lambda_dim() == 1 ? pow(third, count - 2) : pow(third, count - 1);
}

Integer minimal_m(const Rational& p) {
  Integer m = ceil(p / 2);
  return m < 1 ? Integer(1) : m;
}

ExponentReport p_from_decay(const DecayWeight& decay, const WeightVector& delta_b) {
  if (decay.vector.size() != delta_b.size()) throw Error(Errc::rank_mismatch, "decay and delta_B differ in rank");
  if (!all_nonnegative(decay.vector) || is_zero(decay.vector))
    throw Error(Errc::not_excellent, "decay weight " + to_string(decay.vector) + " is not positive");
  ExponentReport r;
  r.decay = decay;
  r.delta_b = delta_b;
  r.p = 0;
  for (Eigen::Index j = 0; j < delta_b.size(); ++j) {
    Rational ratio = 0;
    if (decay.vector[j] == 0) {
      if (delta_b[j] > 0)
        throw Error(Errc::not_excellent, "decay vanishes on simple root " + std::to_string(j + 1));
    } else {
      ratio = delta_b[j] / decay.vector[j];
    }
    r.per_simple_root_ratios.push_back(ratio);
    r.p = std::max(r.p, ratio);
  }
  if (r.p <= 0) throw Error(Errc::not_excellent, "delta_B vanishes");
  r.m = minimal_m(r.p);
  return r;
}

ExponentReport baseline_exponent(const WeightVector& delta_b, const RepWeights& weights) {
  const Rational q = q_factor(weights);
  ExponentReport r = p_from_decay({(q / 2) * extreme_difference(weights), DecayProvenance::baseline_Lambda}, delta_b);
  r.q = q;
  r.dim_one_reduction = order_weights(weights).lambda_dim() == 1;
  return r;
}

ExponentReport baseline_exponent(const WeightVector& delta_b, const std::vector<RepWeights>& components) {
  if (components.empty()) throw Error(Errc::invalid_input, "no components");
  std::optional<ExponentReport> worst;
  for (const auto& c : components) {
    ExponentReport r = baseline_exponent(delta_b, c);
    if (!worst || worst->p < r.p) worst = std::move(r);
  }
  return *worst;
}

ExponentReport baseline_exponent(const GroupSpec& group, RepKind rep) {
  return baseline_exponent(modular_weight(group), lookup_rep_weights(group, rep));
}

ExponentReport improved_exponent(const WeightVector& delta_b, const RepWeights& weights, const Rational& gamma) {
  if (gamma >= 0) throw Error(Errc::invalid_input, "gamma must be negative");
  ExponentReport r =
      p_from_decay({(-gamma / 2) * extreme_difference(weights), DecayProvenance::improved_gamma}, delta_b);
  r.q = q_factor(weights);
  r.gamma = gamma;
  return r;
}

ExponentReport improved_exponent(const GroupSpec& group, RepKind rep) {
  const ImprovementRecord rec = lookup_improvement(group, rep);
  if (rec.mechanism != Mechanism::shell_improvement)
    throw Error(Errc::no_improvement, group_name(group) + " is improved by a Howe product, not a shell");
  ExponentReport r = improved_exponent(modular_weight(group), lookup_rep_weights(group, rep), rec.gamma);
  r.log_correction = rec.log_correction;
  return r;
}

ExponentReport howe_product_exponent(const WeightVector& delta_b, const RepWeights& weights,
                                     const Rational& per_weight_delta) {
  if (per_weight_delta <= 0) throw Error(Errc::invalid_input, "per-weight delta must be positive");
  const RepWeights ordered = order_weights(weights);
  WeightVector sum = zero_weight(ordered.rank());
  std::vector<WeightVector> positives;
  for (const auto& e : ordered.entries) {
    if (is_zero(e.weight)) continue;
    const bool has_partner = std::any_of(ordered.entries.begin(), ordered.entries.end(), [&](const WeightEntry& o) {
      return o.weight == -e.weight && o.dim == e.dim;
    });
    if (!has_partner)
      throw Error(Errc::unsupported_mechanism, "weight " + to_string(e.weight) + " has no opposite partner");
    if (e.weight.sum() > 0) {
      positives.push_back(e.weight);
      sum += e.weight;
    }
  }
  Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic> basis(ordered.rank(), positives.size());
  for (std::size_t i = 0; i < positives.size(); ++i) basis.col(static_cast<Eigen::Index>(i)) = positives[i];
  if (static_cast<Eigen::Index>(positives.size()) != ordered.rank() || exact_rank(basis) != ordered.rank())
    throw Error(Errc::unsupported_mechanism, "weights are not +-lambda_i pairs on a basis");
  ExponentReport r = p_from_decay({per_weight_delta * sum, DecayProvenance::howe_sum}, delta_b);
  r.q = q_factor(weights);
  r.gamma = -per_weight_delta;
  return r;
}

ExponentReport howe_product_exponent(const GroupSpec& group, RepKind rep, const Rational& per_weight_delta) {
  return howe_product_exponent(modular_weight(group), lookup_rep_weights(group, rep), per_weight_delta);
}

ExponentReport howe_product_exponent(const GroupSpec& group, RepKind rep) {
  const ImprovementRecord rec = lookup_improvement(group, rep);
  if (rec.mechanism != Mechanism::howe_product)
    throw Error(Errc::unsupported_mechanism, group_name(group) + " has no Howe product record");
  return howe_product_exponent(group, rep, -rec.gamma);
}

Rational rank1_gamma_prime(const RepWeights& weights) {
  const RepWeights ordered = order_weights(weights);
  const int count = static_cast<int>(ordered.distinct());
  if (count < 2) throw Error(Errc::degenerate_representation, "a representation needs at least two weights");
  const Rational third(1, 3);
  const bool even = count % 2 == 0;
  if (ordered.lambda_dim() == 1) return even ? pow(third, (count - 2) / 2) : pow(third, (count - 1) / 2);
  return even ? pow(third, count / 2) : pow(third, (count + 1) / 2);
}

ExponentReport rank1_prime_exponent(const WeightVector& delta_b, const RepWeights& weights) {
  if (weights.rank() != 1 || delta_b.size() != 1) throw Error(Errc::rank_mismatch, "p' needs a rank-one group");
  const Rational g = rank1_gamma_prime(weights);
  ExponentReport r = p_from_decay({g * middle_weight(weights), DecayProvenance::rank1_beta}, delta_b);
  r.q = q_factor(weights);
  r.gamma = -g;
  return r;
}

ExponentReport rank1_prime_exponent(const GroupSpec& group, RepKind rep) {
  if (group.rank != 1) throw Error(Errc::rank_mismatch, group_name(group) + " has rank " + std::to_string(group.rank));
  return rank1_prime_exponent(modular_weight(group), lookup_rep_weights(group, rep));
}

BestExponent best_exponent(const GroupSpec& group, RepKind rep) {
  BestExponent best{baseline_exponent(group, rep), "baseline"};
  auto consider = [&](ExponentReport r, std::string name) {
    if (r.p < best.report.p) best = {std::move(r), std::move(name)};
  };
  try {
    const ImprovementRecord rec = lookup_improvement(group, rep);
    if (rec.mechanism == Mechanism::shell_improvement)
      consider(improved_exponent(group, rep), "shell_improvement");
    else if (rec.mechanism == Mechanism::howe_product)
      consider(howe_product_exponent(group, rep), "howe_product");
  } catch (const Error& e) {
    if (e.code() != Errc::no_improvement) throw;
  }
  if (group.rank == 1) consider(rank1_prime_exponent(group, rep), "rank1_beta");
  return best;
}

std::vector<TableRow> remark_table(std::pair<int, int> n_range, std::pair<int, int> m_range) {
  std::vector<TableRow> rows;
  auto add = [&](const GroupSpec& g, RepKind rep, std::string label) {
    BestExponent b = best_exponent(g, rep);
    rows.push_back({g, rep, std::move(label), b.report.p, b.report.m, b.mechanism});
  };
  const auto [n_lo, n_hi] = n_range;
  if (n_lo > n_hi) return rows;
  if (n_lo <= 2 && 2 <= n_hi)
    for (auto k : {FieldKind::real, FieldKind::complex, FieldKind::nonarchimedean}) {
      const GroupSpec g = make_group(Family::SL, 2, std::nullopt, k);
      add(g, RepKind::adjoint, group_name(g));
    }
  const int lo = std::max(n_lo, 2);
  for (int n = lo; n <= n_hi; ++n) add(make_group(Family::SU_1n, n), RepKind::standard, group_name(make_group(Family::SU_1n, n)));
  for (int n = lo; n <= n_hi; ++n)
    add(make_group(Family::SO0_1n, n), RepKind::standard, "SO0(" + std::to_string(n) + ",1)");
  for (int n = lo; n <= n_hi; ++n) add(make_group(Family::Sp_1n, n), RepKind::standard, group_name(make_group(Family::Sp_1n, n)));
  for (int n = lo; n <= n_hi; ++n) {
    const GroupSpec g = make_group(Family::Sp2n, n, std::nullopt, FieldKind::complex);
    add(g, RepKind::standard, group_name(g));
  }
  for (int n = lo; n <= n_hi; ++n)
    for (int m = std::max(n, m_range.first); m <= m_range.second; ++m) {
      const GroupSpec g = make_group(Family::Sp_nm, n, m);
      add(g, RepKind::standard, group_name(g));
    }
  return rows;
}

}  // namespace semidecay
