#pragma once

// Decay exponents p and the integers m with 2m >= p.

#include "semidecay/catalog.hpp"
#include "semidecay/lattice.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace semidecay {

enum class DecayProvenance { baseline_Lambda, improved_gamma, rank1_beta, howe_sum };

std::string_view provenance_id(DecayProvenance p);

struct DecayWeight {
  WeightVector vector;
  DecayProvenance provenance = DecayProvenance::baseline_Lambda;
};

struct ExponentReport {
  Rational q;                   // (1/3)^(#-1) or (1/3)^(#-2); the baseline prefactor
  std::optional<Rational> gamma;  // disjointness exponent actually used, if not baseline
  Rational p;
  Integer m;
  DecayWeight decay;
  WeightVector delta_b;
  std::vector<Rational> per_simple_root_ratios;
  bool dim_one_reduction = false;  // q used the dim V_lambda = 1 rule
  bool log_correction = false;     // bound holds with an epsilon loss only
};

/// sum m_alpha alpha over the positive roots.
WeightVector modular_weight(const std::vector<RootEntry>& roots, Eigen::Index rank);
WeightVector modular_weight(const GroupSpec& group);

Rational q_factor(const RepWeights& weights);

/// Smallest positive integer m with 2m >= p.
Integer minimal_m(const Rational& p);

/// Coordinatewise delta_B / decay, p = max, m minimal. q is left at zero.
ExponentReport p_from_decay(const DecayWeight& decay, const WeightVector& delta_b);

ExponentReport baseline_exponent(const WeightVector& delta_b, const RepWeights& weights);
/// V = sum of irreducibles: p is the max over components.
ExponentReport baseline_exponent(const WeightVector& delta_b, const std::vector<RepWeights>& components);
ExponentReport baseline_exponent(const GroupSpec& group, RepKind rep);

ExponentReport improved_exponent(const WeightVector& delta_b, const RepWeights& weights, const Rational& gamma);
ExponentReport improved_exponent(const GroupSpec& group, RepKind rep);

/// decay = delta * sum of the positive members of the +-lambda_i pairs.
ExponentReport howe_product_exponent(const WeightVector& delta_b, const RepWeights& weights,
                                     const Rational& per_weight_delta);
ExponentReport howe_product_exponent(const GroupSpec& group, RepKind rep, const Rational& per_weight_delta);
ExponentReport howe_product_exponent(const GroupSpec& group, RepKind rep);  // delta from the catalog

/// gamma' of the rank-one middle-weight estimate (a positive power of 1/3).
Rational rank1_gamma_prime(const RepWeights& weights);
ExponentReport rank1_prime_exponent(const WeightVector& delta_b, const RepWeights& weights);
ExponentReport rank1_prime_exponent(const GroupSpec& group, RepKind rep);

struct BestExponent {
  ExponentReport report;
  std::string mechanism;  // "baseline", "shell_improvement", "howe_product" or "rank1_beta"
};

BestExponent best_exponent(const GroupSpec& group, RepKind rep);

struct TableRow {
  GroupSpec group;
  RepKind rep = RepKind::standard;
  std::string label;  // SO0(n,1) style naming for the orthogonal family
  Rational p;
  Integer m;
  std::string mechanism;
};

/// Best catalog exponents for SL(2,k), SU(1,n), SO0(n,1), Sp(1,n), Sp(2n,C), Sp(n,m).
std::vector<TableRow> remark_table(std::pair<int, int> n_range, std::pair<int, int> m_range);

}  // namespace semidecay
