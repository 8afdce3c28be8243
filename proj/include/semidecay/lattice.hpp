#pragma once

#include "semidecay/rational.hpp"

#include <cstddef>
#include <vector>

namespace semidecay {

struct WeightEntry {
  WeightVector weight;
  int dim = 1;  // dimension of the weight space V_psi
};

/// A weight multiset with its extreme weights marked.
/// `highest`/`lowest` index into `entries`.
struct RepWeights {
  std::vector<WeightEntry> entries;
  std::size_t highest = 0;
  std::size_t lowest = 0;

  Eigen::Index rank() const { return entries.empty() ? 0 : entries.front().weight.size(); }
  std::size_t distinct() const { return entries.size(); }  // the count of distinct weights
  const WeightVector& lambda() const { return entries[highest].weight; }
  const WeightVector& varrho() const { return entries[lowest].weight; }
  int lambda_dim() const { return entries[highest].dim; }
};

/// Coefficients c with phi = lambda - sum c_j alpha_j, and their total L(phi).
WeightVector descent_coefficients(const WeightVector& lambda, const WeightVector& phi);
Rational weight_length(const WeightVector& lambda, const WeightVector& phi);

/// Merges repeated weights, locates lambda, and sorts by (length, lex on coefficients).
/// The result has highest == 0 and lowest == last.
/// Throws MalformedWeightSet if no weight dominates all others, RankMismatch on mixed lengths.
RepWeights order_weights(RepWeights weights);

/// The middle weight beta of a rank-one chain (1-indexed phi_{#/2} or phi_{(#-1)/2}).
WeightVector middle_weight(const RepWeights& weights);

/// sum dim(V_psi) psi.
WeightVector weight_sum(const RepWeights& weights);

/// Builds an ordered RepWeights from (weight, dim) pairs.
RepWeights make_rep_weights(std::vector<WeightEntry> entries);

}  // namespace semidecay
