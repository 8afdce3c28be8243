#include "semidecay/lattice.hpp"

#include "semidecay/error.hpp"

#include <algorithm>

namespace semidecay {

WeightVector descent_coefficients(const WeightVector& lambda, const WeightVector& phi) {
  if (lambda.size() != phi.size()) throw Error(Errc::rank_mismatch, "weights of different rank");
  return lambda - phi;
}

Rational weight_length(const WeightVector& lambda, const WeightVector& phi) {
  return descent_coefficients(lambda, phi).sum();
}

RepWeights order_weights(RepWeights weights) {
  auto& in = weights.entries;
  if (in.empty()) throw Error(Errc::malformed_weight_set, "empty weight set");
  const Eigen::Index rank = in.front().weight.size();
  for (const auto& e : in) {
    if (e.weight.size() != rank) throw Error(Errc::rank_mismatch, "weights of different rank");
    if (e.dim < 1) throw Error(Errc::malformed_weight_set, "weight space dimension must be positive");
  }

  std::vector<WeightEntry> merged;
  for (const auto& e : in) {
    auto it = std::find_if(merged.begin(), merged.end(),
                           [&](const WeightEntry& m) { return m.weight == e.weight; });
    if (it == merged.end())
      merged.push_back(e);
    else
      it->dim += e.dim;
  }

  // lambda is the weight of largest coordinate sum; it must dominate every other weight.
  auto top = std::max_element(merged.begin(), merged.end(), [](const WeightEntry& a, const WeightEntry& b) {
    return a.weight.sum() < b.weight.sum();
  });
  const WeightVector lambda = top->weight;
  for (const auto& e : merged)
    if (!all_nonnegative(lambda - e.weight))
      throw Error(Errc::malformed_weight_set,
                  "weight " + to_string(e.weight) + " is not below " + to_string(lambda));

  std::sort(merged.begin(), merged.end(), [&](const WeightEntry& a, const WeightEntry& b) {
    const WeightVector ca = lambda - a.weight;
    const WeightVector cb = lambda - b.weight;
    const Rational la = ca.sum(), lb = cb.sum();
    if (la != lb) return la < lb;
    return lex_less(ca, cb);
  });

  RepWeights out;
  out.entries = std::move(merged);
  out.highest = 0;
  out.lowest = out.entries.size() - 1;
  return out;
}

WeightVector middle_weight(const RepWeights& weights) {
  if (weights.rank() != 1) throw Error(Errc::rank_mismatch, "middle weight needs a rank-one weight set");
  const RepWeights ordered = order_weights(weights);
  const std::size_t count = ordered.distinct();
  if (count < 2) throw Error(Errc::degenerate_representation, "fewer than two weights");
  const std::size_t index = count % 2 == 0 ? count / 2 : (count - 1) / 2;  // 1-indexed
  return ordered.entries[index - 1].weight;
}

WeightVector weight_sum(const RepWeights& weights) {
  WeightVector total = zero_weight(weights.rank());
  for (const auto& e : weights.entries) total += Rational(e.dim) * e.weight;
  return total;
}

RepWeights make_rep_weights(std::vector<WeightEntry> entries) {
  RepWeights w;
  w.entries = std::move(entries);
  return order_weights(std::move(w));
}

}  // namespace semidecay
