#include "charp/bundles.hpp"

#include <algorithm>

#include "charp/cohomology.hpp"
#include "charp/error.hpp"

namespace charp {

EquivariantBundleWeights tautological_weights(int d, int N) {
  if (d < 2 || d > N - 2)
    throw Error(ErrorCode::RankOutOfRange, "tautological bundle needs 2 <= d <= N - 2, got d = " +
                                               std::to_string(d) + ", N = " + std::to_string(N));
  EquivariantBundleWeights b;
  b.datum = make_datum(DynkinType::GL, N);
  b.label = "S";
  for (int i = 0; i < d; ++i) b.weights.push_back(Weight::basis(b.datum, static_cast<std::size_t>(i)));
  return b;
}

EquivariantBundleWeights frobenius_twist(const EquivariantBundleWeights& b, Int p,
                                         TwistOptions options) {
  if (!(p == 1 && options.allow_unit_twist) && !is_prime(p))
    throw Error(ErrorCode::NotPrime, "Frobenius twist needs a prime, got " + std::to_string(p));
  EquivariantBundleWeights out{b.datum, {}, "F*" + b.label};
  out.weights.reserve(b.weights.size());
  for (const auto& w : b.weights) out.weights.push_back(p * w);
  return out;
}

EquivariantBundleWeights end_weights(const EquivariantBundleWeights& b) {
  EquivariantBundleWeights out{b.datum, {}, "End(" + b.label + ")"};
  out.weights.reserve(b.weights.size() * b.weights.size());
  for (const auto& w : b.weights)
    for (const auto& v : b.weights) out.weights.push_back(w - v);
  return out;
}

std::vector<Weight> pullback_filtration(const EquivariantBundleWeights& b) {
  std::vector<Weight> out(b.weights);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace charp
