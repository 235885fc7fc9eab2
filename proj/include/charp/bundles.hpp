#pragma once

// Weight-level model of GL_N-equivariant bundles on Grassmannians: a bundle
// is recorded by the T-weights of its defining parabolic representation.

#include <string>
#include <vector>

#include "charp/lattice.hpp"

namespace charp {

struct EquivariantBundleWeights {
  DatumPtr datum;
  std::vector<Weight> weights;  // multiset, insertion order kept
  std::string label;

  std::size_t rank() const { return weights.size(); }
};

// l_1, ..., l_d in GL(N), for 2 <= d <= N - 2.
EquivariantBundleWeights tautological_weights(int d, int N);

struct TwistOptions {
  // Permits p = 1, which returns the bundle unchanged. Testing only.
  bool allow_unit_twist = false;
};

EquivariantBundleWeights frobenius_twist(const EquivariantBundleWeights& b, Int p,
                                         TwistOptions options = {});

// {w - w'} over all ordered pairs, i-major.
EquivariantBundleWeights end_weights(const EquivariantBundleWeights& b);

// The line-bundle filtration of the pullback to G/B: the weights of `b`
// in lexicographic order.
std::vector<Weight> pullback_filtration(const EquivariantBundleWeights& b);

}  // namespace charp
