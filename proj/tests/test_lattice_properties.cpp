// Randomized invariants of the lattice module. Fixed seeds, so failures
// reproduce.

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "charp/lattice.hpp"

using namespace charp;

namespace {

constexpr int kIterations = 1000;

const std::vector<DynkinType> kTypes = {DynkinType::GL, DynkinType::SL, DynkinType::SOOdd, DynkinType::Sp,
                                        DynkinType::SOEven};

Weight random_weight(std::mt19937_64& rng, const DatumPtr& d, Int bound = 20) {
  std::uniform_int_distribution<Int> dist(-bound, bound);
  IntVector v(d->lattice_rank());
  for (auto& x : v) x = dist(rng);
  return Weight(d, std::move(v));
}

DatumPtr random_datum(std::mt19937_64& rng) {
  const DynkinType type = kTypes[rng() % kTypes.size()];
  const int n = 2 + static_cast<int>(rng() % 7);  // 2..8
  return make_datum(type, n);
}

}  // namespace

TEST(LatticeProperties, ReflectionIsAnInvolution) {
  std::mt19937_64 rng(11);
  for (int it = 0; it < kIterations; ++it) {
    auto d = random_datum(rng);
    const Weight lambda = random_weight(rng, d);
    const Root alpha = d->root(rng() % d->root_count());
    ASSERT_EQ(reflect(reflect(lambda, alpha), alpha), lambda) << d->name() << " " << lambda.to_string();
  }
}

TEST(LatticeProperties, DotReflectionIsAnInvolution) {
  std::mt19937_64 rng(12);
  for (int it = 0; it < kIterations; ++it) {
    auto d = random_datum(rng);
    const Weight lambda = random_weight(rng, d);
    const Root alpha = d->simple_root(rng() % d->semisimple_rank());
    ASSERT_EQ(dot_reflect(dot_reflect(lambda, alpha), alpha), lambda) << d->name() << " " << lambda.to_string();
  }
}

TEST(LatticeProperties, PairingIsLinear) {
  std::mt19937_64 rng(13);
  for (int it = 0; it < kIterations; ++it) {
    auto d = random_datum(rng);
    const Weight a = random_weight(rng, d), b = random_weight(rng, d);
    const Root alpha = d->root(rng() % d->root_count());
    ASSERT_EQ(pairing(a + b, alpha), pairing(a, alpha) + pairing(b, alpha));
    ASSERT_EQ(pairing(3 * a, alpha), 3 * pairing(a, alpha));
  }
}

TEST(LatticeProperties, ReflectionsPermuteTheRootSet) {
  for (auto type : kTypes) {
    for (int n = 2; n <= 8; ++n) {
      auto d = make_datum(type, n);
      std::set<IntVector> roots;
      for (const auto& r : d->roots()) roots.insert(r.vector.coords());
      for (const auto& alpha : d->roots()) {
        std::set<IntVector> image;
        for (const auto& beta : d->roots()) image.insert(reflect(beta.vector, alpha).coords());
        ASSERT_EQ(image, roots) << d->name() << " reflection in " << alpha.vector.to_string();
      }
    }
  }
}

TEST(LatticeProperties, GLDominanceIsWeaklyDecreasing) {
  std::mt19937_64 rng(14);
  for (int it = 0; it < kIterations; ++it) {
    auto d = make_datum(DynkinType::GL, 1 + static_cast<int>(rng() % 8));
    const Weight lambda = random_weight(rng, d, 3);
    const auto& c = lambda.coords();
    const bool decreasing = std::is_sorted(c.begin(), c.end(), std::greater<>());
    ASSERT_EQ(is_dominant(lambda), decreasing) << lambda.to_string();
  }
}

TEST(LatticeProperties, GLWeylGroupIsFaithfulOnGenericWeights) {
  Int fact = 1;
  for (int n = 1; n <= 6; ++n) {
    fact *= n;
    auto d = make_datum(DynkinType::GL, n);
    const auto group = weyl_group(d);
    ASSERT_EQ(static_cast<Int>(group.size()), fact);
    IntVector generic(n);
    for (int i = 0; i < n; ++i) generic[i] = 10 * (i + 1) + i * i;
    std::set<IntVector> orbit;
    for (const auto& w : group) orbit.insert(w(Weight(d, generic)).coords());
    EXPECT_EQ(static_cast<Int>(orbit.size()), fact) << "GL(" << n << ")";
  }
}

TEST(LatticeProperties, WeylElementsPreserveRootsAndPairings) {
  std::mt19937_64 rng(15);
  for (auto type : kTypes) {
    auto d = make_datum(type, 3);
    std::set<IntVector> roots;
    for (const auto& r : d->roots()) roots.insert(r.vector.coords());
    for (const auto& w : weyl_group(d)) {
      std::set<IntVector> image;
      for (const auto& r : d->roots()) image.insert(w(r.vector).coords());
      ASSERT_EQ(image, roots) << d->name();
      // dot action is the rho-shifted linear action
      const Weight lambda = random_weight(rng, d);
      const Weight twice = w.dot(w.inverse().dot(lambda));
      ASSERT_EQ(twice, lambda);
    }
  }
}

TEST(LatticeProperties, DotActionOfProductsComposes) {
  std::mt19937_64 rng(16);
  for (auto type : kTypes) {
    auto d = make_datum(type, 4);
    for (int it = 0; it < 200; ++it) {
      const Weight lambda = random_weight(rng, d);
      WeylElement w = WeylElement::identity(d);
      Weight acted = lambda;
      for (int k = 0; k < 6; ++k) {
        const std::size_t i = rng() % d->semisimple_rank();
        w = WeylElement::simple_reflection(d, i) * w;
        acted = dot_reflect(acted, d->simple_root(i));
      }
      ASSERT_EQ(w.dot(lambda), acted) << d->name();
    }
  }
}
