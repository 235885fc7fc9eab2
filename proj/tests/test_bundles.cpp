#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "charp/bundles.hpp"
#include "charp/error.hpp"

using namespace charp;

namespace {

Weight W(const DatumPtr& d, IntVector v) { return Weight(d, std::move(v)); }

std::vector<IntVector> coords_of(const std::vector<Weight>& ws) {
  std::vector<IntVector> out;
  for (const auto& w : ws) out.push_back(w.coords());
  return out;
}

std::vector<Weight> sorted(std::vector<Weight> ws) {
  std::sort(ws.begin(), ws.end());
  return ws;
}

EquivariantBundleWeights bundle_of(const DatumPtr& d, std::vector<IntVector> ws) {
  EquivariantBundleWeights b{d, {}, "E"};
  for (auto& v : ws) b.weights.push_back(W(d, std::move(v)));
  return b;
}

}  // namespace

TEST(Tautological, Examples) {
  const auto b = tautological_weights(2, 4);
  EXPECT_EQ(coords_of(b.weights), (std::vector<IntVector>{{1, 0, 0, 0}, {0, 1, 0, 0}}));
  EXPECT_EQ(b.rank(), 2u);
  EXPECT_EQ(b.datum->name(), "GL(4)");
  const auto b7 = tautological_weights(2, 7);
  EXPECT_EQ(coords_of(b7.weights), (std::vector<IntVector>{{1, 0, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0, 0}}));
}

TEST(Tautological, RangeErrors) {
  for (auto [d, N] : std::vector<std::pair<int, int>>{{1, 4}, {3, 4}, {0, 5}, {2, 3}}) {
    try {
      tautological_weights(d, N);
      ADD_FAILURE() << d << "," << N;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::RankOutOfRange);
    }
  }
}

TEST(FrobeniusTwist, Examples) {
  const auto twisted = frobenius_twist(tautological_weights(2, 4), 5);
  EXPECT_EQ(coords_of(twisted.weights), (std::vector<IntVector>{{5, 0, 0, 0}, {0, 5, 0, 0}}));
  EXPECT_EQ(twisted.label, "F*S");

  auto gl3 = make_datum(DynkinType::GL, 3);
  const auto seven = frobenius_twist(bundle_of(gl3, {{1, 0, 0}}), 7);
  EXPECT_EQ(coords_of(seven.weights), (std::vector<IntVector>{{7, 0, 0}}));
}

TEST(FrobeniusTwist, UnitTwistOnlyWhenAllowed) {
  const auto b = tautological_weights(3, 6);
  EXPECT_EQ(frobenius_twist(b, 1, {.allow_unit_twist = true}).weights, b.weights);
  EXPECT_THROW(frobenius_twist(b, 1), Error);
  EXPECT_THROW(frobenius_twist(b, 4), Error);
}

TEST(EndWeights, Examples) {
  auto gl4 = make_datum(DynkinType::GL, 4);
  const auto e = end_weights(frobenius_twist(tautological_weights(2, 4), 5));
  EXPECT_EQ(e.label, "End(F*S)");
  EXPECT_EQ(sorted(e.weights), sorted({Weight::zero(gl4), Weight::zero(gl4), W(gl4, {5, -5, 0, 0}),
                                       W(gl4, {-5, 5, 0, 0})}));
  EXPECT_EQ(coords_of(end_weights(bundle_of(gl4, {{0, 1, 0, 0}})).weights),
            (std::vector<IntVector>{{0, 0, 0, 0}}));
  EXPECT_EQ(coords_of(end_weights(bundle_of(gl4, {{1, 0, 0, 0}, {1, 0, 0, 0}})).weights),
            (std::vector<IntVector>(4, IntVector{0, 0, 0, 0})));
}

TEST(PullbackFiltration, Examples) {
  const auto e = end_weights(frobenius_twist(tautological_weights(2, 4), 5));
  EXPECT_EQ(coords_of(pullback_filtration(e)),
            (std::vector<IntVector>{{-5, 5, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {5, -5, 0, 0}}));
  auto gl3 = make_datum(DynkinType::GL, 3);
  EXPECT_EQ(coords_of(pullback_filtration(bundle_of(gl3, {{0, 0, 0}}))), (std::vector<IntVector>{{0, 0, 0}}));
}

TEST(BundleProperties, Invariants) {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<Int> dist(-6, 6);
  const std::vector<Int> primes = {2, 3, 5, 7, 11};
  for (int it = 0; it < 1000; ++it) {
    const int N = 2 + static_cast<int>(rng() % 7);
    auto d = make_datum(DynkinType::GL, N);
    const std::size_t rank = 1 + rng() % 5;
    std::vector<IntVector> ws(rank, IntVector(N));
    for (auto& v : ws)
      for (auto& x : v) x = dist(rng);
    const auto b = bundle_of(d, ws);
    const Int p = primes[rng() % primes.size()];

    const auto e = end_weights(b);
    ASSERT_EQ(e.rank(), rank * rank);
    // Closed under negation as a multiset.
    std::vector<Weight> neg;
    for (const auto& w : e.weights) neg.push_back(-w);
    ASSERT_EQ(sorted(neg), sorted(e.weights));
    // At least `rank` zero weights.
    ASSERT_GE(std::count_if(e.weights.begin(), e.weights.end(), [](const Weight& w) { return w.is_zero(); }),
              static_cast<std::ptrdiff_t>(rank));
    // Twisting commutes with taking differences.
    ASSERT_EQ(frobenius_twist(e, p).weights, end_weights(frobenius_twist(b, p)).weights);
    ASSERT_EQ(frobenius_twist(b, p).rank(), rank);
    // The filtration depends only on the multiset.
    auto shuffled = e;
    std::shuffle(shuffled.weights.begin(), shuffled.weights.end(), rng);
    ASSERT_EQ(pullback_filtration(shuffled), pullback_filtration(e));
    const auto filtration = pullback_filtration(e);
    ASSERT_TRUE(std::is_sorted(filtration.begin(), filtration.end()));
  }
}
