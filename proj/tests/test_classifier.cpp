#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "hup/hup.hpp"
#include "oracles.hpp"

using namespace hup;

TEST(Fold, Examples) {
  auto one = fold_periodic({{{0.0, 2.3}}, false});
  ASSERT_EQ(one.points.size(), 1u);
  EXPECT_NEAR(one.points[0].eta, 0.3, 1e-15);
  EXPECT_TRUE(one.folded);

  auto merged = fold_periodic({{{0.0, 0.3}, {0.0, 2.3}}, false});
  ASSERT_EQ(merged.points.size(), 1u);
  EXPECT_NEAR(merged.points[0].eta, 0.3, 1e-15);

  auto neg = fold_periodic({{{1.0, -0.5}}, false});
  EXPECT_NEAR(neg.points[0].eta, 1.5, 1e-15);

  auto tiny = fold_periodic({{{0.0, -1e-18}, {0.0, 4.0}}, false});
  for (const auto& p : tiny.points) {
    EXPECT_GE(p.eta, 0.0);
    EXPECT_LT(p.eta, 2.0);
  }
  EXPECT_EQ(tiny.points.size(), 1u);
}

TEST(Fold, Idempotent) {
  std::mt19937_64 rng(71);
  std::uniform_real_distribution<double> u(-7.0, 7.0);
  LambdaSet raw;
  for (int i = 0; i < 200; ++i) raw.points.push_back({std::round(u(rng)), u(rng)});
  const auto once = fold_periodic(raw);
  const auto twice = fold_periodic(once);
  EXPECT_EQ(once.points, twice.points);
}

TEST(Fiber, Lookup) {
  const auto lambda = fold_periodic({{{0.0, 4.0 / 3}, {0.0, 2.0 / 3}, {0.0, 0.0}, {1.0, 0.5}, {0.0, 2.0}}, false});
  const auto f = fiber(lambda, 0.0);
  ASSERT_EQ(f.size(), 3u);
  EXPECT_NEAR(f[0], 0.0, 1e-15);
  EXPECT_NEAR(f[1], 2.0 / 3, 1e-15);
  EXPECT_NEAR(f[2], 4.0 / 3, 1e-15);
  EXPECT_TRUE(fiber(lambda, 5.0).empty());
  EXPECT_THROW(fiber(LambdaSet{}, 0.0), DomainError);
}

TEST(ClassifyFiber, Examples) {
  EXPECT_EQ(classify_fiber(std::vector<double>{0.0, 0.5, 1.5}, 1, 3), 3);
  EXPECT_EQ(classify_fiber(std::vector<double>{0.0, 0.5, 1.0}, 2, 3), 3);
  EXPECT_EQ(classify_fiber(std::vector<double>{0.0, 0.4, 0.9, 1.3}, 1, 3), 3);
  EXPECT_EQ(classify_fiber(std::vector<double>{0.7}, 3, 5), 1);
  EXPECT_EQ(classify_fiber(std::vector<double>{0.7, 1.1}, 3, 5), 2);
  EXPECT_THROW(classify_fiber(std::vector<double>{}, 1, 3), DomainError);
  EXPECT_THROW(classify_fiber(std::vector<double>{0.1, 0.2}, 1, 1), DomainError);
}

TEST(ClassifyFiber, EqualHValuesStayInClassNPlusOne) {
  // Cube roots of unity: h_2(a, x) = a^2 + a x + x^2 vanishes for both
  // remaining x whichever root is the prefix.
  const std::vector<double> etas{0.0, 2.0 / 3, 4.0 / 3};
  EXPECT_EQ(classify_fiber(etas, 1, 3), 2);
  EXPECT_EQ(oracle::classify_brute(etas, 1, 3), 2);
}

TEST(ClassifyFiber, CapExceeded) {
  std::vector<double> etas;
  for (int i = 0; i < 40; ++i) etas.push_back(0.04 * i);
  EXPECT_GT(classifier_search_size(etas.size(), 10), tolerances().subset_cap);
  EXPECT_THROW(classify_fiber(etas, 10, 60), CapExceededError);
}

TEST(ClassifyFiber, PermutationInvariantAndMonotone) {
  std::mt19937_64 rng(72);
  std::uniform_real_distribution<double> u(0.0, 2.0);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = trial % 4;
    const int p = n + 1 + trial % 3;
    std::vector<double> etas;
    const int m = 1 + trial % 7;
    for (int i = 0; i < m; ++i) etas.push_back(u(rng));
    const int cls = classify_fiber(etas, n, p);
    auto shuffled = etas;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    EXPECT_EQ(classify_fiber(shuffled, n, p), cls);
    etas.push_back(u(rng));
    EXPECT_GE(classify_fiber(etas, n, p), cls);
  }
}

TEST(Partition, Examples) {
  const auto single = partition(fold_periodic({{{0.25, 0.75}}, false}), 2, 5);
  ASSERT_EQ(single.fibers.size(), 1u);
  EXPECT_EQ(single.fibers.begin()->second.cls, 1);

  const int n = 2;
  LambdaSet grid;
  for (double xi : grid_points(-5.0, 5.0, 0.25))
    for (int k = 0; k <= n; ++k) grid.points.push_back({xi, 2.0 * k / (n + 1)});
  const auto part = partition(fold_periodic(grid), n, n + 1);
  for (const auto& [xi, f] : part.fibers) EXPECT_EQ(f.cls, n + 1) << xi;
  const auto sizes = part.class_sizes(n);
  EXPECT_EQ(sizes[static_cast<std::size_t>(n) + 1], part.fibers.size());
  EXPECT_THROW(partition(grid, n, n + 1), DomainError);
}

TEST(Partition, AgreesWithBruteForce) {
  std::mt19937_64 rng(73);
  std::uniform_real_distribution<double> u(0.0, 2.0);
  std::uniform_int_distribution<int> xi_pick(0, 4);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = trial % 4;
    const int p = std::min(6, n + 1 + trial % 4);
    LambdaSet raw;
    for (int i = 0; i < 20; ++i) raw.points.push_back({static_cast<double>(xi_pick(rng)), u(rng) + 2.0 * xi_pick(rng)});
    const auto lambda = fold_periodic(raw);
    const auto part = partition(lambda, n, p);
    std::size_t total = 0;
    for (auto s : part.class_sizes(n)) total += s;
    EXPECT_EQ(total, part.fibers.size());
    for (const auto& [xi, f] : part.fibers) {
      if (f.etas.size() > 8) continue;
      EXPECT_EQ(f.cls, oracle::classify_brute(f.etas, n, p)) << "n=" << n << " p=" << p;
    }
  }
}
