#include <gtest/gtest.h>

#include <random>

#include "hup/measures.hpp"
#include "oracles.hpp"

using namespace hup;

namespace {
DensityAtom atom(AtomKind k, double center, double width, cplx amp = 1.0, double inner = 0.0) {
  return DensityAtom{k, center, width, amp, inner};
}
const Density unit_gaussian = Density::single(atom(AtomKind::gaussian, 0.0, 1.0));
}  // namespace

class AtomTransform : public ::testing::TestWithParam<DensityAtom> {};

TEST_P(AtomTransform, ClosedFormMatchesQuadrature) {
  const Density f = Density::single(GetParam());
  for (int xi = -5; xi <= 5; ++xi)
    EXPECT_LE(std::abs(f.ft(xi) - oracle::ft_by_quadrature(f, xi)), 1e-9) << "xi=" << xi;
  for (double xi : {0.37, -2.71, 4.05})
    EXPECT_LE(std::abs(f.ft(xi) - oracle::ft_by_quadrature(f, xi)), 1e-9) << "xi=" << xi;
}

TEST_P(AtomTransform, ZeroFrequencyIsMass) {
  const Density f = Density::single(GetParam());
  EXPECT_LE(std::abs(f.ft(0.0) - oracle::ft_by_quadrature(f, 0.0)), 1e-11);
}

INSTANTIATE_TEST_SUITE_P(
    Kinds, AtomTransform,
    ::testing::Values(atom(AtomKind::gaussian, 0.0, 1.0), atom(AtomKind::gaussian, 0.7, 0.4, {0.5, -1.2}),
                      atom(AtomKind::box, 0.0, 1.0), atom(AtomKind::box, -1.3, 0.25, {0.0, 2.0}),
                      atom(AtomKind::triangle, 0.0, 1.0), atom(AtomKind::triangle, 2.0, 0.6, -1.5),
                      atom(AtomKind::odd_bump, 0.0, 1.0), atom(AtomKind::odd_bump, 0.0, 1.0, 1.0, 1.2),
                      atom(AtomKind::odd_bump, 0.4, 0.3, {1.0, 1.0}, 0.1)));

TEST(DensityAtom, GaussianMassAndOddBump) {
  EXPECT_NEAR(std::abs(unit_gaussian.ft(0.0) - cplx(1.0)), 0.0, 1e-15);
  const auto g = Density::single(atom(AtomKind::gaussian, 0.0, 0.5));
  EXPECT_NEAR(g.ft(0.0).real(), std::sqrt(pi / g.atoms()[0].gaussian_rate()), 1e-15);

  const Density odd = Density::single(atom(AtomKind::odd_bump, 0.0, 0.8, 1.0, 0.3));
  EXPECT_LE(std::abs(odd.ft(0.0)), 1e-15);
  for (double xi : {0.3, 1.7, -4.2}) {
    EXPECT_LE(std::abs(odd.ft(xi).real()), 1e-15);
    EXPECT_LE(std::abs(odd.ft(-xi) + odd.ft(xi)), 1e-15);
  }
  for (double t : {0.35, 0.6, 1.05}) EXPECT_EQ(odd(t), -odd(-t));
  EXPECT_EQ(odd(0.2), cplx(0.0));
  EXPECT_EQ(odd(1.2), cplx(0.0));
}

TEST(DensityAtom, Validation) {
  EXPECT_THROW(Density::single(atom(AtomKind::box, 0.0, 0.0)), DomainError);
  EXPECT_THROW(Density::single(atom(AtomKind::gaussian, 0.0, 1.0, 1.0, 0.5)), DomainError);
}

TEST(LineSystem, Examples) {
  const LineMeasure single({0.0}, {unit_gaussian});
  for (double eta : {0.0, 0.3, 1.9}) EXPECT_EQ(line_system_ft(single, 0.8, eta), unit_gaussian.ft(0.8));

  const LineMeasure pair({0.0, 1.0}, {unit_gaussian, unit_gaussian});
  for (double xi : {-3.0, 0.0, 0.4}) EXPECT_LE(std::abs(line_system_ft(pair, xi, 1.0)), 1e-15);

  const LineMeasure three({0.0, 1.0, 2.0}, {unit_gaussian, Density{}, -unit_gaussian});
  for (double xi : {-1.0, 0.0, 2.5}) {
    EXPECT_LE(std::abs(line_system_ft(three, xi, 0.0)), 1e-15);
    EXPECT_LE(std::abs(line_system_ft(three, xi, 1.0)), 1e-15);
  }
  EXPECT_THROW(LineMeasure({1.0, 0.0}, {unit_gaussian, unit_gaussian}), DomainError);
  EXPECT_THROW(LineMeasure({0.0}, {}), DomainError);
}

TEST(LineSystem, PeriodicAndLinear) {
  std::mt19937_64 rng(61);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  const Density f1 = Density{atom(AtomKind::triangle, 0.2, 0.7), atom(AtomKind::gaussian, -1.0, 0.5, {0, 1})};
  const Density f2 = Density::single(atom(AtomKind::box, 0.5, 0.3, 2.0));
  const auto m1 = LineMeasure::canonical(1, 4, {f1, f2, f1});
  const auto m2 = LineMeasure::canonical(1, 4, {f2, f2, unit_gaussian});
  const cplx s{0.3, -1.1};
  const auto combo = LineMeasure::canonical(1, 4, {f1 + s * f2, f2 + s * f2, f1 + s * unit_gaussian});
  for (int i = 0; i < 100; ++i) {
    const double xi = u(rng);
    const double eta = u(rng);
    EXPECT_LE(std::abs(line_system_ft(m1, xi, eta + 2.0) - line_system_ft(m1, xi, eta)), 1e-12);
    EXPECT_LE(std::abs(line_system_ft(combo, xi, eta) -
                       (line_system_ft(m1, xi, eta) + s * line_system_ft(m2, xi, eta))),
              1e-12);
  }
}

TEST(Cross, DiagonalAndAntisymmetry) {
  std::mt19937_64 rng(62);
  std::uniform_real_distribution<double> u(-4.0, 4.0);
  const CrossMeasure m({unit_gaussian, Density::single(atom(AtomKind::box, 0.3, 0.5, {0, 1})),
                        Density::single(atom(AtomKind::triangle, -0.2, 1.1))});
  for (int i = 0; i < 100; ++i) {
    const double a = u(rng);
    const double b = u(rng);
    EXPECT_EQ(cross_ft(m, a, a), cplx(0.0));
    EXPECT_LE(std::abs(cross_ft(m, a, b) + cross_ft(m, b, a)), 1e-12);
  }
}

TEST(Cross, SingleLevelClosedForm) {
  const CrossMeasure m({unit_gaussian});
  const cplx want = 1.0 - std::exp(-pi);  // f^(0) - f^(2) with f^(t) = e^{-pi t^2 / 4}
  EXPECT_LE(std::abs(cross_ft(m, 0.0, 2.0) - want), 1e-15);
  const CrossMeasure zero({Density{}, Density{}});
  EXPECT_EQ(cross_ft(zero, 0.4, -1.3), cplx(0.0));
}

TEST(ConsecutiveWitness, Structure) {
  const auto w1 = construct_consecutive_witness(1, unit_gaussian);
  EXPECT_EQ(w1.measure.heights(), (std::vector<double>{0, 1, 2}));
  EXPECT_EQ(w1.lambda_heights, (std::vector<double>{0, 1}));
  const auto w4 = construct_consecutive_witness(4, unit_gaussian);
  ASSERT_EQ(w4.lambda_heights.size(), 5u);
  for (int k = 0; k < 5; ++k) EXPECT_NEAR(w4.lambda_heights[static_cast<std::size_t>(k)], 0.4 * k, 1e-15);
  EXPECT_THROW(construct_consecutive_witness(0, unit_gaussian), DomainError);
  EXPECT_THROW(construct_consecutive_witness(2, Density{}), DegenerateWitnessError);
}

TEST(ConsecutiveWitness, VanishesOnLambdaOnly) {
  for (int n = 1; n <= 4; ++n) {
    const auto w = construct_consecutive_witness(n, unit_gaussian);
    double on = 0.0;
    for (double xi : grid_points(-10.0, 10.0, 0.02))
      for (double eta : w.lambda_heights) on = std::max(on, std::abs(line_system_ft(w.measure, xi, eta)));
    EXPECT_LE(on, 1e-12);
    // At eta = 1/(n+1) the transform is -2 f^(0) = -2.
    EXPECT_NEAR(std::abs(line_system_ft(w.measure, 0.0, 1.0 / (n + 1))), 2.0, 1e-12);
  }
}

TEST(CrossWitness, Constructions) {
  const auto m0 = construct_cross_diagonal_witness(0, {unit_gaussian});
  double diag = 0.0;
  double shifted = 0.0;
  for (double t : linspace(-10.0, 10.0, 1001)) {
    diag = std::max(diag, std::abs(cross_ft(m0, t, t)));
    shifted = std::max(shifted, std::abs(cross_ft(m0, t, t + 1.0)));
  }
  EXPECT_LE(diag, 1e-12);
  EXPECT_GT(shifted, 0.1);

  const Density f0 = Density::single(atom(AtomKind::odd_bump, 0.0, 1.0));
  const auto m1 = construct_cross_diagonal_witness(1, {f0, -f0});
  double axis = 0.0;
  for (double t : linspace(-10.0, 10.0, 1001)) axis = std::max(axis, std::abs(cross_ft(m1, t, 0.0)));
  EXPECT_LE(axis, 1e-12);

  EXPECT_THROW(construct_cross_diagonal_witness(1, {Density{}, Density{}}), DegenerateWitnessError);
  EXPECT_THROW(construct_cross_diagonal_witness(1, {unit_gaussian}), DomainError);

  const auto m2 = construct_cross_axis_witness(f0);
  for (double t : {-3.3, 0.4, 7.9}) EXPECT_EQ(cross_ft(m2, t, 0.0), cross_ft(m1, t, 0.0));
  EXPECT_THROW(construct_cross_axis_witness(unit_gaussian), DomainError);
  EXPECT_THROW(construct_cross_axis_witness(Density{}), DegenerateWitnessError);
}

TEST(Periodicity, Residual) {
  EXPECT_EQ(translation_periodicity_residual(Density{}, 1.0, 11), 0.0);
  const double r = translation_periodicity_residual(unit_gaussian, 1.0, 401);
  EXPECT_GT(r, 0.5);
  EXPECT_GE(r, 1.0 - std::exp(-pi / 4) - 1e-15);
  EXPECT_NEAR(translation_periodicity_residual(unit_gaussian, -1.0, 401), r, 1e-15);
  EXPECT_THROW(translation_periodicity_residual(unit_gaussian, 0.0, 11), DomainError);
  EXPECT_THROW(translation_periodicity_residual(unit_gaussian, 1.0, 1), DomainError);
}
