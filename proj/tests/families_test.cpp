#include <gtest/gtest.h>

#include <numbers>
#include <random>

#include "oracles.hpp"
#include "schwarzlab/families.hpp"
#include "schwarzlab/inequalities.hpp"

namespace schwarzlab {
namespace {

constexpr double kPi = std::numbers::pi;

double max_diff(const TruncatedSeries& s, const oracle::Coeffs& want) {
  double worst = 0.0;
  for (std::size_t k = 0; k < want.size(); ++k) {
    worst = std::max(worst, std::abs(s[k] - want[k]));
  }
  return worst;
}

TruncatedSeries worked_example_w() {
  return expand_schwarz(SchwarzGenerator{B2Extremal{0.5, kPi}}, 4);
}

TEST(CayleyFromSchwarz, IdentityGivesAllTwos) {
  const TruncatedSeries p =
      cayley_from_schwarz(TruncatedSeries::identity(kDefaultOrder), 0.0);
  EXPECT_EQ(p[0], Complex(1.0));
  for (std::size_t k = 1; k <= kDefaultOrder; ++k) EXPECT_EQ(p[k], Complex(2.0));
}

TEST(CayleyFromSchwarz, ZeroGivesConstantOne) {
  EXPECT_EQ(cayley_from_schwarz(TruncatedSeries(6), 1.3),
            TruncatedSeries::constant(1.0, 6));
}

TEST(CayleyFromSchwarz, WorkedExampleAgainstDivisionOracle) {
  const oracle::Coeffs w{0.0, 0.5, -0.75, -0.375, -0.1875};
  const oracle::Coeffs want = oracle::cayley_by_division(w, 0.0);
  // The oracle gives (1, 1, -1, -2, -1); freeze it.
  const oracle::Coeffs frozen{1.0, 1.0, -1.0, -2.0, -1.0};
  EXPECT_LT(max_diff(TruncatedSeries(want), frozen), 1e-15);
  EXPECT_LT(max_diff(cayley_from_schwarz(TruncatedSeries(w), 0.0), frozen),
            1e-14);
}

TEST(CayleyFromSchwarz, MatchesDivisionOracleAndClosedExpansion) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const auto b = oracle::random_unit_tuple(rng, kDefaultOrder);
    const double theta = 2.0 * kPi * (trial / 200.0);
    const TruncatedSeries p = cayley_from_schwarz(TruncatedSeries(b), theta);
    EXPECT_LT(max_diff(p, oracle::cayley_by_division(b, theta)), 1e-12);

    // Low-order coefficients written out by hand.
    const Complex e1 = std::polar(1.0, theta), e2 = std::polar(1.0, 2 * theta),
                  e3 = std::polar(1.0, 3 * theta), e4 = std::polar(1.0, 4 * theta);
    const Complex b1 = b[1], b2 = b[2], b3 = b[3], b4 = b[4];
    EXPECT_LT(std::abs(p[1] - 2.0 * e1 * b1), 1e-12);
    EXPECT_LT(std::abs(p[2] - 2.0 * (e2 * b1 * b1 + e1 * b2)), 1e-12);
    EXPECT_LT(std::abs(p[3] - 2.0 * (e3 * b1 * b1 * b1 + 2.0 * e2 * b1 * b2 +
                                     e1 * b3)),
              1e-12);
    EXPECT_LT(std::abs(p[4] - 2.0 * (e4 * b1 * b1 * b1 * b1 +
                                     3.0 * e3 * b1 * b1 * b2 +
                                     2.0 * e2 * b1 * b3 + e2 * b2 * b2 +
                                     e1 * b4)),
              1e-12);
  }
}

TEST(CayleyFromSchwarz, RejectsNonzeroConstant) {
  EXPECT_THROW(cayley_from_schwarz(TruncatedSeries::constant(0.1, 4), 0.0),
               CompositionDomainError);
}

TEST(InverseCayley, Examples) {
  TruncatedSeries twos = TruncatedSeries::constant(1.0, 8);
  for (std::size_t k = 1; k <= 8; ++k) twos[k] = 2.0;
  EXPECT_LT(max_abs_diff(inverse_cayley(twos, 0.0),
                         TruncatedSeries::identity(8)),
            1e-15);
  EXPECT_EQ(inverse_cayley(TruncatedSeries::constant(1.0, 5), 0.7),
            TruncatedSeries(5));
  EXPECT_THROW(inverse_cayley(TruncatedSeries::constant(2.0, 5), 0.0),
               InputError);
}

TEST(InverseCayley, RoundtripOverSchwarzCorpus) {
  for (const auto& g : sample_schwarz(5, 300, 6)) {
    const TruncatedSeries w = expand_schwarz(g, kDefaultOrder);
    for (double theta : {0.0, 1.0, 2.0, kPi}) {
      EXPECT_LT(max_abs_diff(inverse_cayley(cayley_from_schwarz(w, theta),
                                            theta),
                             w),
                1e-12);
    }
  }
}

TEST(ExpandSchwarz, B2ExtremalWorkedExample) {
  const oracle::Coeffs want = oracle::b2_extremal_by_geometric(0.5, kPi, 4);
  const oracle::Coeffs frozen{0.0, 0.5, -0.75, -0.375, -0.1875};
  EXPECT_LT(max_diff(TruncatedSeries(want), frozen), 1e-15);
  EXPECT_LT(max_diff(worked_example_w(), frozen), 1e-15);
}

TEST(ExpandSchwarz, B2ExtremalMatchesGeometricOracle) {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    const Complex b1 = std::polar(0.99 * u(rng), 2 * kPi * u(rng));
    const double theta = 2 * kPi * u(rng);
    const TruncatedSeries w =
        expand_schwarz(SchwarzGenerator{B2Extremal{b1, theta}}, kDefaultOrder);
    EXPECT_LT(max_diff(w, oracle::b2_extremal_by_geometric(b1, theta,
                                                           kDefaultOrder)),
              1e-13);
    // |b2| = 1 - |b1|^2 on the whole family.
    EXPECT_NEAR(std::abs(w[2]), 1.0 - std::norm(b1), 1e-12);
  }
}

TEST(ExpandSchwarz, B2ExtremalBranches) {
  EXPECT_EQ(expand_schwarz(SchwarzGenerator{B2Extremal{0.0, 0.0}}, 4),
            TruncatedSeries::monomial(1.0, 2, 4));
  const Complex unimodular = std::polar(1.0, 0.4);
  const TruncatedSeries w =
      expand_schwarz(SchwarzGenerator{B2Extremal{unimodular, 1.0}}, 4);
  EXPECT_LT(max_abs_diff(w, TruncatedSeries::monomial(unimodular, 1, 4)),
            1e-15);
  EXPECT_THROW(expand_schwarz(SchwarzGenerator{B2Extremal{1.1, 0.0}}, 4),
               InvalidGenerator);
}

TEST(ExpandSchwarz, MonomialRotation) {
  const TruncatedSeries w =
      expand_schwarz(SchwarzGenerator{MonomialRotation{3, 0.0}}, 5);
  EXPECT_EQ(w, TruncatedSeries(std::vector<Complex>{0, 0, 0, 1, 0, 0}));
  EXPECT_THROW(expand_schwarz(SchwarzGenerator{MonomialRotation{0, 0.0}}, 5),
               InvalidGenerator);
}

TEST(ExpandSchwarz, BlaschkeValidation) {
  EXPECT_THROW(expand_schwarz(SchwarzGenerator{FiniteBlaschke{0.0, 0, {}}}, 4),
               InvalidGenerator);
  EXPECT_THROW(
      expand_schwarz(SchwarzGenerator{FiniteBlaschke{0.0, 1, {0.96}}}, 4),
      InvalidGenerator);
  EXPECT_NO_THROW(
      expand_schwarz(SchwarzGenerator{FiniteBlaschke{0.0, 1, {0.95}}}, 4));
}

TEST(ExpandSchwarz, BlaschkeZeroAtOriginIsZ) {
  const TruncatedSeries with_zero =
      expand_schwarz(SchwarzGenerator{FiniteBlaschke{0.3, 1, {0.0}}}, 6);
  const TruncatedSeries plain =
      expand_schwarz(SchwarzGenerator{FiniteBlaschke{0.3, 2, {}}}, 6);
  EXPECT_EQ(with_zero, plain);
}

TEST(ExpandSchwarz, SingleZeroBlaschkeReproducesWorkedExample) {
  // e^{i pi} z (z - 0.5) / (1 - 0.5 z) = z (0.5 - z) / (1 - 0.5 z).
  const TruncatedSeries w =
      expand_schwarz(SchwarzGenerator{FiniteBlaschke{kPi, 1, {0.5}}}, 4);
  EXPECT_LT(max_abs_diff(w, worked_example_w()), 1e-15);
}

TEST(ExpandSchwarz, SeriesAgreesWithClosedForm) {
  // At |z| = 0.3 the order-40 tail of a radius-0.9 Blaschke product is tiny.
  for (const auto& g : sample_schwarz(8, 50, 6)) {
    const TruncatedSeries w = expand_schwarz(g, 40);
    for (int j = 0; j < 8; ++j) {
      const Complex z = std::polar(0.3, 2 * kPi * j / 8);
      EXPECT_LT(std::abs(w.evaluate(z) - evaluate_schwarz(g, z)), 1e-12);
    }
  }
}

TEST(ExpandSchwarz, RotationCovariance) {
  const double delta = 0.77;
  for (const auto& g : sample_schwarz(31, 100, 6)) {
    FiniteBlaschke rotated = std::get<FiniteBlaschke>(g.kind);
    rotated.phi += delta;
    const TruncatedSeries w = expand_schwarz(g, kDefaultOrder);
    const TruncatedSeries wr =
        expand_schwarz(SchwarzGenerator{rotated}, kDefaultOrder);
    EXPECT_LT(max_abs_diff(scale(w, std::polar(1.0, delta)), wr), 1e-14);
    EXPECT_NEAR(check_b2_bound(w).slack, check_b2_bound(wr).slack, 1e-14);
    EXPECT_NEAR(check_b3_bound(w).slack, check_b3_bound(wr).slack, 1e-14);
  }
}

TEST(ExpandSchwarz, InverseCayleyOfHerglotz) {
  const CaratheodoryGenerator p{HerglotzAtoms{{{0.25, 0.3}, {0.75, 2.0}}}};
  const SchwarzGenerator g = make_inverse_cayley(p, 0.4);
  const TruncatedSeries w = expand_schwarz(g, kDefaultOrder);
  EXPECT_EQ(w[0], Complex(0.0));
  EXPECT_LT(max_abs_diff(cayley_from_schwarz(w, 0.4),
                         expand_caratheodory(p, kDefaultOrder)),
            1e-12);
  for (const auto& r : check_schwarz_pointwise(g, {0.2, 0.5, 0.9}, 16)) {
    EXPECT_TRUE(r.satisfied) << r.name;
  }
}

TEST(ExpandCaratheodory, SingleAtom) {
  const double theta = 2 * kPi / 5;
  const TruncatedSeries p =
      expand_caratheodory(CaratheodoryGenerator{HerglotzAtoms{{{1.0, theta}}}}, 3);
  EXPECT_EQ(p[0], Complex(1.0));
  for (std::size_t k = 1; k <= 3; ++k) {
    EXPECT_LT(std::abs(p[k] - std::polar(2.0, k * theta)), 1e-15);
  }
  const TruncatedSeries ones = expand_caratheodory(
      CaratheodoryGenerator{HerglotzAtoms{{{1.0, 0.0}}}}, kDefaultOrder);
  for (std::size_t k = 1; k <= kDefaultOrder; ++k) EXPECT_EQ(ones[k], Complex(2.0));
}

TEST(ExpandCaratheodory, TwoOppositeAtoms) {
  const TruncatedSeries p = expand_caratheodory(
      CaratheodoryGenerator{HerglotzAtoms{{{0.5, 0.0}, {0.5, kPi}}}}, 4);
  // (1 + z^2) / (1 - z^2) = 1 + 2 z^2 + 2 z^4 + ...
  const oracle::Coeffs want = oracle::cayley_by_division({0, 0, 1, 0, 0}, 0.0);
  EXPECT_LT(max_diff(p, want), 1e-15);
  EXPECT_LT(max_diff(p, {1, 0, 2, 0, 2}), 1e-15);
}

TEST(ExpandCaratheodory, Validation) {
  EXPECT_THROW(expand_caratheodory(CaratheodoryGenerator{HerglotzAtoms{}}, 4),
               InvalidGenerator);
  EXPECT_THROW(expand_caratheodory(
                   CaratheodoryGenerator{HerglotzAtoms{{{0.5, 0.0}, {0.6, 1.0}}}},
                   4),
               InvalidGenerator);
  EXPECT_THROW(expand_caratheodory(
                   CaratheodoryGenerator{HerglotzAtoms{{{1.5, 0.0}, {-0.5, 1.0}}}},
                   4),
               InvalidGenerator);
}

TEST(ExpandCaratheodory, CayleyOfSchwarzMatchesClosedForm) {
  const CaratheodoryGenerator p =
      make_cayley(SchwarzGenerator{FiniteBlaschke{0.2, 1, {Complex(0.3, 0.4)}}},
                  1.1);
  const TruncatedSeries s = expand_caratheodory(p, 40);
  for (int j = 0; j < 8; ++j) {
    const Complex z = std::polar(0.25, 2 * kPi * j / 8);
    EXPECT_LT(std::abs(s.evaluate(z) - evaluate_caratheodory(p, z)), 1e-12);
    EXPECT_GT(evaluate_caratheodory(p, z).real(), 0.0);
  }
}

TEST(CaratheodoryCorpus, NormalizedAndBounded) {
  for (const auto& g : sample_herglotz(3, 500)) {
    const TruncatedSeries p = expand_caratheodory(g, kDefaultOrder);
    EXPECT_EQ(p[0], Complex(1.0));
    for (std::size_t k = 1; k <= kDefaultOrder; ++k) {
      EXPECT_LE(std::abs(p[k]), 2.0 + 1e-12);
    }
    const auto& atoms = std::get<HerglotzAtoms>(g.kind).atoms;
    EXPECT_GE(atoms.size(), 1u);
    EXPECT_LE(atoms.size(), static_cast<std::size_t>(kMaxSampledAtoms));
  }
}

TEST(SampleSchwarz, Deterministic) {
  const auto a = sample_schwarz(1, 1, 6);
  const auto b = sample_schwarz(1, 1, 6);
  ASSERT_EQ(a.size(), 1u);
  EXPECT_EQ(expand_schwarz(a[0], kDefaultOrder),
            expand_schwarz(b[0], kDefaultOrder));
  const auto c = sample_schwarz(2, 1, 6);
  EXPECT_NE(expand_schwarz(a[0], kDefaultOrder),
            expand_schwarz(c[0], kDefaultOrder));
}

TEST(SampleSchwarz, SamplingPolicy) {
  const auto corpus = sample_schwarz(42, 1000, 6);
  ASSERT_EQ(corpus.size(), 1000u);
  for (const auto& g : corpus) {
    const auto& b = std::get<FiniteBlaschke>(g.kind);
    EXPECT_GE(b.m, 1);
    EXPECT_LE(b.m, 2);
    EXPECT_LE(b.m + static_cast<int>(b.zeros.size()), 6);
    EXPECT_GE(b.phi, 0.0);
    EXPECT_LT(b.phi, 2 * kPi);
    for (const Complex& a : b.zeros) EXPECT_LE(std::abs(a), 0.9);
  }
  EXPECT_THROW(sample_schwarz(1, 0, 6), InputError);
  EXPECT_THROW(sample_schwarz(1, 1, 0), InputError);
  // max_degree = 1 forces m = 1 and no zeros.
  for (const auto& g : sample_schwarz(4, 20, 1)) EXPECT_EQ(blaschke_degree(g), 1);
}

TEST(SampleSchwarz, CoefficientsWithinUnitBound) {
  for (const auto& g : sample_schwarz(42, 1000, 6)) {
    const TruncatedSeries w = expand_schwarz(g, kDefaultOrder);
    EXPECT_EQ(w[0], Complex(0.0));
    for (const auto& r : check_coefficient_bounds(w)) {
      EXPECT_LE(r.lhs, 1.0 + 1e-9);
    }
  }
}

TEST(SampleSchwarz, SchwarzLemmaOnGrid) {
  std::vector<double> radii;
  for (int j = 1; j <= 9; ++j) radii.push_back(0.1 * j);
  for (const auto& g : sample_schwarz(9, 200, 6)) {
    for (int j = 0; j < 64; ++j) {
      const Complex z = std::polar(radii[j % radii.size()], 2 * kPi * j / 64);
      EXPECT_LE(std::abs(evaluate_schwarz(g, z)), std::abs(z) + 1e-9);
    }
  }
}

TEST(BoundaryAtoms, HaveBoundaryCoefficient) {
  for (int k : {1, 2, 3}) {
    for (double theta : {0.0, 2 * kPi / 5}) {
      const TruncatedSeries p =
          expand_caratheodory(boundary_atoms(k, theta), kDefaultOrder);
      EXPECT_LT(std::abs(p[k] - std::polar(2.0, theta)), 1e-14);
    }
  }
}

}  // namespace
}  // namespace schwarzlab
