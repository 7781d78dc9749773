#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "brute_force.hpp"
#include "hamspec/enumerate.hpp"
#include "hamspec/random.hpp"
#include "hamspec/spectral.hpp"

using namespace hamspec;

namespace {

void expect_spectrum(const std::vector<double>& got, std::vector<double> want, double tol) {
  std::sort(want.begin(), want.end(), std::greater<>());
  ASSERT_EQ(got.size(), want.size());
  for (std::size_t i = 0; i < got.size(); ++i) EXPECT_NEAR(got[i], want[i], tol) << "index " << i;
}

}  // namespace

TEST(Rational, Parsing) {
  EXPECT_EQ(parse_rational("3/6"), Rational(1, 2));
  EXPECT_EQ(parse_rational("-2"), Rational(-2));
  EXPECT_EQ(parse_rational("0.08"), Rational(2, 25));
  EXPECT_EQ(parse_rational("1.50"), Rational(3, 2));
  EXPECT_EQ(parse_rational("010"), Rational(10));
  EXPECT_THROW(parse_rational("1/0"), Error);
  EXPECT_THROW(parse_rational("abc"), Error);
  EXPECT_THROW(parse_rational(""), Error);
  EXPECT_EQ(to_string(Rational(6, 4)), "3/2");
  EXPECT_EQ(to_string(Rational(-5)), "-5");
}

TEST(SpectralParams, Validation) {
  EXPECT_THROW(SpectralParams(0, 0), Error);
  EXPECT_TRUE(SpectralParams(2, 1).certifiable());
  EXPECT_TRUE(SpectralParams(1, 1).certifiable());
  EXPECT_FALSE(SpectralParams(1, 2).certifiable());
  EXPECT_FALSE(SpectralParams(0, 1).certifiable());
  EXPECT_FALSE(SpectralParams(1, 0).certifiable());
  EXPECT_EQ(SpectralParams::parse("1/2", "0.25").label(), "(1/2,1/4)");
}

TEST(BuildMatrix, Examples) {
  const SymMatrix m = build_matrix(family::path(3), SpectralParams(2, 1));
  const double want[3][3] = {{2, 1, 0}, {1, 4, 1}, {0, 1, 2}};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(m(i, j), want[i][j]);

  const SymMatrix q = build_matrix(family::complete(3), SpectralParams(1, 1));
  const SymMatrix a = build_matrix(family::complete(3), SpectralParams(0, 1));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      EXPECT_EQ(q(i, j), i == j ? 2.0 : 1.0);
      EXPECT_EQ(a(i, j), i == j ? 0.0 : 1.0);
    }
}

TEST(Spectrum, Examples) {
  const double r3 = std::sqrt(3.0);
  expect_spectrum(spectrum(family::path(3), SpectralParams(2, 1)).eigenvalues, {3 + r3, 2, 3 - r3}, 1e-10);
  expect_spectrum(spectrum(family::complete(3), SpectralParams(1, 1)).eigenvalues, {4, 1, 1}, 1e-10);
  expect_spectrum(spectrum(family::complete_bipartite(2, 3), SpectralParams(1, 1)).eigenvalues, {5, 3, 2, 2, 0}, 1e-10);
}

TEST(Spectrum, CompleteGraphClosedForm) {
  for (std::size_t n = 2; n <= 12; ++n)
    for (auto [a, b] : {std::pair{1, 1}, {2, 1}, {3, 2}, {5, 1}, {0, 1}}) {
      std::vector<double> want(n, static_cast<double>(a * static_cast<int>(n - 1) - b));
      want[0] = static_cast<double>((a + b) * static_cast<int>(n - 1));
      expect_spectrum(spectrum(family::complete(n), SpectralParams(a, b)).eigenvalues, want, 1e-10);
    }
}

TEST(Spectrum, CompleteBipartiteSignlessClosedForm) {
  for (std::size_t a = 1; a <= 5; ++a)
    for (std::size_t b = a; b <= 6; ++b) {
      std::vector<double> want{static_cast<double>(a + b), 0};
      for (std::size_t i = 1; i < a; ++i) want.push_back(static_cast<double>(b));
      for (std::size_t i = 1; i < b; ++i) want.push_back(static_cast<double>(a));
      expect_spectrum(spectrum(family::complete_bipartite(a, b), SpectralParams(1, 1)).eigenvalues, want, 1e-10);
    }
}

TEST(Spectrum, RegularFamiliesClosedForm) {
  // For a d-regular graph the spectrum is alpha*d + beta*(adjacency eigenvalue).
  const double pi = std::numbers::pi;
  for (std::size_t n = 3; n <= 16; ++n) {
    std::vector<double> want;
    for (std::size_t j = 0; j < n; ++j) want.push_back(2 * 2 + 1 * 2 * std::cos(2 * pi * static_cast<double>(j) / static_cast<double>(n)));
    expect_spectrum(spectrum(family::cycle(n), SpectralParams(2, 1)).eigenvalues, want, 1e-10);
  }
  for (std::size_t n = 2; n <= 16; ++n) {
    std::vector<double> want;
    for (std::size_t j = 1; j <= n; ++j) want.push_back(2 * std::cos(pi * static_cast<double>(j) / static_cast<double>(n + 1)));
    expect_spectrum(spectrum(family::path(n), SpectralParams(0, 1)).eigenvalues, want, 1e-10);
  }
  expect_spectrum(spectrum(family::petersen(), SpectralParams(1, 1)).eigenvalues, {6, 4, 4, 4, 4, 4, 1, 1, 1, 1}, 1e-10);
}

TEST(Spectrum, AgreesWithEigenOnAllGraphsUpToSix) {
  for (std::size_t n = 1; n <= 6; ++n)
    for (const Graph& g : enumerate_labeled(n))
      for (auto [a, b] : {std::pair{1.0, 1.0}, {2.0, 1.0}, {1.0, -1.0}}) {
        const auto s = spectrum(g, SpectralParams(Rational(static_cast<int>(a)), Rational(static_cast<int>(b))));
        const auto want = brute::eigen_spectrum(g, a, b);
        for (std::size_t i = 0; i < n; ++i) ASSERT_NEAR(s.eigenvalues[i], want[i], 1e-9) << g.edge_mask();
        ASSERT_LE(s.residual, 1e-9);
      }
}

TEST(Spectrum, AgreesWithEigenOnLargerRandomGraphs) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const std::size_t n = 10 + seed;
    const Graph g = RandomGraphs(n, 0.3, seed).next();
    const auto s = spectrum(g, SpectralParams(3, 2));
    const auto want = brute::eigen_spectrum(g, 3, 2);
    for (std::size_t i = 0; i < n; ++i) ASSERT_NEAR(s.eigenvalues[i], want[i], 1e-9);
    EXPECT_TRUE(std::is_sorted(s.eigenvalues.begin(), s.eigenvalues.end(), std::greater<>()));
    EXPECT_EQ(s.lambda1, s.eigenvalues.front());
    EXPECT_EQ(s.lambdaN, s.eigenvalues.back());
  }
}

TEST(Spectrum, RejectsAsymmetricInput) {
  SymMatrix m(2);
  m(0, 1) = 1;
  EXPECT_THROW(eigenvalues(m), Error);
}

TEST(QuadraticForm, Examples) {
  const std::vector<double> ones{1, 1, 1};
  EXPECT_DOUBLE_EQ(quadratic_form(family::path(3), SpectralParams(2, 1), ones), 12);
  const std::vector<double> zero(5, 0.0);
  EXPECT_DOUBLE_EQ(quadratic_form(family::petersen(), SpectralParams(2, 1), std::vector<double>(10, 0.0)), 0);
  EXPECT_DOUBLE_EQ(quadratic_form(family::cycle(5), SpectralParams(1, 1), zero), 0);
  const std::vector<double> x{1, -1, 0};
  EXPECT_DOUBLE_EQ(quadratic_form(family::complete(3), SpectralParams(1, 1), x), 2);
}

TEST(QuadraticForm, MatchesExplicitProductAndIsNonnegative) {
  SplitMix64 rng(5);
  for (std::size_t n = 1; n <= 5; ++n)
    for (const Graph& g : enumerate_labeled(n))
      for (const auto& p : {SpectralParams(1, 1), SpectralParams(2, 1), SpectralParams(Rational(7, 3), Rational(1, 2))}) {
        const SymMatrix m = build_matrix(g, p);
        std::vector<double> x(n);
        for (int t = 0; t < 10; ++t) {
          for (double& xi : x) xi = 2 * rng.uniform() - 1;
          double scale = 0;
          for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) scale += std::abs(x[i] * m(i, j) * x[j]);
          const double edge_route = quadratic_form(g, p, x);
          ASSERT_NEAR(edge_route, explicit_quadratic_form(m, x), 1e-12 * scale);
          ASSERT_GE(edge_route, -1e-12 * scale);
        }
      }
}

TEST(RowSums, Examples) {
  const SpectralParams q(1, 1);
  EXPECT_EQ(row_sum_m_squared(family::path(3), q, 1), Rational(12));
  EXPECT_EQ(row_sum_m_squared(family::path(3), q, 0), Rational(6));
  EXPECT_EQ(row_sum_m_squared(Graph(1), SpectralParams(3, 2), 0), Rational(0));
}

TEST(RowSums, MatchExactProductUpToFive) {
  const SpectralParams grid[] = {SpectralParams(1, 1), SpectralParams(2, 1), SpectralParams(Rational(3, 7), Rational(-5, 2)),
                                 SpectralParams(0, 1)};
  for (std::size_t n = 1; n <= 5; ++n)
    for (const Graph& g : enumerate_labeled(n))
      for (const auto& p : grid) {
        const auto sq = brute::exact_square(g, p.alpha(), p.beta());
        const auto lib = row_sums_of_square(build_exact_matrix(g, p));
        Rational total = 0;
        for (std::size_t u = 0; u < n; ++u) {
          Rational want = 0;
          for (std::size_t j = 0; j < n; ++j) want += sq[u][j];
          ASSERT_EQ(row_sum_m_squared(g, p, u), want);
          ASSERT_EQ(lib[u], want);
          total += want;
        }
        ASSERT_EQ(total, (p.alpha() + p.beta()) * (p.alpha() + p.beta()) * static_cast<long long>(degree_profile(g).sumsq));
      }
}

TEST(Rayleigh, Examples) {
  const auto star = rayleigh_sandwich(family::star(4), SpectralParams(1, 1));
  EXPECT_NEAR(star.lambda1_sq, 25, 1e-9);
  EXPECT_EQ(star.mean_term, Rational(16));
  EXPECT_NEAR(star.lambdaN_sq, 0, 1e-9);

  const auto p3 = rayleigh_sandwich(family::path(3), SpectralParams(2, 1));
  EXPECT_NEAR(p3.lambda1_sq, std::pow(3 + std::sqrt(3.0), 2), 1e-9);
  EXPECT_EQ(p3.mean_term, Rational(18));
  EXPECT_NEAR(p3.lambdaN_sq, std::pow(3 - std::sqrt(3.0), 2), 1e-9);

  const auto k1 = rayleigh_sandwich(Graph(1), SpectralParams(5, 1));
  EXPECT_EQ(k1.lambda1_sq, 0);
  EXPECT_EQ(k1.mean_term, Rational(0));
  EXPECT_EQ(k1.lambdaN_sq, 0);

  EXPECT_THROW(rayleigh_sandwich(family::path(3), SpectralParams(1, 2)), Error);
}

TEST(Rayleigh, SandwichAndPsdOnAllGraphsUpToSix) {
  for (std::size_t n = 1; n <= 6; ++n)
    for (const Graph& g : enumerate_labeled(n))
      for (const auto& p : {SpectralParams(1, 1), SpectralParams(2, 1), SpectralParams(3, 2), SpectralParams(5, 1)}) {
        const auto s = spectrum(g, p);
        ASSERT_TRUE(rayleigh_sandwich(g, p, s).sandwiched(1e-9));
        ASSERT_GE(s.lambdaN, -1e-9 * (1 + s.lambda1));
      }
}
