#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "brute_force.hpp"
#include "hamspec/certifier.hpp"
#include "hamspec/enumerate.hpp"
#include "hamspec/random.hpp"

using namespace hamspec;

namespace {

const SpectralParams kQ(1, 1);

Graph relabel(const Graph& g, const std::vector<std::size_t>& perm) {
  Graph h(g.order());
  for (std::size_t u = 0; u < g.order(); ++u)
    for (std::size_t v = u + 1; v < g.order(); ++v)
      if (g.has_edge(u, v)) h.add_edge(perm[u], perm[v]);
  return h;
}

}  // namespace

TEST(BoundTerms, ExactValues) {
  const auto t = bound_terms(degree_profile(family::complete(4)), 3, kQ);
  EXPECT_EQ(t.m_bound, Rational(27 + 36));
  EXPECT_EQ(t.n_bound, Rational(12 + 9));
  EXPECT_EQ(t.rhs_sq1, Rational(4 * 63, 4));
  EXPECT_EQ(t.rhs_sq1, Rational(4) * (Rational(3 * 9, 4) + Rational(36, 4 * 1)));
  EXPECT_THROW(bound_terms(degree_profile(family::complete(4)), 4, kQ), Error);
}

TEST(BoundTerms, NonnegativeAndMatchClosedFormOnSmallGraphs) {
  for (const Graph& g : enumerate_labeled(5)) {
    const auto d = degree_profile(g);
    for (std::size_t s = 1; s < 5; ++s) {
      const auto t = bound_terms(d, s, SpectralParams(3, 2));
      ASSERT_GE(t.rhs_sq1, 0);
      ASSERT_GE(t.rhs_sq2, 0);
      const Rational n = 5, e = static_cast<long long>(d.e);
      const Rational lo = static_cast<long long>(d.delta), hi = static_cast<long long>(d.Delta);
      const Rational ss = static_cast<long long>(s);
      ASSERT_EQ(t.rhs_sq1, Rational(25) * (ss * lo * lo / n + e * e / (n * (n - ss))));
      ASSERT_EQ(t.rhs_sq2, Rational(25) * ((n - ss) * hi * hi / n + e * e / (n * ss)));
    }
  }
}

TEST(HamiltonCondition, CompleteGraphIsCertified) {
  const Verdict v = theorem1_condition(family::complete(4), kQ, 2, 1);
  EXPECT_TRUE(v.holds);
  EXPECT_EQ(v.outcome, Outcome::CertifiedHamiltonian);
  EXPECT_NEAR(v.lambda, 6, 1e-10);
  EXPECT_NEAR(v.bound, 2 * std::sqrt(15.75), 1e-10);
}

TEST(HamiltonCondition, PetersenIsInconclusive) {
  const Verdict v = theorem1_condition(family::petersen(), kQ, 3, 1);
  EXPECT_FALSE(v.holds);
  EXPECT_EQ(v.outcome, Outcome::Inconclusive);
  EXPECT_NEAR(v.lambda, 6, 1e-10);
  EXPECT_NEAR(v.bound, 2 * std::sqrt(7.35), 1e-10);
}

TEST(HamiltonCondition, DegenerateOrderFailsPrecondition) {
  const Verdict v = theorem1_condition(family::complete(4), kQ, 3, 1);
  EXPECT_EQ(v.outcome, Outcome::PreconditionFailed);
  EXPECT_FALSE(v.holds);
  EXPECT_FALSE(v.reason.empty());
}

TEST(HamiltonCondition, OtherPreconditions) {
  EXPECT_EQ(theorem1_condition(family::path(4), kQ, 2, 1).outcome, Outcome::PreconditionFailed);  // kappa 1
  EXPECT_EQ(theorem1_condition(family::cycle(5), kQ, 1, 1).outcome, Outcome::PreconditionFailed);  // k < 2
  EXPECT_EQ(theorem1_condition(family::cycle(5), SpectralParams(1, 2), 2, 1).outcome, Outcome::PreconditionFailed);
  EXPECT_EQ(theorem1_condition(family::disjoint_union(family::complete(4), family::complete(4)), kQ, 2, 1).outcome,
            Outcome::PreconditionFailed);
  EXPECT_THROW(theorem1_condition(family::cycle(5), kQ, 2, 3), Error);
}

TEST(HamiltonCondition, ExceptionalCompleteBipartite) {
  // K_{2,3} is not Hamiltonian; whenever the condition holds at k = 2 it must be flagged.
  const Graph g = family::complete_bipartite(2, 3);
  for (const auto& p : {SpectralParams(1, 1), SpectralParams(2, 1), SpectralParams(3, 2), SpectralParams(5, 1)})
    for (int part : {1, 2}) {
      const Verdict v = theorem1_condition(g, p, 2, part);
      if (v.holds) {
        EXPECT_EQ(v.outcome, Outcome::ExceptionalCompleteBipartite);
      }
    }
}

TEST(TraceableCondition, CompleteGraphIsCertified) {
  const Verdict v = theorem2_condition(family::complete(9), kQ, 6, 1);
  EXPECT_TRUE(v.holds);
  EXPECT_EQ(v.outcome, Outcome::CertifiedTraceable);
  EXPECT_NEAR(v.lambda, 16, 1e-10);
  EXPECT_NEAR(v.bound, 2 * std::sqrt(8.0 * 64 / 9 + 1296.0 / 9), 1e-10);
  ASSERT_TRUE(v.printed_claim_holds);
  EXPECT_TRUE(*v.printed_claim_holds);
}

TEST(TraceableCondition, CycleIsInconclusive) {
  const Verdict v = theorem2_condition(family::cycle(9), kQ, 2, 1);
  EXPECT_FALSE(v.holds);
  EXPECT_EQ(v.outcome, Outcome::Inconclusive);
  EXPECT_NEAR(v.lambda, 4, 1e-10);
  EXPECT_NEAR(v.bound, 2 * std::sqrt(16.0 / 9 + 81.0 / 45), 1e-10);
}

TEST(TraceableCondition, SmallOrderFailsPrecondition) {
  for (const auto& p : {SpectralParams(1, 1), SpectralParams(2, 1)})
    EXPECT_EQ(theorem2_condition(family::complete(8), p, 1, 1).outcome, Outcome::PreconditionFailed);
}

TEST(ConditionTolerance, HoldsUsesInclusiveTolerance) {
  // Pick the tolerance so the condition sits exactly on the boundary.
  const Graph g = family::petersen();
  const GraphFacts f = analyze(g);
  const SpectrumSummary s = spectrum(g, kQ);
  const Verdict strict = theorem1_condition(g, f, kQ, s, 3, 1, 0.0);
  ASSERT_FALSE(strict.holds);
  const double needed = (s.lambda1 * s.lambda1 - strict.bound_sq) / (1 + strict.bound_sq);
  EXPECT_TRUE(theorem1_condition(g, f, kQ, s, 3, 1, needed * 1.000001).holds);
  EXPECT_FALSE(theorem1_condition(g, f, kQ, s, 3, 1, needed * 0.999).holds);
}

TEST(IndependenceBounds, Examples) {
  const auto star = corollary_bounds(family::star(4), kQ);
  EXPECT_EQ(star.gamma, 4u);
  EXPECT_EQ(star.lower1_sq, Rational(16));
  EXPECT_EQ(star.upper_n_sq, Rational(16));
  EXPECT_DOUBLE_EQ(star.lower1, 4);
  EXPECT_DOUBLE_EQ(star.upper_n, 4);

  const auto k23 = corollary_bounds(family::complete_bipartite(2, 3), kQ);
  EXPECT_EQ(k23.gamma, 3u);
  EXPECT_EQ(k23.lower1_sq, Rational(24));
  EXPECT_NEAR(k23.lower1, 2 * std::sqrt(6.0), 1e-12);

  const auto k2 = corollary_bounds(family::complete(2), kQ);
  EXPECT_EQ(k2.gamma, 1u);
  EXPECT_DOUBLE_EQ(k2.lower1, 2);
  EXPECT_NEAR(spectrum(family::complete(2), kQ).lambda1, 2, 1e-12);

  EXPECT_THROW(corollary_bounds(Graph(3), kQ), Error);
  EXPECT_THROW(corollary_bounds(family::complete(3), SpectralParams(1, 2)), Error);
}

TEST(IndependenceBounds, HoldsOnAllGraphsUpToSix) {
  for (std::size_t n = 2; n <= 6; ++n)
    for (const Graph& g : enumerate_labeled(n)) {
      if (g.size() == 0) continue;
      for (const auto& p : {SpectralParams(1, 1), SpectralParams(2, 1), SpectralParams(3, 2), SpectralParams(5, 1)}) {
        const auto b = corollary_bounds(g, p);
        const auto s = spectrum(g, p);
        ASSERT_GE(s.lambda1, b.lower1 - 1e-8 * (1 + b.lower1)) << g.edge_mask();
        ASSERT_LE(s.lambdaN, b.upper_n + 1e-8 * (1 + b.upper_n)) << g.edge_mask();
      }
    }
}

TEST(Certify, Examples) {
  const Verdict k4 = certify(family::complete(4), kQ);
  EXPECT_EQ(k4.outcome, Outcome::CertifiedHamiltonian);
  EXPECT_EQ(k4.theorem, 1);
  EXPECT_EQ(k4.part, 1);
  EXPECT_EQ(k4.k, 2u);

  const auto petersen = certify_all(family::petersen(), kQ);
  EXPECT_EQ(petersen.size(), 2u * 2 + 2u * 3);  // first theorem k = 2,3; second k = 1,2,3
  for (const auto& v : petersen) {
    EXPECT_NE(v.outcome, Outcome::PreconditionFailed);
    if (v.theorem == 1) {
      EXPECT_EQ(v.outcome, Outcome::Inconclusive);
    }
  }
  // The second theorem's part 1 is met with equality at k = 3: (5*9 + 225/5)/10 = 9, so the bound is 2*3 = lambda_1.
  // Petersen is traceable but not Hamiltonian.
  const Verdict& best = strongest(petersen);
  EXPECT_EQ(best.outcome, Outcome::CertifiedTraceable);
  EXPECT_EQ(best.condition(), "T2.1");
  EXPECT_EQ(best.k, 3u);
  ASSERT_TRUE(best.printed_claim_holds);
  EXPECT_FALSE(*best.printed_claim_holds);
  EXPECT_EQ(bound_terms(degree_profile(family::petersen()), 5, kQ).rhs_sq1, Rational(36));

  const auto p3 = certify_all(family::path(3), kQ);
  for (const auto& v : p3) EXPECT_EQ(v.outcome, Outcome::PreconditionFailed);
  EXPECT_EQ(certify(family::path(3), kQ).outcome, Outcome::PreconditionFailed);

  EXPECT_EQ(certify(family::complete(3), kQ).outcome, Outcome::PreconditionFailed);
  EXPECT_THROW(certify(family::complete(4), SpectralParams(1, 2)), Error);
}

TEST(Certify, NeverCertifiesANonHamiltonianGraphUpToSix) {
  for (std::size_t n = 3; n <= 6; ++n)
    for (const Graph& g : unlabeled_graphs(n))
      for (const auto& p : {SpectralParams(1, 1), SpectralParams(2, 1), SpectralParams(3, 2), SpectralParams(5, 1)}) {
        const Verdict v = certify(g, p);
        if (v.outcome == Outcome::CertifiedHamiltonian) {
          ASSERT_TRUE(brute::hamiltonian_backtrack(g));
        }
      }
}

TEST(Certify, ScaleCovariance) {
  SplitMix64 rng(3);
  const Rational scales[] = {Rational(2), Rational(1, 3), Rational(7, 5)};
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 3 + rng() % 10;
    const Graph g = RandomGraphs(n, 0.6, rng()).next();
    for (const auto& p : {SpectralParams(1, 1), SpectralParams(2, 1), SpectralParams(3, 2)}) {
      const auto base = certify_all(g, p);
      for (const auto& c : scales) {
        const auto scaled = certify_all(g, p.scaled(c));
        ASSERT_EQ(base.size(), scaled.size());
        for (std::size_t i = 0; i < base.size(); ++i) {
          ASSERT_EQ(base[i].outcome, scaled[i].outcome);
          ASSERT_EQ(base[i].holds, scaled[i].holds);
          const double cd = to_double(c);
          ASSERT_NEAR(scaled[i].lambda, cd * base[i].lambda, 1e-9 * (1 + std::abs(cd * base[i].lambda)));
          ASSERT_NEAR(scaled[i].bound, cd * base[i].bound, 1e-9 * (1 + cd * base[i].bound));
        }
      }
    }
  }
}

TEST(Certify, PermutationInvariance) {
  SplitMix64 rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 3 + rng() % 9;
    const Graph g = RandomGraphs(n, 0.7, rng()).next();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const Graph h = relabel(g, perm);
    const auto a = certify_all(g, SpectralParams(2, 1));
    const auto b = certify_all(h, SpectralParams(2, 1));
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      ASSERT_EQ(a[i].outcome, b[i].outcome);
      ASSERT_EQ(a[i].k, b[i].k);
      ASSERT_NEAR(a[i].lambda, b[i].lambda, 1e-9 * (1 + a[i].lambda));
      ASSERT_DOUBLE_EQ(a[i].bound, b[i].bound);
    }
  }
}

TEST(Strongest, Ordering) {
  std::vector<Verdict> vs(3);
  vs[0].outcome = Outcome::Inconclusive;
  vs[1].outcome = Outcome::CertifiedTraceable;
  vs[1].k = 3;
  vs[2].outcome = Outcome::CertifiedTraceable;
  vs[2].k = 1;
  EXPECT_EQ(&strongest(vs), &vs[2]);
  EXPECT_THROW(strongest(std::vector<Verdict>{}), Error);
}
