#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "hamspec/error.hpp"
#include "hamspec/graph.hpp"
#include "hamspec/oracles.hpp"
#include "hamspec/rational.hpp"
#include "hamspec/spectral.hpp"

namespace hamspec {

enum class Outcome {
  CertifiedHamiltonian,
  CertifiedTraceable,
  ExceptionalCompleteBipartite,
  Inconclusive,
  PreconditionFailed,
};

inline const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::CertifiedHamiltonian: return "CertifiedHamiltonian";
    case Outcome::CertifiedTraceable: return "CertifiedTraceable";
    case Outcome::ExceptionalCompleteBipartite: return "ExceptionalCompleteBipartite";
    case Outcome::Inconclusive: return "Inconclusive";
    case Outcome::PreconditionFailed: return "PreconditionFailed";
  }
  return "?";
}

inline constexpr double kConditionTolerance = 1e-9;

/// Degree bounds for an independent set of size s = k+1 (first theorem) or
/// k+2 (second theorem):
///   m_bound = s*delta^2 + e^2/(n-s)       (lower bound on sum d^2)
///   n_bound = e^2/s + (n-s)*Delta^2       (upper bound on sum d^2)
///   rhs_sq1 = (alpha+beta)^2 * m_bound/n, rhs_sq2 = (alpha+beta)^2 * n_bound/n
struct BoundTerms {
  Rational m_bound;
  Rational n_bound;
  Rational rhs_sq1;
  Rational rhs_sq2;
};

inline BoundTerms bound_terms(const DegreeProfile& d, std::size_t independent_size, const SpectralParams& p) {
  const long long n = static_cast<long long>(d.degrees.size());
  const long long s = static_cast<long long>(independent_size);
  if (s < 1 || n - s < 1)
    throw Error(ErrorKind::Precondition, "bound terms need 1 <= s <= n-1 (s=" + std::to_string(s) + ", n=" + std::to_string(n) + ")");
  const long long e = static_cast<long long>(d.e);
  const long long lo = static_cast<long long>(d.delta);
  const long long hi = static_cast<long long>(d.Delta);
  BoundTerms t;
  t.m_bound = Rational(s * lo * lo) + Rational(e * e, n - s);
  t.n_bound = Rational(e * e, s) + Rational((n - s) * hi * hi);
  const Rational weight = (p.alpha() + p.beta()) * (p.alpha() + p.beta());
  t.rhs_sq1 = weight * t.m_bound / n;
  t.rhs_sq2 = weight * t.n_bound / n;
  return t;
}

/// Outcome of one condition (theorem t, part p) at connectivity parameter k.
struct Verdict {
  int theorem = 1;
  int part = 1;
  std::size_t k = 0;
  bool holds = false;
  Outcome outcome = Outcome::PreconditionFailed;
  double lambda = 0;    // lambda_1 for part 1, lambda_n for part 2
  double bound = 0;     // sqrt of the exact right-hand side squared
  double bound_sq = 0;
  double margin = 0;    // positive when the inequality holds strictly
  std::string reason;   // set for PreconditionFailed
  /// Second theorem only: whether "Hamiltonian or K_{k,k+2}" also held.
  std::optional<bool> printed_claim_holds;

  std::string condition() const { return "T" + std::to_string(theorem) + "." + std::to_string(part); }
};

/// Per-graph quantities shared by every condition and parameter pair.
struct GraphFacts {
  DegreeProfile degrees;
  bool connected = false;
  std::size_t kappa = 0;
  std::optional<std::pair<std::size_t, std::size_t>> complete_bipartite;

  /// Hamiltonicity, computed on first request and then remembered.
  bool hamiltonian(const Graph& g) const {
    if (!hamiltonian_) hamiltonian_ = is_hamiltonian(g);
    return *hamiltonian_;
  }

 private:
  mutable std::optional<bool> hamiltonian_;
};

inline GraphFacts analyze(const Graph& g) {
  GraphFacts f;
  f.degrees = degree_profile(g);
  f.connected = g.is_connected();
  f.kappa = vertex_connectivity(g);
  f.complete_bipartite = recognize_complete_bipartite(g);
  return f;
}

namespace detail {

inline Verdict precondition_failed(int theorem, int part, std::size_t k, std::string reason) {
  Verdict v;
  v.theorem = theorem;
  v.part = part;
  v.k = k;
  v.outcome = Outcome::PreconditionFailed;
  v.reason = std::move(reason);
  return v;
}

inline std::optional<std::string> check_preconditions(int theorem, const Graph& g, const GraphFacts& f,
                                                      const SpectralParams& p, std::size_t k) {
  const std::size_t n = g.order();
  const std::size_t min_order = theorem == 1 ? 3 : 9;
  const std::size_t min_k = theorem == 1 ? 2 : 1;
  const std::size_t shift = theorem == 1 ? 1 : 2;
  if (!p.certifiable()) return "alpha >= beta > 0 required, got " + p.label();
  if (n < min_order) return "n = " + std::to_string(n) + " < " + std::to_string(min_order);
  if (!f.connected) return "graph is disconnected";
  if (k < min_k) return "k = " + std::to_string(k) + " < " + std::to_string(min_k);
  if (k + shift >= n)
    return "n - k - " + std::to_string(shift) + " = " + std::to_string(static_cast<long long>(n) - static_cast<long long>(k + shift)) +
           " < 1";
  if (k > f.kappa) return "k = " + std::to_string(k) + " exceeds connectivity " + std::to_string(f.kappa);
  return std::nullopt;
}

inline Verdict evaluate(int theorem, const Graph& g, const GraphFacts& f, const SpectralParams& p,
                        const SpectrumSummary& s, std::size_t k, int part, double tol) {
  if (part != 1 && part != 2) throw Error(ErrorKind::InvalidArgument, "part must be 1 or 2");
  if (auto why = check_preconditions(theorem, g, f, p, k)) return precondition_failed(theorem, part, k, *why);

  const std::size_t shift = theorem == 1 ? 1 : 2;
  const BoundTerms terms = bound_terms(f.degrees, k + shift, p);
  Verdict v;
  v.theorem = theorem;
  v.part = part;
  v.k = k;
  if (part == 1) {
    v.lambda = s.lambda1;
    v.bound_sq = to_double(terms.rhs_sq1);
    v.bound = std::sqrt(v.bound_sq);
    v.holds = s.lambda1 * s.lambda1 <= v.bound_sq + tol * (1 + v.bound_sq);
    v.margin = v.bound - v.lambda;
  } else {
    v.lambda = s.lambdaN;
    v.bound_sq = to_double(terms.rhs_sq2);
    v.bound = std::sqrt(v.bound_sq);
    v.holds = s.lambdaN >= 0 && s.lambdaN * s.lambdaN >= v.bound_sq - tol * (1 + v.bound_sq);
    v.margin = v.lambda - v.bound;
  }
  if (!v.holds) {
    v.outcome = Outcome::Inconclusive;
    return v;
  }
  const bool exceptional = f.complete_bipartite && *f.complete_bipartite == std::pair{k, k + shift};
  if (exceptional)
    v.outcome = Outcome::ExceptionalCompleteBipartite;
  else
    v.outcome = theorem == 1 ? Outcome::CertifiedHamiltonian : Outcome::CertifiedTraceable;
  if (theorem == 2 && g.order() <= kPathBudget) v.printed_claim_holds = exceptional || f.hamiltonian(g);
  return v;
}

}  // namespace detail

/// Spectral condition for Hamiltonicity with an independent set of size k+1.
/// Part 1 compares lambda_1^2 against (alpha+beta)^2((k+1)delta^2/n + e^2/(n(n-k-1)));
/// part 2 compares lambda_n^2 against (alpha+beta)^2((n-k-1)Delta^2/n + e^2/(n(k+1))).
inline Verdict theorem1_condition(const Graph& g, const GraphFacts& f, const SpectralParams& p,
                                  const SpectrumSummary& s, std::size_t k, int part,
                                  double tol = kConditionTolerance) {
  return detail::evaluate(1, g, f, p, s, k, part, tol);
}

inline Verdict theorem1_condition(const Graph& g, const SpectralParams& p, std::size_t k, int part) {
  return theorem1_condition(g, analyze(g), p, spectrum(g, p), k, part);
}

/// Same shape with k+2 in place of k+1; certifies traceability (n >= 9).
inline Verdict theorem2_condition(const Graph& g, const GraphFacts& f, const SpectralParams& p,
                                  const SpectrumSummary& s, std::size_t k, int part,
                                  double tol = kConditionTolerance) {
  return detail::evaluate(2, g, f, p, s, k, part, tol);
}

inline Verdict theorem2_condition(const Graph& g, const SpectralParams& p, std::size_t k, int part) {
  return theorem2_condition(g, analyze(g), p, spectrum(g, p), k, part);
}

struct CorollaryBounds {
  std::size_t gamma = 0;
  Rational lower1_sq;   // lambda_1^2 is at least this
  Rational upper_n_sq;  // lambda_n^2 is at most this
  double lower1 = 0;
  double upper_n = 0;
};

/// Bounds from the independence number alone:
///   lambda_1 >= (alpha+beta) sqrt(gamma delta^2/n + e^2/(n(n-gamma)))
///   lambda_n <= (alpha+beta) sqrt((n-gamma) Delta^2/n + e^2/(n gamma))
inline CorollaryBounds corollary_bounds(const DegreeProfile& d, std::size_t gamma, const SpectralParams& p) {
  if (!p.certifiable()) throw Error(ErrorKind::Precondition, "alpha >= beta > 0 required, got " + p.label());
  if (d.e == 0) throw Error(ErrorKind::Precondition, "graph has no edges");
  const long long n = static_cast<long long>(d.degrees.size());
  const long long gm = static_cast<long long>(gamma);
  const long long e = static_cast<long long>(d.e);
  const long long lo = static_cast<long long>(d.delta);
  const long long hi = static_cast<long long>(d.Delta);
  const Rational weight = (p.alpha() + p.beta()) * (p.alpha() + p.beta());
  CorollaryBounds b;
  b.gamma = gamma;
  b.lower1_sq = weight * (Rational(gm * lo * lo, n) + Rational(e * e, n * (n - gm)));
  b.upper_n_sq = weight * (Rational((n - gm) * hi * hi, n) + Rational(e * e, n * gm));
  b.lower1 = std::sqrt(to_double(b.lower1_sq));
  b.upper_n = std::sqrt(to_double(b.upper_n_sq));
  return b;
}

inline CorollaryBounds corollary_bounds(const Graph& g, const SpectralParams& p) {
  return corollary_bounds(degree_profile(g), independence_number(g).size, p);
}

/// Total order used to pick the strongest verdict: outcome first, then
/// smaller k, theorem 1 before 2, part 1 before 2.
inline auto verdict_rank(const Verdict& v) {
  return std::tuple{static_cast<int>(v.outcome), v.k, v.theorem, v.part};
}

inline const Verdict& strongest(std::span<const Verdict> verdicts) {
  if (verdicts.empty()) throw Error(ErrorKind::InvalidArgument, "no verdicts to choose from");
  return *std::min_element(verdicts.begin(), verdicts.end(),
                           [](const Verdict& a, const Verdict& b) { return verdict_rank(a) < verdict_rank(b); });
}

/// Every admissible (theorem, k, part). When nothing is admissible the list
/// holds PreconditionFailed probes (first theorem at k=2, second at k=1)
/// explaining why.
inline std::vector<Verdict> certify_all(const Graph& g, const GraphFacts& f, const SpectralParams& p,
                                        const SpectrumSummary& s) {
  std::vector<Verdict> out;
  const std::size_t n = g.order();
  if (p.certifiable() && f.connected) {
    if (n >= 3)
      for (std::size_t k = 2; k <= f.kappa && k + 2 <= n; ++k)
        for (int part : {1, 2}) out.push_back(theorem1_condition(g, f, p, s, k, part));
    if (n >= 9)
      for (std::size_t k = 1; k <= f.kappa && k + 3 <= n; ++k)
        for (int part : {1, 2}) out.push_back(theorem2_condition(g, f, p, s, k, part));
  }
  if (out.empty()) {
    out.push_back(theorem1_condition(g, f, p, s, 2, 1));
    out.push_back(theorem2_condition(g, f, p, s, 1, 1));
  }
  return out;
}

inline std::vector<Verdict> certify_all(const Graph& g, const SpectralParams& p) {
  if (!p.certifiable()) throw Error(ErrorKind::Precondition, "alpha >= beta > 0 required, got " + p.label());
  return certify_all(g, analyze(g), p, spectrum(g, p));
}

inline Verdict certify(const Graph& g, const SpectralParams& p) {
  const auto all = certify_all(g, p);
  return strongest(all);
}

}  // namespace hamspec
