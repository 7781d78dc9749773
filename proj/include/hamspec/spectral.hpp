#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hamspec/error.hpp"
#include "hamspec/graph.hpp"
#include "hamspec/rational.hpp"

namespace hamspec {

/// The weights (alpha, beta) of M = alpha*D + beta*A, held exactly.
class SpectralParams {
 public:
  SpectralParams(Rational alpha, Rational beta) : alpha_(std::move(alpha)), beta_(std::move(beta)) {
    if (alpha_ == 0 && beta_ == 0) throw Error(ErrorKind::InvalidArgument, "(alpha, beta) must not be (0, 0)");
    alpha_value_ = to_double(alpha_);
    beta_value_ = to_double(beta_);
  }

  static SpectralParams parse(std::string_view alpha, std::string_view beta) {
    return SpectralParams(parse_rational(alpha), parse_rational(beta));
  }

  const Rational& alpha() const noexcept { return alpha_; }
  const Rational& beta() const noexcept { return beta_; }
  double alpha_value() const noexcept { return alpha_value_; }
  double beta_value() const noexcept { return beta_value_; }

  /// alpha >= beta > 0, the regime where the Hamiltonicity conditions apply.
  bool certifiable() const { return alpha_ >= beta_ && beta_ > 0; }

  SpectralParams scaled(const Rational& c) const { return SpectralParams(alpha_ * c, beta_ * c); }

  std::string label() const { return "(" + to_string(alpha_) + "," + to_string(beta_) + ")"; }

  friend bool operator==(const SpectralParams& a, const SpectralParams& b) {
    return a.alpha_ == b.alpha_ && a.beta_ == b.beta_;
  }

 private:
  Rational alpha_;
  Rational beta_;
  double alpha_value_ = 0;
  double beta_value_ = 0;
};

/// Dense symmetric matrix, row-major.
struct SymMatrix {
  std::size_t n = 0;
  std::vector<double> entries;

  explicit SymMatrix(std::size_t dim = 0) : n(dim), entries(dim * dim, 0.0) {}

  double& operator()(std::size_t i, std::size_t j) { return entries[i * n + j]; }
  double operator()(std::size_t i, std::size_t j) const { return entries[i * n + j]; }

  double frobenius_norm() const {
    double s = 0;
    for (double v : entries) s += v * v;
    return std::sqrt(s);
  }
};

/// M(G; alpha, beta) with exact entries.
struct ExactMatrix {
  std::size_t n = 0;
  std::vector<Rational> entries;

  const Rational& operator()(std::size_t i, std::size_t j) const { return entries[i * n + j]; }
};

inline ExactMatrix build_exact_matrix(const Graph& g, const SpectralParams& p) {
  ExactMatrix m{g.order(), std::vector<Rational>(g.order() * g.order())};
  for (std::size_t i = 0; i < m.n; ++i) {
    m.entries[i * m.n + i] = p.alpha() * static_cast<long long>(g.degree(i));
    for (VertexSet nb = g.neighbors(i); nb; nb &= nb - 1) m.entries[i * m.n + lowest(nb)] = p.beta();
  }
  return m;
}

/// Diagonal alpha*d(i), off-diagonal beta on edges; each entry is formed
/// exactly and rounded once.
inline SymMatrix build_matrix(const Graph& g, const SpectralParams& p) {
  SymMatrix m(g.order());
  const double beta = p.beta_value();
  for (std::size_t i = 0; i < m.n; ++i) {
    m(i, i) = to_double(p.alpha() * static_cast<long long>(g.degree(i)));
    for (VertexSet nb = g.neighbors(i); nb; nb &= nb - 1) m(i, lowest(nb)) = beta;
  }
  return m;
}

struct SpectrumSummary {
  std::vector<double> eigenvalues;  // descending
  double lambda1 = 0;
  double lambdaN = 0;
  double residual = 0;  // max over pairs of ||Mv - lambda v||_inf
  std::size_t sweeps = 0;
};

inline constexpr std::size_t kMaxJacobiSweeps = 100;
inline constexpr double kJacobiTolerance = 1e-12;

/// Full spectrum by cyclic Jacobi rotations. Converged once the off-diagonal
/// Frobenius norm drops below 1e-12 * (1 + ||M||_F).
inline SpectrumSummary eigenvalues(const SymMatrix& m) {
  const std::size_t n = m.n;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (m(i, j) != m(j, i)) throw Error(ErrorKind::InvalidArgument, "matrix is not symmetric");

  SymMatrix a = m;
  SymMatrix v(n);
  for (std::size_t i = 0; i < n; ++i) v(i, i) = 1.0;
  const double threshold = kJacobiTolerance * (1.0 + m.frobenius_norm());

  auto off_norm = [&] {
    double s = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) s += 2 * a(i, j) * a(i, j);
    return std::sqrt(s);
  };

  std::size_t sweep = 0;
  for (; off_norm() >= threshold; ++sweep) {
    if (sweep == kMaxJacobiSweeps)
      throw Error(ErrorKind::EigensolverFailure, "Jacobi did not converge in " + std::to_string(kMaxJacobiSweeps) + " sweeps");
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
        const double c = 1 / std::sqrt(t * t + 1);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = a(q, p) = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }

  SpectrumSummary out;
  out.sweeps = sweep;
  out.eigenvalues.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.eigenvalues[i] = a(i, i);
  for (std::size_t col = 0; col < n; ++col) {
    for (std::size_t i = 0; i < n; ++i) {
      double mv = 0;
      for (std::size_t k = 0; k < n; ++k) mv += m(i, k) * v(k, col);
      out.residual = std::max(out.residual, std::abs(mv - a(col, col) * v(i, col)));
    }
  }
  std::sort(out.eigenvalues.begin(), out.eigenvalues.end(), std::greater<>());
  out.lambda1 = out.eigenvalues.front();
  out.lambdaN = out.eigenvalues.back();
  return out;
}

inline SpectrumSummary spectrum(const Graph& g, const SpectralParams& p) { return eigenvalues(build_matrix(g, p)); }

/// x^T M x through the edge decomposition
/// (alpha - beta) * sum d(u) x_u^2 + beta * sum_{uv in E} (x_u + x_v)^2.
inline double quadratic_form(const Graph& g, const SpectralParams& p, std::span<const double> x) {
  if (x.size() != g.order()) throw Error(ErrorKind::InvalidArgument, "vector length differs from graph order");
  double diag = 0;
  double edges = 0;
  for (std::size_t u = 0; u < g.order(); ++u) {
    diag += static_cast<double>(g.degree(u)) * x[u] * x[u];
    for (VertexSet nb = g.neighbors(u) & ~first_vertices(u + 1); nb; nb &= nb - 1) {
      const double s = x[u] + x[lowest(nb)];
      edges += s * s;
    }
  }
  return (p.alpha_value() - p.beta_value()) * diag + p.beta_value() * edges;
}

/// x^T M x by explicit multiplication.
inline double explicit_quadratic_form(const SymMatrix& m, std::span<const double> x) {
  if (x.size() != m.n) throw Error(ErrorKind::InvalidArgument, "vector length differs from matrix order");
  double total = 0;
  for (std::size_t i = 0; i < m.n; ++i) {
    double row = 0;
    for (std::size_t j = 0; j < m.n; ++j) row += m(i, j) * x[j];
    total += x[i] * row;
  }
  return total;
}

/// Row sum of M^2 at u from degrees alone:
/// alpha(alpha+beta) d(u)^2 + beta(alpha+beta) * sum_{v in N(u)} d(v).
inline Rational row_sum_m_squared(const Graph& g, const SpectralParams& p, std::size_t u) {
  if (u >= g.order()) throw Error(ErrorKind::InvalidArgument, "vertex out of range");
  const Rational sum = p.alpha() + p.beta();
  const long long d = static_cast<long long>(g.degree(u));
  long long neighbour_degrees = 0;
  for (VertexSet nb = g.neighbors(u); nb; nb &= nb - 1) neighbour_degrees += static_cast<long long>(g.degree(lowest(nb)));
  return p.alpha() * sum * (d * d) + p.beta() * sum * neighbour_degrees;
}

/// Row sums of M^2 by exact matrix multiplication.
inline std::vector<Rational> row_sums_of_square(const ExactMatrix& m) {
  std::vector<Rational> sums(m.n);
  for (std::size_t i = 0; i < m.n; ++i) {
    Rational total = 0;
    for (std::size_t k = 0; k < m.n; ++k) {
      if (m(i, k) == 0) continue;
      Rational col = 0;
      for (std::size_t j = 0; j < m.n; ++j) col += m(k, j);
      total += m(i, k) * col;
    }
    sums[i] = total;
  }
  return sums;
}

/// (alpha + beta)^2 * sum d(u)^2 / n, exactly.
inline Rational rayleigh_mean_term(const DegreeProfile& degrees, const SpectralParams& p) {
  const Rational sum = p.alpha() + p.beta();
  return sum * sum * Rational(static_cast<long long>(degrees.sumsq), static_cast<long long>(degrees.degrees.size()));
}

struct RayleighTriple {
  double lambda1_sq = 0;
  Rational mean_term;
  double lambdaN_sq = 0;

  /// lambda1^2 >= mean >= lambdaN^2 with slack rel * (1 + lambda1^2).
  bool sandwiched(double rel = 1e-9) const {
    const double mean = to_double(mean_term);
    const double tol = rel * (1.0 + lambda1_sq);
    return lambda1_sq >= mean - tol && mean >= lambdaN_sq - tol;
  }
};

inline RayleighTriple rayleigh_sandwich(const Graph& g, const SpectralParams& p, const SpectrumSummary& s) {
  if (!p.certifiable()) throw Error(ErrorKind::Precondition, "Rayleigh sandwich needs alpha >= beta > 0");
  return {s.lambda1 * s.lambda1, rayleigh_mean_term(degree_profile(g), p), s.lambdaN * s.lambdaN};
}

inline RayleighTriple rayleigh_sandwich(const Graph& g, const SpectralParams& p) {
  return rayleigh_sandwich(g, p, spectrum(g, p));
}

}  // namespace hamspec
