#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hamspec/error.hpp"

namespace hamspec {

inline constexpr std::size_t kMaxVertices = 64;

/// A set of vertices as a 64-bit mask; bit v set means vertex v is a member.
using VertexSet = std::uint64_t;

inline constexpr VertexSet singleton(std::size_t v) { return VertexSet{1} << v; }

inline constexpr VertexSet first_vertices(std::size_t n) {
  return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

inline std::size_t popcount(VertexSet s) { return static_cast<std::size_t>(std::popcount(s)); }

inline std::size_t lowest(VertexSet s) { return static_cast<std::size_t>(std::countr_zero(s)); }

/// Position of the pair {i, j}, i < j, in the upper-triangle column-major order
/// used by graph6: (0,1), (0,2), (1,2), (0,3), ...
inline constexpr std::size_t edge_index(std::size_t i, std::size_t j) {
  if (i > j) std::swap(i, j);
  return j * (j - 1) / 2 + i;
}

inline constexpr std::size_t pair_count(std::size_t n) { return n * (n - 1) / 2; }

/// Simple undirected graph on vertices 0..n-1, 1 <= n <= 64.
class Graph {
 public:
  explicit Graph(std::size_t n) : n_(n) {
    if (n == 0 || n > kMaxVertices)
      throw Error(ErrorKind::UnsupportedSize, "graph order must be in [1, 64], got " + std::to_string(n));
  }

  Graph(std::size_t n, std::initializer_list<std::pair<std::size_t, std::size_t>> edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
  }

  /// Inverse of edge_mask(): bit edge_index(i, j) of `mask` selects edge {i, j}.
  static Graph from_edge_mask(std::size_t n, std::uint64_t mask) {
    Graph g(n);
    if (pair_count(n) > 64)
      throw Error(ErrorKind::UnsupportedSize, "edge masks only cover n <= 11");
    for (std::size_t j = 1; j < n; ++j)
      for (std::size_t i = 0; i < j; ++i)
        if ((mask >> edge_index(i, j)) & 1U) g.add_edge(i, j);
    return g;
  }

  std::size_t order() const noexcept { return n_; }

  std::size_t size() const noexcept {
    std::size_t twice = 0;
    for (std::size_t v = 0; v < n_; ++v) twice += popcount(adj_[v]);
    return twice / 2;
  }

  VertexSet vertices() const noexcept { return first_vertices(n_); }
  VertexSet neighbors(std::size_t v) const noexcept { return adj_[v]; }
  std::size_t degree(std::size_t v) const noexcept { return popcount(adj_[v]); }
  bool has_edge(std::size_t u, std::size_t v) const noexcept { return (adj_[u] >> v) & 1U; }

  void add_edge(std::size_t u, std::size_t v) {
    check_pair(u, v);
    adj_[u] |= singleton(v);
    adj_[v] |= singleton(u);
  }

  void remove_edge(std::size_t u, std::size_t v) {
    check_pair(u, v);
    adj_[u] &= ~singleton(v);
    adj_[v] &= ~singleton(u);
  }

  /// Edge bitmask in graph6 pair order; only defined for n <= 11.
  std::uint64_t edge_mask() const {
    if (pair_count(n_) > 64)
      throw Error(ErrorKind::UnsupportedSize, "edge masks only cover n <= 11");
    std::uint64_t mask = 0;
    for (std::size_t j = 1; j < n_; ++j)
      for (std::size_t i = 0; i < j; ++i)
        if (has_edge(i, j)) mask |= std::uint64_t{1} << edge_index(i, j);
    return mask;
  }

  Graph complement() const {
    Graph c(n_);
    for (std::size_t v = 0; v < n_; ++v) c.adj_[v] = ~adj_[v] & vertices() & ~singleton(v);
    return c;
  }

  /// Vertices reachable from `start` without entering `removed`.
  VertexSet reachable(std::size_t start, VertexSet removed = 0) const {
    VertexSet seen = singleton(start);
    VertexSet frontier = seen;
    while (frontier) {
      VertexSet next = 0;
      for (VertexSet f = frontier; f; f &= f - 1) next |= adj_[lowest(f)];
      next &= ~seen & ~removed;
      seen |= next;
      frontier = next;
    }
    return seen;
  }

  bool is_connected() const { return reachable(0) == vertices(); }

  /// True when deleting `removed` leaves at least two components.
  bool separated_by(VertexSet removed) const {
    VertexSet rest = vertices() & ~removed;
    if (popcount(rest) < 2) return false;
    return reachable(lowest(rest), removed) != rest;
  }

  bool is_independent(VertexSet s) const {
    for (VertexSet t = s; t; t &= t - 1)
      if (adj_[lowest(t)] & s) return false;
    return true;
  }

  bool is_complete() const {
    for (std::size_t v = 0; v < n_; ++v)
      if (adj_[v] != (vertices() & ~singleton(v))) return false;
    return true;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    if (a.n_ != b.n_) return false;
    return std::equal(a.adj_.begin(), a.adj_.begin() + static_cast<std::ptrdiff_t>(a.n_), b.adj_.begin());
  }

 private:
  void check_pair(std::size_t u, std::size_t v) const {
    if (u >= n_ || v >= n_ || u == v)
      throw Error(ErrorKind::InvalidArgument,
                  "invalid edge {" + std::to_string(u) + "," + std::to_string(v) + "} for order " + std::to_string(n_));
  }

  std::size_t n_;
  std::array<VertexSet, kMaxVertices> adj_{};
};

struct DegreeProfile {
  std::vector<std::size_t> degrees;
  std::size_t delta = 0;  // minimum degree
  std::size_t Delta = 0;  // maximum degree
  std::size_t e = 0;
  std::uint64_t sumsq = 0;  // sum of squared degrees
};

inline DegreeProfile degree_profile(const Graph& g) {
  DegreeProfile p;
  p.degrees.resize(g.order());
  p.delta = g.order();
  std::size_t total = 0;
  for (std::size_t v = 0; v < g.order(); ++v) {
    const std::size_t d = g.degree(v);
    p.degrees[v] = d;
    p.delta = std::min(p.delta, d);
    p.Delta = std::max(p.Delta, d);
    total += d;
    p.sumsq += static_cast<std::uint64_t>(d) * d;
  }
  p.e = total / 2;
  return p;
}

struct Bipartition {
  VertexSet sideA = 0;
  VertexSet sideB = 0;
  bool complete = false;  // every cross pair is an edge

  friend bool operator==(const Bipartition&, const Bipartition&) = default;
};

/// BFS 2-colouring; in each component the lowest-index vertex goes to sideA.
/// Empty when the graph has an odd cycle.
inline std::optional<Bipartition> bipartition(const Graph& g) {
  Bipartition b;
  VertexSet unvisited = g.vertices();
  while (unvisited) {
    const std::size_t root = lowest(unvisited);
    VertexSet frontier = singleton(root);
    bool colour_a = true;
    unvisited &= ~frontier;
    while (frontier) {
      (colour_a ? b.sideA : b.sideB) |= frontier;
      VertexSet next = 0;
      for (VertexSet f = frontier; f; f &= f - 1) next |= g.neighbors(lowest(f));
      if (next & (colour_a ? b.sideA : b.sideB)) return std::nullopt;
      next &= unvisited;
      unvisited &= ~next;
      frontier = next;
      colour_a = !colour_a;
    }
  }
  for (VertexSet s = b.sideA; s; s &= s - 1)
    if (g.neighbors(lowest(s)) & b.sideA) return std::nullopt;
  for (VertexSet s = b.sideB; s; s &= s - 1)
    if (g.neighbors(lowest(s)) & b.sideB) return std::nullopt;

  b.complete = true;
  for (VertexSet s = b.sideA; s; s &= s - 1)
    if ((g.neighbors(lowest(s)) & b.sideB) != b.sideB) {
      b.complete = false;
      break;
    }
  return b;
}

/// (a, b) with a <= b when g is K_{a,b}: connected, bipartite, complete across,
/// both sides non-empty.
inline std::optional<std::pair<std::size_t, std::size_t>> recognize_complete_bipartite(const Graph& g) {
  if (!g.is_connected()) return std::nullopt;
  auto b = bipartition(g);
  if (!b || !b->complete || b->sideA == 0 || b->sideB == 0) return std::nullopt;
  std::size_t a = popcount(b->sideA);
  std::size_t c = popcount(b->sideB);
  return std::pair{std::min(a, c), std::max(a, c)};
}

/// Named graph families used throughout tests, the CLI and the sweeps.
namespace family {

inline Graph complete(std::size_t n) {
  Graph g(n);
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i) g.add_edge(i, j);
  return g;
}

inline Graph empty(std::size_t n) { return Graph(n); }

inline Graph path(std::size_t n) {
  Graph g(n);
  for (std::size_t i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

inline Graph cycle(std::size_t n) {
  Graph g = path(n);
  if (n >= 3) g.add_edge(n - 1, 0);
  return g;
}

/// Side A is 0..a-1, side B is a..a+b-1.
inline Graph complete_bipartite(std::size_t a, std::size_t b) {
  Graph g(a + b);
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j) g.add_edge(i, a + j);
  return g;
}

inline Graph star(std::size_t leaves) { return complete_bipartite(1, leaves); }

/// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
inline Graph petersen() {
  Graph g(10);
  for (std::size_t i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
    g.add_edge(i, i + 5);
  }
  return g;
}

inline Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g(a.order() + b.order());
  for (std::size_t u = 0; u < a.order(); ++u)
    for (std::size_t v = u + 1; v < a.order(); ++v)
      if (a.has_edge(u, v)) g.add_edge(u, v);
  for (std::size_t u = 0; u < b.order(); ++u)
    for (std::size_t v = u + 1; v < b.order(); ++v)
      if (b.has_edge(u, v)) g.add_edge(a.order() + u, a.order() + v);
  return g;
}

}  // namespace family

}  // namespace hamspec
