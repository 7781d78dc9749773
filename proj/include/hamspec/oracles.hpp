#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "hamspec/error.hpp"
#include "hamspec/graph.hpp"

namespace hamspec {

inline constexpr std::size_t kPathBudget = 24;
inline constexpr std::size_t kCircumferenceBudget = 16;

struct IndependentSet {
  std::size_t size = 0;
  VertexSet witness = 0;
};

namespace detail {

/// Branch and bound for the maximum independent set inside a candidate set.
/// Degree <= 1 vertices are taken greedily (some maximum set contains them);
/// a greedy clique cover bounds what the rest can still add.
class IndependenceSearch {
 public:
  explicit IndependenceSearch(const Graph& g) : g_(g) {}

  std::size_t max_size(VertexSet candidates) {
    best_ = greedy(candidates);
    search(candidates, 0);
    return best_;
  }

 private:
  std::size_t greedy(VertexSet cand) const {
    std::size_t size = 0;
    while (cand) {
      std::size_t pick = lowest(cand);
      std::size_t pick_deg = popcount(g_.neighbors(pick) & cand);
      for (VertexSet c = cand; c; c &= c - 1) {
        const std::size_t v = lowest(c);
        const std::size_t d = popcount(g_.neighbors(v) & cand);
        if (d < pick_deg) pick = v, pick_deg = d;
      }
      ++size;
      cand &= ~(g_.neighbors(pick) | singleton(pick));
    }
    return size;
  }

  std::size_t clique_cover(VertexSet cand) const {
    std::size_t cliques = 0;
    while (cand) {
      VertexSet clique_candidates = cand;
      while (clique_candidates) {
        const std::size_t v = lowest(clique_candidates);
        cand &= ~singleton(v);
        clique_candidates &= g_.neighbors(v);
      }
      ++cliques;
    }
    return cliques;
  }

  void search(VertexSet cand, std::size_t size) {
    bool reduced = true;
    while (reduced && cand) {
      reduced = false;
      for (VertexSet c = cand; c; c &= c - 1) {
        const std::size_t v = lowest(c);
        if (popcount(g_.neighbors(v) & cand) <= 1) {
          ++size;
          cand &= ~(g_.neighbors(v) | singleton(v));
          reduced = true;
          break;
        }
      }
    }
    if (!cand) {
      best_ = std::max(best_, size);
      return;
    }
    if (size + clique_cover(cand) <= best_) return;

    std::size_t pivot = lowest(cand);
    std::size_t pivot_deg = 0;
    for (VertexSet c = cand; c; c &= c - 1) {
      const std::size_t v = lowest(c);
      const std::size_t d = popcount(g_.neighbors(v) & cand);
      if (d > pivot_deg) pivot = v, pivot_deg = d;
    }
    search(cand & ~(g_.neighbors(pivot) | singleton(pivot)), size + 1);
    search(cand & ~singleton(pivot), size);
  }

  const Graph& g_;
  std::size_t best_ = 0;
};

}  // namespace detail

/// Independence number with a deterministic witness: among maximum independent
/// sets, the one whose sorted vertex list is lexicographically smallest.
inline IndependentSet independence_number(const Graph& g) {
  detail::IndependenceSearch search(g);
  IndependentSet result;
  result.size = search.max_size(g.vertices());

  VertexSet remaining = g.vertices();
  std::size_t chosen = 0;
  for (std::size_t v = 0; v < g.order() && chosen < result.size; ++v) {
    if (!(remaining & singleton(v))) continue;
    const VertexSet after = remaining & ~(g.neighbors(v) | singleton(v)) & ~first_vertices(v + 1);
    if (chosen + 1 + search.max_size(after) == result.size) {
      result.witness |= singleton(v);
      ++chosen;
      remaining = after;
    } else {
      remaining &= ~singleton(v);
    }
  }
  return result;
}

namespace detail {

/// Maximum number of internally vertex-disjoint s-t paths (s, t non-adjacent),
/// by unit augmentation on the vertex-split network. Stops early at `cap`.
///
/// Nodes: in(v) = 2v, out(v) = 2v + 1. Each inner vertex has one unit on
/// in(v) -> out(v); graph arcs out(u) -> in(v) are uncapacitated.
inline std::size_t disjoint_paths(const Graph& g, std::size_t s, std::size_t t, std::size_t cap) {
  const std::size_t n = g.order();
  std::vector<VertexSet> arc_flow(n, 0);  // v in arc_flow[u]: one unit on out(u) -> in(v)
  VertexSet through = 0;                  // inner vertices carrying a unit
  std::vector<int> parent(2 * n);
  std::vector<std::size_t> queue(2 * n);

  auto in_node = [](std::size_t v) { return 2 * v; };
  auto out_node = [](std::size_t v) { return 2 * v + 1; };

  std::size_t flow = 0;
  while (flow < cap) {
    std::fill(parent.begin(), parent.end(), -1);
    const std::size_t source = out_node(s);
    const std::size_t sink = in_node(t);
    parent[source] = static_cast<int>(source);
    std::size_t head = 0, tail = 0;
    queue[tail++] = source;
    auto visit = [&](std::size_t from, std::size_t to) {
      if (parent[to] != -1) return;
      parent[to] = static_cast<int>(from);
      queue[tail++] = to;
    };
    while (head < tail && parent[sink] == -1) {
      const std::size_t x = queue[head++];
      const std::size_t v = x / 2;
      if (x % 2 == 1) {
        // out(v): forward along graph arcs, backward into in(v).
        for (VertexSet nb = g.neighbors(v); nb; nb &= nb - 1) {
          const std::size_t w = lowest(nb);
          if (w != s) visit(x, in_node(w));
        }
        if (v != s && (through & singleton(v))) visit(x, in_node(v));
      } else {
        // in(v): through the vertex if unused, or back along an arc carrying flow.
        if (v != t && v != s && !(through & singleton(v))) visit(x, out_node(v));
        for (std::size_t u = 0; u < n; ++u)
          if (arc_flow[u] & singleton(v)) visit(x, out_node(u));
      }
    }
    if (parent[sink] == -1) break;

    for (std::size_t x = sink; x != source;) {
      const std::size_t p = static_cast<std::size_t>(parent[x]);
      const std::size_t pv = p / 2, xv = x / 2;
      if (pv == xv) {
        if (p % 2 == 0)
          through |= singleton(pv);
        else
          through &= ~singleton(pv);
      } else if (p % 2 == 1) {
        // out(pv) -> in(xv): push forward or cancel an opposite unit.
        if (arc_flow[xv] & singleton(pv))
          arc_flow[xv] &= ~singleton(pv);
        else
          arc_flow[pv] |= singleton(xv);
      } else {
        // in(pv) -> out(xv) is the reverse of arc out(xv) -> in(pv).
        arc_flow[xv] &= ~singleton(pv);
      }
      x = p;
    }
    ++flow;
  }
  return flow;
}

}  // namespace detail

/// Vertex connectivity. K_n has n - 1 by convention; disconnected graphs 0.
/// Otherwise the minimum over non-adjacent pairs of the number of internally
/// disjoint paths, scanning sources v_0..v_k while k is the best cut so far
/// (some vertex among the first k+1 avoids any minimum separator).
inline std::size_t vertex_connectivity(const Graph& g) {
  const std::size_t n = g.order();
  if (g.is_complete()) return n - 1;
  if (!g.is_connected()) return 0;
  std::size_t best = n - 1;
  for (std::size_t i = 0; i <= best && i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (g.has_edge(i, j)) continue;
      best = std::min(best, detail::disjoint_paths(g, i, j, best));
    }
  }
  return best;
}

namespace detail {

inline void require_budget(const Graph& g, std::size_t budget, const char* what) {
  if (g.order() > budget)
    throw Error(ErrorKind::BudgetExceeded, std::string(what) + " is limited to n <= " + std::to_string(budget) +
                                               ", got n = " + std::to_string(g.order()));
}

}  // namespace detail

/// Spanning cycle test by dynamic programming over (subset, endpoint) with
/// paths anchored at vertex 0.
inline bool is_hamiltonian(const Graph& g) {
  detail::require_budget(g, kPathBudget, "Hamiltonicity");
  const std::size_t n = g.order();
  if (n < 3) return false;
  // reach[m]: endpoints v of paths 0 -> v covering exactly {0} + (m << 1).
  const std::size_t states = std::size_t{1} << (n - 1);
  std::vector<std::uint32_t> reach(states, 0);
  for (std::size_t m = 1; m < states; ++m) {
    const VertexSet set = static_cast<VertexSet>(m) << 1;
    if ((m & (m - 1)) == 0) {
      reach[m] = static_cast<std::uint32_t>(set & g.neighbors(0));
      continue;
    }
    std::uint32_t ends = 0;
    for (VertexSet s = set; s; s &= s - 1) {
      const std::size_t v = lowest(s);
      const std::size_t prev = m & ~(std::size_t{1} << (v - 1));
      if (reach[prev] & g.neighbors(v)) ends |= std::uint32_t{1} << v;
    }
    reach[m] = ends;
  }
  return (reach[states - 1] & g.neighbors(0)) != 0;
}

/// Spanning path test, DP over (subset, endpoint) from every start vertex.
inline bool is_traceable(const Graph& g) {
  detail::require_budget(g, kPathBudget, "traceability");
  const std::size_t n = g.order();
  if (n == 1) return true;
  const std::size_t states = std::size_t{1} << n;
  std::vector<std::uint32_t> reach(states, 0);
  for (std::size_t m = 1; m < states; ++m) {
    if ((m & (m - 1)) == 0) {
      reach[m] = static_cast<std::uint32_t>(m);
      continue;
    }
    std::uint32_t ends = 0;
    for (VertexSet s = m; s; s &= s - 1) {
      const std::size_t v = lowest(s);
      if (reach[m & ~(std::size_t{1} << v)] & g.neighbors(v)) ends |= std::uint32_t{1} << v;
    }
    reach[m] = ends;
  }
  return reach[states - 1] != 0;
}

/// Longest cycle length (0 for forests). Each subset's paths start at its
/// lowest vertex, so every cycle is found once per rotation class.
inline std::size_t circumference(const Graph& g) {
  detail::require_budget(g, kCircumferenceBudget, "circumference");
  const std::size_t n = g.order();
  const std::size_t states = std::size_t{1} << n;
  std::vector<std::uint16_t> reach(states, 0);
  std::size_t best = 0;
  for (std::size_t m = 1; m < states; ++m) {
    const std::size_t low = lowest(m);
    if ((m & (m - 1)) == 0) {
      reach[m] = static_cast<std::uint16_t>(m);
      continue;
    }
    std::uint16_t ends = 0;
    for (VertexSet s = m & ~singleton(low); s; s &= s - 1) {
      const std::size_t v = lowest(s);
      if (reach[m & ~(std::size_t{1} << v)] & g.neighbors(v)) ends |= static_cast<std::uint16_t>(1U << v);
    }
    reach[m] = ends;
    const std::size_t len = popcount(m);
    if (len >= 3 && len > best && (ends & g.neighbors(low))) best = len;
  }
  return best;
}

struct InvariantBundle {
  std::size_t n = 0;
  std::size_t e = 0;
  std::size_t delta = 0;
  std::size_t Delta = 0;
  std::size_t gamma = 0;
  VertexSet gamma_witness = 0;
  std::size_t kappa = 0;
  bool hamiltonian = false;
  bool traceable = false;
};

inline InvariantBundle compute_invariants(const Graph& g) {
  InvariantBundle b;
  const DegreeProfile p = degree_profile(g);
  b.n = g.order();
  b.e = p.e;
  b.delta = p.delta;
  b.Delta = p.Delta;
  const IndependentSet is = independence_number(g);
  b.gamma = is.size;
  b.gamma_witness = is.witness;
  b.kappa = vertex_connectivity(g);
  b.hamiltonian = is_hamiltonian(g);
  b.traceable = b.hamiltonian || is_traceable(g);
  return b;
}

struct LemmaCheck {
  bool applicable = false;
  bool premise = false;
  bool conclusion = false;

  bool failed() const { return applicable && premise && !conclusion; }
};

/// Long-cycle lemma for 2-connected bipartite graphs; A is the larger side.
struct LongCycleCheck {
  bool applicable = false;
  bool premise = false;
  std::size_t size_a = 0;
  std::size_t size_b = 0;
  std::size_t s = 0;  // min degree over A
  std::size_t t = 0;  // min degree over B
  std::size_t bound = 0;
  std::size_t circumference = 0;

  bool failed() const { return applicable && premise && circumference < bound; }
};

struct LemmaAudit {
  LemmaCheck lemma1;  // gamma <= kappa  =>  Hamiltonian (n >= 3)
  LemmaCheck lemma2;  // gamma <= kappa + 1  =>  traceable
  LemmaCheck lemma3;  // balanced bipartite, cross degree sums >= m + 1  =>  Hamiltonian
  LongCycleCheck lemma4;

  bool any_failure() const { return lemma1.failed() || lemma2.failed() || lemma3.failed() || lemma4.failed(); }
};

inline LemmaAudit lemma_audit(const Graph& g, const InvariantBundle& inv) {
  LemmaAudit audit;
  const std::size_t n = g.order();

  audit.lemma1.applicable = n >= 3;
  audit.lemma1.premise = inv.gamma <= inv.kappa;
  audit.lemma1.conclusion = inv.hamiltonian;

  audit.lemma2.applicable = true;
  audit.lemma2.premise = inv.gamma <= inv.kappa + 1;
  audit.lemma2.conclusion = inv.traceable;

  const auto parts = bipartition(g);
  if (!parts) return audit;

  const std::size_t a_size = popcount(parts->sideA);
  const std::size_t b_size = popcount(parts->sideB);
  if (a_size == b_size && a_size >= 2) {
    const std::size_t m = a_size;
    audit.lemma3.applicable = true;
    audit.lemma3.premise = true;
    for (VertexSet xs = parts->sideA; xs && audit.lemma3.premise; xs &= xs - 1) {
      const std::size_t x = lowest(xs);
      for (VertexSet ys = parts->sideB & ~g.neighbors(x); ys; ys &= ys - 1) {
        if (g.degree(x) + g.degree(lowest(ys)) < m + 1) {
          audit.lemma3.premise = false;
          break;
        }
      }
    }
    audit.lemma3.conclusion = inv.hamiltonian;
  }

  if (inv.kappa >= 2 && n <= kCircumferenceBudget) {
    // |A| >= |B|; on a tie the side holding vertex 0 (our sideA) becomes B.
    const bool a_is_larger = a_size > b_size;
    const VertexSet side_a = a_is_larger ? parts->sideA : parts->sideB;
    const VertexSet side_b = a_is_larger ? parts->sideB : parts->sideA;
    auto min_degree = [&](VertexSet side) {
      std::size_t m = n;
      for (VertexSet s = side; s; s &= s - 1) m = std::min(m, g.degree(lowest(s)));
      return m;
    };
    auto& l4 = audit.lemma4;
    l4.applicable = true;
    l4.premise = true;
    l4.size_a = popcount(side_a);
    l4.size_b = popcount(side_b);
    l4.s = min_degree(side_a);
    l4.t = min_degree(side_b);
    const long long candidates[] = {static_cast<long long>(l4.size_b),
                                    static_cast<long long>(l4.s + l4.t) - 1,
                                    2 * static_cast<long long>(l4.s) - 2};
    l4.bound = static_cast<std::size_t>(std::max(0LL, 2 * *std::min_element(std::begin(candidates), std::end(candidates))));
    l4.circumference = circumference(g);
  }
  return audit;
}

inline LemmaAudit lemma_audit(const Graph& g) { return lemma_audit(g, compute_invariants(g)); }

}  // namespace hamspec
