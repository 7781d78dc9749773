#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <ranges>
#include <vector>

#include "hamspec/error.hpp"
#include "hamspec/graph.hpp"

namespace hamspec {

inline constexpr std::size_t kMaxEnumerationOrder = 7;

inline std::uint64_t labeled_count(std::size_t n) { return std::uint64_t{1} << pair_count(n); }

/// All labeled graphs on n vertices, in increasing edge-mask order.
inline auto enumerate_labeled(std::size_t n) {
  if (n == 0 || n > kMaxEnumerationOrder)
    throw Error(ErrorKind::CorpusTooLarge,
                "labeled enumeration is limited to 1 <= n <= 7, got " + std::to_string(n));
  return std::views::iota(std::uint64_t{0}, labeled_count(n)) |
         std::views::transform([n](std::uint64_t mask) { return Graph::from_edge_mask(n, mask); });
}

/// Keeps one representative per isomorphism class: the member whose edge mask
/// is smallest over all n! relabellings. Representatives are emitted in order
/// of the first time their class is seen.
///
/// A class is expanded in full (its whole orbit is marked) the first time it
/// appears, so later members cost one bit test each.
class IsomorphismFilter {
 public:
  explicit IsomorphismFilter(std::size_t n) : n_(n) {
    if (n == 0 || n > kMaxEnumerationOrder)
      throw Error(ErrorKind::CorpusTooLarge, "isomorphism filtering is limited to 1 <= n <= 7, got " + std::to_string(n));
    pairs_ = pair_count(n);
    seen_.assign((labeled_count(n) + 63) / 64, 0);

    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::vector<std::uint8_t> image(pairs_);
      for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i)
          image[edge_index(i, j)] = static_cast<std::uint8_t>(edge_index(perm[i], perm[j]));
      edge_maps_.push_back(std::move(image));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }

  std::uint64_t relabel(std::uint64_t mask, std::size_t which) const {
    const auto& image = edge_maps_[which];
    std::uint64_t out = 0;
    for (std::uint64_t m = mask; m; m &= m - 1) out |= std::uint64_t{1} << image[static_cast<std::size_t>(std::countr_zero(m))];
    return out;
  }

  std::uint64_t canonical_mask(std::uint64_t mask) const {
    std::uint64_t best = mask;
    for (std::size_t p = 0; p < edge_maps_.size(); ++p) best = std::min(best, relabel(mask, p));
    return best;
  }

  /// Returns the canonical representative when `g` opens a new class.
  std::optional<Graph> offer(const Graph& g) {
    if (g.order() != n_) throw Error(ErrorKind::InvalidArgument, "graph order differs from filter order");
    const std::uint64_t mask = g.edge_mask();
    if (is_seen(mask)) return std::nullopt;
    std::uint64_t best = mask;
    for (std::size_t p = 0; p < edge_maps_.size(); ++p) {
      const std::uint64_t image = relabel(mask, p);
      mark(image);
      best = std::min(best, image);
    }
    return Graph::from_edge_mask(n_, best);
  }

 private:
  bool is_seen(std::uint64_t mask) const { return (seen_[mask / 64] >> (mask % 64)) & 1U; }
  void mark(std::uint64_t mask) { seen_[mask / 64] |= std::uint64_t{1} << (mask % 64); }

  std::size_t n_;
  std::size_t pairs_ = 0;
  std::vector<std::vector<std::uint8_t>> edge_maps_;
  std::vector<std::uint64_t> seen_;
};

template <std::ranges::input_range Graphs>
std::vector<Graph> dedup_isomorphs(Graphs&& graphs, std::size_t n) {
  IsomorphismFilter filter(n);
  std::vector<Graph> out;
  for (const Graph& g : graphs)
    if (auto rep = filter.offer(g)) out.push_back(*rep);
  return out;
}

/// One representative per isomorphism class on n vertices.
inline std::vector<Graph> unlabeled_graphs(std::size_t n) { return dedup_isomorphs(enumerate_labeled(n), n); }

}  // namespace hamspec
