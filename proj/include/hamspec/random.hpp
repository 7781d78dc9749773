#pragma once

#include <cstdint>
#include <vector>

#include "hamspec/error.hpp"
#include "hamspec/graph.hpp"

namespace hamspec {

/// SplitMix64. The state advances by 0x9E3779B97F4A7C15 per draw and is then
/// mixed; fixed here so every implementation produces the same stream.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type{0}; }

  result_type operator()() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1) from the top 53 bits.
  double uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

/// Erdos-Renyi G(n, p): one draw per pair in graph6 order (0,1), (0,2), (1,2),
/// (0,3), ...; the pair is an edge iff uniform() < p.
class RandomGraphs {
 public:
  RandomGraphs(std::size_t n, double p, std::uint64_t seed) : n_(n), p_(p), rng_(seed) {
    if (!(p > 0.0 && p < 1.0)) throw Error(ErrorKind::InvalidArgument, "edge probability must lie in (0, 1)");
    if (n == 0 || n > 64) throw Error(ErrorKind::InvalidArgument, "random graphs are limited to 1 <= n <= 64");
  }

  Graph next() {
    Graph g(n_);
    for (std::size_t j = 1; j < n_; ++j)
      for (std::size_t i = 0; i < j; ++i)
        if (rng_.uniform() < p_) g.add_edge(i, j);
    return g;
  }

 private:
  std::size_t n_;
  double p_;
  SplitMix64 rng_;
};

inline std::vector<Graph> sample_random(std::size_t n, double p, std::size_t count, std::uint64_t seed) {
  RandomGraphs source(n, p, seed);
  std::vector<Graph> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(source.next());
  return out;
}

}  // namespace hamspec
