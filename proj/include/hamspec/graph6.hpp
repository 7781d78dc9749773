#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "hamspec/error.hpp"
#include "hamspec/graph.hpp"

namespace hamspec {

inline constexpr std::string_view kGraph6Header = ">>graph6<<";

namespace detail {

inline constexpr int kGraph6Bias = 63;
inline constexpr int kGraph6Max = 126;

inline std::string_view trim_line_end(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  return text;
}

}  // namespace detail

/// Decodes one graph6 line. Accepts the one-byte order prefix and the
/// four-byte form (126 followed by 18 bits); orders above 64 are rejected.
/// A trailing CR/LF and a leading ">>graph6<<" header are tolerated.
inline Graph parse_graph6(std::string_view text) {
  text = detail::trim_line_end(text);
  if (text.starts_with(kGraph6Header)) text.remove_prefix(kGraph6Header.size());
  if (text.empty()) throw Error(ErrorKind::Truncation, "empty graph6 string");

  for (std::size_t i = 0; i < text.size(); ++i) {
    const int c = static_cast<unsigned char>(text[i]);
    if (c < detail::kGraph6Bias || c > detail::kGraph6Max)
      throw Error(ErrorKind::MalformedCharacter,
                  "byte " + std::to_string(c) + " at offset " + std::to_string(i) + " is outside [63,126]");
  }

  std::size_t pos = 0;
  std::size_t n = 0;
  if (text[0] != detail::kGraph6Max) {
    n = static_cast<std::size_t>(text[0] - detail::kGraph6Bias);
    pos = 1;
  } else {
    if (text.size() >= 2 && text[1] == detail::kGraph6Max)
      throw Error(ErrorKind::UnsupportedSize, "eight-byte order prefix (n > 258047) is not supported");
    if (text.size() < 4) throw Error(ErrorKind::Truncation, "four-byte order prefix is cut short");
    for (std::size_t i = 1; i < 4; ++i) n = (n << 6) | static_cast<std::size_t>(text[i] - detail::kGraph6Bias);
    pos = 4;
  }
  if (n == 0 || n > kMaxVertices)
    throw Error(ErrorKind::UnsupportedSize, "graph order " + std::to_string(n) + " outside [1, 64]");

  const std::size_t bits = pair_count(n);
  const std::size_t expected_bytes = (bits + 5) / 6;
  if (text.size() - pos != expected_bytes)
    throw Error(ErrorKind::Truncation, "expected " + std::to_string(expected_bytes) + " data bytes for n=" +
                                           std::to_string(n) + ", found " + std::to_string(text.size() - pos));

  Graph g(n);
  std::size_t k = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++k) {
      const int chunk = text[pos + k / 6] - detail::kGraph6Bias;
      if ((chunk >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (bits % 6 != 0) {
    const int last = text.back() - detail::kGraph6Bias;
    if (last & ((1 << (6 - bits % 6)) - 1)) throw Error(ErrorKind::Padding, "nonzero padding bits");
  }
  return g;
}

/// Short-form encoder (n <= 62). Padding bits are zero.
inline std::string encode_graph6(const Graph& g) {
  const std::size_t n = g.order();
  if (n > 62) throw Error(ErrorKind::UnsupportedSize, "graph6 encoding supports n <= 62, got " + std::to_string(n));
  std::string out;
  const std::size_t bits = pair_count(n);
  out.reserve(1 + (bits + 5) / 6);
  out.push_back(static_cast<char>(detail::kGraph6Bias + n));
  int chunk = 0;
  std::size_t k = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++k) {
      chunk = (chunk << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (k % 6 == 5) {
        out.push_back(static_cast<char>(detail::kGraph6Bias + chunk));
        chunk = 0;
      }
    }
  }
  if (bits % 6 != 0) out.push_back(static_cast<char>(detail::kGraph6Bias + (chunk << (6 - bits % 6))));
  return out;
}

struct Graph6Record {
  std::size_t line = 0;  // 1-based line number in the source
  std::string text;
  Graph graph;
};

/// Reads a graph6 file: one graph per line, LF or CRLF, blank lines skipped,
/// optional ">>graph6<<" header. Errors carry the offending line number.
inline std::vector<Graph6Record> read_graph6(std::istream& in) {
  std::vector<Graph6Record> records;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    std::string_view text = detail::trim_line_end(line);
    if (text.starts_with(kGraph6Header)) text.remove_prefix(kGraph6Header.size());
    if (text.empty()) continue;
    try {
      records.push_back({number, std::string(text), parse_graph6(text)});
    } catch (const Error& err) {
      throw Error(err.kind(), "line " + std::to_string(number) + ": " + err.what());
    }
  }
  return records;
}

}  // namespace hamspec
