#pragma once

#include <algorithm>
#include <array>
#include <cerrno>
#include <cmath>
#include <span>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <thread>
#include <tuple>
#include <vector>

#include "json.hpp"

#include "hamspec/certifier.hpp"
#include "hamspec/enumerate.hpp"
#include "hamspec/error.hpp"
#include "hamspec/graph.hpp"
#include "hamspec/graph6.hpp"
#include "hamspec/oracles.hpp"
#include "hamspec/random.hpp"
#include "hamspec/spectral.hpp"

namespace hamspec {

enum class Check { Theorem1, Theorem2, Corollary, Rayleigh, Psd, Lemmas, RowSum };

inline constexpr std::array kAllChecks = {Check::Theorem1, Check::Theorem2, Check::Corollary, Check::Rayleigh,
                                          Check::Psd,      Check::Lemmas,   Check::RowSum};

inline const char* to_string(Check c) {
  switch (c) {
    case Check::Theorem1: return "theorem1";
    case Check::Theorem2: return "theorem2";
    case Check::Corollary: return "corollary";
    case Check::Rayleigh: return "rayleigh";
    case Check::Psd: return "psd";
    case Check::Lemmas: return "lemmas";
    case Check::RowSum: return "rowsum";
  }
  return "?";
}

inline Check parse_check(std::string_view name) {
  for (Check c : kAllChecks)
    if (name == to_string(c)) return c;
  throw Error(ErrorKind::InvalidArgument, "unknown check '" + std::string(name) + "'");
}

/// Checks that compare eigenvalues against bounds; they need alpha >= beta > 0.
inline bool needs_certifiable(Check c) {
  return c == Check::Theorem1 || c == Check::Theorem2 || c == Check::Corollary || c == Check::Rayleigh ||
         c == Check::Psd;
}

inline std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

namespace detail {

template <typename T>
T parse_number(std::string_view text, const char* what) {
  std::string s(text);
  char* end = nullptr;
  T value{};
  errno = 0;
  if constexpr (std::is_floating_point_v<T>)
    value = static_cast<T>(std::strtod(s.c_str(), &end));
  else
    value = static_cast<T>(std::strtoull(s.c_str(), &end, 10));
  if (s.empty() || end != s.c_str() + s.size() || errno != 0 || (std::is_unsigned_v<T> && s.front() == '-'))
    throw Error(ErrorKind::InvalidArgument, std::string("invalid ") + what + " '" + s + "'");
  return value;
}

}  // namespace detail

struct Source {
  enum class Kind { Labeled, Dedup, File, Random };

  Kind kind = Kind::Labeled;
  std::size_t n = 0;
  std::string path;
  double p = 0;
  std::size_t count = 0;
  std::uint64_t seed = 0;

  static Source labeled(std::size_t n) { return {Kind::Labeled, n, {}}; }
  static Source dedup(std::size_t n) { return {Kind::Dedup, n, {}}; }
  static Source file(std::string path) { return {Kind::File, 0, std::move(path)}; }
  static Source random(std::size_t n, double p, std::size_t count, std::uint64_t seed) {
    return {Kind::Random, n, {}, p, count, seed};
  }

  /// labeled:N | dedup:N | file:PATH | random:N,P,COUNT,SEED
  static Source parse(std::string_view text) {
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) throw Error(ErrorKind::InvalidArgument, "source needs KIND:ARGS, got '" + std::string(text) + "'");
    const std::string_view kind = text.substr(0, colon);
    const std::string_view args = text.substr(colon + 1);
    if (kind == "labeled") return labeled(detail::parse_number<std::size_t>(args, "order"));
    if (kind == "dedup") return dedup(detail::parse_number<std::size_t>(args, "order"));
    if (kind == "file") {
      if (args.empty()) throw Error(ErrorKind::InvalidArgument, "file source needs a path");
      return file(std::string(args));
    }
    if (kind == "random") {
      const auto parts = split(args, ',');
      if (parts.size() != 4) throw Error(ErrorKind::InvalidArgument, "random source needs N,P,COUNT,SEED");
      return random(detail::parse_number<std::size_t>(parts[0], "order"), detail::parse_number<double>(parts[1], "probability"),
                    detail::parse_number<std::size_t>(parts[2], "count"), detail::parse_number<std::uint64_t>(parts[3], "seed"));
    }
    throw Error(ErrorKind::InvalidArgument, "unknown source kind '" + std::string(kind) + "'");
  }

  std::string describe() const {
    switch (kind) {
      case Kind::Labeled: return "labeled:" + std::to_string(n);
      case Kind::Dedup: return "dedup:" + std::to_string(n);
      case Kind::File: return "file:" + path;
      case Kind::Random: {
        nlohmann::json pj = p;
        return "random:" + std::to_string(n) + "," + pj.dump() + "," + std::to_string(count) + "," + std::to_string(seed);
      }
    }
    return "?";
  }

  void validate() const {
    switch (kind) {
      case Kind::Labeled:
      case Kind::Dedup:
        if (n == 0 || n > kMaxEnumerationOrder)
          throw Error(ErrorKind::CorpusTooLarge, "enumerated sources need 1 <= n <= 7, got " + std::to_string(n));
        break;
      case Kind::Random:
        if (!(p > 0 && p < 1)) throw Error(ErrorKind::InvalidArgument, "random source needs 0 < p < 1");
        if (n == 0 || n > kPathBudget) throw Error(ErrorKind::InvalidArgument, "random source needs 1 <= n <= 24");
        break;
      case Kind::File: break;
    }
  }
};

inline std::vector<SpectralParams> default_grid() {
  return {SpectralParams(1, 1), SpectralParams(2, 1), SpectralParams(3, 2), SpectralParams(5, 1)};
}

struct Tolerances {
  double condition = kConditionTolerance;
  double corollary = 1e-8;
  double rayleigh = 1e-9;
  double psd = 1e-9;
  double quadratic_form = 1e-12;
};

struct SweepSpec {
  Source source;
  std::vector<SpectralParams> grid = default_grid();
  std::vector<Check> checks{kAllChecks.begin(), kAllChecks.end()};
  Tolerances tol;
  std::size_t jobs = 1;
  bool full_events = false;
  std::size_t quadratic_form_vectors = 4;  // random vectors per graph and pair for the psd check

  bool enabled(Check c) const { return std::find(checks.begin(), checks.end(), c) != checks.end(); }

  void validate() const {
    source.validate();
    if (grid.empty()) throw Error(ErrorKind::InvalidArgument, "parameter grid is empty");
    if (checks.empty()) throw Error(ErrorKind::InvalidArgument, "no checks selected");
    for (Check c : checks)
      if (needs_certifiable(c))
        for (const auto& p : grid)
          if (!p.certifiable())
            throw Error(ErrorKind::InvalidArgument,
                        std::string("check ") + to_string(c) + " needs alpha >= beta > 0, grid has " + p.label());
  }
};

struct CheckCounters {
  std::uint64_t graphs = 0;
  std::uint64_t evaluated = 0;
  std::uint64_t holds = 0;
  std::uint64_t certified = 0;
  std::uint64_t exceptional = 0;
  std::uint64_t counterexamples = 0;
  std::uint64_t skipped = 0;  // oracle budget exceeded

  CheckCounters& operator+=(const CheckCounters& o) {
    graphs += o.graphs;
    evaluated += o.evaluated;
    holds += o.holds;
    certified += o.certified;
    exceptional += o.exceptional;
    counterexamples += o.counterexamples;
    skipped += o.skipped;
    return *this;
  }
};

/// One failed check. `condition` names what failed: T1.1 .. T2.2, lower1,
/// upper_n, lambda1, lambdaN, psd, quadratic_form, rowsum, lemma1 .. lemma4.
struct Counterexample {
  std::string graph6;
  std::size_t param_index = 0;
  std::string alpha;
  std::string beta;
  Check check = Check::Theorem1;
  std::string condition;
  std::size_t k = 0;
  double lambda = 0;
  double bound = 0;
  std::string oracle;

  auto key() const { return std::tie(graph6, param_index, check, condition, k); }
};

struct SweepReport {
  std::uint64_t graphs = 0;
  std::array<CheckCounters, kAllChecks.size()> counters{};
  std::vector<Counterexample> counterexamples;
  /// Second theorem: holds and not K_{k,k+2}, yet the graph is not Hamiltonian.
  std::vector<Counterexample> printed_reading_violations;
  std::vector<std::string> budget_skipped;
  std::vector<nlohmann::json> events;
  double wall_seconds = 0;

  CheckCounters& at(Check c) { return counters[static_cast<std::size_t>(c)]; }
  const CheckCounters& at(Check c) const { return counters[static_cast<std::size_t>(c)]; }
  std::size_t counterexample_count() const { return counterexamples.size(); }
};

namespace detail {

struct SourceItem {
  Graph graph;
  std::string text;
};

class GraphStream {
 public:
  explicit GraphStream(const Source& s) : source_(s) {
    switch (s.kind) {
      case Source::Kind::Labeled: total_ = labeled_count(s.n); break;
      case Source::Kind::Dedup:
        for (auto& g : unlabeled_graphs(s.n)) items_.push_back({g, encode_graph6(g)});
        total_ = items_.size();
        break;
      case Source::Kind::File: {
        std::ifstream in(s.path);
        if (!in) throw Error(ErrorKind::Io, "cannot read '" + s.path + "'");
        for (auto& r : read_graph6(in)) items_.push_back({r.graph, r.text});
        total_ = items_.size();
        break;
      }
      case Source::Kind::Random:
        random_.emplace(s.n, s.p, s.seed);
        total_ = s.count;
        break;
    }
  }

  std::optional<SourceItem> next() {
    if (position_ >= total_) return std::nullopt;
    const std::uint64_t i = position_++;
    switch (source_.kind) {
      case Source::Kind::Labeled: {
        Graph g = Graph::from_edge_mask(source_.n, i);
        return SourceItem{g, encode_graph6(g)};
      }
      case Source::Kind::Random: {
        Graph g = random_->next();
        return SourceItem{g, encode_graph6(g)};
      }
      default: return items_[i];
    }
  }

 private:
  Source source_;
  std::uint64_t total_ = 0;
  std::uint64_t position_ = 0;
  std::vector<SourceItem> items_;
  std::optional<RandomGraphs> random_;
};

/// Oracle results computed on first use.
class LazyOracles {
 public:
  explicit LazyOracles(const Graph& g) : g_(g) {}

  bool hamiltonian() {
    if (!ham_) ham_ = facts_ ? facts_->hamiltonian(g_) : is_hamiltonian(g_);
    return *ham_;
  }
  void share(const GraphFacts& facts) { facts_ = &facts; }
  bool traceable() {
    if (!trace_) trace_ = hamiltonian() || is_traceable(g_);
    return *trace_;
  }
  const IndependentSet& independence() {
    if (!gamma_) gamma_ = independence_number(g_);
    return *gamma_;
  }

 private:
  const Graph& g_;
  std::optional<bool> ham_;
  std::optional<bool> trace_;
  std::optional<IndependentSet> gamma_;
  const GraphFacts* facts_ = nullptr;
};

struct GraphResult {
  std::array<CheckCounters, kAllChecks.size()> counters{};
  std::vector<Counterexample> counterexamples;
  std::vector<Counterexample> printed_reading_violations;
  std::vector<nlohmann::json> events;
  bool budget_skipped = false;

  CheckCounters& at(Check c) { return counters[static_cast<std::size_t>(c)]; }
};

inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
  SplitMix64 m(a * 0x9E3779B97F4A7C15ULL ^ (b + 0x632BE59BD9B4E019ULL));
  return m();
}

class GraphChecker {
 public:
  GraphChecker(const SweepSpec& spec, const SourceItem& item, std::uint64_t index)
      : spec_(spec), g_(item.graph), text_(item.text), index_(index), oracles_(g_) {}

  GraphResult run() {
    const bool needs_facts = spec_.enabled(Check::Theorem1) || spec_.enabled(Check::Theorem2);
    facts_.degrees = degree_profile(g_);
    if (needs_facts) facts_ = analyze(g_);
    oracles_.share(facts_);

    for (Check c : spec_.checks) result_.at(c).graphs++;

    for (std::size_t pi = 0; pi < spec_.grid.size(); ++pi) {
      const SpectralParams& p = spec_.grid[pi];
      std::optional<SpectrumSummary> s;
      auto spec_needs_spectrum = [&] {
        for (Check c : spec_.checks)
          if (needs_certifiable(c)) return true;
        return false;
      };
      if (spec_needs_spectrum()) s = spectrum(g_, p);
      for (Check c : spec_.checks) {
        if (c == Check::Lemmas) continue;
        guarded(c, [&] { run_check(c, pi, p, s); });
      }
    }
    if (spec_.enabled(Check::Lemmas)) guarded(Check::Lemmas, [&] { lemmas(); });
    return std::move(result_);
  }

 private:
  template <typename F>
  void guarded(Check c, F&& f) {
    try {
      f();
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::BudgetExceeded) throw;
      result_.at(c).skipped++;
      result_.budget_skipped = true;
    }
  }

  Counterexample record(Check c, std::size_t pi, std::string condition) const {
    Counterexample r;
    r.graph6 = text_;
    r.param_index = pi;
    if (pi < spec_.grid.size()) {
      r.alpha = to_string(spec_.grid[pi].alpha());
      r.beta = to_string(spec_.grid[pi].beta());
    }
    r.check = c;
    r.condition = std::move(condition);
    return r;
  }

  void fail(Counterexample r) {
    result_.at(r.check).counterexamples++;
    result_.counterexamples.push_back(std::move(r));
  }

  void event(Check c, std::size_t pi, bool ok, nlohmann::json extra = nlohmann::json::object()) {
    if (!spec_.full_events) return;
    nlohmann::json j = {{"type", "event"}, {"graph6", text_}, {"check", to_string(c)}, {"ok", ok}};
    if (pi < spec_.grid.size()) {
      j["alpha"] = to_string(spec_.grid[pi].alpha());
      j["beta"] = to_string(spec_.grid[pi].beta());
    }
    for (auto& [k, v] : extra.items()) j[k] = v;
    result_.events.push_back(std::move(j));
  }

  void run_check(Check c, std::size_t pi, const SpectralParams& p, const std::optional<SpectrumSummary>& s) {
    switch (c) {
      case Check::Theorem1: theorem(1, pi, p, *s); break;
      case Check::Theorem2: theorem(2, pi, p, *s); break;
      case Check::Corollary: corollary(pi, p, *s); break;
      case Check::Rayleigh: rayleigh(pi, p, *s); break;
      case Check::Psd: psd(pi, p, *s); break;
      case Check::RowSum: rowsum(pi, p); break;
      case Check::Lemmas: break;
    }
  }

  void theorem(int which, std::size_t pi, const SpectralParams& p, const SpectrumSummary& s) {
    const Check c = which == 1 ? Check::Theorem1 : Check::Theorem2;
    auto& counters = result_.at(c);
    const std::size_t n = g_.order();
    const std::size_t min_order = which == 1 ? 3 : 9;
    const std::size_t min_k = which == 1 ? 2 : 1;
    const std::size_t shift = which == 1 ? 1 : 2;
    if (n < min_order || !facts_.connected) return;
    std::size_t evaluated = 0, holding = 0, failures = 0;
    for (std::size_t k = min_k; k <= facts_.kappa && k + shift + 1 <= n; ++k) {
      for (int part : {1, 2}) {
        const double tol = spec_.tol.condition;
        const Verdict v = which == 1 ? theorem1_condition(g_, facts_, p, s, k, part, tol)
                                     : theorem2_condition(g_, facts_, p, s, k, part, tol);
        counters.evaluated++;
        ++evaluated;
        if (!v.holds) continue;
        counters.holds++;
        ++holding;
        if (v.outcome == Outcome::ExceptionalCompleteBipartite) {
          counters.exceptional++;
          continue;
        }
        counters.certified++;
        const bool ok = which == 1 ? oracles_.hamiltonian() : oracles_.traceable();
        if (!ok) {
          Counterexample r = record(c, pi, v.condition());
          r.k = k;
          r.lambda = v.lambda;
          r.bound = v.bound;
          r.oracle = which == 1 ? "not hamiltonian" : "not traceable";
          ++failures;
          fail(std::move(r));
        } else if (which == 2 && !oracles_.hamiltonian()) {
          Counterexample r = record(c, pi, v.condition());
          r.k = k;
          r.lambda = v.lambda;
          r.bound = v.bound;
          r.oracle = "traceable, not hamiltonian";
          result_.printed_reading_violations.push_back(std::move(r));
        }
      }
    }
    event(c, pi, failures == 0, {{"evaluated", evaluated}, {"holds", holding}});
  }

  void corollary(std::size_t pi, const SpectralParams& p, const SpectrumSummary& s) {
    if (facts_.degrees.e == 0) return;
    auto& counters = result_.at(Check::Corollary);
    const CorollaryBounds b = corollary_bounds(facts_.degrees, oracles_.independence().size, p);
    counters.evaluated += 2;
    const double tol = spec_.tol.corollary;
    const bool lower_ok = s.lambda1 >= b.lower1 - tol * (1 + b.lower1);
    const bool upper_ok = s.lambdaN <= b.upper_n + tol * (1 + b.upper_n);
    counters.holds += static_cast<std::uint64_t>(lower_ok) + static_cast<std::uint64_t>(upper_ok);
    if (!lower_ok) {
      Counterexample r = record(Check::Corollary, pi, "lower1");
      r.lambda = s.lambda1;
      r.bound = b.lower1;
      r.oracle = "gamma=" + std::to_string(b.gamma);
      fail(std::move(r));
    }
    if (!upper_ok) {
      Counterexample r = record(Check::Corollary, pi, "upper_n");
      r.lambda = s.lambdaN;
      r.bound = b.upper_n;
      r.oracle = "gamma=" + std::to_string(b.gamma);
      fail(std::move(r));
    }
    event(Check::Corollary, pi, lower_ok && upper_ok, {{"lower1", b.lower1}, {"upper_n", b.upper_n}});
  }

  void rayleigh(std::size_t pi, const SpectralParams& p, const SpectrumSummary& s) {
    auto& counters = result_.at(Check::Rayleigh);
    const RayleighTriple t{s.lambda1 * s.lambda1, rayleigh_mean_term(facts_.degrees, p), s.lambdaN * s.lambdaN};
    counters.evaluated++;
    const double mean = to_double(t.mean_term);
    const double tol = spec_.tol.rayleigh * (1 + t.lambda1_sq);
    const bool upper = t.lambda1_sq >= mean - tol;
    const bool lower = mean >= t.lambdaN_sq - tol;
    if (upper && lower) counters.holds++;
    if (!upper) {
      Counterexample r = record(Check::Rayleigh, pi, "lambda1");
      r.lambda = s.lambda1;
      r.bound = std::sqrt(mean);
      fail(std::move(r));
    }
    if (!lower) {
      Counterexample r = record(Check::Rayleigh, pi, "lambdaN");
      r.lambda = s.lambdaN;
      r.bound = std::sqrt(mean);
      fail(std::move(r));
    }
    event(Check::Rayleigh, pi, upper && lower, {{"lambda1_sq", t.lambda1_sq}, {"mean", mean}, {"lambdaN_sq", t.lambdaN_sq}});
  }

  void psd(std::size_t pi, const SpectralParams& p, const SpectrumSummary& s) {
    auto& counters = result_.at(Check::Psd);
    counters.evaluated++;
    bool ok = s.lambdaN >= -spec_.tol.psd * (1 + s.lambda1);
    if (!ok) {
      Counterexample r = record(Check::Psd, pi, "psd");
      r.lambda = s.lambdaN;
      fail(std::move(r));
    }
    if (spec_.quadratic_form_vectors > 0) {
      const SymMatrix m = build_matrix(g_, p);
      SplitMix64 rng(mix_seed(index_, pi));
      std::vector<double> x(g_.order());
      for (std::size_t trial = 0; trial < spec_.quadratic_form_vectors; ++trial) {
        for (double& xi : x) xi = 2 * rng.uniform() - 1;
        const auto check = quadratic_form_agreement(m, g_, p, x, spec_.tol.quadratic_form);
        if (!check.first || !check.second) {
          Counterexample r = record(Check::Psd, pi, check.first ? "quadratic_form_sign" : "quadratic_form");
          r.lambda = quadratic_form(g_, p, x);
          r.bound = explicit_quadratic_form(m, x);
          fail(std::move(r));
          ok = false;
          break;
        }
      }
    }
    if (ok) counters.holds++;
    event(Check::Psd, pi, ok, {{"lambdaN", s.lambdaN}});
  }

 public:
  /// (identity ok, nonnegative) for one vector. The identity is judged
  /// relative to sum |x_i m_ij x_j|, the magnitude the two routes accumulate.
  static std::pair<bool, bool> quadratic_form_agreement(const SymMatrix& m, const Graph& g, const SpectralParams& p,
                                                        std::span<const double> x, double rel) {
    const double edge_route = quadratic_form(g, p, x);
    const double matrix_route = explicit_quadratic_form(m, x);
    double scale = 0;
    for (std::size_t i = 0; i < m.n; ++i)
      for (std::size_t j = 0; j < m.n; ++j) scale += std::abs(x[i] * m(i, j) * x[j]);
    const bool same = std::abs(edge_route - matrix_route) <= rel * scale;
    const bool nonnegative = edge_route >= -rel * scale;
    return {same, nonnegative};
  }

 private:
  void rowsum(std::size_t pi, const SpectralParams& p) {
    auto& counters = result_.at(Check::RowSum);
    const std::vector<Rational> explicit_sums = row_sums_of_square(build_exact_matrix(g_, p));
    Rational total = 0;
    bool ok = true;
    for (std::size_t u = 0; u < g_.order(); ++u) {
      const Rational formula = row_sum_m_squared(g_, p, u);
      counters.evaluated++;
      total += formula;
      if (formula != explicit_sums[u]) {
        ok = false;
        Counterexample r = record(Check::RowSum, pi, "rowsum");
        r.k = u;
        r.lambda = to_double(formula);
        r.bound = to_double(explicit_sums[u]);
        fail(std::move(r));
      }
    }
    const Rational weight = (p.alpha() + p.beta()) * (p.alpha() + p.beta());
    counters.evaluated++;
    if (total != weight * static_cast<long long>(facts_.degrees.sumsq)) {
      ok = false;
      Counterexample r = record(Check::RowSum, pi, "rowsum_total");
      r.lambda = to_double(total);
      r.bound = to_double(weight * static_cast<long long>(facts_.degrees.sumsq));
      fail(std::move(r));
    }
    if (ok) counters.holds++;
    event(Check::RowSum, pi, ok);
  }

  void lemmas() {
    auto& counters = result_.at(Check::Lemmas);
    InvariantBundle inv;
    inv.n = g_.order();
    inv.e = facts_.degrees.e;
    inv.delta = facts_.degrees.delta;
    inv.Delta = facts_.degrees.Delta;
    inv.gamma = oracles_.independence().size;
    inv.gamma_witness = oracles_.independence().witness;
    inv.kappa = (spec_.enabled(Check::Theorem1) || spec_.enabled(Check::Theorem2)) ? facts_.kappa : vertex_connectivity(g_);
    inv.hamiltonian = oracles_.hamiltonian();
    inv.traceable = oracles_.traceable();
    const LemmaAudit audit = lemma_audit(g_, inv);
    const std::pair<const LemmaCheck*, const char*> simple[] = {
        {&audit.lemma1, "lemma1"}, {&audit.lemma2, "lemma2"}, {&audit.lemma3, "lemma3"}};
    for (auto [check, name] : simple) {
      if (!check->applicable) continue;
      counters.evaluated++;
      if (check->premise) counters.holds++;
      if (check->failed()) {
        Counterexample r = record(Check::Lemmas, spec_.grid.size(), name);
        r.oracle = "premise holds, conclusion fails";
        fail(std::move(r));
      }
    }
    if (audit.lemma4.applicable) {
      counters.evaluated++;
      counters.holds++;
      if (audit.lemma4.failed()) {
        Counterexample r = record(Check::Lemmas, spec_.grid.size(), "lemma4");
        r.lambda = static_cast<double>(audit.lemma4.circumference);
        r.bound = static_cast<double>(audit.lemma4.bound);
        r.oracle = "circumference below bound";
        fail(std::move(r));
      }
    }
    event(Check::Lemmas, spec_.grid.size(), !audit.any_failure());
  }

  const SweepSpec& spec_;
  const Graph& g_;
  const std::string& text_;
  std::uint64_t index_;
  LazyOracles oracles_;
  GraphFacts facts_;
  GraphResult result_;
};

}  // namespace detail

inline std::size_t default_jobs() {
  if (const char* env = std::getenv("HAMSPEC_JOBS")) {
    try {
      const auto v = detail::parse_number<std::size_t>(env, "HAMSPEC_JOBS");
      if (v > 0) return v;
    } catch (const Error&) {
    }
  }
  return 1;
}

/// Runs every enabled check on every graph of the source for every pair in
/// the grid. Work is split across `jobs` threads per chunk and merged in
/// source order; counterexamples are finally ordered by graph6 text, so the
/// report does not depend on the job count.
inline SweepReport sweep(const SweepSpec& spec) {
  spec.validate();
  const auto start = std::chrono::steady_clock::now();
  detail::GraphStream stream(spec.source);
  SweepReport report;
  const std::size_t jobs = std::max<std::size_t>(1, spec.jobs);
  constexpr std::size_t kChunk = 4096;

  std::vector<detail::SourceItem> chunk;
  std::vector<std::optional<detail::GraphResult>> results;
  std::uint64_t index = 0;
  while (true) {
    chunk.clear();
    while (chunk.size() < kChunk) {
      auto item = stream.next();
      if (!item) break;
      chunk.push_back(std::move(*item));
    }
    if (chunk.empty()) break;
    results.assign(chunk.size(), std::nullopt);
    const std::uint64_t base = index;
    auto work = [&](std::size_t worker) {
      for (std::size_t i = worker; i < chunk.size(); i += jobs)
        results[i] = detail::GraphChecker(spec, chunk[i], base + i).run();
    };
    if (jobs == 1) {
      work(0);
    } else {
      std::vector<std::exception_ptr> errors(jobs);
      std::vector<std::thread> pool;
      for (std::size_t w = 0; w < jobs; ++w)
        pool.emplace_back([&, w] {
          try {
            work(w);
          } catch (...) {
            errors[w] = std::current_exception();
          }
        });
      for (auto& t : pool) t.join();
      for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    }
    for (std::size_t i = 0; i < chunk.size(); ++i) {
      auto& r = *results[i];
      for (std::size_t c = 0; c < r.counters.size(); ++c) report.counters[c] += r.counters[c];
      std::move(r.counterexamples.begin(), r.counterexamples.end(), std::back_inserter(report.counterexamples));
      std::move(r.printed_reading_violations.begin(), r.printed_reading_violations.end(),
                std::back_inserter(report.printed_reading_violations));
      std::move(r.events.begin(), r.events.end(), std::back_inserter(report.events));
      if (r.budget_skipped) report.budget_skipped.push_back(chunk[i].text);
    }
    report.graphs += chunk.size();
    index += chunk.size();
  }

  auto by_key = [](const Counterexample& a, const Counterexample& b) { return a.key() < b.key(); };
  std::stable_sort(report.counterexamples.begin(), report.counterexamples.end(), by_key);
  std::stable_sort(report.printed_reading_violations.begin(), report.printed_reading_violations.end(), by_key);
  std::stable_sort(report.budget_skipped.begin(), report.budget_skipped.end());
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

inline nlohmann::json to_json(const Counterexample& r, std::string_view type) {
  nlohmann::json j = {{"type", type},      {"check", to_string(r.check)}, {"graph6", r.graph6},
                      {"condition", r.condition}, {"k", r.k},           {"lambda", r.lambda},
                      {"bound", r.bound},  {"oracle", r.oracle}};
  if (!r.alpha.empty()) {
    j["alpha"] = r.alpha;
    j["beta"] = r.beta;
  }
  return j;
}

inline nlohmann::json summary_json(const SweepSpec& spec, const SweepReport& report) {
  nlohmann::json params = nlohmann::json::array();
  for (const auto& p : spec.grid) params.push_back({{"alpha", to_string(p.alpha())}, {"beta", to_string(p.beta())}});
  nlohmann::json checks = nlohmann::json::array();
  nlohmann::json counters = nlohmann::json::object();
  for (Check c : spec.checks) {
    checks.push_back(to_string(c));
    const auto& k = report.at(c);
    counters[to_string(c)] = {{"graphs", k.graphs},           {"evaluated", k.evaluated},
                              {"holds", k.holds},             {"certified", k.certified},
                              {"exceptional", k.exceptional}, {"counterexamples", k.counterexamples},
                              {"skipped", k.skipped}};
  }
  nlohmann::json j = {
      {"type", "summary"},
      {"source", spec.source.describe()},
      {"params", params},
      {"checks", checks},
      {"tolerances",
       {{"condition", spec.tol.condition},
        {"corollary", spec.tol.corollary},
        {"rayleigh", spec.tol.rayleigh},
        {"psd", spec.tol.psd},
        {"quadratic_form", spec.tol.quadratic_form}}},
      {"quadratic_form_vectors", spec.quadratic_form_vectors},
      {"graphs", report.graphs},
      {"counters", counters},
      {"counterexample_count", report.counterexample_count()},
      {"budget_skipped", report.budget_skipped},
  };
  if (spec.enabled(Check::Theorem2)) j["printed_reading_violation_count"] = report.printed_reading_violations.size();
  return j;
}

/// JSON Lines: events (full verbosity only), counterexamples, second-theorem
/// printed-reading violations, then one summary record. Wall time is left out
/// so reruns compare byte for byte.
inline void write_report(std::ostream& out, const SweepSpec& spec, const SweepReport& report) {
  for (const auto& e : report.events) out << e.dump() << '\n';
  for (const auto& r : report.counterexamples) out << to_json(r, "counterexample").dump() << '\n';
  for (const auto& r : report.printed_reading_violations) out << to_json(r, "printed_reading_violation").dump() << '\n';
  out << summary_json(spec, report).dump() << '\n';
}

}  // namespace hamspec
