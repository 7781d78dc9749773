#pragma once

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hamspec/certifier.hpp"
#include "hamspec/graph6.hpp"
#include "hamspec/oracles.hpp"
#include "hamspec/spectral.hpp"
#include "hamspec/sweep.hpp"

namespace hamspec::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCounterexample = 1;
inline constexpr int kExitUsage = 2;

namespace detail {

inline std::string format_double(double v) {
  std::ostringstream s;
  s << std::setprecision(10) << v;
  return s.str();
}

inline std::string vertex_list(VertexSet s) {
  std::string out = "{";
  for (VertexSet t = s; t; t &= t - 1) {
    if (out.size() > 1) out += ",";
    out += std::to_string(lowest(t));
  }
  return out + "}";
}

/// "-" reads graph6 lines from `in`; anything else is one graph6 string.
inline std::vector<Graph6Record> load_graphs(const std::string& arg, std::istream& in) {
  if (arg == "-") return read_graph6(in);
  std::vector<Graph6Record> one;
  one.push_back({1, arg, parse_graph6(arg)});
  return one;
}

inline std::vector<SpectralParams> parse_grid(const std::string& alphas, const std::string& betas) {
  if (alphas.empty() && betas.empty()) return default_grid();
  if (alphas.empty() || betas.empty()) throw Error(ErrorKind::InvalidArgument, "--alphas and --betas go together");
  const auto a = split(alphas, ',');
  const auto b = split(betas, ',');
  if (a.size() != b.size() && a.size() != 1 && b.size() != 1)
    throw Error(ErrorKind::InvalidArgument, "--alphas and --betas must have equal length (or one of them length 1)");
  std::vector<SpectralParams> grid;
  const std::size_t count = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < count; ++i)
    grid.push_back(SpectralParams::parse(a[a.size() == 1 ? 0 : i], b[b.size() == 1 ? 0 : i]));
  return grid;
}

inline void print_verdict(std::ostream& out, const Verdict& v) {
  out << "  " << v.condition() << " k=" << v.k << " holds=" << (v.holds ? "yes" : "no") << " outcome=" << to_string(v.outcome);
  if (v.outcome == Outcome::PreconditionFailed) {
    out << " reason=\"" << v.reason << "\"\n";
    return;
  }
  out << " lambda=" << format_double(v.lambda) << " bound=" << format_double(v.bound) << " margin=" << format_double(v.margin);
  if (v.printed_claim_holds) out << " hamiltonian_reading=" << (*v.printed_claim_holds ? "held" : "violated");
  out << '\n';
}

struct CertifyOptions {
  std::string graph;
  std::string alpha = "1";
  std::string beta = "1";
  std::optional<std::size_t> k;
  std::string theorem = "all";
};

inline int run_certify(const CertifyOptions& o, std::istream& in, std::ostream& out) {
  const SpectralParams p = SpectralParams::parse(o.alpha, o.beta);
  if (!p.certifiable()) throw Error(ErrorKind::InvalidArgument, "certify needs alpha >= beta > 0, got " + p.label());
  if (o.theorem != "1" && o.theorem != "2" && o.theorem != "all")
    throw Error(ErrorKind::InvalidArgument, "--theorem must be 1, 2 or all");
  for (const auto& rec : load_graphs(o.graph, in)) {
    const Graph& g = rec.graph;
    const GraphFacts f = analyze(g);
    const SpectrumSummary s = spectrum(g, p);
    out << "graph " << rec.text << " n=" << g.order() << " e=" << f.degrees.e << " kappa=" << f.kappa
        << " params=" << p.label() << '\n';

    std::vector<Verdict> verdicts;
    if (o.k) {
      for (int part : {1, 2}) {
        if (o.theorem != "2") verdicts.push_back(theorem1_condition(g, f, p, s, *o.k, part));
        if (o.theorem != "1") verdicts.push_back(theorem2_condition(g, f, p, s, *o.k, part));
      }
    } else {
      for (auto& v : certify_all(g, f, p, s))
        if (o.theorem == "all" || std::to_string(v.theorem) == o.theorem) verdicts.push_back(std::move(v));
      if (verdicts.empty())
        verdicts.push_back(o.theorem == "2" ? theorem2_condition(g, f, p, s, 1, 1) : theorem1_condition(g, f, p, s, 2, 1));
    }
    for (const auto& v : verdicts) print_verdict(out, v);
    const Verdict& best = strongest(verdicts);
    out << "  best " << best.condition() << " k=" << best.k << " outcome=" << to_string(best.outcome) << '\n';
  }
  return kExitOk;
}

inline int run_spectrum(const std::string& graph, const std::string& alpha, const std::string& beta, std::istream& in,
                        std::ostream& out) {
  const SpectralParams p = SpectralParams::parse(alpha, beta);
  for (const auto& rec : load_graphs(graph, in)) {
    const SpectrumSummary s = spectrum(rec.graph, p);
    out << "graph " << rec.text << " params=" << p.label() << '\n';
    out << "eigenvalues";
    for (double v : s.eigenvalues) out << ' ' << format_double(v);
    out << "\nlambda1 " << format_double(s.lambda1) << "\nlambdaN " << format_double(s.lambdaN) << "\nresidual "
        << s.residual << '\n';
    if (p.certifiable()) {
      const RayleighTriple t = rayleigh_sandwich(rec.graph, p, s);
      out << "rayleigh lambda1_sq=" << format_double(t.lambda1_sq) << " mean=" << to_string(t.mean_term) << " ("
          << format_double(to_double(t.mean_term)) << ") lambdaN_sq=" << format_double(t.lambdaN_sq)
          << " sandwiched=" << (t.sandwiched() ? "yes" : "no") << '\n';
    }
  }
  return kExitOk;
}

inline int run_invariants(const std::string& graph, std::istream& in, std::ostream& out) {
  for (const auto& rec : load_graphs(graph, in)) {
    const InvariantBundle b = compute_invariants(rec.graph);
    out << "graph " << rec.text << '\n'
        << "n " << b.n << "\ne " << b.e << "\ndelta " << b.delta << "\nDelta " << b.Delta << "\ngamma " << b.gamma
        << "\ngamma_witness " << vertex_list(b.gamma_witness) << "\nkappa " << b.kappa
        << "\nhamiltonian " << (b.hamiltonian ? "true" : "false") << "\ntraceable " << (b.traceable ? "true" : "false")
        << '\n';
  }
  return kExitOk;
}

struct SweepOptions {
  std::string source;
  std::string alphas;
  std::string betas;
  std::string checks;
  std::string out = "-";
  std::optional<std::size_t> jobs;
  std::string verbosity = "summary";
  std::size_t qf_vectors = 4;
  Tolerances tol;
};

inline int run_sweep(const SweepOptions& o, std::ostream& out, std::ostream& err) {
  SweepSpec spec;
  spec.source = Source::parse(o.source);
  spec.grid = parse_grid(o.alphas, o.betas);
  if (!o.checks.empty()) {
    spec.checks.clear();
    for (auto name : split(o.checks, ',')) spec.checks.push_back(parse_check(name));
  }
  spec.jobs = o.jobs.value_or(default_jobs());
  if (o.verbosity != "summary" && o.verbosity != "full")
    throw Error(ErrorKind::InvalidArgument, "--verbosity must be summary or full");
  spec.full_events = o.verbosity == "full";
  spec.quadratic_form_vectors = o.qf_vectors;
  spec.tol = o.tol;

  const SweepReport report = sweep(spec);
  if (o.out == "-") {
    write_report(out, spec, report);
  } else {
    std::ofstream file(o.out, std::ios::binary);
    if (!file) throw Error(ErrorKind::Io, "cannot write '" + o.out + "'");
    write_report(file, spec, report);
  }
  err << "sweep " << spec.source.describe() << ": " << report.graphs << " graphs, " << report.counterexample_count()
      << " counterexamples, " << report.budget_skipped.size() << " budget-skipped, " << std::fixed
      << std::setprecision(2) << report.wall_seconds << " s\n";
  return report.counterexample_count() == 0 ? kExitOk : kExitCounterexample;
}

}  // namespace detail

/// Entry point shared by the executable and the tests. Exit codes: 0 success,
/// 1 sweep counterexamples, 2 usage or input errors. Diagnostics go to `err`.
inline int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectral Hamiltonicity certificates over M(G; alpha, beta) = alpha*D + beta*A", "hamspec"};
  app.require_subcommand(1);

  detail::CertifyOptions certify_opts;
  auto* certify = app.add_subcommand("certify", "Evaluate the spectral sufficient conditions");
  certify->add_option("--graph", certify_opts.graph, "graph6 string, or - for stdin")->required();
  certify->add_option("--alpha", certify_opts.alpha, "alpha as p/q or decimal");
  certify->add_option("--beta", certify_opts.beta, "beta as p/q or decimal");
  certify->add_option("--k", certify_opts.k, "connectivity parameter (default: scan all admissible)");
  certify->add_option("--theorem", certify_opts.theorem, "1, 2 or all");

  std::string spectrum_graph, spectrum_alpha = "1", spectrum_beta = "1";
  auto* spectrum_cmd = app.add_subcommand("spectrum", "Print the spectrum and the Rayleigh triple");
  spectrum_cmd->add_option("--graph", spectrum_graph, "graph6 string, or - for stdin")->required();
  spectrum_cmd->add_option("--alpha", spectrum_alpha, "alpha as p/q or decimal");
  spectrum_cmd->add_option("--beta", spectrum_beta, "beta as p/q or decimal");

  std::string invariants_graph;
  auto* invariants = app.add_subcommand("invariants", "Print n, e, degrees, independence number, connectivity, Hamiltonicity");
  invariants->add_option("--graph", invariants_graph, "graph6 string, or - for stdin")->required();

  detail::SweepOptions sweep_opts;
  auto* sweep_cmd = app.add_subcommand("sweep", "Run verification checks over a graph corpus");
  sweep_cmd->add_option("--source", sweep_opts.source, "labeled:N | dedup:N | file:PATH | random:N,P,COUNT,SEED")->required();
  sweep_cmd->add_option("--alphas", sweep_opts.alphas, "comma-separated alphas, paired with --betas");
  sweep_cmd->add_option("--betas", sweep_opts.betas, "comma-separated betas");
  sweep_cmd->add_option("--checks", sweep_opts.checks, "theorem1,theorem2,corollary,rayleigh,psd,lemmas,rowsum");
  sweep_cmd->add_option("--out", sweep_opts.out, "report path (JSON Lines), - for stdout");
  sweep_cmd->add_option("--jobs", sweep_opts.jobs, "worker threads (default: HAMSPEC_JOBS or 1)");
  sweep_cmd->add_option("--verbosity", sweep_opts.verbosity, "summary or full");
  sweep_cmd->add_option("--qf-vectors", sweep_opts.qf_vectors, "random vectors per graph for the quadratic-form check");
  sweep_cmd->add_option("--tol-condition", sweep_opts.tol.condition, "relative slack on theorem conditions");
  sweep_cmd->add_option("--tol-corollary", sweep_opts.tol.corollary, "relative slack on corollary bounds");
  sweep_cmd->add_option("--tol-rayleigh", sweep_opts.tol.rayleigh, "relative slack on the Rayleigh sandwich");
  sweep_cmd->add_option("--tol-psd", sweep_opts.tol.psd, "relative slack on lambda_n >= 0");
  sweep_cmd->add_option("--tol-qf", sweep_opts.tol.quadratic_form, "relative slack on the quadratic-form identity");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*certify) return detail::run_certify(certify_opts, in, out);
    if (*spectrum_cmd) return detail::run_spectrum(spectrum_graph, spectrum_alpha, spectrum_beta, in, out);
    if (*invariants) return detail::run_invariants(invariants_graph, in, out);
    if (*sweep_cmd) return detail::run_sweep(sweep_opts, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace hamspec::cli
