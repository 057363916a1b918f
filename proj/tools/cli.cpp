#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <ostream>
#include <sstream>

#if __has_include(<CLI/CLI.hpp>)
#include <CLI/CLI.hpp>
#else
#include <CLI11.hpp>
#endif
#include <nlohmann/json.hpp>

#include "grothsp/antisymmetric.hpp"
#include "grothsp/errors.hpp"
#include "grothsp/experiments.hpp"
#include "grothsp/grothendieck.hpp"
#include "grothsp/io.hpp"
#include "grothsp/opnorms.hpp"
#include "grothsp/symplectic.hpp"
#include "grothsp/tame.hpp"

namespace grothsp::cli {

namespace {

using nlohmann::json;

struct GlobalOptions {
  double kg = kKgUpper;
  double tol = kDefaultRankTol;
  std::string out_path;
  std::string format = "json";
};

struct Outcome {
  json report;
  int code = kOk;
  std::optional<SweepReport> sweep;
};

json matrix_json(const Matrix& a) {
  return json{{"rows", a.rows()}, {"cols", a.cols()}, {"data", to_row_major(a)}};
}

std::string scalar_csv(const json& report) {
  std::ostringstream out;
  out.precision(17);
  out << "key,value\n";
  for (const auto& [key, value] : report.items()) {
    if (value.is_array()) {
      out << key << ",\"";
      bool first = true;
      for (const auto& x : value) {
        if (!first) out << ';';
        out << x.dump();
        first = false;
      }
      out << "\"\n";
    } else if (value.is_object()) {
      out << key << ",\"" << value.dump() << "\"\n";
    } else {
      out << key << ',' << value.dump() << '\n';
    }
  }
  return out.str();
}

Outcome run_norm(const Matrix& a, const GlobalOptions& g) {
  const SpectrumReport spectrum = spectrum_report(a, g.tol);
  const InftyOneResult inf = infty_one_exact(a);
  Outcome o;
  o.report = {{"command", "norm"},
              {"abs_sum", abs_sum(a)},
              {"hs_norm", spectrum.hs_norm},
              {"spectral_norm", spectrum.spectral_norm},
              {"rank", spectrum.numerical_rank},
              {"singular_values", spectrum.singular_values},
              {"infty_one", inf.value},
              {"witness_t", inf.witness_t},
              {"witness_s", inf.witness_s},
              {"exact", inf.exact}};
  return o;
}

Outcome run_scale(const Matrix& a, const GlobalOptions& g, const ScalingSearchOptions& base) {
  ScalingSearchOptions options = base;
  options.kg = g.kg;
  const ScalingCertificate cert = scaling_search(a, options);
  Outcome o;
  o.report = {{"command", "scale"},
              {"lambda", cert.lambda.values()},
              {"scaled_norm", cert.scaled_norm},
              {"infty_one", cert.infty_one},
              {"kg_used", cert.kg_used},
              {"bound", 3.0 * cert.kg_used * cert.infty_one},
              {"certified", cert.certified},
              {"floored", cert.floored},
              {"best_restart", cert.best_restart}};
  o.code = cert.certified ? kOk : kCheckFailed;
  return o;
}

Outcome run_thm1(const Matrix& a, const GlobalOptions& g) {
  const InequalityReport r = theorem1_check(a, g.kg, 1e-9, g.tol);
  Outcome o;
  o.report = {{"command", "check-thm1"}, {"lhs", r.lhs},         {"rhs", r.rhs},
              {"ratio", r.ratio},        {"holds", r.holds},     {"rank", r.rank},
              {"infty_one", r.infty_one}, {"kg_used", r.kg_used}};
  o.code = r.holds ? kOk : kCheckFailed;
  return o;
}

Outcome run_canonical(const Matrix& b, const GlobalOptions& g) {
  AntisymOptions options;
  options.rank_tol = g.tol;
  const AntisymCanonicalForm form = antisym_canonical(b, options);
  const double residual = (reconstruct(form) - b).norm();
  Outcome o;
  o.report = {{"command", "canonical"},
              {"k", form.k()},
              {"mus", form.mus},
              {"q_rows", matrix_json(form.q_rows)},
              {"reconstruction_residual", residual}};
  return o;
}

Outcome run_tame(const VectorFamily& family, const GlobalOptions& g, double eps) {
  TameOptions options;
  options.kg = g.kg;
  options.eps = eps;
  options.rank_tol = g.tol;
  const TameResult r = tame(family, options);
  Outcome o;
  o.report = {{"command", "tame"},
              {"case", r.case_tag == TameCase::full_rank ? "full_rank" : "degenerate"},
              {"n", r.n},
              {"k", r.k},
              {"l", r.l},
              {"rank", r.rank},
              {"infty_one", r.infty_one},
              {"eps", r.eps},
              {"s_matrix", matrix_json(r.s_matrix)},
              {"achieved_sum", r.achieved_sum},
              {"limit_sum", r.limit_sum},
              {"certified_bound", r.certified_bound},
              {"empirical_bound", r.empirical_bound},
              {"certified", r.certified},
              {"symplectic_residual", r.symplectic_residual},
              {"roundoff_allowance", r.roundoff_allowance},
              {"normalized_mass", r.normalized_mass},
              {"kg_used", g.kg}};
  bool ok = r.symplectic_residual <= 1e-8;
  if (r.certified && r.rank > 0) {
    ok = ok && r.achieved_sum * r.achieved_sum <= r.certified_bound * r.certified_bound * (1.0 + 1e-6);
  }
  o.code = ok ? kOk : kCheckFailed;
  return o;
}

std::string render(const Outcome& o, const GlobalOptions& g) {
  if (o.sweep) return g.format == "csv" ? io::report_to_csv(*o.sweep) : io::report_to_json(*o.sweep) + "\n";
  return g.format == "csv" ? scalar_csv(o.report) : o.report.dump(2) + "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Grothendieck-type scalings, the sqrt(rank) inequality and symplectic taming of vector families"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  app.add_option("--kg", g.kg, "Value used for the Grothendieck constant")->capture_default_str();
  app.add_option("--tol", g.tol, "Relative rank tolerance")->capture_default_str();
  app.add_option("--out", g.out_path, "Also write the report to this file");
  app.add_option("--format", g.format, "Report format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();

  std::string input;
  auto* norm = app.add_subcommand("norm", "Norms, rank and the exact inf->1 norm with witnesses");
  norm->add_option("matrix", input, "Matrix file (.json or .csv)")->required();

  ScalingSearchOptions search;
  auto* scale = app.add_subcommand("scale", "Search a certified diagonal scaling");
  scale->add_option("matrix", input, "Matrix file")->required();
  scale->add_option("--iters", search.iters)->capture_default_str();
  scale->add_option("--restarts", search.restarts)->capture_default_str();
  scale->add_option("--seed", search.seed)->capture_default_str();

  auto* thm1 = app.add_subcommand("check-thm1", "Check sum|a_ij| <= 3 kg sqrt(rank) ||A||_{inf->1}");
  thm1->add_option("matrix", input, "Matrix file")->required();

  auto* canonical = app.add_subcommand("canonical", "Canonical form of an antisymmetric matrix");
  canonical->add_option("matrix", input, "Matrix file")->required();

  double eps = 1e-6;
  auto* tame_cmd = app.add_subcommand("tame", "Symplectic map reducing the sum of norms of a vector family");
  tame_cmd->add_option("vectors", input, "Vector family file (columns are the vectors)")->required();
  tame_cmd->add_option("--eps", eps)->capture_default_str();

  std::string kind;
  std::vector<std::size_t> ns{1, 2, 3};
  std::vector<std::size_t> ms{1, 2, 4, 8, 16};
  std::size_t trials = 50;
  std::size_t count = 10;
  std::size_t n_pad = 0;
  std::uint64_t seed = 0;
  auto* sweep = app.add_subcommand("sweep", "Reproducible sweeps: sharpness | blt | tame");
  sweep->add_option("kind", kind)->required()->check(CLI::IsMember({"sharpness", "blt", "tame"}));
  sweep->add_option("--ns", ns, "Half dimensions n")->delimiter(',');
  sweep->add_option("--ms", ms, "Fourier block sizes m (sharpness)")->delimiter(',');
  sweep->add_option("--trials", trials)->capture_default_str();
  sweep->add_option("--count", count, "Vectors per family")->capture_default_str();
  sweep->add_option("--npad", n_pad, "Padded matrix size (sharpness)")->capture_default_str();
  sweep->add_option("--seed", seed)->capture_default_str();
  sweep->add_option("--eps", eps)->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::Success&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kMalformedInput;
  }

  try {
    Outcome o;
    if (norm->parsed()) {
      o = run_norm(io::read_matrix_file(input), g);
    } else if (scale->parsed()) {
      o = run_scale(io::read_matrix_file(input), g, search);
    } else if (thm1->parsed()) {
      o = run_thm1(io::read_matrix_file(input), g);
    } else if (canonical->parsed()) {
      o = run_canonical(io::read_matrix_file(input), g);
    } else if (tame_cmd->parsed()) {
      o = run_tame(io::read_family_file(input), g, eps);
    } else {
      if (kind == "sharpness") {
        o.sweep = sharpness_sweep(ms, n_pad, g.kg);
      } else if (kind == "blt") {
        o.sweep = blt_sweep(ns, count, trials, seed, g.kg);
      } else {
        o.sweep = tame_bench(ns, count, trials, seed, eps, g.kg);
      }
      o.code = o.sweep->all_hold ? kOk : kCheckFailed;
    }
    const std::string text = render(o, g);
    out << text;
    if (!g.out_path.empty()) io::write_text_file(g.out_path, text);
    return o.code;
  } catch (const CapacityError& e) {
    err << "capacity exceeded: " << e.what() << '\n';
    return kCapacityExceeded;
  } catch (const InputError& e) {
    err << "malformed input: " << e.what() << '\n';
    return kMalformedInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kCheckFailed;
  }
}

}  // namespace grothsp::cli
