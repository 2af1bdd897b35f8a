#include "entdist/cli.hpp"

#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>

#include <CLI11.hpp>

#include "entdist/classifier.hpp"
#include "entdist/io.hpp"
#include "entdist/negativity.hpp"
#include "entdist/scenarios.hpp"

namespace entdist::cli {
namespace {

using io::format_real;

std::string format_small(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

std::string format_vec(const Vec3& v) {
  return "(" + format_real(v[0]) + ", " + format_real(v[1]) + ", " + format_real(v[2]) + ")";
}

struct Args {
  std::string state;
  std::string cut;
  std::string scenario;
  std::optional<double> from;
  std::optional<double> to;
  std::size_t steps = 101;
  double tol = 1e-6;
  std::string family;
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  std::optional<std::size_t> dim;
  std::optional<std::size_t> terms;
  std::optional<double> param;
  std::string out_path;
};

// Writes to --out when given, otherwise to `out`.
template <typename Fn>
void emit(const std::string& path, std::ostream& out, Fn&& write) {
  if (path.empty()) {
    write(out);
    return;
  }
  std::ofstream file(path);
  if (!file) throw io::ParseError("cannot write " + path);
  write(file);
}

int cmd_negativity(const Args& a, std::ostream& out) {
  const auto rho = assemble(io::load_ensemble(a.state));
  out << format_real(negativity(rho, io::parse_cut(a.cut))) << '\n';
  return kOk;
}

int cmd_delta(const Args& a, std::ostream& out) {
  const auto r = delta_negativity(assemble(io::load_ensemble(a.state)));
  out << "en_before " << format_real(r.en_before) << '\n'
      << "en_after " << format_real(r.en_after) << '\n'
      << "delta " << format_real(r.delta) << '\n';
  return kOk;
}

int cmd_classify(const Args& a, std::ostream& out) {
  const auto v = classify(io::load_ensemble(a.state));
  const auto& e = v.evidence;
  out << outcome_name(v.outcome) << '\n';
  out << "  " << e.summary << '\n';
  if (e.max_commutator) out << "  max commutator      " << format_small(*e.max_commutator) << '\n';
  if (e.support_dim != 0) out << "  carrier support     " << e.support_dim << (e.compressed ? " (compressed)" : "") << '\n';
  for (std::size_t i = 0; i < e.bloch_vectors.size(); ++i) {
    out << "  bloch[" << i << "]            " << format_vec(e.bloch_vectors[i]) << '\n';
  }
  if (e.bloch_rank) out << "  bloch rank          " << *e.bloch_rank << '\n';
  if (e.rotation) {
    for (int i = 0; i < 3; ++i) {
      out << (i == 0 ? "  rotation            " : "                      ");
      out << format_vec(e.rotation->entries()[i]) << '\n';
    }
  }
  if (e.carrier_unitary) {
    const auto& w = *e.carrier_unitary;
    for (std::size_t i = 0; i < w.rows(); ++i) {
      out << (i == 0 ? "  witness unitary     " : "                      ");
      for (std::size_t j = 0; j < w.cols(); ++j) {
        out << (j == 0 ? "" : "  ") << format_real(w(i, j).real()) << (w(i, j).imag() < 0 ? "-" : "+")
            << format_real(std::abs(w(i, j).imag())) << "i";
      }
      out << '\n';
    }
  }
  if (e.transpose_residual) out << "  transpose residual  " << format_small(*e.transpose_residual) << '\n';
  if (e.pt_residual) out << "  pt residual         " << format_small(*e.pt_residual) << '\n';
  return kOk;
}

Scenario named(const Args& a) { return scenario(parse_scenario(a.scenario)); }

int cmd_sweep(const Args& a, std::ostream& out) {
  const auto s = named(a);
  const auto table = sweep(s, a.from.value_or(s.lower), a.to.value_or(s.upper), a.steps);
  emit(a.out_path, out, [&](std::ostream& os) { io::write_sweep_csv(os, table); });
  return kOk;
}

int cmd_crossing(const Args& a, std::ostream& out) {
  const auto s = named(a);
  out << format_real(find_crossing(s, a.from.value_or(s.lower), a.to.value_or(s.upper), a.tol)) << '\n';
  return kOk;
}

int cmd_fuzz(const Args& a, std::ostream& out) {
  FuzzOptions opt;
  opt.family = parse_family(a.family);
  opt.trials = a.trials;
  opt.seed = a.seed;
  opt.carrier_dim = a.dim;
  opt.terms = a.terms;
  const auto rep = fuzz_no_go(opt);
  out << "max |delta| = " << format_small(rep.max_abs_delta) << ", " << rep.violations.size() << " violations\n";
  out << "max witness residual = " << format_small(rep.max_residual) << '\n';
  out << family_name(rep.family) << ", " << rep.trials << " trials, seed " << rep.seed << '\n';
  for (const auto& v : rep.violations) {
    out << "  trial " << v.trial << ": " << v.reason << " (delta " << format_small(v.delta) << ", residual "
        << format_small(v.residual) << ")\n";
  }
  return rep.violations.empty() ? kOk : kViolations;
}

int cmd_export(const Args& a, std::ostream& out) {
  const auto s = named(a);
  const auto e = s.build(*a.param);
  emit(a.out_path, out, [&](std::ostream& os) { io::write_ensemble(os, e); });
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Entanglement distribution with separable states"};
  app.require_subcommand(1);
  Args a;

  auto* neg = app.add_subcommand("negativity", "Negativity of a state across a cut");
  neg->add_option("state,--state", a.state, "Ensemble file")->required();
  neg->add_option("cut,--cut", a.cut, "Cut such as \"A,B1|B2\"; the left side is transposed")->required();

  auto* del = app.add_subcommand("delta", "Negativity across B1|B2 before and after sending A");
  del->add_option("state,--state", a.state, "Ensemble file")->required();

  auto* cls = app.add_subcommand("classify", "Decide whether A can distribute entanglement");
  cls->add_option("state,--state", a.state, "Ensemble file with parties A and B")->required();

  auto* swp = app.add_subcommand("sweep", "Tabulate delta over a scenario parameter");
  swp->add_option("scenario,--scenario", a.scenario, "fig2 or fig3")->required();
  swp->add_option("from,--from", a.from, "Lower end (default: domain)");
  swp->add_option("to,--to", a.to, "Upper end (default: domain)");
  swp->add_option("steps,--steps", a.steps, "Grid points, at least 2");
  swp->add_option("--out", a.out_path, "CSV output path (default: stdout)");

  auto* crs = app.add_subcommand("crossing", "Bisect for the parameter where delta changes sign");
  crs->add_option("scenario,--scenario", a.scenario, "fig2 or fig3")->required();
  crs->add_option("from,--from", a.from, "Bracket end");
  crs->add_option("to,--to", a.to, "Other bracket end");
  crs->add_option("tol,--tol", a.tol, "Bracket width to stop at");

  auto* fz = app.add_subcommand("fuzz", "Random members of a no-go family; exits 1 on any violation");
  fz->add_option("family,--family", a.family, "two_pure, one_pure or coplanar_qubit")->required();
  fz->add_option("trials,--trials", a.trials, "Number of random ensembles");
  fz->add_option("seed,--seed", a.seed, "Generator seed");
  fz->add_option("--dim", a.dim, "Carrier dimension (default: random 2..4)");
  fz->add_option("--terms", a.terms, "Terms for coplanar_qubit (default: random 3..5)");

  auto* exp = app.add_subcommand("export", "Write a scenario's ensemble at one parameter as an ensemble file");
  exp->add_option("scenario,--scenario", a.scenario, "fig2 or fig3")->required();
  exp->add_option("param,--param", a.param, "Parameter value")->required();
  exp->add_option("--out", a.out_path, "Output path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*swp && a.steps < 2) throw RangeError("--steps must be at least 2");
    if (*neg) return cmd_negativity(a, out);
    if (*del) return cmd_delta(a, out);
    if (*cls) return cmd_classify(a, out);
    if (*swp) return cmd_sweep(a, out);
    if (*crs) return cmd_crossing(a, out);
    if (*fz) return cmd_fuzz(a, out);
    return cmd_export(a, out);
  } catch (const io::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const RangeError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const NoSignChange& e) {
    err << "error: no sign change: " << e.what() << '\n';
    return kNumeric;
  } catch (const NoConvergence& e) {
    err << "error: no convergence: " << e.what() << '\n';
    return kNumeric;
  } catch (const NotHermitian& e) {
    err << "error: " << e.what() << '\n';
    return kNumeric;
  } catch (const Error& e) {
    // labels, dimensions, parties, probabilities, invalid states
    err << "error: " << e.what() << '\n';
    return kSemantic;
  }
}

}  // namespace entdist::cli
