#include "entdist/scenarios.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <utility>

#include "entdist/errors.hpp"
#include "entdist/tolerances.hpp"

namespace entdist {

namespace {

const FactorShape& carrier_qubit() {
  static const FactorShape s = FactorShape::single(2, "A");
  return s;
}

const FactorShape& carrier_qutrit() {
  static const FactorShape s = FactorShape::single(3, "A");
  return s;
}

const FactorShape& two_qubits() {
  static const FactorShape s({2, 2}, {"B1", "B2"});
  return s;
}

DensityMatrix projector(const FactorShape& shape, std::vector<Complex> amps) {
  return pure_to_density(PureState::normalized(shape, std::move(amps)));
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

}  // namespace

std::string scenario_name(ScenarioId id) {
  switch (id) {
    case ScenarioId::kEq3Custom:
      return "eq3_custom";
    case ScenarioId::kFig2:
      return "fig2";
    case ScenarioId::kFig3:
      return "fig3";
  }
  return "?";
}

ScenarioId parse_scenario(const std::string& name) {
  if (name == "eq3_custom") return ScenarioId::kEq3Custom;
  if (name == "fig2") return ScenarioId::kFig2;
  if (name == "fig3") return ScenarioId::kFig3;
  throw RangeError("unknown scenario '" + name + "' (expected fig2, fig3 or eq3_custom)");
}

SeparableEnsemble build_eq3(const PureState& psi1, const PureState& psi2, const PureState& phi1,
                            const PureState& phi2, double p) {
  if (!(p > 0.0 && p < 1.0)) throw RangeError("p must lie in (0, 1), got " + fmt(p));
  if (!(psi1.shape() == psi2.shape()) || !(phi1.shape() == phi2.shape())) {
    throw DimensionError("both terms need the same carrier and B shapes");
  }
  std::vector<SeparableEnsemble::Party> parties{{"A", psi1.shape()}, {"B", phi1.shape()}};
  std::vector<SeparableEnsemble::Term> terms;
  terms.push_back({p, {pure_to_density(psi1), pure_to_density(phi1)}});
  terms.push_back({1.0 - p, {pure_to_density(psi2), pure_to_density(phi2)}});
  return {std::move(parties), std::move(terms)};
}

SeparableEnsemble build_fig2(double p) {
  if (!(p > 0.0 && p < 1.0)) throw RangeError("p must lie in (0, 1), got " + fmt(p));
  const Complex i(0.0, 1.0);

  // rho1 = 1/4 |0><0| + 3/4 |1><1|
  ComplexMatrix rho1(3, 3);
  rho1(0, 0) = 0.25;
  rho1(1, 1) = 0.75;
  // rho2 = (|a><a| + |b><b|) / 2, a = (|0> + |1> + |2>)/sqrt3, b = (|0> + i|1>)/sqrt2
  const double s3 = 1.0 / std::sqrt(3.0);
  const double s2 = 1.0 / std::sqrt(2.0);
  const std::vector<Complex> a{s3, s3, s3};
  const std::vector<Complex> b{s2, i * s2, 0.0};
  ComplexMatrix rho2 = ComplexMatrix::outer(a, a) + ComplexMatrix::outer(b, b);
  rho2 *= Complex(0.5);

  // phi1 = (|00> + |01> + i|11>)/sqrt3, phi2 = (sqrt8 |00> + |11>)/3
  auto phi1 = projector(two_qubits(), {1.0, 1.0, 0.0, i});
  auto phi2 = projector(two_qubits(), {std::sqrt(8.0) / 3.0, 0.0, 0.0, 1.0 / 3.0});

  std::vector<SeparableEnsemble::Party> parties{{"A", carrier_qutrit()}, {"B", two_qubits()}};
  std::vector<SeparableEnsemble::Term> terms;
  terms.push_back({p, {DensityMatrix(carrier_qutrit(), rho1), std::move(phi1)}});
  terms.push_back({1.0 - p, {DensityMatrix(carrier_qutrit(), rho2), std::move(phi2)}});
  return {std::move(parties), std::move(terms)};
}

SeparableEnsemble build_fig3(double alpha) {
  constexpr double kHalfPi = std::numbers::pi / 2.0;
  if (!(alpha >= 0.0 && alpha <= kHalfPi + 1e-12)) throw RangeError("alpha must lie in [0, pi/2], got " + fmt(alpha));
  const Complex i(0.0, 1.0);
  std::vector<SeparableEnsemble::Party> parties{{"A", carrier_qubit()}, {"B", two_qubits()}};
  std::vector<SeparableEnsemble::Term> terms;
  const double w = 1.0 / 3.0;
  // psi: (|0>+|1>)/sqrt2, (|0>+i|1>)/sqrt2, |0>
  // phi: |01>, (|00> + i|11>)/sqrt2, cos(alpha)|00> + sin(alpha)|11>
  terms.push_back({w, {projector(carrier_qubit(), {1.0, 1.0}), projector(two_qubits(), {0.0, 1.0, 0.0, 0.0})}});
  terms.push_back({w, {projector(carrier_qubit(), {1.0, i}), projector(two_qubits(), {1.0, 0.0, 0.0, i})}});
  terms.push_back({1.0 - 2.0 * w,
                   {projector(carrier_qubit(), {1.0, 0.0}),
                    projector(two_qubits(), {std::cos(alpha), 0.0, 0.0, std::sin(alpha)})}});
  return {std::move(parties), std::move(terms)};
}

Scenario fig2_scenario() { return {"fig2", "p", 0.0, 1.0, true, true, build_fig2}; }

Scenario fig3_scenario() { return {"fig3", "alpha", 0.0, std::numbers::pi / 2.0, false, false, build_fig3}; }

Scenario eq3_scenario(PureState psi1, PureState psi2, PureState phi1, PureState phi2) {
  return {"eq3_custom", "p", 0.0, 1.0, true, true,
          [=](double p) { return build_eq3(psi1, psi2, phi1, phi2, p); }};
}

Scenario scenario(ScenarioId id) {
  switch (id) {
    case ScenarioId::kFig2:
      return fig2_scenario();
    case ScenarioId::kFig3:
      return fig3_scenario();
    case ScenarioId::kEq3Custom:
      break;
  }
  throw RangeError("eq3_custom needs explicit states; use eq3_scenario()");
}

namespace {

double clip(const Scenario& s, double x) {
  if (s.open_lower && x <= s.lower && x >= s.lower - 1e-12) return s.lower + Tolerances::kEndpointClip;
  if (s.open_upper && x >= s.upper && x <= s.upper + 1e-12) return s.upper - Tolerances::kEndpointClip;
  return x;
}

}  // namespace

DeltaResult evaluate(const Scenario& s, double x) { return delta_negativity(assemble(s.build(x))); }

SweepTable sweep(const Scenario& s, double lo, double hi, std::size_t steps) {
  if (!(lo < hi)) throw RangeError("sweep needs lo < hi");
  if (steps < 2) throw RangeError("sweep needs at least 2 steps");
  SweepTable table{s.param_name, {}};
  table.rows.reserve(steps);
  for (std::size_t k = 0; k < steps; ++k) {
    const double raw = k + 1 == steps ? hi : lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(steps - 1);
    const double x = clip(s, raw);
    const auto d = evaluate(s, x);
    table.rows.push_back({x, d.en_before, d.en_after, d.delta});
  }
  return table;
}

SweepTable sweep(ScenarioId id, double lo, double hi, std::size_t steps) { return sweep(scenario(id), lo, hi, steps); }

double find_crossing(const Scenario& s, double lo, double hi, double tol) {
  if (!(tol > 0.0)) throw RangeError("tolerance must be positive");
  if (lo > hi) std::swap(lo, hi);
  if (!(lo < hi)) throw NoSignChange("empty bracket");
  lo = clip(s, lo);
  hi = clip(s, hi);
  double f_lo = evaluate(s, lo).delta;
  const double f_hi = evaluate(s, hi).delta;
  if (f_lo == 0.0) return lo;
  if (f_hi == 0.0) return hi;
  if ((f_lo > 0) == (f_hi > 0)) {
    throw NoSignChange("delta has the same sign at " + fmt(lo) + " (" + fmt(f_lo) + ") and " + fmt(hi) + " (" +
                       fmt(f_hi) + ")");
  }
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    const double f_mid = evaluate(s, mid).delta;
    if (f_mid == 0.0) return mid;
    if ((f_mid > 0) == (f_lo > 0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double find_crossing(ScenarioId id, double lo, double hi, double tol) {
  return find_crossing(scenario(id), lo, hi, tol);
}

}  // namespace entdist
