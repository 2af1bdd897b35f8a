#include <cmath>
#include <random>

#include "entdist/classifier.hpp"
#include "entdist/errors.hpp"
#include "entdist/scenarios.hpp"
#include "entdist/tolerances.hpp"

namespace entdist {

std::string family_name(Family f) {
  switch (f) {
    case Family::kTwoPure:
      return "two_pure";
    case Family::kOnePure:
      return "one_pure";
    case Family::kCoplanarQubit:
      return "coplanar_qubit";
  }
  return "?";
}

Family parse_family(const std::string& name) {
  if (name == "two_pure") return Family::kTwoPure;
  if (name == "one_pure") return Family::kOnePure;
  if (name == "coplanar_qubit") return Family::kCoplanarQubit;
  throw RangeError("unknown family '" + name + "' (expected two_pure, one_pure or coplanar_qubit)");
}

namespace {

const FactorShape kBShape({2, 2}, {"B1", "B2"});

struct TrialResult {
  double delta = 0.0;
  double residual = 0.0;
  std::string failure;  // empty when a witness was produced
};

std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

double open_unit(Rng& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double x = 0.0;
  while (x <= 0.0) x = u(rng);
  return x;
}

// Flat Dirichlet weights.
std::vector<double> random_weights(std::size_t n, Rng& rng) {
  std::vector<double> w(n);
  double total = 0.0;
  for (auto& x : w) {
    x = -std::log(open_unit(rng));
    total += x;
  }
  for (auto& x : w) x /= total;
  return w;
}

Vec3 random_direction(Rng& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Vec3 v{g(rng), g(rng), g(rng)};
  const double n = norm(v);
  for (auto& x : v) x /= n;
  return v;
}

SeparableEnsemble make_ensemble(const FactorShape& carrier, std::vector<double> probs,
                                std::vector<DensityMatrix> a, std::vector<DensityMatrix> b) {
  std::vector<SeparableEnsemble::Term> terms;
  for (std::size_t k = 0; k < probs.size(); ++k) terms.push_back({probs[k], {a[k], b[k]}});
  return {{{"A", carrier}, {"B", kBShape}}, std::move(terms)};
}

TrialResult two_pure_trial(Rng& rng, std::size_t d) {
  const auto carrier = FactorShape::single(d, "A");
  const auto psi1 = random_pure(carrier, rng);
  const auto psi2 = random_pure(carrier, rng);
  const auto phi1 = random_pure(kBShape, rng);
  const auto phi2 = random_pure(kBShape, rng);
  const auto ensemble = build_eq3(psi1, psi2, phi1, phi2, open_unit(rng));
  const auto rho = assemble(ensemble);

  TrialResult out;
  out.delta = delta_negativity(rho).delta;
  if (d == 2) {
    const auto w = bloch_rotation_witness(bloch_from_qubit(pure_to_density(psi1)),
                                          bloch_from_qubit(pure_to_density(psi2)));
    out.residual = verify_pt_unitary_equivalence(rho, w.unitary);
  } else {
    const auto verdict = classify(ensemble);
    if (verdict.outcome != Outcome::kNotUsefulTwoPureProducts || !verdict.evidence.pt_residual) {
      out.failure = "classifier returned " + outcome_name(verdict.outcome);
    } else {
      out.residual = *verdict.evidence.pt_residual;
    }
  }
  return out;
}

TrialResult one_pure_trial(Rng& rng, std::size_t d) {
  const auto carrier = FactorShape::single(d, "A");
  const auto psi = random_pure(carrier, rng);
  const auto lambda = random_weights(d, rng);
  std::vector<Complex> diag(lambda.begin(), lambda.end());
  const DensityMatrix tau(carrier, ComplexMatrix::diagonal(diag));
  const auto phi1 = pure_to_density(random_pure(kBShape, rng));
  const auto phi2 = pure_to_density(random_pure(kBShape, rng));
  const double p = open_unit(rng);

  // Computational-basis instance: the phase unitary is the witness.
  const auto rho = assemble(make_ensemble(carrier, {p, 1.0 - p}, {pure_to_density(psi), tau}, {phi1, phi2}));
  TrialResult out;
  out.delta = delta_negativity(rho).delta;
  out.residual = verify_pt_unitary_equivalence(rho, phase_witness(psi));

  // Same instance in a random carrier frame, where tau is no longer diagonal.
  const ComplexMatrix u = random_unitary(d, rng);
  const ComplexMatrix psi_rot = u * ComplexMatrix::column(psi.amplitudes());
  const auto e = psi_rot.entries();
  const auto psi_r = PureState::normalized(carrier, std::vector<Complex>(e.begin(), e.end()));
  const DensityMatrix tau_r(carrier, (u * tau.matrix() * u.adjoint()).hermitian_part());
  const auto rho_r = assemble(make_ensemble(carrier, {p, 1.0 - p}, {pure_to_density(psi_r), tau_r}, {phi1, phi2}));
  const double delta_r = delta_negativity(rho_r).delta;
  if (std::abs(delta_r) > std::abs(out.delta)) out.delta = delta_r;
  return out;
}

TrialResult coplanar_trial(Rng& rng, std::size_t n) {
  // Orthonormal pair spanning a random plane through the origin.
  const Vec3 u = random_direction(rng);
  Vec3 v = random_direction(rng);
  const double uv = dot(u, v);
  for (int i = 0; i < 3; ++i) v[i] -= uv * u[i];
  const double vn = norm(v);
  for (auto& x : v) x /= vn;

  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::acos(-1.0));
  std::vector<DensityMatrix> a;
  std::vector<DensityMatrix> b;
  std::vector<BlochVector> bloch;
  for (std::size_t k = 0; k < n; ++k) {
    const double radius = std::sqrt(open_unit(rng));
    const double t = angle(rng);
    const double cu = radius * std::cos(t);
    const double cv = radius * std::sin(t);
    const BlochVector r({cu * u[0] + cv * v[0], cu * u[1] + cv * v[1], cu * u[2] + cv * v[2]});
    bloch.push_back(r);
    a.push_back(qubit_from_bloch(r));
    b.push_back(random_density(kBShape, pick(rng, 1, 4), rng));
  }
  const auto rho = assemble(make_ensemble(FactorShape::single(2, "A"), random_weights(n, rng), a, b));

  TrialResult out;
  out.delta = delta_negativity(rho).delta;
  const auto rot = reflection_equivalence(bloch);
  if (!rot || !rot->is_valid()) {
    out.failure = "no rotation equivalent to the xz-reflection";
  } else {
    out.residual = verify_pt_unitary_equivalence(rho, su2_lift(*rot));
  }
  return out;
}

}  // namespace

FuzzReport fuzz_no_go(const FuzzOptions& options) {
  if (options.trials < 1) throw RangeError("fuzzing needs at least one trial");
  if (options.carrier_dim && *options.carrier_dim < 2) throw RangeError("carrier dimension must be at least 2");
  if (options.terms && *options.terms < 1) throw RangeError("term count must be positive");

  FuzzReport report;
  report.family = options.family;
  report.trials = options.trials;
  report.seed = options.seed;
  for (std::size_t trial = 0; trial < options.trials; ++trial) {
    std::seed_seq seq{static_cast<std::uint32_t>(options.seed), static_cast<std::uint32_t>(options.seed >> 32),
                      static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
    Rng rng(seq);
    TrialResult r;
    switch (options.family) {
      case Family::kTwoPure:
        r = two_pure_trial(rng, options.carrier_dim.value_or(pick(rng, 2, 4)));
        break;
      case Family::kOnePure:
        r = one_pure_trial(rng, options.carrier_dim.value_or(pick(rng, 2, 4)));
        break;
      case Family::kCoplanarQubit:
        r = coplanar_trial(rng, options.terms.value_or(pick(rng, 3, 5)));
        break;
    }
    report.max_abs_delta = std::max(report.max_abs_delta, std::abs(r.delta));
    report.max_residual = std::max(report.max_residual, r.residual);
    std::string reason = r.failure;
    if (reason.empty() && std::abs(r.delta) > Tolerances::kNoGoDelta) reason = "|delta| above bound";
    if (reason.empty() && r.residual > Tolerances::kWitnessResidual) reason = "witness residual above bound";
    if (!reason.empty()) report.violations.push_back({trial, r.delta, r.residual, reason});
  }
  return report;
}

}  // namespace entdist
