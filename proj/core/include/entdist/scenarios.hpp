#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "entdist/negativity.hpp"
#include "entdist/state.hpp"

namespace entdist {

enum class ScenarioId { kEq3Custom, kFig2, kFig3 };

std::string scenario_name(ScenarioId id);
// "eq3_custom", "fig2" or "fig3"; throws RangeError otherwise.
ScenarioId parse_scenario(const std::string& name);

/// A one-parameter family of separable ensembles over A | B1 B2.
struct Scenario {
  std::string name;
  std::string param_name;
  double lower = 0.0;  // admissible parameter domain
  double upper = 1.0;
  bool open_lower = false;
  bool open_upper = false;
  std::function<SeparableEnsemble(double)> build;
};

/// p |psi1><psi1| (x) |phi1><phi1| + (1 - p) |psi2><psi2| (x) |phi2><phi2|.
/// Parties "A" (shape of psi) and "B" (shape of phi). Throws RangeError unless 0 < p < 1.
SeparableEnsemble build_eq3(const PureState& psi1, const PureState& psi2, const PureState& phi1,
                            const PureState& phi2, double p);

/// Qutrit carrier with two mixed states; delta changes sign near p = 0.22.
SeparableEnsemble build_fig2(double p);

/// Three equal-weight pure products with a qubit carrier; 0 <= alpha <= pi/2.
SeparableEnsemble build_fig3(double alpha);

Scenario fig2_scenario();
Scenario fig3_scenario();
// Sweeps p in build_eq3 with the four pure factors held fixed.
Scenario eq3_scenario(PureState psi1, PureState psi2, PureState phi1, PureState phi2);
// fig2 / fig3; kEq3Custom needs explicit states and throws RangeError here.
Scenario scenario(ScenarioId id);

struct SweepRow {
  double param = 0.0;
  double en_before = 0.0;
  double en_after = 0.0;
  double delta = 0.0;
};

struct SweepTable {
  std::string param_name;
  std::vector<SweepRow> rows;
};

/// delta_negativity(assemble(s.build(x))) at x.
DeltaResult evaluate(const Scenario& s, double x);

/// `steps` uniformly spaced points from lo to hi inclusive. Endpoints that sit
/// on an open boundary of the domain are moved inside by Tolerances::kEndpointClip.
/// Throws RangeError for lo >= hi or steps < 2.
SweepTable sweep(const Scenario& s, double lo, double hi, std::size_t steps);
SweepTable sweep(ScenarioId id, double lo, double hi, std::size_t steps);

/// Bisection on x -> delta until the bracket is narrower than tol; returns
/// the bracket midpoint. The ends may come in either order and delta may
/// rise or fall across them. Throws NoSignChange when delta(lo) and delta(hi)
/// share a sign or the bracket is empty.
double find_crossing(const Scenario& s, double lo, double hi, double tol);
double find_crossing(ScenarioId id, double lo, double hi, double tol);

// ------------------------------------------------------------ no-go fuzzing

enum class Family { kTwoPure, kOnePure, kCoplanarQubit };

std::string family_name(Family f);
// "two_pure", "one_pure" or "coplanar_qubit"; throws RangeError otherwise.
Family parse_family(const std::string& name);

struct FuzzOptions {
  Family family = Family::kTwoPure;
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  // Carrier dimension; random in {2, 3, 4} when unset. Ignored for coplanar_qubit.
  std::optional<std::size_t> carrier_dim;
  // Number of product terms for coplanar_qubit; random in {3, 4, 5} when unset.
  std::optional<std::size_t> terms;
};

struct FuzzViolation {
  std::size_t trial = 0;
  double delta = 0.0;
  double residual = 0.0;
  std::string reason;
};

struct FuzzReport {
  Family family = Family::kTwoPure;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  double max_abs_delta = 0.0;
  // Largest verify_pt_unitary_equivalence residual of the family's witness unitary.
  double max_residual = 0.0;
  std::vector<FuzzViolation> violations;
};

/// Samples random members of a family covered by a no-go theorem and checks
/// |delta| <= Tolerances::kNoGoDelta and the witness residual <=
/// Tolerances::kWitnessResidual. Trial k uses its own generator seeded from
/// (seed, k), so reports do not depend on evaluation order.
FuzzReport fuzz_no_go(const FuzzOptions& options);

}  // namespace entdist
