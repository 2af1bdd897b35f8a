#pragma once

#include <optional>
#include <string>
#include <vector>

#include "entdist/geometry.hpp"
#include "entdist/matrix.hpp"
#include "entdist/state.hpp"
#include "entdist/tolerances.hpp"

namespace entdist {

// Usefulness of a separable ensemble A:B for entanglement distribution by
// sending A. The NotUseful outcomes are proofs; Undetermined means none of
// the known obstructions applies.
enum class Outcome {
  kNotUsefulTwoPureProducts,
  kNotUsefulOnePureFactorN2,
  kNotUsefulQubitCoplanar,
  kNotUsefulClassicalQuantum,
  kUndeterminedPossiblyUseful,
};

// "NotUseful_TwoPureProducts", ... as printed by the CLI.
std::string outcome_name(Outcome o);

struct Evidence {
  std::string summary;
  // Classical-quantum test.
  std::optional<double> max_commutator;
  // Carrier Bloch geometry (possibly in a compressed two-dimensional frame).
  std::vector<Vec3> bloch_vectors;
  std::optional<int> bloch_rank;
  std::optional<Rotation3> rotation;
  std::size_t support_dim = 0;
  bool compressed = false;
  // Unitary W on A with W rho_i W^dagger = rho_i^T for every carrier factor,
  // and the largest Frobenius error of that identity.
  std::optional<ComplexMatrix> carrier_unitary;
  std::optional<double> transpose_residual;
  // verify_pt_unitary_equivalence for the B1|B2 split, when B has those factors.
  std::optional<double> pt_residual;
};

struct Verdict {
  Outcome outcome = Outcome::kUndeterminedPossiblyUseful;
  Evidence evidence;

  bool not_useful() const { return outcome != Outcome::kUndeterminedPossiblyUseful; }
};

/// rho = sum_k weights[k] a_factors[k] (x) b_factors[k] with trace-orthonormal
/// Hermitian factors and weights descending.
struct OperatorSchmidt {
  std::vector<double> weights;
  std::vector<ComplexMatrix> a_factors;
  std::vector<ComplexMatrix> b_factors;
};

/// Decomposition across `a_labels` | rest, with factors in shape order on each side.
OperatorSchmidt operator_schmidt(const DensityMatrix& rho, const LabelSet& a_labels);

struct ClassicalQuantumResult {
  bool classical_quantum = false;
  double max_commutator = 0.0;
  OperatorSchmidt decomposition;
};

/// Zero discord on the A side: true iff the A-side operator-Schmidt factors
/// with non-negligible weight pairwise commute (max ||[A_m, A_n]||_F <= tol).
ClassicalQuantumResult is_classical_quantum(const DensityMatrix& rho, const LabelSet& a_labels = {"A"},
                                            double tol = Tolerances::kClassicalQuantum);

/// Orthonormal basis of the joint support of a set of carrier states, split
/// into the leading `support_dim` columns and their complement. The support
/// is decided on the eigenvalues of the average state at Tolerances::kSupport.
struct CarrierFrame {
  ComplexMatrix basis;  // d x d unitary, support first
  std::size_t support_dim = 0;
};
CarrierFrame carrier_frame(const std::vector<DensityMatrix>& states);

/// Bloch vectors of the carrier factors, in term order. Carriers of dimension
/// above 2 are expressed in their compressed frame when their joint support
/// is at most two-dimensional. Throws DimensionError otherwise, and
/// PartyError if the ensemble has no party "A".
std::vector<BlochVector> bloch_set(const SeparableEnsemble& ensemble);

/// kabsch_rotation(vectors, xz-reflected vectors).
std::optional<Rotation3> reflection_equivalence(const std::vector<BlochVector>& vectors);

/// Runs the known obstructions in turn on an ensemble with exactly two parties, one of
/// them named "A" (the carrier). Throws PartyError otherwise.
Verdict classify(const SeparableEnsemble& ensemble);

}  // namespace entdist
