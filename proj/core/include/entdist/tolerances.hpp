#pragma once

namespace entdist {

// Every numerical threshold used by the library lives here so tests and
// the acceptance harness can refer to them by name.
struct Tolerances {
  // Element-wise |M - M^dagger| bound for a matrix treated as Hermitian.
  static constexpr double kHermiticity = 1e-12;
  // Looser Hermiticity gate applied on eigensolver input and density matrices.
  static constexpr double kHermitianInput = 1e-10;
  // Jacobi stops when max off-diagonal <= kConvergence * max(1, ||M||_F).
  static constexpr double kConvergence = 1e-13;
  static constexpr int kMaxJacobiSweeps = 100;
  // Relative singular-value cutoff for rank decisions.
  static constexpr double kRank = 1e-9;
  // Per-vector Euclidean bound for "O maps r to r~".
  static constexpr double kMapping = 1e-8;
  // Unit trace and Hermiticity of density matrices.
  static constexpr double kTrace = 1e-10;
  // Smallest admissible eigenvalue of a density matrix.
  static constexpr double kPsd = -1e-9;
  // Normalization of pure-state amplitudes.
  static constexpr double kNorm = 1e-12;
  // Eigenvalues of rho^{T_X} below -kNegativeEigenvalue count toward E_n.
  static constexpr double kNegativeEigenvalue = 1e-10;
  // trace(rho^2) >= 1 - kPurity counts as pure.
  static constexpr double kPurity = 1e-9;
  // Support dimension cut for carrier subspace compression.
  static constexpr double kSupport = 1e-9;
  // Commutator bound for the classical-quantum test.
  static constexpr double kClassicalQuantum = 1e-8;
  // Bound on |delta| for states covered by a no-go theorem.
  static constexpr double kNoGoDelta = 1e-9;
  // Frobenius residual certifying rho^{T_{A B1}} = U rho^{T_{B1}} U^dagger.
  static constexpr double kWitnessResidual = 1e-8;
  // Distance from an open parameter boundary used by sweeps.
  static constexpr double kEndpointClip = 1e-6;
  // Probabilities summing to one.
  static constexpr double kProbabilitySum = 1e-10;
};

}  // namespace entdist
