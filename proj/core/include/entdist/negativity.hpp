#pragma once

#include "entdist/geometry.hpp"
#include "entdist/matrix.hpp"
#include "entdist/state.hpp"

namespace entdist {

/// Bipartition X|Y of a state's factors; X is the transposed side.
struct Cut {
  LabelSet x_side;
  LabelSet y_side;

  // Throws UnknownLabel unless the sides are disjoint and cover `shape`.
  void validate(const FactorShape& shape) const;
};

/// Entanglement across B1 | B2 before and after the carrier A changes sides.
struct DeltaResult {
  double en_before = 0.0;  // E_n^{A B1 | B2}
  double en_after = 0.0;   // E_n^{B1 | B2 A}
  double delta = 0.0;      // en_after - en_before, signed
};

/// E_n^{X|Y}: sum of |lambda| over eigenvalues of rho^{T_X} below
/// -Tolerances::kNegativeEigenvalue.
double negativity(const DensityMatrix& rho, const Cut& cut);

/// Requires factor labels "A", "B1" and "B2".
DeltaResult delta_negativity(const DensityMatrix& rho);

/// Rotation O with O r = r~ and O s = s~ (xz-plane reflections) plus its
/// SU(2) lift U, so that U rho U^dagger = rho^T for both qubit states.
struct BlochWitness {
  Rotation3 rotation;
  ComplexMatrix unitary;
};
BlochWitness bloch_rotation_witness(const BlochVector& r, const BlochVector& s);

/// U = sum_j exp(-2 i phi_j) |j><j| with c_j = |c_j| exp(i phi_j), so that
/// U psi is the component-wise conjugate of psi. Zero amplitudes get phase 1.
ComplexMatrix phase_witness(const PureState& psi);

/// || rho^{T_{A B1}} - (U (x) 1) rho^{T_{B1}} (U (x) 1)^dagger ||_F with U
/// acting on factor "A". Throws DimensionError when U does not fit A.
double verify_pt_unitary_equivalence(const DensityMatrix& rho, const ComplexMatrix& u_on_a);

}  // namespace entdist
