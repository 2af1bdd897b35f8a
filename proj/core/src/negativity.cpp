#include "entdist/negativity.hpp"

#include <algorithm>
#include <cmath>

#include "entdist/errors.hpp"
#include "entdist/linalg.hpp"
#include "entdist/tolerances.hpp"

namespace entdist {

void Cut::validate(const FactorShape& shape) const {
  std::vector<int> seen(shape.factor_count(), 0);
  for (const auto& l : x_side) ++seen[shape.index_of(l)];
  for (const auto& l : y_side) ++seen[shape.index_of(l)];
  for (std::size_t k = 0; k < seen.size(); ++k) {
    if (seen[k] != 1) {
      throw UnknownLabel("cut must place factor '" + shape.labels()[k] + "' on exactly one side");
    }
  }
}

double negativity(const DensityMatrix& rho, const Cut& cut) {
  cut.validate(rho.shape());
  const auto spectrum = hermitian_eigenvalues(partial_transpose(rho, cut.x_side));
  double sum = 0.0;
  for (double lambda : spectrum.values) {
    if (lambda < -Tolerances::kNegativeEigenvalue) sum -= lambda;
  }
  return sum;
}

DeltaResult delta_negativity(const DensityMatrix& rho) {
  for (const char* l : {"A", "B1", "B2"}) {
    if (!rho.shape().contains(l)) throw UnknownLabel(std::string("delta_negativity needs factor '") + l + "'");
  }
  if (rho.shape().factor_count() != 3) throw UnknownLabel("delta_negativity needs exactly the factors A, B1, B2");
  DeltaResult out;
  out.en_before = negativity(rho, Cut{{"A", "B1"}, {"B2"}});
  out.en_after = negativity(rho, Cut{{"B1"}, {"B2", "A"}});
  out.delta = out.en_after - out.en_before;
  return out;
}

BlochWitness bloch_rotation_witness(const BlochVector& r, const BlochVector& s) {
  const std::array<Vec3, 2> source{r.r(), s.r()};
  const std::array<Vec3, 2> target{xz_reflect(r).r(), xz_reflect(s).r()};
  auto rot = kabsch_rotation(source, target);
  // Two vectors span at most a plane, so a rotation always exists.
  if (!rot) throw NoConvergence("no rotation found for a pair of Bloch vectors");
  return {*rot, su2_lift(*rot)};
}

ComplexMatrix phase_witness(const PureState& psi) {
  const auto& c = psi.amplitudes();
  std::vector<Complex> diag(c.size(), 1.0);
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (c[j] != Complex{}) diag[j] = std::polar(1.0, -2.0 * std::arg(c[j]));
  }
  return ComplexMatrix::diagonal(diag);
}

double verify_pt_unitary_equivalence(const DensityMatrix& rho, const ComplexMatrix& u_on_a) {
  const auto& shape = rho.shape();
  if (!u_on_a.is_square() || u_on_a.rows() != shape.dims()[shape.index_of("A")]) {
    throw DimensionError("carrier unitary does not match the dimension of A");
  }
  shape.index_of("B1");
  const ComplexMatrix u = embed_local(shape, {"A"}, u_on_a);
  const ComplexMatrix pt_ab1 = partial_transpose(rho, {"A", "B1"});
  const ComplexMatrix pt_b1 = partial_transpose(rho, {"B1"});
  return distance(pt_ab1, u * pt_b1 * u.adjoint());
}

}  // namespace entdist
