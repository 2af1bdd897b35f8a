#include "entdist/classifier.hpp"

#include <algorithm>
#include <cmath>

#include "entdist/errors.hpp"
#include "entdist/linalg.hpp"
#include "entdist/negativity.hpp"

namespace entdist {

std::string outcome_name(Outcome o) {
  switch (o) {
    case Outcome::kNotUsefulTwoPureProducts:
      return "NotUseful_TwoPureProducts";
    case Outcome::kNotUsefulOnePureFactorN2:
      return "NotUseful_OnePureFactor_n2";
    case Outcome::kNotUsefulQubitCoplanar:
      return "NotUseful_QubitCoplanar";
    case Outcome::kNotUsefulClassicalQuantum:
      return "NotUseful_ClassicalQuantum";
    case Outcome::kUndeterminedPossiblyUseful:
      return "Undetermined_PossiblyUseful";
  }
  return "?";
}

namespace {

// Trace-orthonormal Hermitian basis: E_jj, (E_jk + E_kj)/sqrt2, i(E_kj - E_jk)/sqrt2.
std::vector<ComplexMatrix> hermitian_basis(std::size_t d) {
  std::vector<ComplexMatrix> basis;
  basis.reserve(d * d);
  const double h = 1.0 / std::sqrt(2.0);
  for (std::size_t j = 0; j < d; ++j) {
    ComplexMatrix m(d, d);
    m(j, j) = 1.0;
    basis.push_back(std::move(m));
  }
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t k = j + 1; k < d; ++k) {
      ComplexMatrix sym(d, d);
      sym(j, k) = h;
      sym(k, j) = h;
      basis.push_back(std::move(sym));
      ComplexMatrix anti(d, d);
      anti(j, k) = Complex(0.0, -h);
      anti(k, j) = Complex(0.0, h);
      basis.push_back(std::move(anti));
    }
  }
  return basis;
}

ComplexMatrix columns(const ComplexMatrix& m, std::size_t first, std::size_t count) {
  ComplexMatrix out(m.rows(), count);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < count; ++c) out(r, c) = m(r, first + c);
  }
  return out;
}

// Largest || W rho W^dagger - rho^T ||_F over the carrier states.
double transpose_residual(const ComplexMatrix& w, const std::vector<DensityMatrix>& states) {
  double worst = 0.0;
  for (const auto& s : states) {
    worst = std::max(worst, distance(w * s.matrix() * w.adjoint(), s.matrix().transpose()));
  }
  return worst;
}

struct QubitFrame {
  std::vector<Vec3> bloch;
  ComplexMatrix support;     // d x 2 isometry onto the qubit frame
  ComplexMatrix complement;  // d x (d - 2), empty for qubits
  bool compressed = false;
};

// Requires d == 2 or a joint support of dimension <= 2.
QubitFrame qubit_frame(const std::vector<DensityMatrix>& states, const CarrierFrame& frame) {
  const std::size_t d = states.front().dim();
  QubitFrame out;
  if (d == 2) {
    out.support = ComplexMatrix::identity(2);
  } else {
    if (frame.support_dim > 2) throw DimensionError("carrier support is not two-dimensional");
    out.support = columns(frame.basis, 0, 2);
    out.complement = columns(frame.basis, 2, d - 2);
    out.compressed = true;
  }
  for (const auto& s : states) {
    ComplexMatrix q = (out.support.adjoint() * s.matrix() * out.support).hermitian_part();
    q *= Complex(1.0 / q.trace().real());
    out.bloch.push_back(bloch_from_qubit(DensityMatrix(FactorShape::single(2, "A"), std::move(q))).r());
  }
  return out;
}

// W = E* V E^dagger + C* C^dagger maps each state to its transpose when V does
// so inside the frame spanned by E.
ComplexMatrix lift_to_carrier(const QubitFrame& f, const ComplexMatrix& v) {
  ComplexMatrix w = f.support.conj() * v * f.support.adjoint();
  if (f.complement.cols() > 0) w += f.complement.conj() * f.complement.adjoint();
  return w;
}

std::vector<BlochVector> to_bloch(const std::vector<Vec3>& vs) {
  std::vector<BlochVector> out;
  out.reserve(vs.size());
  for (const auto& v : vs) out.emplace_back(v);
  return out;
}

std::vector<DensityMatrix> carrier_states(const SeparableEnsemble& e, std::size_t carrier) {
  std::vector<DensityMatrix> out;
  out.reserve(e.size());
  for (const auto& t : e.terms()) out.push_back(t.factors[carrier]);
  return out;
}

}  // namespace

OperatorSchmidt operator_schmidt(const DensityMatrix& rho, const LabelSet& a_labels) {
  const auto& shape = rho.shape();
  const auto in_a = shape.mask(a_labels);
  LabelSet order;
  for (std::size_t k = 0; k < shape.factor_count(); ++k) {
    if (in_a[k]) order.push_back(shape.labels()[k]);
  }
  const std::size_t a_count = order.size();
  for (std::size_t k = 0; k < shape.factor_count(); ++k) {
    if (!in_a[k]) order.push_back(shape.labels()[k]);
  }
  if (a_count == 0 || a_count == shape.factor_count()) {
    throw UnknownLabel("operator-Schmidt split needs factors on both sides");
  }
  const DensityMatrix ordered = permute_factors(rho, order);
  std::size_t da = 1;
  for (std::size_t k = 0; k < a_count; ++k) da *= ordered.shape().dims()[k];
  const std::size_t db = ordered.dim() / da;

  const auto ga = hermitian_basis(da);
  const auto gb = hermitian_basis(db);
  const auto& m = ordered.matrix();

  // C_mn = trace((G_m (x) H_n) rho), real for Hermitian rho and bases.
  RealMatrix coeff(ga.size(), gb.size());
  for (std::size_t mi = 0; mi < ga.size(); ++mi) {
    for (std::size_t ni = 0; ni < gb.size(); ++ni) {
      Complex s = 0.0;
      for (std::size_t a = 0; a < da; ++a) {
        for (std::size_t b = 0; b < da; ++b) {
          const Complex g = ga[mi](b, a);
          if (g == Complex{}) continue;
          for (std::size_t c = 0; c < db; ++c) {
            for (std::size_t d = 0; d < db; ++d) {
              const Complex h = gb[ni](d, c);
              if (h == Complex{}) continue;
              s += g * h * m(a * db + c, b * db + d);
            }
          }
        }
      }
      coeff(mi, ni) = s.real();
    }
  }

  const auto dec = svd(coeff);
  OperatorSchmidt out;
  for (std::size_t k = 0; k < dec.singular.size(); ++k) {
    ComplexMatrix ak(da, da);
    for (std::size_t mi = 0; mi < ga.size(); ++mi) ak += ga[mi] * Complex(dec.u(mi, k));
    ComplexMatrix bk(db, db);
    for (std::size_t ni = 0; ni < gb.size(); ++ni) bk += gb[ni] * Complex(dec.v(ni, k));
    out.weights.push_back(dec.singular[k]);
    out.a_factors.push_back(std::move(ak));
    out.b_factors.push_back(std::move(bk));
  }
  return out;
}

ClassicalQuantumResult is_classical_quantum(const DensityMatrix& rho, const LabelSet& a_labels, double tol) {
  ClassicalQuantumResult out;
  out.decomposition = operator_schmidt(rho, a_labels);
  const auto& w = out.decomposition.weights;
  const double cut = Tolerances::kRank * (w.empty() ? 1.0 : std::max(w.front(), 1e-300));
  std::vector<std::size_t> live;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (w[k] > cut) live.push_back(k);
  }
  for (std::size_t i = 0; i < live.size(); ++i) {
    for (std::size_t j = i + 1; j < live.size(); ++j) {
      const auto& a = out.decomposition.a_factors;
      out.max_commutator = std::max(out.max_commutator, commutator(a[live[i]], a[live[j]]).frobenius_norm());
    }
  }
  out.classical_quantum = out.max_commutator <= tol;
  return out;
}

CarrierFrame carrier_frame(const std::vector<DensityMatrix>& states) {
  if (states.empty()) throw DimensionError("carrier_frame needs at least one state");
  const std::size_t d = states.front().dim();
  ComplexMatrix avg(d, d);
  for (const auto& s : states) {
    if (s.dim() != d) throw DimensionError("carrier states differ in dimension");
    avg += s.matrix();
  }
  avg *= Complex(1.0 / static_cast<double>(states.size()));
  const auto eig = hermitian_eigen(avg);
  CarrierFrame out{ComplexMatrix(d, d), 0};
  for (std::size_t c = 0; c < d; ++c) {
    const std::size_t src = d - 1 - c;  // descending eigenvalues
    if (eig.values[src] > Tolerances::kSupport) ++out.support_dim;
    for (std::size_t r = 0; r < d; ++r) out.basis(r, c) = eig.vectors(r, src);
  }
  return out;
}

std::vector<BlochVector> bloch_set(const SeparableEnsemble& ensemble) {
  const auto states = carrier_states(ensemble, ensemble.party_index("A"));
  return to_bloch(qubit_frame(states, carrier_frame(states)).bloch);
}

std::optional<Rotation3> reflection_equivalence(const std::vector<BlochVector>& vectors) {
  std::vector<Vec3> source;
  std::vector<Vec3> target;
  for (const auto& v : vectors) {
    source.push_back(v.r());
    target.push_back(xz_reflect(v).r());
  }
  return kabsch_rotation(source, target);
}

Verdict classify(const SeparableEnsemble& ensemble) {
  if (ensemble.parties().size() != 2) throw PartyError("classify needs exactly two parties (carrier A and B)");
  const std::size_t carrier = ensemble.party_index("A");
  const auto& b_shape = ensemble.parties()[1 - carrier].shape;
  const auto states = carrier_states(ensemble, carrier);
  const std::size_t n = states.size();
  const std::size_t d = states.front().dim();
  const DensityMatrix rho = assemble(ensemble);

  Verdict v;
  auto& ev = v.evidence;
  const auto frame = carrier_frame(states);
  ev.support_dim = frame.support_dim;

  auto attach_unitary = [&](ComplexMatrix w) {
    ev.transpose_residual = transpose_residual(w, states);
    if (b_shape.factor_count() == 2 && b_shape.contains("B1") && b_shape.contains("B2") &&
        ensemble.parties()[carrier].shape.factor_count() == 1) {
      ev.pt_residual = verify_pt_unitary_equivalence(rho, w);
    }
    ev.carrier_unitary = std::move(w);
  };
  auto attach_frame = [&](const QubitFrame& f) -> bool {
    ev.bloch_vectors = f.bloch;
    ev.compressed = f.compressed;
    ev.bloch_rank = real_rank(f.bloch, Tolerances::kRank);
    auto rot = reflection_equivalence(to_bloch(f.bloch));
    if (!rot || *ev.bloch_rank > 2) return false;
    ev.rotation = *rot;
    attach_unitary(lift_to_carrier(f, su2_lift(*rot)));
    return true;
  };

  // (1) zero discord
  const auto cq = is_classical_quantum(rho, ensemble.parties()[carrier].shape.labels());
  ev.max_commutator = cq.max_commutator;
  if (cq.classical_quantum) {
    v.outcome = Outcome::kNotUsefulClassicalQuantum;
    ev.summary = "classical-quantum state (zero discord on A); operator-Schmidt factors on A commute";
    return v;
  }

  if (n == 2) {
    const bool pure0 = states[0].is_pure();
    const bool pure1 = states[1].is_pure();
    // (2) two pure carrier states span a qubit subspace
    if (pure0 && pure1) {
      if (!attach_frame(qubit_frame(states, frame))) {
        throw NoConvergence("no Bloch rotation for two pure carrier states");
      }
      v.outcome = Outcome::kNotUsefulTwoPureProducts;
      ev.summary = "two pure product states; carrier transposition is a Bloch rotation";
      return v;
    }
    // (3) one pure carrier state: phase unitary in the eigenbasis of the mixed one
    if (pure0 != pure1) {
      const auto& pure = pure0 ? states[0] : states[1];
      const auto& mixed = pure0 ? states[1] : states[0];
      const auto tau = hermitian_eigen(mixed.matrix());
      const auto psi = hermitian_eigen(pure.matrix());
      std::vector<Complex> amps(d);
      for (std::size_t r = 0; r < d; ++r) amps[r] = psi.vectors(r, d - 1);
      const ComplexMatrix in_frame = tau.vectors.adjoint() * ComplexMatrix::column(amps);
      const auto e = in_frame.entries();
      const auto phase =
          phase_witness(PureState::normalized(FactorShape::single(d, "A"), std::vector<Complex>(e.begin(), e.end())));
      attach_unitary(tau.vectors.conj() * phase * tau.vectors.adjoint());
      v.outcome = Outcome::kNotUsefulOnePureFactorN2;
      ev.summary = "two terms with one pure carrier state; transposition is a diagonal phase unitary";
      return v;
    }
  }

  // (4) qubit carrier (or two mixed states on a common qubit subspace) with coplanar Bloch vectors
  const bool qubit_like = d == 2 || (n == 2 && frame.support_dim <= 2);
  if (qubit_like && attach_frame(qubit_frame(states, frame))) {
    v.outcome = Outcome::kNotUsefulQubitCoplanar;
    ev.summary = "carrier Bloch vectors are coplanar; xz-reflection equals a rotation";
    return v;
  }

  v.outcome = Outcome::kUndeterminedPossiblyUseful;
  ev.summary = qubit_like ? "carrier Bloch vectors are not coplanar" : "no obstruction applies for this carrier dimension and term count";
  return v;
}

}  // namespace entdist
