#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "entdist/errors.hpp"
#include "entdist/negativity.hpp"
#include "entdist/scenarios.hpp"
#include "entdist/tolerances.hpp"
#include "test_util.hpp"

namespace entdist {
namespace {

const Complex kI(0.0, 1.0);
const FactorShape kBB({2, 2}, {"B1", "B2"});

TEST(Cut, Validation) {
  const auto& s = testing::abb_shape(2);
  EXPECT_NO_THROW((Cut{{"A", "B1"}, {"B2"}}.validate(s)));
  EXPECT_THROW((Cut{{"A"}, {"B2"}}.validate(s)), UnknownLabel);
  EXPECT_THROW((Cut{{"A", "B1"}, {"B1", "B2"}}.validate(s)), UnknownLabel);
  EXPECT_THROW((Cut{{"A", "B1"}, {"C"}}.validate(s)), UnknownLabel);
}

TEST(Negativity, ProductStateIsZero) {
  Rng rng(1);
  const auto a = random_density(FactorShape::single(3, "A"), 3, rng);
  const auto b = random_density(FactorShape::single(2, "B"), 2, rng);
  const DensityMatrix prod(FactorShape({3, 2}, {"A", "B"}), kron(a.matrix(), b.matrix()));
  EXPECT_EQ(negativity(prod, {{"A"}, {"B"}}), 0.0);
}

TEST(Negativity, BellStateIsHalf) {
  const double h = 1.0 / std::sqrt(2.0);
  const auto bell = pure_to_density(PureState(FactorShape({2, 2}, {"A", "B"}), {h, 0.0, 0.0, h}));
  EXPECT_NEAR(negativity(bell, {{"A"}, {"B"}}), 0.5, 1e-14);
}

TEST(Negativity, SchmidtStateClosedForm) {
  for (double alpha : {0.0, 0.1, 0.5, 0.785, 1.2, std::numbers::pi / 2}) {
    const auto rho = pure_to_density(PureState(kBB, {std::cos(alpha), 0.0, 0.0, std::sin(alpha)}));
    EXPECT_NEAR(negativity(rho, {{"B1"}, {"B2"}}), std::abs(std::cos(alpha) * std::sin(alpha)), 1e-13) << alpha;
  }
}

TEST(Negativity, SymmetricAndLocalUnitaryInvariant) {
  Rng rng(2);
  for (int trial = 0; trial < 30; ++trial) {
    const auto& shape = testing::abb_shape(2 + trial % 3);
    const auto rho = random_density(shape, 1 + trial % 4, rng);
    const Cut xy{{"A", "B1"}, {"B2"}};
    const Cut yx{{"B2"}, {"A", "B1"}};
    const double n = negativity(rho, xy);
    EXPECT_NEAR(n, negativity(rho, yx), 1e-10);
    EXPECT_GE(n, 0.0);

    const auto ua = random_unitary(shape.dims()[0], rng);
    const auto ub = random_unitary(2, rng);
    const auto u = kron(kron(ua, ub), random_unitary(2, rng));
    const DensityMatrix rotated(shape, (u * rho.matrix() * u.adjoint()).hermitian_part());
    EXPECT_NEAR(negativity(rotated, xy), n, 1e-8);
  }
}

TEST(DeltaNegativity, ProductStateIsZero) {
  Rng rng(3);
  const auto a = random_density(FactorShape::single(3, "A"), 2, rng);
  const auto b1 = random_density(FactorShape::single(2, "B1"), 2, rng);
  const auto b2 = random_density(FactorShape::single(2, "B2"), 2, rng);
  const DensityMatrix rho(testing::abb_shape(3), kron(kron(a.matrix(), b1.matrix()), b2.matrix()));
  const auto d = delta_negativity(rho);
  EXPECT_EQ(d.en_before, 0.0);
  EXPECT_EQ(d.en_after, 0.0);
  EXPECT_EQ(d.delta, 0.0);
}

TEST(DeltaNegativity, RequiresTripartiteLabels) {
  Rng rng(4);
  EXPECT_THROW(delta_negativity(random_density(FactorShape({2, 2}, {"A", "B"}), 2, rng)), UnknownLabel);
}

TEST(DeltaNegativity, TwoPureProductsNeverChange) {
  Rng rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const auto carrier = FactorShape::single(2 + trial % 3, "A");
    const auto e = build_eq3(random_pure(carrier, rng), random_pure(carrier, rng), random_pure(kBB, rng),
                             random_pure(kBB, rng), 0.05 + 0.9 * (trial % 10) / 10.0);
    const auto d = delta_negativity(assemble(e));
    EXPECT_LE(std::abs(d.delta), Tolerances::kNoGoDelta);
    EXPECT_EQ(d.delta, d.en_after - d.en_before);
  }
}

TEST(DeltaNegativity, QutritExamplePositiveAtSixTenths) {
  EXPECT_GT(delta_negativity(assemble(build_fig2(0.6))).delta, 0.0);
}

TEST(BlochRotationWitness, ParallelVectorsGiveIdentity) {
  const BlochVector z({0, 0, 1});
  const auto w = bloch_rotation_witness(z, z);
  EXPECT_TRUE(w.rotation.is_valid());
  EXPECT_LE(norm(w.rotation.apply(z.r()) - z.r()), 1e-12);
  // U fixes the z axis, hence is diagonal.
  EXPECT_LE(std::abs(w.unitary(0, 1)) + std::abs(w.unitary(1, 0)), 1e-12);
}

TEST(BlochRotationWitness, XAndYAxes) {
  const BlochVector x({1, 0, 0});
  const BlochVector y({0, 1, 0});
  const auto w = bloch_rotation_witness(x, y);
  EXPECT_TRUE(w.rotation.is_valid());
  EXPECT_LE(norm(w.rotation.apply(x.r()) - x.r()), 1e-8);
  EXPECT_LE(norm(w.rotation.apply(y.r()) - Vec3{0, -1, 0}), 1e-8);
}

TEST(BlochRotationWitness, RandomPairsRealizeTransposition) {
  Rng rng(6);
  const ComplexMatrix s[3] = {pauli::x(), pauli::y(), pauli::z()};
  for (int trial = 0; trial < 100; ++trial) {
    const auto q = FactorShape::single(2, "A");
    const auto a = pure_to_density(random_pure(q, rng));
    const auto b = random_density(q, 2, rng);
    const auto w = bloch_rotation_witness(bloch_from_qubit(a), bloch_from_qubit(b));
    EXPECT_LE(distance(w.unitary.adjoint() * w.unitary, ComplexMatrix::identity(2)), 1e-12);
    for (int j = 0; j < 3; ++j) {
      ComplexMatrix want(2, 2);
      for (int i = 0; i < 3; ++i) want += s[i] * Complex(w.rotation(i, j));
      EXPECT_LE(distance(w.unitary * s[j] * w.unitary.adjoint(), want), 1e-8);
    }
    EXPECT_LE(distance(w.unitary * a.matrix() * w.unitary.adjoint(), a.matrix().transpose()), 1e-8);
    EXPECT_LE(distance(w.unitary * b.matrix() * w.unitary.adjoint(), b.matrix().transpose()), 1e-8);
  }
}

TEST(PhaseWitness, RealAmplitudesGiveIdentity) {
  const auto psi = PureState::normalized(FactorShape::single(3, "A"), {0.3, -0.5, 0.8});
  const auto u = phase_witness(psi);
  // arg(-0.5) = pi, exp(-2 i pi) = 1
  EXPECT_LE(distance(u, ComplexMatrix::identity(3)), 1e-15);
}

TEST(PhaseWitness, ImaginaryComponentFlipsSign) {
  const double h = 1.0 / std::sqrt(2.0);
  const PureState psi(FactorShape::single(2, "A"), {h, kI * h});
  const auto u = phase_witness(psi);
  EXPECT_LE(distance(u, ComplexMatrix{{1.0, 0.0}, {0.0, -1.0}}), 1e-15);
}

TEST(PhaseWitness, RandomQutritMapsToConjugate) {
  Rng rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    auto psi = random_pure(FactorShape::single(3, "A"), rng);
    auto amps = psi.amplitudes();
    if (trial % 5 == 0) {
      amps[1] = 0.0;  // zero amplitude gets phase 1
      psi = PureState::normalized(psi.shape(), amps);
      amps = psi.amplitudes();
    }
    const auto u = phase_witness(psi);
    const auto out = u * ComplexMatrix::column(amps);
    for (std::size_t j = 0; j < 3; ++j) EXPECT_LE(std::abs(out(j, 0) - std::conj(amps[j])), 1e-12);
    if (trial % 5 == 0) EXPECT_EQ(u(1, 1), Complex(1.0));
  }
}

TEST(VerifyPtUnitaryEquivalence, TwoPureInstanceWithBlochWitness) {
  Rng rng(8);
  const auto q = FactorShape::single(2, "A");
  const auto psi1 = random_pure(q, rng);
  const auto psi2 = random_pure(q, rng);
  const auto rho = assemble(build_eq3(psi1, psi2, random_pure(kBB, rng), random_pure(kBB, rng), 0.37));
  const auto w = bloch_rotation_witness(bloch_from_qubit(pure_to_density(psi1)), bloch_from_qubit(pure_to_density(psi2)));
  EXPECT_LE(verify_pt_unitary_equivalence(rho, w.unitary), Tolerances::kWitnessResidual);
}

TEST(VerifyPtUnitaryEquivalence, OnePureInstanceWithPhaseWitness) {
  Rng rng(9);
  const auto carrier = FactorShape::single(3, "A");
  const auto psi = random_pure(carrier, rng);
  const std::vector<Complex> lambda{0.5, 0.3, 0.2};
  const DensityMatrix tau(carrier, ComplexMatrix::diagonal(lambda));
  const SeparableEnsemble e({{"A", carrier}, {"B", kBB}},
                            {{0.4, {pure_to_density(psi), pure_to_density(random_pure(kBB, rng))}},
                             {0.6, {tau, pure_to_density(random_pure(kBB, rng))}}});
  EXPECT_LE(verify_pt_unitary_equivalence(assemble(e), phase_witness(psi)), Tolerances::kWitnessResidual);
}

TEST(VerifyPtUnitaryEquivalence, QutritExampleIsNotEquivalentUnderIdentity) {
  const double residual = verify_pt_unitary_equivalence(assemble(build_fig2(0.6)), ComplexMatrix::identity(3));
  EXPECT_GT(residual, 0.01);
  EXPECT_THROW(verify_pt_unitary_equivalence(assemble(build_fig2(0.6)), ComplexMatrix::identity(2)), DimensionError);
}

TEST(VerifyPtUnitaryEquivalence, SmallResidualImpliesSmallDelta) {
  Rng rng(10);
  for (int trial = 0; trial < 30; ++trial) {
    const auto q = FactorShape::single(2, "A");
    const auto psi1 = random_pure(q, rng);
    const auto psi2 = random_pure(q, rng);
    const auto rho = assemble(build_eq3(psi1, psi2, random_pure(kBB, rng), random_pure(kBB, rng), 0.5));
    const auto w = bloch_rotation_witness(bloch_from_qubit(pure_to_density(psi1)), bloch_from_qubit(pure_to_density(psi2)));
    if (verify_pt_unitary_equivalence(rho, w.unitary) <= 1e-8) {
      EXPECT_LE(std::abs(delta_negativity(rho).delta), 1e-8);
    }
  }
}

}  // namespace
}  // namespace entdist
