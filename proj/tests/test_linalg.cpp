#include <gtest/gtest.h>

#include <cmath>

#include "entdist/errors.hpp"
#include "entdist/geometry.hpp"
#include "entdist/linalg.hpp"
#include "entdist/matrix.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

namespace entdist {
namespace {

using testing::random_complex;
using testing::random_hermitian;

TEST(Kron, IdentityTimesIdentity) {
  EXPECT_EQ(kron(ComplexMatrix::identity(2), ComplexMatrix::identity(2)), ComplexMatrix::identity(4));
}

TEST(Kron, PauliZZIsDiagonal) {
  const ComplexMatrix zz = kron(pauli::z(), pauli::z());
  const std::vector<Complex> d{1.0, -1.0, -1.0, 1.0};
  EXPECT_EQ(zz, ComplexMatrix::diagonal(d));
}

TEST(Kron, LeftFactorIsSlowIndex) {
  const ComplexMatrix p0{{1.0, 0.0}, {0.0, 0.0}};
  const ComplexMatrix m = kron(p0, pauli::x());
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = 0; c < 4; ++c) {
      const Complex expected = (r < 2 && c < 2) ? pauli::x()(r, c) : Complex{};
      EXPECT_EQ(m(r, c), expected) << r << "," << c;
    }
  }
}

TEST(Kron, AssociativeAndTraceMultiplicative) {
  Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_complex(2, 3, rng);
    const auto b = random_complex(3, 2, rng);
    const auto c = random_complex(2, 2, rng);
    const auto left = kron(kron(a, b), c);
    const auto right = kron(a, kron(b, c));
    EXPECT_LE(distance(left, right), 1e-12);

    const auto s = random_complex(3, 3, rng);
    const auto t = random_complex(4, 4, rng);
    EXPECT_LE(std::abs(kron(s, t).trace() - s.trace() * t.trace()), 1e-12 * (1 + std::abs(s.trace() * t.trace())));
  }
}

TEST(HermitianEigen, PauliZ) {
  const auto s = hermitian_eigenvalues(pauli::z());
  ASSERT_EQ(s.values.size(), 2u);
  EXPECT_NEAR(s.values[0], -1.0, 1e-15);
  EXPECT_NEAR(s.values[1], 1.0, 1e-15);
}

TEST(HermitianEigen, BellStatePartialTransposeClosedForm) {
  // rho^{T_A} of |Phi+> is the swap operator / 2.
  ComplexMatrix swap_half(4, 4);
  swap_half(0, 0) = 0.5;
  swap_half(1, 2) = 0.5;
  swap_half(2, 1) = 0.5;
  swap_half(3, 3) = 0.5;
  const auto s = hermitian_eigenvalues(swap_half);
  EXPECT_NEAR(s.values[0], -0.5, 1e-14);
  for (int k = 1; k < 4; ++k) EXPECT_NEAR(s.values[k], 0.5, 1e-14);
}

TEST(HermitianEigen, MatchesCharacteristicPolynomialOracle) {
  Rng rng(2024);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + trial % 11;
    const auto h = random_hermitian(n, rng);
    const auto got = hermitian_eigenvalues(h).values;
    const auto want = oracle::eigenvalues_via_charpoly(h);
    EXPECT_LE(testing::max_abs_diff(got, want), 1e-8) << "n=" << n;
  }
}

TEST(HermitianEigen, AscendingSumEqualsTrace) {
  Rng rng(5);
  for (int trial = 0; trial < 25; ++trial) {
    const auto h = random_hermitian(3 + trial % 10, rng);
    const auto v = hermitian_eigenvalues(h).values;
    EXPECT_TRUE(std::is_sorted(v.begin(), v.end()));
    double sum = 0.0;
    for (double x : v) sum += x;
    EXPECT_NEAR(sum, h.trace().real(), 1e-10);
  }
}

TEST(HermitianEigen, InvariantUnderUnitaryConjugation) {
  Rng rng(6);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + trial % 8;
    const auto h = random_hermitian(n, rng);
    const auto u = random_unitary(n, rng);
    const auto a = hermitian_eigenvalues(h).values;
    const auto b = hermitian_eigenvalues((u * h * u.adjoint()).hermitian_part()).values;
    EXPECT_LE(testing::max_abs_diff(a, b), 1e-8);
  }
}

TEST(HermitianEigen, EigenvectorsDiagonalize) {
  Rng rng(7);
  const auto h = random_hermitian(9, rng);
  const auto dec = hermitian_eigen(h);
  const auto& v = dec.vectors;
  EXPECT_LE(distance(v.adjoint() * v, ComplexMatrix::identity(9)), 1e-12);
  std::vector<Complex> d(dec.values.begin(), dec.values.end());
  EXPECT_LE(distance(v * ComplexMatrix::diagonal(d) * v.adjoint(), h), 1e-11);
}

TEST(HermitianEigen, DeterministicForIdenticalInput) {
  Rng rng(8);
  const auto h = random_hermitian(12, rng);
  const auto a = hermitian_eigenvalues(h).values;
  const auto b = hermitian_eigenvalues(h).values;
  EXPECT_EQ(a, b);
}

TEST(HermitianEigen, RejectsNonHermitian) {
  ComplexMatrix m{{1.0, 2.0}, {0.0, 1.0}};
  EXPECT_THROW(hermitian_eigenvalues(m), NotHermitian);
  EXPECT_THROW(hermitian_eigenvalues(ComplexMatrix(2, 3)), DimensionError);
}

TEST(HermitianEigen, DegenerateAndDiagonalInputs) {
  EXPECT_EQ(hermitian_eigenvalues(ComplexMatrix::identity(5)).values, std::vector<double>(5, 1.0));
  EXPECT_TRUE(hermitian_eigenvalues(ComplexMatrix(1, 1)).values == std::vector<double>{0.0});
}

TEST(Svd, ReconstructsAndIsOrthonormal) {
  Rng rng(9);
  std::normal_distribution<double> g(0.0, 1.0);
  for (auto [m, n] : {std::pair{3, 7}, std::pair{7, 3}, std::pair{5, 5}, std::pair{16, 9}}) {
    RealMatrix a(m, n);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < n; ++j) a(i, j) = g(rng);
    }
    const auto d = svd(a);
    const std::size_t k = std::min(m, n);
    ASSERT_EQ(d.singular.size(), k);
    EXPECT_TRUE(std::is_sorted(d.singular.rbegin(), d.singular.rend()));
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < n; ++j) {
        double s = 0.0;
        for (std::size_t l = 0; l < k; ++l) s += d.u(i, l) * d.singular[l] * d.v(j, l);
        EXPECT_NEAR(s, a(i, j), 1e-12);
      }
    }
    const auto utu = d.u.transpose() * d.u;
    const auto vtv = d.v.transpose() * d.v;
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        EXPECT_NEAR(utu(i, j), i == j ? 1.0 : 0.0, 1e-12);
        EXPECT_NEAR(vtv(i, j), i == j ? 1.0 : 0.0, 1e-12);
      }
    }
  }
}

TEST(Svd, RankDeficientStillOrthonormal) {
  RealMatrix a(3, 3);
  a(0, 0) = 1.0;  // rank one
  const auto d = svd(a);
  EXPECT_DOUBLE_EQ(d.singular[0], 1.0);
  EXPECT_EQ(d.singular[1], 0.0);
  const auto utu = d.u.transpose() * d.u;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) EXPECT_NEAR(utu(i, j), i == j ? 1.0 : 0.0, 1e-15);
  }
}

// ------------------------------------------------------------------ geometry

TEST(RealRank, CoordinateBasisIsFullRank) {
  const std::vector<Vec3> v{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  EXPECT_EQ(real_rank(v), 3);
}

TEST(RealRank, CollinearAndEmpty) {
  const std::vector<Vec3> v{{1, 0, 0}, {2, 0, 0}};
  EXPECT_EQ(real_rank(v), 1);
  EXPECT_EQ(real_rank(std::vector<Vec3>{}), 0);
  EXPECT_EQ(real_rank(std::vector<Vec3>{{0, 0, 0}}), 0);
}

TEST(RealRank, PermutationAndScalingInvariantAgainstEliminationOracle) {
  Rng rng(10);
  std::normal_distribution<double> g(0.0, 1.0);
  std::uniform_int_distribution<int> pick_rank(0, 3);
  for (int trial = 0; trial < 200; ++trial) {
    // Random set of 1..6 vectors in a random subspace of dimension 0..3.
    const int dim = pick_rank(rng);
    std::vector<Vec3> basis;
    for (int k = 0; k < dim; ++k) basis.push_back({g(rng), g(rng), g(rng)});
    const int n = 1 + trial % 6;
    std::vector<Vec3> vs;
    for (int k = 0; k < n; ++k) {
      Vec3 v{0, 0, 0};
      for (const auto& b : basis) {
        const double c = g(rng);
        for (int i = 0; i < 3; ++i) v[i] += c * b[i];
      }
      vs.push_back(v);
    }
    std::vector<std::vector<double>> rows(3, std::vector<double>(vs.size()));
    for (std::size_t j = 0; j < vs.size(); ++j) {
      for (int i = 0; i < 3; ++i) rows[i][j] = vs[j][i];
    }
    const int want = oracle::gaussian_rank(rows, 1e-9);
    const int got = real_rank(vs);
    EXPECT_EQ(got, want);

    auto shuffled = vs;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    for (auto& v : shuffled) {
      for (auto& x : v) x *= -3.5;
    }
    EXPECT_EQ(real_rank(shuffled), got);
  }
}

TEST(Kabsch, SingleVectorGivesIdentity) {
  const std::vector<Vec3> v{{1, 0, 0}};
  const auto r = kabsch_rotation(v, v);
  ASSERT_TRUE(r.has_value());
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) EXPECT_NEAR((*r)(i, j), i == j ? 1.0 : 0.0, 1e-14);
  }
}

TEST(Kabsch, FullRankReflectionHasNoRotation) {
  const std::vector<Vec3> src{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  const std::vector<Vec3> dst{{1, 0, 0}, {0, -1, 0}, {0, 0, 1}};
  EXPECT_FALSE(kabsch_rotation(src, dst).has_value());
}

TEST(Kabsch, XzPlaneVectorsAreFixed) {
  const std::vector<Vec3> v{{1, 0, 0}, {0, 0, 1}};
  const auto r = kabsch_rotation(v, v);
  ASSERT_TRUE(r.has_value());
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) EXPECT_NEAR((*r)(i, j), i == j ? 1.0 : 0.0, 1e-14);
  }
}

TEST(Kabsch, LengthMismatchThrows) {
  const std::vector<Vec3> a{{1, 0, 0}};
  const std::vector<Vec3> b{};
  EXPECT_THROW(kabsch_rotation(a, b), LengthMismatch);
}

TEST(Kabsch, RecoversRandomRotationAndReflectsPlanarSets) {
  Rng rng(12);
  std::normal_distribution<double> g(0.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    // Target = known rotation of random source.
    const auto u = random_unitary(2, rng);
    std::vector<Vec3> src;
    for (int k = 0; k < 4; ++k) src.push_back({g(rng), g(rng), g(rng)});
    // Rotation from the adjoint action of u: O_ij = trace(sigma_i u sigma_j u^dagger) / 2.
    const ComplexMatrix s[3] = {pauli::x(), pauli::y(), pauli::z()};
    Rotation3::Entries e{};
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) e[i][j] = 0.5 * (s[i] * u * s[j] * u.adjoint()).trace().real();
    }
    const Rotation3 truth(e);
    std::vector<Vec3> dst;
    for (const auto& v : src) dst.push_back(truth.apply(v));
    const auto r = kabsch_rotation(src, dst);
    ASSERT_TRUE(r.has_value());
    EXPECT_TRUE(r->is_valid());
    for (std::size_t k = 0; k < src.size(); ++k) EXPECT_LE(norm(r->apply(src[k]) - dst[k]), 1e-8);

    // Coplanar set: the xz-reflection is always realizable by a rotation.
    const Vec3 a{g(rng), g(rng), g(rng)};
    const Vec3 b{g(rng), g(rng), g(rng)};
    std::vector<Vec3> plane, reflected;
    for (int k = 0; k < 5; ++k) {
      const double x = g(rng), y = g(rng);
      Vec3 v{x * a[0] + y * b[0], x * a[1] + y * b[1], x * a[2] + y * b[2]};
      plane.push_back(v);
      reflected.push_back({v[0], -v[1], v[2]});
    }
    const auto rp = kabsch_rotation(plane, reflected);
    ASSERT_TRUE(rp.has_value());
    EXPECT_TRUE(rp->is_valid());
  }
}

TEST(Su2Lift, AdjointActionRealizesRotation) {
  Rng rng(13);
  const ComplexMatrix s[3] = {pauli::x(), pauli::y(), pauli::z()};
  for (int trial = 0; trial < 100; ++trial) {
    const auto u = random_unitary(2, rng);
    Rotation3::Entries e{};
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) e[i][j] = 0.5 * (s[i] * u * s[j] * u.adjoint()).trace().real();
    }
    const Rotation3 o(e);
    const auto lifted = su2_lift(o);
    EXPECT_LE(distance(lifted.adjoint() * lifted, ComplexMatrix::identity(2)), 1e-12);
    EXPECT_NEAR(std::abs((lifted(0, 0) * lifted(1, 1) - lifted(0, 1) * lifted(1, 0)) - 1.0), 0.0, 1e-12);
    for (int j = 0; j < 3; ++j) {
      ComplexMatrix want(2, 2);
      for (int i = 0; i < 3; ++i) want += s[i] * Complex(o(i, j));
      EXPECT_LE(distance(lifted * s[j] * lifted.adjoint(), want), 1e-10);
    }
    // Sign convention.
    const Complex lead = std::abs(lifted(0, 0)) > 1e-14 ? lifted(0, 0) : lifted(1, 1);
    EXPECT_GE(lead.real(), -1e-15);
  }
}

TEST(Su2Lift, HalfTurnsHitEveryQuaternionBranch) {
  const ComplexMatrix s[3] = {pauli::x(), pauli::y(), pauli::z()};
  const Rotation3 cases[] = {
      Rotation3(Rotation3::Entries{{{1, 0, 0}, {0, -1, 0}, {0, 0, -1}}}),
      Rotation3(Rotation3::Entries{{{-1, 0, 0}, {0, 1, 0}, {0, 0, -1}}}),
      Rotation3(Rotation3::Entries{{{-1, 0, 0}, {0, -1, 0}, {0, 0, 1}}}),
  };
  for (const auto& o : cases) {
    const auto u = su2_lift(o);
    for (int j = 0; j < 3; ++j) {
      ComplexMatrix want(2, 2);
      for (int i = 0; i < 3; ++i) want += s[i] * Complex(o(i, j));
      EXPECT_LE(distance(u * s[j] * u.adjoint(), want), 1e-14);
    }
  }
}

}  // namespace
}  // namespace entdist
