#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "entdist/matrix.hpp"

namespace entdist {

using Vec3 = std::array<double, 3>;

double dot(const Vec3& a, const Vec3& b);
double norm(const Vec3& a);
Vec3 operator-(const Vec3& a, const Vec3& b);

/// Proper rotation of R^3. Construction does not validate; use is_valid().
class Rotation3 {
 public:
  using Entries = std::array<std::array<double, 3>, 3>;

  Rotation3() : Rotation3(identity()) {}
  explicit Rotation3(const Entries& entries) : m_(entries) {}

  static Rotation3 identity();

  double operator()(int r, int c) const { return m_[r][c]; }
  const Entries& entries() const { return m_; }

  Vec3 apply(const Vec3& v) const;
  double determinant() const;
  // max_{ij} |(O O^T - I)_ij|
  double orthogonality_defect() const;
  // O O^T = I and det O = +1, both within tol.
  bool is_valid(double tol = 1e-10) const;

 private:
  Entries m_;
};

/// Rank of the 3 x n matrix whose columns are `vectors`: number of singular
/// values above tol * (largest singular value, or 1 if all vanish).
int real_rank(std::span<const Vec3> vectors, double tol = 1e-9);

/// A proper rotation O with O * source[i] == target[i] (Euclidean error
/// <= Tolerances::kMapping per vector), or nullopt if none exists.
/// Covariance SVD with determinant correction (Kabsch). Throws LengthMismatch.
std::optional<Rotation3> kabsch_rotation(std::span<const Vec3> source, std::span<const Vec3> target);

/// Element of SU(2) whose adjoint action on the Pauli vector realizes `o`:
/// U sigma_j U^dagger = sum_i o(i, j) sigma_i. The overall sign is fixed by
/// requiring the first nonzero diagonal entry to have non-negative real part
/// (ties broken toward non-negative imaginary part).
ComplexMatrix su2_lift(const Rotation3& o);

}  // namespace entdist
