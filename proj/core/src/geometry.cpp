#include "entdist/geometry.hpp"

#include <algorithm>
#include <cmath>

#include "entdist/errors.hpp"
#include "entdist/linalg.hpp"
#include "entdist/tolerances.hpp"

namespace entdist {

double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

Vec3 operator-(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }

Rotation3 Rotation3::identity() { return Rotation3(Entries{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}); }

Vec3 Rotation3::apply(const Vec3& v) const {
  Vec3 out{};
  for (int i = 0; i < 3; ++i) out[i] = m_[i][0] * v[0] + m_[i][1] * v[1] + m_[i][2] * v[2];
  return out;
}

double Rotation3::determinant() const {
  return m_[0][0] * (m_[1][1] * m_[2][2] - m_[1][2] * m_[2][1]) -
         m_[0][1] * (m_[1][0] * m_[2][2] - m_[1][2] * m_[2][0]) +
         m_[0][2] * (m_[1][0] * m_[2][1] - m_[1][1] * m_[2][0]);
}

double Rotation3::orthogonality_defect() const {
  double worst = 0.0;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      double s = 0.0;
      for (int k = 0; k < 3; ++k) s += m_[i][k] * m_[j][k];
      worst = std::max(worst, std::abs(s - (i == j ? 1.0 : 0.0)));
    }
  }
  return worst;
}

bool Rotation3::is_valid(double tol) const {
  return orthogonality_defect() <= tol && std::abs(determinant() - 1.0) <= tol;
}

int real_rank(std::span<const Vec3> vectors, double tol) {
  if (vectors.empty()) return 0;
  RealMatrix m(3, vectors.size());
  for (std::size_t j = 0; j < vectors.size(); ++j) {
    for (std::size_t i = 0; i < 3; ++i) m(i, j) = vectors[j][i];
  }
  const auto sigma = svd(m).singular;
  const double largest = sigma.front();
  const double cut = tol * (largest > 0.0 ? largest : 1.0);
  return static_cast<int>(std::count_if(sigma.begin(), sigma.end(), [&](double s) { return s > cut; }));
}

std::optional<Rotation3> kabsch_rotation(std::span<const Vec3> source, std::span<const Vec3> target) {
  if (source.size() != target.size()) {
    throw LengthMismatch("kabsch_rotation: " + std::to_string(source.size()) + " source vs " +
                         std::to_string(target.size()) + " target vectors");
  }
  if (source.empty()) return Rotation3::identity();

  RealMatrix h(3, 3);
  for (std::size_t k = 0; k < source.size(); ++k) {
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) h(i, j) += source[k][i] * target[k][j];
    }
  }
  const auto dec = svd(h);
  // R = V diag(1, 1, d) U^T with d = sign(det(V U^T)).
  RealMatrix vu = dec.v * dec.u.transpose();
  const Rotation3 probe(Rotation3::Entries{{{vu(0, 0), vu(0, 1), vu(0, 2)},
                                            {vu(1, 0), vu(1, 1), vu(1, 2)},
                                            {vu(2, 0), vu(2, 1), vu(2, 2)}}});
  const double d = probe.determinant() < 0 ? -1.0 : 1.0;
  Rotation3::Entries r{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      r[i][j] = dec.v(i, 0) * dec.u(j, 0) + dec.v(i, 1) * dec.u(j, 1) + d * dec.v(i, 2) * dec.u(j, 2);
    }
  }
  Rotation3 rot(r);
  for (std::size_t k = 0; k < source.size(); ++k) {
    if (norm(rot.apply(source[k]) - target[k]) > Tolerances::kMapping) return std::nullopt;
  }
  return rot;
}

ComplexMatrix su2_lift(const Rotation3& o) {
  // Rotation matrix -> unit quaternion (w, x, y, z), Shepperd's branch choice.
  double w, x, y, z;
  const double tr = o(0, 0) + o(1, 1) + o(2, 2);
  if (tr > 0) {
    const double s = 2.0 * std::sqrt(tr + 1.0);
    w = 0.25 * s;
    x = (o(2, 1) - o(1, 2)) / s;
    y = (o(0, 2) - o(2, 0)) / s;
    z = (o(1, 0) - o(0, 1)) / s;
  } else if (o(0, 0) > o(1, 1) && o(0, 0) > o(2, 2)) {
    const double s = 2.0 * std::sqrt(1.0 + o(0, 0) - o(1, 1) - o(2, 2));
    w = (o(2, 1) - o(1, 2)) / s;
    x = 0.25 * s;
    y = (o(0, 1) + o(1, 0)) / s;
    z = (o(0, 2) + o(2, 0)) / s;
  } else if (o(1, 1) > o(2, 2)) {
    const double s = 2.0 * std::sqrt(1.0 + o(1, 1) - o(0, 0) - o(2, 2));
    w = (o(0, 2) - o(2, 0)) / s;
    x = (o(0, 1) + o(1, 0)) / s;
    y = 0.25 * s;
    z = (o(1, 2) + o(2, 1)) / s;
  } else {
    const double s = 2.0 * std::sqrt(1.0 + o(2, 2) - o(0, 0) - o(1, 1));
    w = (o(1, 0) - o(0, 1)) / s;
    x = (o(0, 2) + o(2, 0)) / s;
    y = (o(1, 2) + o(2, 1)) / s;
    z = 0.25 * s;
  }
  const double n = std::sqrt(w * w + x * x + y * y + z * z);
  w /= n;
  x /= n;
  y /= n;
  z /= n;

  // U = w I - i (x sigma_x + y sigma_y + z sigma_z)
  const Complex i(0.0, 1.0);
  ComplexMatrix u{{w - i * z, -i * x - y}, {-i * x + y, w + i * z}};

  const Complex lead = std::abs(u(0, 0)) > 1e-14 ? u(0, 0) : u(1, 1);
  if (lead.real() < -1e-15 || (std::abs(lead.real()) <= 1e-15 && lead.imag() < 0)) u *= -1.0;
  return u;
}

}  // namespace entdist
