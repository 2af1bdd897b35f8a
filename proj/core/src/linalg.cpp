#include "entdist/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "entdist/errors.hpp"
#include "entdist/tolerances.hpp"

namespace entdist {

RealMatrix RealMatrix::identity(std::size_t n) {
  RealMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

RealMatrix RealMatrix::transpose() const {
  RealMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

RealMatrix operator*(const RealMatrix& a, const RealMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("real matrix product shape mismatch");
  RealMatrix m(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      for (std::size_t j = 0; j < b.cols_; ++j) m(i, j) += a(i, k) * b(k, j);
    }
  }
  return m;
}

namespace {

double max_off_diagonal(const ComplexMatrix& a) {
  double worst = 0.0;
  for (std::size_t p = 0; p < a.rows(); ++p) {
    for (std::size_t q = p + 1; q < a.cols(); ++q) worst = std::max(worst, std::abs(a(p, q)));
  }
  return worst;
}

EigenDecomposition jacobi(const ComplexMatrix& input, bool want_vectors) {
  if (!input.is_square()) throw DimensionError("eigenvalues of a non-square matrix");
  const double defect = input.hermiticity_defect();
  if (!(defect <= Tolerances::kHermitianInput)) {
    throw NotHermitian("matrix is not Hermitian (defect " + std::to_string(defect) + ")");
  }
  const std::size_t n = input.rows();
  ComplexMatrix a = input.hermitian_part();
  ComplexMatrix v = want_vectors ? ComplexMatrix::identity(n) : ComplexMatrix{};

  const double threshold = Tolerances::kConvergence * std::max(1.0, a.frobenius_norm());
  bool converged = false;
  for (int sweep = 0; sweep <= Tolerances::kMaxJacobiSweeps; ++sweep) {
    if (max_off_diagonal(a) <= threshold) {
      converged = true;
      break;
    }
    if (sweep == Tolerances::kMaxJacobiSweeps) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double mag = std::abs(a(p, q));
        if (mag <= 0.01 * threshold) continue;

        // Phase step: scale basis vector q so that a(p, q) becomes real positive.
        const Complex d = std::conj(a(p, q)) / mag;
        for (std::size_t r = 0; r < n; ++r) a(r, q) *= d;
        for (std::size_t c = 0; c < n; ++c) a(q, c) *= std::conj(d);
        if (want_vectors) {
          for (std::size_t r = 0; r < n; ++r) v(r, q) *= d;
        }

        // Real symmetric rotation annihilating the (p, q) pair.
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double theta = (aqq - app) / (2.0 * mag);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t r = 0; r < n; ++r) {
          const Complex arp = a(r, p);
          const Complex arq = a(r, q);
          a(r, p) = c * arp - s * arq;
          a(r, q) = s * arp + c * arq;
        }
        for (std::size_t col = 0; col < n; ++col) {
          const Complex apc = a(p, col);
          const Complex aqc = a(q, col);
          a(p, col) = c * apc - s * aqc;
          a(q, col) = s * apc + c * aqc;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
        if (want_vectors) {
          for (std::size_t r = 0; r < n; ++r) {
            const Complex vrp = v(r, p);
            const Complex vrq = v(r, q);
            v(r, p) = c * vrp - s * vrq;
            v(r, q) = s * vrp + c * vrq;
          }
        }
      }
    }
  }
  if (!converged) {
    throw NoConvergence("Jacobi eigensolver did not converge in " +
                        std::to_string(Tolerances::kMaxJacobiSweeps) + " sweeps");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

  EigenDecomposition out;
  out.values.reserve(n);
  for (std::size_t k : order) out.values.push_back(a(k, k).real());
  if (want_vectors) {
    out.vectors = ComplexMatrix(n, n);
    for (std::size_t col = 0; col < n; ++col) {
      for (std::size_t r = 0; r < n; ++r) out.vectors(r, col) = v(r, order[col]);
    }
  }
  return out;
}

double column_dot(const RealMatrix& m, std::size_t i, std::size_t j) {
  double s = 0.0;
  for (std::size_t k = 0; k < m.rows(); ++k) s += m(k, i) * m(k, j);
  return s;
}

// Replaces columns flagged in `missing` by unit vectors orthogonal to all others.
void complete_orthonormal(RealMatrix& m, const std::vector<bool>& missing) {
  std::vector<std::size_t> accepted;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (!missing[j]) accepted.push_back(j);
  }
  std::size_t candidate = 0;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (!missing[j]) continue;
    while (true) {
      if (candidate >= m.rows()) throw NoConvergence("cannot complete orthonormal basis");
      std::vector<double> e(m.rows(), 0.0);
      e[candidate++] = 1.0;
      for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t k : accepted) {
          double proj = 0.0;
          for (std::size_t r = 0; r < m.rows(); ++r) proj += m(r, k) * e[r];
          for (std::size_t r = 0; r < m.rows(); ++r) e[r] -= proj * m(r, k);
        }
      }
      const double norm = std::sqrt(std::inner_product(e.begin(), e.end(), e.begin(), 0.0));
      if (norm > 0.5) {
        for (std::size_t r = 0; r < m.rows(); ++r) m(r, j) = e[r] / norm;
        accepted.push_back(j);
        break;
      }
    }
  }
}

}  // namespace

EigenSpectrum hermitian_eigenvalues(const ComplexMatrix& m) { return {jacobi(m, false).values}; }

EigenDecomposition hermitian_eigen(const ComplexMatrix& m) { return jacobi(m, true); }

SingularValueDecomposition svd(const RealMatrix& a) {
  if (a.cols() > a.rows()) {
    SingularValueDecomposition t = svd(a.transpose());
    return {std::move(t.v), std::move(t.singular), std::move(t.u)};
  }
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  RealMatrix u = a;
  RealMatrix v = RealMatrix::identity(n);
  const double eps = static_cast<double>(m) * std::numeric_limits<double>::epsilon();
  double total = 0.0;
  for (std::size_t j = 0; j < n; ++j) total += column_dot(u, j, j);
  // columns below this are zero at working precision; rotating them only churns noise
  const double negligible = eps * eps * total;

  bool converged = false;
  for (int sweep = 0; sweep < Tolerances::kMaxJacobiSweeps && !converged; ++sweep) {
    converged = true;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const double alpha = column_dot(u, i, i);
        const double beta = column_dot(u, j, j);
        const double gamma = column_dot(u, i, j);
        if (gamma == 0.0 || std::abs(gamma) <= eps * std::sqrt(alpha * beta)) continue;
        if (std::min(alpha, beta) <= negligible) continue;
        converged = false;
        const double zeta = (beta - alpha) / (2.0 * gamma);
        const double t = (zeta >= 0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        for (std::size_t k = 0; k < m; ++k) {
          const double ui = u(k, i);
          const double uj = u(k, j);
          u(k, i) = c * ui - s * uj;
          u(k, j) = s * ui + c * uj;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double vi = v(k, i);
          const double vj = v(k, j);
          v(k, i) = c * vi - s * vj;
          v(k, j) = s * vi + c * vj;
        }
      }
    }
  }
  if (!converged) throw NoConvergence("one-sided Jacobi SVD did not converge");

  std::vector<double> sigma(n);
  for (std::size_t j = 0; j < n; ++j) sigma[j] = std::sqrt(column_dot(u, j, j));
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return sigma[i] > sigma[j]; });

  SingularValueDecomposition out{RealMatrix(m, n), std::vector<double>(n), RealMatrix(n, n)};
  const double largest = n == 0 ? 0.0 : sigma[order[0]];
  std::vector<bool> missing(n, false);
  for (std::size_t col = 0; col < n; ++col) {
    const std::size_t src = order[col];
    out.singular[col] = sigma[src];
    for (std::size_t k = 0; k < n; ++k) out.v(k, col) = v(k, src);
    if (sigma[src] == 0.0 || sigma[src] <= 1e-15 * largest) {
      missing[col] = true;
      continue;
    }
    for (std::size_t k = 0; k < m; ++k) out.u(k, col) = u(k, src) / sigma[src];
  }
  complete_orthonormal(out.u, missing);
  return out;
}

}  // namespace entdist
