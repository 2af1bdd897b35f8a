#pragma once

#include <cstddef>
#include <vector>

#include "entdist/matrix.hpp"

namespace entdist {

/// Small dense real matrix, row-major. Used by the Bloch geometry and the
/// operator-Schmidt decomposition; everything quantum is ComplexMatrix.
class RealMatrix {
 public:
  RealMatrix() = default;
  RealMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RealMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RealMatrix transpose() const;
  friend RealMatrix operator*(const RealMatrix& a, const RealMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// Eigenvalues of a Hermitian matrix in ascending order.
struct EigenSpectrum {
  std::vector<double> values;
};

/// Eigenpairs; column k of `vectors` belongs to values[k].
struct EigenDecomposition {
  std::vector<double> values;
  ComplexMatrix vectors;
};

// Cyclic complex Jacobi. The input is symmetrized as (M + M^dagger)/2 after
// a Hermiticity gate of Tolerances::kHermitianInput; iteration stops when the
// largest off-diagonal magnitude is below kConvergence * max(1, ||M||_F).
// Throws NotHermitian, NoConvergence or DimensionError.
EigenSpectrum hermitian_eigenvalues(const ComplexMatrix& m);
EigenDecomposition hermitian_eigen(const ComplexMatrix& m);

/// Thin singular value decomposition a = u * diag(singular) * v^T with
/// k = min(rows, cols) columns in u and v and singular values descending.
/// u and v always have orthonormal columns, even for rank-deficient input.
struct SingularValueDecomposition {
  RealMatrix u;
  std::vector<double> singular;
  RealMatrix v;
};

/// One-sided (Hestenes) Jacobi; accurate for tiny singular values, which
/// rank decisions depend on.
SingularValueDecomposition svd(const RealMatrix& a);

}  // namespace entdist
