#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace entdist {

using Complex = std::complex<double>;

/// Dense complex matrix, row-major.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
  // Row-by-row literal, e.g. {{1, 0}, {0, -1}}.
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix zeros(std::size_t rows, std::size_t cols) { return {rows, cols}; }
  static ComplexMatrix diagonal(std::span<const Complex> diag);
  // Column vector from amplitudes.
  static ComplexMatrix column(std::span<const Complex> v);
  // |v><w|
  static ComplexMatrix outer(std::span<const Complex> v, std::span<const Complex> w);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Complex> entries() const { return data_; }
  std::span<Complex> entries() { return data_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  ComplexMatrix conj() const;
  Complex trace() const;
  double frobenius_norm() const;
  // max_{ij} |M_ij - conj(M_ji)|; infinite for non-square input.
  double hermiticity_defect() const;
  bool is_hermitian(double tol) const { return hermiticity_defect() <= tol; }
  // (M + M^dagger) / 2
  ComplexMatrix hermitian_part() const;

  ComplexMatrix& operator+=(const ComplexMatrix& o);
  ComplexMatrix& operator-=(const ComplexMatrix& o);
  ComplexMatrix& operator*=(Complex s);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

/// Kronecker product. Row index of the result is a_row * b.rows() + b_row.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Frobenius norm of a - b.
double distance(const ComplexMatrix& a, const ComplexMatrix& b);

/// a * b - b * a
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

/// trace(a^dagger b)
Complex trace_inner(const ComplexMatrix& a, const ComplexMatrix& b);

namespace pauli {
ComplexMatrix x();
ComplexMatrix y();
ComplexMatrix z();
}  // namespace pauli

}  // namespace entdist
