#include "oracles.hpp"

#include <algorithm>
#include <cmath>

namespace entdist::oracle {

using LComplex = std::complex<long double>;

std::vector<LComplex> characteristic_polynomial(const ComplexMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::vector<LComplex>> a(n, std::vector<LComplex>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = LComplex(m(i, j).real(), m(i, j).imag());
  }
  std::vector<LComplex> c(n + 1);
  c[n] = 1.0L;
  std::vector<std::vector<LComplex>> mk(n, std::vector<LComplex>(n));  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    // M_k = A M_{k-1} + c_{n-k+1} I
    std::vector<std::vector<LComplex>> next(n, std::vector<LComplex>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        LComplex s = 0.0L;
        for (std::size_t l = 0; l < n; ++l) s += a[i][l] * mk[l][j];
        next[i][j] = s;
      }
      next[i][i] += c[n - k + 1];
    }
    mk = std::move(next);
    // c_{n-k} = -trace(A M_k) / k
    LComplex tr = 0.0L;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t l = 0; l < n; ++l) tr += a[i][l] * mk[l][i];
    }
    c[n - k] = -tr / static_cast<long double>(k);
  }
  return c;
}

namespace {

LComplex horner(const std::vector<LComplex>& c, LComplex z) {
  LComplex v = 0.0L;
  for (std::size_t k = c.size(); k-- > 0;) v = v * z + c[k];
  return v;
}

LComplex horner_derivative(const std::vector<LComplex>& c, LComplex z) {
  LComplex v = 0.0L;
  for (std::size_t k = c.size(); k-- > 1;) v = v * z + static_cast<long double>(k) * c[k];
  return v;
}

}  // namespace

std::vector<LComplex> polynomial_roots(const std::vector<LComplex>& coeffs) {
  const std::size_t n = coeffs.size() - 1;
  long double bound = 0.0L;
  for (std::size_t k = 0; k < n; ++k) bound = std::max(bound, std::abs(coeffs[k]));
  bound += 1.0L;
  std::vector<LComplex> z(n);
  const LComplex seed(0.4L, 0.9L);
  LComplex w = 1.0L;
  for (std::size_t i = 0; i < n; ++i) {
    w *= seed;
    z[i] = w * (bound / std::abs(w));
  }
  for (int iter = 0; iter < 10000; ++iter) {
    long double change = 0.0L;
    for (std::size_t i = 0; i < n; ++i) {
      LComplex denom = 1.0L;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != i) denom *= z[i] - z[j];
      }
      const LComplex step = horner(coeffs, z[i]) / denom;
      z[i] -= step;
      change = std::max(change, std::abs(step));
    }
    if (change < 1e-17L) break;
  }
  for (auto& r : z) {
    for (int k = 0; k < 3; ++k) {
      const LComplex d = horner_derivative(coeffs, r);
      if (std::abs(d) == 0.0L) break;
      r -= horner(coeffs, r) / d;
    }
  }
  return z;
}

std::vector<double> eigenvalues_via_charpoly(const ComplexMatrix& m) {
  // Scale to unit Frobenius norm so the coefficients stay O(1).
  const double scale = std::max(1.0, m.frobenius_norm());
  const ComplexMatrix scaled = m * Complex(1.0 / scale);
  const auto roots = polynomial_roots(characteristic_polynomial(scaled));
  std::vector<double> out;
  for (const auto& r : roots) out.push_back(static_cast<double>(r.real()) * scale);
  std::sort(out.begin(), out.end());
  return out;
}

ComplexMatrix transpose_first_factor(const ComplexMatrix& m, std::size_t da, std::size_t db) {
  ComplexMatrix out(da * db, da * db);
  for (std::size_t a = 0; a < da; ++a) {
    for (std::size_t ap = 0; ap < da; ++ap) {
      // block (a, ap) of the result is block (ap, a) of the input
      for (std::size_t b = 0; b < db; ++b) {
        for (std::size_t bp = 0; bp < db; ++bp) out(a * db + b, ap * db + bp) = m(ap * db + b, a * db + bp);
      }
    }
  }
  return out;
}

int gaussian_rank(std::vector<std::vector<double>> rows, double tol) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  int rank = 0;
  std::size_t r0 = 0;
  double scale = 0.0;
  for (const auto& r : rows) {
    for (double x : r) scale = std::max(scale, std::abs(x));
  }
  if (scale == 0.0) return 0;
  while (r0 < rows.size()) {
    std::size_t pr = r0, pc = 0;
    double best = 0.0;
    for (std::size_t i = r0; i < rows.size(); ++i) {
      for (std::size_t j = 0; j < cols; ++j) {
        if (std::abs(rows[i][j]) > best) {
          best = std::abs(rows[i][j]);
          pr = i;
          pc = j;
        }
      }
    }
    if (best <= tol * scale) break;
    std::swap(rows[r0], rows[pr]);
    for (std::size_t i = r0 + 1; i < rows.size(); ++i) {
      const double f = rows[i][pc] / rows[r0][pc];
      for (std::size_t j = 0; j < cols; ++j) rows[i][j] -= f * rows[r0][j];
    }
    ++rank;
    ++r0;
  }
  return rank;
}

}  // namespace entdist::oracle
