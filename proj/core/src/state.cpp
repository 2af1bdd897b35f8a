#include "entdist/state.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "entdist/errors.hpp"
#include "entdist/linalg.hpp"
#include "entdist/tolerances.hpp"

namespace entdist {

namespace {

// Mixed-radix digits of a flat index; factor 0 is the most significant.
void split_index(std::size_t flat, const std::vector<std::size_t>& dims, std::vector<std::size_t>& digits) {
  for (std::size_t k = dims.size(); k-- > 0;) {
    digits[k] = flat % dims[k];
    flat /= dims[k];
  }
}

std::size_t join_index(const std::vector<std::size_t>& digits, const std::vector<std::size_t>& dims) {
  std::size_t flat = 0;
  for (std::size_t k = 0; k < dims.size(); ++k) flat = flat * dims[k] + digits[k];
  return flat;
}

std::string join_labels(const LabelSet& labels) {
  std::string out;
  for (const auto& l : labels) out += (out.empty() ? "" : ",") + l;
  return out;
}

}  // namespace

// ---------------------------------------------------------------- FactorShape

FactorShape::FactorShape(std::vector<std::size_t> dims, std::vector<std::string> labels)
    : dims_(std::move(dims)), labels_(std::move(labels)) {
  if (dims_.size() != labels_.size()) throw DimensionError("factor dims and labels differ in length");
  if (dims_.empty()) throw DimensionError("factor shape needs at least one factor");
  for (std::size_t d : dims_) {
    if (d < 2) throw DimensionError("factor dimension must be at least 2");
  }
  std::set<std::string> seen(labels_.begin(), labels_.end());
  if (seen.size() != labels_.size()) throw UnknownLabel("duplicate factor label in {" + join_labels(labels_) + "}");
}

std::size_t FactorShape::total_dim() const {
  return std::accumulate(dims_.begin(), dims_.end(), std::size_t{1}, std::multiplies<>());
}

bool FactorShape::contains(const std::string& label) const {
  return std::find(labels_.begin(), labels_.end(), label) != labels_.end();
}

std::size_t FactorShape::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw UnknownLabel("unknown factor label '" + label + "'");
  return static_cast<std::size_t>(it - labels_.begin());
}

std::vector<bool> FactorShape::mask(const LabelSet& subset) const {
  std::vector<bool> m(dims_.size(), false);
  for (const auto& l : subset) m[index_of(l)] = true;
  return m;
}

FactorShape FactorShape::concat(const FactorShape& other) const {
  auto dims = dims_;
  auto labels = labels_;
  dims.insert(dims.end(), other.dims_.begin(), other.dims_.end());
  labels.insert(labels.end(), other.labels_.begin(), other.labels_.end());
  return {std::move(dims), std::move(labels)};
}

// -------------------------------------------------------------- DensityMatrix

DensityMatrix::DensityMatrix(FactorShape shape, ComplexMatrix mat) : shape_(std::move(shape)), mat_(std::move(mat)) {
  if (!mat_.is_square() || mat_.rows() != shape_.total_dim()) {
    throw DimensionError("density matrix is " + std::to_string(mat_.rows()) + "x" + std::to_string(mat_.cols()) +
                         " but its shape has dimension " + std::to_string(shape_.total_dim()));
  }
  if (!mat_.is_hermitian(Tolerances::kTrace)) throw StateError("density matrix is not Hermitian");
  const Complex tr = mat_.trace();
  if (std::abs(tr - 1.0) > Tolerances::kTrace) {
    throw StateError("density matrix trace is " + std::to_string(tr.real()) + ", expected 1");
  }
  const double smallest = hermitian_eigenvalues(mat_).values.front();
  if (smallest < Tolerances::kPsd) {
    throw StateError("density matrix has negative eigenvalue " + std::to_string(smallest));
  }
}

double DensityMatrix::purity() const {
  const double f = mat_.frobenius_norm();
  return f * f;
}

bool DensityMatrix::is_pure() const { return purity() >= 1.0 - Tolerances::kPurity; }

// ------------------------------------------------------------------ PureState

PureState::PureState(FactorShape shape, std::vector<Complex> amplitudes)
    : shape_(std::move(shape)), amps_(std::move(amplitudes)) {
  if (amps_.size() != shape_.total_dim()) throw DimensionError("amplitude count does not match shape");
  double n2 = 0.0;
  for (const auto& c : amps_) n2 += std::norm(c);
  if (std::abs(std::sqrt(n2) - 1.0) > Tolerances::kNorm) throw StateError("pure state is not normalized");
}

PureState PureState::normalized(FactorShape shape, std::vector<Complex> amplitudes) {
  double n2 = 0.0;
  for (const auto& c : amplitudes) n2 += std::norm(c);
  if (n2 == 0.0) throw StateError("zero vector cannot be normalized");
  const double inv = 1.0 / std::sqrt(n2);
  for (auto& c : amplitudes) c *= inv;
  return {std::move(shape), std::move(amplitudes)};
}

// ---------------------------------------------------------- SeparableEnsemble

SeparableEnsemble::SeparableEnsemble(std::vector<Party> parties, std::vector<Term> terms)
    : parties_(std::move(parties)), terms_(std::move(terms)) {
  if (parties_.empty()) throw PartyError("ensemble needs at least one party");
  if (terms_.empty()) throw ProbabilityError("ensemble needs at least one term");
  std::set<std::string> names;
  for (const auto& p : parties_) {
    if (!names.insert(p.name).second) throw PartyError("duplicate party name '" + p.name + "'");
  }
  joint_shape();  // label uniqueness across parties

  double total = 0.0;
  for (const auto& t : terms_) {
    if (!(t.prob > 0.0)) throw ProbabilityError("term probability must be positive");
    total += t.prob;
    if (t.factors.size() != parties_.size()) throw DimensionError("term has wrong number of factors");
    for (std::size_t k = 0; k < parties_.size(); ++k) {
      if (!(t.factors[k].shape() == parties_[k].shape)) {
        throw DimensionError("factor shape does not match party '" + parties_[k].name + "'");
      }
    }
  }
  if (std::abs(total - 1.0) > Tolerances::kProbabilitySum) {
    throw ProbabilityError("term probabilities sum to " + std::to_string(total));
  }
}

std::size_t SeparableEnsemble::party_index(const std::string& name) const {
  for (std::size_t k = 0; k < parties_.size(); ++k) {
    if (parties_[k].name == name) return k;
  }
  throw PartyError("no party named '" + name + "'");
}

FactorShape SeparableEnsemble::joint_shape() const {
  FactorShape s = parties_.front().shape;
  for (std::size_t k = 1; k < parties_.size(); ++k) s = s.concat(parties_[k].shape);
  return s;
}

// ---------------------------------------------------------------- BlochVector

BlochVector::BlochVector(const Vec3& r) : r_(r) {
  if (norm(r) > 1.0 + 1e-10) throw RangeError("Bloch vector longer than 1");
}

// ----------------------------------------------------------------- operations

DensityMatrix pure_to_density(const PureState& psi) {
  return {psi.shape(), ComplexMatrix::outer(psi.amplitudes(), psi.amplitudes())};
}

DensityMatrix assemble(const SeparableEnsemble& ensemble) {
  const FactorShape shape = ensemble.joint_shape();
  ComplexMatrix total(shape.total_dim(), shape.total_dim());
  for (const auto& term : ensemble.terms()) {
    ComplexMatrix prod = term.factors.front().matrix();
    for (std::size_t k = 1; k < term.factors.size(); ++k) prod = kron(prod, term.factors[k].matrix());
    total += prod * Complex(term.prob);
  }
  return {shape, std::move(total)};
}

ComplexMatrix partial_transpose(const ComplexMatrix& m, const FactorShape& shape, const LabelSet& subset) {
  if (!m.is_square() || m.rows() != shape.total_dim()) throw DimensionError("matrix does not match shape");
  const auto flip = shape.mask(subset);
  const auto& dims = shape.dims();
  const std::size_t n = m.rows();
  ComplexMatrix out(n, n);
  std::vector<std::size_t> ri(dims.size()), ci(dims.size());
  for (std::size_t r = 0; r < n; ++r) {
    split_index(r, dims, ri);
    for (std::size_t c = 0; c < n; ++c) {
      split_index(c, dims, ci);
      auto rr = ri;
      auto cc = ci;
      for (std::size_t k = 0; k < dims.size(); ++k) {
        if (flip[k]) std::swap(rr[k], cc[k]);
      }
      out(join_index(rr, dims), join_index(cc, dims)) = m(r, c);
    }
  }
  return out;
}

ComplexMatrix partial_transpose(const DensityMatrix& rho, const LabelSet& subset) {
  return partial_transpose(rho.matrix(), rho.shape(), subset);
}

DensityMatrix partial_trace(const DensityMatrix& rho, const LabelSet& keep) {
  if (keep.empty()) throw UnknownLabel("partial_trace needs at least one kept label");
  const auto& shape = rho.shape();
  const auto kept = shape.mask(keep);
  std::vector<std::size_t> kdims;
  std::vector<std::string> klabels;
  for (std::size_t k = 0; k < shape.factor_count(); ++k) {
    if (kept[k]) {
      kdims.push_back(shape.dims()[k]);
      klabels.push_back(shape.labels()[k]);
    }
  }
  FactorShape out_shape(kdims, klabels);
  const std::size_t n = rho.dim();
  ComplexMatrix out(out_shape.total_dim(), out_shape.total_dim());
  std::vector<std::size_t> ri(shape.factor_count()), ci(shape.factor_count());
  std::vector<std::size_t> rk(kdims.size()), ck(kdims.size());
  for (std::size_t r = 0; r < n; ++r) {
    split_index(r, shape.dims(), ri);
    for (std::size_t c = 0; c < n; ++c) {
      split_index(c, shape.dims(), ci);
      bool diagonal_in_traced = true;
      std::size_t j = 0;
      for (std::size_t k = 0; k < shape.factor_count(); ++k) {
        if (kept[k]) {
          rk[j] = ri[k];
          ck[j] = ci[k];
          ++j;
        } else if (ri[k] != ci[k]) {
          diagonal_in_traced = false;
          break;
        }
      }
      if (diagonal_in_traced) out(join_index(rk, kdims), join_index(ck, kdims)) += rho.matrix()(r, c);
    }
  }
  return {std::move(out_shape), out.hermitian_part()};
}

DensityMatrix permute_factors(const DensityMatrix& rho, const LabelSet& order) {
  const auto& shape = rho.shape();
  if (order.size() != shape.factor_count()) throw UnknownLabel("permutation must list every label once");
  std::vector<std::size_t> src(order.size());
  std::vector<std::size_t> dims(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    src[k] = shape.index_of(order[k]);
    dims[k] = shape.dims()[src[k]];
  }
  FactorShape out_shape(dims, order);  // rejects repeated labels
  const std::size_t n = rho.dim();
  ComplexMatrix out(n, n);
  std::vector<std::size_t> ri(dims.size()), ci(dims.size()), ro(dims.size()), co(dims.size());
  for (std::size_t r = 0; r < n; ++r) {
    split_index(r, shape.dims(), ri);
    for (std::size_t k = 0; k < dims.size(); ++k) ro[k] = ri[src[k]];
    const std::size_t rr = join_index(ro, dims);
    for (std::size_t c = 0; c < n; ++c) {
      split_index(c, shape.dims(), ci);
      for (std::size_t k = 0; k < dims.size(); ++k) co[k] = ci[src[k]];
      out(rr, join_index(co, dims)) = rho.matrix()(r, c);
    }
  }
  return {std::move(out_shape), std::move(out)};
}

ComplexMatrix embed_local(const FactorShape& shape, const LabelSet& targets, const ComplexMatrix& op) {
  const auto on = shape.mask(targets);
  std::vector<std::size_t> tdims;
  for (std::size_t k = 0; k < shape.factor_count(); ++k) {
    if (on[k]) tdims.push_back(shape.dims()[k]);
  }
  const std::size_t tdim = std::accumulate(tdims.begin(), tdims.end(), std::size_t{1}, std::multiplies<>());
  if (!op.is_square() || op.rows() != tdim) throw DimensionError("local operator does not match target factors");

  const std::size_t n = shape.total_dim();
  const std::size_t f = shape.factor_count();
  ComplexMatrix out(n, n);
  std::vector<std::size_t> ri(f), ci(f), rt(tdims.size()), ct(tdims.size());
  for (std::size_t r = 0; r < n; ++r) {
    split_index(r, shape.dims(), ri);
    for (std::size_t c = 0; c < n; ++c) {
      split_index(c, shape.dims(), ci);
      bool same_rest = true;
      std::size_t j = 0;
      for (std::size_t k = 0; k < f; ++k) {
        if (on[k]) {
          rt[j] = ri[k];
          ct[j] = ci[k];
          ++j;
        } else if (ri[k] != ci[k]) {
          same_rest = false;
          break;
        }
      }
      if (same_rest) out(r, c) = op(join_index(rt, tdims), join_index(ct, tdims));
    }
  }
  return out;
}

BlochVector bloch_from_qubit(const DensityMatrix& rho) {
  if (rho.dim() != 2) throw DimensionError("Bloch vector needs a qubit, got dimension " + std::to_string(rho.dim()));
  const auto& m = rho.matrix();
  // trace(rho sigma_x) = 2 Re m10, trace(rho sigma_y) = 2 Im m10.
  Vec3 r{2.0 * m(1, 0).real(), 2.0 * m(1, 0).imag(), (m(0, 0) - m(1, 1)).real()};
  const double len = norm(r);
  if (len > 1.0) {
    for (auto& x : r) x /= len;  // rounding excess of a validated pure state
  }
  return BlochVector(r);
}

DensityMatrix qubit_from_bloch(const BlochVector& r, const std::string& label) {
  const Complex i(0.0, 1.0);
  ComplexMatrix m{{0.5 * (1.0 + r[2]), 0.5 * (r[0] - i * r[1])}, {0.5 * (r[0] + i * r[1]), 0.5 * (1.0 - r[2])}};
  return {FactorShape::single(2, label), std::move(m)};
}

BlochVector xz_reflect(const BlochVector& r) { return BlochVector({r[0], -r[1], r[2]}); }

namespace {

ComplexMatrix ginibre(std::size_t rows, std::size_t cols, Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix g(rows, cols);
  for (auto& z : g.entries()) {
    const double re = gauss(rng);
    const double im = gauss(rng);
    z = Complex(re, im);
  }
  return g;
}

}  // namespace

DensityMatrix random_density(const FactorShape& shape, std::size_t rank, Rng& rng) {
  const std::size_t dim = shape.total_dim();
  if (rank < 1 || rank > dim) {
    throw RankError("rank " + std::to_string(rank) + " outside [1, " + std::to_string(dim) + "]");
  }
  const ComplexMatrix g = ginibre(dim, rank, rng);
  ComplexMatrix rho = g * g.adjoint();
  rho *= Complex(1.0 / rho.trace().real());
  return {shape, rho.hermitian_part()};
}

DensityMatrix random_density(std::size_t dim, std::size_t rank, std::uint64_t seed) {
  Rng rng(seed);
  return random_density(FactorShape::single(dim, "A"), rank, rng);
}

PureState random_pure(const FactorShape& shape, Rng& rng) {
  const ComplexMatrix g = ginibre(shape.total_dim(), 1, rng);
  const auto e = g.entries();
  return PureState::normalized(shape, std::vector<Complex>(e.begin(), e.end()));
}

PureState random_pure(std::size_t dim, std::uint64_t seed) {
  Rng rng(seed);
  return random_pure(FactorShape::single(dim, "A"), rng);
}

ComplexMatrix random_unitary(std::size_t dim, Rng& rng) {
  ComplexMatrix q = ginibre(dim, dim, rng);
  // Modified Gram-Schmidt on columns; positive R diagonal keeps the Haar measure.
  for (std::size_t j = 0; j < dim; ++j) {
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t k = 0; k < j; ++k) {
        Complex proj = 0.0;
        for (std::size_t r = 0; r < dim; ++r) proj += std::conj(q(r, k)) * q(r, j);
        for (std::size_t r = 0; r < dim; ++r) q(r, j) -= proj * q(r, k);
      }
    }
    double n2 = 0.0;
    for (std::size_t r = 0; r < dim; ++r) n2 += std::norm(q(r, j));
    const double inv = 1.0 / std::sqrt(n2);
    for (std::size_t r = 0; r < dim; ++r) q(r, j) *= inv;
  }
  return q;
}

}  // namespace entdist
