#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "entdist/geometry.hpp"
#include "entdist/matrix.hpp"

namespace entdist {

using LabelSet = std::vector<std::string>;
using Rng = std::mt19937_64;

/// Tensor-factor structure of a Hilbert space, e.g. dims {3, 2, 2} with
/// labels {"A", "B1", "B2"}. Factor 0 is the slowest index of the matrix.
class FactorShape {
 public:
  FactorShape() = default;
  // Throws DimensionError (dim < 2, size mismatch) or UnknownLabel (duplicates).
  FactorShape(std::vector<std::size_t> dims, std::vector<std::string> labels);

  static FactorShape single(std::size_t dim, std::string label) { return {{dim}, {std::move(label)}}; }

  const std::vector<std::size_t>& dims() const { return dims_; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::size_t factor_count() const { return dims_.size(); }
  std::size_t total_dim() const;

  bool contains(const std::string& label) const;
  // Throws UnknownLabel.
  std::size_t index_of(const std::string& label) const;
  // Per-factor membership flags for a label subset; throws UnknownLabel.
  std::vector<bool> mask(const LabelSet& subset) const;

  // Factors of *this followed by those of other; labels must stay unique.
  FactorShape concat(const FactorShape& other) const;

  friend bool operator==(const FactorShape&, const FactorShape&) = default;

 private:
  std::vector<std::size_t> dims_;
  std::vector<std::string> labels_;
};

/// Hermitian, unit-trace, positive semidefinite matrix over a FactorShape.
class DensityMatrix {
 public:
  // Validates every invariant; throws DimensionError or StateError.
  DensityMatrix(FactorShape shape, ComplexMatrix mat);

  const FactorShape& shape() const { return shape_; }
  const ComplexMatrix& matrix() const { return mat_; }
  std::size_t dim() const { return mat_.rows(); }

  double purity() const;
  bool is_pure() const;

 private:
  FactorShape shape_;
  ComplexMatrix mat_;
};

/// Unit vector over a FactorShape.
class PureState {
 public:
  // Throws DimensionError, or StateError when the norm is off by more than 1e-12.
  PureState(FactorShape shape, std::vector<Complex> amplitudes);
  // Rescales amplitudes to unit norm first.
  static PureState normalized(FactorShape shape, std::vector<Complex> amplitudes);

  const FactorShape& shape() const { return shape_; }
  const std::vector<Complex>& amplitudes() const { return amps_; }

 private:
  FactorShape shape_;
  std::vector<Complex> amps_;
};

/// sum_i p_i rho_i^(1) (x) rho_i^(2) (x) ... with one factor per party.
class SeparableEnsemble {
 public:
  struct Party {
    std::string name;
    FactorShape shape;
  };
  struct Term {
    double prob;
    std::vector<DensityMatrix> factors;
  };

  // Throws ProbabilityError for non-positive or non-normalized weights and
  // DimensionError when a factor does not match its party's shape.
  SeparableEnsemble(std::vector<Party> parties, std::vector<Term> terms);

  const std::vector<Party>& parties() const { return parties_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  // Throws PartyError.
  std::size_t party_index(const std::string& name) const;
  FactorShape joint_shape() const;

 private:
  std::vector<Party> parties_;
  std::vector<Term> terms_;
};

/// Real 3-vector of length at most 1.
class BlochVector {
 public:
  // Throws RangeError when |r| > 1 + 1e-10.
  explicit BlochVector(const Vec3& r);
  const Vec3& r() const { return r_; }
  double operator[](int i) const { return r_[i]; }

 private:
  Vec3 r_;
};

DensityMatrix pure_to_density(const PureState& psi);

/// sum_i p_i kron(factors...) in declared party order.
DensityMatrix assemble(const SeparableEnsemble& ensemble);

/// Transposes exactly the factors named in `subset`.
ComplexMatrix partial_transpose(const ComplexMatrix& m, const FactorShape& shape, const LabelSet& subset);
ComplexMatrix partial_transpose(const DensityMatrix& rho, const LabelSet& subset);

/// Traces out every factor not in `keep`; kept factors stay in shape order.
DensityMatrix partial_trace(const DensityMatrix& rho, const LabelSet& keep);

/// Reorders tensor factors so that they follow `order` (a permutation of the labels).
DensityMatrix permute_factors(const DensityMatrix& rho, const LabelSet& order);

/// op acting on the factors `targets` (taken in shape order), identity on
/// the rest. Throws DimensionError when op does not match their joint dimension.
ComplexMatrix embed_local(const FactorShape& shape, const LabelSet& targets, const ComplexMatrix& op);

/// r_i = trace(rho sigma_i). Throws DimensionError for non-qubit input.
BlochVector bloch_from_qubit(const DensityMatrix& rho);
DensityMatrix qubit_from_bloch(const BlochVector& r, const std::string& label = "A");

/// Bloch vector of the transposed state: (x, y, z) -> (x, -y, z).
BlochVector xz_reflect(const BlochVector& r);

// Ginibre-induced sampling: G is dim x rank with i.i.d. standard complex
// Gaussian entries, rho = G G^dagger / trace(G G^dagger). Throws RankError.
DensityMatrix random_density(const FactorShape& shape, std::size_t rank, Rng& rng);
DensityMatrix random_density(std::size_t dim, std::size_t rank, std::uint64_t seed);
PureState random_pure(const FactorShape& shape, Rng& rng);
PureState random_pure(std::size_t dim, std::uint64_t seed);
// Haar unitary via QR of a Ginibre matrix with R's diagonal made positive.
ComplexMatrix random_unitary(std::size_t dim, Rng& rng);

}  // namespace entdist
