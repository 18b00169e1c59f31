#ifndef GCX_GCS_HPP
#define GCX_GCS_HPP

#include <string>
#include <vector>

#include "gcx/errors.hpp"
#include "gcx/exterior.hpp"
#include "gcx/linalg.hpp"
#include "gcx/model.hpp"

namespace gcx {

/// Builds 𝒥 on (T⊕T*)⊗ℂ in the basis e_1..e_2n, e^1..e^2n and checks
/// 𝒥² = −1 and orthogonality for the natural pairing.
///
///   complex J       → [[−J, 0], [0, Jᵀ]]
///   symplectic ω    → [[0, −ω⁻¹], [ω, 0]]  with ω: X ↦ ι_X ω
///   spinor ρ        → +i on the Clifford annihilator of ρ, −i on its conjugate
///   matrix          → as given
Matrix build_J(const StructureSpec& spec, int n2);

/// Matrix of X ↦ ι_X ω for a 2-form ω.
Matrix symplectic_map(const Form& omega);

/// Clifford annihilator {x : x·ρ = 0} of a form, as a basis of generalized vectors.
std::vector<GenVector> annihilator(const Form& rho);

/// Basis of ker(𝒥 − i); throws StructuralError unless its dimension is 2n.
std::vector<GenVector> eigenbundle_L(const Matrix& J);

/// Generator of the joint kernel of the Clifford actions of L, normalized so
/// its first nonzero coefficient in canonical monomial order is 1.
Form canonical_line(const std::vector<GenVector>& L);

/// The grading Λ•⊗ℂ = U^{−n} ⊕ … ⊕ U^n with U^{n−j} = ∧^j L̄ · U^n.
class UGrading {
 public:
  UGrading() = default;
  UGrading(int n, std::vector<Matrix> bases);

  int n() const { return n_; }
  /// Basis of U^k as columns of forms (2^{2n} rows).
  const Matrix& basis(int k) const { return bases_.at(static_cast<std::size_t>(k + n_)); }
  Eigen::Index dim(int k) const { return (k < -n_ || k > n_) ? 0 : basis(k).cols(); }
  Eigen::Index offset(int k) const { return offsets_.at(static_cast<std::size_t>(k + n_)); }

  /// All bases side by side, k = −n first.
  const Matrix& full_basis() const { return full_; }
  const Matrix& full_inverse() const { return inverse_; }

  /// Block of a U-coordinate matrix mapping U^from → U^to.
  Matrix block(const Matrix& graded, int to, int from) const;

  /// Converts a form-space operator to U-coordinates.
  Matrix to_graded(const Matrix& op) const;

 private:
  int n_ = 0;
  std::vector<Matrix> bases_;
  std::vector<Eigen::Index> offsets_;
  Matrix full_;
  Matrix inverse_;
};

UGrading uk_decomposition(const std::vector<GenVector>& L, const Form& canonical);

struct IntegrabilityViolation {
  int k;       // source level
  int m;       // offending target level
  Eigen::Index column;  // basis element of U^k
};

struct Integrability {
  bool integrable = true;
  std::vector<IntegrabilityViolation> violations;
};

/// d maps U^k into U^{k−1} ⊕ U^{k+1} for every k.
Integrability check_integrability(const LieModel& model, const UGrading& grading);

/// The generalized complex data of a model.  del[k+n] : U^k → U^{k+1} and
/// delbar[k+n] : U^k → U^{k−1}, in the U^k bases; maps leaving [−n, n] have
/// zero rows.
struct GcsData {
  int n2 = 0;
  Matrix J;
  std::vector<GenVector> L;
  Form canonical;
  UGrading grading;
  Matrix d_graded;  // d in U-coordinates
  std::vector<Matrix> del;
  std::vector<Matrix> delbar;

  int n() const { return n2 / 2; }
  Eigen::Index dim(int k) const { return grading.dim(k); }

  /// ∂ : U^k → U^{k+1}; a 0-column/row matrix outside the range.
  Matrix del_at(int k) const;
  Matrix delbar_at(int k) const;

  /// ∂ and ∂̄ assembled on all of U-coordinates.
  Matrix del_total() const;
  Matrix delbar_total() const;
};

/// Runs build_J → L → U^n → U^k → integrability → ∂, ∂̄ and verifies
/// ∂² = ∂̄² = ∂∂̄ + ∂̄∂ = 0, d = ∂ + ∂̄, dd^𝒥 = −2i∂∂̄ and that conjugation maps U^k onto U^{−k}.
GcsData build_gcs(const LieModel& model, const StructureSpec& spec);

/// Same pipeline from an explicit 𝒥.
GcsData build_gcs_from_J(const LieModel& model, const Matrix& J);

}  // namespace gcx

#endif  // GCX_GCS_HPP
