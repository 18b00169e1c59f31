#ifndef GCX_COHOMOLOGY_HPP
#define GCX_COHOMOLOGY_HPP

#include <map>
#include <string>
#include <vector>

#include "gcx/gcs.hpp"
#include "gcx/linalg.hpp"
#include "gcx/model.hpp"

namespace gcx {

/// The maps touching one graded piece X of a complex with two anticommuting
/// differentials ∂, ∂̄ (each squaring to zero).  The same data describes a
/// U^k of a generalized complex structure, a Λ^{p,q} of a Dolbeault
/// bicomplex, or Ω^j with (d, d^Λ) on a symplectic model.
struct LocalComplex {
  Eigen::Index dim = 0;
  Matrix del_in;      // ∂ into X
  Matrix del_out;     // ∂ out of X
  Matrix delbar_in;   // ∂̄ into X
  Matrix delbar_out;  // ∂̄ out of X
  Matrix ddbar_in;    // ∂∂̄ into X
  Matrix ddbar_out;   // ∂∂̄ out of X
};

/// The subspaces of X that every cohomology here is built from.
struct LocalSpaces {
  Subspace ker_del, ker_delbar, ker_ddbar;
  Subspace im_del, im_delbar, im_ddbar;
  Subspace ker_d;  // ker ∂ ∩ ker ∂̄
};

LocalSpaces local_spaces(const LocalComplex& x);

struct CohomologyDims {
  long del = 0;
  long delbar = 0;
  long bc = 0;
  long aeppli = 0;
  friend bool operator==(const CohomologyDims&, const CohomologyDims&) = default;
};

/// ker ∂/im ∂, ker ∂̄/im ∂̄, (ker ∂ ∩ ker ∂̄)/im ∂∂̄, ker ∂∂̄/(im ∂ + im ∂̄).
CohomologyDims local_cohomology(const LocalSpaces& s);

struct VarouchasDims {
  long a = 0, b = 0, c = 0, d = 0, e = 0, f = 0;
  friend bool operator==(const VarouchasDims&, const VarouchasDims&) = default;
};

/// A = (im ∂̄ ∩ im ∂)/im ∂∂̄      B = (ker ∂̄ ∩ im ∂)/im ∂∂̄    C = ker ∂∂̄/(ker ∂̄ + im ∂)
/// D = (im ∂̄ ∩ ker ∂)/im ∂∂̄      E = ker ∂∂̄/(ker ∂ + im ∂̄)   F = ker ∂∂̄/(ker ∂̄ + ker ∂)
VarouchasDims local_varouchas(const LocalSpaces& s);

/// ker ∂̄ ∩ im ∂ = ker ∂ ∩ im ∂̄ = im ∂∂̄ on X.  The default compares dimensions
/// (the containments im ∂∂̄ ⊆ each side are verified); `full_equality`
/// additionally checks mutual containment of all three spaces.
bool local_lemma(const LocalSpaces& s, bool full_equality = false);

/// The piece U^k of a generalized complex structure.
LocalComplex local_at(const GcsData& g, int k);

/// Per-k table indexed by k + n.
template <typename T>
using PerK = std::vector<T>;

PerK<CohomologyDims> gh_dims(const GcsData& g);

/// Betti numbers of the Chevalley–Eilenberg complex, degrees 0..2n.
std::vector<long> de_rham_dims(const LieModel& model);

struct VarouchasReport {
  PerK<VarouchasDims> dims;
  /// 2(gh_bc^k − gh_∂̄^k) = f^k + a^{−k}; this step also uses the ±k dimension equalities.
  PerK<bool> residue_holds;
};

/// Computes the six spaces and verifies both exact-sequence identities and
/// d^k = b^{−k}, e^k = c^{−k}.  Failures raise StructuralError.
VarouchasReport varouchas_dims(const GcsData& g, const PerK<CohomologyDims>& gh);

/// Kernel dimensions of Δ_∂, Δ_∂̄, Δ_BC, Δ_A for the inner product making the
/// U^k bases orthonormal (adjoint = conjugate transpose).
PerK<CohomologyDims> harmonic_dims(const GcsData& g);

/// Laplacians on U^k, exposed for tests.
struct Laplacians {
  Matrix del, delbar, bc, aeppli;
};
Laplacians laplacians(const GcsData& g, int k);

bool ddJ_lemma_check(const GcsData& g, int k, bool full_equality = false);

struct PsiData {
  long plus_rank = 0;   // GH_BC → GH_∂
  long minus_rank = 0;  // GH_BC → GH_∂̄
  bool plus_injective = false, plus_surjective = false;
  bool minus_injective = false, minus_surjective = false;
};

/// The inclusion-induced maps out of Bott–Chern cohomology, computed as
/// matrices between harmonic bases and cross-checked against a rank formula.
PerK<PsiData> psi_maps(const GcsData& g, const PerK<CohomologyDims>& gh);

struct DualityCheck {
  struct Equality {
    int k;
    std::string name;
    long lhs, rhs;
  };
  std::vector<Equality> failures;
  int checked = 0;
  bool ok() const { return failures.empty(); }
};

/// The eight dimension equalities per k:
///   ∂̄(k)=∂̄(−k), ∂̄(k)=∂(k), ∂̄(k)=∂(−k), ∂(k)=∂̄(−k),
///   BC(k)=A(−k), BC(k)=A(k), BC(k)=BC(−k), A(k)=A(−k).
DualityCheck duality_check(const PerK<CohomologyDims>& gh);

struct FrolicherVerdict {
  PerK<bool> inequality;   // gh_bc^k ≥ gh_∂̄^k
  PerK<bool> lemma;        // per-k lemma
  bool equality = false;   // gh_bc^k = gh_∂̄^k for all k
  bool lemma_all = false;
  bool equivalence = false;  // equality ⟺ lemma_all
};

/// Throws InternalError if the inequality fails somewhere.  Disagreement
/// between equality-for-all-k and the lemma is reported in `equivalence`:
/// the Iwasawa model has equal totals at every k without the lemma.
FrolicherVerdict frolicher_verdict(const PerK<CohomologyDims>& gh, const PerK<bool>& lemma);

/// Degree blocks of a form-space operator: Ω^from → Ω^to in monomial coordinates.
Matrix degree_block(const Matrix& op, int n2, int to, int from);

}  // namespace gcx

#endif  // GCX_COHOMOLOGY_HPP
