#ifndef GCX_BRIDGES_HPP
#define GCX_BRIDGES_HPP

#include <string>
#include <vector>

#include "gcx/cohomology.hpp"
#include "gcx/gcs.hpp"
#include "gcx/model.hpp"

namespace gcx {

/// h^{p,q} of the Dolbeault bicomplex of a complex-structure model.
struct BigradedDims {
  int n = 0;
  std::vector<std::vector<CohomologyDims>> h;  // h[p][q]
  const CohomologyDims& at(int p, int q) const {
    return h.at(static_cast<std::size_t>(p)).at(static_cast<std::size_t>(q));
  }
};

struct ComplexBridge {
  BigradedDims dims;
  std::vector<std::vector<bool>> lemma;  // classical ∂∂̄-lemma on Λ^{p,q}
  bool lemma_all = true;
  PerK<CohomologyDims> antidiagonal;     // Σ_{p−q=k} h^{p,q}
  bool sums_match = false;               // antidiagonal == gh
  PerK<bool> inequality;                 // Σ h_BC ≥ Σ h_∂̄ along p−q = k
  bool refines = false;                  // each U^k lies in ⊕_{p−q=k} Λ^{p,q}
};

/// Bigrading from Λ^{1,0} = ker(Jᵀ − i) on T*⊗ℂ.  Throws StructuralError if d
/// has components other than (1,0) and (0,1) (J not integrable).
ComplexBridge dolbeault_bigraded(const LieModel& model, const Matrix& J, const GcsData& g,
                                 const PerK<CohomologyDims>& gh);

struct ConjugationCheck {
  struct Failure {
    std::string chain;
    int p, q;
    std::string detail;
  };
  std::vector<Failure> failures;
  int checked = 0;
  bool ok() const { return failures.empty(); }
  /// h_∂̄^{p,q} = h_∂̄^{q,p} for all p, q.  Not implied by conjugation and
  /// false on Iwasawa; reported for information only.
  bool delbar_transpose_symmetric = true;
};

/// h_BC^{p,q} = h_BC^{q,p} = h_A^{n−p,n−q} = h_A^{n−q,n−p} and
/// h_∂̄^{p,q} = h_∂^{q,p} = h_∂̄^{n−p,n−q} = h_∂^{n−q,n−p}.
ConjugationCheck complex_conjugation_dualities(const BigradedDims& b);

struct SymplecticOps {
  Matrix lambda;    // contraction with the bivector −ω⁻¹
  Matrix d_lambda;  // Λd − dΛ
  Matrix phi;       // e^{iω} e^{Λ/2i}
};

SymplecticOps symplectic_ops(const LieModel& model, const Form& omega);

struct SymplecticBridge {
  SymplecticOps ops;
  std::vector<long> betti;
  std::vector<CohomologyDims> tseng_yau;  // per degree j: del = H_d, delbar = H_{d^Λ}, bc, aeppli
  std::vector<bool> lemma;                // dd^Λ-lemma on Ω^j
  bool lemma_all = true;
};

/// Verifies φ(Ω^j) = U^{n−j}, φd = ∂̄φ, φd^Λ = −2i∂φ, and the isomorphisms
/// gh_∂̄^k = b_{n−k}, gh_∂^k = H^{n−k}_{d^Λ}, gh_bc^k = H^{n−k}_BC,
/// gh_a^k = H^{n−k}_A.  Any failure raises StructuralError.
SymplecticBridge symplectic_bridge(const LieModel& model, const Form& omega, const GcsData& g,
                                   const PerK<CohomologyDims>& gh);

struct SymplecticCorollary {
  std::vector<bool> inequality;  // H^j_BC ≥ b_j
  bool equality = false;         // for all j
  bool lemma = false;            // dd^Λ-lemma
  bool equivalence = false;      // equality ⟺ lemma
  bool bc_equals_aeppli = false; // H^j_BC = H^j_A for all j
  bool matches_generalized = false;
};

SymplecticCorollary symplectic_corollary_check(const SymplecticBridge& b, bool generalized_lemma);

}  // namespace gcx

#endif  // GCX_BRIDGES_HPP
