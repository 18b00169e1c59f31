#ifndef GCX_SPECTRAL_HPP
#define GCX_SPECTRAL_HPP

#include <optional>
#include <vector>

#include "gcx/cohomology.hpp"
#include "gcx/gcs.hpp"

namespace gcx {

/// The canonical spectral sequence computed on the ℤ-graded pieces U^k.
/// E_r(k) = Z_r(k)/B_r(k) where Z_r(k) holds the heads α_0 ∈ U^k of zigzags
/// ∂̄α_0 = 0, ∂α_i = ∂̄α_{i+1} (α_i ∈ U^{k+2i}, i < r), and
/// B_r(k) = im ∂̄ + ∂(tails of length r−1 zigzags ending in U^{k−1}).

/// Heads of length-r zigzags starting in U^k, as a subspace of U^k.
Subspace zigzag_heads(const GcsData& g, int k, int r);

/// Tails α_{r−1} ∈ U^k of length-r zigzags ending in U^k.
Subspace zigzag_tails(const GcsData& g, int k, int r);

PerK<long> page_dims(const GcsData& g, int r);

/// E_1(k) = gh_∂̄^k.
PerK<long> e1_dims(const GcsData& g);

struct SpectralPages {
  std::vector<PerK<long>> pages;  // pages[r-1] is E_r
  int last = 0;                   // number of pages computed
  const PerK<long>& page(int r) const { return pages.at(static_cast<std::size_t>(r - 1)); }
  const PerK<long>& e1() const { return pages.front(); }
  const PerK<long>& e_inf() const { return pages.back(); }
};

/// Pages E_1 .. E_R with R = max(max_page, 2n + 2); the k-grading spans
/// 2n + 1 levels so E_{2n+2} is already E_∞.
SpectralPages spectral_pages(const GcsData& g, int max_page = 1);

struct Degeneration {
  bool degenerate = true;
  std::optional<int> first_live_page;  // smallest r with d_r ≠ 0
};

Degeneration degeneration_check(const SpectralPages& pages);

/// Σ_{k ≡ m mod 2} E_∞(k) against the cohomology of d on ⊕_{k ≡ m} U^k.
struct ParityCheck {
  long even_pages = 0, odd_pages = 0;
  long even_direct = 0, odd_direct = 0;
  bool ok() const { return even_pages == even_direct && odd_pages == odd_direct; }
};

ParityCheck parity_check(const GcsData& g, const SpectralPages& pages);

/// ⊕_k (ker d ∩ U^k)/(im d ∩ U^k) → H_dR is an isomorphism.
struct Decomposition {
  bool holds = false;
  PerK<long> pieces;        // dim (ker d ∩ U^k)/(im d ∩ U^k)
  long piece_total = 0;
  long betti_total = 0;
  long image_rank = 0;      // dim of the span of all pieces in H_dR
};

Decomposition decomposition_check(const GcsData& g, const std::vector<long>& betti);

}  // namespace gcx

#endif  // GCX_SPECTRAL_HPP
