#include "gcx/spectral.hpp"

#include <algorithm>
#include <numeric>

namespace gcx {

namespace {

using linalg::multiply;
using linalg::quotient_dim;
using linalg::zeros;

// Kernel of the zigzag system on U^k ⊕ U^{k+2} ⊕ … ⊕ U^{k+2(r−1)}.
// Returns the kernel basis and the row offsets of each component.
Matrix zigzag_kernel(const GcsData& g, int k, int r, std::vector<Eigen::Index>& offsets) {
  offsets.assign(1, 0);
  for (int i = 0; i < r; ++i) offsets.push_back(offsets.back() + g.dim(k + 2 * i));
  Eigen::Index rows = g.dim(k - 1);
  for (int i = 0; i + 1 < r; ++i) rows += g.dim(k + 2 * i + 1);
  Matrix sys = zeros<GaussianRational>(rows, offsets.back());

  sys.block(0, 0, g.dim(k - 1), g.dim(k)) = g.delbar_at(k);
  Eigen::Index row = g.dim(k - 1);
  for (int i = 0; i + 1 < r; ++i) {
    const int level = k + 2 * i;
    const Eigen::Index h = g.dim(level + 1);
    sys.block(row, offsets[i], h, g.dim(level)) = g.del_at(level);
    sys.block(row, offsets[i + 1], h, g.dim(level + 2)) = -g.delbar_at(level + 2);
    row += h;
  }
  return linalg::kernel_basis<GaussianRational>(sys);
}

long as_long(Eigen::Index i) { return static_cast<long>(i); }

}  // namespace

Subspace zigzag_heads(const GcsData& g, int k, int r) {
  std::vector<Eigen::Index> off;
  const Matrix ker = zigzag_kernel(g, k, r, off);
  return Subspace::span(Matrix(ker.topRows(g.dim(k))));
}

Subspace zigzag_tails(const GcsData& g, int k, int r) {
  const int start = k - 2 * (r - 1);
  std::vector<Eigen::Index> off;
  const Matrix ker = zigzag_kernel(g, start, r, off);
  return Subspace::span(Matrix(ker.middleRows(off[static_cast<std::size_t>(r - 1)], g.dim(k))));
}

PerK<long> page_dims(const GcsData& g, int r) {
  PerK<long> out;
  for (int k = -g.n(); k <= g.n(); ++k) {
    const Subspace z = zigzag_heads(g, k, r);
    Subspace b = Subspace::image(g.delbar_at(k + 1));
    if (r >= 2) {
      const Subspace tails = zigzag_tails(g, k - 1, r - 1);
      b = linalg::sum(b, linalg::map_subspace(g.del_at(k - 1), tails));
    }
    out.push_back(as_long(quotient_dim(b, z)));
  }
  return out;
}

PerK<long> e1_dims(const GcsData& g) { return page_dims(g, 1); }

SpectralPages spectral_pages(const GcsData& g, int max_page) {
  SpectralPages s;
  s.last = std::max(max_page, 2 * g.n() + 2);
  for (int r = 1; r <= s.last; ++r) s.pages.push_back(page_dims(g, r));
  return s;
}

Degeneration degeneration_check(const SpectralPages& pages) {
  Degeneration d;
  for (int r = 1; r < pages.last; ++r) {
    if (pages.page(r) != pages.page(r + 1)) {
      d.degenerate = false;
      d.first_live_page = r;
      break;
    }
  }
  return d;
}

namespace {

// Rows of the U^k block inside full U-coordinates.
Matrix embed(const GcsData& g, int k, const Matrix& local) {
  const Eigen::Index size = g.grading.full_basis().cols();
  Matrix out = zeros<GaussianRational>(size, local.cols());
  out.middleRows(g.grading.offset(k), g.dim(k)) = local;
  return out;
}

Matrix coordinate_block(const GcsData& g, int k) {
  return embed(g, k, linalg::identity<GaussianRational>(g.dim(k)));
}

}  // namespace

ParityCheck parity_check(const GcsData& g, const SpectralPages& pages) {
  ParityCheck p;
  const int n = g.n();
  const PerK<long>& inf = pages.e_inf();
  for (int k = -n; k <= n; ++k) ((k % 2 == 0) ? p.even_pages : p.odd_pages) += inf[static_cast<std::size_t>(k + n)];

  // d restricted to one parity lands in the other.
  auto parity_space = [&](int parity) {
    Matrix gens = zeros<GaussianRational>(g.grading.full_basis().cols(), 0);
    for (int k = -n; k <= n; ++k)
      if (((k % 2) + 2) % 2 == parity) gens = linalg::hcat<GaussianRational>(gens, coordinate_block(g, k));
    return gens;
  };
  const Matrix even = parity_space(0), odd = parity_space(1);
  auto homology = [&](const Matrix& here, const Matrix& there) {
    const Subspace ker = linalg::map_subspace(here, Subspace::kernel(multiply<GaussianRational>(g.d_graded, here)));
    const Subspace im = Subspace::image(multiply<GaussianRational>(g.d_graded, there));
    return as_long(quotient_dim(im, ker));
  };
  p.even_direct = homology(even, odd);
  p.odd_direct = homology(odd, even);
  return p;
}

Decomposition decomposition_check(const GcsData& g, const std::vector<long>& betti) {
  Decomposition dec;
  const int n = g.n();
  const Subspace im_d = Subspace::image(g.d_graded);
  Matrix closed_all = zeros<GaussianRational>(g.grading.full_basis().cols(), 0);
  for (int k = -n; k <= n; ++k) {
    const Subspace closed =
        Subspace::kernel(linalg::vcat<GaussianRational>(g.del_at(k), g.delbar_at(k)));
    const Subspace closed_full = Subspace::from_basis(embed(g, k, closed.basis()));
    const Subspace exact_here = linalg::intersect(im_d, Subspace::from_basis(coordinate_block(g, k)));
    dec.pieces.push_back(as_long(quotient_dim(exact_here, closed_full)));
    closed_all = linalg::hcat<GaussianRational>(closed_all, closed_full.basis());
  }
  dec.piece_total = std::accumulate(dec.pieces.begin(), dec.pieces.end(), 0L);
  dec.betti_total = std::accumulate(betti.begin(), betti.end(), 0L);
  const Subspace span = linalg::sum(Subspace::span(closed_all), im_d);
  dec.image_rank = as_long(span.dim() - im_d.dim());
  dec.holds = dec.piece_total == dec.betti_total && dec.image_rank == dec.piece_total;
  return dec;
}

}  // namespace gcx
