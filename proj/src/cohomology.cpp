#include "gcx/cohomology.hpp"

#include "gcx/errors.hpp"

namespace gcx {

namespace {

using linalg::adjoint;
using linalg::intersect;
using linalg::multiply;
using linalg::quotient_dim;
using linalg::sum;
using linalg::zeros;

Matrix mul(const Matrix& a, const Matrix& b) { return multiply<GaussianRational>(a, b); }
Matrix adj(const Matrix& a) { return adjoint<GaussianRational>(a); }

long as_long(Eigen::Index i) { return static_cast<long>(i); }

std::size_t idx(int k, int n) { return static_cast<std::size_t>(k + n); }

}  // namespace

LocalSpaces local_spaces(const LocalComplex& x) {
  LocalSpaces s{Subspace::kernel(x.del_out),   Subspace::kernel(x.delbar_out), Subspace::kernel(x.ddbar_out),
                Subspace::image(x.del_in),     Subspace::image(x.delbar_in),   Subspace::image(x.ddbar_in),
                Subspace(x.dim)};
  s.ker_d = intersect(s.ker_del, s.ker_delbar);
  return s;
}

CohomologyDims local_cohomology(const LocalSpaces& s) {
  CohomologyDims c;
  c.del = as_long(quotient_dim(s.im_del, s.ker_del));
  c.delbar = as_long(quotient_dim(s.im_delbar, s.ker_delbar));
  c.bc = as_long(quotient_dim(s.im_ddbar, s.ker_d));
  c.aeppli = as_long(quotient_dim(sum(s.im_del, s.im_delbar), s.ker_ddbar));
  return c;
}

VarouchasDims local_varouchas(const LocalSpaces& s) {
  VarouchasDims v;
  v.a = as_long(quotient_dim(s.im_ddbar, intersect(s.im_delbar, s.im_del)));
  v.b = as_long(quotient_dim(s.im_ddbar, intersect(s.ker_delbar, s.im_del)));
  v.c = as_long(quotient_dim(sum(s.ker_delbar, s.im_del), s.ker_ddbar));
  v.d = as_long(quotient_dim(s.im_ddbar, intersect(s.im_delbar, s.ker_del)));
  v.e = as_long(quotient_dim(sum(s.ker_del, s.im_delbar), s.ker_ddbar));
  v.f = as_long(quotient_dim(sum(s.ker_delbar, s.ker_del), s.ker_ddbar));
  return v;
}

bool local_lemma(const LocalSpaces& s, bool full_equality) {
  const Subspace k1 = intersect(s.ker_delbar, s.im_del);
  const Subspace k2 = intersect(s.ker_del, s.im_delbar);
  // quotient_dim verifies im ∂∂̄ ⊆ k1 and ⊆ k2.
  const bool by_dim = quotient_dim(s.im_ddbar, k1) == 0 && quotient_dim(s.im_ddbar, k2) == 0;
  if (!full_equality) return by_dim;
  const bool by_containment = s.im_ddbar.contains(k1) && s.im_ddbar.contains(k2) && k1.contains(k2) &&
                              k2.contains(k1) && k1.contains(s.im_ddbar);
  if (by_containment != by_dim)
    throw InternalError("lemma check: dimension shortcut and subspace equality disagree");
  return by_containment;
}

LocalComplex local_at(const GcsData& g, int k) {
  LocalComplex x;
  x.dim = g.dim(k);
  x.del_in = g.del_at(k - 1);
  x.del_out = g.del_at(k);
  x.delbar_in = g.delbar_at(k + 1);
  x.delbar_out = g.delbar_at(k);
  x.ddbar_in = mul(g.del_at(k - 1), g.delbar_at(k));
  x.ddbar_out = x.ddbar_in;
  return x;
}

PerK<CohomologyDims> gh_dims(const GcsData& g) {
  PerK<CohomologyDims> out;
  for (int k = -g.n(); k <= g.n(); ++k) out.push_back(local_cohomology(local_spaces(local_at(g, k))));
  return out;
}

Matrix degree_block(const Matrix& op, int n2, int to, int from) {
  std::vector<Eigen::Index> rows, cols;
  for (Eigen::Index m = 0; m < (Eigen::Index(1) << n2); ++m) {
    if (degree(static_cast<Mask>(m)) == to) rows.push_back(m);
    if (degree(static_cast<Mask>(m)) == from) cols.push_back(m);
  }
  Matrix out(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j)
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = op(rows[i], cols[j]);
  return out;
}

std::vector<long> de_rham_dims(const LieModel& model) {
  std::vector<long> betti;
  for (int j = 0; j <= model.n2; ++j) {
    const Matrix out = degree_block(model.d_matrix, model.n2, j + 1, j);
    const Matrix in = degree_block(model.d_matrix, model.n2, j, j - 1);
    betti.push_back(as_long(quotient_dim(Subspace::image(in), Subspace::kernel(out))));
  }
  return betti;
}

VarouchasReport varouchas_dims(const GcsData& g, const PerK<CohomologyDims>& gh) {
  const int n = g.n();
  VarouchasReport r;
  for (int k = -n; k <= n; ++k) r.dims.push_back(local_varouchas(local_spaces(local_at(g, k))));
  for (int k = -n; k <= n; ++k) {
    const VarouchasDims& v = r.dims[idx(k, n)];
    const VarouchasDims& mirror = r.dims[idx(-k, n)];
    const CohomologyDims& h = gh[idx(k, n)];
    const std::string at = " at k=" + std::to_string(k);
    if (h.aeppli != h.delbar + v.a + v.c - v.b)
      throw StructuralError("varouchas-aeppli", "Gh_A != Gh_delbar + a + c - b" + at);
    if (h.bc != h.delbar + v.d + v.f - v.e)
      throw StructuralError("varouchas-bc", "Gh_BC != Gh_delbar + d + f - e" + at);
    if (v.d != mirror.b) throw StructuralError("varouchas-conjugation", "d^k != b^-k" + at);
    if (v.e != mirror.c) throw StructuralError("varouchas-conjugation", "e^k != c^-k" + at);
    r.residue_holds.push_back(2 * (h.bc - h.delbar) == v.f + mirror.a);
  }
  return r;
}

Laplacians laplacians(const GcsData& g, int k) {
  const Matrix del_prev = g.del_at(k - 1);      // U^{k-1} → U^k
  const Matrix del_here = g.del_at(k);          // U^k → U^{k+1}
  const Matrix delbar_next = g.delbar_at(k + 1);  // U^{k+1} → U^k
  const Matrix delbar_here = g.delbar_at(k);      // U^k → U^{k-1}

  const Matrix p = mul(del_prev, delbar_here);                    // ∂∂̄ on U^k
  const Matrix q = mul(adj(g.del_at(k - 2)), delbar_here);        // ∂*∂̄ : U^k → U^{k-2}
  const Matrix r = mul(adj(g.delbar_at(k + 2)), del_here);        // ∂̄*∂ : U^k → U^{k+2}
  const Matrix s = mul(g.delbar_at(k - 1), adj(del_prev));        // ∂̄∂* : U^k → U^{k-2}
  const Matrix t = mul(g.del_at(k + 1), adj(delbar_next));        // ∂∂̄* : U^k → U^{k+2}

  Laplacians l;
  l.del = mul(del_prev, adj(del_prev)) + mul(adj(del_here), del_here);
  l.delbar = mul(delbar_next, adj(delbar_next)) + mul(adj(delbar_here), delbar_here);
  l.bc = mul(p, adj(p)) + mul(adj(p), p) + mul(adj(q), q) + mul(adj(r), r) + mul(adj(delbar_here), delbar_here) +
         mul(adj(del_here), del_here);
  l.aeppli = mul(adj(p), p) + mul(p, adj(p)) + mul(adj(s), s) + mul(adj(t), t) + mul(del_prev, adj(del_prev)) +
             mul(delbar_next, adj(delbar_next));
  return l;
}

PerK<CohomologyDims> harmonic_dims(const GcsData& g) {
  PerK<CohomologyDims> out;
  for (int k = -g.n(); k <= g.n(); ++k) {
    const Laplacians l = laplacians(g, k);
    CohomologyDims c;
    c.del = as_long(Subspace::kernel(l.del).dim());
    c.delbar = as_long(Subspace::kernel(l.delbar).dim());
    c.bc = as_long(Subspace::kernel(l.bc).dim());
    c.aeppli = as_long(Subspace::kernel(l.aeppli).dim());
    out.push_back(c);
  }
  return out;
}

bool ddJ_lemma_check(const GcsData& g, int k, bool full_equality) {
  return local_lemma(local_spaces(local_at(g, k)), full_equality);
}

namespace {

// Matrix of [h] ↦ class in ker/im, in the basis of `target_reps`, for each
// column h of `sources`.  Representatives of the target together with `im`
// must form a basis of a space containing all sources.
Matrix class_coordinates(const Matrix& sources, const Matrix& target_reps, const Subspace& im) {
  const Subspace frame = Subspace::from_basis(linalg::hcat<GaussianRational>(target_reps, im.basis()));
  Matrix out = zeros<GaussianRational>(target_reps.cols(), sources.cols());
  for (Eigen::Index j = 0; j < sources.cols(); ++j) {
    const Vector c = frame.coordinates(sources.col(j));
    out.col(j) = c.head(target_reps.cols());
  }
  return out;
}

}  // namespace

PerK<PsiData> psi_maps(const GcsData& g, const PerK<CohomologyDims>& gh) {
  PerK<PsiData> out;
  const int n = g.n();
  for (int k = -n; k <= n; ++k) {
    const Laplacians l = laplacians(g, k);
    const Matrix h_bc = linalg::kernel_basis<GaussianRational>(l.bc);
    const Matrix h_del = linalg::kernel_basis<GaussianRational>(l.del);
    const Matrix h_delbar = linalg::kernel_basis<GaussianRational>(l.delbar);
    const LocalSpaces s = local_spaces(local_at(g, k));

    const Matrix plus = class_coordinates(h_bc, h_del, s.im_del);
    const Matrix minus = class_coordinates(h_bc, h_delbar, s.im_delbar);

    PsiData p;
    p.plus_rank = as_long(linalg::rank<GaussianRational>(plus));
    p.minus_rank = as_long(linalg::rank<GaussianRational>(minus));
    const long plus_formula = as_long(sum(s.ker_d, s.im_del).dim() - s.im_del.dim());
    const long minus_formula = as_long(sum(s.ker_d, s.im_delbar).dim() - s.im_delbar.dim());
    if (p.plus_rank != plus_formula || p.minus_rank != minus_formula)
      throw StructuralError("psi-rank", "harmonic and subspace ranks differ at k=" + std::to_string(k));
    const CohomologyDims& h = gh[idx(k, n)];
    p.plus_injective = p.plus_rank == h.bc;
    p.plus_surjective = p.plus_rank == h.del;
    p.minus_injective = p.minus_rank == h.bc;
    p.minus_surjective = p.minus_rank == h.delbar;
    out.push_back(p);
  }
  return out;
}

DualityCheck duality_check(const PerK<CohomologyDims>& gh) {
  DualityCheck dc;
  const int n = static_cast<int>(gh.size() / 2);
  auto check = [&](int k, const char* name, long lhs, long rhs) {
    ++dc.checked;
    if (lhs != rhs) dc.failures.push_back({k, name, lhs, rhs});
  };
  for (int k = -n; k <= n; ++k) {
    const CohomologyDims& h = gh[idx(k, n)];
    const CohomologyDims& m = gh[idx(-k, n)];
    check(k, "delbar(k)=delbar(-k)", h.delbar, m.delbar);
    check(k, "delbar(k)=del(k)", h.delbar, h.del);
    check(k, "delbar(k)=del(-k)", h.delbar, m.del);
    check(k, "del(k)=delbar(-k)", h.del, m.delbar);
    check(k, "bc(k)=a(-k)", h.bc, m.aeppli);
    check(k, "bc(k)=a(k)", h.bc, h.aeppli);
    check(k, "bc(k)=bc(-k)", h.bc, m.bc);
    check(k, "a(k)=a(-k)", h.aeppli, m.aeppli);
  }
  return dc;
}

FrolicherVerdict frolicher_verdict(const PerK<CohomologyDims>& gh, const PerK<bool>& lemma) {
  FrolicherVerdict v;
  v.lemma = lemma;
  v.equality = true;
  v.lemma_all = true;
  const int n = static_cast<int>(gh.size() / 2);
  for (int k = -n; k <= n; ++k) {
    const CohomologyDims& h = gh[idx(k, n)];
    v.inequality.push_back(h.bc >= h.delbar);
    if (h.bc < h.delbar)
      throw InternalError("Bott-Chern dimension " + std::to_string(h.bc) + " < Dolbeault dimension " +
                          std::to_string(h.delbar) + " at k=" + std::to_string(k));
    if (h.bc != h.delbar) v.equality = false;
    if (!lemma[idx(k, n)]) v.lemma_all = false;
  }
  v.equivalence = v.equality == v.lemma_all;
  return v;
}

}  // namespace gcx
