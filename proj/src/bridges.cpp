#include "gcx/bridges.hpp"

#include <map>

#include "gcx/errors.hpp"

namespace gcx {

namespace {

using linalg::multiply;
using linalg::zeros;

const GaussianRational kI = GaussianRational::i();

Matrix mul(const Matrix& a, const Matrix& b) { return multiply<GaussianRational>(a, b); }

Matrix rows_cols(const Matrix& m, const std::vector<Eigen::Index>& rows, const std::vector<Eigen::Index>& cols) {
  Matrix out(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j)
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m(rows[i], cols[j]);
  return out;
}

// The bigraded frame θ^A ∧ θ̄^B, columns grouped by (p, q).
struct Bigrading {
  int n = 0;
  Matrix frame;
  Matrix inverse;
  std::map<std::pair<int, int>, std::vector<Eigen::Index>> cols;

  const std::vector<Eigen::Index>& at(int p, int q) const {
    static const std::vector<Eigen::Index> empty;
    auto it = cols.find({p, q});
    return it == cols.end() ? empty : it->second;
  }
};

Bigrading make_bigrading(const Matrix& J, int n2) {
  const int n = n2 / 2;
  const Matrix shifted = Matrix(J.transpose()) - linalg::identity<GaussianRational>(n2) * kI;
  const Matrix holo = linalg::kernel_basis<GaussianRational>(shifted);
  if (holo.cols() != n)
    throw StructuralError("complex-J", "ker(J^T - i) has dimension " + std::to_string(holo.cols()));
  std::vector<Form> theta, theta_bar;
  for (int a = 0; a < n; ++a) {
    theta.push_back(covector_form(holo.col(a)));
    theta_bar.push_back(theta.back().conj());
  }
  auto product = [&](const std::vector<Form>& fs, unsigned subset) {
    Form f = Form::scalar(n2, GaussianRational(1));
    for (int a = 0; a < n; ++a)
      if (subset & (1u << a)) f = wedge(f, fs[static_cast<std::size_t>(a)]);
    return f;
  };
  Bigrading b;
  b.n = n;
  b.frame = zeros<GaussianRational>(Eigen::Index(1) << n2, Eigen::Index(1) << n2);
  Eigen::Index col = 0;
  for (int p = 0; p <= n; ++p)
    for (int q = 0; q <= n; ++q)
      for (unsigned A = 0; A < (1u << n); ++A) {
        if (degree(A) != p) continue;
        for (unsigned B = 0; B < (1u << n); ++B) {
          if (degree(B) != q) continue;
          b.frame.col(col) = wedge(product(theta, A), product(theta_bar, B)).to_vector();
          b.cols[{p, q}].push_back(col++);
        }
      }
  b.inverse = linalg::inverse<GaussianRational>(b.frame);
  return b;
}

}  // namespace

ComplexBridge dolbeault_bigraded(const LieModel& model, const Matrix& J, const GcsData& g,
                                 const PerK<CohomologyDims>& gh) {
  const int n = model.n();
  const Bigrading bg = make_bigrading(J, model.n2);
  const Matrix d = mul(bg.inverse, mul(model.d_matrix, bg.frame));

  // Integrability: d(Λ^{p,q}) ⊆ Λ^{p+1,q} ⊕ Λ^{p,q+1}.
  for (int p = 0; p <= n; ++p)
    for (int q = 0; q <= n; ++q)
      for (int p2 = 0; p2 <= n; ++p2)
        for (int q2 = 0; q2 <= n; ++q2) {
          if ((p2 == p + 1 && q2 == q) || (p2 == p && q2 == q + 1)) continue;
          if (!linalg::is_zero_matrix<GaussianRational>(rows_cols(d, bg.at(p2, q2), bg.at(p, q))))
            throw StructuralError("nijenhuis", "d maps (" + std::to_string(p) + "," + std::to_string(q) + ") into (" +
                                                   std::to_string(p2) + "," + std::to_string(q2) + ")");
        }

  auto del = [&](int p, int q) { return rows_cols(d, bg.at(p + 1, q), bg.at(p, q)); };
  auto delbar = [&](int p, int q) { return rows_cols(d, bg.at(p, q + 1), bg.at(p, q)); };

  ComplexBridge out;
  out.dims.n = n;
  out.dims.h.assign(static_cast<std::size_t>(n + 1), std::vector<CohomologyDims>(static_cast<std::size_t>(n + 1)));
  out.lemma.assign(static_cast<std::size_t>(n + 1), std::vector<bool>(static_cast<std::size_t>(n + 1), true));
  out.antidiagonal.assign(static_cast<std::size_t>(2 * n + 1), CohomologyDims{});
  for (int p = 0; p <= n; ++p)
    for (int q = 0; q <= n; ++q) {
      LocalComplex x;
      x.dim = static_cast<Eigen::Index>(bg.at(p, q).size());
      x.del_in = del(p - 1, q);
      x.del_out = del(p, q);
      x.delbar_in = delbar(p, q - 1);
      x.delbar_out = delbar(p, q);
      x.ddbar_in = mul(del(p - 1, q), delbar(p - 1, q - 1));
      x.ddbar_out = mul(del(p, q + 1), delbar(p, q));
      const LocalSpaces s = local_spaces(x);
      const CohomologyDims h = local_cohomology(s);
      out.dims.h[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] = h;
      const bool lem = local_lemma(s);
      out.lemma[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] = lem;
      out.lemma_all = out.lemma_all && lem;
      CohomologyDims& sum = out.antidiagonal[static_cast<std::size_t>(p - q + n)];
      sum.del += h.del;
      sum.delbar += h.delbar;
      sum.bc += h.bc;
      sum.aeppli += h.aeppli;
    }
  out.sums_match = out.antidiagonal == gh;
  for (const CohomologyDims& s : out.antidiagonal) out.inequality.push_back(s.bc >= s.delbar);

  out.refines = true;
  for (int k = -n; k <= n; ++k) {
    const Matrix coords = mul(bg.inverse, g.grading.basis(k));
    for (int p = 0; p <= n; ++p)
      for (int q = 0; q <= n; ++q) {
        if (p - q == k) continue;
        for (Eigen::Index r : bg.at(p, q))
          for (Eigen::Index c = 0; c < coords.cols(); ++c)
            if (!coords(r, c).is_zero()) out.refines = false;
      }
  }
  return out;
}

ConjugationCheck complex_conjugation_dualities(const BigradedDims& b) {
  ConjugationCheck c;
  const int n = b.n;
  auto expect = [&](const char* chain, int p, int q, long lhs, long rhs, const std::string& what) {
    ++c.checked;
    if (lhs != rhs) c.failures.push_back({chain, p, q, what + ": " + std::to_string(lhs) + " vs " + std::to_string(rhs)});
  };
  for (int p = 0; p <= n; ++p)
    for (int q = 0; q <= n; ++q) {
      const CohomologyDims& h = b.at(p, q);
      expect("bc", p, q, h.bc, b.at(q, p).bc, "BC(p,q)=BC(q,p)");
      expect("bc", p, q, h.bc, b.at(n - p, n - q).aeppli, "BC(p,q)=A(n-p,n-q)");
      expect("bc", p, q, h.bc, b.at(n - q, n - p).aeppli, "BC(p,q)=A(n-q,n-p)");
      expect("delbar", p, q, h.delbar, b.at(q, p).del, "delbar(p,q)=del(q,p)");
      expect("delbar", p, q, h.delbar, b.at(n - p, n - q).delbar, "delbar(p,q)=delbar(n-p,n-q)");
      expect("delbar", p, q, h.delbar, b.at(n - q, n - p).del, "delbar(p,q)=del(n-q,n-p)");
      if (h.delbar != b.at(q, p).delbar) c.delbar_transpose_symmetric = false;
    }
  return c;
}

SymplecticOps symplectic_ops(const LieModel& model, const Form& omega) {
  const int n2 = model.n2;
  const int n = n2 / 2;
  const Matrix w_inv = linalg::inverse<GaussianRational>(symplectic_map(omega));
  const Eigen::Index size = Eigen::Index(1) << n2;

  std::vector<Matrix> iota;
  for (int a = 0; a < n2; ++a) iota.push_back(contraction_matrix(GenVector::basis(n2, a).vec));

  SymplecticOps ops;
  ops.lambda = zeros<GaussianRational>(size, size);
  for (int a = 0; a < n2; ++a)
    for (int b = 0; b < n2; ++b) {
      const GaussianRational m = w_inv(b, a);
      if (m.is_zero()) continue;
      ops.lambda += mul(iota[static_cast<std::size_t>(b)], iota[static_cast<std::size_t>(a)]) * (m * make_rational(1, 2));
    }
  ops.d_lambda = mul(ops.lambda, model.d_matrix) - mul(model.d_matrix, ops.lambda);

  // Both exponentials are finite: ω∧ and Λ are nilpotent of order n + 1.
  auto exp_nilpotent = [&](const Matrix& x) {
    Matrix total = linalg::identity<GaussianRational>(size);
    Matrix term = total;
    for (int j = 1; j <= n; ++j) {
      term = mul(term, x) * make_rational(1, j);
      total += term;
    }
    if (!linalg::is_zero_matrix<GaussianRational>(mul(term, x)))
      throw InternalError("exponential series did not terminate");
    return total;
  };
  const Matrix e_omega = exp_nilpotent(wedge_matrix(omega) * kI);
  const Matrix e_lambda = exp_nilpotent(ops.lambda * GaussianRational(Rational(0), Rational(-1, 2)));
  ops.phi = mul(e_omega, e_lambda);
  return ops;
}

SymplecticBridge symplectic_bridge(const LieModel& model, const Form& omega, const GcsData& g,
                                   const PerK<CohomologyDims>& gh) {
  const int n2 = model.n2;
  const int n = n2 / 2;
  SymplecticBridge out;
  out.ops = symplectic_ops(model, omega);
  const Matrix& phi = out.ops.phi;

  // φ(Ω^j) = U^{n−j}.
  for (int j = 0; j <= n2; ++j) {
    std::vector<Eigen::Index> cols;
    for (Eigen::Index m = 0; m < (Eigen::Index(1) << n2); ++m)
      if (degree(static_cast<Mask>(m)) == j) cols.push_back(m);
    Matrix phij(phi.rows(), static_cast<Eigen::Index>(cols.size()));
    for (std::size_t c = 0; c < cols.size(); ++c) phij.col(static_cast<Eigen::Index>(c)) = phi.col(cols[c]);
    const Subspace target = Subspace::from_basis(g.grading.basis(n - j));
    if (!(Subspace::span(phij) == target))
      throw StructuralError("phi-grading", "phi does not map degree " + std::to_string(j) + " onto U^" +
                                               std::to_string(n - j));
  }

  const Matrix& frame = g.grading.full_basis();
  const Matrix& frame_inv = g.grading.full_inverse();
  const Matrix delbar_form = mul(frame, mul(g.delbar_total(), frame_inv));
  const Matrix del_form = mul(frame, mul(g.del_total(), frame_inv));
  if (mul(phi, model.d_matrix) != mul(delbar_form, phi))
    throw StructuralError("phi-d", "phi d != delbar phi");
  if (mul(phi, out.ops.d_lambda) != Matrix(mul(del_form, phi) * GaussianRational(Rational(0), Rational(-2))))
    throw StructuralError("phi-dlambda", "phi d^Lambda != -2i del phi");

  // Tseng–Yau on Ω^j with ∂ ↦ d (degree +1) and ∂̄ ↦ d^Λ (degree −1).
  const Matrix& d = model.d_matrix;
  const Matrix& dl = out.ops.d_lambda;
  for (int j = 0; j <= n2; ++j) {
    LocalComplex x;
    x.dim = static_cast<Eigen::Index>(degree_block(d, n2, j, j).cols());
    x.del_in = degree_block(d, n2, j, j - 1);
    x.del_out = degree_block(d, n2, j + 1, j);
    x.delbar_in = degree_block(dl, n2, j, j + 1);
    x.delbar_out = degree_block(dl, n2, j - 1, j);
    x.ddbar_in = mul(degree_block(d, n2, j, j - 1), degree_block(dl, n2, j - 1, j));
    x.ddbar_out = x.ddbar_in;
    const LocalSpaces s = local_spaces(x);
    const CohomologyDims h = local_cohomology(s);
    out.tseng_yau.push_back(h);
    out.betti.push_back(h.del);
    const bool lem = local_lemma(s);
    out.lemma.push_back(lem);
    out.lemma_all = out.lemma_all && lem;
  }
  if (out.betti != de_rham_dims(model)) throw StructuralError("betti", "d-cohomology on forms disagrees with Betti");

  for (int k = -n; k <= n; ++k) {
    const CohomologyDims& h = gh[static_cast<std::size_t>(k + n)];
    const CohomologyDims& ty = out.tseng_yau[static_cast<std::size_t>(n - k)];
    const std::string at = " at k=" + std::to_string(k);
    if (h.delbar != ty.del) throw StructuralError("symplectic-delbar", "gh_delbar != b_{n-k}" + at);
    if (h.del != ty.delbar) throw StructuralError("symplectic-del", "gh_del != H_{d^Lambda}^{n-k}" + at);
    if (h.bc != ty.bc) throw StructuralError("symplectic-bc", "gh_bc != H_BC^{n-k}" + at);
    if (h.aeppli != ty.aeppli) throw StructuralError("symplectic-aeppli", "gh_a != H_A^{n-k}" + at);
  }
  return out;
}

SymplecticCorollary symplectic_corollary_check(const SymplecticBridge& b, bool generalized_lemma) {
  SymplecticCorollary c;
  c.equality = true;
  c.bc_equals_aeppli = true;
  for (std::size_t j = 0; j < b.tseng_yau.size(); ++j) {
    const CohomologyDims& h = b.tseng_yau[j];
    c.inequality.push_back(h.bc >= b.betti[j]);
    if (h.bc != b.betti[j]) c.equality = false;
    if (h.bc != h.aeppli) c.bc_equals_aeppli = false;
  }
  c.lemma = b.lemma_all;
  c.equivalence = c.equality == c.lemma;
  c.matches_generalized = c.lemma == generalized_lemma;
  return c;
}

}  // namespace gcx
