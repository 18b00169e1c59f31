#include "gcx/gcs.hpp"

#include <numeric>

namespace gcx {

namespace {

using linalg::hcat;
using linalg::identity;
using linalg::is_zero_matrix;
using linalg::multiply;
using linalg::zeros;

const GaussianRational kI = GaussianRational::i();

void check_J(const Matrix& J, int n2) {
  const Eigen::Index size = 2 * n2;
  if (J.rows() != size || J.cols() != size)
    throw StructuralError("J-shape", "expected a " + std::to_string(size) + "x" + std::to_string(size) + " matrix");
  const Matrix sq = multiply<GaussianRational>(J, J);
  if (sq != Matrix(-identity<GaussianRational>(size))) throw StructuralError("J-squared", "J^2 != -1");
  const Matrix g = pairing_gram(n2);
  const Matrix pulled = multiply<GaussianRational>(Matrix(J.transpose()), multiply<GaussianRational>(g, J));
  if (pulled != g) throw StructuralError("J-orthogonal", "J is not orthogonal for the natural pairing");
}

long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

Matrix symplectic_map(const Form& omega) {
  const int n2 = omega.n2();
  Matrix w = zeros<GaussianRational>(n2, n2);
  // ι_{e_i} ω, column i.
  for (int i = 0; i < n2; ++i) {
    Vector x = zeros<GaussianRational>(n2, 1);
    x(i) = GaussianRational(1);
    const Form image = contract(x, omega);
    for (const auto& [m, c] : image.terms()) {
      if (degree(m) != 1) throw StructuralError("omega", "omega must be a 2-form");
      w(__builtin_ctz(m), i) = c;
    }
  }
  return w;
}

std::vector<GenVector> annihilator(const Form& rho) {
  const int n2 = rho.n2();
  Matrix action(Eigen::Index(1) << n2, 2 * n2);
  for (int j = 0; j < 2 * n2; ++j) action.col(j) = clifford_act(GenVector::basis(n2, j), rho).to_vector();
  const Matrix k = linalg::kernel_basis<GaussianRational>(action);
  std::vector<GenVector> out;
  for (Eigen::Index j = 0; j < k.cols(); ++j) out.push_back(GenVector::from_coords(k.col(j)));
  return out;
}

Matrix build_J(const StructureSpec& spec, int n2) {
  Matrix J = zeros<GaussianRational>(2 * n2, 2 * n2);
  switch (spec.kind) {
    case StructureKind::complex_endomorphism: {
      if (spec.matrix.rows() != n2 || spec.matrix.cols() != n2)
        throw StructuralError("J-shape", "complex structure must be " + std::to_string(n2) + "x" + std::to_string(n2));
      if (multiply<GaussianRational>(spec.matrix, spec.matrix) != Matrix(-identity<GaussianRational>(n2)))
        throw StructuralError("J-squared", "the endomorphism J does not square to -1");
      J.topLeftCorner(n2, n2) = -spec.matrix;
      J.bottomRightCorner(n2, n2) = spec.matrix.transpose();
      break;
    }
    case StructureKind::symplectic_form: {
      const Matrix w = symplectic_map(spec.form);
      Matrix winv;
      try {
        winv = linalg::inverse<GaussianRational>(w);
      } catch (const std::domain_error&) {
        throw StructuralError("omega-degenerate", "omega = " + spec.form.to_string() + " is degenerate");
      }
      J.topRightCorner(n2, n2) = -winv;
      J.bottomLeftCorner(n2, n2) = w;
      break;
    }
    case StructureKind::raw_matrix:
      J = spec.matrix;
      break;
    case StructureKind::pure_spinor: {
      if (spec.form.n2() != n2) throw StructuralError("spinor", "spinor dimension does not match the model");
      const std::vector<GenVector> L = annihilator(spec.form);
      if (static_cast<int>(L.size()) != n2)
        throw StructuralError("spinor-pure", "annihilator has dimension " + std::to_string(L.size()) + ", expected " +
                                                 std::to_string(n2));
      Matrix P(2 * n2, 2 * n2);
      for (int j = 0; j < n2; ++j) {
        P.col(j) = L[static_cast<std::size_t>(j)].coords();
        P.col(n2 + j) = linalg::conjugate<GaussianRational>(Matrix(L[static_cast<std::size_t>(j)].coords()));
      }
      if (linalg::rank<GaussianRational>(P) != 2 * n2)
        throw StructuralError("spinor-real-index", "L and its conjugate intersect; not a generalized complex structure");
      Matrix D = zeros<GaussianRational>(2 * n2, 2 * n2);
      for (int j = 0; j < n2; ++j) {
        D(j, j) = kI;
        D(n2 + j, n2 + j) = -kI;
      }
      J = multiply<GaussianRational>(multiply<GaussianRational>(P, D), linalg::inverse<GaussianRational>(P));
      break;
    }
  }
  check_J(J, n2);
  return J;
}

std::vector<GenVector> eigenbundle_L(const Matrix& J) {
  const Eigen::Index size = J.rows();
  Matrix shifted = J;
  for (Eigen::Index i = 0; i < size; ++i) shifted(i, i) -= kI;
  const Matrix k = linalg::kernel_basis<GaussianRational>(shifted);
  if (k.cols() * 2 != size)
    throw StructuralError("L-dimension", "i-eigenspace has dimension " + std::to_string(k.cols()) + ", expected " +
                                             std::to_string(size / 2));
  std::vector<GenVector> L;
  for (Eigen::Index j = 0; j < k.cols(); ++j) L.push_back(GenVector::from_coords(k.col(j)));
  for (const auto& a : L)
    for (const auto& b : L)
      if (!pairing(a, b).is_zero()) throw StructuralError("L-isotropic", "the i-eigenbundle is not isotropic");
  return L;
}

Form canonical_line(const std::vector<GenVector>& L) {
  if (L.empty()) throw StructuralError("canonical-line", "empty L");
  const int n2 = L.front().n2();
  const Eigen::Index size = Eigen::Index(1) << n2;
  Matrix stacked(size * static_cast<Eigen::Index>(L.size()), size);
  for (std::size_t j = 0; j < L.size(); ++j)
    stacked.middleRows(static_cast<Eigen::Index>(j) * size, size) = clifford_matrix(L[j]);
  const Matrix k = linalg::kernel_basis<GaussianRational>(stacked);
  if (k.cols() != 1)
    throw StructuralError("canonical-line", "joint annihilator of L has dimension " + std::to_string(k.cols()) +
                                                ", expected 1");
  Form rho = Form::from_vector(n2, k.col(0));
  Mask lead = rho.terms().begin()->first;
  for (const auto& [m, c] : rho.terms())
    if (monomial_less(m, lead)) lead = m;
  rho *= rho.coeff(lead).inverse();
  return rho;
}

UGrading::UGrading(int n, std::vector<Matrix> bases) : n_(n), bases_(std::move(bases)) {
  if (static_cast<int>(bases_.size()) != 2 * n + 1) throw std::invalid_argument("UGrading: need 2n+1 levels");
  const Eigen::Index rows = bases_.front().rows();
  Eigen::Index total = 0;
  for (const Matrix& b : bases_) {
    offsets_.push_back(total);
    total += b.cols();
  }
  full_ = Matrix(rows, total);
  for (std::size_t j = 0; j < bases_.size(); ++j) full_.middleCols(offsets_[j], bases_[j].cols()) = bases_[j];
  try {
    inverse_ = linalg::inverse<GaussianRational>(full_);
  } catch (const std::exception&) {
    throw StructuralError("U-decomposition", "the U^k do not span the form space as a direct sum");
  }
}

Matrix UGrading::block(const Matrix& graded, int to, int from) const {
  if (to < -n_ || to > n_ || from < -n_ || from > n_) return zeros<GaussianRational>(dim(to), dim(from));
  return graded.block(offset(to), offset(from), dim(to), dim(from));
}

Matrix UGrading::to_graded(const Matrix& op) const {
  return multiply<GaussianRational>(inverse_, multiply<GaussianRational>(op, full_));
}

UGrading uk_decomposition(const std::vector<GenVector>& L, const Form& canonical) {
  const int n2 = canonical.n2();
  const int n = n2 / 2;
  const int count = static_cast<int>(L.size());
  std::vector<Matrix> conj_ops;
  for (const auto& l : L) conj_ops.push_back(clifford_matrix(l.conj()));
  const Vector rho = canonical.to_vector();

  std::vector<Matrix> bases(static_cast<std::size_t>(2 * n + 1));
  for (int j = 0; j <= count; ++j) {
    // All j-subsets in lexicographic order, applied right to left.
    std::vector<Vector> span;
    std::vector<int> idx(static_cast<std::size_t>(j));
    std::iota(idx.begin(), idx.end(), 0);
    for (;;) {
      Vector v = rho;
      for (int t = j - 1; t >= 0; --t) v = multiply<GaussianRational>(conj_ops[static_cast<std::size_t>(idx[t])], v);
      span.push_back(v);
      int t = j - 1;
      while (t >= 0 && idx[static_cast<std::size_t>(t)] == count - j + t) --t;
      if (t < 0) break;
      ++idx[static_cast<std::size_t>(t)];
      for (int u = t + 1; u < j; ++u) idx[static_cast<std::size_t>(u)] = idx[static_cast<std::size_t>(u - 1)] + 1;
    }
    Matrix gens(rho.rows(), static_cast<Eigen::Index>(span.size()));
    for (std::size_t c = 0; c < span.size(); ++c) gens.col(static_cast<Eigen::Index>(c)) = span[c];
    Subspace s = Subspace::span(gens);
    const int k = n - j;
    if (s.dim() != binomial(n2, j))
      throw StructuralError("U-dimension", "U^" + std::to_string(k) + " has dimension " + std::to_string(s.dim()) +
                                               ", expected " + std::to_string(binomial(n2, j)));
    bases[static_cast<std::size_t>(k + n)] = s.basis();
  }
  return UGrading(n, std::move(bases));
}

Integrability check_integrability(const LieModel& model, const UGrading& grading) {
  Integrability out;
  const Matrix graded = grading.to_graded(model.d_matrix);
  const int n = grading.n();
  for (int k = -n; k <= n; ++k) {
    for (int m = -n; m <= n; ++m) {
      if (m == k - 1 || m == k + 1) continue;
      const Matrix b = grading.block(graded, m, k);
      for (Eigen::Index c = 0; c < b.cols(); ++c) {
        if (!is_zero_matrix<GaussianRational>(b.col(c))) out.violations.push_back({k, m, c});
      }
    }
  }
  out.integrable = out.violations.empty();
  return out;
}

Matrix GcsData::del_at(int k) const {
  if (k < -n() || k > n()) return zeros<GaussianRational>(dim(k + 1), 0);
  return del[static_cast<std::size_t>(k + n())];
}

Matrix GcsData::delbar_at(int k) const {
  if (k < -n() || k > n()) return zeros<GaussianRational>(dim(k - 1), 0);
  return delbar[static_cast<std::size_t>(k + n())];
}

Matrix GcsData::del_total() const {
  const Eigen::Index size = grading.full_basis().cols();
  Matrix t = zeros<GaussianRational>(size, size);
  for (int k = -n(); k < n(); ++k) t.block(grading.offset(k + 1), grading.offset(k), dim(k + 1), dim(k)) = del_at(k);
  return t;
}

Matrix GcsData::delbar_total() const {
  const Eigen::Index size = grading.full_basis().cols();
  Matrix t = zeros<GaussianRational>(size, size);
  for (int k = -n() + 1; k <= n(); ++k)
    t.block(grading.offset(k - 1), grading.offset(k), dim(k - 1), dim(k)) = delbar_at(k);
  return t;
}

GcsData build_gcs_from_J(const LieModel& model, const Matrix& J) {
  GcsData g;
  g.n2 = model.n2;
  check_J(J, model.n2);
  g.J = J;
  g.L = eigenbundle_L(J);
  g.canonical = canonical_line(g.L);
  g.grading = uk_decomposition(g.L, g.canonical);

  const Integrability integ = check_integrability(model, g.grading);
  if (!integ.integrable) {
    const auto& v = integ.violations.front();
    throw StructuralError("integrability", "d maps U^" + std::to_string(v.k) + " into U^" + std::to_string(v.m) +
                                               " (" + std::to_string(integ.violations.size()) + " violations)");
  }
  g.d_graded = g.grading.to_graded(model.d_matrix);
  const int n = g.n();
  for (int k = -n; k <= n; ++k) {
    g.del.push_back(g.grading.block(g.d_graded, k + 1, k));
    g.delbar.push_back(g.grading.block(g.d_graded, k - 1, k));
  }

  const Matrix dp = g.del_total();
  const Matrix dm = g.delbar_total();
  if (Matrix(dp + dm) != g.d_graded) throw StructuralError("d-split", "d != del + delbar");
  if (!is_zero_matrix<GaussianRational>(multiply<GaussianRational>(dp, dp)))
    throw StructuralError("del-squared", "del^2 != 0");
  if (!is_zero_matrix<GaussianRational>(multiply<GaussianRational>(dm, dm)))
    throw StructuralError("delbar-squared", "delbar^2 != 0");
  const Matrix dpdm = multiply<GaussianRational>(dp, dm);
  if (Matrix(dpdm + multiply<GaussianRational>(dm, dp)) != zeros<GaussianRational>(dp.rows(), dp.cols()))
    throw StructuralError("del-delbar-anticommute", "del delbar + delbar del != 0");
  const Matrix dJ = Matrix(dp - dm) * GaussianRational(-kI);
  // d^J d = -2i del delbar, hence d d^J = -2i delbar del = 2i del delbar.
  const Matrix dJd = multiply<GaussianRational>(dJ, g.d_graded);
  if (dJd != Matrix(dpdm * GaussianRational(Rational(0), Rational(-2))))
    throw StructuralError("ddJ", "d^J d != -2i del delbar");
  if (!is_zero_matrix<GaussianRational>(Matrix(dJd + multiply<GaussianRational>(g.d_graded, dJ))))
    throw StructuralError("ddJ-anticommute", "d d^J + d^J d != 0");

  // Conjugation maps U^k onto U^{-k}.
  for (int k = -n; k <= n; ++k) {
    const Matrix coords =
        multiply<GaussianRational>(g.grading.full_inverse(), linalg::conjugate<GaussianRational>(g.grading.basis(k)));
    for (int m = -n; m <= n; ++m) {
      if (m == -k) continue;
      if (!is_zero_matrix<GaussianRational>(Matrix(coords.middleRows(g.grading.offset(m), g.dim(m)))))
        throw StructuralError("conjugation", "conjugate of U^" + std::to_string(k) + " leaves U^" + std::to_string(-k));
    }
  }
  return g;
}

GcsData build_gcs(const LieModel& model, const StructureSpec& spec) {
  if (spec.kind == StructureKind::symplectic_form) {
    const Form domega = apply_differential(model, spec.form);
    if (!domega.is_zero()) throw StructuralError("omega-closed", "d omega = " + domega.to_string() + " != 0");
  }
  return build_gcs_from_J(model, build_J(spec, model.n2));
}

}  // namespace gcx
