#ifndef GCX_LINALG_HPP
#define GCX_LINALG_HPP

#include <Eigen/Core>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gcx/scalar.hpp"

// Exact dense linear algebra over a field.  Every routine here works for any
// Scalar with exact ==, +, -, *, / (GaussianRational in practice); nothing
// ever compares magnitudes, so pivoting is purely structural.
namespace gcx::linalg {

using Index = Eigen::Index;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a quotient is requested of spaces that are not nested.
/// Upstream this always means an algebra bug (e.g. im dd^c not inside ker d).
class ContainmentViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

template <typename Scalar>
bool is_zero(const Scalar& s) {
  return s == Scalar(0);
}

template <typename Scalar>
bool is_zero_matrix(const Matrix<Scalar>& m) {
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (!is_zero(m(i, j))) return false;
  return true;
}

template <typename Scalar>
Matrix<Scalar> zeros(Index rows, Index cols) {
  return Matrix<Scalar>::Constant(rows, cols, Scalar(0));
}

template <typename Scalar>
Matrix<Scalar> identity(Index n) {
  Matrix<Scalar> m = zeros<Scalar>(n, n);
  for (Index i = 0; i < n; ++i) m(i, i) = Scalar(1);
  return m;
}

/// Entrywise complex conjugate of the transpose.
template <typename Scalar>
Matrix<Scalar> adjoint(const Matrix<Scalar>& m) {
  Matrix<Scalar> out(m.cols(), m.rows());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) out(j, i) = conj(m(i, j));
  return out;
}

template <typename Scalar>
Matrix<Scalar> conjugate(const Matrix<Scalar>& m) {
  Matrix<Scalar> out(m.rows(), m.cols());
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i) out(i, j) = conj(m(i, j));
  return out;
}

/// Product that skips zero entries of the left factor.  Exact scalars are
/// expensive and the operators in this project are very sparse.
template <typename Scalar>
Matrix<Scalar> multiply(const Matrix<Scalar>& a, const Matrix<Scalar>& b) {
  if (a.cols() != b.rows())
    throw DimensionMismatch("multiply: " + std::to_string(a.cols()) + " vs " + std::to_string(b.rows()));
  Matrix<Scalar> out = zeros<Scalar>(a.rows(), b.cols());
  for (Index k = 0; k < a.cols(); ++k) {
    for (Index i = 0; i < a.rows(); ++i) {
      const Scalar& aik = a(i, k);
      if (is_zero(aik)) continue;
      for (Index j = 0; j < b.cols(); ++j) {
        if (is_zero(b(k, j))) continue;
        out(i, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

/// Horizontal concatenation [a | b].
template <typename Scalar>
Matrix<Scalar> hcat(const Matrix<Scalar>& a, const Matrix<Scalar>& b) {
  if (a.rows() != b.rows()) throw DimensionMismatch("hcat: row counts differ");
  Matrix<Scalar> out(a.rows(), a.cols() + b.cols());
  out.leftCols(a.cols()) = a;
  out.rightCols(b.cols()) = b;
  return out;
}

/// Vertical concatenation [a; b].
template <typename Scalar>
Matrix<Scalar> vcat(const Matrix<Scalar>& a, const Matrix<Scalar>& b) {
  if (a.cols() != b.cols()) throw DimensionMismatch("vcat: column counts differ");
  Matrix<Scalar> out(a.rows() + b.rows(), a.cols());
  out.topRows(a.rows()) = a;
  out.bottomRows(b.rows()) = b;
  return out;
}

template <typename Scalar>
struct Echelon {
  Matrix<Scalar> reduced;       // reduced row echelon form
  std::vector<Index> pivots;    // pivot column of row r is pivots[r]
  Index rank() const { return static_cast<Index>(pivots.size()); }
};

/// Reduced row echelon form.  Columns are scanned left to right; in each the
/// first row (from the current one down) holding a nonzero entry is the pivot.
template <typename Scalar>
Echelon<Scalar> row_echelon(Matrix<Scalar> m) {
  Echelon<Scalar> e;
  Index row = 0;
  const Index rows = m.rows();
  const Index cols = m.cols();
  for (Index c = 0; c < cols && row < rows; ++c) {
    Index p = row;
    while (p < rows && is_zero(m(p, c))) ++p;
    if (p == rows) continue;
    if (p != row) m.row(p).swap(m.row(row));
    const Scalar inv = Scalar(1) / m(row, c);
    for (Index j = c; j < cols; ++j)
      if (!is_zero(m(row, j))) m(row, j) *= inv;
    for (Index r = 0; r < rows; ++r) {
      if (r == row || is_zero(m(r, c))) continue;
      const Scalar f = m(r, c);
      for (Index j = c; j < cols; ++j)
        if (!is_zero(m(row, j))) m(r, j) -= f * m(row, j);
    }
    e.pivots.push_back(c);
    ++row;
  }
  e.reduced = std::move(m);
  return e;
}

template <typename Scalar>
Index rank(const Matrix<Scalar>& m) {
  return row_echelon<Scalar>(m).rank();
}

/// Basis of {v : m v = 0}, one vector per free column (free entry set to 1).
template <typename Scalar>
Matrix<Scalar> kernel_basis(const Matrix<Scalar>& m) {
  const Echelon<Scalar> e = row_echelon<Scalar>(m);
  const Index cols = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (Index p : e.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  Matrix<Scalar> basis = zeros<Scalar>(cols, cols - e.rank());
  Index k = 0;
  for (Index f = 0; f < cols; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    basis(f, k) = Scalar(1);
    for (Index r = 0; r < e.rank(); ++r) {
      if (!is_zero(e.reduced(r, f))) basis(e.pivots[static_cast<std::size_t>(r)], k) = -e.reduced(r, f);
    }
    ++k;
  }
  return basis;
}

/// Indices of the columns of m that are not combinations of earlier ones.
template <typename Scalar>
std::vector<Index> independent_columns(const Matrix<Scalar>& m) {
  return row_echelon<Scalar>(m).pivots;
}

template <typename Scalar>
Matrix<Scalar> select_columns(const Matrix<Scalar>& m, const std::vector<Index>& cols) {
  Matrix<Scalar> out(m.rows(), static_cast<Index>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j) out.col(static_cast<Index>(j)) = m.col(cols[j]);
  return out;
}

/// Inverse of a square matrix; throws std::domain_error if singular.
template <typename Scalar>
Matrix<Scalar> inverse(const Matrix<Scalar>& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("inverse: matrix is not square");
  const Index n = m.rows();
  Echelon<Scalar> e = row_echelon<Scalar>(hcat<Scalar>(m, identity<Scalar>(n)));
  if (e.rank() < n || (n > 0 && e.pivots[static_cast<std::size_t>(n - 1)] != n - 1))
    throw std::domain_error("inverse: matrix is singular");
  return e.reduced.rightCols(n);
}

/// A linear subspace of Scalar^ambient_dim, stored by a basis of columns.
/// The basis is always linearly independent.
template <typename Scalar>
class Subspace {
 public:
  explicit Subspace(Index ambient_dim = 0) : basis_(zeros<Scalar>(ambient_dim, 0)) {}

  /// Span of the columns of `generators`, reduced to its independent columns.
  static Subspace span(const Matrix<Scalar>& generators) {
    Subspace s(generators.rows());
    if (generators.cols() == 0) return s;
    s.basis_ = select_columns<Scalar>(generators, independent_columns<Scalar>(generators));
    return s;
  }

  /// Wraps a basis already known to be independent.
  static Subspace from_basis(Matrix<Scalar> basis) {
    Subspace s(basis.rows());
    s.basis_ = std::move(basis);
    return s;
  }

  static Subspace full(Index n) { return from_basis(identity<Scalar>(n)); }

  static Subspace kernel(const Matrix<Scalar>& m) { return from_basis(kernel_basis<Scalar>(m)); }

  static Subspace image(const Matrix<Scalar>& m) { return span(m); }

  Index ambient_dim() const { return basis_.rows(); }
  Index dim() const { return basis_.cols(); }
  const Matrix<Scalar>& basis() const { return basis_; }

  bool contains_vector(const Vector<Scalar>& v) const {
    check_ambient(v.rows());
    if (dim() == 0) return is_zero_matrix<Scalar>(v);
    return rank<Scalar>(hcat<Scalar>(basis_, v)) == dim();
  }

  /// True when `other` ⊆ *this.
  bool contains(const Subspace& other) const {
    check_ambient(other.ambient_dim());
    if (other.dim() == 0) return true;
    if (other.dim() > dim()) return false;
    return rank<Scalar>(hcat<Scalar>(basis_, other.basis_)) == dim();
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.dim() == b.dim() && a.contains(b);
  }

  /// Coordinates of v in this basis; v must lie in the subspace.
  Vector<Scalar> coordinates(const Vector<Scalar>& v) const {
    check_ambient(v.rows());
    const Index d = dim();
    Echelon<Scalar> e = row_echelon<Scalar>(hcat<Scalar>(basis_, v));
    if (e.rank() > d) throw ContainmentViolation("coordinates: vector is not in the subspace");
    Vector<Scalar> c(d);
    for (Index r = 0; r < d; ++r) c(r) = e.reduced(r, d);
    return c;
  }

 private:
  void check_ambient(Index n) const {
    if (n != ambient_dim())
      throw DimensionMismatch("subspace ambient dimension " + std::to_string(ambient_dim()) + " vs " +
                              std::to_string(n));
  }

  Matrix<Scalar> basis_;
};

template <typename Scalar>
Subspace<Scalar> sum(const Subspace<Scalar>& a, const Subspace<Scalar>& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("sum: ambient dimensions differ");
  return Subspace<Scalar>::span(hcat<Scalar>(a.basis(), b.basis()));
}

/// a ∩ b, from the kernel of [A | -B] mapped through A.
template <typename Scalar>
Subspace<Scalar> intersect(const Subspace<Scalar>& a, const Subspace<Scalar>& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("intersect: ambient dimensions differ");
  if (a.dim() == 0 || b.dim() == 0) return Subspace<Scalar>(a.ambient_dim());
  const Matrix<Scalar> stacked = hcat<Scalar>(a.basis(), Matrix<Scalar>(-b.basis()));
  const Matrix<Scalar> k = kernel_basis<Scalar>(stacked);
  return Subspace<Scalar>::from_basis(multiply<Scalar>(a.basis(), Matrix<Scalar>(k.topRows(a.dim()))));
}

/// dim(total / sub).  Throws ContainmentViolation unless sub ⊆ total.
template <typename Scalar>
Index quotient_dim(const Subspace<Scalar>& sub, const Subspace<Scalar>& total) {
  if (!total.contains(sub))
    throw ContainmentViolation("quotient_dim: subspace of dim " + std::to_string(sub.dim()) +
                               " is not contained in space of dim " + std::to_string(total.dim()));
  return total.dim() - sub.dim();
}

/// Image of a subspace under a linear map.
template <typename Scalar>
Subspace<Scalar> map_subspace(const Matrix<Scalar>& m, const Subspace<Scalar>& s) {
  if (m.cols() != s.ambient_dim()) throw DimensionMismatch("map_subspace: dimension mismatch");
  return Subspace<Scalar>::span(multiply<Scalar>(m, s.basis()));
}

/// Preimage {v : m v ∈ target}.
template <typename Scalar>
Subspace<Scalar> preimage(const Matrix<Scalar>& m, const Subspace<Scalar>& target) {
  if (m.rows() != target.ambient_dim()) throw DimensionMismatch("preimage: dimension mismatch");
  // Solve m v = T w.
  const Matrix<Scalar> stacked = hcat<Scalar>(m, Matrix<Scalar>(-target.basis()));
  const Matrix<Scalar> k = kernel_basis<Scalar>(stacked);
  return Subspace<Scalar>::span(Matrix<Scalar>(k.topRows(m.cols())));
}

}  // namespace gcx::linalg

namespace gcx {

using Matrix = linalg::Matrix<GaussianRational>;
using Vector = linalg::Vector<GaussianRational>;
using Subspace = linalg::Subspace<GaussianRational>;

}  // namespace gcx

#endif  // GCX_LINALG_HPP
