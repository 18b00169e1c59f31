#include "gcx/exterior.hpp"

#include <algorithm>
#include <sstream>
#include <vector>
#include <stdexcept>

namespace gcx {

namespace {

void require_same(int a, int b, const char* what) {
  if (a != b)
    throw linalg::DimensionMismatch(std::string(what) + ": dimension " + std::to_string(a) + " vs " +
                                    std::to_string(b));
}

Mask full_mask(int n2) { return n2 >= 32 ? ~Mask(0) : (Mask(1) << n2) - 1; }

}  // namespace

int wedge_sign(Mask a, Mask b) {
  if (a & b) return 0;
  // Count pairs (i in a, j in b) with i > j.
  int inversions = 0;
  for (Mask rest = b; rest; rest &= rest - 1) {
    const Mask low = rest & (~rest + 1);
    inversions += degree(a & ~((low << 1) - 1));
  }
  return (inversions & 1) ? -1 : 1;
}

Form::Form(int n2) : n2_(n2) {
  if (n2 < 0 || n2 > 16) throw std::invalid_argument("Form: unsupported dimension " + std::to_string(n2));
}

Form Form::monomial(int n2, Mask m, const GaussianRational& c) {
  Form f(n2);
  if (m & ~full_mask(n2)) throw std::out_of_range("Form::monomial: index outside dimension");
  f.add(m, c);
  return f;
}

Form Form::scalar(int n2, const GaussianRational& c) { return monomial(n2, 0, c); }

Form Form::from_vector(int n2, const Vector& v) {
  Form f(n2);
  require_same(static_cast<int>(v.rows()), 1 << n2, "Form::from_vector");
  for (Eigen::Index i = 0; i < v.rows(); ++i)
    if (!v(i).is_zero()) f.terms_.emplace(static_cast<Mask>(i), v(i));
  return f;
}

GaussianRational Form::coeff(Mask m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? GaussianRational(0) : it->second;
}

void Form::add(Mask m, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Vector Form::to_vector() const {
  Vector v = linalg::zeros<GaussianRational>(Eigen::Index(1) << n2_, 1);
  for (const auto& [m, c] : terms_) v(m) = c;
  return v;
}

Form Form::homogeneous_part(int deg) const {
  Form f(n2_);
  for (const auto& [m, c] : terms_)
    if (degree(m) == deg) f.terms_.emplace(m, c);
  return f;
}

Form Form::conj() const {
  Form f(n2_);
  for (const auto& [m, c] : terms_) f.terms_.emplace(m, c.conj());
  return f;
}

Form& Form::operator+=(const Form& o) {
  require_same(n2_, o.n2_, "Form +");
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

Form& Form::operator-=(const Form& o) {
  require_same(n2_, o.n2_, "Form -");
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

Form& Form::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

std::string Form::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Mask, const GaussianRational*>> ordered;
  for (const auto& [m, c] : terms_) ordered.emplace_back(m, &c);
  std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) { return monomial_less(a.first, b.first); });
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, cptr] : ordered) {
    GaussianRational c = *cptr;
    std::string coeff;
    bool negative = false;
    if (c.is_real() || c.real() == 0) {
      negative = c.is_real() ? c.real() < 0 : c.imag() < 0;
      if (negative) c = -c;
      coeff = c.to_string();
    } else {
      coeff = "(" + c.to_string() + ")";
    }
    std::string mono;
    if (m != 0) {
      mono = "e";
      for (int i = 0; i < n2_; ++i)
        if (m & (Mask(1) << i)) mono += std::to_string(i + 1);
    }
    std::string body;
    if (mono.empty())
      body = coeff;
    else if (coeff == "1")
      body = mono;
    else
      body = coeff + "*" + mono;
    if (first)
      os << (negative ? "-" : "") << body;
    else
      os << (negative ? " - " : " + ") << body;
    first = false;
  }
  return os.str();
}

GenVector GenVector::zero(int n2) {
  return {linalg::zeros<GaussianRational>(n2, 1), linalg::zeros<GaussianRational>(n2, 1)};
}

GenVector GenVector::from_coords(const Vector& v) {
  if (v.rows() % 2 != 0) throw linalg::DimensionMismatch("GenVector: odd coordinate count");
  const Eigen::Index n2 = v.rows() / 2;
  return {v.head(n2), v.tail(n2)};
}

GenVector GenVector::basis(int n2, int index) {
  GenVector g = zero(n2);
  if (index < n2)
    g.vec(index) = GaussianRational(1);
  else
    g.covec(index - n2) = GaussianRational(1);
  return g;
}

Vector GenVector::coords() const { return linalg::vcat<GaussianRational>(vec, covec); }

GenVector GenVector::conj() const {
  return {linalg::conjugate<GaussianRational>(vec), linalg::conjugate<GaussianRational>(covec)};
}

Form wedge(const Form& a, const Form& b) {
  require_same(a.n2(), b.n2(), "wedge");
  Form out(a.n2());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      const int s = wedge_sign(ma, mb);
      if (s == 0) continue;
      out.add(ma | mb, s > 0 ? ca * cb : -(ca * cb));
    }
  }
  return out;
}

Form contract(const Vector& x, const Form& a) {
  require_same(static_cast<int>(x.rows()), a.n2(), "contract");
  Form out(a.n2());
  for (int i = 0; i < a.n2(); ++i) {
    if (x(i).is_zero()) continue;
    const Mask bit = Mask(1) << i;
    for (const auto& [m, c] : a.terms()) {
      if (!(m & bit)) continue;
      // ι_{e_i} moves e^i to the front past the lower-index factors.
      const int s = (degree(m & (bit - 1)) & 1) ? -1 : 1;
      const GaussianRational v = x(i) * c;
      out.add(m & ~bit, s > 0 ? v : -v);
    }
  }
  return out;
}

Form covector_form(const Vector& xi) {
  const int n2 = static_cast<int>(xi.rows());
  Form f(n2);
  for (int i = 0; i < n2; ++i) f.add(Mask(1) << i, xi(i));
  return f;
}

Form clifford_act(const GenVector& x, const Form& a) {
  require_same(x.n2(), a.n2(), "clifford_act");
  return contract(x.vec, a) + wedge(covector_form(x.covec), a);
}

GaussianRational pairing(const GenVector& x, const GenVector& y) {
  require_same(x.n2(), y.n2(), "pairing");
  GaussianRational s(0);
  for (int i = 0; i < x.n2(); ++i) {
    s += x.covec(i) * y.vec(i);
    s += y.covec(i) * x.vec(i);
  }
  return s * make_rational(1, 2);
}

Matrix pairing_gram(int n2) {
  Matrix g = linalg::zeros<GaussianRational>(2 * n2, 2 * n2);
  for (int i = 0; i < n2; ++i) {
    g(i, n2 + i) = make_rational(1, 2);
    g(n2 + i, i) = make_rational(1, 2);
  }
  return g;
}

namespace {

template <typename Op>
Matrix operator_matrix(int n2, Op op) {
  const Eigen::Index size = Eigen::Index(1) << n2;
  Matrix m = linalg::zeros<GaussianRational>(size, size);
  for (Eigen::Index col = 0; col < size; ++col) {
    const Form image = op(Form::monomial(n2, static_cast<Mask>(col)));
    for (const auto& [mask, c] : image.terms()) m(mask, col) = c;
  }
  return m;
}

}  // namespace

Matrix wedge_matrix(const Form& a) {
  return operator_matrix(a.n2(), [&](const Form& f) { return wedge(a, f); });
}

Matrix contraction_matrix(const Vector& x) {
  return operator_matrix(static_cast<int>(x.rows()), [&](const Form& f) { return contract(x, f); });
}

Matrix clifford_matrix(const GenVector& x) {
  return operator_matrix(x.n2(), [&](const Form& f) { return clifford_act(x, f); });
}

}  // namespace gcx
