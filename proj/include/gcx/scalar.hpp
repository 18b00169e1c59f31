#ifndef GCX_SCALAR_HPP
#define GCX_SCALAR_HPP

#include <gmpxx.h>

#include <Eigen/Core>

#include <ostream>
#include <stdexcept>
#include <string>

namespace gcx {

using Rational = mpq_class;

/// Exact complex number re + im*i over an ordered field `Real`.
///
/// Arithmetic is closed and exact; with Real = mpq_class every value is
/// stored as a pair of reduced fractions with positive denominators.
template <typename Real>
class Gaussian {
 public:
  Gaussian() : re_(0), im_(0) {}
  Gaussian(int re) : re_(re), im_(0) {}  // NOLINT: implicit on purpose, Eigen builds Scalar(0)/Scalar(1)
  Gaussian(long re) : re_(re), im_(0) {}  // NOLINT
  Gaussian(Real re) : re_(std::move(re)), im_(0) { canonicalize(); }  // NOLINT
  Gaussian(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) { canonicalize(); }

  static Gaussian i() { return Gaussian(Real(0), Real(1)); }

  const Real& real() const { return re_; }
  const Real& imag() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_real() const { return im_ == 0; }

  Gaussian conj() const { return Gaussian(re_, Real(-im_)); }

  /// |z|^2, always real and nonnegative.
  Real norm2() const { return Real(re_ * re_ + im_ * im_); }

  Gaussian inverse() const {
    if (is_zero()) throw std::domain_error("Gaussian: division by zero");
    Real n = norm2();
    return Gaussian(Real(re_ / n), Real(-im_ / n));
  }

  Gaussian& operator+=(const Gaussian& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  Gaussian& operator-=(const Gaussian& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  Gaussian& operator*=(const Gaussian& o) {
    if (o.im_ == 0) {
      re_ *= o.re_;
      im_ *= o.re_;
      return *this;
    }
    Real r = re_ * o.re_ - im_ * o.im_;
    Real m = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(m);
    return *this;
  }
  Gaussian& operator/=(const Gaussian& o) {
    if (o.im_ == 0) {
      if (o.re_ == 0) throw std::domain_error("Gaussian: division by zero");
      re_ /= o.re_;
      im_ /= o.re_;
      return *this;
    }
    return *this *= o.inverse();
  }

  friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
  friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
  friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
  friend Gaussian operator/(Gaussian a, const Gaussian& b) { return a /= b; }
  friend Gaussian operator-(const Gaussian& a) { return Gaussian(Real(-a.re_), Real(-a.im_)); }

  friend bool operator==(const Gaussian& a, const Gaussian& b) { return a.re_ == b.re_ && a.im_ == b.im_; }
  friend bool operator!=(const Gaussian& a, const Gaussian& b) { return !(a == b); }

  /// Renders as "a", "b i", "a+b i" with reduced fractions, e.g. "1/2-3 i".
  std::string to_string() const {
    if (im_ == 0) return re_.get_str();
    std::string imag_part = (im_ == 1) ? "i" : (im_ == -1) ? "-i" : im_.get_str() + " i";
    if (re_ == 0) return imag_part;
    return re_.get_str() + (im_ > 0 ? "+" : "") + imag_part;
  }

  friend std::ostream& operator<<(std::ostream& os, const Gaussian& z) { return os << z.to_string(); }

 private:
  void canonicalize() {
    re_.canonicalize();
    im_.canonicalize();
  }

  Real re_;
  Real im_;
};

using GaussianRational = Gaussian<Rational>;

template <typename Real>
Gaussian<Real> conj(const Gaussian<Real>& z) {
  return z.conj();
}

inline GaussianRational make_rational(long num, long den = 1) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return GaussianRational(q);
}

}  // namespace gcx

namespace Eigen {

template <typename R>
struct NumTraits<gcx::Gaussian<R>> : GenericNumTraits<gcx::Gaussian<R>> {
  // Conjugation is always explicit (gcx::conj), so Eigen treats the type as real.
  typedef gcx::Gaussian<R> Real;
  typedef gcx::Gaussian<R> NonInteger;
  typedef gcx::Gaussian<R> Literal;
  typedef gcx::Gaussian<R> Nested;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 16,
    MulCost = 32
  };
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

#endif  // GCX_SCALAR_HPP
