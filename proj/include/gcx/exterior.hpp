#ifndef GCX_EXTERIOR_HPP
#define GCX_EXTERIOR_HPP

#include <cstdint>
#include <map>
#include <string>

#include "gcx/linalg.hpp"
#include "gcx/scalar.hpp"

namespace gcx {

/// Bitmask of a monomial e^{i1}∧…∧e^{ik}, i1 < … < ik; bit (i-1) stands for e^i.
using Mask = std::uint32_t;

inline int degree(Mask m) { return __builtin_popcount(m); }

/// Canonical monomial order: by degree, then lexicographically on the sorted
/// index lists (e12 < e13 < e14 < e23).
inline bool monomial_less(Mask a, Mask b) {
  const int da = degree(a), db = degree(b);
  if (da != db) return da < db;
  if (a == b) return false;
  const Mask diff = a ^ b;
  return (a & diff & (~diff + 1)) != 0;
}

/// Sign of e^a ∧ e^b relative to e^{a∪b}; 0 when the masks overlap.
int wedge_sign(Mask a, Mask b);

/// Element of Λ•(V*)⊗ℂ with dim V = n2.  Only nonzero coefficients are stored.
class Form {
 public:
  explicit Form(int n2 = 0);

  static Form monomial(int n2, Mask m, const GaussianRational& c = GaussianRational(1));
  static Form scalar(int n2, const GaussianRational& c);
  static Form from_vector(int n2, const Vector& v);

  int n2() const { return n2_; }
  const std::map<Mask, GaussianRational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  GaussianRational coeff(Mask m) const;

  /// Adds c·e^m, dropping the entry if it cancels.
  void add(Mask m, const GaussianRational& c);

  /// Dense coordinate vector of length 2^n2, indexed by mask.
  Vector to_vector() const;

  /// Component of a single degree.
  Form homogeneous_part(int deg) const;

  Form conj() const;

  Form& operator+=(const Form& o);
  Form& operator-=(const Form& o);
  Form& operator*=(const GaussianRational& c);

  friend Form operator+(Form a, const Form& b) { return a += b; }
  friend Form operator-(Form a, const Form& b) { return a -= b; }
  friend Form operator*(const GaussianRational& c, Form a) { return a *= c; }
  friend bool operator==(const Form& a, const Form& b) { return a.n2_ == b.n2_ && a.terms_ == b.terms_; }

  /// "3/2*e134 + i*e12 - 1"; "0" for the zero form.
  std::string to_string() const;

 private:
  int n2_;
  std::map<Mask, GaussianRational> terms_;
};

/// X + ξ ∈ (T ⊕ T*)⊗ℂ, coordinates in e_1..e_n2 and e^1..e^n2.
struct GenVector {
  Vector vec;
  Vector covec;

  static GenVector zero(int n2);
  /// Splits a 2·n2 coordinate column (vector part first).
  static GenVector from_coords(const Vector& v);
  static GenVector basis(int n2, int index);  // index in [0, 2·n2)

  int n2() const { return static_cast<int>(vec.rows()); }
  Vector coords() const;
  GenVector conj() const;
};

Form wedge(const Form& a, const Form& b);

/// Interior product ι_X, X given by its n2 coordinates.
Form contract(const Vector& x, const Form& a);

/// (X + ξ)·φ = ι_X φ + ξ ∧ φ.
Form clifford_act(const GenVector& x, const Form& a);

/// ⟨X+ξ, Y+η⟩ = ½(ξ(Y) + η(X)).
GaussianRational pairing(const GenVector& x, const GenVector& y);

/// Gram matrix of the pairing in the basis e_1..e_n2, e^1..e^n2.
Matrix pairing_gram(int n2);

// Operator matrices on the 2^n2-dimensional form space (columns indexed by mask).
Matrix wedge_matrix(const Form& a);
Matrix contraction_matrix(const Vector& x);
Matrix clifford_matrix(const GenVector& x);

/// The 1-form Σ ξ_i e^i.
Form covector_form(const Vector& xi);

}  // namespace gcx

#endif  // GCX_EXTERIOR_HPP
