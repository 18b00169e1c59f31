#ifndef GCX_MODEL_HPP
#define GCX_MODEL_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gcx/exterior.hpp"
#include "gcx/linalg.hpp"

namespace gcx {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line, int column);
  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  std::string message_;
  int line_;
  int column_;
};

/// Chevalley–Eilenberg model of a 2n-dimensional Lie algebra.
///
/// `generator_differentials[k]` is de^{k+1}, a 2-form; d extends to all of
/// Λ• as a degree-1 graded derivation.  With [e_i, e_j] = Σ c^k_ij e_k this is
/// de^k = −Σ_{i<j} c^k_ij e^i∧e^j, so the Salamon entry for e^k is that 2-form.
struct LieModel {
  int n2 = 0;
  std::vector<Form> generator_differentials;
  Matrix d_matrix;  // 2^n2 × 2^n2, columns indexed by mask

  int n() const { return n2 / 2; }
};

enum class StructureKind { complex_endomorphism, symplectic_form, pure_spinor, raw_matrix };

std::string_view to_string(StructureKind kind);

struct StructureSpec {
  StructureKind kind = StructureKind::complex_endomorphism;
  std::string name;       // identifier used in the file (J, omega, rho, JJ)
  Matrix matrix;          // J (n2×n2) or the raw 4n×4n matrix
  Form form;              // ω or ρ
};

struct ParsedModel {
  LieModel model;
  std::optional<StructureSpec> structure;
};

/// Parses the model file format.  Statements are separated by newlines or
/// ';', and '#' starts a comment:
///
///   dim 4
///   algebra (0,0,0,12)
///   structure symplectic omega = e14 + e23
///
/// Throws ParseError with 1-based line/column.
ParsedModel parse_model(std::string_view text);

/// Canonical text form; parse_model(print_model(m)) reproduces m.
std::string print_model(const ParsedModel& parsed);

/// Evaluates a form expression such as "1 + i*e14 - 1/2*e1234".
Form parse_form(std::string_view text, int n2);

/// Matrix of d on Λ•, extended from the generator differentials.
Matrix ce_differential(int n2, const std::vector<Form>& generator_differentials);

/// d applied to a single form through the derivation rule.
Form apply_differential(const LieModel& model, const Form& a);

struct Validation {
  bool ok = true;
  std::optional<Mask> failing_monomial;  // first monomial with d²(e^I) ≠ 0
  std::string detail;
};

/// Checks d² = 0 and that d raises degree by exactly one.
Validation validate(const LieModel& model);

}  // namespace gcx

#endif  // GCX_MODEL_HPP
