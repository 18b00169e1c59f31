#ifndef GCX_ERRORS_HPP
#define GCX_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gcx {

/// The input is well-formed but violates a structural requirement:
/// 𝒥² ≠ −1, a degenerate ω, a non-pure spinor, a non-integrable structure,
/// or an exactness identity that fails.  Maps to exit status 3.
class StructuralError : public std::runtime_error {
 public:
  StructuralError(std::string check, const std::string& detail)
      : std::runtime_error(check + ": " + detail), check_(std::move(check)) {}
  const std::string& check() const { return check_; }

 private:
  std::string check_;
};

/// A computed result contradicts a proved statement.  Always a bug; exit 4.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace gcx

#endif  // GCX_ERRORS_HPP
