#include "doctest.h"
#include "gcx/model.hpp"
#include "oracle.hpp"

using namespace gcx;

namespace {

ParseError parse_error(const std::string& text) {
  try {
    parse_model(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("expected a parse error for: " << text);
  return ParseError("", 0, 0);
}

}  // namespace

TEST_CASE("parses the two basic example models") {
  const ParsedModel kt = parse_model("dim 4; algebra (0,0,0,12); structure symplectic omega = e14 + e23");
  CHECK(kt.model.n2 == 4);
  REQUIRE(kt.structure);
  CHECK(kt.structure->kind == StructureKind::symplectic_form);
  CHECK(kt.structure->form.to_string() == "e14 + e23");
  CHECK(kt.model.generator_differentials[3].to_string() == "e12");

  const ParsedModel t2 = parse_model("dim 2; algebra (0,0); structure complex J = [[0,-1],[1,0]]");
  CHECK(t2.structure->kind == StructureKind::complex_endomorphism);
  CHECK(t2.structure->matrix(0, 1) == GaussianRational(-1));
  CHECK(linalg::is_zero_matrix<GaussianRational>(t2.model.d_matrix));
}

TEST_CASE("salamon shorthand and coefficients") {
  const ParsedModel m = parse_model("dim 6\nalgebra (0, 0, 0, 0, 13+42, 1/2*14 - 23)\n");
  CHECK(m.model.generator_differentials[4].to_string() == "e13 - e24");
  CHECK(m.model.generator_differentials[5].to_string() == "1/2*e14 - e23");
  CHECK_FALSE(m.structure);
}

TEST_CASE("parse errors carry positions") {
  const ParseError range = parse_error("dim 4; algebra (0,0,0,15)");
  CHECK(range.line() == 1);
  CHECK(range.column() > 1);
  CHECK(parse_error("dim 3\nalgebra (0,0,0)").line() == 1);
  CHECK(parse_error("dim 4\ndim 4\nalgebra (0,0,0,0)").line() == 2);
  parse_error("algebra (0,0)");
  parse_error("dim 2");
  parse_error("dim 4; algebra (0,0,0)");
  parse_error("dim 4; algebra (0,0,0,11)");
  parse_error("dim 2; algebra (0,0); structure complex J = [[0,-1],[1]]");
  parse_error("dim 2; algebra (0,0); structure complex J = [[0,-1],[1,0]]; structure symplectic omega = e12");
  parse_error("dim 2; algebra (0,0); structure symplectic omega = e1");
  parse_error("dim 2; algebra (0,0); structure spinor rho = 0");
  parse_error("dim 2; algebra (0,0); structure complex J = [[0,i],[1,0]]");
  parse_error("dim 2; algebra (0,0); structure warped J = [[0,-1],[1,0]]");
  parse_error("dim 2; algebra (0,0) trailing");
}

TEST_CASE("print then parse is the identity") {
  const char* texts[] = {
      "dim 4; algebra (0,0,0,12); structure symplectic omega = e14 + e23",
      "dim 2; algebra (0,0); structure complex J = [[0,-1],[1,0]]",
      "dim 6; algebra (0,0,0,0,13+42,14+23); structure spinor rho = e135 + i*e136 - 1/3*e2",
      "dim 2; algebra (0,0); structure matrix JJ = [[0,0,0,-1],[0,0,1,0],[0,-1,0,0],[1,0,0,0]]",
      "dim 4; algebra (0,0,12,-1/2*13)",
  };
  for (const char* t : texts) {
    const ParsedModel a = parse_model(t);
    const std::string printed = print_model(a);
    const ParsedModel b = parse_model(printed);
    CHECK(print_model(b) == printed);
    CHECK(b.model.d_matrix == a.model.d_matrix);
    CHECK(b.structure.has_value() == a.structure.has_value());
    if (a.structure) {
      CHECK(b.structure->kind == a.structure->kind);
      CHECK(b.structure->form == a.structure->form);
      CHECK(b.structure->matrix == a.structure->matrix);
    }
  }
}

TEST_CASE("the differential is a degree one derivation squaring to zero") {
  const ParsedModel kt = parse_model("dim 4; algebra (0,0,0,12)");
  // d(e34) = de3 ∧ e4 − e3 ∧ de4 = −e3 ∧ e12 = −e123.
  CHECK(apply_differential(kt.model, Form::monomial(4, 0b1100)).to_string() == "-e123");
  CHECK(validate(kt.model).ok);

  const ParsedModel iw = parse_model("dim 6; algebra (0,0,0,0,13+42,14+23)");
  CHECK(validate(iw.model).ok);
  CHECK(linalg::is_zero_matrix<GaussianRational>(
      linalg::multiply<GaussianRational>(iw.model.d_matrix, iw.model.d_matrix)));

  const ParsedModel filiform = parse_model("dim 4; algebra (0,0,12,13)");
  CHECK(validate(filiform.model).ok);

  const ParsedModel bad = parse_model("dim 4; algebra (0,0,12,34)");
  const Validation v = validate(bad.model);
  CHECK_FALSE(v.ok);
  REQUIRE(v.failing_monomial);
  CHECK(*v.failing_monomial == Mask(0b1000));
}

TEST_CASE("CE differential agrees with the Koszul formula oracle") {
  // [e_i, e_j] = Σ c^k_ij e_k with de^k = −Σ_{i<j} c^k_ij e^{ij}.
  const ParsedModel iw = parse_model("dim 6; algebra (0,0,0,0,13+42,14+23)");
  const oracle::Brackets c = oracle::brackets(
      6, {{0, 2, 4, -1}, {3, 1, 4, -1}, {0, 3, 5, -1}, {1, 2, 5, -1}});
  for (int p = 0; p < 6; ++p) {
    const oracle::Mat ref = oracle::koszul_d(c, p);
    const auto src = oracle::subsets(6, p), dst = oracle::subsets(6, p + 1);
    for (std::size_t col = 0; col < src.size(); ++col) {
      Mask m = 0;
      for (int x : src[col]) m |= Mask(1) << x;
      const Form image = apply_differential(iw.model, Form::monomial(6, m));
      for (std::size_t row = 0; row < dst.size(); ++row) {
        Mask t = 0;
        for (int x : dst[row]) t |= Mask(1) << x;
        const GaussianRational got = image.coeff(t);
        const oracle::C& want = ref[row][col];
        REQUIRE(got.real() == Rational(want.re.str()));
        REQUIRE(got.imag() == Rational(want.im.str()));
      }
    }
  }
}
