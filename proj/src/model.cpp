#include "gcx/model.hpp"

#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace gcx {

ParseError::ParseError(const std::string& message, int line, int column)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      message_(message),
      line_(line),
      column_(column) {}

std::string_view to_string(StructureKind kind) {
  switch (kind) {
    case StructureKind::complex_endomorphism:
      return "complex";
    case StructureKind::symplectic_form:
      return "symplectic";
    case StructureKind::pure_spinor:
      return "spinor";
    case StructureKind::raw_matrix:
      return "matrix";
  }
  return "?";
}

namespace {

constexpr int kMaxDim = 8;

struct Char {
  char c;
  int line;
  int col;
};

using Statement = std::vector<Char>;

// Splits on newlines and ';' outside brackets, dropping comments.
std::vector<Statement> split_statements(std::string_view text) {
  std::vector<Statement> out;
  Statement current;
  int line = 1;
  int col = 1;
  int depth = 0;
  bool in_comment = false;
  auto flush = [&] {
    bool blank = true;
    for (const Char& ch : current)
      if (!std::isspace(static_cast<unsigned char>(ch.c))) blank = false;
    if (!blank) out.push_back(current);
    current.clear();
  };
  for (char c : text) {
    if (c == '\n') {
      in_comment = false;
      if (depth == 0) flush();
      else current.push_back({' ', line, col});
      ++line;
      col = 1;
      continue;
    }
    if (!in_comment && c == '#') in_comment = true;
    if (!in_comment) {
      if (c == '[' || c == '(') ++depth;
      if (c == ']' || c == ')') depth = depth > 0 ? depth - 1 : 0;
      if (c == ';' && depth == 0)
        flush();
      else
        current.push_back({c, line, col});
    }
    ++col;
  }
  flush();
  return out;
}

class Cursor {
 public:
  Cursor(const Statement& s, int end_line, int end_col) : s_(s), end_line_(end_line), end_col_(end_col) {}

  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_].c))) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= s_.size();
  }
  char peek() {
    skip_space();
    return pos_ < s_.size() ? s_[pos_].c : '\0';
  }
  char peek_raw() const { return pos_ < s_.size() ? s_[pos_].c : '\0'; }
  char get() {
    skip_space();
    return pos_ < s_.size() ? s_[pos_++].c : '\0';
  }
  char get_raw() { return pos_ < s_.size() ? s_[pos_++].c : '\0'; }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  std::string word() {
    skip_space();
    std::string w;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_].c)) || s_[pos_].c == '_'))
      w += s_[pos_++].c;
    return w;
  }

  std::string digits() {
    skip_space();
    return raw_digits();
  }
  std::string raw_digits() {
    std::string d;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_].c))) d += s_[pos_++].c;
    return d;
  }

  std::size_t mark() const { return pos_; }
  void reset(std::size_t p) { pos_ = p; }

  [[noreturn]] void fail(const std::string& message) const { fail_at(pos_, message); }
  [[noreturn]] void fail_at(std::size_t p, const std::string& message) const {
    if (p < s_.size()) throw ParseError(message, s_[p].line, s_[p].col);
    if (!s_.empty()) throw ParseError(message, s_.back().line, s_.back().col + 1);
    throw ParseError(message, end_line_, end_col_);
  }

 private:
  const Statement& s_;
  std::size_t pos_ = 0;
  int end_line_;
  int end_col_;
};

Rational parse_unsigned_rational(Cursor& cur) {
  const std::size_t at = cur.mark();
  const std::string num = cur.digits();
  if (num.empty()) cur.fail_at(at, "expected a number");
  Rational q(num, 10);
  if (cur.peek() == '/') {
    cur.get();
    const std::size_t den_at = cur.mark();
    const std::string den = cur.digits();
    if (den.empty()) cur.fail_at(den_at, "expected a denominator");
    Rational d(den, 10);
    if (d == 0) cur.fail_at(den_at, "zero denominator");
    q /= d;
  }
  q.canonicalize();
  return q;
}

// Monomial from index digits; returns the sign needed to sort them.
std::pair<Mask, int> parse_monomial_digits(Cursor& cur, const std::string& digits, std::size_t at, int n2) {
  Mask m = 0;
  int sign = 1;
  for (std::size_t k = 0; k < digits.size(); ++k) {
    const int idx = digits[k] - '0';
    if (idx < 1 || idx > n2)
      cur.fail_at(at + k, "index " + std::to_string(idx) + " out of range 1.." + std::to_string(n2));
    const Mask bit = Mask(1) << (idx - 1);
    if (m & bit) cur.fail_at(at + k, "repeated index " + std::to_string(idx));
    sign *= wedge_sign(m, bit);
    m |= bit;
  }
  return {m, sign};
}

class FormParser {
 public:
  FormParser(Cursor& cur, int n2) : cur_(cur), n2_(n2) {}

  Form expr() {
    Form acc(n2_);
    bool negate = false;
    if (cur_.accept('-'))
      negate = true;
    else
      cur_.accept('+');
    Form t = term();
    acc += negate ? GaussianRational(-1) * t : t;
    for (;;) {
      const char c = cur_.peek();
      if (c == '+') {
        cur_.get();
        acc += term();
      } else if (c == '-') {
        cur_.get();
        acc -= term();
      } else {
        break;
      }
    }
    return acc;
  }

 private:
  bool starts_factor(char c) const { return std::isdigit(static_cast<unsigned char>(c)) || c == 'i' || c == 'e' || c == '('; }

  Form term() {
    Form acc = factor();
    for (;;) {
      const char c = cur_.peek();
      if (c == '*') {
        cur_.get();
        acc = wedge(acc, factor());
      } else if (starts_factor(c)) {
        acc = wedge(acc, factor());
      } else {
        break;
      }
    }
    return acc;
  }

  Form factor() {
    const char c = cur_.peek();
    const std::size_t at = cur_.mark();
    if (std::isdigit(static_cast<unsigned char>(c))) return Form::scalar(n2_, GaussianRational(parse_unsigned_rational(cur_)));
    if (c == '(') {
      cur_.get();
      Form inner = expr();
      cur_.expect(')');
      return inner;
    }
    if (c == 'i') {
      cur_.get();
      return Form::scalar(n2_, GaussianRational::i());
    }
    if (c == 'e') {
      cur_.get();
      const std::size_t digits_at = cur_.mark();
      const std::string d = cur_.raw_digits();
      if (d.empty()) cur_.fail_at(digits_at, "expected indices after 'e'");
      auto [m, sign] = parse_monomial_digits(cur_, d, digits_at, n2_);
      return Form::monomial(n2_, m, GaussianRational(sign));
    }
    cur_.fail_at(at, c == '\0' ? "unexpected end of expression" : std::string("unexpected '") + c + "'");
  }

  Cursor& cur_;
  int n2_;
};

GaussianRational parse_scalar(Cursor& cur, int n2) {
  const std::size_t at = cur.mark();
  cur.skip_space();
  const std::size_t start = cur.mark();
  FormParser p(cur, n2);
  const Form f = p.expr();
  for (const auto& [m, c] : f.terms())
    if (m != 0) cur.fail_at(start == at ? at : start, "matrix entries must be scalars");
  return f.coeff(0);
}

Matrix parse_matrix(Cursor& cur, int n2) {
  std::vector<std::vector<GaussianRational>> rows;
  const std::size_t at = cur.mark();
  cur.expect('[');
  do {
    cur.expect('[');
    std::vector<GaussianRational> row;
    do {
      row.push_back(parse_scalar(cur, n2));
    } while (cur.accept(','));
    cur.expect(']');
    rows.push_back(std::move(row));
  } while (cur.accept(','));
  cur.expect(']');
  const std::size_t cols = rows.front().size();
  for (const auto& r : rows)
    if (r.size() != cols) cur.fail_at(at, "matrix rows have different lengths");
  Matrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
  return m;
}

// One Salamon entry: "0", "12", "13+42", "-13", "1/2*12", "e12".
Form parse_salamon_entry(Cursor& cur, int n2) {
  Form acc(n2);
  bool first = true;
  for (;;) {
    int sign = 1;
    const char c = cur.peek();
    if (c == '-' || c == '+') {
      cur.get();
      sign = c == '-' ? -1 : 1;
    } else if (!first) {
      break;
    }
    first = false;
    cur.skip_space();
    const std::size_t at = cur.mark();
    const bool prefixed = cur.peek_raw() == 'e';
    if (prefixed) cur.get_raw();
    std::string d = cur.raw_digits();
    if (d.empty()) cur.fail_at(at, "expected a structure term");
    Rational coeff(1);
    if (!prefixed && (cur.peek() == '/' || cur.peek() == '*')) {
      cur.reset(at);
      coeff = parse_unsigned_rational(cur);
      cur.expect('*');
      cur.skip_space();
      const std::size_t mono_at = cur.mark();
      if (cur.peek_raw() == 'e') cur.get_raw();
      d = cur.raw_digits();
      if (d.empty()) cur.fail_at(mono_at, "expected indices");
    } else if (!prefixed && d == "0") {
      continue;
    }
    const std::size_t digits_at = cur.mark() - d.size();
    if (d.size() != 2) cur.fail_at(digits_at, "structure terms must be 2-forms, got '" + d + "'");
    auto [m, s] = parse_monomial_digits(cur, d, digits_at, n2);
    acc.add(m, GaussianRational(Rational(coeff * sign * s)));
  }
  return acc;
}

void expect_end(Cursor& cur) {
  if (!cur.at_end()) cur.fail("unexpected trailing input");
}

}  // namespace

Form parse_form(std::string_view text, int n2) {
  Statement s;
  int col = 1;
  for (char c : text) s.push_back({c, 1, col++});
  Cursor cur(s, 1, col);
  FormParser p(cur, n2);
  Form f = p.expr();
  expect_end(cur);
  return f;
}

ParsedModel parse_model(std::string_view text) {
  const std::vector<Statement> statements = split_statements(text);
  int end_line = 1;
  for (char c : text)
    if (c == '\n') ++end_line;

  std::optional<int> n2;
  std::optional<std::vector<Form>> algebra;
  std::optional<StructureSpec> structure;
  std::optional<Statement> pending_algebra;
  std::optional<Statement> pending_structure;

  for (const Statement& st : statements) {
    Cursor cur(st, st.front().line, st.front().col);
    cur.skip_space();
    const std::size_t kw_at = cur.mark();
    const std::string kw = cur.word();
    if (kw == "dim") {
      if (n2) cur.fail_at(kw_at, "duplicate 'dim' declaration");
      const std::size_t at = cur.mark();
      cur.skip_space();
      const std::string d = cur.digits();
      if (d.empty()) cur.fail_at(at, "expected an integer after 'dim'");
      const int v = std::stoi(d);
      if (v <= 0 || v % 2 != 0) cur.fail_at(at, "dimension must be a positive even integer, got " + d);
      if (v > kMaxDim) cur.fail_at(at, "dimension " + d + " exceeds the supported maximum " + std::to_string(kMaxDim));
      expect_end(cur);
      n2 = v;
    } else if (kw == "algebra") {
      if (pending_algebra) cur.fail_at(kw_at, "duplicate 'algebra' declaration");
      pending_algebra = st;
    } else if (kw == "structure") {
      if (pending_structure) cur.fail_at(kw_at, "duplicate 'structure' declaration");
      pending_structure = st;
    } else {
      cur.fail_at(kw_at, kw.empty() ? "expected a statement" : "unknown statement '" + kw + "'");
    }
  }
  if (!n2) throw ParseError("missing 'dim' declaration", end_line, 1);
  if (!pending_algebra) throw ParseError("missing 'algebra' declaration", end_line, 1);

  {
    const Statement& st = *pending_algebra;
    Cursor cur(st, st.front().line, st.front().col);
    cur.word();
    cur.expect('(');
    std::vector<Form> entries;
    const std::size_t list_at = cur.mark();
    do {
      entries.push_back(parse_salamon_entry(cur, *n2));
    } while (cur.accept(','));
    cur.expect(')');
    expect_end(cur);
    if (static_cast<int>(entries.size()) != *n2)
      cur.fail_at(list_at, "algebra lists " + std::to_string(entries.size()) + " generators, dim is " +
                               std::to_string(*n2));
    algebra = std::move(entries);
  }

  if (pending_structure) {
    const Statement& st = *pending_structure;
    Cursor cur(st, st.front().line, st.front().col);
    cur.word();
    const std::size_t kind_at = cur.mark();
    const std::string kind = cur.word();
    StructureSpec spec;
    if (kind == "complex")
      spec.kind = StructureKind::complex_endomorphism;
    else if (kind == "symplectic")
      spec.kind = StructureKind::symplectic_form;
    else if (kind == "spinor")
      spec.kind = StructureKind::pure_spinor;
    else if (kind == "matrix")
      spec.kind = StructureKind::raw_matrix;
    else
      cur.fail_at(kind_at, "unknown structure kind '" + kind + "'");
    const std::size_t name_at = cur.mark();
    spec.name = cur.word();
    if (spec.name.empty()) cur.fail_at(name_at, "expected a structure name");
    cur.expect('=');
    cur.skip_space();
    const std::size_t payload_at = cur.mark();
    switch (spec.kind) {
      case StructureKind::complex_endomorphism:
      case StructureKind::raw_matrix: {
        spec.matrix = parse_matrix(cur, *n2);
        const int expected = spec.kind == StructureKind::complex_endomorphism ? *n2 : 2 * *n2;
        if (spec.matrix.rows() != expected || spec.matrix.cols() != expected)
          cur.fail_at(payload_at, "expected a " + std::to_string(expected) + "x" + std::to_string(expected) +
                                      " matrix");
        if (spec.kind == StructureKind::complex_endomorphism)
          for (Eigen::Index i = 0; i < spec.matrix.size(); ++i)
            if (!spec.matrix(i).is_real()) cur.fail_at(payload_at, "J must have rational entries");
        spec.form = Form(*n2);
        break;
      }
      case StructureKind::symplectic_form:
      case StructureKind::pure_spinor: {
        FormParser p(cur, *n2);
        spec.form = p.expr();
        if (spec.kind == StructureKind::symplectic_form) {
          for (const auto& [m, c] : spec.form.terms()) {
            if (degree(m) != 2) cur.fail_at(payload_at, "omega must be a 2-form");
            if (!c.is_real()) cur.fail_at(payload_at, "omega must have rational coefficients");
          }
        } else if (spec.form.is_zero()) {
          cur.fail_at(payload_at, "spinor must be nonzero");
        }
        spec.matrix = Matrix(0, 0);
        break;
      }
    }
    expect_end(cur);
    structure = std::move(spec);
  }

  ParsedModel out;
  out.model.n2 = *n2;
  out.model.generator_differentials = std::move(*algebra);
  out.model.d_matrix = ce_differential(out.model.n2, out.model.generator_differentials);
  out.structure = std::move(structure);
  return out;
}

namespace {

std::string salamon_entry(const Form& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    Rational q = c.real();
    const bool negative = q < 0;
    if (negative) q = -q;
    if (!first || negative) out += negative ? "-" : "+";
    first = false;
    if (q != 1) out += q.get_str() + "*";
    for (int i = 0; i < f.n2(); ++i)
      if (m & (Mask(1) << i)) out += std::to_string(i + 1);
  }
  return out;
}

std::string matrix_literal(const Matrix& m) {
  std::string out = "[";
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    out += i ? ",[" : "[";
    for (Eigen::Index j = 0; j < m.cols(); ++j) out += (j ? "," : "") + m(i, j).to_string();
    out += "]";
  }
  return out + "]";
}

}  // namespace

std::string print_model(const ParsedModel& parsed) {
  std::ostringstream os;
  os << "dim " << parsed.model.n2 << "\n";
  os << "algebra (";
  for (std::size_t k = 0; k < parsed.model.generator_differentials.size(); ++k)
    os << (k ? "," : "") << salamon_entry(parsed.model.generator_differentials[k]);
  os << ")\n";
  if (parsed.structure) {
    const StructureSpec& s = *parsed.structure;
    os << "structure " << to_string(s.kind) << " " << s.name << " = ";
    if (s.kind == StructureKind::complex_endomorphism || s.kind == StructureKind::raw_matrix)
      os << matrix_literal(s.matrix);
    else
      os << s.form.to_string();
    os << "\n";
  }
  return os.str();
}

namespace {

Form derivation(int n2, const std::vector<Form>& gens, Mask m) {
  Form out(n2);
  Mask prefix = 0;
  for (int i = 0; i < n2; ++i) {
    const Mask bit = Mask(1) << i;
    if (!(m & bit)) continue;
    const Mask suffix = m & ~((bit << 1) - 1);
    const Form& dgen = gens[static_cast<std::size_t>(i)];
    if (!dgen.is_zero()) {
      Form piece = wedge(wedge(Form::monomial(n2, prefix), dgen), Form::monomial(n2, suffix));
      if (degree(prefix) & 1) piece *= GaussianRational(-1);
      out += piece;
    }
    prefix |= bit;
  }
  return out;
}

}  // namespace

Matrix ce_differential(int n2, const std::vector<Form>& generator_differentials) {
  if (static_cast<int>(generator_differentials.size()) != n2)
    throw linalg::DimensionMismatch("ce_differential: generator count differs from dimension");
  const Eigen::Index size = Eigen::Index(1) << n2;
  Matrix d = linalg::zeros<GaussianRational>(size, size);
  for (Eigen::Index col = 0; col < size; ++col) {
    const Form image = derivation(n2, generator_differentials, static_cast<Mask>(col));
    for (const auto& [mask, c] : image.terms()) d(mask, col) = c;
  }
  return d;
}

Form apply_differential(const LieModel& model, const Form& a) {
  Form out(model.n2);
  for (const auto& [m, c] : a.terms()) out += c * derivation(model.n2, model.generator_differentials, m);
  return out;
}

Validation validate(const LieModel& model) {
  Validation v;
  const Eigen::Index size = Eigen::Index(1) << model.n2;
  if (model.d_matrix.rows() != size || model.d_matrix.cols() != size) {
    v.ok = false;
    v.detail = "d matrix has the wrong size";
    return v;
  }
  for (Eigen::Index col = 0; col < size; ++col) {
    for (Eigen::Index row = 0; row < size; ++row) {
      if (model.d_matrix(row, col).is_zero()) continue;
      if (degree(static_cast<Mask>(row)) != degree(static_cast<Mask>(col)) + 1) {
        v.ok = false;
        v.failing_monomial = static_cast<Mask>(col);
        v.detail = "d does not raise degree by one on " + Form::monomial(model.n2, static_cast<Mask>(col)).to_string();
        return v;
      }
    }
  }
  const Matrix dd = linalg::multiply<GaussianRational>(model.d_matrix, model.d_matrix);
  for (Eigen::Index col = 0; col < size; ++col) {
    if (linalg::is_zero_matrix<GaussianRational>(dd.col(col))) continue;
    v.ok = false;
    v.failing_monomial = static_cast<Mask>(col);
    const Form image = Form::from_vector(model.n2, Vector(dd.col(col)));
    v.detail = "d^2 " + Form::monomial(model.n2, static_cast<Mask>(col)).to_string() + " = " + image.to_string() +
               " (Jacobi identity fails)";
    return v;
  }
  return v;
}

}  // namespace gcx
