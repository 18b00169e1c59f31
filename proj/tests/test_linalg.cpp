#include <random>

#include "doctest.h"
#include "gcx/linalg.hpp"

using namespace gcx;
using linalg::DimensionMismatch;

namespace {

const GaussianRational I = GaussianRational::i();

Matrix mat(std::initializer_list<std::initializer_list<GaussianRational>> rows) {
  Matrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index r = 0;
  for (const auto& row : rows) {
    Eigen::Index c = 0;
    for (const auto& v : row) m(r, c++) = v;
    ++r;
  }
  return m;
}

Matrix random_matrix(std::mt19937& rng, Eigen::Index rows, Eigen::Index cols, int sparsity) {
  std::uniform_int_distribution<int> val(-3, 3), keep(0, sparsity);
  Matrix m = linalg::zeros<GaussianRational>(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j)
      if (keep(rng) == 0) m(i, j) = GaussianRational(Rational(val(rng), 1 + keep(rng)), Rational(val(rng)));
  return m;
}

}  // namespace

TEST_CASE("gaussian rationals are canonical and form a field") {
  const GaussianRational a(Rational(2, 4), Rational(-3, 6));
  CHECK(a.real() == Rational(1, 2));
  CHECK(a.imag() == Rational(-1, 2));
  CHECK(a.real().get_den() == 2);
  CHECK(a * a.inverse() == GaussianRational(1));
  CHECK(I * I == GaussianRational(-1));
  const GaussianRational b(Rational(3), Rational(7, 5)), c(Rational(-1, 3), Rational(2));
  CHECK((a * b) * c == a * (b * c));
  CHECK(a * (b + c) == a * b + a * c);
  CHECK(conj(b).imag() == Rational(-7, 5));
  CHECK(GaussianRational(Rational(0), Rational(-1)).to_string() == "-i");
}

TEST_CASE("rank examples") {
  CHECK(linalg::rank<GaussianRational>(linalg::identity<GaussianRational>(2)) == 2);
  CHECK(linalg::rank<GaussianRational>(linalg::zeros<GaussianRational>(2, 2)) == 0);
  CHECK(linalg::rank<GaussianRational>(mat({{1, I}, {I, -1}})) == 1);
}

TEST_CASE("kernel examples") {
  CHECK(Subspace::kernel(linalg::identity<GaussianRational>(3)).dim() == 0);
  CHECK(Subspace::kernel(linalg::zeros<GaussianRational>(3, 3)).dim() == 3);
  const Matrix m = mat({{1, I}});
  const Subspace k = Subspace::kernel(m);
  REQUIRE(k.dim() == 1);
  CHECK(linalg::is_zero_matrix<GaussianRational>(linalg::multiply<GaussianRational>(m, k.basis())));
  Vector expected(2);
  expected << GaussianRational(-I), GaussianRational(1);
  CHECK(k.contains_vector(expected));
}

TEST_CASE("intersection examples") {
  const Subspace plane = Subspace::full(2);
  const Subspace diag = Subspace::span(mat({{1}, {1}}));
  CHECK(linalg::intersect(plane, plane) == plane);
  const Subspace cap = linalg::intersect(plane, diag);
  CHECK(cap == diag);
  CHECK(diag.contains(cap));
  CHECK(cap.contains(diag));

  const Subspace xy = Subspace::span(mat({{1, 0}, {0, 1}, {0, 0}, {0, 0}}));
  const Subspace zw = Subspace::span(mat({{0, 0}, {0, 0}, {1, 0}, {0, 1}}));
  CHECK(linalg::intersect(xy, zw).dim() == 0);
  CHECK_THROWS_AS(linalg::intersect(xy, plane), DimensionMismatch);
}

TEST_CASE("quotient dimension and containment") {
  const Subspace total = Subspace::full(5);
  CHECK(linalg::quotient_dim(total, total) == 0);
  CHECK(linalg::quotient_dim(Subspace(5), total) == 5);
  const Subspace line = Subspace::span(mat({{1}, {0}}));
  const Subspace other = Subspace::span(mat({{0}, {1}}));
  CHECK_THROWS_AS(linalg::quotient_dim(line, other), linalg::ContainmentViolation);
}

TEST_CASE("random rank, kernel and intersection identities") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 60; ++trial) {
    std::uniform_int_distribution<int> size(1, 7);
    const Eigen::Index rows = size(rng), cols = size(rng);
    const Matrix m = random_matrix(rng, rows, cols, trial % 4);
    const Eigen::Index r = linalg::rank<GaussianRational>(m);
    const Subspace k = Subspace::kernel(m);
    CHECK(r + k.dim() == cols);
    CHECK(linalg::is_zero_matrix<GaussianRational>(linalg::multiply<GaussianRational>(m, k.basis())));
    CHECK(linalg::rank<GaussianRational>(linalg::adjoint<GaussianRational>(m)) == r);
    // Deterministic pivoting: the same input gives the same basis.
    CHECK(Subspace::kernel(m).basis() == k.basis());

    const Subspace a = Subspace::span(random_matrix(rng, rows, size(rng), trial % 3));
    const Subspace b = Subspace::span(random_matrix(rng, rows, size(rng), trial % 3));
    const Subspace cap = linalg::intersect(a, b);
    CHECK(cap.dim() + linalg::sum(a, b).dim() == a.dim() + b.dim());
    CHECK(a.contains(cap));
    CHECK(b.contains(cap));
    CHECK(linalg::rank<GaussianRational>(cap.basis()) == cap.dim());
  }
}

TEST_CASE("preimage and map_subspace") {
  const Matrix m = mat({{1, 0, 0}, {0, 1, 0}});
  const Subspace target = Subspace::span(mat({{1}, {0}}));
  const Subspace pre = linalg::preimage(m, target);
  CHECK(pre.dim() == 2);
  CHECK(linalg::map_subspace(m, pre) == target);
}

TEST_CASE("inverse") {
  const Matrix m = mat({{1, I}, {0, 2}});
  CHECK(linalg::multiply<GaussianRational>(m, linalg::inverse<GaussianRational>(m)) ==
        linalg::identity<GaussianRational>(2));
  CHECK_THROWS(linalg::inverse<GaussianRational>(mat({{1, I}, {I, -1}})));
}
