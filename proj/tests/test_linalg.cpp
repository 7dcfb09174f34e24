#include <doctest.h>

#include "morita/linalg.hpp"
#include "test_util.hpp"

using namespace morita;
using namespace morita::testutil;

namespace {
Matrix from_ints(const Field& f, std::size_t r, std::size_t c,
                 std::initializer_list<long long> vals) {
  Matrix m(f, r, c);
  auto it = vals.begin();
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = Scalar::from_int(f, *it++);
  return m;
}
}  // namespace

TEST_CASE("scalar arithmetic in both field modes") {
  const Field q = Field::Q();
  const Field fp = Field::Fp(101);
  CHECK(Scalar::parse(q, "2/4").str() == "1/2");
  CHECK(Scalar::parse(q, "-6/-4").str() == "3/2");
  CHECK((Scalar::parse(q, "1/3") + Scalar::parse(q, "1/6")).str() == "1/2");
  CHECK(Scalar::from_int(fp, -1).str() == "100");
  CHECK((Scalar::from_int(fp, 51) * Scalar::from_int(fp, 2)).str() == "1");
  CHECK(Scalar::from_int(fp, 7).inv() * Scalar::from_int(fp, 7) == Scalar::one(fp));
  CHECK_THROWS_AS(Scalar::one(q).inv() + Scalar::one(fp), FieldMismatchError);
  CHECK_THROWS_AS(Scalar::zero(q).inv(), DivisionByZeroError);
  CHECK_THROWS_AS(Scalar::zero(fp).inv(), DivisionByZeroError);
  CHECK_THROWS_AS(Field::Fp(100), std::invalid_argument);
}

TEST_CASE("rref on the trivial cases") {
  const Field q = Field::Q();
  const Matrix id = Matrix::identity(q, 2);
  auto rr = rref(id);
  CHECK(rr.r == id);
  CHECK(rr.pivots == std::vector<std::size_t>{0, 1});

  const Matrix m = from_ints(q, 2, 2, {1, 2, 2, 4});
  rr = rref(m);
  CHECK(rr.r == from_ints(q, 2, 2, {1, 2, 0, 0}));
  CHECK(rr.pivots == std::vector<std::size_t>{0});
}

TEST_CASE("rref rank agrees with the minor-expansion oracle") {
  const Field fp = Field::Fp(101);
  std::mt19937_64 g(42);
  for (int trial = 0; trial < 8; ++trial) {
    Matrix m = random_matrix(fp, 5, 7, g, 0, 100);
    if (trial % 2 == 0) {
      // plant a rank deficiency: row 3 = row 0 + row 1
      for (std::size_t j = 0; j < 7; ++j) m.at(3, j) = m.at(0, j) + m.at(1, j);
    }
    CHECK(rref(m).rank() == rank_by_minors(m));
  }
}

TEST_CASE("rref is idempotent and serial/parallel agree") {
  std::mt19937_64 g(7);
  for (const Field& f : {Field::Q(), Field::Fp(101)}) {
    const Matrix m = random_matrix(f, 6, 9, g);
    const auto rr = rref(m);
    CHECK(rref(rr.r).r == rr.r);
    CHECK(rref_serial(m).r == rref_parallel(m).r);
    CHECK(rref_serial(m).pivots == rref_parallel(m).pivots);
  }
}

TEST_CASE("kernel_basis") {
  const Field q = Field::Q();
  CHECK(kernel_basis(Matrix::identity(q, 3)).cols() == 0);

  const Matrix row = from_ints(q, 1, 2, {1, 1});
  const Matrix k = kernel_basis(row);
  REQUIRE(k.cols() == 1);
  CHECK(k.at(0, 0) == -k.at(1, 0));
  CHECK((row * k).is_zero());

  std::mt19937_64 g(3);
  const Matrix m = random_matrix(Field::Fp(101), 4, 6, g, 0, 100);
  const Matrix kb = kernel_basis(m);
  CHECK((m * kb).is_zero());
  CHECK(rank(kb) == 6 - rank(m));
}

TEST_CASE("solve_linear") {
  const Field q = Field::Q();
  const Matrix id = Matrix::identity(q, 3);
  Matrix b(q, 3, 1);
  b.at(0, 0) = Scalar::from_int(q, 5);
  b.at(2, 0) = Scalar::parse(q, "-7/3");
  auto r = solve_linear(id, b);
  REQUIRE(r.has_solution);
  CHECK(r.x == b);
  CHECK(r.solution_dim == 0);

  const Matrix a = from_ints(q, 2, 2, {1, 1, 1, 1});
  Matrix b2(q, 2, 1);
  b2.at(0, 0) = Scalar::from_int(q, 1);
  b2.at(1, 0) = Scalar::from_int(q, 2);
  CHECK_FALSE(solve_linear(a, b2).has_solution);

  std::mt19937_64 g(11);
  const Matrix m = random_matrix(q, 4, 6, g);
  const Matrix x0 = random_matrix(q, 6, 1, g);
  const Matrix rhs = m * x0;
  auto s = solve_linear(m, rhs);
  REQUIRE(s.has_solution);
  CHECK(m * s.x == rhs);
}

TEST_CASE("matrix multiplication kernels agree") {
  std::mt19937_64 g(5);
  for (const Field& f : {Field::Q(), Field::Fp(101)}) {
    const Matrix a = random_matrix(f, 13, 17, g);
    const Matrix b = random_matrix(f, 17, 11, g);
    CHECK(mul_serial(a, b) == mul_parallel(a, b));
  }
}

TEST_CASE("quotient_space") {
  const Field q = Field::Q();

  SUBCASE("no relations") {
    const auto qs = quotient_space(Matrix(q, 0, 3));
    CHECK(qs.quotient_dim == 3);
    CHECK(qs.projection == Matrix::identity(q, 3));
  }

  SUBCASE("one relation in dim 2") {
    const Matrix rel = from_ints(q, 1, 2, {1, -1});
    const auto qs = quotient_space(rel);
    CHECK(qs.quotient_dim == 1);
    CHECK(qs.projection * qs.section == Matrix::identity(q, 1));
    CHECK((qs.projection * rel.transpose()).is_zero());
  }

  SUBCASE("tensor relations of M2 over itself") {
    // brute force: relations (x . e_b) tensor y - x tensor (e_b . y) in M2 x M2,
    // built directly from matrix-unit multiplication, independent of the
    // bimodule machinery. Basis E_ij at index 2i+j; E_ij E_kl = delta_jk E_il.
    auto unit_mul = [](std::size_t u, std::size_t v) -> std::optional<std::size_t> {
      const std::size_t i = u / 2, j = u % 2, k = v / 2, l = v % 2;
      if (j != k) return std::nullopt;
      return 2 * i + l;
    };
    Matrix rel(q, 64, 16);
    std::size_t r = 0;
    for (std::size_t b = 0; b < 4; ++b)
      for (std::size_t x = 0; x < 4; ++x)
        for (std::size_t y = 0; y < 4; ++y) {
          if (auto xb = unit_mul(x, b)) rel.at(r, *xb * 4 + y) += Scalar::one(q);
          if (auto by = unit_mul(b, y)) rel.at(r, x * 4 + *by) -= Scalar::one(q);
          ++r;
        }
    CHECK(rank(rel) == 12);
    const auto qs = quotient_space(rel);
    CHECK(qs.quotient_dim == 4);
    CHECK(qs.projection * qs.section == Matrix::identity(q, 4));
    for (std::size_t i = 0; i < 64; ++i) {
      CHECK((qs.projection * rel.row(i).transpose()).is_zero());
    }
  }
}

TEST_CASE("inverse") {
  const Field fp = Field::Fp(101);
  std::mt19937_64 g(9);
  Matrix m = random_matrix(fp, 5, 5, g, 0, 100);
  // make it visibly invertible: add a large diagonal
  for (std::size_t i = 0; i < 5; ++i) m.at(i, i) += Scalar::from_int(fp, 1);
  const auto inv = inverse(m);
  if (inv) {
    CHECK(m * *inv == Matrix::identity(fp, 5));
    CHECK(*inv * m == Matrix::identity(fp, 5));
  }
  CHECK_FALSE(inverse(Matrix(fp, 3, 3)).has_value());
}
