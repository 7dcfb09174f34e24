#include <doctest.h>

#include "morita/corpus.hpp"
#include "test_util.hpp"

using namespace morita;

TEST_CASE("ground field is a valid algebra") {
  const auto k = ground_algebra(Field::Q());
  CHECK(validate_algebra(k).ok());
  CHECK(k.dim == 1);
}

TEST_CASE("matrix algebra M2 matches the matrix-unit oracle") {
  const Field f = Field::Fp(101);
  const auto a = matrix_algebra(f, 2);
  CHECK(validate_algebra(a).ok());
  // unit = E11 + E22
  Matrix expected_unit(f, 4, 1);
  expected_unit.at(0, 0) = Scalar::one(f);
  expected_unit.at(3, 0) = Scalar::one(f);
  CHECK(a.unit == expected_unit);
  // E_ij E_kl = delta_jk E_il, expanded independently
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l) {
          Matrix x(f, 4, 1), y(f, 4, 1);
          x.at(i * 2 + j, 0) = Scalar::one(f);
          y.at(k * 2 + l, 0) = Scalar::one(f);
          Matrix want(f, 4, 1);
          if (j == k) want.at(i * 2 + l, 0) = Scalar::one(f);
          CHECK(multiply(a, x, y) == want);
        }
}

TEST_CASE("corrupted unital structure is reported") {
  auto a = group_algebra(Field::Q(), 2);
  a.lmul[0].at(0, 0) = Scalar::from_int(Field::Q(), 2);
  const auto rep = validate_algebra(a);
  CHECK_FALSE(rep.ok());
  bool unit_law = false;
  for (const auto& v : rep.violations)
    if (v.law.find("unit") != std::string::npos) unit_law = true;
  CHECK(unit_law);
}

TEST_CASE("multiplication facts") {
  const Field q = Field::Q();
  const auto z2 = group_algebra(q, 2);
  CHECK(validate_algebra(z2).ok());
  Matrix g(q, 2, 1);
  g.at(1, 0) = Scalar::one(q);
  CHECK(multiply(z2, g, g) == z2.unit);

  // unit is neutral
  std::mt19937_64 rg(2);
  const auto m2 = matrix_algebra(q, 2);
  const Matrix x = testutil::random_matrix(q, 4, 1, rg);
  CHECK(multiply(m2, m2.unit, x) == x);
  CHECK(multiply(m2, x, m2.unit) == x);

  // associativity replay on random triples
  const Matrix y = testutil::random_matrix(q, 4, 1, rg);
  const Matrix z = testutil::random_matrix(q, 4, 1, rg);
  CHECK(multiply(m2, multiply(m2, x, y), z) == multiply(m2, x, multiply(m2, y, z)));
}

TEST_CASE("left and right multiplication operators commute") {
  const auto a = truncated_poly(Field::Fp(101), 3);
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j) {
      Matrix ei(a.field, a.dim, 1), ej(a.field, a.dim, 1);
      ei.at(i, 0) = Scalar::one(a.field);
      ej.at(j, 0) = Scalar::one(a.field);
      const Matrix lx = a.left_op(ei), ry = a.right_op(ej);
      CHECK(lx * ry == ry * lx);
    }
}

TEST_CASE("every corpus algebra validates") {
  for (const Field& f : {Field::Q(), Field::Fp(101)}) {
    CHECK(validate_algebra(matrix_algebra(f, 2)).ok());
    CHECK(validate_algebra(group_algebra(f, 3)).ok());
    CHECK(validate_algebra(truncated_poly(f, 2)).ok());
    CHECK(validate_algebra(product_algebra(ground_algebra(f), group_algebra(f, 2))).ok());
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
      for (std::size_t dim = 1; dim <= 3; ++dim) {
        CHECK(validate_algebra(random_algebra(f, seed, dim)).ok());
      }
    }
  }
}

TEST_CASE("idempotent check is by multiplication") {
  const Field q = Field::Q();
  const auto m2 = matrix_algebra(q, 2);
  Matrix e(q, 4, 1);
  e.at(0, 0) = Scalar::one(q);  // E11
  CHECK(is_idempotent(m2, e));
  Matrix ne(q, 4, 1);
  ne.at(1, 0) = Scalar::one(q);  // E12 is not idempotent
  CHECK_FALSE(is_idempotent(m2, ne));
}
