#include <doctest.h>

#include "morita/corpus.hpp"
#include "test_util.hpp"

using namespace morita;

TEST_CASE("identity bimodule and deliberate corruption") {
  const auto a = matrix_algebra(Field::Q(), 2);
  auto m = identity_bimodule(a);
  CHECK(validate_bimodule(m).ok());

  // break the order reversal of the right action
  auto bad = m;
  bad.ract = bad.lact;
  const auto rep = validate_bimodule(bad);
  CHECK_FALSE(rep.ok());
}

TEST_CASE("column space of M2 is a valid bimodule") {
  const auto cols = column_module(Field::Q(), 2);
  CHECK(validate_bimodule(cols).ok());
  const auto rows = row_module(Field::Q(), 2);
  CHECK(validate_bimodule(rows).ok());
}

TEST_CASE("tensor dimensions match the relation-rank oracle") {
  const Field q = Field::Q();

  // k^2 (columns over k) tensor_k k^2: no middle relations
  const auto k = ground_algebra(q);
  Bimodule k2_right;  // (M2, k) columns
  k2_right = column_module(q, 2);
  Bimodule k2_left = row_module(q, 2);
  // tensor over the ground field: 2*2 = 4
  const auto t = tensor_over(k2_right, k2_left);
  CHECK(t.mod.dim == 4);

  // M2 tensor_{M2} M2 has dimension 4 = 16 - 12
  const auto m2 = matrix_algebra(q, 2);
  const auto im2 = identity_bimodule(m2);
  const auto tt = tensor_over(im2, im2);
  CHECK(tt.mod.dim == 4);
  CHECK(validate_bimodule(tt.mod).ok());

  // rows tensor_{M2} columns has dimension 1
  const auto rt = tensor_over(row_module(q, 2), column_module(q, 2));
  CHECK(rt.mod.dim == 1);
}

TEST_CASE("induced maps") {
  const Field q = Field::Q();
  const auto m2 = matrix_algebra(q, 2);
  const auto im2 = identity_bimodule(m2);
  const auto t = tensor_over(im2, im2);

  SUBCASE("identities induce the identity") {
    const auto f = induced_map(id_map(im2), id_map(im2), t, t);
    CHECK(f.mat == Matrix::identity(q, t.mod.dim));
  }

  SUBCASE("interchange (f ten id) . (id ten g) = f ten g") {
    const auto f = random_hom(3, im2, im2);
    const auto g = random_hom(4, im2, im2);
    REQUIRE(is_intertwiner(f));
    REQUIRE(is_intertwiner(g));
    const auto fid = induced_map(f, id_map(im2), t, t);
    const auto idg = induced_map(id_map(im2), g, t, t);
    const auto fg = induced_map(f, g, t, t);
    CHECK(compose(fid, idg).mat == fg.mat);
    CHECK(compose(idg, fid).mat == fg.mat);
  }

  SUBCASE("scaling is bilinear") {
    const auto f = random_hom(5, im2, im2);
    const Scalar two = Scalar::from_int(q, 2);
    auto f2 = f;
    f2.mat = f.mat.scaled(two);
    const auto a = induced_map(f2, id_map(im2), t, t);
    const auto b = induced_map(f, id_map(im2), t, t);
    CHECK(a.mat == b.mat.scaled(two));
  }
}

TEST_CASE("induced actions preserve the relation span") {
  // the flat action operators must map relations into relations
  std::mt19937_64 g(17);
  const Field f = Field::Fp(101);
  const auto a = random_algebra(f, 21, 2);
  const auto b = random_algebra(f, 22, 2);
  const auto c = random_algebra(f, 23, 2);
  const auto m = random_bimodule(31, a, b, 3);
  const auto n = random_bimodule(32, b, c, 3);
  const auto t = tensor_over(m, n);
  const Matrix rel = kernel_basis(t.q.projection);
  const Matrix in_ = Matrix::identity(f, n.dim);
  const Matrix im = Matrix::identity(f, m.dim);
  for (std::size_t i = 0; i < a.dim; ++i) {
    const Matrix amb = kron(m.lact[i], in_);
    CHECK((t.q.projection * (amb * rel)).is_zero());
  }
  for (std::size_t j = 0; j < c.dim; ++j) {
    const Matrix amb = kron(im, n.ract[j]);
    CHECK((t.q.projection * (amb * rel)).is_zero());
  }
  CHECK(validate_bimodule(t.mod).ok());
}

TEST_CASE("associator and unitors compose to identities") {
  const Field q = Field::Q();

  SUBCASE("all factors the ground field") {
    const auto k = identity_bimodule(ground_algebra(q));
    const auto ap = associator3(k, k, k);
    CHECK(ap.fwd.mat == Matrix::identity(q, 1));
  }

  SUBCASE("M2 chain") {
    const auto im2 = identity_bimodule(matrix_algebra(q, 2));
    const auto ap = associator3(im2, im2, im2);
    CHECK(ap.fwd.src.dim == 4);
    CHECK(ap.fwd.tgt.dim == 4);
    CHECK(compose(ap.inv, ap.fwd).mat == Matrix::identity(q, ap.fwd.src.dim));
    CHECK(compose(ap.fwd, ap.inv).mat == Matrix::identity(q, ap.fwd.tgt.dim));
    CHECK(is_intertwiner(ap.fwd));
  }

  SUBCASE("unitors on the regular bimodule") {
    const auto a = truncated_poly(q, 2);
    const auto b = group_algebra(q, 2);
    const auto m = regular_bimodule(a, b);
    const auto lu = left_unitor(m);
    const auto ru = right_unitor(m);
    CHECK(compose(lu.fwd, lu.inv).mat == Matrix::identity(q, m.dim));
    CHECK(compose(lu.inv, lu.fwd).mat == Matrix::identity(q, lu.fwd.src.dim));
    CHECK(compose(ru.fwd, ru.inv).mat == Matrix::identity(q, m.dim));
    CHECK(is_intertwiner(lu.fwd));
    CHECK(is_intertwiner(ru.fwd));
  }

  SUBCASE("unitors of the identity bimodule agree") {
    // r_{1_A} = l_{1_A}, the derived equality of the coherence axioms
    const auto a = random_algebra(q, 77, 3);
    const auto ia = identity_bimodule(a);
    CHECK(left_unitor(ia).fwd.mat == right_unitor(ia).fwd.mat);
  }
}

TEST_CASE("chains agree with iterated binary tensors") {
  const Field f = Field::Fp(101);
  const auto a = random_algebra(f, 41, 2);
  const auto b = random_algebra(f, 42, 2);
  const auto m = random_bimodule(43, a, b, 2);
  const auto n = random_bimodule(44, b, a, 2);
  const auto p = random_bimodule(45, a, b, 2);

  const Chain c3 = make_chain({m, n, p});
  const auto mn = tensor_over(m, n);
  const auto mn_p = tensor_over(mn.mod, p);
  const auto np = tensor_over(n, p);
  const auto m_np = tensor_over(m, np.mod);
  CHECK(c3.mod.dim == mn_p.mod.dim);
  CHECK(c3.mod.dim == m_np.mod.dim);

  // the canonical flat -> nested maps identify the one-shot chain with both
  const Matrix ip = Matrix::identity(f, p.dim);
  const Matrix can_l = mn_p.q.projection * kron(mn.q.projection, ip);
  // can_l restricted to the chain section is an isomorphism
  const Matrix iso = can_l * c3.q.section;
  CHECK(rank(iso) == c3.mod.dim);
}

TEST_CASE("chain_at splices maps with identity elsewhere") {
  const Field q = Field::Q();
  const auto a = group_algebra(q, 2);
  const auto ia = identity_bimodule(a);
  const Chain c = make_chain({ia, ia, ia});

  // absorbing the middle identity factor: [A,A,A] -> [A,A] via absorb_left on slot 1
  const ChainOp op = chain_at(c, 1, absorb_left(ia), true);
  CHECK(op.dst.factors.size() == 2);
  // multiplication is associative, so absorbing at 0 then nothing equals
  // absorbing at slot 1 after rebracketing; here just check shapes + wd
  CHECK(op.mat.rows() == op.dst.mod.dim);

  // iota = r^{-1} . l on chains
  const ChainOp i1 = iota(ia);
  const ChainOp i2 = chain_compose(iota_inv(ia), i1);
  CHECK(i2.mat == Matrix::identity(q, i2.src.mod.dim));
}

TEST_CASE("hom basis spans intertwiners only") {
  const Field f = Field::Fp(101);
  const auto a = random_algebra(f, 51, 2);
  const auto b = random_algebra(f, 52, 2);
  const auto m = random_bimodule(53, a, b, 3);
  const auto n = random_bimodule(54, a, b, 3);
  const Matrix basis = hom_basis(m, n);
  for (std::size_t c = 0; c < basis.cols(); ++c) {
    BimoduleMap f2{m, n, unvec(n.dim, m.dim, basis.col(c))};
    CHECK(is_intertwiner(f2));
  }
  // identity is always in Hom(m, m)
  CHECK(hom_basis(m, m).cols() >= 1);
}
