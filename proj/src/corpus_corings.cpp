#include "morita/corpus.hpp"

namespace morita {

namespace {

// A tensor_B A as an explicit quotient, shared by the coring and its
// canonical comodule
TensorBimodule sweedler_tensor(const Algebra& a, const Matrix& sub_basis) {
  const Field f = a.field;
  const std::size_t bd = sub_basis.cols();

  Algebra sub;
  sub.field = f;
  sub.dim = bd;
  {
    const auto unit_coords = solve_all_columns(sub_basis, a.unit);
    if (!unit_coords) throw GenerationError("subalgebra basis must contain the unit");
    sub.unit = *unit_coords;
  }
  for (std::size_t i = 0; i < bd; ++i) {
    Matrix L(f, bd, bd);
    for (std::size_t j = 0; j < bd; ++j) {
      const auto prod =
          solve_all_columns(sub_basis, multiply(a, sub_basis.col(i), sub_basis.col(j)));
      if (!prod) throw GenerationError("subalgebra basis not closed under products");
      for (std::size_t k = 0; k < bd; ++k) L.at(k, j) = prod->at(k, 0);
    }
    sub.lmul.push_back(L);
  }

  Bimodule a_right;  // A as an (A,B)-bimodule
  a_right.left = a;
  a_right.right = sub;
  a_right.field = f;
  a_right.dim = a.dim;
  a_right.lact = a.lmul;
  for (std::size_t j = 0; j < bd; ++j) a_right.ract.push_back(a.right_op(sub_basis.col(j)));

  Bimodule a_left;  // A as a (B,A)-bimodule
  a_left.left = sub;
  a_left.right = a;
  a_left.field = f;
  a_left.dim = a.dim;
  for (std::size_t j = 0; j < bd; ++j) a_left.lact.push_back(a.left_op(sub_basis.col(j)));
  for (std::size_t j = 0; j < a.dim; ++j) a_left.ract.push_back(a.rmul(j));

  return tensor_over(a_right, a_left);
}

}  // namespace

Coring sweedler_coring(const Algebra& a, const Matrix& sub_basis) {
  const Field f = a.field;
  const TensorBimodule t = sweedler_tensor(a, sub_basis);

  Coring c;
  c.base = a;
  c.carrier = t.mod;

  // Delta(a tensor a') = (a tensor 1) tensor (1 tensor a')
  const Chain cc = make_chain({c.carrier, c.carrier});
  Matrix delta_flat(f, cc.mod.dim, a.dim * a.dim);
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j) {
      Matrix ei(f, a.dim, 1), ej(f, a.dim, 1);
      ei.at(i, 0) = Scalar::one(f);
      ej.at(j, 0) = Scalar::one(f);
      const Matrix u = t.q.projection * kron(ei, a.unit);
      const Matrix v = t.q.projection * kron(a.unit, ej);
      const Matrix col = cc.q.projection * kron(u, v);
      for (std::size_t r = 0; r < cc.mod.dim; ++r)
        delta_flat.at(r, i * a.dim + j) = col.at(r, 0);
    }
  c.delta = delta_flat * t.q.section;

  // eps(a tensor a') = a a'
  Matrix counit_flat(f, a.dim, a.dim * a.dim);
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j) {
      Matrix ei(f, a.dim, 1), ej(f, a.dim, 1);
      ei.at(i, 0) = Scalar::one(f);
      ej.at(j, 0) = Scalar::one(f);
      const Matrix col = multiply(a, ei, ej);
      for (std::size_t r = 0; r < a.dim; ++r)
        counit_flat.at(r, i * a.dim + j) = col.at(r, 0);
    }
  c.counit = counit_flat * t.q.section;
  return c;
}

Bimodule free_right_module(const Algebra& a, std::size_t rank) {
  const Field f = a.field;
  std::vector<Matrix> ract;
  const Matrix ir = Matrix::identity(f, rank);
  for (std::size_t j = 0; j < a.dim; ++j) ract.push_back(kron(ir, a.rmul(j)));
  return right_module(ground_algebra(f), a, ract);
}

Comodule trivial_comodule(const Algebra& a, const Bimodule& x) {
  Comodule c;
  c.coring = trivial_coring(a);
  c.carrier = x;
  c.coaction = insert_right(x).mat;
  return c;
}

Comodule cofree_comodule(const Coring& c, const Bimodule& x) {
  Comodule out;
  out.coring = c;
  const TensorBimodule t = tensor_over(x, c.carrier);
  out.carrier = t.mod;
  const ChainOp expand = chain_at(make_chain({out.carrier}), 0, expand2(x, c.carrier));
  const ChainOp dstep = chain_at(
      expand.dst, 1,
      chain_op(make_chain({c.carrier}), make_chain({c.carrier, c.carrier}), c.delta));
  const ChainOp collapse = chain_at(dstep.dst, 0, collapse2(x, c.carrier));
  out.coaction = chain_compose(collapse, chain_compose(dstep, expand)).mat;
  return out;
}

Comodule sweedler_base_comodule(const Algebra& a, const Matrix& sub_basis) {
  const Field f = a.field;
  const TensorBimodule t = sweedler_tensor(a, sub_basis);
  Comodule out;
  out.coring = sweedler_coring(a, sub_basis);
  out.carrier = free_right_module(a, 1);
  const Chain ac = make_chain({out.carrier, out.coring.carrier});
  // a |-> 1 tensor (1 tensor a), through the Sweedler quotient
  Matrix co(f, ac.mod.dim, a.dim);
  for (std::size_t j = 0; j < a.dim; ++j) {
    Matrix ej(f, a.dim, 1);
    ej.at(j, 0) = Scalar::one(f);
    const Matrix inner = t.q.projection * kron(a.unit, ej);
    const Matrix col = ac.q.projection * kron(a.unit, inner);
    for (std::size_t r = 0; r < ac.mod.dim; ++r) co.at(r, j) = col.at(r, 0);
  }
  out.coaction = co;
  return out;
}

ComoduleMorphism random_comodule_morphism(std::uint64_t seed, const Comodule& x,
                                          const Comodule& y) {
  Rng rng(seed);
  const Field f = x.carrier.field;
  const std::size_t s = x.carrier.dim, t = y.carrier.dim;
  const Bimodule& cc = x.coring.carrier;
  const Chain sc = make_chain({x.carrier, cc});
  const Chain tc = make_chain({y.carrier, cc});
  const Matrix H = hom_constraints(x.carrier, y.carrier);
  // colinearity rows: (F ten C) . rho_x - rho_y . F = 0
  const std::size_t crows = tc.mod.dim * s;
  Matrix sys(f, H.rows() + crows, t * s);
  for (std::size_t i = 0; i < H.rows(); ++i)
    for (std::size_t j = 0; j < t * s; ++j) sys.at(i, j) = H.at(i, j);
  const Matrix ic = Matrix::identity(f, cc.dim);
  for (std::size_t a = 0; a < t; ++a)
    for (std::size_t b = 0; b < s; ++b) {
      Matrix e(f, t, s);
      e.at(a, b) = Scalar::one(f);
      const Matrix lhs = tc.q.projection * kron(e, ic) * sc.q.section * x.coaction -
                         y.coaction * e;
      const Matrix v = vec(lhs);
      for (std::size_t r = 0; r < crows; ++r)
        sys.at(H.rows() + r, a * s + b) = v.at(r, 0);
    }
  const Matrix basis = kernel_basis(sys);
  Matrix acc(f, t * s, 1);
  for (std::size_t c = 0; c < basis.cols(); ++c) {
    const Scalar coef = rng.scalar(f);
    for (std::size_t r = 0; r < t * s; ++r) acc.at(r, 0) += basis.at(r, c) * coef;
  }
  return ComoduleMorphism{x, y, unvec(t, s, acc)};
}

Bicomodule trivial_bicomodule(const Bimodule& m) {
  Bicomodule out;
  out.left_coring = trivial_coring(m.left);
  out.right_coring = trivial_coring(m.right);
  out.carrier = m;
  out.rcoaction = insert_right(m).mat;
  out.lcoaction = insert_left(m).mat;
  return out;
}

Bicomodule cofree_bicomodule(const Coring& d, const Bimodule& y) {
  if (!(y.right == d.base)) throw CellTypeError("cofree_bicomodule: base mismatch");
  Bicomodule out;
  out.left_coring = trivial_coring(y.left);
  out.right_coring = d;
  const TensorBimodule t = tensor_over(y, d.carrier);
  out.carrier = t.mod;
  const ChainOp expand = chain_at(make_chain({out.carrier}), 0, expand2(y, d.carrier));
  const ChainOp dstep = chain_at(
      expand.dst, 1,
      chain_op(make_chain({d.carrier}), make_chain({d.carrier, d.carrier}), d.delta));
  const ChainOp collapse = chain_at(dstep.dst, 0, collapse2(y, d.carrier));
  out.rcoaction = chain_compose(collapse, chain_compose(dstep, expand)).mat;
  out.lcoaction = insert_left(out.carrier).mat;
  return out;
}

std::vector<Bicomodule> bicomodule_suite(const Field& f, std::uint64_t seed,
                                         std::size_t count) {
  std::vector<Bicomodule> out;
  Rng rng(seed);
  const Algebra tp2 = truncated_poly(f, 2);
  const Matrix unit_basis = tp2.unit;
  const Coring sw = sweedler_coring(tp2, unit_basis);
  while (out.size() < count) {
    switch (rng.next(3)) {
      case 0: {
        const Algebra a = random_algebra(f, rng.g(), 1 + rng.next(2));
        const Algebra b = random_algebra(f, rng.g(), 1 + rng.next(2));
        out.push_back(trivial_bicomodule(random_bimodule(rng.g(), a, b, 3)));
        break;
      }
      case 1: {
        const Algebra a = random_algebra(f, rng.g(), 1 + rng.next(2));
        const Bimodule y = random_bimodule(rng.g(), a, tp2, 2);
        out.push_back(cofree_bicomodule(sw, y));
        break;
      }
      default: {
        const Algebra a = random_algebra(f, rng.g(), 1 + rng.next(2));
        const Coring td = trivial_coring(tp2);
        const Bimodule y = random_bimodule(rng.g(), a, tp2, 2);
        out.push_back(cofree_bicomodule(td, y));
        break;
      }
    }
  }
  return out;
}

RemTwo random_rem_two(std::uint64_t seed, const RemCell& src, const RemCell& tgt) {
  Rng rng(seed);
  const Field f = src->carrier.field;
  const Coring& tc = src->tgt_coring;
  const Chain cm = make_chain({tc.carrier, src->carrier});
  const std::size_t s = cm.mod.dim, t = tgt->carrier.dim;
  // bilinearity + Eq. (2.2), both linear in the reduced matrix
  const Matrix H = hom_constraints(cm.mod, tgt->carrier);
  std::vector<Matrix> cols;
  std::size_t erows = 0;
  for (std::size_t a = 0; a < t; ++a)
    for (std::size_t b = 0; b < s; ++b) {
      Matrix e(f, t, s);
      e.at(a, b) = Scalar::one(f);
      // both composites of Eq. (2.2), evaluated at the unit matrix
      const ChainOp s0 =
          chain_at(cm, 0,
                   chain_op(make_chain({tc.carrier}),
                            make_chain({tc.carrier, tc.carrier}), tc.delta));
      const ChainOp aop = chain_op(cm, make_chain({tgt->carrier}), e);
      const ChainOp ment = chain_op(make_chain({tc.carrier, src->carrier}),
                                    make_chain({src->carrier, src->src_coring.carrier}),
                                    src->ent);
      const ChainOp tent = chain_op(make_chain({tc.carrier, tgt->carrier}),
                                    make_chain({tgt->carrier, tgt->src_coring.carrier}),
                                    tgt->ent);
      const ChainOp lhs =
          chain_compose(tent, chain_compose(chain_at(s0.dst, 1, aop), s0));
      const ChainOp mid = chain_at(s0.dst, 1, ment);
      const ChainOp rhs =
          chain_compose(chain_at(mid.dst, 0, aop), chain_compose(mid, s0));
      const Matrix diff = lhs.mat - rhs.mat;
      cols.push_back(vec(diff));
      erows = cols.back().rows();
    }
  Matrix sys(f, H.rows() + erows, t * s);
  for (std::size_t i = 0; i < H.rows(); ++i)
    for (std::size_t j = 0; j < t * s; ++j) sys.at(i, j) = H.at(i, j);
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < erows; ++i) sys.at(H.rows() + i, j) = cols[j].at(i, 0);
  const Matrix basis = kernel_basis(sys);
  Matrix acc(f, t * s, 1);
  for (std::size_t c = 0; c < basis.cols(); ++c) {
    const Scalar coef = rng.scalar(f);
    for (std::size_t r = 0; r < t * s; ++r) acc.at(r, 0) += basis.at(r, c) * coef;
  }
  return RemTwo{src, tgt, unvec(t, s, acc)};
}

SampleSet<RemBicat> rem_axiom_samples(const Field& f, std::uint64_t seed,
                                      std::size_t count) {
  SampleSet<RemBicat> s;
  Rng rng(seed);
  const RemBicat rem;
  for (std::size_t i = 0; i < count; ++i) {
    // cells over trivial corings compose like bimodules; mix in Lemma 2.1
    // cells over the Sweedler coring for nontrivial targets
    const Algebra a0 = random_algebra(f, rng.g(), 1 + rng.next(2));
    const Algebra a1 = random_algebra(f, rng.g(), 1 + rng.next(2));
    const Algebra a2 = random_algebra(f, rng.g(), 1 + rng.next(2));
    const Algebra a3 = random_algebra(f, rng.g(), 1 + rng.next(2));
    const Algebra a4 = random_algebra(f, rng.g(), 1 + rng.next(2));
    auto triv_cell = [&](const Algebra& l, const Algebra& r, std::uint64_t sd) {
      const Bimodule m = random_bimodule(sd, l, r, 2);
      return rem_atom(trivial_coring(l), trivial_coring(r), m, iota(m).mat);
    };
    const RemCell cf = triv_cell(a0, a1, rng.g());
    const RemCell cg = triv_cell(a1, a2, rng.g());
    const RemCell ch = triv_cell(a2, a3, rng.g());
    const RemCell ce = triv_cell(a3, a4, rng.g());
    s.quads.push_back({cf, cg, ch, ce});
    s.pairs.push_back({cf, cg});
    s.singles.push_back(cf);
    auto two = [&](const RemCell& c) { return random_rem_two(rng.g(), c, c); };
    s.nat_assoc.push_back({two(cf), two(cg), two(ch)});
    s.nat_unit.push_back(two(cf));
    s.interchange.push_back({two(cf), two(cf), two(cg), two(cg)});
    s.vtriples.push_back({two(cf), two(cf), two(cf)});
  }
  // one nontrivial-coring family: Sweedler identity cells and Lemma 2.1 cells
  const Algebra tp2 = truncated_poly(f, 2);
  const Coring sw = sweedler_coring(tp2, tp2.unit);
  const RemCell idsw = rem_ident(sw);
  s.quads.push_back({idsw, idsw, idsw, idsw});
  s.pairs.push_back({idsw, idsw});
  s.singles.push_back(idsw);
  const Bimodule y = regular_bimodule(ground_algebra(f), tp2);
  const RemCell lem = cell_from_bicomodule(cofree_bicomodule(sw, y), trivial_coring(ground_algebra(f)));
  s.pairs.push_back({lem, rem_ident(sw)});
  s.singles.push_back(lem);
  s.nat_unit.push_back(random_rem_two(seed ^ 0x9e3779b97f4a7c15ull, lem, lem));
  return s;
}

}  // namespace morita
