#include "morita/coring.hpp"

namespace morita {

namespace {

ChainOp op1(const Matrix& mat, const Bimodule& src, const Chain& dst) {
  return chain_op(make_chain({src}), dst, mat);
}

}  // namespace

ValidationReport validate_coring(const Coring& c) {
  ValidationReport rep;
  if (!(c.carrier.left == c.base) || !(c.carrier.right == c.base)) {
    rep.add("carrier is an (A,A)-bimodule over the base");
    return rep;
  }
  rep.merge(validate_bimodule(c.carrier), "carrier");
  if (!rep.ok()) return rep;

  const Chain cc = make_chain({c.carrier, c.carrier});
  const Bimodule ia = identity_bimodule(c.base);
  if (c.delta.rows() != cc.mod.dim || c.delta.cols() != c.carrier.dim) {
    rep.add("delta shape");
    return rep;
  }
  if (c.counit.rows() != c.base.dim || c.counit.cols() != c.carrier.dim) {
    rep.add("counit shape");
    return rep;
  }
  rep.merge(validate_map(BimoduleMap{c.carrier, cc.mod, c.delta}), "delta bilinear");
  rep.merge(validate_map(BimoduleMap{c.carrier, ia, c.counit}), "counit bilinear");
  if (!rep.ok()) return rep;

  const ChainOp dop = op1(c.delta, c.carrier, cc);
  const ChainOp eop = op1(c.counit, c.carrier, make_chain({ia}));

  // (delta ten C) . delta = (C ten delta) . delta inside C x C x C
  const ChainOp lhs = chain_compose(chain_at(cc, 0, dop), dop);
  const ChainOp rhs = chain_compose(chain_at(cc, 1, dop), dop);
  if (!(lhs.mat == rhs.mat)) rep.add("coassociativity");

  // (C ten eps) . delta = id = (eps ten C) . delta
  const ChainOp right_counit = chain_compose(
      absorb_right(c.carrier), chain_compose(chain_at(cc, 1, eop), dop));
  if (!(right_counit.mat == Matrix::identity(c.carrier.field, c.carrier.dim))) {
    rep.add("right counit law");
  }
  const ChainOp left_counit = chain_compose(
      absorb_left(c.carrier), chain_compose(chain_at(cc, 0, eop), dop));
  if (!(left_counit.mat == Matrix::identity(c.carrier.field, c.carrier.dim))) {
    rep.add("left counit law");
  }
  return rep;
}

ValidationReport validate_comodule(const Comodule& x) {
  ValidationReport rep;
  if (x.carrier.left.dim != 1) {
    rep.add("carrier is a right module (left factor is the ground field)");
    return rep;
  }
  if (!(x.carrier.right == x.coring.base)) {
    rep.add("carrier is a module over the coring base");
    return rep;
  }
  rep.merge(validate_bimodule(x.carrier), "carrier");
  if (!rep.ok()) return rep;

  const Bimodule& cc = x.coring.carrier;
  const Chain xc = make_chain({x.carrier, cc});
  if (x.coaction.rows() != xc.mod.dim || x.coaction.cols() != x.carrier.dim) {
    rep.add("coaction shape");
    return rep;
  }
  rep.merge(validate_map(BimoduleMap{x.carrier, xc.mod, x.coaction}),
            "coaction linear");
  if (!rep.ok()) return rep;

  const ChainOp rho = op1(x.coaction, x.carrier, xc);
  const ChainOp dop = op1(x.coring.delta, cc, make_chain({cc, cc}));
  const ChainOp eop =
      op1(x.coring.counit, cc, make_chain({identity_bimodule(x.coring.base)}));

  const ChainOp lhs = chain_compose(chain_at(xc, 0, rho), rho);
  const ChainOp rhs = chain_compose(chain_at(xc, 1, dop), rho);
  if (!(lhs.mat == rhs.mat)) rep.add("coaction coassociative");

  const ChainOp counit = chain_compose(
      absorb_right(x.carrier), chain_compose(chain_at(xc, 1, eop), rho));
  if (!(counit.mat == Matrix::identity(x.carrier.field, x.carrier.dim))) {
    rep.add("coaction counital");
  }
  return rep;
}

ValidationReport validate_comodule_morphism(const ComoduleMorphism& f) {
  ValidationReport rep;
  if (!(f.src.coring == f.tgt.coring)) {
    rep.add("morphism within one comodule category");
    return rep;
  }
  rep.merge(validate_map(BimoduleMap{f.src.carrier, f.tgt.carrier, f.mat}),
            "right linear");
  if (!rep.ok()) return rep;
  const Bimodule& cc = f.src.coring.carrier;
  const Chain sc = make_chain({f.src.carrier, cc});
  const Chain tc = make_chain({f.tgt.carrier, cc});
  const Matrix ften_c = tc.q.projection *
                        kron(f.mat, Matrix::identity(f.mat.field(), cc.dim)) *
                        sc.q.section;
  // (f ten C) . rho_src = rho_tgt . f
  if (!(ften_c * f.src.coaction == f.tgt.coaction * f.mat)) rep.add("colinear");
  return rep;
}

ValidationReport validate_bicomodule(const Bicomodule& m) {
  ValidationReport rep;
  const Algebra& a = m.left_coring.base;
  const Algebra& b = m.right_coring.base;
  if (!(m.carrier.left == a) || !(m.carrier.right == b)) {
    rep.add("carrier typed over the coring bases");
    return rep;
  }
  rep.merge(validate_bimodule(m.carrier), "carrier");
  if (!rep.ok()) return rep;

  const Bimodule& c = m.left_coring.carrier;
  const Bimodule& d = m.right_coring.carrier;
  const Chain md = make_chain({m.carrier, d});
  const Chain cm = make_chain({c, m.carrier});
  rep.merge(validate_map(BimoduleMap{m.carrier, md.mod, m.rcoaction}),
            "right coaction bilinear");
  rep.merge(validate_map(BimoduleMap{m.carrier, cm.mod, m.lcoaction}),
            "left coaction bilinear");
  if (!rep.ok()) return rep;

  const ChainOp rho = op1(m.rcoaction, m.carrier, md);
  const ChainOp lam = op1(m.lcoaction, m.carrier, cm);
  const ChainOp ddop =
      op1(m.right_coring.delta, d, make_chain({d, d}));
  const ChainOp dcop = op1(m.left_coring.delta, c, make_chain({c, c}));
  const ChainOp edop =
      op1(m.right_coring.counit, d, make_chain({identity_bimodule(b)}));
  const ChainOp ecop =
      op1(m.left_coring.counit, c, make_chain({identity_bimodule(a)}));

  {
    const ChainOp lhs = chain_compose(chain_at(md, 0, rho), rho);
    const ChainOp rhs = chain_compose(chain_at(md, 1, ddop), rho);
    if (!(lhs.mat == rhs.mat)) rep.add("right coaction coassociative");
    const ChainOp counit = chain_compose(
        absorb_right(m.carrier), chain_compose(chain_at(md, 1, edop), rho));
    if (!(counit.mat == Matrix::identity(m.carrier.field, m.carrier.dim))) {
      rep.add("right coaction counital");
    }
  }
  {
    const ChainOp lhs = chain_compose(chain_at(cm, 1, lam), lam);
    const ChainOp rhs = chain_compose(chain_at(cm, 0, dcop), lam);
    if (!(lhs.mat == rhs.mat)) rep.add("left coaction coassociative");
    const ChainOp counit = chain_compose(
        absorb_left(m.carrier), chain_compose(chain_at(cm, 0, ecop), lam));
    if (!(counit.mat == Matrix::identity(m.carrier.field, m.carrier.dim))) {
      rep.add("left coaction counital");
    }
  }
  {
    // (C ten rho) . lambda = (lambda ten D) . rho
    const ChainOp lhs = chain_compose(chain_at(cm, 1, rho), lam);
    const ChainOp rhs = chain_compose(chain_at(md, 0, lam), rho);
    if (!(lhs.mat == rhs.mat)) rep.add("coactions compatible");
  }
  return rep;
}

}  // namespace morita
