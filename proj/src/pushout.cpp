#include "morita/pushout.hpp"

namespace morita {

namespace {

ChainOp coaction_op(const Bimodule& x, const Bimodule& coring_carrier,
                    const Matrix& coaction) {
  return chain_op(make_chain({x}), make_chain({x, coring_carrier}), coaction);
}

ChainOp ent_op(const RemCell& f) {
  return chain_op(make_chain({f->tgt_coring.carrier, f->carrier}),
                  make_chain({f->carrier, f->src_coring.carrier}), f->ent);
}

// [(X M)] -> [X, M]
ChainOp unpack2(const Bimodule& x, const Bimodule& m) {
  return expand2(x, m);
}

}  // namespace

Comodule pushout_apply(const RemCell& cell, const Comodule& x) {
  if (!(x.coring == cell->tgt_coring)) {
    throw CellTypeError("pushout_apply: comodule over the cell's target coring");
  }
  Comodule out;
  out.coring = cell->src_coring;
  const TensorBimodule t = tensor_over(x.carrier, cell->carrier);
  out.carrier = t.mod;
  // (X ten m) . (rho^X ten M), conjugated onto the bracketed carrier
  const ChainOp expand =
      chain_at(make_chain({out.carrier}), 0, unpack2(x.carrier, cell->carrier));
  const ChainOp s1 = chain_at(
      expand.dst, 0, coaction_op(x.carrier, x.coring.carrier, x.coaction));
  const ChainOp s2 = chain_at(s1.dst, 1, ent_op(cell));
  const ChainOp collapse = chain_at(s2.dst, 0, collapse2(x.carrier, cell->carrier));
  out.coaction =
      chain_compose(collapse, chain_compose(s2, chain_compose(s1, expand))).mat;
  return out;
}

ComoduleMorphism pushout_apply_morphism(const RemCell& cell,
                                        const ComoduleMorphism& f) {
  ComoduleMorphism out;
  out.src = pushout_apply(cell, f.src);
  out.tgt = pushout_apply(cell, f.tgt);
  const ChainOp expand =
      chain_at(make_chain({out.src.carrier}), 0, unpack2(f.src.carrier, cell->carrier));
  const ChainOp s1 = chain_at(
      expand.dst, 0,
      chain_op(make_chain({f.src.carrier}), make_chain({f.tgt.carrier}), f.mat));
  const ChainOp collapse = chain_at(s1.dst, 0, collapse2(f.tgt.carrier, cell->carrier));
  out.mat = chain_compose(collapse, chain_compose(s1, expand)).mat;
  return out;
}

Matrix eta_tilde_at(const WremContext& g, const Bimodule& x, const Matrix& coaction) {
  const Bimodule& mc = g.mcell->carrier;
  const Bimodule& nc = g.ncell->carrier;
  const Bimodule& cc = g.mcell->tgt_coring.carrier;
  const Bimodule ia = identity_bimodule(g.mcell->tgt_coring.base);
  const Chain xmn = make_chain({x, mc, nc});
  const ChainOp s1 = chain_at(xmn, 0, coaction_op(x, cc, coaction));  // [X,C,M,N]
  const ChainOp s2 = chain_at(
      s1.dst, 1, chain_op(make_chain({cc, mc, nc}), make_chain({ia}), g.eta));
  const ChainOp s3 = chain_at(s2.dst, 0, absorb_right(x));  // [X]
  return chain_compose(s3, chain_compose(s2, s1)).mat;
}

Matrix rho_tilde_at(const WremContext& g, const Bimodule& y, const Matrix& coaction) {
  const Bimodule& mc = g.mcell->carrier;
  const Bimodule& nc = g.ncell->carrier;
  const Bimodule& dc = g.mcell->src_coring.carrier;
  const Bimodule ib = identity_bimodule(g.mcell->src_coring.base);
  const Chain ynm = make_chain({y, nc, mc});
  const ChainOp s1 = chain_at(ynm, 0, coaction_op(y, dc, coaction));  // [Y,D,N,M]
  const ChainOp s2 = chain_at(
      s1.dst, 1, chain_op(make_chain({dc, nc, mc}), make_chain({ib}), g.rho));
  const ChainOp s3 = chain_at(s2.dst, 0, absorb_right(y));
  return chain_compose(s3, chain_compose(s2, s1)).mat;
}

Matrix eta_tilde(const WremContext& g, const Comodule& x) {
  return eta_tilde_at(g, x.carrier, x.coaction);
}

Matrix rho_tilde(const WremContext& g, const Comodule& y) {
  return rho_tilde_at(g, y.carrier, y.coaction);
}

ComoduleMorphism eta_tilde_morphism(const WremContext& g, const Comodule& x) {
  ComoduleMorphism out;
  out.src = pushout_apply(g.ncell, pushout_apply(g.mcell, x));
  out.tgt = x;
  const Bimodule xm = tensor_over(x.carrier, g.mcell->carrier).mod;
  const ChainOp e1 = chain_at(make_chain({out.src.carrier}), 0,
                              unpack2(xm, g.ncell->carrier));
  const ChainOp e2 = chain_at(e1.dst, 0, unpack2(x.carrier, g.mcell->carrier));
  out.mat = eta_tilde(g, x) * e2.mat * e1.mat;
  return out;
}

ComoduleMorphism rho_tilde_morphism(const WremContext& g, const Comodule& y) {
  ComoduleMorphism out;
  out.src = pushout_apply(g.mcell, pushout_apply(g.ncell, y));
  out.tgt = y;
  const Bimodule yn = tensor_over(y.carrier, g.ncell->carrier).mod;
  const ChainOp e1 = chain_at(make_chain({out.src.carrier}), 0,
                              unpack2(yn, g.mcell->carrier));
  const ChainOp e2 = chain_at(e1.dst, 0, unpack2(y.carrier, g.ncell->carrier));
  out.mat = rho_tilde(g, y) * e2.mat * e1.mat;
  return out;
}

ValidationReport check_cat_context(const WremContext& g, const CatContextSamples& s) {
  ValidationReport rep;
  rep.merge(check_wrem_context(g), "context");
  if (!rep.ok()) return rep;

  for (std::size_t i = 0; i < s.xs.size(); ++i) {
    const Comodule& x = s.xs[i];
    const std::string tag = "X[" + std::to_string(i) + "]";
    rep.merge(validate_comodule(x), tag);
    const Comodule mx = pushout_apply(g.mcell, x);
    rep.merge(validate_comodule(mx), tag + " pushed along M");
    rep.merge(validate_comodule(pushout_apply(g.ncell, mx)), tag + " pushed along NM");
    const ComoduleMorphism et = eta_tilde_morphism(g, x);
    rep.merge(validate_comodule_morphism(et), "eta~ at " + tag + " colinear");
    // rho~_{M(X)} = M(eta~_X)
    const ComoduleMorphism lhs = rho_tilde_morphism(g, mx);
    const ComoduleMorphism rhs = pushout_apply_morphism(g.mcell, et);
    if (!(lhs.mat == rhs.mat)) rep.add("rho~_{M(X)} = M eta~_X at " + tag);
  }
  for (std::size_t i = 0; i < s.ys.size(); ++i) {
    const Comodule& y = s.ys[i];
    const std::string tag = "Y[" + std::to_string(i) + "]";
    rep.merge(validate_comodule(y), tag);
    const Comodule ny = pushout_apply(g.ncell, y);
    rep.merge(validate_comodule(ny), tag + " pushed along N");
    const ComoduleMorphism rt = rho_tilde_morphism(g, y);
    rep.merge(validate_comodule_morphism(rt), "rho~ at " + tag + " colinear");
    // eta~_{N(Y)} = N(rho~_Y)
    const ComoduleMorphism lhs = eta_tilde_morphism(g, ny);
    const ComoduleMorphism rhs = pushout_apply_morphism(g.ncell, rt);
    if (!(lhs.mat == rhs.mat)) rep.add("eta~_{N(Y)} = N rho~_Y at " + tag);
  }
  for (std::size_t i = 0; i < s.xmors.size(); ++i) {
    const ComoduleMorphism& f = s.xmors[i];
    const std::string tag = "f[" + std::to_string(i) + "]";
    rep.merge(validate_comodule_morphism(f), tag);
    const ComoduleMorphism nmf = pushout_apply_morphism(
        g.ncell, pushout_apply_morphism(g.mcell, f));
    const Matrix lhs = eta_tilde_morphism(g, f.tgt).mat * nmf.mat;
    const Matrix rhs = f.mat * eta_tilde_morphism(g, f.src).mat;
    if (!(lhs == rhs)) rep.add("eta~ natural at " + tag);
  }
  for (std::size_t i = 0; i < s.ymors.size(); ++i) {
    const ComoduleMorphism& f = s.ymors[i];
    const std::string tag = "g[" + std::to_string(i) + "]";
    rep.merge(validate_comodule_morphism(f), tag);
    const ComoduleMorphism mnf = pushout_apply_morphism(
        g.mcell, pushout_apply_morphism(g.ncell, f));
    const Matrix lhs = rho_tilde_morphism(g, f.tgt).mat * mnf.mat;
    const Matrix rhs = f.mat * rho_tilde_morphism(g, f.src).mat;
    if (!(lhs == rhs)) rep.add("rho~ natural at " + tag);
  }
  return rep;
}

Comodule comodule_direct_sum(const Comodule& x, const Comodule& y) {
  if (!(x.coring == y.coring)) throw CellTypeError("direct sum over one coring");
  const Field f = x.carrier.field;
  Comodule out;
  out.coring = x.coring;
  Bimodule carrier;
  carrier.left = x.carrier.left;
  carrier.right = x.carrier.right;
  carrier.field = f;
  carrier.dim = x.carrier.dim + y.carrier.dim;
  for (std::size_t i = 0; i < carrier.left.dim; ++i) {
    Matrix op(f, carrier.dim, carrier.dim);
    for (std::size_t r = 0; r < x.carrier.dim; ++r)
      for (std::size_t c = 0; c < x.carrier.dim; ++c)
        op.at(r, c) = x.carrier.lact[i].at(r, c);
    for (std::size_t r = 0; r < y.carrier.dim; ++r)
      for (std::size_t c = 0; c < y.carrier.dim; ++c)
        op.at(x.carrier.dim + r, x.carrier.dim + c) = y.carrier.lact[i].at(r, c);
    carrier.lact.push_back(op);
  }
  for (std::size_t i = 0; i < carrier.right.dim; ++i) {
    Matrix op(f, carrier.dim, carrier.dim);
    for (std::size_t r = 0; r < x.carrier.dim; ++r)
      for (std::size_t c = 0; c < x.carrier.dim; ++c)
        op.at(r, c) = x.carrier.ract[i].at(r, c);
    for (std::size_t r = 0; r < y.carrier.dim; ++r)
      for (std::size_t c = 0; c < y.carrier.dim; ++c)
        op.at(x.carrier.dim + r, x.carrier.dim + c) = y.carrier.ract[i].at(r, c);
    carrier.ract.push_back(op);
  }
  out.carrier = carrier;

  // coaction blockwise through the inclusions
  const Bimodule& cc = x.coring.carrier;
  const Chain sum_c = make_chain({carrier, cc});
  const Chain xc = make_chain({x.carrier, cc});
  const Chain yc = make_chain({y.carrier, cc});
  Matrix ix(f, carrier.dim, x.carrier.dim), iy(f, carrier.dim, y.carrier.dim);
  for (std::size_t r = 0; r < x.carrier.dim; ++r) ix.at(r, r) = Scalar::one(f);
  for (std::size_t r = 0; r < y.carrier.dim; ++r)
    iy.at(x.carrier.dim + r, r) = Scalar::one(f);
  Matrix px(f, x.carrier.dim, carrier.dim), py(f, y.carrier.dim, carrier.dim);
  for (std::size_t r = 0; r < x.carrier.dim; ++r) px.at(r, r) = Scalar::one(f);
  for (std::size_t r = 0; r < y.carrier.dim; ++r)
    py.at(r, x.carrier.dim + r) = Scalar::one(f);
  const Matrix icc = Matrix::identity(f, cc.dim);
  const Matrix inc_x = sum_c.q.projection * kron(ix, icc) * xc.q.section;
  const Matrix inc_y = sum_c.q.projection * kron(iy, icc) * yc.q.section;
  out.coaction = inc_x * x.coaction * px + inc_y * y.coaction * py;
  return out;
}

ReconstructResult reconstruct_context(const Bicomodule& m, const Bicomodule& n,
                                      const Matrix& eta_tilde_cofree,
                                      const Matrix& rho_tilde_cofree) {
  ReconstructResult out;
  const Coring c = n.right_coring;  // over A
  const Coring d = m.right_coring;  // over B
  if (!(c.base == m.carrier.left) || !(d.base == n.carrier.left)) {
    throw CellTypeError("reconstruct_context: coring bases do not interlock");
  }
  out.ctx.mcell = cell_from_bicomodule(m, c);
  out.ctx.ncell = cell_from_bicomodule(n, d);
  ValidationReport& hyp = out.hypotheses;

  const Bimodule& mc = m.carrier;
  const Bimodule& nc = n.carrier;
  const Chain cmn = make_chain({c.carrier, mc, nc});
  const Chain dnm = make_chain({d.carrier, nc, mc});
  if (eta_tilde_cofree.rows() != c.carrier.dim ||
      eta_tilde_cofree.cols() != cmn.mod.dim) {
    hyp.add("eta~_C shape");
  }
  if (rho_tilde_cofree.rows() != d.carrier.dim ||
      rho_tilde_cofree.cols() != dnm.mod.dim) {
    hyp.add("rho~_D shape");
  }
  if (!hyp.ok()) return out;

  hyp.merge(validate_map(BimoduleMap{cmn.mod, c.carrier, eta_tilde_cofree}),
            "eta~_C bilinear");
  hyp.merge(validate_map(BimoduleMap{dnm.mod, d.carrier, rho_tilde_cofree}),
            "rho~_D bilinear");

  // colinearity at the cofree comodule: Delta . eta~ = (eta~ ten C) . rho^{C ten M ten N}
  {
    const Chain cc2 = make_chain({c.carrier, c.carrier});
    const ChainOp dop = chain_op(make_chain({c.carrier}), cc2, c.delta);
    const ChainOp etop = chain_op(cmn, make_chain({c.carrier}), eta_tilde_cofree);
    const ChainOp lhs = chain_compose(dop, etop);
    const ChainOp s1 = chain_at(cmn, 0, dop);                 // [C,C,M,N]
    const ChainOp s2 = chain_at(s1.dst, 1, ent_op(out.ctx.mcell));  // [C,M,D,N]
    const ChainOp s3 = chain_at(s2.dst, 2, ent_op(out.ctx.ncell));  // [C,M,N,C]
    const ChainOp s4 = chain_at(s3.dst, 0, etop);             // [C,C]
    const ChainOp rhs =
        chain_compose(s4, chain_compose(s3, chain_compose(s2, s1)));
    if (!(lhs.mat == rhs.mat)) hyp.add("eta~_C colinear at the cofree comodule");
  }
  {
    const Chain dd2 = make_chain({d.carrier, d.carrier});
    const ChainOp dop = chain_op(make_chain({d.carrier}), dd2, d.delta);
    const ChainOp rtop = chain_op(dnm, make_chain({d.carrier}), rho_tilde_cofree);
    const ChainOp lhs = chain_compose(dop, rtop);
    const ChainOp s1 = chain_at(dnm, 0, dop);
    const ChainOp s2 = chain_at(s1.dst, 1, ent_op(out.ctx.ncell));
    const ChainOp s3 = chain_at(s2.dst, 2, ent_op(out.ctx.mcell));
    const ChainOp s4 = chain_at(s3.dst, 0, rtop);
    const ChainOp rhs =
        chain_compose(s4, chain_compose(s3, chain_compose(s2, s1)));
    if (!(lhs.mat == rhs.mat)) hyp.add("rho~_D colinear at the cofree comodule");
  }

  out.ctx.eta = c.counit * eta_tilde_cofree;
  out.ctx.rho = d.counit * rho_tilde_cofree;
  return out;
}

}  // namespace morita
