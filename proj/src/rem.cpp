#include "morita/coring.hpp"

namespace morita {

namespace {

ChainOp op1(const Matrix& mat, const Bimodule& src, const Chain& dst) {
  return chain_op(make_chain({src}), dst, mat);
}

ChainOp eps_op(const Coring& c) {
  return op1(c.counit, c.carrier, make_chain({identity_bimodule(c.base)}));
}

ChainOp delta_op(const Coring& c) {
  return op1(c.delta, c.carrier, make_chain({c.carrier, c.carrier}));
}

// the entwining as a chain op [C, M] -> [M, D]
ChainOp ent_op(const RemCell& f) {
  const Chain src = make_chain({f->tgt_coring.carrier, f->carrier});
  const Chain dst = make_chain({f->carrier, f->src_coring.carrier});
  return chain_op(src, dst, f->ent);
}

// a reduced 2-cell as a chain op [C, M] -> [M']
ChainOp red_op(const RemTwo& x) {
  const Chain src = make_chain({x.src->tgt_coring.carrier, x.src->carrier});
  return chain_op(src, make_chain({x.tgt->carrier}), x.mat);
}

}  // namespace

RemCell rem_atom(const Coring& tgt, const Coring& src, const Bimodule& carrier,
                 const Matrix& ent) {
  auto n = std::make_shared<RemCellNode>();
  n->kind = RemCellNode::Kind::atom;
  n->src_coring = src;
  n->tgt_coring = tgt;
  n->carrier = carrier;
  n->ent = ent;
  return n;
}

RemCell rem_ident(const Coring& c) {
  auto n = std::make_shared<RemCellNode>();
  n->kind = RemCellNode::Kind::ident;
  n->src_coring = c;
  n->tgt_coring = c;
  n->carrier = identity_bimodule(c.base);
  n->ent = iota_inv(c.carrier).mat;  // C ten A -> A ten C
  return n;
}

RemCell rem_tensor(const RemCell& l, const RemCell& r) {
  if (!(l->src_coring == r->tgt_coring)) {
    throw MiddleMismatchError("rem_tensor: middle coring");
  }
  auto n = std::make_shared<RemCellNode>();
  n->kind = RemCellNode::Kind::tensor;
  n->src_coring = r->src_coring;
  n->tgt_coring = l->tgt_coring;
  n->l = l;
  n->r = r;
  const Bimodule& mc = l->carrier;
  const Bimodule& wc = r->carrier;
  n->carrier = tensor_over(mc, wc).mod;

  // (M ten w) . (m ten W) on [C, M, W], conjugated to the bracketed carrier
  const Bimodule& c = l->tgt_coring.carrier;
  const Chain c_mw = make_chain({c, n->carrier});
  const ChainOp expand = chain_at(c_mw, 1, expand2(mc, wc));
  const ChainOp step1 = chain_at(expand.dst, 0, ent_op(l));      // -> [M, D, W]
  const ChainOp step2 = chain_at(step1.dst, 1, ent_op(r));       // -> [M, W, E]
  const ChainOp collapse = chain_at(step2.dst, 0, collapse2(mc, wc));  // -> [MW, E]
  n->ent =
      chain_compose(collapse, chain_compose(step2, chain_compose(step1, expand))).mat;
  return n;
}

bool rem_cell_eq(const RemCell& a, const RemCell& b) {
  if (a.get() == b.get()) return true;
  if (a->kind != b->kind) return false;
  if (!(a->src_coring == b->src_coring) || !(a->tgt_coring == b->tgt_coring)) {
    return false;
  }
  switch (a->kind) {
    case RemCellNode::Kind::atom:
      return a->carrier == b->carrier && a->ent == b->ent;
    case RemCellNode::Kind::ident:
      return true;
    case RemCellNode::Kind::tensor:
      return rem_cell_eq(a->l, b->l) && rem_cell_eq(a->r, b->r);
  }
  return false;
}

std::string rem_cell_str(const RemCell& c) {
  switch (c->kind) {
    case RemCellNode::Kind::atom:
      return "(M dim " + std::to_string(c->carrier.dim) + ", m)";
    case RemCellNode::Kind::ident:
      return "1";
    case RemCellNode::Kind::tensor:
      return "(" + rem_cell_str(c->l) + " . " + rem_cell_str(c->r) + ")";
  }
  return "?";
}

ValidationReport check_entwined_cell(const RemCell& f) {
  ValidationReport rep;
  const Coring& tc = f->tgt_coring;  // (C:A)
  const Coring& sc = f->src_coring;  // (D:B)
  if (!(f->carrier.left == tc.base) || !(f->carrier.right == sc.base)) {
    rep.add("carrier typed (A,B)");
    return rep;
  }
  rep.merge(validate_bimodule(f->carrier), "carrier");
  if (!rep.ok()) return rep;

  const Bimodule& c = tc.carrier;
  const Bimodule& d = sc.carrier;
  const Chain cm = make_chain({c, f->carrier});
  const Chain md = make_chain({f->carrier, d});
  if (f->ent.rows() != md.mod.dim || f->ent.cols() != cm.mod.dim) {
    rep.add("entwining shape");
    return rep;
  }
  rep.merge(validate_map(BimoduleMap{cm.mod, md.mod, f->ent}), "entwining bilinear");
  if (!rep.ok()) return rep;

  const ChainOp m = ent_op(f);

  // (M ten eps_D) . m = iota_M . (eps_C ten M), both into [M, 1_B]
  {
    const ChainOp lhs = chain_compose(chain_at(md, 1, eps_op(sc)), m);
    const ChainOp rhs =
        chain_compose(iota(f->carrier), chain_at(cm, 0, eps_op(tc)));
    if (!(lhs.mat == rhs.mat)) rep.add("counit condition (2.1)");
  }
  // (m ten D) . (C ten m) . (Delta_C ten M) = (M ten Delta_D) . m
  {
    const ChainOp s1 = chain_at(cm, 0, delta_op(tc));      // -> [C, C, M]
    const ChainOp s2 = chain_at(s1.dst, 1, m);             // -> [C, M, D]
    const ChainOp s3 = chain_at(s2.dst, 0, m);             // -> [M, D, D]
    const ChainOp lhs = chain_compose(s3, chain_compose(s2, s1));
    const ChainOp rhs = chain_compose(chain_at(md, 1, delta_op(sc)), m);
    if (!(lhs.mat == rhs.mat)) rep.add("comultiplication condition (2.1)");
  }
  return rep;
}

RemCell cell_from_bicomodule(const Bicomodule& m, const Coring& target) {
  const Algebra& a = m.left_coring.base;
  if (!(m.left_coring == trivial_coring(a))) {
    throw CellTypeError("cell_from_bicomodule needs a trivial left coring");
  }
  if (!(target.base == a)) {
    throw CellTypeError("target coring over the carrier's left algebra");
  }
  const Bimodule& c = target.carrier;
  const Bimodule& d = m.right_coring.carrier;
  const Chain cm = make_chain({c, m.carrier});
  // (eps_C ten M ten D) . (C ten rho^M), then absorb A
  const ChainOp s1 =
      chain_at(cm, 1, op1(m.rcoaction, m.carrier, make_chain({m.carrier, d})));
  const ChainOp s2 = chain_at(s1.dst, 0, eps_op(target));
  const ChainOp s3 = chain_at(s2.dst, 0, absorb_left(m.carrier));
  const ChainOp ent = chain_compose(s3, chain_compose(s2, s1));
  return rem_atom(target, m.right_coring, m.carrier, ent.mat);
}

RemBicat::Two RemBicat::id2(const One& f) const {
  // l_M . (eps ten M) in reduced form
  const Chain cm = make_chain({f->tgt_coring.carrier, f->carrier});
  const ChainOp s1 = chain_at(cm, 0, eps_op(f->tgt_coring));
  const ChainOp s2 = chain_at(s1.dst, 0, absorb_left(f->carrier));
  return Two{f, f, chain_compose(s2, s1).mat};
}

RemBicat::Two RemBicat::vcomp(const Two& after, const Two& before) const {
  if (!rem_cell_eq(after.src, before.tgt)) throw CellTypeError("rem vcomp seam");
  // after . (C ten before) . (Delta ten M)
  const Coring& tc = before.src->tgt_coring;
  const Chain cm = make_chain({tc.carrier, before.src->carrier});
  const ChainOp s1 = chain_at(cm, 0, delta_op(tc));
  const ChainOp s2 = chain_at(s1.dst, 1, red_op(before));
  const ChainOp s3 = chain_compose(red_op(after), chain_compose(s2, s1));
  return Two{before.src, after.tgt, s3.mat};
}

RemBicat::Two RemBicat::hcomp2(const Two& x, const Two& y) const {
  // (M' ten beta) . (m' ten W) . (C ten alpha ten W) . (Delta ten M ten W)
  const One src = rem_tensor(x.src, y.src);
  const One tgt = rem_tensor(x.tgt, y.tgt);
  const Coring& tc = x.src->tgt_coring;
  const Bimodule& mc = x.src->carrier;
  const Bimodule& wc = y.src->carrier;
  const Chain c_mw = make_chain({tc.carrier, src->carrier});
  const ChainOp expand = chain_at(c_mw, 1, expand2(mc, wc));          // [C,M,W]
  const ChainOp s1 = chain_at(expand.dst, 0, delta_op(tc));           // [C,C,M,W]
  const ChainOp s2 = chain_at(s1.dst, 1, red_op(x));                  // [C,M',W]
  const ChainOp s3 = chain_at(s2.dst, 0, ent_op(x.tgt));              // [M',D,W]
  const ChainOp s4 = chain_at(s3.dst, 1, red_op(y));                  // [M',W']
  const ChainOp collapse = chain_at(s4.dst, 0, collapse2(x.tgt->carrier, y.tgt->carrier));
  const ChainOp total = chain_compose(
      collapse,
      chain_compose(s4, chain_compose(s3, chain_compose(s2, chain_compose(s1, expand)))));
  return Two{src, tgt, total.mat};
}

namespace {

// reduced form of a plain bimodule map out of src's carrier:
// phi_flat = phi . l_M . (eps ten M)
Matrix flat_two(const RemBicat& rem, const RemCell& src, const Matrix& phi) {
  return phi * rem.id2(src).mat;
}

}  // namespace

RemBicat::Two RemBicat::associator(const One& f, const One& g, const One& h) const {
  const One src = rem_tensor(rem_tensor(f, g), h);
  const One tgt = rem_tensor(f, rem_tensor(g, h));
  const AssocPair ap = associator3(f->carrier, g->carrier, h->carrier);
  return Two{src, tgt, flat_two(*this, src, ap.fwd.mat)};
}

RemBicat::Two RemBicat::associator_inv(const One& f, const One& g,
                                       const One& h) const {
  const One src = rem_tensor(f, rem_tensor(g, h));
  const One tgt = rem_tensor(rem_tensor(f, g), h);
  const AssocPair ap = associator3(f->carrier, g->carrier, h->carrier);
  return Two{src, tgt, flat_two(*this, src, ap.inv.mat)};
}

RemBicat::Two RemBicat::lunitor(const One& f) const {
  // C ten (A ten M) -> M: eps, then absorb twice
  const One src = rem_tensor(rem_ident(f->tgt_coring), f);
  const Coring& tc = f->tgt_coring;
  const Bimodule ia = identity_bimodule(tc.base);
  const Chain c_am = make_chain({tc.carrier, src->carrier});
  const ChainOp expand = chain_at(c_am, 1, expand2(ia, f->carrier));
  const ChainOp s1 = chain_at(expand.dst, 0, eps_op(tc));        // [A,A,M]
  const ChainOp s2 = chain_at(s1.dst, 1, absorb_left(f->carrier));  // [A,M]
  const ChainOp s3 = chain_at(s2.dst, 0, absorb_left(f->carrier));  // [M]
  const ChainOp total =
      chain_compose(s3, chain_compose(s2, chain_compose(s1, expand)));
  return Two{src, f, total.mat};
}

RemBicat::Two RemBicat::runitor(const One& f) const {
  // C ten (M ten B) -> M
  const One src = rem_tensor(f, rem_ident(f->src_coring));
  const Coring& tc = f->tgt_coring;
  const Bimodule ib = identity_bimodule(f->src_coring.base);
  const Chain c_mb = make_chain({tc.carrier, src->carrier});
  const ChainOp expand = chain_at(c_mb, 1, expand2(f->carrier, ib));
  const ChainOp s1 = chain_at(expand.dst, 0, eps_op(tc));            // [A,M,B]
  const ChainOp s2 = chain_at(s1.dst, 0, absorb_left(f->carrier));   // [M,B]
  const ChainOp s3 = chain_at(s2.dst, 0, absorb_right(f->carrier));  // [M]
  const ChainOp total =
      chain_compose(s3, chain_compose(s2, chain_compose(s1, expand)));
  return Two{src, f, total.mat};
}

RemBicat::Two RemBicat::lunitor_inv(const One& f) const {
  const One tgt = rem_tensor(rem_ident(f->tgt_coring), f);
  const Coring& tc = f->tgt_coring;
  const Bimodule ia = identity_bimodule(tc.base);
  const Chain cm = make_chain({tc.carrier, f->carrier});
  const ChainOp s1 = chain_at(cm, 0, eps_op(tc));                 // [A,M]
  const ChainOp s2 = chain_at(s1.dst, 0, collapse2(ia, f->carrier));  // [(AM)]
  return Two{f, tgt, chain_compose(s2, s1).mat};
}

RemBicat::Two RemBicat::runitor_inv(const One& f) const {
  const One tgt = rem_tensor(f, rem_ident(f->src_coring));
  const Coring& tc = f->tgt_coring;
  const Bimodule ib = identity_bimodule(f->src_coring.base);
  const Chain cm = make_chain({tc.carrier, f->carrier});
  const ChainOp s1 = chain_at(cm, 0, eps_op(tc));                    // [A,M]
  const ChainOp s2 = chain_at(s1.dst, 0, absorb_left(f->carrier));   // [M]
  const ChainOp s3 = chain_compose(chain_at(s2.dst, 0, insert_right(f->carrier)),
                                   chain_compose(s2, s1));           // [M,B]
  const ChainOp s4 = chain_at(s3.dst, 0, collapse2(f->carrier, ib));
  return Two{f, tgt, chain_compose(s4, s3).mat};
}

ValidationReport RemBicat::validate2(const Two& x) const {
  ValidationReport rep;
  if (!(x.src->tgt_coring == x.tgt->tgt_coring) ||
      !(x.src->src_coring == x.tgt->src_coring)) {
    rep.add("2-cell within one Hom-category");
    return rep;
  }
  const Coring& tc = x.src->tgt_coring;
  const Chain cm = make_chain({tc.carrier, x.src->carrier});
  if (x.mat.rows() != x.tgt->carrier.dim || x.mat.cols() != cm.mod.dim) {
    rep.add("reduced 2-cell shape");
    return rep;
  }
  rep.merge(validate_map(BimoduleMap{cm.mod, x.tgt->carrier, x.mat}), "bilinear");
  if (!rep.ok()) return rep;

  // Eq. (2.2): m' . (C ten alpha) . (Delta ten M) = (alpha ten D) . (C ten m) . (Delta ten M)
  const ChainOp s0 = chain_at(cm, 0, delta_op(tc));  // [C,C,M]
  const ChainOp lhs = chain_compose(
      ent_op(x.tgt), chain_compose(chain_at(s0.dst, 1, red_op(x)), s0));
  const ChainOp cm_step = chain_at(s0.dst, 1, ent_op(x.src));  // [C,M,D]
  const ChainOp rhs = chain_compose(
      chain_at(cm_step.dst, 0, red_op(x)), chain_compose(cm_step, s0));
  if (!(lhs.mat == rhs.mat)) rep.add("2-cell condition (2.2)");
  return rep;
}

std::string RemBicat::diff2(const Two& a, const Two& b) const {
  if (!rem_cell_eq(a.src, b.src) || !rem_cell_eq(a.tgt, b.tgt)) {
    return "2-cells typed between different cells: " + rem_cell_str(a.src) + " -> " +
           rem_cell_str(a.tgt) + " vs " + rem_cell_str(b.src) + " -> " +
           rem_cell_str(b.tgt);
  }
  for (std::size_t i = 0; i < a.mat.rows(); ++i)
    for (std::size_t j = 0; j < a.mat.cols(); ++j)
      if (a.mat.at(i, j) != b.mat.at(i, j)) {
        return "entry (" + std::to_string(i) + "," + std::to_string(j) +
               "): " + a.mat.at(i, j).str() + " vs " + b.mat.at(i, j).str();
      }
  return "";
}

Coring trivial_coring(const Algebra& a) {
  Coring c;
  c.base = a;
  c.carrier = identity_bimodule(a);
  c.delta = insert_left(c.carrier).mat;
  c.counit = Matrix::identity(a.field, a.dim);
  return c;
}

WremContext wrem_identity(const Coring& c) {
  WremContext g;
  g.mcell = rem_ident(c);
  g.ncell = rem_ident(c);
  const Bimodule ia = identity_bimodule(c.base);
  const Chain caa = make_chain({c.carrier, ia, ia});
  const ChainOp s1 = chain_at(caa, 0, eps_op(c));            // [A,A,A]
  const ChainOp s2 = chain_at(s1.dst, 0, absorb_left(ia));   // [A,A]
  const ChainOp s3 = chain_at(s2.dst, 0, absorb_left(ia));   // [A]
  g.eta = chain_compose(s3, chain_compose(s2, s1)).mat;
  g.rho = g.eta;
  return g;
}

ValidationReport check_wrem_context(const WremContext& g) {
  ValidationReport rep;
  rep.merge(check_entwined_cell(g.mcell), "(M,m)");
  rep.merge(check_entwined_cell(g.ncell), "(N,n)");
  if (!rep.ok()) return rep;
  const Coring& ca = g.mcell->tgt_coring;  // (C:A)
  const Coring& db = g.mcell->src_coring;  // (D:B)
  if (!(g.ncell->tgt_coring == db) || !(g.ncell->src_coring == ca)) {
    rep.add("(N,n) opposes (M,m)");
    return rep;
  }
  const Bimodule& c = ca.carrier;
  const Bimodule& d = db.carrier;
  const Bimodule& mc = g.mcell->carrier;
  const Bimodule& nc = g.ncell->carrier;
  const Bimodule ia = identity_bimodule(ca.base);
  const Bimodule ib = identity_bimodule(db.base);

  const Chain cmn = make_chain({c, mc, nc});
  const Chain dnm = make_chain({d, nc, mc});
  if (g.eta.rows() != ca.base.dim || g.eta.cols() != cmn.mod.dim) {
    rep.add("eta shape");
    return rep;
  }
  if (g.rho.rows() != db.base.dim || g.rho.cols() != dnm.mod.dim) {
    rep.add("rho shape");
    return rep;
  }
  rep.merge(validate_map(BimoduleMap{cmn.mod, ia, g.eta}), "eta bilinear");
  rep.merge(validate_map(BimoduleMap{dnm.mod, ib, g.rho}), "rho bilinear");
  if (!rep.ok()) return rep;

  const ChainOp etaop = chain_op(cmn, make_chain({ia}), g.eta);
  const ChainOp rhoop = chain_op(dnm, make_chain({ib}), g.rho);
  const ChainOp mop = ent_op(g.mcell);
  const ChainOp nop = ent_op(g.ncell);

  // (I-1) up to iota: l . (eta ten C) . (C ten M ten n) . (C ten m ten N)
  //   . (Delta ten M ten N)  =  r . (C ten eta) . (Delta ten M ten N)
  {
    const ChainOp s1 = chain_at(cmn, 0, delta_op(ca));      // [C,C,M,N]
    const ChainOp s2 = chain_at(s1.dst, 1, mop);            // [C,M,D,N]
    const ChainOp s3 = chain_at(s2.dst, 2, nop);            // [C,M,N,C]
    const ChainOp s4 = chain_at(s3.dst, 0, etaop);          // [A,C]
    const ChainOp s5 = chain_at(s4.dst, 0, absorb_left(c)); // [C]
    const ChainOp lhs = chain_compose(
        s5, chain_compose(s4, chain_compose(s3, chain_compose(s2, s1))));
    const ChainOp t2 = chain_at(s1.dst, 1, etaop);           // [C,A]
    const ChainOp rhs = chain_compose(
        chain_at(t2.dst, 0, absorb_right(c)), chain_compose(t2, s1));
    if (!(lhs.mat == rhs.mat)) rep.add("(I-1)");
  }
  // (I-2), symmetric
  {
    const ChainOp s1 = chain_at(dnm, 0, delta_op(db));      // [D,D,N,M]
    const ChainOp s2 = chain_at(s1.dst, 1, nop);            // [D,N,C,M]
    const ChainOp s3 = chain_at(s2.dst, 2, mop);            // [D,N,M,D]
    const ChainOp s4 = chain_at(s3.dst, 0, rhoop);          // [B,D]
    const ChainOp s5 = chain_at(s4.dst, 0, absorb_left(d)); // [D]
    const ChainOp lhs = chain_compose(
        s5, chain_compose(s4, chain_compose(s3, chain_compose(s2, s1))));
    const ChainOp t2 = chain_at(s1.dst, 1, rhoop);          // [D,B]
    const ChainOp rhs = chain_compose(
        chain_at(t2.dst, 0, absorb_right(d)), chain_compose(t2, s1));
    if (!(lhs.mat == rhs.mat)) rep.add("(I-2)");
  }
  // (II-1): iota_M . (eta ten M) = (M ten rho) . (m ten N ten M)
  {
    const Chain cmnm = make_chain({c, mc, nc, mc});
    const ChainOp s1 = chain_at(cmnm, 0, etaop);  // [A,M]
    const ChainOp lhs = chain_compose(iota(mc), s1);
    const ChainOp t1 = chain_at(cmnm, 0, mop);    // [M,D,N,M]
    const ChainOp t2 = chain_at(t1.dst, 1, rhoop);  // [M,B]
    const ChainOp rhs = chain_compose(t2, t1);
    if (!(lhs.mat == rhs.mat)) rep.add("(II-1)");
  }
  // (II-2): iota_N . (rho ten N) = (N ten eta) . (n ten M ten N)
  {
    const Chain dnmn = make_chain({d, nc, mc, nc});
    const ChainOp s1 = chain_at(dnmn, 0, rhoop);  // [B,N]
    const ChainOp lhs = chain_compose(iota(nc), s1);
    const ChainOp t1 = chain_at(dnmn, 0, nop);    // [N,C,M,N]
    const ChainOp t2 = chain_at(t1.dst, 1, etaop);  // [N,A]
    const ChainOp rhs = chain_compose(t2, t1);
    if (!(lhs.mat == rhs.mat)) rep.add("(II-2)");
  }
  return rep;
}

WideContext<RemBicat> wrem_to_generic(const WremContext& g) {
  const RemBicat rem;
  WideContext<RemBicat> out;
  out.f = g.mcell;
  out.g = g.ncell;
  const Coring& ca = g.mcell->tgt_coring;
  const Coring& db = g.mcell->src_coring;
  const Bimodule& mc = g.mcell->carrier;
  const Bimodule& nc = g.ncell->carrier;
  {
    const RemCell mn = rem_tensor(g.mcell, g.ncell);
    const Chain c_mn = make_chain({ca.carrier, mn->carrier});
    const ChainOp expand = chain_at(c_mn, 1, expand2(mc, nc));
    out.eta = RemTwo{mn, rem_ident(ca), g.eta * expand.mat};
  }
  {
    const RemCell nm = rem_tensor(g.ncell, g.mcell);
    const Chain d_nm = make_chain({db.carrier, nm->carrier});
    const ChainOp expand = chain_at(d_nm, 1, expand2(nc, mc));
    out.rho = RemTwo{nm, rem_ident(db), g.rho * expand.mat};
  }
  return out;
}

WremContext wrem_from_generic(const RemBicat& rem, const WideContext<RemBicat>& c) {
  WremContext g;
  g.mcell = c.f;
  g.ncell = c.g;
  const Coring& ca = c.f->tgt_coring;
  const Coring& db = c.f->src_coring;
  const Bimodule& mc = c.f->carrier;
  const Bimodule& nc = c.g->carrier;
  {
    const Chain cmn = make_chain({ca.carrier, mc, nc});
    const ChainOp collapse = chain_at(cmn, 1, collapse2(mc, nc));
    g.eta = c.eta.mat * collapse.mat;
  }
  {
    const Chain dnm = make_chain({db.carrier, nc, mc});
    const ChainOp collapse = chain_at(dnm, 1, collapse2(nc, mc));
    g.rho = c.rho.mat * collapse.mat;
  }
  return g;
}

WremContext classical_to_wrem(const WideContext<BimBicat>& ctx) {
  const Bimodule& fmod = ctx.f->mod;
  const Bimodule& gmod = ctx.g->mod;
  const Coring ta = trivial_coring(fmod.left);
  const Coring tb = trivial_coring(fmod.right);
  WremContext g;
  g.mcell = rem_atom(ta, tb, fmod, iota(fmod).mat);
  g.ncell = rem_atom(tb, ta, gmod, iota(gmod).mat);
  {
    const Chain afg = make_chain({ta.carrier, fmod, gmod});
    const ChainOp absorb = chain_at(afg, 0, absorb_left(fmod));
    const ChainOp collapse = chain_at(absorb.dst, 0, collapse2(fmod, gmod));
    g.eta = ctx.eta.mat * collapse.mat * absorb.mat;
  }
  {
    const Chain bgf = make_chain({tb.carrier, gmod, fmod});
    const ChainOp absorb = chain_at(bgf, 0, absorb_left(gmod));
    const ChainOp collapse = chain_at(absorb.dst, 0, collapse2(gmod, fmod));
    g.rho = ctx.rho.mat * collapse.mat * absorb.mat;
  }
  return g;
}

WideContext<BimBicat> wrem_to_classical(const WremContext& g) {
  const Coring& ta = g.mcell->tgt_coring;
  const Coring& tb = g.mcell->src_coring;
  if (!(ta == trivial_coring(ta.base)) || !(tb == trivial_coring(tb.base))) {
    throw CellTypeError("wrem_to_classical needs trivial corings");
  }
  const Bimodule& fmod = g.mcell->carrier;
  const Bimodule& gmod = g.ncell->carrier;
  if (!(g.mcell->ent == iota(fmod).mat) || !(g.ncell->ent == iota(gmod).mat)) {
    throw CellTypeError("entwinings over trivial corings must be iota");
  }
  const Cell1 cf = cell_atom(fmod);
  const Cell1 cg = cell_atom(gmod);
  WideContext<BimBicat> out;
  out.f = cf;
  out.g = cg;
  {
    const Chain fg = make_chain({fmod, gmod});
    const ChainOp split = chain_at(make_chain({fg.mod}), 0, expand2(fmod, gmod));
    const ChainOp insert = chain_at(split.dst, 0, insert_left(fmod));
    out.eta = Cell2{cell_tensor(cf, cg), cell_ident(ta.base),
                    g.eta * insert.mat * split.mat};
  }
  {
    const Chain gf = make_chain({gmod, fmod});
    const ChainOp split = chain_at(make_chain({gf.mod}), 0, expand2(gmod, fmod));
    const ChainOp insert = chain_at(split.dst, 0, insert_left(gmod));
    out.rho = Cell2{cell_tensor(cg, cf), cell_ident(tb.base),
                    g.rho * insert.mat * split.mat};
  }
  return out;
}

}  // namespace morita
