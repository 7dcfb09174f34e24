#pragma once

#include "morita/bicategory.hpp"

namespace morita {

struct NoSolutionError : std::runtime_error {
  explicit NoSolutionError(const std::string& what)
      : std::runtime_error("no solution: " + what) {}
};

struct InternalConsistencyError : std::runtime_error {
  explicit InternalConsistencyError(const std::string& what)
      : std::runtime_error("internal consistency failure: " + what) {}
};

// A wide right Morita context from B to A: f in Hom(B,A), g in Hom(A,B),
// eta: fg -> 1_A, rho: gf -> 1_B subject to the two compatibility diagrams.
template <Bicategory I>
struct WideContext {
  typename I::One f, g;
  typename I::Two eta, rho;
};

// A morphism of contexts, kept with its endpoints.
template <Bicategory I>
struct ContextMorphism {
  WideContext<I> src, tgt;
  typename I::Two alpha, beta;
};

template <Bicategory I>
bool context_eq(const I& b, const WideContext<I>& x, const WideContext<I>& y) {
  return b.eq1(x.f, y.f) && b.eq1(x.g, y.g) && b.eq2(x.eta, y.eta) &&
         b.eq2(x.rho, y.rho);
}

// Both diagrams of (1.1), checked exactly; failures carry both composites.
template <Bicategory I>
ValidationReport check_context(const I& b, const WideContext<I>& c) {
  ValidationReport rep;
  const auto A = b.tgt0(c.f);
  const auto B = b.src0(c.f);
  if (!b.eq0(b.tgt0(c.g), B) || !b.eq0(b.src0(c.g), A)) {
    rep.add("g opposes f");
    return rep;
  }
  if (!b.eq1(b.src1(c.eta), b.hcomp1(c.f, c.g)) ||
      !b.eq1(b.tgt1(c.eta), b.id1(A))) {
    rep.add("eta typed fg -> 1_A");
    return rep;
  }
  if (!b.eq1(b.src1(c.rho), b.hcomp1(c.g, c.f)) ||
      !b.eq1(b.tgt1(c.rho), b.id1(B))) {
    rep.add("rho typed gf -> 1_B");
    return rep;
  }
  rep.merge(b.validate2(c.eta), "eta");
  rep.merge(b.validate2(c.rho), "rho");
  if (!rep.ok()) return rep;

  // (gf)g --assoc--> g(fg) --1 eta--> g 1_A --r--> g
  //   equals (gf)g --rho 1--> 1_B g --l--> g
  {
    const auto lhs = b.vcomp(
        b.runitor(c.g),
        b.vcomp(b.hcomp2(b.id2(c.g), c.eta), b.associator(c.g, c.f, c.g)));
    const auto rhs = b.vcomp(b.lunitor(c.g), b.hcomp2(c.rho, b.id2(c.g)));
    if (!b.eq2(lhs, rhs)) rep.add("diagram (1.1) on (gf)g", b.diff2(lhs, rhs));
  }
  // (fg)f --eta 1--> 1_A f --l--> f
  //   equals (fg)f --assoc--> f(gf) --1 rho--> f 1_B --r--> f
  {
    const auto lhs = b.vcomp(b.lunitor(c.f), b.hcomp2(c.eta, b.id2(c.f)));
    const auto rhs = b.vcomp(
        b.runitor(c.f),
        b.vcomp(b.hcomp2(b.id2(c.f), c.rho), b.associator(c.f, c.g, c.f)));
    if (!b.eq2(lhs, rhs)) rep.add("diagram (1.1) on (fg)f", b.diff2(lhs, rhs));
  }
  return rep;
}

// The compatibility squares (1.3).
template <Bicategory I>
ValidationReport check_morphism(const I& b, const ContextMorphism<I>& m) {
  ValidationReport rep;
  const auto& s = m.src;
  const auto& t = m.tgt;
  if (!b.eq1(b.src1(m.alpha), s.f) || !b.eq1(b.tgt1(m.alpha), t.f)) {
    rep.add("alpha typed f -> f'");
    return rep;
  }
  if (!b.eq1(b.src1(m.beta), s.g) || !b.eq1(b.tgt1(m.beta), t.g)) {
    rep.add("beta typed g -> g'");
    return rep;
  }
  rep.merge(b.validate2(m.alpha), "alpha");
  rep.merge(b.validate2(m.beta), "beta");
  if (!rep.ok()) return rep;
  {
    const auto lhs = b.vcomp(t.eta, b.hcomp2(m.alpha, m.beta));
    if (!b.eq2(lhs, s.eta)) rep.add("eta' . (alpha beta) = eta", b.diff2(lhs, s.eta));
  }
  {
    const auto lhs = b.vcomp(t.rho, b.hcomp2(m.beta, m.alpha));
    if (!b.eq2(lhs, s.rho)) rep.add("rho' . (beta alpha) = rho", b.diff2(lhs, s.rho));
  }
  return rep;
}

// The *-product of Eq. (1.2): (f,g,eta,rho) . (p,q,gamma,mu)
//   = (fp, qg, eta * gamma, mu * rho).
template <Bicategory I>
WideContext<I> multiply_contexts(const I& b, const WideContext<I>& G,
                                 const WideContext<I>& L) {
  if (!b.eq0(b.src0(G.f), b.tgt0(L.f))) {
    throw CellTypeError("context product: middle 0-cell");
  }
  const auto& f = G.f;
  const auto& g = G.g;
  const auto& p = L.f;
  const auto& q = L.g;
  WideContext<I> out;
  out.f = b.hcomp1(f, p);
  out.g = b.hcomp1(q, g);
  {
    // (fp)(qg) -> f(p(qg)) -> f((pq)g) -> f(1_B g) -> fg -> 1_A
    const auto qg = out.g;
    const auto e1 = b.associator(f, p, qg);
    const auto e2 = b.hcomp2(b.id2(f), b.associator_inv(p, q, g));
    const auto e3 = b.hcomp2(b.id2(f), b.hcomp2(L.eta, b.id2(g)));
    const auto e4 = b.hcomp2(b.id2(f), b.lunitor(g));
    out.eta = b.vcomp(G.eta, b.vcomp(e4, b.vcomp(e3, b.vcomp(e2, e1))));
  }
  {
    // (qg)(fp) -> q(g(fp)) -> q((gf)p) -> q(1_B p) -> qp -> 1_C
    const auto fp = out.f;
    const auto e1 = b.associator(q, g, fp);
    const auto e2 = b.hcomp2(b.id2(q), b.associator_inv(g, f, p));
    const auto e3 = b.hcomp2(b.id2(q), b.hcomp2(G.rho, b.id2(p)));
    const auto e4 = b.hcomp2(b.id2(q), b.lunitor(p));
    out.rho = b.vcomp(L.rho, b.vcomp(e4, b.vcomp(e3, b.vcomp(e2, e1))));
  }
  return out;
}

// Corollary 1.5: (alpha, beta)(sigma, tau) = (alpha sigma, tau beta).
template <Bicategory I>
ContextMorphism<I> multiply_morphisms(const I& b, const ContextMorphism<I>& m1,
                                      const ContextMorphism<I>& m2) {
  ContextMorphism<I> out;
  out.src = multiply_contexts(b, m1.src, m2.src);
  out.tgt = multiply_contexts(b, m1.tgt, m2.tgt);
  out.alpha = b.hcomp2(m1.alpha, m2.alpha);
  out.beta = b.hcomp2(m2.beta, m1.beta);
  return out;
}

template <Bicategory I>
ContextMorphism<I> compose_morphisms(const I& b, const ContextMorphism<I>& after,
                                     const ContextMorphism<I>& before) {
  if (!context_eq(b, after.src, before.tgt)) throw CellTypeError("morphism seam");
  return ContextMorphism<I>{before.src, after.tgt, b.vcomp(after.alpha, before.alpha),
                            b.vcomp(after.beta, before.beta)};
}

template <Bicategory I>
ContextMorphism<I> identity_morphism(const I& b, const WideContext<I>& c) {
  return ContextMorphism<I>{c, c, b.id2(c.f), b.id2(c.g)};
}

// 1bar_A = (1_A, 1_A, r_{1_A}, l_{1_A}).
template <Bicategory I>
WideContext<I> identity_context(const I& b, const typename I::Obj& A) {
  const auto one = b.id1(A);
  return WideContext<I>{one, one, b.runitor(one), b.lunitor(one)};
}

// (assoc, assoc_inv): (Gamma Lambda) Omega -> Gamma (Lambda Omega).
template <Bicategory I>
ContextMorphism<I> context_associator(const I& b, const WideContext<I>& G,
                                      const WideContext<I>& L,
                                      const WideContext<I>& O) {
  ContextMorphism<I> m;
  m.src = multiply_contexts(b, multiply_contexts(b, G, L), O);
  m.tgt = multiply_contexts(b, G, multiply_contexts(b, L, O));
  m.alpha = b.associator(G.f, L.f, O.f);
  m.beta = b.associator_inv(O.g, L.g, G.g);
  return m;
}

template <Bicategory I>
ContextMorphism<I> context_associator_inv(const I& b, const WideContext<I>& G,
                                          const WideContext<I>& L,
                                          const WideContext<I>& O) {
  ContextMorphism<I> m;
  m.src = multiply_contexts(b, G, multiply_contexts(b, L, O));
  m.tgt = multiply_contexts(b, multiply_contexts(b, G, L), O);
  m.alpha = b.associator_inv(G.f, L.f, O.f);
  m.beta = b.associator(O.g, L.g, G.g);
  return m;
}

// Unitor pairs. The right one is the paper's (r_f, l_g). The left one is
// typed (l_f, r_g): on 1bar_A Gamma = (1_A f, g 1_A, ...) the first component
// must act on the f side, which forces l_f first.
template <Bicategory I>
ContextMorphism<I> context_right_unitor(const I& b, const WideContext<I>& c) {
  ContextMorphism<I> m;
  m.src = multiply_contexts(b, c, identity_context(b, b.src0(c.f)));
  m.tgt = c;
  m.alpha = b.runitor(c.f);
  m.beta = b.lunitor(c.g);
  return m;
}

template <Bicategory I>
ContextMorphism<I> context_left_unitor(const I& b, const WideContext<I>& c) {
  ContextMorphism<I> m;
  m.src = multiply_contexts(b, identity_context(b, b.tgt0(c.f)), c);
  m.tgt = c;
  m.alpha = b.lunitor(c.f);
  m.beta = b.runitor(c.g);
  return m;
}

template <Bicategory I>
ContextMorphism<I> context_right_unitor_inv(const I& b, const WideContext<I>& c) {
  ContextMorphism<I> m;
  m.src = c;
  m.tgt = multiply_contexts(b, c, identity_context(b, b.src0(c.f)));
  m.alpha = b.runitor_inv(c.f);
  m.beta = b.lunitor_inv(c.g);
  return m;
}

template <Bicategory I>
ContextMorphism<I> context_left_unitor_inv(const I& b, const WideContext<I>& c) {
  ContextMorphism<I> m;
  m.src = c;
  m.tgt = multiply_contexts(b, identity_context(b, b.tgt0(c.f)), c);
  m.alpha = b.lunitor_inv(c.f);
  m.beta = b.runitor_inv(c.g);
  return m;
}

template <Bicategory I>
struct EquivContextResult {
  WideContext<I> ctx;
  std::size_t kernel_dim{0};  // 1 means the recovered rho is unique
};

// Prop. 1.1(iii): from an internal equivalence (eta, theta both invertible),
// recover rho by solving f rho = r_f^{-1} . l_f . (eta f) . assoc^{-1}.
template <class I>
  requires SolvableBicategory<I> && EpiBicategory<I>
EquivContextResult<I> context_from_equivalence(const I& b, const typename I::One& f,
                                               const typename I::One& g,
                                               const typename I::Two& eta,
                                               const typename I::Two& theta) {
  if (!b.try_invert(eta)) throw CellTypeError("eta is not invertible");
  if (!b.try_invert(theta)) throw CellTypeError("theta is not invertible");
  const auto A = b.tgt0(f);
  const auto B = b.src0(f);
  if (!b.eq1(b.src1(eta), b.hcomp1(f, g)) || !b.eq1(b.tgt1(eta), b.id1(A))) {
    throw CellTypeError("eta typed fg -> 1_A");
  }
  if (!b.eq1(b.src1(theta), b.id1(B)) || !b.eq1(b.tgt1(theta), b.hcomp1(g, f))) {
    throw CellTypeError("theta typed 1_B -> gf");
  }
  const auto kappa = b.vcomp(
      b.runitor_inv(f),
      b.vcomp(b.lunitor(f),
              b.vcomp(b.hcomp2(eta, b.id2(f)), b.associator_inv(f, g, f))));
  const auto gf = b.hcomp1(g, f);
  const auto ws = b.solve_right_whisker(f, gf, b.id1(B), kappa);
  if (!ws.solution) {
    throw NoSolutionError("no rho with f rho = kappa; not an equivalence");
  }
  EquivContextResult<I> out;
  out.ctx = WideContext<I>{f, g, eta, *ws.solution};
  out.kernel_dim = ws.kernel_dim;
  return out;
}

template <Bicategory I>
struct EpiIsoReport {
  bool eta_epi{false};
  bool rho_epi{false};
  bool applicable{false};  // both epi
  std::optional<typename I::Two> eta_inv, rho_inv;
  std::string note;
};

// Prop. 1.2 in a concrete instance: when both eta and rho are epi they must
// be invertible. A surjective, non-invertible pair would falsify the
// proposition and raises an internal consistency error.
template <EpiBicategory I>
EpiIsoReport<I> epi_implies_iso(const I& b, const WideContext<I>& c) {
  EpiIsoReport<I> rep;
  rep.eta_epi = b.is_epi(c.eta);
  rep.rho_epi = b.is_epi(c.rho);
  rep.applicable = rep.eta_epi && rep.rho_epi;
  if (!rep.applicable) {
    rep.note = "not both epi; check skipped";
    return rep;
  }
  rep.eta_inv = b.try_invert(c.eta);
  rep.rho_inv = b.try_invert(c.rho);
  if (!rep.eta_inv || !rep.rho_inv) {
    throw InternalConsistencyError("epi eta/rho not invertible");
  }
  if (!b.eq2(b.vcomp(c.eta, *rep.eta_inv), b.id2(b.tgt1(c.eta))) ||
      !b.eq2(b.vcomp(*rep.eta_inv, c.eta), b.id2(b.src1(c.eta))) ||
      !b.eq2(b.vcomp(c.rho, *rep.rho_inv), b.id2(b.tgt1(c.rho))) ||
      !b.eq2(b.vcomp(*rep.rho_inv, c.rho), b.id2(b.src1(c.rho)))) {
    throw InternalConsistencyError("inverse is not two-sided");
  }
  rep.note = "eta and rho invertible with exact two-sided inverses";
  return rep;
}

// W(B) packaged as a bicategory instance: contexts are 1-cells, morphism
// pairs are 2-cells. Feeding this back into the generic axiom checker is
// the computational content of Prop. 1.6.
template <Bicategory I>
struct WideBicat {
  const I* inner;

  using Obj = typename I::Obj;
  using One = WideContext<I>;
  using Two = ContextMorphism<I>;

  bool eq0(const Obj& a, const Obj& b2) const { return inner->eq0(a, b2); }
  bool eq1(const One& x, const One& y) const { return context_eq(*inner, x, y); }
  bool eq2(const Two& x, const Two& y) const {
    return eq1(x.src, y.src) && eq1(x.tgt, y.tgt) &&
           inner->eq2(x.alpha, y.alpha) && inner->eq2(x.beta, y.beta);
  }
  Obj src0(const One& c) const { return inner->src0(c.f); }
  Obj tgt0(const One& c) const { return inner->tgt0(c.f); }
  One src1(const Two& m) const { return m.src; }
  One tgt1(const Two& m) const { return m.tgt; }

  One id1(const Obj& a) const { return identity_context(*inner, a); }
  One hcomp1(const One& x, const One& y) const {
    return multiply_contexts(*inner, x, y);
  }
  Two id2(const One& c) const { return identity_morphism(*inner, c); }
  Two vcomp(const Two& after, const Two& before) const {
    return compose_morphisms(*inner, after, before);
  }
  Two hcomp2(const Two& x, const Two& y) const {
    return multiply_morphisms(*inner, x, y);
  }
  Two associator(const One& a, const One& b2, const One& c) const {
    return context_associator(*inner, a, b2, c);
  }
  Two associator_inv(const One& a, const One& b2, const One& c) const {
    return context_associator_inv(*inner, a, b2, c);
  }
  Two lunitor(const One& c) const { return context_left_unitor(*inner, c); }
  Two lunitor_inv(const One& c) const { return context_left_unitor_inv(*inner, c); }
  Two runitor(const One& c) const { return context_right_unitor(*inner, c); }
  Two runitor_inv(const One& c) const { return context_right_unitor_inv(*inner, c); }

  ValidationReport validate2(const Two& m) const { return check_morphism(*inner, m); }
  std::string diff2(const Two& x, const Two& y) const {
    if (!eq1(x.src, y.src) || !eq1(x.tgt, y.tgt)) return "endpoint contexts differ";
    const std::string da = inner->diff2(x.alpha, y.alpha);
    if (!da.empty()) return "alpha: " + da;
    const std::string db = inner->diff2(x.beta, y.beta);
    if (!db.empty()) return "beta: " + db;
    return "";
  }
};

}  // namespace morita
