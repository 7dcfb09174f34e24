#pragma once

#include "morita/bicat_bim.hpp"
#include "morita/bicategory.hpp"
#include "morita/wide.hpp"

namespace morita {

// An A-coring: an (A,A)-bimodule with a coassociative comultiplication and
// a counit. delta and counit are matrices against the deterministic tensor
// bases: delta maps C into the one-shot quotient of C x C.
struct Coring {
  Algebra base;      // A
  Bimodule carrier;  // C as an (A,A)-bimodule
  Matrix delta;      // chain[C,C].mod.dim x C.dim
  Matrix counit;     // A.dim x C.dim

  bool operator==(const Coring& o) const {
    return base == o.base && carrier == o.carrier && delta == o.delta &&
           counit == o.counit;
  }
};

ValidationReport validate_coring(const Coring& c);

// A with comultiplication A = A tensor_A A and counit the identity.
Coring trivial_coring(const Algebra& a);

// A right C-comodule: a right A-module (stored as a (k,A)-bimodule) with a
// coaction X -> X tensor_A C.
struct Comodule {
  Coring coring;
  Bimodule carrier;  // (k, A)-bimodule
  Matrix coaction;   // chain[X,C].mod.dim x X.dim

  bool operator==(const Comodule& o) const {
    return coring == o.coring && carrier == o.carrier && coaction == o.coaction;
  }
};

ValidationReport validate_comodule(const Comodule& x);

struct ComoduleMorphism {
  Comodule src, tgt;
  Matrix mat;
};

ValidationReport validate_comodule_morphism(const ComoduleMorphism& f);

// A (C,D)-bicomodule: compatible left and right coactions.
struct Bicomodule {
  Coring left_coring;   // C over A
  Coring right_coring;  // D over B
  Bimodule carrier;     // (A,B)-bimodule M
  Matrix rcoaction;     // chain[M,D].mod.dim x M.dim
  Matrix lcoaction;     // chain[C,M].mod.dim x M.dim
};

ValidationReport validate_bicomodule(const Bicomodule& m);

// --- the right Eilenberg-Moore bicategory REM(Bim) -------------------------

// A 1-cell from (D:B) to (C:A): an (A,B)-bimodule M with an entwining map
// m: C tensor_A M -> M tensor_B D satisfying Eq. (2.1). Composites remember
// their construction like Bim cells do.
struct RemCellNode;
using RemCell = std::shared_ptr<const RemCellNode>;

struct RemCellNode {
  enum class Kind { atom, ident, tensor };
  Kind kind{Kind::atom};
  Coring src_coring;  // (D:B)
  Coring tgt_coring;  // (C:A)
  Bimodule carrier;   // M
  Matrix ent;         // chain[C.carrier, M].mod.dim -> chain[M, D.carrier]
  RemCell l, r;
};

RemCell rem_atom(const Coring& tgt, const Coring& src, const Bimodule& carrier,
                 const Matrix& ent);
RemCell rem_ident(const Coring& c);  // (A, iota_C^{-1})
RemCell rem_tensor(const RemCell& l, const RemCell& r);
bool rem_cell_eq(const RemCell& a, const RemCell& b);
std::string rem_cell_str(const RemCell& c);

// Eq. (2.1): the counit condition up to iota_M and the comultiplication
// condition, both checked exactly through the chain quotients.
ValidationReport check_entwined_cell(const RemCell& c);

// A 2-cell in reduced form: alpha: C tensor_A M -> M'.
struct RemTwo {
  RemCell src, tgt;
  Matrix mat;  // tgt.carrier.dim x chain[C.carrier, src.carrier].mod.dim
};

// Lemma 2.1: the entwined cell of an (A,D)-bicomodule, for any A-coring C.
// The bicomodule's left coring must be the trivial one on A.
RemCell cell_from_bicomodule(const Bicomodule& m, const Coring& target);

struct RemBicat {
  using Obj = Coring;
  using One = RemCell;
  using Two = RemTwo;

  bool eq0(const Obj& a, const Obj& b) const { return a == b; }
  bool eq1(const One& f, const One& g) const { return rem_cell_eq(f, g); }
  bool eq2(const Two& x, const Two& y) const {
    return rem_cell_eq(x.src, y.src) && rem_cell_eq(x.tgt, y.tgt) && x.mat == y.mat;
  }
  Obj src0(const One& f) const { return f->src_coring; }
  Obj tgt0(const One& f) const { return f->tgt_coring; }
  One src1(const Two& x) const { return x.src; }
  One tgt1(const Two& x) const { return x.tgt; }

  One id1(const Obj& c) const { return rem_ident(c); }
  One hcomp1(const One& f, const One& g) const { return rem_tensor(f, g); }

  Two id2(const One& f) const;
  Two vcomp(const Two& after, const Two& before) const;
  Two hcomp2(const Two& x, const Two& y) const;
  Two associator(const One& f, const One& g, const One& h) const;
  Two associator_inv(const One& f, const One& g, const One& h) const;
  Two lunitor(const One& f) const;
  Two lunitor_inv(const One& f) const;
  Two runitor(const One& f) const;
  Two runitor_inv(const One& f) const;

  ValidationReport validate2(const Two& x) const;
  std::string diff2(const Two& a, const Two& b) const;
};

static_assert(Bicategory<RemBicat>);

// --- W(REM(Bim)) four-tuples ------------------------------------------------

// Gamma = ((M,m), (N,n), eta, rho) with eta: C tensor M tensor N -> A and
// rho: D tensor N tensor M -> B, both against the one-shot chain bases.
struct WremContext {
  RemCell mcell;  // (D:B) -> (C:A)
  RemCell ncell;  // (C:A) -> (D:B)
  Matrix eta;     // A.dim x chain[C,M,N].mod.dim
  Matrix rho;     // B.dim x chain[D,N,M].mod.dim
};

// Equations (I-1), (I-2) (up to iota, inserted as stated) and (II-1), (II-2),
// checked exactly. Agrees with check_context through the REM instance.
ValidationReport check_wrem_context(const WremContext& g);

// The same four-tuple as a 1-cell datum of W(REM(Bim)).
WideContext<RemBicat> wrem_to_generic(const WremContext& g);
WremContext wrem_from_generic(const RemBicat& rem, const WideContext<RemBicat>& c);

// Remark 2.1: classical wide contexts in Bim are exactly the W(REM) 1-cells
// over trivial corings.
WremContext classical_to_wrem(const WideContext<BimBicat>& ctx);
WideContext<BimBicat> wrem_to_classical(const WremContext& g);

// The identity four-tuple of (C:A).
WremContext wrem_identity(const Coring& c);

}  // namespace morita
