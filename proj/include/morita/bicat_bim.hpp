#pragma once

#include <memory>

#include "morita/bicategory.hpp"
#include "morita/tensor.hpp"

namespace morita {

// A 1-cell of Bim remembered together with how it was built. Differently
// constructed composites are different 1-cells; the coherence cells mediate
// between them.
struct Cell1Node;
using Cell1 = std::shared_ptr<const Cell1Node>;

struct Cell1Node {
  enum class Kind { atom, ident, tensor };
  Kind kind{Kind::atom};
  Bimodule mod;  // the realized bimodule
  Algebra alg;   // for ident
  Cell1 l, r;    // for tensor
  std::shared_ptr<const TensorBimodule> tb;
};

Cell1 cell_atom(const Bimodule& m);
Cell1 cell_ident(const Algebra& a);
Cell1 cell_tensor(const Cell1& l, const Cell1& r);
bool cell_eq(const Cell1& a, const Cell1& b);
std::string cell_str(const Cell1& c);

struct Cell2 {
  Cell1 src, tgt;
  Matrix mat;  // tgt->mod.dim x src->mod.dim
};

// The concrete bicategory of finite-dimensional bimodules: algebras,
// bimodules, bimodule maps, with tensor product as horizontal composition.
struct BimBicat {
  using Obj = Algebra;
  using One = Cell1;
  using Two = Cell2;

  bool eq0(const Obj& a, const Obj& b) const { return a == b; }
  bool eq1(const One& f, const One& g) const { return cell_eq(f, g); }
  bool eq2(const Two& x, const Two& y) const {
    return cell_eq(x.src, y.src) && cell_eq(x.tgt, y.tgt) && x.mat == y.mat;
  }

  // 1-cells from B to A are (A,B)-bimodules
  Obj src0(const One& f) const { return f->mod.right; }
  Obj tgt0(const One& f) const { return f->mod.left; }
  One src1(const Two& x) const { return x.src; }
  One tgt1(const Two& x) const { return x.tgt; }

  One id1(const Obj& a) const { return cell_ident(a); }
  One hcomp1(const One& f, const One& g) const { return cell_tensor(f, g); }

  Two id2(const One& f) const {
    return Two{f, f, Matrix::identity(f->mod.field, f->mod.dim)};
  }
  Two vcomp(const Two& after, const Two& before) const {
    if (!cell_eq(after.src, before.tgt)) throw CellTypeError("vcomp seam");
    return Two{before.src, after.tgt, after.mat * before.mat};
  }
  Two hcomp2(const Two& x, const Two& y) const;

  Two associator(const One& f, const One& g, const One& h) const;
  Two associator_inv(const One& f, const One& g, const One& h) const;
  Two lunitor(const One& f) const;
  Two lunitor_inv(const One& f) const;
  Two runitor(const One& f) const;
  Two runitor_inv(const One& f) const;

  ValidationReport validate2(const Two& x) const {
    return validate_map(BimoduleMap{x.src->mod, x.tgt->mod, x.mat});
  }
  std::string diff2(const Two& a, const Two& b) const;

  // extensions
  bool is_epi(const Two& x) const { return rank(x.mat) == x.tgt->mod.dim; }
  bool is_mono(const Two& x) const { return rank(x.mat) == x.src->mod.dim; }
  std::optional<Two> try_invert(const Two& x) const {
    auto inv = inverse(x.mat);
    if (!inv) return std::nullopt;
    return Two{x.tgt, x.src, *inv};
  }
  WhiskerSolve<Two> solve_right_whisker(const One& f, const One& xsrc,
                                        const One& xtgt, const Two& kappa) const;
};

static_assert(Bicategory<BimBicat>);
static_assert(SolvableBicategory<BimBicat>);
static_assert(EpiBicategory<BimBicat>);

}  // namespace morita
