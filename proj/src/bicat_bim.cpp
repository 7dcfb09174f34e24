#include "morita/bicat_bim.hpp"

namespace morita {

Cell1 cell_atom(const Bimodule& m) {
  auto n = std::make_shared<Cell1Node>();
  n->kind = Cell1Node::Kind::atom;
  n->mod = m;
  return n;
}

Cell1 cell_ident(const Algebra& a) {
  auto n = std::make_shared<Cell1Node>();
  n->kind = Cell1Node::Kind::ident;
  n->mod = identity_bimodule(a);
  n->alg = a;
  return n;
}

Cell1 cell_tensor(const Cell1& l, const Cell1& r) {
  auto n = std::make_shared<Cell1Node>();
  n->kind = Cell1Node::Kind::tensor;
  n->l = l;
  n->r = r;
  n->tb = std::make_shared<TensorBimodule>(tensor_over(l->mod, r->mod));
  n->mod = n->tb->mod;
  return n;
}

bool cell_eq(const Cell1& a, const Cell1& b) {
  if (a.get() == b.get()) return true;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Cell1Node::Kind::atom:
      return a->mod == b->mod;
    case Cell1Node::Kind::ident:
      return a->alg == b->alg;
    case Cell1Node::Kind::tensor:
      return cell_eq(a->l, b->l) && cell_eq(a->r, b->r);
  }
  return false;
}

std::string cell_str(const Cell1& c) {
  switch (c->kind) {
    case Cell1Node::Kind::atom:
      return "M(dim " + std::to_string(c->mod.dim) + ")";
    case Cell1Node::Kind::ident:
      return "1(dim " + std::to_string(c->alg.dim) + ")";
    case Cell1Node::Kind::tensor:
      return "(" + cell_str(c->l) + " . " + cell_str(c->r) + ")";
  }
  return "?";
}

BimBicat::Two BimBicat::hcomp2(const Two& x, const Two& y) const {
  const One src = cell_tensor(x.src, y.src);
  const One tgt = cell_tensor(x.tgt, y.tgt);
  const BimoduleMap f{x.src->mod, x.tgt->mod, x.mat};
  const BimoduleMap g{y.src->mod, y.tgt->mod, y.mat};
  const BimoduleMap ind = induced_map(f, g, *src->tb, *tgt->tb);
  return Two{src, tgt, ind.mat};
}

BimBicat::Two BimBicat::associator(const One& f, const One& g, const One& h) const {
  const AssocPair ap = associator3(f->mod, g->mod, h->mod);
  return Two{cell_tensor(cell_tensor(f, g), h), cell_tensor(f, cell_tensor(g, h)),
             ap.fwd.mat};
}

BimBicat::Two BimBicat::associator_inv(const One& f, const One& g, const One& h) const {
  const AssocPair ap = associator3(f->mod, g->mod, h->mod);
  return Two{cell_tensor(f, cell_tensor(g, h)), cell_tensor(cell_tensor(f, g), h),
             ap.inv.mat};
}

BimBicat::Two BimBicat::lunitor(const One& f) const {
  const UnitorPair up = left_unitor(f->mod);
  return Two{cell_tensor(cell_ident(f->mod.left), f), f, up.fwd.mat};
}

BimBicat::Two BimBicat::lunitor_inv(const One& f) const {
  const UnitorPair up = left_unitor(f->mod);
  return Two{f, cell_tensor(cell_ident(f->mod.left), f), up.inv.mat};
}

BimBicat::Two BimBicat::runitor(const One& f) const {
  const UnitorPair up = right_unitor(f->mod);
  return Two{cell_tensor(f, cell_ident(f->mod.right)), f, up.fwd.mat};
}

BimBicat::Two BimBicat::runitor_inv(const One& f) const {
  const UnitorPair up = right_unitor(f->mod);
  return Two{f, cell_tensor(f, cell_ident(f->mod.right)), up.inv.mat};
}

std::string BimBicat::diff2(const Two& a, const Two& b) const {
  if (!cell_eq(a.src, b.src) || !cell_eq(a.tgt, b.tgt)) {
    return "2-cells typed between different 1-cells: " + cell_str(a.src) + " -> " +
           cell_str(a.tgt) + " vs " + cell_str(b.src) + " -> " + cell_str(b.tgt);
  }
  if (a.mat.rows() != b.mat.rows() || a.mat.cols() != b.mat.cols()) {
    return "matrix shapes differ";
  }
  for (std::size_t i = 0; i < a.mat.rows(); ++i)
    for (std::size_t j = 0; j < a.mat.cols(); ++j)
      if (a.mat.at(i, j) != b.mat.at(i, j)) {
        return "entry (" + std::to_string(i) + "," + std::to_string(j) +
               "): " + a.mat.at(i, j).str() + " vs " + b.mat.at(i, j).str();
      }
  return "";
}

WhiskerSolve<BimBicat::Two> BimBicat::solve_right_whisker(const One& f,
                                                          const One& xsrc,
                                                          const One& xtgt,
                                                          const Two& kappa) const {
  const One wsrc = cell_tensor(f, xsrc);
  const One wtgt = cell_tensor(f, xtgt);
  if (!cell_eq(kappa.src, wsrc) || !cell_eq(kappa.tgt, wtgt)) {
    throw CellTypeError("solve_right_whisker: kappa endpoints");
  }
  const Field fl = f->mod.field;
  const std::size_t s = xsrc->mod.dim, t = xtgt->mod.dim;
  const std::size_t unknowns = t * s;
  const Matrix H = hom_constraints(xsrc->mod, xtgt->mod);
  const std::size_t wrows = wtgt->mod.dim * wsrc->mod.dim;
  Matrix T(fl, wrows, unknowns);
  const Matrix idf = Matrix::identity(fl, f->mod.dim);
  for (std::size_t a = 0; a < t; ++a) {
    for (std::size_t bcol = 0; bcol < s; ++bcol) {
      Matrix e(fl, t, s);
      e.at(a, bcol) = Scalar::one(fl);
      const Matrix img =
          wtgt->tb->q.projection * kron(idf, e) * wsrc->tb->q.section;
      const Matrix v = vec(img);
      for (std::size_t r = 0; r < wrows; ++r) T.at(r, a * s + bcol) = v.at(r, 0);
    }
  }
  // stacked homogeneous system in (x, lambda): H x = 0 and T x - lambda k = 0
  Matrix aug(fl, H.rows() + wrows, unknowns + 1);
  for (std::size_t i = 0; i < H.rows(); ++i)
    for (std::size_t j = 0; j < unknowns; ++j) aug.at(i, j) = H.at(i, j);
  const Matrix kv = vec(kappa.mat);
  for (std::size_t i = 0; i < wrows; ++i) {
    for (std::size_t j = 0; j < unknowns; ++j) aug.at(H.rows() + i, j) = T.at(i, j);
    aug.at(H.rows() + i, unknowns) = -kv.at(i, 0);
  }
  const Matrix K = kernel_basis(aug);
  WhiskerSolve<Two> out;
  out.kernel_dim = K.cols();
  for (std::size_t c = 0; c < K.cols(); ++c) {
    const Scalar lambda = K.at(unknowns, c);
    if (lambda.is_zero()) continue;
    Matrix x(fl, t, s);
    const Scalar inv = lambda.inv();
    for (std::size_t a = 0; a < t; ++a)
      for (std::size_t bcol = 0; bcol < s; ++bcol)
        x.at(a, bcol) = K.at(a * s + bcol, c) * inv;
    out.solution = Two{xsrc, xtgt, x};
    break;
  }
  return out;
}

}  // namespace morita
