#include "morita/corpus.hpp"

namespace morita {

namespace {

Matrix express_in(const Matrix& basis, const Matrix& v, const char* what) {
  const auto x = solve_all_columns(basis, v);
  if (!x) throw GenerationError(std::string("not inside the span: ") + what);
  return *x;
}

}  // namespace

BimContext matrix_morita(const Field& f, std::size_t n) {
  const BimBicat b;
  const Bimodule cols = column_module(f, n);
  const Bimodule rows = row_module(f, n);
  const Cell1 cf = cell_atom(cols);
  const Cell1 cg = cell_atom(rows);
  const Cell1 fg = cell_tensor(cf, cg);
  const Cell1 gf = cell_tensor(cg, cf);
  const Algebra mn = matrix_algebra(f, n);

  // x tensor y |-> x y^T: basis (i,j) goes to the matrix unit E_ij
  Matrix eta_amb(f, n * n, n * n);
  for (std::size_t i = 0; i < n * n; ++i) eta_amb.at(i, i) = Scalar::one(f);
  const Matrix eta = eta_amb * fg->tb->q.section;

  // y tensor x |-> y . x
  Matrix rho_amb(f, 1, n * n);
  for (std::size_t i = 0; i < n; ++i) rho_amb.at(0, i * n + i) = Scalar::one(f);
  const Matrix rho = rho_amb * gf->tb->q.section;

  return BimContext{cf, cg, Cell2{fg, cell_ident(mn), eta},
                    Cell2{gf, cell_ident(ground_algebra(f)), rho}};
}

BimContext corner_context(const Algebra& a, const Matrix& e) {
  if (!is_idempotent(a, e)) throw GenerationError("corner element is not idempotent");
  const Field f = a.field;

  // the corner algebra eAe on its canonical image basis
  const Matrix corner_proj = a.left_op(e) * a.right_op(e);
  const Matrix ub = column_space_basis(corner_proj);
  Algebra corner;
  corner.field = f;
  corner.dim = ub.cols();
  corner.unit = express_in(ub, e, "unit of eAe");
  for (std::size_t i = 0; i < corner.dim; ++i) {
    Matrix L(f, corner.dim, corner.dim);
    for (std::size_t j = 0; j < corner.dim; ++j) {
      const Matrix prod = multiply(a, ub.col(i), ub.col(j));
      const Matrix coords = express_in(ub, prod, "product in eAe");
      for (std::size_t k = 0; k < corner.dim; ++k) L.at(k, j) = coords.at(k, 0);
    }
    corner.lmul.push_back(L);
  }

  // f = Ae as an (A, eAe)-bimodule
  const Matrix vb = column_space_basis(a.right_op(e));
  Bimodule fmod;
  fmod.left = a;
  fmod.right = corner;
  fmod.field = f;
  fmod.dim = vb.cols();
  for (std::size_t i = 0; i < a.dim; ++i) {
    fmod.lact.push_back(express_in(vb, a.lmul[i] * vb, "A acting on Ae"));
  }
  for (std::size_t j = 0; j < corner.dim; ++j) {
    fmod.ract.push_back(express_in(vb, a.right_op(ub.col(j)) * vb, "eAe acting on Ae"));
  }

  // g = eA as an (eAe, A)-bimodule
  const Matrix wb = column_space_basis(a.left_op(e));
  Bimodule gmod;
  gmod.left = corner;
  gmod.right = a;
  gmod.field = f;
  gmod.dim = wb.cols();
  for (std::size_t j = 0; j < corner.dim; ++j) {
    gmod.lact.push_back(express_in(wb, a.left_op(ub.col(j)) * wb, "eAe acting on eA"));
  }
  for (std::size_t i = 0; i < a.dim; ++i) {
    gmod.ract.push_back(express_in(wb, a.rmul(i) * wb, "A acting on eA"));
  }

  const Cell1 cf = cell_atom(fmod);
  const Cell1 cg = cell_atom(gmod);
  const Cell1 fg = cell_tensor(cf, cg);
  const Cell1 gf = cell_tensor(cg, cf);

  // eta: Ae tensor_{eAe} eA -> A by multiplication
  Matrix eta_amb(f, a.dim, fmod.dim * gmod.dim);
  for (std::size_t i = 0; i < fmod.dim; ++i)
    for (std::size_t j = 0; j < gmod.dim; ++j) {
      const Matrix prod = multiply(a, vb.col(i), wb.col(j));
      for (std::size_t k = 0; k < a.dim; ++k)
        eta_amb.at(k, i * gmod.dim + j) = prod.at(k, 0);
    }
  const Matrix eta = eta_amb * fg->tb->q.section;

  // rho: eA tensor_A Ae -> eAe by multiplication
  Matrix rho_amb(f, corner.dim, gmod.dim * fmod.dim);
  for (std::size_t i = 0; i < gmod.dim; ++i)
    for (std::size_t j = 0; j < fmod.dim; ++j) {
      const Matrix prod = multiply(a, wb.col(i), vb.col(j));
      const Matrix coords = express_in(ub, prod, "eA.Ae lands in eAe");
      for (std::size_t k = 0; k < corner.dim; ++k)
        rho_amb.at(k, i * fmod.dim + j) = coords.at(k, 0);
    }
  const Matrix rho = rho_amb * gf->tb->q.section;

  return BimContext{cf, cg, Cell2{fg, cell_ident(a), eta},
                    Cell2{gf, cell_ident(corner), rho}};
}

BimContext reverse_context(const BimContext& c) {
  return BimContext{c.g, c.f, c.rho, c.eta};
}

BimContext scale_context(const BimContext& c, const Scalar& lambda) {
  BimContext out = c;
  out.eta.mat = c.eta.mat.scaled(lambda);
  out.rho.mat = c.rho.mat.scaled(lambda);
  return out;
}

BimContextMorphism scaled_identity_morphism(const BimBicat& b, const BimContext& c,
                                            const Scalar& lambda) {
  BimContextMorphism m;
  m.src = c;
  m.tgt = c;
  m.alpha = b.id2(c.f);
  m.alpha.mat = m.alpha.mat.scaled(lambda);
  m.beta = b.id2(c.g);
  m.beta.mat = m.beta.mat.scaled(lambda.inv());
  return m;
}

SampleSet<BimBicat> bim_axiom_samples(const Field& f, std::uint64_t seed,
                                      std::size_t count, std::size_t maxdim) {
  SampleSet<BimBicat> s;
  Rng rng(seed);
  auto alg = [&]() { return random_algebra(f, rng.g(), 1 + rng.next(maxdim)); };
  for (std::size_t i = 0; i < count; ++i) {
    const Algebra a0 = alg(), a1 = alg(), a2 = alg(), a3 = alg(), a4 = alg();
    const Bimodule fm = random_bimodule(rng.g(), a0, a1, maxdim);
    const Bimodule gm = random_bimodule(rng.g(), a1, a2, maxdim);
    const Bimodule hm = random_bimodule(rng.g(), a2, a3, maxdim);
    const Bimodule em = random_bimodule(rng.g(), a3, a4, maxdim);
    const Cell1 cf = cell_atom(fm), cg = cell_atom(gm), ch = cell_atom(hm),
                ce = cell_atom(em);
    s.quads.push_back({cf, cg, ch, ce});
    s.pairs.push_back({cf, cg});
    s.singles.push_back(cf);

    // endomorphism-flavoured 2-cells keep the Hom spaces nonzero
    auto two = [&](const Cell1& src) {
      const BimoduleMap h = random_hom(rng.g(), src->mod, src->mod);
      return Cell2{src, src, h.mat};
    };
    s.nat_assoc.push_back({two(cf), two(cg), two(ch)});
    s.nat_unit.push_back(two(cf));
    s.interchange.push_back({two(cf), two(cf), two(cg), two(cg)});
    s.vtriples.push_back({two(cf), two(cf), two(cf)});
  }
  return s;
}

std::vector<BimContext> context_pool(const Field& f) {
  std::vector<BimContext> pool;
  const BimBicat b;
  const Algebra m2 = matrix_algebra(f, 2);
  const Algebra kxk = product_algebra(ground_algebra(f), ground_algebra(f));
  Matrix e11(f, 4, 1);
  e11.at(0, 0) = Scalar::one(f);
  Matrix e10(f, 2, 1);
  e10.at(0, 0) = Scalar::one(f);

  const BimContext mm = matrix_morita(f, 2);
  const BimContext corner_m2 = corner_context(m2, e11);
  const BimContext corner_kk = corner_context(kxk, e10);
  pool.push_back(mm);
  pool.push_back(reverse_context(mm));
  pool.push_back(corner_m2);
  pool.push_back(reverse_context(corner_m2));
  pool.push_back(corner_kk);
  pool.push_back(reverse_context(corner_kk));
  pool.push_back(identity_context(b, m2));
  pool.push_back(identity_context(b, ground_algebra(f)));
  pool.push_back(identity_context(b, kxk));
  pool.push_back(corner_context(ground_algebra(f), Matrix::identity(f, 1)));
  return pool;
}

SampleSet<WideBicat<BimBicat>> wide_axiom_samples(const BimBicat& b, const Field& f,
                                                  std::uint64_t seed,
                                                  std::size_t count) {
  using W = WideBicat<BimBicat>;
  const W w{&b};
  SampleSet<W> s;
  Rng rng(seed);
  const auto pool = context_pool(f);

  auto next_from = [&](const Algebra& cell0) -> const BimContext* {
    std::vector<const BimContext*> fits;
    for (const auto& c : pool) {
      if (b.eq0(b.tgt0(c.f), cell0)) fits.push_back(&c);
    }
    if (fits.empty()) return nullptr;
    return fits[rng.next(fits.size())];
  };

  for (std::size_t i = 0; i < count; ++i) {
    // random composable walk of length 4
    const BimContext* first = &pool[rng.next(pool.size())];
    std::vector<BimContext> walk{*first};
    while (walk.size() < 4) {
      const BimContext* nxt = next_from(b.src0(walk.back().f));
      if (!nxt) break;
      walk.push_back(*nxt);
    }
    if (walk.size() < 4) continue;  // pool graph is connected, not reached
    s.quads.push_back({walk[0], walk[1], walk[2], walk[3]});
    s.pairs.push_back({walk[0], walk[1]});
    s.singles.push_back(walk[0]);

    const Scalar lam = Scalar::from_int(f, 2 + static_cast<long long>(rng.next(5)));
    auto sm = [&](const BimContext& c) { return scaled_identity_morphism(b, c, lam); };
    s.nat_assoc.push_back({sm(walk[0]), sm(walk[1]), sm(walk[2])});
    s.nat_unit.push_back(sm(walk[0]));
    s.interchange.push_back({sm(walk[0]), sm(walk[0]), sm(walk[1]), sm(walk[1])});
    s.vtriples.push_back({sm(walk[0]), sm(walk[0]), sm(walk[0])});
  }
  return s;
}

}  // namespace morita
