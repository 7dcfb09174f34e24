#pragma once

#include <cstdint>
#include <random>

#include "morita/bicat_bim.hpp"
#include "morita/coring.hpp"
#include "morita/wide.hpp"

namespace morita {

struct GenerationError : std::runtime_error {
  explicit GenerationError(const std::string& what)
      : std::runtime_error("generation failed: " + what) {}
};

// Deterministic generator state. Same seed, same field: bit-identical output.
struct Rng {
  std::mt19937_64 g;
  explicit Rng(std::uint64_t seed) : g(seed) {}

  std::uint64_t next(std::uint64_t bound) {  // uniform in [0, bound)
    std::uniform_int_distribution<std::uint64_t> d(0, bound - 1);
    return d(g);
  }
  Scalar scalar(const Field& f, long long lo = -4, long long hi = 4) {
    std::uniform_int_distribution<long long> d(lo, hi);
    return Scalar::from_int(f, d(g));
  }
  Matrix matrix(const Field& f, std::size_t r, std::size_t c) {
    Matrix m(f, r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m.at(i, j) = scalar(f);
    return m;
  }
};

// --- algebras -------------------------------------------------------------

Algebra ground_algebra(const Field& f);               // k itself
Algebra matrix_algebra(const Field& f, std::size_t n);  // basis E_ij at i*n+j
Algebra group_algebra(const Field& f, std::size_t n);   // k[Z/n]
Algebra truncated_poly(const Field& f, std::size_t n);  // k[x]/(x^n)
Algebra product_algebra(const Algebra& a, const Algebra& b);
// Same algebra presented on the basis given by the columns of p.
Algebra basis_change(const Algebra& a, const Matrix& p);
// Seeded scrambled product of small catalog algebras of the given dimension.
Algebra random_algebra(const Field& f, std::uint64_t seed, std::size_t dim);

// --- bimodules ------------------------------------------------------------

// A tensor_k B with the outer actions: always a valid (A,B)-bimodule.
Bimodule regular_bimodule(const Algebra& a, const Algebra& b);
// k^n of columns as an (M_n(k), k)-bimodule / rows as a (k, M_n(k))-bimodule.
Bimodule column_module(const Field& f, std::size_t n);
Bimodule row_module(const Field& f, std::size_t n);

// Smallest sub-bimodule containing the given ambient vectors, with the
// restricted actions on a canonical basis.
Bimodule span_sub_bimodule(const Bimodule& w, const Matrix& vectors);
// Quotient of w by the sub-bimodule spanned by the given vectors.
Bimodule quotient_bimodule(const Bimodule& w, const Matrix& subvectors);

// Seeded random (A,B)-bimodule of dimension in [1, maxdim]; throws
// GenerationError after bounded retries.
Bimodule random_bimodule(std::uint64_t seed, const Algebra& a, const Algebra& b,
                         std::size_t maxdim);
// Seeded random element of Hom(src, tgt); the zero map when Hom vanishes.
BimoduleMap random_hom(std::uint64_t seed, const Bimodule& src, const Bimodule& tgt);

// --- wide contexts ----------------------------------------------------------

using BimContext = WideContext<BimBicat>;
using BimContextMorphism = ContextMorphism<BimBicat>;

// The Morita context (columns, rows, outer product, dot product) between
// M_n(k) and k.
BimContext matrix_morita(const Field& f, std::size_t n);

// The corner context (Ae, eA) between eAe and A. Throws when e.e != e.
BimContext corner_context(const Algebra& a, const Matrix& e);

// (g, f, rho, eta): a context in the opposite direction.
BimContext reverse_context(const BimContext& c);

// (f, g, lambda.eta, lambda.rho) is again a context.
BimContext scale_context(const BimContext& c, const Scalar& lambda);

// (lambda.id_f, lambda^{-1}.id_g): Gamma -> Gamma, a non-identity 2-cell.
BimContextMorphism scaled_identity_morphism(const BimBicat& b, const BimContext& c,
                                            const Scalar& lambda);

// --- axiom checker sample sets ----------------------------------------------

// Seeded random composable tuples in Bim with algebra/bimodule dims <= maxdim.
SampleSet<BimBicat> bim_axiom_samples(const Field& f, std::uint64_t seed,
                                      std::size_t count, std::size_t maxdim);

// Seeded composable tuples of wide contexts built from the corner, matrix
// Morita and identity families.
SampleSet<WideBicat<BimBicat>> wide_axiom_samples(const BimBicat& b, const Field& f,
                                                  std::uint64_t seed,
                                                  std::size_t count);

// Pool of valid contexts used by the samplers and the closure tests.
std::vector<BimContext> context_pool(const Field& f);

// --- corings, comodules, bicomodules ----------------------------------------

// The Sweedler coring A tensor_B A of the subalgebra spanned by the columns
// of sub_basis (which must contain the unit and be closed under products).
Coring sweedler_coring(const Algebra& a, const Matrix& sub_basis);

// A^rank as a right module (a (k,A)-bimodule).
Bimodule free_right_module(const Algebra& a, std::size_t rank);

// A plain module as a comodule over the trivial coring on a.
Comodule trivial_comodule(const Algebra& a, const Bimodule& x);

// The cofree comodule (X tensor_A C, X tensor Delta).
Comodule cofree_comodule(const Coring& c, const Bimodule& x);

// A itself over the Sweedler coring, with coaction a |-> 1 tensor (1 tensor a).
Comodule sweedler_base_comodule(const Algebra& a, const Matrix& sub_basis);

// Seeded random colinear morphism; zero when the Hom space vanishes.
ComoduleMorphism random_comodule_morphism(std::uint64_t seed, const Comodule& x,
                                          const Comodule& y);

// A bimodule with both canonical unit coactions (both corings trivial).
Bicomodule trivial_bicomodule(const Bimodule& m);

// (Y tensor_B D, Y tensor Delta) as an (A,D)-bicomodule with trivial left
// coring; Y is an (A,B)-bimodule.
Bicomodule cofree_bicomodule(const Coring& d, const Bimodule& y);

// Seeded mixed population of valid bicomodules with trivial left corings.
std::vector<Bicomodule> bicomodule_suite(const Field& f, std::uint64_t seed,
                                         std::size_t count);

// Seeded random REM 2-cell: a solution of Eq. (2.2); zero when none other exists.
RemTwo random_rem_two(std::uint64_t seed, const RemCell& src, const RemCell& tgt);

// Seeded composable tuples for the REM(Bim) instance.
SampleSet<RemBicat> rem_axiom_samples(const Field& f, std::uint64_t seed,
                                      std::size_t count);

}  // namespace morita
