#pragma once

#include "morita/coring.hpp"

namespace morita {

// The push-out functor - tensor M of an entwined cell (M,m): comodules over
// the cell's target coring map to comodules over its source coring, with
// coaction (X ten m) . (rho^X ten M).
Comodule pushout_apply(const RemCell& cell, const Comodule& x);
ComoduleMorphism pushout_apply_morphism(const RemCell& cell, const ComoduleMorphism& f);

// eta-tilde and rho-tilde of a W(REM) four-tuple, evaluated at a comodule
// whose carrier may be any (R,A)-bimodule (cofree comodules over the coring
// itself included). The matrix maps the one-shot chain [X,M,N] to X.
Matrix eta_tilde_at(const WremContext& g, const Bimodule& x, const Matrix& coaction);
Matrix rho_tilde_at(const WremContext& g, const Bimodule& y, const Matrix& coaction);

Matrix eta_tilde(const WremContext& g, const Comodule& x);
Matrix rho_tilde(const WremContext& g, const Comodule& y);

// The same maps conjugated onto the bracketed push-out carriers, as comodule
// morphisms NM(X) -> X and MN(Y) -> Y.
ComoduleMorphism eta_tilde_morphism(const WremContext& g, const Comodule& x);
ComoduleMorphism rho_tilde_morphism(const WremContext& g, const Comodule& y);

struct CatContextSamples {
  std::vector<Comodule> xs;  // over the target coring (C:A)
  std::vector<Comodule> ys;  // over the source coring (D:B)
  std::vector<ComoduleMorphism> xmors;
  std::vector<ComoduleMorphism> ymors;
};

// Prop. 2.2 at the samples: colinearity of eta-tilde / rho-tilde, naturality
// at the sampled morphisms, validity of the push-out coactions, and the two
// compatibility conditions eta~_{N(Y)} = N(rho~_Y), rho~_{M(X)} = M(eta~_X).
ValidationReport check_cat_context(const WremContext& g, const CatContextSamples& s);

Comodule comodule_direct_sum(const Comodule& x, const Comodule& y);

struct ReconstructResult {
  WremContext ctx;
  ValidationReport hypotheses;
};

// Prop. 2.4: assemble a W(REM) four-tuple from two bicomodules with trivial
// left corings and the natural-transformation components at the cofree
// comodules, via eta = eps_C . eta~_C and rho = eps_D . rho~_D. The
// hypothesis report records bilinearity and cofree colinearity of the
// supplied maps; the assembled tuple is checked by check_wrem_context.
ReconstructResult reconstruct_context(const Bicomodule& m, const Bicomodule& n,
                                      const Matrix& eta_tilde_cofree,
                                      const Matrix& rho_tilde_cofree);

}  // namespace morita
