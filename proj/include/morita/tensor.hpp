#pragma once

#include <memory>
#include <vector>

#include "morita/bimodule.hpp"

namespace morita {

struct IllDefinedMapError : std::runtime_error {
  explicit IllDefinedMapError(const std::string& what)
      : std::runtime_error("induced map not well defined: " + what) {}
};

// M tensor_B N realized as an explicit quotient of the flat product space,
// basis (i,j) |-> i*N.dim + j, by the middle-action relations.
struct TensorBimodule {
  Bimodule mfac, nfac;
  QuotientSpace q;
  Bimodule mod;  // induced (M.left, N.right)-bimodule on the quotient
};

TensorBimodule tensor_over(const Bimodule& m, const Bimodule& n);

// Map induced on quotients by f tensor g. Throws IllDefinedMapError when the
// flat map fails to send source relations into target relations.
BimoduleMap induced_map(const BimoduleMap& f, const BimoduleMap& g,
                        const TensorBimodule& src, const TensorBimodule& dst);

// One-shot tensor product of a whole chain of composable bimodules,
// quotienting the flat product by every junction relation at once.
// A single-factor chain is the factor itself with the trivial quotient.
struct Chain {
  std::vector<Bimodule> factors;
  QuotientSpace q;
  Bimodule mod;
};

Chain make_chain(const std::vector<Bimodule>& factors);

// A linear map between chain modules, kept with its chains so it can be
// spliced into larger chains.
struct ChainOp {
  Chain src, dst;
  Matrix mat;  // dst.mod.dim x src.mod.dim

  BimoduleMap as_map() const { return BimoduleMap{src.mod, dst.mod, mat}; }
};

ChainOp chain_id(const Chain& c);
ChainOp chain_op(const Chain& src, const Chain& dst, const Matrix& mat);
// g after f; factor lists must match at the seam.
ChainOp chain_compose(const ChainOp& g, const ChainOp& f);
// Splice sub into the factors [pos, pos+sub.src.factors.size()) of whole_src,
// acting as the identity elsewhere. With verify set, checks exactly that the
// flat map sends source relations into target relations.
ChainOp chain_at(const Chain& whole_src, std::size_t pos, const ChainOp& sub,
                 bool verify = false);

// Canned one-step chain maps.
ChainOp absorb_left(const Bimodule& x);    // [1_A, X] -> [X], apply left action
ChainOp insert_left(const Bimodule& x);    // [X] -> [1_A, X], its inverse
ChainOp absorb_right(const Bimodule& x);   // [X, 1_B] -> [X]
ChainOp insert_right(const Bimodule& x);   // [X] -> [X, 1_B]
ChainOp iota(const Bimodule& x);           // [1_A, X] -> [X, 1_B]
ChainOp iota_inv(const Bimodule& x);
ChainOp collapse2(const Bimodule& x, const Bimodule& y);  // [X, Y] -> [X tensor Y]
ChainOp expand2(const Bimodule& x, const Bimodule& y);    // inverse
ChainOp lift1(const BimoduleMap& f);       // [src] -> [tgt]

// Coherence isomorphisms of Bim, built through the shared flat triple space.
struct AssocPair {
  BimoduleMap fwd;  // (X ten Y) ten Z -> X ten (Y ten Z)
  BimoduleMap inv;
};
AssocPair associator3(const Bimodule& x, const Bimodule& y, const Bimodule& z);

struct UnitorPair {
  BimoduleMap fwd;
  BimoduleMap inv;
};
UnitorPair left_unitor(const Bimodule& x);   // 1_A ten X -> X
UnitorPair right_unitor(const Bimodule& x);  // X ten 1_B -> X

}  // namespace morita
