#pragma once

#include "quigen/rep.hpp"

namespace quigen {

struct EndAlgebra {
  RepPtr M;
  std::vector<Morphism> basis;
  Mat vecs;  // stacked vectorized basis, one column per basis element
  std::vector<Scalar> coords(const Morphism& f) const;
  Morphism from_coords(const std::vector<Scalar>& c) const;
};
EndAlgebra end_algebra(RepPtr M);

// basis of rad End(M) via the trace form; requires characteristic 0 or
// p > dim M, which is checked
std::vector<Morphism> end_radical(const EndAlgebra& E);

struct Decomposition {
  std::vector<RepPtr> pieces;  // indecomposable, in deterministic order
  DirectSum sum;               // direct sum of the pieces
  Morphism iso;                // invertible morphism sum.rep -> M
};

// Krull-Schmidt decomposition; throws SplitExhaustion if a module is
// provably decomposable but no splitting idempotent was found
Decomposition decompose(RepPtr M);

// nullopt is a *certificate* of non-isomorphism, never a shrug
std::optional<Morphism> find_iso(RepPtr M, RepPtr N);

// fast conclusive variant for modules already known indecomposable
std::optional<Morphism> iso_indec(RepPtr M, RepPtr N);

bool certified_indecomposable(RepPtr M);

}  // namespace quigen
