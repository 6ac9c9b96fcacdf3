#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "quigen/algebra.hpp"

namespace quigen {

// A finite-dimensional right module, stored as a representation of the
// quiver: one space per vertex, one matrix per arrow.  For an arrow
// a : i -> j the action matrix maps the space at i to the space at j
// (columns indexed by the source fibre).
struct Representation {
  AlgebraPtr alg;
  std::vector<int> dims;  // per vertex
  std::vector<Mat> maps;  // per arrow: dims[tgt] x dims[src]

  int total_dim() const;
  bool is_zero() const { return total_dim() == 0; }
};

using RepPtr = std::shared_ptr<const Representation>;

RepPtr make_rep(AlgebraPtr alg, std::vector<int> dims, std::vector<Mat> maps);
RepPtr zero_rep(AlgebraPtr alg);
RepPtr simple_rep(AlgebraPtr alg, int v);
RepPtr indec_projective(AlgebraPtr alg, int v);
RepPtr indec_injective(AlgebraPtr alg, int v);
RepPtr regular_rep(AlgebraPtr alg);

// first violated relation (or shape error), nullopt when M is a module
std::optional<std::string> check_module(const Representation& M);

// value of a relation-shaped expression on M: sum of coeff * (composite of
// arrow maps along the word); the zero matrix iff M satisfies it
Mat evaluate_relation(const Representation& M, const Relation& r);
Mat evaluate_word(const Representation& M, int src, const std::vector<int>& word);

struct Morphism {
  RepPtr src, dst;
  std::vector<Mat> blocks;  // per vertex: dst.dims[v] x src.dims[v]
};

bool is_morphism(const Morphism& f);  // naturality on every arrow
Morphism zero_morphism(RepPtr src, RepPtr dst);
Morphism identity_morphism(RepPtr M);
Morphism compose(const Morphism& g, const Morphism& f);  // g after f
Morphism add(const Morphism& f, const Morphism& g);
Morphism sub(const Morphism& f, const Morphism& g);
Morphism scale(const Scalar& c, const Morphism& f);
Morphism pow_endo(const Morphism& f, long e);  // f must be an endomorphism
bool morphism_is_zero(const Morphism& f);
bool morphism_eq(const Morphism& f, const Morphism& g);
std::vector<int> ranks(const Morphism& f);
bool is_injective(const Morphism& f);
bool is_surjective(const Morphism& f);
bool is_iso(const Morphism& f);
std::optional<Morphism> inverse(const Morphism& f);

// basis of the space of module morphisms M -> N, via the naturality system
std::vector<Morphism> hom_basis(RepPtr M, RepPtr N);
Morphism lincomb(const std::vector<Scalar>& c, const std::vector<Morphism>& fs);

struct Sub {       // subobject with its inclusion
  RepPtr rep;
  Morphism incl;
};
struct Quot {      // quotient with its projection
  RepPtr rep;
  Morphism proj;
};

Sub kernel(const Morphism& f);
Sub image(const Morphism& f);     // included in f.dst
Quot cokernel(const Morphism& f);
Sub radical(RepPtr M);
Sub socle(RepPtr M);
Quot top(RepPtr M);

struct DirectSum {
  RepPtr rep;
  std::vector<Morphism> in;   // component inclusions
  std::vector<Morphism> out;  // component projections
};
DirectSum direct_sum(AlgebraPtr alg, const std::vector<RepPtr>& parts);

// standard duality with the opposite algebra; `target` must be the opposite
// of M.alg (same arrows, reversed) — the caller names it so that a double
// dual lands on the original algebra object
RepPtr dual_op(const Representation& M, AlgebraPtr target);
Morphism dual_op(const Morphism& f, AlgebraPtr target);  // contravariant

// canonical modules of one algebra, built once and shared
struct Canon {
  AlgebraPtr alg, opp;
  std::vector<RepPtr> simples, projectives, injectives;
  static Canon make(AlgebraPtr alg);
  const Canon& op_canon() const;  // same data for the opposite algebra

 private:
  mutable std::shared_ptr<Canon> op_cache_;
};

std::string dims_str(const Representation& M);

}  // namespace quigen
