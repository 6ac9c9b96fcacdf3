#pragma once

#include "quigen/decompose.hpp"
#include "quigen/rep.hpp"

namespace quigen {

// one step of a minimal injective copresentation: the hull is matched to
// the socle, so minimality holds by construction
struct HullStep {
  RepPtr module;
  std::vector<int> mults;  // hull = direct sum of I_v^{mults[v]}, v ascending
  RepPtr hull;
  Morphism embed;  // essential monomorphism module -> hull
  Quot cosyz;      // cokernel of embed
};

HullStep injective_hull(const Canon& C, RepPtr M);
RepPtr cosyzygy(const Canon& C, RepPtr M);
bool is_injective_module(const Canon& C, RepPtr M);

// projective cover through the duality bridge: cover(M) = D(hull(D M))
struct CoverStep {
  RepPtr module;
  std::vector<int> mults;  // cover = direct sum of P_v^{mults[v]}
  RepPtr cover;
  Morphism project;  // cover -> module, surjective
  Sub syz;           // kernel of project
};
CoverStep projective_cover(const Canon& C, RepPtr M);
RepPtr syzygy(const Canon& C, RepPtr M);

struct Resolution {
  bool finite = false;
  int injdim = -1;  // set when finite
  std::vector<HullStep> steps;
};
Resolution injective_resolution(const Canon& C, RepPtr M, int length_cap);

struct InjDimResult {
  bool finite = false;
  int dim = -1;
  int bound = 0;
};
InjDimResult injdim_regular(const Canon& C, int bound);

// registry of iso classes of certified indecomposables; matching uses
// iso_indec, which is conclusive for indecomposables
class Registry {
 public:
  explicit Registry(const Canon& C) : canon_(&C) {}
  int id_of(RepPtr indec);       // find or insert
  int find(RepPtr indec) const;  // -1 when absent
  const std::vector<RepPtr>& reps() const { return reps_; }
  bool is_injective(int id);

 private:
  std::string key(const Representation& M) const;
  const Canon* canon_;
  std::vector<RepPtr> reps_;
  std::vector<std::string> keys_;
  std::vector<int> injective_;  // -1 unknown
};

struct GraphCaps {
  int max_nodes = 200;
  int max_dim = 80;
};

// closure of the non-injective indecomposable pieces under the cosyzygy
// operator; injective summands are dropped at every stage
struct CosyzygyGraph {
  struct Node {
    int reg_id = -1;
    RepPtr rep;
    std::vector<std::pair<int, int>> out;  // (node index, multiplicity)
    std::vector<int> hull_mults;
  };
  std::vector<Node> nodes;
  std::vector<int> seeds;  // node indices of the seed pieces
  bool complete = false;
  std::string stop_reason;
};

CosyzygyGraph cosyzygy_graph(const Canon& C, Registry& reg,
                             const std::vector<RepPtr>& seed_modules,
                             const GraphCaps& caps);

struct RepetitionIndex {
  bool known = false;
  int index = -1;
};
// least n such that every class in the n-th cosyzygy layer recurs in
// arbitrarily late layers; finite for every complete graph (why: see
// docs/repetition-index.md)
RepetitionIndex repetition_index(const CosyzygyGraph& g);

std::string graph_to_text(const CosyzygyGraph& g, const std::string& algebra_hash);

}  // namespace quigen
