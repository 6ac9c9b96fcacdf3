#pragma once

#include <string>
#include <vector>

#include "quigen/certificate.hpp"
#include "quigen/resolve.hpp"

namespace quigen {

// Budget knobs for the membership searcher and the verdict pipeline.  The
// sweep budget is deliberately tighter than the standalone graph defaults:
// the searcher runs one closure attempt per tracked class, and algebras with
// growing cosyzygies would sink a generous attempt long before it failed.
// Every cap hit degrades to Unknown, never to a wrong verdict.
struct SearchCaps {
  int resolution_cap = 64;   // length bound for the finite-injdim route
  int resolution_guard = 0;  // cosyzygy size bound; 0 = max(24, 2 dim A)
  GraphCaps sweep{16, 12};   // per-attempt closure budget
  int pool_dim = 0;  // tracking bound for new classes; 0 = max(12, inj/target dims)
  int gen_dim = 20;          // unit-generated submodule size bound
  int pair_dim = 8;          // pair-generated submodule size bound
  int max_rounds = 8;        // saturation rounds before giving up
  int hom_trials = 16;       // random combinations per hom-space scan
  unsigned long long seed = 12345;
};

std::vector<RepPtr> derive_simple_targets(AlgebraPtr alg);

// outcome of the saturation search: either a checkable certificate or an
// honest frontier report
struct SearchResult {
  bool found = false;
  Json certificate;                  // set when found
  std::vector<std::string> derived;  // settled goals, by description
  std::vector<std::string> missing;  // frontier goals, by description
  std::vector<std::string> notes;    // cap hits and degradations
  int classes = 0;                   // iso classes tracked
  int members = 0;                   // classes derived as members
  int sequences = 0;                 // exact sequences registered
  int rounds = 0;
  std::string report() const;
};

SearchResult search_membership(const Canon& C, const std::vector<RepPtr>& targets,
                               const SearchCaps& caps);

struct Verdict {
  bool generates = false;
  std::string route;   // "finite-injective-dimension" | "simples" | ""
  int injdim = -1;     // set on the finite-injdim route
  Json certificate;    // set whenever generates
  std::string report;  // frontier and cap report otherwise
};

Verdict decide_generates(AlgebraPtr alg, const SearchCaps& caps = {});
std::string verdict_text(const Verdict& v);

}  // namespace quigen
