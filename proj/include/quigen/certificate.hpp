#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "quigen/resolve.hpp"

namespace quigen {

using Json = nlohmann::ordered_json;

// Certificates are machine-checkable derivations that explicit modules lie
// in the localizing subcategory generated by the injectives.  The format is
// documented in docs/certificate-format.md.  The rule set is closed:
//
//   inj  conclusion isomorphic to an explicit sum of indecomposable injectives
//   ses  short exact sequence; two terms derived => the third
//   sum  direct summand of a derived module (explicit splitting iso)
//   per  exact chain capped by an exact periodic cycle of morphisms
//   fct  finite family closed under cosyzygy modulo injective summands
//
// Soundness notes for per/fct live in docs/certificate-format.md; both
// reduce to bounded-above complexes of injectives.

struct CertPart {  // one summand of a direct-sum expression
  int mod = -1;    // module handle, used when >= 0
  int inj = -1;    // else: vertex of a canonical indecomposable injective
};

struct CertFctNode {
  int mod = -1;                 // family member handle
  std::vector<int> mults;       // per-vertex multiplicities of its hull
  Morphism embed;               // member -> sum of injectives, injective
  std::vector<CertPart> parts;  // cokernel summands; refs stay in the family
  Morphism iso;                 // sum(parts) -> cokernel(embed)
};

// Emission side.  Handles are dense ints; premises must be derived before a
// step that consumes them, mirroring the forward checking discipline.
class CertBuilder {
 public:
  explicit CertBuilder(const Canon& canon);

  int add_module(RepPtr M);  // dedup by pointer identity
  RepPtr module(int handle) const;
  bool derived(int handle) const;

  void add_inj(int conclusion, const std::vector<int>& mults, const Morphism& iso);
  void add_ses(int sub, int mid, int quot, const Morphism& f, const Morphism& g,
               int conclusion);
  void add_sum(int sum, const std::vector<int>& parts, const Morphism& iso,
               int conclusion);
  // chain[k] --beta[k-1]--> chain[k-1]; cycle[(i+1)%p] --gamma[i]--> cycle[i];
  // chain.back() must be cycle.front(); concludes chain.front()
  void add_per(const std::vector<int>& chain, const std::vector<Morphism>& beta,
               const std::vector<int>& cycle, const std::vector<Morphism>& gamma);
  void add_fct(const std::vector<CertFctNode>& family, int conclusion);

  // serialize only the steps a goal needs, in derivation order, with module
  // ids renumbered densely; kind is "simples" or "regular"
  Json finish(const std::string& kind, const std::vector<int>& goals) const;

 private:
  struct StepRec {
    std::string rule;
    int conclusion = -1;
    std::vector<int> premises;  // handles that must be derived first
    std::vector<int> mentions;  // every handle the step names
    std::vector<int> mults;
    Morphism f, g, iso;
    std::vector<int> chain, cycle, parts;
    std::vector<Morphism> beta, gamma;
    std::vector<CertFctNode> fct;
  };
  int require_handle(int h, const char* where) const;
  void require_derived(int h, const char* rule);

  const Canon* canon_;
  std::vector<RepPtr> modules_;
  std::vector<const void*> keys_;
  std::vector<StepRec> steps_;
  std::vector<char> derived_;
};

struct CheckResult {
  bool accepted = false;
  int step = -1;  // first failing step index; -1 for table/global failures
  std::string reason;
};

// Independent verifier.  Reconstructs the canonical injectives, simples and
// regular module from the algebra alone, re-parses every module literal,
// and re-verifies every rule condition; it trusts nothing from the emitter.
CheckResult check_certificate(AlgebraPtr alg, const Json& cert);

// serialization helpers shared by emitter, checker and CLI
Json matrix_to_json(const Field& F, const Mat& m);
Json module_to_json(const Representation& M);
Json blocks_to_json(const Field& F, const std::vector<Mat>& blocks);

}  // namespace quigen
