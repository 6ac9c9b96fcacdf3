#include "quigen/certificate.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace quigen {

namespace {

Scalar scalar_from_json(const Field& F, const Json& j) {
  if (j.is_string()) return F.parse(j.get<std::string>());
  if (j.is_number_integer()) return F.reduce(Scalar(j.get<long>()));
  throw Error("scalar entries must be strings or integers");
}

Mat matrix_from_json(const Field& F, const Json& j, int nrows, int ncols,
                     const std::string& where) {
  if (!j.is_array() || static_cast<int>(j.size()) != nrows)
    throw Error(where + ": expected " + std::to_string(nrows) + " rows");
  Mat m(nrows, ncols);
  for (int i = 0; i < nrows; ++i) {
    const Json& row = j[i];
    if (!row.is_array() || static_cast<int>(row.size()) != ncols)
      throw Error(where + ": row " + std::to_string(i) + " needs " +
                  std::to_string(ncols) + " entries");
    for (int c = 0; c < ncols; ++c) m.at(i, c) = scalar_from_json(F, row[c]);
  }
  return m;
}

// sum of I_v^{mults[v]}, v ascending, copies consecutive
RepPtr injective_sum(const Canon& C, const std::vector<int>& mults) {
  std::vector<RepPtr> parts;
  for (size_t v = 0; v < mults.size(); ++v) {
    if (mults[v] < 0) throw Error("negative injective multiplicity");
    for (int c = 0; c < mults[v]; ++c) parts.push_back(C.injectives[v]);
  }
  if (parts.empty()) return zero_rep(C.alg);
  return direct_sum(C.alg, parts).rep;
}

}  // namespace

Json matrix_to_json(const Field& F, const Mat& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.nrows; ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.ncols; ++j) row.push_back(F.str(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json module_to_json(const Representation& M) {
  const Field& F = M.alg->field();
  Json j;
  j["dims"] = M.dims;
  Json maps = Json::object();
  for (int a = 0; a < M.alg->n_arrows(); ++a)
    maps[M.alg->arrow(a).name] = matrix_to_json(F, M.maps[a]);
  j["maps"] = std::move(maps);
  return j;
}

Json blocks_to_json(const Field& F, const std::vector<Mat>& blocks) {
  Json j = Json::array();
  for (const Mat& b : blocks) j.push_back(matrix_to_json(F, b));
  return j;
}

// ---------------------------------------------------------------- builder

CertBuilder::CertBuilder(const Canon& canon) : canon_(&canon) {}

int CertBuilder::add_module(RepPtr M) {
  if (!M) throw Error("null module");
  if (M->alg != canon_->alg) throw Error("module over a different algebra");
  const void* key = M.get();
  for (size_t i = 0; i < keys_.size(); ++i)
    if (keys_[i] == key) return static_cast<int>(i);
  modules_.push_back(std::move(M));
  keys_.push_back(key);
  derived_.push_back(0);
  return static_cast<int>(modules_.size()) - 1;
}

RepPtr CertBuilder::module(int handle) const {
  require_handle(handle, "module");
  return modules_[handle];
}

bool CertBuilder::derived(int handle) const {
  require_handle(handle, "derived");
  return derived_[handle] != 0;
}

int CertBuilder::require_handle(int h, const char* where) const {
  if (h < 0 || h >= static_cast<int>(modules_.size()))
    throw Error(std::string(where) + ": bad module handle");
  return h;
}

void CertBuilder::require_derived(int h, const char* rule) {
  if (!derived(h))
    throw Error(std::string(rule) + ": premise " + dims_str(*modules_[h]) +
                " is not derived yet");
}

static void require_block_shape(const Morphism& m, const Representation& src,
                                const Representation& dst, const char* where) {
  if (m.blocks.size() != src.dims.size())
    throw Error(std::string(where) + ": block count mismatch");
  for (size_t v = 0; v < src.dims.size(); ++v)
    if (m.blocks[v].nrows != dst.dims[v] || m.blocks[v].ncols != src.dims[v])
      throw Error(std::string(where) + ": block shape mismatch");
}

void CertBuilder::add_inj(int conclusion, const std::vector<int>& mults,
                          const Morphism& iso) {
  require_handle(conclusion, "inj");
  if (static_cast<int>(mults.size()) != canon_->alg->vertices())
    throw Error("inj: multiplicity vector has wrong length");
  RepPtr J = injective_sum(*canon_, mults);
  require_block_shape(iso, *J, *modules_[conclusion], "inj");
  StepRec s;
  s.rule = "inj";
  s.conclusion = conclusion;
  s.mentions = {conclusion};
  s.mults = mults;
  s.iso = iso;
  steps_.push_back(std::move(s));
  derived_[conclusion] = 1;
}

void CertBuilder::add_ses(int sub, int mid, int quot, const Morphism& f,
                          const Morphism& g, int conclusion) {
  require_handle(sub, "ses");
  require_handle(mid, "ses");
  require_handle(quot, "ses");
  if (conclusion != sub && conclusion != mid && conclusion != quot)
    throw Error("ses: conclusion is not a term of the sequence");
  require_block_shape(f, *modules_[sub], *modules_[mid], "ses f");
  require_block_shape(g, *modules_[mid], *modules_[quot], "ses g");
  StepRec s;
  s.rule = "ses";
  s.conclusion = conclusion;
  for (int h : {sub, mid, quot})
    if (h != conclusion) s.premises.push_back(h);
  for (int h : s.premises) require_derived(h, "ses");
  s.mentions = {sub, mid, quot};
  s.chain = {sub, mid, quot};  // reuse: fixed order (sub, mid, quot)
  s.f = f;
  s.g = g;
  steps_.push_back(std::move(s));
  derived_[conclusion] = 1;
}

void CertBuilder::add_sum(int sum, const std::vector<int>& parts,
                          const Morphism& iso, int conclusion) {
  require_handle(sum, "sum");
  if (parts.empty()) throw Error("sum: no parts");
  bool found = false;
  for (int p : parts) {
    require_handle(p, "sum");
    found = found || p == conclusion;
  }
  if (!found) throw Error("sum: conclusion is not a part");
  require_derived(sum, "sum");
  StepRec s;
  s.rule = "sum";
  s.conclusion = conclusion;
  s.premises = {sum};
  s.mentions = parts;
  s.mentions.push_back(sum);
  s.parts = parts;
  s.chain = {sum};
  s.iso = iso;
  steps_.push_back(std::move(s));
  derived_[conclusion] = 1;
}

void CertBuilder::add_per(const std::vector<int>& chain,
                          const std::vector<Morphism>& beta,
                          const std::vector<int>& cycle,
                          const std::vector<Morphism>& gamma) {
  if (chain.size() < 2 || beta.size() + 1 != chain.size())
    throw Error("per: chain needs k+1 modules for k maps, k >= 1");
  if (cycle.empty() || gamma.size() != cycle.size())
    throw Error("per: cycle needs one map per module");
  if (chain.back() != cycle.front())
    throw Error("per: chain must end at the first cycle module");
  for (int h : chain) require_handle(h, "per");
  for (int h : cycle) require_handle(h, "per");
  StepRec s;
  s.rule = "per";
  s.conclusion = chain.front();
  for (size_t k = 1; k < chain.size(); ++k) s.premises.push_back(chain[k]);
  for (int h : cycle) s.premises.push_back(h);
  for (int h : s.premises) require_derived(h, "per");
  s.mentions = chain;
  s.mentions.insert(s.mentions.end(), cycle.begin(), cycle.end());
  s.chain = chain;
  s.cycle = cycle;
  s.beta = beta;
  s.gamma = gamma;
  steps_.push_back(std::move(s));
  derived_[chain.front()] = 1;
}

void CertBuilder::add_fct(const std::vector<CertFctNode>& family, int conclusion) {
  if (family.empty()) throw Error("fct: empty family");
  std::set<int> members;
  for (const CertFctNode& n : family) {
    require_handle(n.mod, "fct");
    members.insert(n.mod);
  }
  if (members.size() != family.size()) throw Error("fct: duplicate family member");
  if (!members.count(conclusion)) throw Error("fct: conclusion outside family");
  StepRec s;
  s.rule = "fct";
  s.conclusion = conclusion;
  for (const CertFctNode& n : family) {
    s.mentions.push_back(n.mod);
    for (const CertPart& p : n.parts) {
      if (p.mod >= 0) {
        require_handle(p.mod, "fct");
        if (!members.count(p.mod)) throw Error("fct: cokernel part escapes the family");
        s.mentions.push_back(p.mod);
      }
    }
  }
  s.fct = family;
  steps_.push_back(std::move(s));
  derived_[conclusion] = 1;
}

Json CertBuilder::finish(const std::string& kind,
                         const std::vector<int>& goals) const {
  if (kind != "simples" && kind != "regular")
    throw Error("unknown certificate kind " + kind);
  if (goals.empty()) throw Error("no goals");

  // earliest deriving step per handle, then backward closure from the goals
  std::vector<int> first(modules_.size(), -1);
  for (size_t i = 0; i < steps_.size(); ++i)
    if (first[steps_[i].conclusion] < 0)
      first[steps_[i].conclusion] = static_cast<int>(i);
  std::vector<char> keep(steps_.size(), 0);
  std::vector<int> work = goals;
  std::vector<char> seen(modules_.size(), 0);
  while (!work.empty()) {
    int h = work.back();
    work.pop_back();
    require_handle(h, "finish");
    if (seen[h]) continue;
    seen[h] = 1;
    if (first[h] < 0)
      throw Error("goal or premise was never derived: " + dims_str(*modules_[h]));
    const StepRec& s = steps_[first[h]];
    if (!keep[first[h]]) {
      keep[first[h]] = 1;
      for (int p : s.premises) work.push_back(p);
    }
  }

  // dense ids in order of first mention across the kept steps
  std::vector<int> order;
  std::vector<int> id_of(modules_.size(), -1);
  auto visit = [&](int h) {
    if (id_of[h] < 0) {
      id_of[h] = static_cast<int>(order.size());
      order.push_back(h);
    }
  };
  for (size_t i = 0; i < steps_.size(); ++i)
    if (keep[i])
      for (int h : steps_[i].mentions) visit(h);
  for (int g : goals) visit(g);
  auto id = [&](int h) { return "M" + std::to_string(id_of[h] + 1); };

  const Field& F = canon_->alg->field();
  Json cert;
  cert["format"] = "quigen-certificate";
  cert["version"] = 1;
  Json alg;
  alg["label"] = canon_->alg->spec().label;
  alg["hash"] = canon_->alg->hash_hex();
  alg["field"] = F.name();
  alg["vertices"] = canon_->alg->vertices();
  alg["arrows"] = canon_->alg->n_arrows();
  cert["algebra"] = std::move(alg);
  cert["kind"] = kind;
  Json jgoals = Json::array();
  for (int g : goals) jgoals.push_back(id(g));
  cert["goals"] = std::move(jgoals);

  Json mods = Json::object();
  for (int h : order) mods[id(h)] = module_to_json(*modules_[h]);
  cert["modules"] = std::move(mods);

  Json jsteps = Json::array();
  for (size_t i = 0; i < steps_.size(); ++i) {
    if (!keep[i]) continue;
    const StepRec& s = steps_[i];
    Json js;
    js["rule"] = s.rule;
    if (s.rule == "inj") {
      js["mults"] = s.mults;
      js["iso"] = blocks_to_json(F, s.iso.blocks);
    } else if (s.rule == "ses") {
      js["sub"] = id(s.chain[0]);
      js["mid"] = id(s.chain[1]);
      js["quot"] = id(s.chain[2]);
      js["f"] = blocks_to_json(F, s.f.blocks);
      js["g"] = blocks_to_json(F, s.g.blocks);
    } else if (s.rule == "sum") {
      js["sum"] = id(s.chain[0]);
      Json parts = Json::array();
      for (int p : s.parts) parts.push_back(id(p));
      js["parts"] = std::move(parts);
      js["iso"] = blocks_to_json(F, s.iso.blocks);
    } else if (s.rule == "per") {
      Json chain = Json::array(), cycle = Json::array();
      for (int h : s.chain) chain.push_back(id(h));
      for (int h : s.cycle) cycle.push_back(id(h));
      js["chain"] = std::move(chain);
      js["cycle"] = std::move(cycle);
      Json beta = Json::array(), gamma = Json::array();
      for (const Morphism& b : s.beta) beta.push_back(blocks_to_json(F, b.blocks));
      for (const Morphism& g : s.gamma) gamma.push_back(blocks_to_json(F, g.blocks));
      js["beta"] = std::move(beta);
      js["gamma"] = std::move(gamma);
    } else {  // fct
      Json fam = Json::array();
      for (const CertFctNode& n : s.fct) fam.push_back(id(n.mod));
      js["family"] = std::move(fam);
      Json nodes = Json::array();
      for (const CertFctNode& n : s.fct) {
        Json jn;
        jn["module"] = id(n.mod);
        jn["mults"] = n.mults;
        jn["embed"] = blocks_to_json(F, n.embed.blocks);
        Json parts = Json::array();
        for (const CertPart& p : n.parts) {
          Json jp;
          if (p.mod >= 0)
            jp["ref"] = id(p.mod);
          else
            jp["inj"] = p.inj;
          parts.push_back(std::move(jp));
        }
        jn["parts"] = std::move(parts);
        jn["iso"] = blocks_to_json(F, n.iso.blocks);
        nodes.push_back(std::move(jn));
      }
      js["nodes"] = std::move(nodes);
    }
    js["conclusion"] = id(s.conclusion);
    jsteps.push_back(std::move(js));
  }
  cert["steps"] = std::move(jsteps);
  return cert;
}

// ---------------------------------------------------------------- checker

namespace {

struct CheckFail {
  int step;
  std::string reason;
};

[[noreturn]] void fail(int step, const std::string& reason) {
  throw CheckFail{step, reason};
}

const Json& want(const Json& j, const char* key, int step) {
  if (!j.is_object() || !j.contains(key))
    fail(step, std::string("missing field '") + key + "'");
  return j[key];
}

std::string want_id(const Json& j, const char* key, int step) {
  const Json& v = want(j, key, step);
  if (!v.is_string()) fail(step, std::string("field '") + key + "' must be an id");
  return v.get<std::string>();
}

std::vector<int> want_ints(const Json& j, const char* key, int step) {
  const Json& v = want(j, key, step);
  if (!v.is_array()) fail(step, std::string("field '") + key + "' must be an array");
  std::vector<int> out;
  for (const Json& e : v) {
    if (!e.is_number_integer())
      fail(step, std::string("field '") + key + "' must hold integers");
    out.push_back(e.get<int>());
  }
  return out;
}

std::vector<std::string> want_ids(const Json& j, const char* key, int step) {
  const Json& v = want(j, key, step);
  if (!v.is_array()) fail(step, std::string("field '") + key + "' must be an array");
  std::vector<std::string> out;
  for (const Json& e : v) {
    if (!e.is_string()) fail(step, std::string("field '") + key + "' must hold ids");
    out.push_back(e.get<std::string>());
  }
  return out;
}

class CertChecker {
 public:
  CertChecker(AlgebraPtr alg, const Json& cert)
      : alg_(std::move(alg)), cert_(cert), canon_(Canon::make(alg_)) {}

  void run() {
    header();
    table();
    const Json& steps = want(cert_, "steps", -1);
    if (!steps.is_array()) fail(-1, "'steps' must be an array");
    for (size_t i = 0; i < steps.size(); ++i) step(static_cast<int>(i), steps[i]);
    goals();
  }

 private:
  AlgebraPtr alg_;
  const Json& cert_;
  Canon canon_;
  std::map<std::string, RepPtr> mods_;
  std::set<std::string> derived_;

  void header() {
    if (want(cert_, "format", -1) != "quigen-certificate")
      fail(-1, "not a certificate file");
    if (want(cert_, "version", -1) != 1) fail(-1, "unsupported version");
    const Json& a = want(cert_, "algebra", -1);
    if (want_id(a, "hash", -1) != alg_->hash_hex())
      fail(-1, "algebra hash mismatch: certificate was issued for a different algebra");
    if (want(a, "vertices", -1) != alg_->vertices())
      fail(-1, "algebra vertex count mismatch");
  }

  void table() {
    const Json& mods = want(cert_, "modules", -1);
    if (!mods.is_object()) fail(-1, "'modules' must be an object");
    const Field& F = alg_->field();
    for (const auto& [id, jm] : mods.items()) {
      std::vector<int> dims = want_ints(jm, "dims", -1);
      if (static_cast<int>(dims.size()) != alg_->vertices())
        fail(-1, "module " + id + ": wrong number of vertex dimensions");
      for (int d : dims)
        if (d < 0) fail(-1, "module " + id + ": negative dimension");
      const Json& maps = want(jm, "maps", -1);
      if (!maps.is_object()) fail(-1, "module " + id + ": 'maps' must be an object");
      if (maps.size() != static_cast<size_t>(alg_->n_arrows()))
        fail(-1, "module " + id + ": expected one matrix per arrow");
      std::vector<Mat> mats;
      for (int k = 0; k < alg_->n_arrows(); ++k) {
        const Arrow& ar = alg_->arrow(k);
        if (!maps.contains(ar.name))
          fail(-1, "module " + id + ": missing matrix for arrow " + ar.name);
        try {
          mats.push_back(matrix_from_json(F, maps[ar.name], dims[ar.tgt],
                                          dims[ar.src], "arrow " + ar.name));
        } catch (const Error& e) {
          fail(-1, "module " + id + ": " + e.what());
        }
      }
      RepPtr M;
      try {
        M = make_rep(alg_, dims, std::move(mats));
      } catch (const Error& e) {
        fail(-1, "module " + id + ": " + e.what());
      }
      if (auto violation = check_module(*M))
        fail(-1, "module " + id + ": " + *violation);
      mods_[id] = M;
    }
  }

  RepPtr getmod(const std::string& id, int step) const {
    auto it = mods_.find(id);
    if (it == mods_.end()) fail(step, "unknown module id " + id);
    return it->second;
  }

  void need(const std::string& id, int step) const {
    if (!derived_.count(id)) fail(step, "premise " + id + " is not derived");
  }

  Morphism morphism_from_json(const Json& j, RepPtr src, RepPtr dst,
                              const std::string& where, int step) const {
    if (!j.is_array() || static_cast<int>(j.size()) != alg_->vertices())
      fail(step, where + ": expected one block per vertex");
    const Field& F = alg_->field();
    std::vector<Mat> blocks;
    for (int v = 0; v < alg_->vertices(); ++v) {
      try {
        blocks.push_back(matrix_from_json(F, j[v], dst->dims[v], src->dims[v],
                                          where + ", vertex " + std::to_string(v)));
      } catch (const Error& e) {
        fail(step, e.what());
      }
    }
    Morphism m{std::move(src), std::move(dst), std::move(blocks)};
    if (!is_morphism(m)) fail(step, where + ": not a module morphism");
    return m;
  }

  RepPtr sum_from_mults(const std::vector<int>& mults, int step) const {
    if (static_cast<int>(mults.size()) != alg_->vertices())
      fail(step, "multiplicity vector has wrong length");
    try {
      return injective_sum(canon_, mults);
    } catch (const Error& e) {
      fail(step, e.what());
    }
  }

  // im(into) = ker(outof) on every vertex; both must land in / leave the
  // same middle module
  void require_exact(const Morphism& into, const Morphism& outof,
                     const std::string& where, int step) const {
    const Field& F = alg_->field();
    for (int v = 0; v < alg_->vertices(); ++v) {
      Mat im = column_space_basis(F, into.blocks[v]);
      Mat ker = kernel_basis(F, outof.blocks[v]);
      if (!same_column_span(F, im, ker))
        fail(step, where + ": image differs from kernel at vertex " +
                       std::to_string(v));
    }
  }

  void step(int i, const Json& s) {
    std::string rule = want_id(s, "rule", i);
    std::string conclusion = want_id(s, "conclusion", i);
    getmod(conclusion, i);
    if (rule == "inj")
      rule_inj(i, s, conclusion);
    else if (rule == "ses")
      rule_ses(i, s, conclusion);
    else if (rule == "sum")
      rule_sum(i, s, conclusion);
    else if (rule == "per")
      rule_per(i, s, conclusion);
    else if (rule == "fct")
      rule_fct(i, s, conclusion);
    else
      fail(i, "unknown rule " + rule);
    derived_.insert(conclusion);
  }

  void rule_inj(int i, const Json& s, const std::string& conclusion) {
    RepPtr J = sum_from_mults(want_ints(s, "mults", i), i);
    Morphism iso = morphism_from_json(want(s, "iso", i), J, getmod(conclusion, i),
                                      "iso", i);
    if (!is_iso(iso)) fail(i, "iso: not invertible");
  }

  void rule_ses(int i, const Json& s, const std::string& conclusion) {
    std::string sub = want_id(s, "sub", i);
    std::string mid = want_id(s, "mid", i);
    std::string quot = want_id(s, "quot", i);
    if (conclusion != sub && conclusion != mid && conclusion != quot)
      fail(i, "conclusion is not a term of the sequence");
    for (const std::string& id : {sub, mid, quot})
      if (id != conclusion) need(id, i);
    RepPtr X = getmod(sub, i), Y = getmod(mid, i), Z = getmod(quot, i);
    Morphism f = morphism_from_json(want(s, "f", i), X, Y, "f", i);
    Morphism g = morphism_from_json(want(s, "g", i), Y, Z, "g", i);
    if (!is_injective(f)) fail(i, "f is not injective");
    if (!is_surjective(g)) fail(i, "g is not surjective");
    if (!morphism_is_zero(compose(g, f))) fail(i, "g o f is not zero");
    std::vector<int> rf = ranks(f), rg = ranks(g);
    for (int v = 0; v < alg_->vertices(); ++v)
      if (rf[v] + rg[v] != Y->dims[v])
        fail(i, "not exact at the middle term, vertex " + std::to_string(v));
  }

  void rule_sum(int i, const Json& s, const std::string& conclusion) {
    std::string sum = want_id(s, "sum", i);
    need(sum, i);
    std::vector<std::string> parts = want_ids(s, "parts", i);
    if (parts.empty()) fail(i, "no parts");
    bool found = false;
    std::vector<RepPtr> reps;
    for (const std::string& p : parts) {
      reps.push_back(getmod(p, i));
      found = found || p == conclusion;
    }
    if (!found) fail(i, "conclusion is not one of the parts");
    RepPtr S = reps.size() == 1 ? reps[0] : direct_sum(alg_, reps).rep;
    Morphism iso = morphism_from_json(want(s, "iso", i), S, getmod(sum, i),
                                      "iso", i);
    if (!is_iso(iso)) fail(i, "iso: not invertible");
  }

  void rule_per(int i, const Json& s, const std::string& conclusion) {
    std::vector<std::string> chain = want_ids(s, "chain", i);
    std::vector<std::string> cycle = want_ids(s, "cycle", i);
    const Json& jbeta = want(s, "beta", i);
    const Json& jgamma = want(s, "gamma", i);
    size_t m = chain.size() >= 1 ? chain.size() - 1 : 0;
    size_t p = cycle.size();
    if (chain.size() < 2) fail(i, "chain needs at least two modules");
    if (p < 1) fail(i, "cycle is empty");
    if (!jbeta.is_array() || jbeta.size() != m) fail(i, "need one beta per chain edge");
    if (!jgamma.is_array() || jgamma.size() != p) fail(i, "need one gamma per cycle module");
    if (chain.back() != cycle.front())
      fail(i, "chain must end at the first cycle module");
    if (conclusion != chain.front()) fail(i, "conclusion must be the chain head");
    for (size_t k = 1; k < chain.size(); ++k) need(chain[k], i);
    for (const std::string& id : cycle) need(id, i);

    std::vector<Morphism> beta, gamma;
    for (size_t k = 0; k < m; ++k)
      beta.push_back(morphism_from_json(jbeta[k], getmod(chain[k + 1], i),
                                        getmod(chain[k], i),
                                        "beta[" + std::to_string(k) + "]", i));
    for (size_t k = 0; k < p; ++k)
      gamma.push_back(morphism_from_json(jgamma[k], getmod(cycle[(k + 1) % p], i),
                                         getmod(cycle[k], i),
                                         "gamma[" + std::to_string(k) + "]", i));
    if (!is_surjective(beta[0])) fail(i, "the map onto the conclusion is not surjective");
    for (size_t k = 1; k < m; ++k)
      require_exact(beta[k], beta[k - 1],
                    "chain position " + std::to_string(k), i);
    require_exact(gamma[0], beta[m - 1], "periodic seam", i);
    for (size_t k = 0; k < p; ++k)
      require_exact(gamma[k], gamma[(k + p - 1) % p],
                    "cycle position " + std::to_string(k), i);
  }

  void rule_fct(int i, const Json& s, const std::string& conclusion) {
    std::vector<std::string> family = want_ids(s, "family", i);
    if (family.empty()) fail(i, "empty family");
    std::set<std::string> members(family.begin(), family.end());
    if (members.size() != family.size()) fail(i, "duplicate family member");
    if (!members.count(conclusion)) fail(i, "conclusion outside the family");
    const Json& nodes = want(s, "nodes", i);
    if (!nodes.is_array() || nodes.size() != family.size())
      fail(i, "need one node record per family member");
    for (size_t k = 0; k < nodes.size(); ++k) {
      const Json& n = nodes[k];
      std::string id = want_id(n, "module", i);
      if (id != family[k]) fail(i, "node records must follow the family order");
      RepPtr X = getmod(id, i);
      RepPtr J = sum_from_mults(want_ints(n, "mults", i), i);
      Morphism embed = morphism_from_json(want(n, "embed", i), X, J,
                                          "embed of " + id, i);
      if (!is_injective(embed)) fail(i, "embedding of " + id + " is not injective");
      Quot Q = cokernel(embed);
      const Json& jparts = want(n, "parts", i);
      if (!jparts.is_array()) fail(i, "'parts' must be an array");
      std::vector<RepPtr> reps;
      for (const Json& jp : jparts) {
        if (jp.is_object() && jp.contains("ref")) {
          std::string ref = jp["ref"].get<std::string>();
          if (!members.count(ref))
            fail(i, "cokernel part of " + id + " escapes the family");
          reps.push_back(getmod(ref, i));
        } else if (jp.is_object() && jp.contains("inj")) {
          int v = jp["inj"].get<int>();
          if (v < 0 || v >= alg_->vertices()) fail(i, "bad injective vertex");
          reps.push_back(canon_.injectives[v]);
        } else {
          fail(i, "each part must name a 'ref' or an 'inj'");
        }
      }
      RepPtr S = reps.empty() ? zero_rep(alg_) : direct_sum(alg_, reps).rep;
      Morphism iso = morphism_from_json(want(n, "iso", i), S, Q.rep,
                                        "cokernel iso of " + id, i);
      if (!is_iso(iso)) fail(i, "cokernel of " + id + " does not match its parts");
    }
  }

  void goals() {
    std::string kind = want_id(cert_, "kind", -1);
    std::vector<std::string> goals = want_ids(cert_, "goals", -1);
    if (goals.empty()) fail(-1, "no goals");
    for (const std::string& g : goals) {
      getmod(g, -1);
      if (!derived_.count(g)) fail(-1, "goal " + g + " was never derived");
    }
    if (kind == "simples") {
      for (int v = 0; v < alg_->vertices(); ++v) {
        bool covered = false;
        for (const std::string& g : goals) {
          RepPtr M = getmod(g, -1);
          bool is_sv = true;
          for (int w = 0; w < alg_->vertices(); ++w)
            is_sv = is_sv && M->dims[w] == (w == v ? 1 : 0);
          covered = covered || is_sv;
        }
        if (!covered)
          fail(-1, "no goal is the simple module at vertex " + std::to_string(v));
      }
    } else if (kind == "regular") {
      if (goals.size() != 1) fail(-1, "regular kind expects a single goal");
      RepPtr M = getmod(goals[0], -1);
      RepPtr R = regular_rep(alg_);
      if (M->dims != R->dims) fail(-1, "goal is not the regular module");
      const Field& F = alg_->field();
      for (int a = 0; a < alg_->n_arrows(); ++a)
        if (!eq(F, M->maps[a], R->maps[a]))
          fail(-1, "goal is not the regular module");
    } else {
      fail(-1, "unknown certificate kind " + kind);
    }
  }
};

}  // namespace

CheckResult check_certificate(AlgebraPtr alg, const Json& cert) {
  try {
    CertChecker checker(std::move(alg), cert);
    checker.run();
    return {true, -1, ""};
  } catch (const CheckFail& f) {
    return {false, f.step, f.reason};
  } catch (const std::exception& e) {
    return {false, -1, std::string("malformed certificate: ") + e.what()};
  }
}

}  // namespace quigen
