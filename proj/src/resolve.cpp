#include "quigen/resolve.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

#include "quigen/errors.hpp"

namespace quigen {

namespace {

Mat vec_of(const Morphism& f) {
  int total = 0;
  for (const auto& b : f.blocks) total += b.nrows * b.ncols;
  Mat v(total, 1);
  int at = 0;
  for (const auto& b : f.blocks)
    for (int r = 0; r < b.nrows; ++r)
      for (int c = 0; c < b.ncols; ++c) v.at(at++, 0) = b.at(r, c);
  return v;
}

}  // namespace

HullStep injective_hull(const Canon& C, RepPtr M) {
  const Field& F = C.alg->field();
  HullStep step;
  step.module = M;
  Sub soc = socle(M);
  step.mults = soc.rep->dims;
  std::vector<RepPtr> parts;
  for (int v = 0; v < C.alg->vertices(); ++v)
    for (int k = 0; k < step.mults[v]; ++k) parts.push_back(C.injectives[v]);
  DirectSum J = direct_sum(C.alg, parts);
  step.hull = J.rep;

  // the socle of the hull is a matching sum of simples; any vertexwise
  // identification is a module map since all arrow actions vanish
  Sub socJ = socle(step.hull);
  if (socJ.rep->dims != step.mults)
    throw ExtensionFailure("hull socle has unexpected shape");
  Morphism target = compose(socJ.incl, Morphism{soc.rep, socJ.rep,
                                                [&] {
                                                  std::vector<Mat> b;
                                                  for (int d : step.mults)
                                                    b.push_back(Mat::identity(d));
                                                  return b;
                                                }()});

  // solve e . soc_incl = target over the hom space of M -> J
  auto H = hom_basis(M, step.hull);
  Morphism probe_src = soc.incl;
  Mat sys(vec_of(compose(H.empty() ? zero_morphism(M, step.hull) : H[0],
                         probe_src))
              .nrows,
          static_cast<int>(H.size()));
  for (size_t k = 0; k < H.size(); ++k) {
    Mat col = vec_of(compose(H[k], probe_src));
    for (int r = 0; r < col.nrows; ++r) sys.at(r, static_cast<int>(k)) = col.at(r, 0);
  }
  auto x = solve(F, sys, vec_of(target));
  if (!x)
    throw ExtensionFailure(
        "no hom extends the socle identification; injectivity data broken");
  std::vector<Scalar> coeffs;
  for (int r = 0; r < x->nrows; ++r) coeffs.push_back(x->at(r, 0));
  step.embed = H.empty() ? zero_morphism(M, step.hull) : lincomb(coeffs, H);
  // the restriction to the socle is injective and the socle is essential,
  // so this must be a monomorphism; verify anyway
  if (!is_injective(step.embed))
    throw ExtensionFailure("hull embedding is not injective");
  step.cosyz = cokernel(step.embed);
  return step;
}

RepPtr cosyzygy(const Canon& C, RepPtr M) {
  return injective_hull(C, M).cosyz.rep;
}

bool is_injective_module(const Canon& C, RepPtr M) {
  return cosyzygy(C, M)->is_zero();
}

CoverStep projective_cover(const Canon& C, RepPtr M) {
  const Canon& OC = C.op_canon();
  RepPtr DM = dual_op(*M, C.opp);
  HullStep h = injective_hull(OC, DM);
  CoverStep step;
  step.module = M;
  step.mults = h.mults;
  // D(hull of D M): its parts dualize back to the projectives of C.alg
  step.cover = dual_op(*h.hull, C.alg);
  step.project = dual_op(h.embed, C.alg);
  // re-anchor endpoints on the original objects to keep pointer identity
  step.project.src = step.cover;
  step.project.dst = M;
  if (!is_surjective(step.project))
    throw ExtensionFailure("projective cover map is not surjective");
  step.syz = kernel(step.project);
  return step;
}

RepPtr syzygy(const Canon& C, RepPtr M) {
  return projective_cover(C, M).syz.rep;
}

Resolution injective_resolution(const Canon& C, RepPtr M, int length_cap) {
  Resolution res;
  RepPtr cur = M;
  while (!cur->is_zero()) {
    if (static_cast<int>(res.steps.size()) >= length_cap) return res;
    res.steps.push_back(injective_hull(C, cur));
    cur = res.steps.back().cosyz.rep;
  }
  res.finite = true;
  res.injdim = static_cast<int>(res.steps.size()) - 1;
  if (res.injdim < 0) res.injdim = 0;  // the zero module
  return res;
}

InjDimResult injdim_regular(const Canon& C, int bound) {
  Resolution res = injective_resolution(C, regular_rep(C.alg), bound + 1);
  InjDimResult out;
  out.bound = bound;
  if (res.finite && res.injdim <= bound) {
    out.finite = true;
    out.dim = res.injdim;
  }
  return out;
}

// ---- registry ----

std::string Registry::key(const Representation& M) const {
  std::ostringstream os;
  os << dims_str(M);
  const Field& F = M.alg->field();
  for (const auto& m : M.maps) os << ":" << rank(F, m);
  return os.str();
}

int Registry::find(RepPtr indec) const {
  std::string k = key(*indec);
  for (size_t i = 0; i < reps_.size(); ++i) {
    if (keys_[i] != k) continue;
    if (iso_indec(reps_[i], indec)) return static_cast<int>(i);
  }
  return -1;
}

int Registry::id_of(RepPtr indec) {
  int i = find(indec);
  if (i >= 0) return i;
  reps_.push_back(indec);
  keys_.push_back(key(*indec));
  injective_.push_back(-1);
  return static_cast<int>(reps_.size()) - 1;
}

bool Registry::is_injective(int id) {
  if (injective_[id] < 0)
    injective_[id] = is_injective_module(*canon_, reps_[id]) ? 1 : 0;
  return injective_[id] == 1;
}

// ---- cosyzygy graph ----

CosyzygyGraph cosyzygy_graph(const Canon& C, Registry& reg,
                             const std::vector<RepPtr>& seed_modules,
                             const GraphCaps& caps) {
  CosyzygyGraph g;
  std::map<int, int> node_of;  // registry id -> node index

  auto add_class = [&](RepPtr piece, int* idx) -> bool {
    if (piece->total_dim() > caps.max_dim) {
      g.stop_reason = "a cosyzygy piece of dimension " +
                      std::to_string(piece->total_dim()) +
                      " exceeds max-dim " + std::to_string(caps.max_dim);
      return false;
    }
    int id = reg.id_of(piece);
    if (reg.is_injective(id)) {
      *idx = -1;  // injective pieces are absorbed, not tracked
      return true;
    }
    auto it = node_of.find(id);
    if (it != node_of.end()) {
      *idx = it->second;
      return true;
    }
    if (static_cast<int>(g.nodes.size()) >= caps.max_nodes) {
      g.stop_reason = "node budget max-nodes " +
                      std::to_string(caps.max_nodes) + " exhausted";
      return false;
    }
    CosyzygyGraph::Node n;
    n.reg_id = id;
    n.rep = reg.reps()[id];
    *idx = static_cast<int>(g.nodes.size());
    node_of[id] = *idx;
    g.nodes.push_back(std::move(n));
    return true;
  };

  for (const auto& seed : seed_modules) {
    Decomposition d = decompose(seed);
    for (const auto& piece : d.pieces) {
      int idx = -1;
      if (!add_class(piece, &idx)) return g;
      if (idx >= 0 &&
          std::find(g.seeds.begin(), g.seeds.end(), idx) == g.seeds.end())
        g.seeds.push_back(idx);
    }
  }

  for (size_t i = 0; i < g.nodes.size(); ++i) {
    HullStep h = injective_hull(C, g.nodes[i].rep);
    g.nodes[i].hull_mults = h.mults;
    Decomposition d = decompose(h.cosyz.rep);
    std::map<int, int> mult;  // node index -> multiplicity
    for (const auto& piece : d.pieces) {
      int idx = -1;
      if (!add_class(piece, &idx)) return g;
      if (idx >= 0) ++mult[idx];
    }
    for (const auto& [idx, m] : mult) g.nodes[i].out.push_back({idx, m});
  }
  g.complete = true;
  return g;
}

RepetitionIndex repetition_index(const CosyzygyGraph& g) {
  if (!g.complete) return {};
  const int n = static_cast<int>(g.nodes.size());
  // reach[i] = nodes reachable from i in >= 1 step
  std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
  for (int i = 0; i < n; ++i) {
    std::queue<int> q;
    for (const auto& [j, m] : g.nodes[i].out)
      if (!reach[i][j]) {
        reach[i][j] = 1;
        q.push(j);
      }
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (const auto& [j, m] : g.nodes[u].out)
        if (!reach[i][j]) {
          reach[i][j] = 1;
          q.push(j);
        }
    }
  }
  // recurring classes: reachable from some node that lies on a cycle
  std::vector<char> rec(n, 0);
  for (int i = 0; i < n; ++i) {
    if (!reach[i][i]) continue;
    rec[i] = 1;
    for (int j = 0; j < n; ++j)
      if (reach[i][j]) rec[j] = 1;
  }
  // walk layers: least k with layer_k contained in the recurring set; a
  // path of length > n repeats a node, so k <= n + 1 always terminates
  std::vector<char> layer(n, 0);
  for (int s : g.seeds) layer[s] = 1;
  for (int k = 0; k <= n + 1; ++k) {
    bool ok = true;
    for (int i = 0; i < n; ++i)
      if (layer[i] && !rec[i]) ok = false;
    if (ok) return {true, k};
    std::vector<char> next(n, 0);
    for (int i = 0; i < n; ++i)
      if (layer[i])
        for (const auto& [j, m] : g.nodes[i].out) next[j] = 1;
    layer = std::move(next);
  }
  return {};  // unreachable if the graph data is consistent
}

std::string graph_to_text(const CosyzygyGraph& g, const std::string& algebra_hash) {
  std::ostringstream os;
  os << "cosyzygy-graph\n";
  os << "algebra " << algebra_hash << "\n";
  os << "complete " << (g.complete ? "true" : "false") << "\n";
  if (!g.complete) os << "reason " << g.stop_reason << "\n";
  os << "seeds";
  for (int s : g.seeds) os << " N" << s;
  os << "\n";
  for (size_t i = 0; i < g.nodes.size(); ++i) {
    os << "node N" << i << " dims " << dims_str(*g.nodes[i].rep) << " hull";
    for (size_t v = 0; v < g.nodes[i].hull_mults.size(); ++v)
      os << " " << g.nodes[i].hull_mults[v];
    os << "\n";
  }
  for (size_t i = 0; i < g.nodes.size(); ++i)
    for (const auto& [j, m] : g.nodes[i].out)
      os << "edge N" << i << " N" << j << " " << m << "\n";
  return os.str();
}

}  // namespace quigen
