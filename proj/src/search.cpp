#include "quigen/search.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "quigen/decompose.hpp"
#include "quigen/errors.hpp"

namespace quigen {

std::vector<RepPtr> derive_simple_targets(AlgebraPtr alg) {
  std::vector<RepPtr> out;
  for (int v = 0; v < alg->vertices(); ++v) out.push_back(simple_rep(alg, v));
  return out;
}

namespace {

// submodule generated by explicit seed vectors: close their span under the
// arrow action, then restrict the action to the span
Sub generated_submodule(RepPtr M, const std::vector<std::pair<int, Mat>>& seeds) {
  AlgebraPtr A = M->alg;
  const Field& F = A->field();
  int n = A->vertices();
  std::vector<Mat> span;
  for (int v = 0; v < n; ++v) span.emplace_back(M->dims[v], 0);
  for (const auto& [v, col] : seeds) span[v] = hstack(span[v], col);
  for (int v = 0; v < n; ++v) span[v] = column_space_basis(F, span[v]);
  bool grew = true;
  while (grew) {
    grew = false;
    for (int a = 0; a < A->n_arrows(); ++a) {
      int s = A->arrow(a).src, t = A->arrow(a).tgt;
      if (span[s].ncols == 0) continue;
      Mat bigger =
          column_space_basis(F, hstack(span[t], mul(F, M->maps[a], span[s])));
      if (bigger.ncols != span[t].ncols) {
        span[t] = std::move(bigger);
        grew = true;
      }
    }
  }
  std::vector<int> dims(n);
  for (int v = 0; v < n; ++v) dims[v] = span[v].ncols;
  std::vector<Mat> maps;
  for (int a = 0; a < A->n_arrows(); ++a) {
    int s = A->arrow(a).src, t = A->arrow(a).tgt;
    auto X = solve(F, span[t], mul(F, M->maps[a], span[s]));
    if (!X) throw Error("generated span is not closed under the action");
    maps.push_back(std::move(*X));
  }
  RepPtr U = make_rep(A, std::move(dims), std::move(maps));
  Morphism incl{U, M, span};
  return {std::move(U), std::move(incl)};
}

// deterministic small coefficients for hom-space scans
int small_coeff(std::mt19937_64& rng) { return static_cast<int>(rng() % 7) - 3; }

unsigned long long mix(unsigned long long h, unsigned long long v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

class Searcher {
 public:
  Searcher(const Canon& C, const std::vector<RepPtr>& targets,
           const SearchCaps& caps)
      : C_(C), caps_(caps), reg_(C), cb_(C) {
    pool_dim_ = caps_.pool_dim;
    if (pool_dim_ <= 0) {
      // independent of the sweep caps: raising those deepens closure
      // attempts without dragging large classes into structural moves
      pool_dim_ = 12;
      for (const auto& I : C_.injectives)
        pool_dim_ = std::max(pool_dim_, I->total_dim());
      for (const auto& T : targets)
        pool_dim_ = std::max(pool_dim_, T->total_dim());
    }
    for (const auto& T : targets) {
      if (T->is_zero()) continue;
      Goal g;
      g.rep = T;
      g.ids = entry(T).ids;  // targets register their classes first
      goals_.push_back(std::move(g));
    }
    sync();
    for (const Goal& g : goals_)
      for (int id : g.ids) info_[id].tracked = true;
  }

  SearchResult run() {
    SearchResult res;
    if (goals_.empty()) {
      res.notes.push_back("no nonzero targets");
      return res;
    }
    seed_injectives();
    fixpoint();
    while (rounds_ < caps_.max_rounds && !goals_done()) {
      ++rounds_;
      progress_ = false;
      structural_moves();
      fixpoint();
      sweep_moves();
      fixpoint();
      if (goals_done()) break;
      scan_kernels();
      fixpoint();
      scan_cokernels();
      fixpoint();
      scan_interlocks();
      fixpoint();
      if (!progress_) break;
    }
    res.rounds = rounds_;
    res.classes = static_cast<int>(info_.size());
    for (const ClassInfo& ci : info_) res.members += ci.member ? 1 : 0;
    res.sequences = static_cast<int>(pool_.size());
    for (const Goal& g : goals_)
      (all_member(g.ids) ? res.derived : res.missing).push_back(dims_str(*g.rep));
    res.notes = notes_;
    if (skipped_ > 0) {
      std::ostringstream os;
      os << skipped_ << " cosyzygy class(es) of dimension up to " << skipped_max_
         << " exceeded the tracking bound " << pool_dim_
         << " and were not expanded";
      res.notes.push_back(os.str());
    }
    if (res.missing.empty()) {
      res.found = true;
      std::vector<int> goal_handles;
      for (const Goal& g : goals_) goal_handles.push_back(emit_module(g.rep));
      res.certificate = cb_.finish("simples", goal_handles);
    }
    return res;
  }

 private:
  struct ClassInfo {
    RepPtr rep;
    int handle = -1;
    int dim = 0;
    bool member = false, injective = false, tracked = false;
    bool hull_done = false, subq_done = false, fct_tried = false;
  };
  struct Goal {
    RepPtr rep;
    std::vector<int> ids;
  };
  struct SesRec {
    RepPtr term[3];  // sub, mid, quot
    Morphism f, g;
    std::vector<int> cls[3];
    bool consumed = false;
  };
  struct DecEntry {
    RepPtr keep;  // owns the cache key
    Decomposition d;
    std::vector<int> ids;  // registry class per piece
  };
  struct Transport {
    RepPtr flat;
    Morphism to_M;  // iso: literal sum of class representatives -> M
  };

  const Canon& C_;
  SearchCaps caps_;
  Registry reg_;
  CertBuilder cb_;
  std::vector<ClassInfo> info_;
  std::vector<Goal> goals_;
  std::vector<SesRec> pool_;
  std::set<std::string> ses_seen_;
  std::map<const Representation*, DecEntry> dec_;
  std::map<std::vector<int>, std::pair<int, RepPtr>> sums_;
  std::map<int, int> inj_vertex_;  // injective class id -> vertex
  std::set<std::pair<int, int>> scanned_ker_, scanned_coker_, scanned_lock_;
  std::set<std::pair<int, int>> scanned_pair_src_;
  std::vector<std::string> notes_;
  std::set<std::string> note_seen_;
  int pool_dim_ = 0;
  int rounds_ = 0;
  int skipped_ = 0, skipped_max_ = 0;
  bool progress_ = false;
  bool gens_done_ = false;

  void note(const std::string& s) {
    if (!note_seen_.insert(s).second) return;
    if (notes_.size() < 16)
      notes_.push_back(s);
    else if (notes_.size() == 16)
      notes_.push_back("further notes suppressed");
  }

  // -------------------------------------------------- classes and caches

  void sync() {
    while (info_.size() < reg_.reps().size()) {
      int id = static_cast<int>(info_.size());
      ClassInfo ci;
      ci.rep = reg_.reps()[id];
      ci.dim = ci.rep->total_dim();
      ci.handle = cb_.add_module(ci.rep);
      ci.tracked = ci.dim <= pool_dim_;
      // exact once seeding has run: every injective indecomposable is
      // isomorphic to some I(v), whose class the seeding pass marks
      ci.injective = false;
      if (!ci.tracked) {
        ++skipped_;
        skipped_max_ = std::max(skipped_max_, ci.dim);
      }
      info_.push_back(std::move(ci));
      progress_ = true;
    }
  }

  const DecEntry& entry(RepPtr M) {
    auto it = dec_.find(M.get());
    if (it != dec_.end()) return it->second;
    DecEntry e;
    e.keep = M;
    e.d = decompose(M);
    for (const auto& p : e.d.pieces) e.ids.push_back(reg_.id_of(p));
    auto res = dec_.emplace(M.get(), std::move(e));
    sync();
    return res.first->second;
  }

  // literal sum of indecomposable injectives: record its decomposition
  // without running the splitting machinery
  void prime_injective_sum(RepPtr J, const std::vector<int>& mults) {
    if (J->is_zero() || dec_.count(J.get())) return;
    DecEntry e;
    e.keep = J;
    std::vector<RepPtr> parts;
    for (int v = 0; v < C_.alg->vertices(); ++v)
      for (int k = 0; k < mults[v]; ++k) parts.push_back(C_.injectives[v]);
    e.d.pieces = parts;
    e.d.sum = direct_sum(C_.alg, parts);
    e.d.iso = Morphism{e.d.sum.rep, J, identity_morphism(J).blocks};
    for (const auto& p : e.d.pieces) e.ids.push_back(reg_.id_of(p));
    dec_.emplace(J.get(), std::move(e));
    sync();
  }

  bool all_member(const std::vector<int>& ids) const {
    for (int id : ids)
      if (!info_[id].member) return false;
    return true;
  }

  std::vector<int> sorted_ids() const {
    std::vector<int> ids(info_.size());
    for (size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<int>(i);
    std::sort(ids.begin(), ids.end(), [&](int a, int b) {
      return std::make_pair(info_[a].dim, a) < std::make_pair(info_[b].dim, b);
    });
    return ids;
  }

  std::vector<int> sorted_members() const {
    std::vector<int> out;
    for (int id : sorted_ids())
      if (info_[id].member && info_[id].tracked) out.push_back(id);
    return out;
  }

  // -------------------------------------------------- certificate plumbing

  Transport transport(RepPtr M) {
    const DecEntry& e = entry(M);
    if (e.ids.size() == 1) {
      RepPtr r = info_[e.ids[0]].rep;
      if (r == M) return {M, identity_morphism(M)};
      auto iso = iso_indec(r, M);
      if (!iso) throw Error("registry representative does not match its class");
      return {r, std::move(*iso)};
    }
    std::vector<RepPtr> parts;
    for (int id : e.ids) parts.push_back(info_[id].rep);
    DirectSum flat = direct_sum(C_.alg, parts);
    Morphism phi = zero_morphism(flat.rep, e.d.sum.rep);
    for (size_t i = 0; i < parts.size(); ++i) {
      auto iso = iso_indec(parts[i], e.d.pieces[i]);
      if (!iso) throw Error("registry representative does not match its class");
      phi = add(phi, compose(e.d.sum.in[i], compose(*iso, flat.out[i])));
    }
    return {flat.rep, compose(e.d.iso, phi)};
  }

  // handle of the left-nested literal sum of class representatives; nested
  // and flat sums have identical matrices, so transports retarget freely
  std::pair<int, RepPtr> sum_handle(const std::vector<int>& ids) {
    auto it = sums_.find(ids);
    if (it != sums_.end()) return it->second;
    RepPtr cur = info_[ids[0]].rep;
    int curh = info_[ids[0]].handle;
    for (size_t j = 1; j < ids.size(); ++j) {
      DirectSum two = direct_sum(C_.alg, {cur, info_[ids[j]].rep});
      int h2 = cb_.add_module(two.rep);
      cb_.add_ses(curh, h2, info_[ids[j]].handle, two.in[0], two.out[1], h2);
      cur = two.rep;
      curh = h2;
    }
    sums_[ids] = {curh, cur};
    return {curh, cur};
  }

  // derive M itself from its member classes
  int emit_module(RepPtr M) {
    int h = cb_.add_module(M);
    if (cb_.derived(h)) return h;
    const DecEntry& e = entry(M);
    for (int id : e.ids)
      if (!info_[id].member) throw Error("emission before membership");
    Transport t = transport(M);
    auto bk = inverse(t.to_M);
    if (!bk) throw Error("transport is not invertible");
    Morphism back = std::move(*bk);  // M -> sum of representatives
    if (e.ids.size() == 1) {
      cb_.add_sum(info_[e.ids[0]].handle, {h}, back, h);
    } else {
      auto [sh, srep] = sum_handle(e.ids);
      back.dst = srep;
      cb_.add_sum(sh, {h}, back, h);
    }
    return h;
  }

  // M is derived under handle h: extract every class of M as a member
  void absorb(RepPtr M, int h) {
    const DecEntry& e = entry(M);
    bool need = false;
    for (int id : e.ids) need = need || !info_[id].member;
    if (!need) return;
    Transport t = transport(M);
    std::vector<int> part_handles;
    for (int id : e.ids) part_handles.push_back(info_[id].handle);
    std::set<int> done;
    for (int id : e.ids) {
      if (info_[id].member || !done.insert(id).second) continue;
      if (info_[id].handle == h) {
        info_[id].member = true;
        progress_ = true;
        continue;
      }
      cb_.add_sum(h, part_handles, t.to_M, info_[id].handle);
      info_[id].member = true;
      progress_ = true;
    }
  }

  // -------------------------------------------------- sequence pool

  void register_ses(RepPtr sub, RepPtr mid, RepPtr quot, const Morphism& f,
                    const Morphism& g) {
    if (sub->is_zero() || quot->is_zero()) return;
    SesRec r;
    r.term[0] = sub;
    r.term[1] = mid;
    r.term[2] = quot;
    r.f = f;
    r.g = g;
    for (int i = 0; i < 3; ++i) r.cls[i] = entry(r.term[i]).ids;
    std::ostringstream key;
    for (int i = 0; i < 3; ++i) {
      std::vector<int> s = r.cls[i];
      std::sort(s.begin(), s.end());
      for (int id : s) key << id << ",";
      key << "|";
    }
    if (!ses_seen_.insert(key.str()).second) return;
    pool_.push_back(std::move(r));
    progress_ = true;
  }

  // two derived terms settle the third
  void fixpoint() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (SesRec& s : pool_) {
        if (s.consumed) continue;
        bool m[3];
        int cnt = 0;
        for (int i = 0; i < 3; ++i) cnt += (m[i] = all_member(s.cls[i])) ? 1 : 0;
        if (cnt < 2) continue;
        s.consumed = true;
        if (cnt == 3) continue;
        int miss = !m[0] ? 0 : (!m[1] ? 1 : 2);
        int h[3];
        for (int i = 0; i < 3; ++i)
          h[i] = i == miss ? cb_.add_module(s.term[i]) : emit_module(s.term[i]);
        cb_.add_ses(h[0], h[1], h[2], s.f, s.g, h[miss]);
        absorb(s.term[miss], h[miss]);
        changed = true;
        progress_ = true;
      }
    }
  }

  // -------------------------------------------------- moves

  void seed_injectives() {
    for (int v = 0; v < C_.alg->vertices(); ++v) {
      int id = reg_.id_of(C_.injectives[v]);
      sync();
      inj_vertex_[id] = v;
      ClassInfo& ci = info_[id];
      ci.injective = true;
      if (ci.member) continue;
      std::vector<int> mults(C_.alg->vertices(), 0);
      mults[v] = 1;
      Morphism iso;
      if (ci.rep == C_.injectives[v]) {
        iso = identity_morphism(ci.rep);
      } else {
        auto t = iso_indec(C_.injectives[v], ci.rep);
        if (!t) throw Error("registry representative does not match its class");
        iso = std::move(*t);
      }
      cb_.add_inj(ci.handle, mults, iso);
      ci.member = true;
      progress_ = true;
    }
  }

  void structural_moves() {
    for (int id : sorted_ids()) {
      if (!info_[id].tracked) continue;
      if (!info_[id].hull_done) {
        info_[id].hull_done = true;
        if (!info_[id].injective) {
          try {
            HullStep hs = injective_hull(C_, info_[id].rep);
            prime_injective_sum(hs.hull, hs.mults);
            register_ses(info_[id].rep, hs.hull, hs.cosyz.rep, hs.embed,
                         hs.cosyz.proj);
          } catch (const SplitExhaustion& e) {
            note(std::string("hull step degraded: ") + e.what());
          }
        }
      }
      if (!info_[id].subq_done) {
        info_[id].subq_done = true;
        try {
          subquotients(info_[id].rep);
        } catch (const SplitExhaustion& e) {
          note(std::string("subquotient step degraded: ") + e.what());
        }
      }
    }
    if (!gens_done_) {
      gens_done_ = true;
      for (int v = 0; v < C_.alg->vertices(); ++v) {
        try {
          generated_submodules(v);
        } catch (const SplitExhaustion& e) {
          note(std::string("submodule step degraded: ") + e.what());
        }
      }
    }
  }

  void subquotients(RepPtr M) {
    Sub r = radical(M);
    if (!r.rep->is_zero() && r.rep->total_dim() < M->total_dim()) {
      Quot t = top(M);
      register_ses(r.rep, M, t.rep, r.incl, t.proj);
    }
    Sub s = socle(M);
    if (!s.rep->is_zero() && s.rep->total_dim() < M->total_dim()) {
      Quot q = cokernel(s.incl);
      register_ses(s.rep, M, q.rep, s.incl, q.proj);
    }
  }

  // submodules of each injective generated by one or two basis vectors
  void generated_submodules(int v) {
    RepPtr J = C_.injectives[v];
    std::vector<std::pair<int, Mat>> units;
    for (int w = 0; w < C_.alg->vertices(); ++w)
      for (int b = 0; b < J->dims[w]; ++b) {
        Mat e(J->dims[w], 1);
        e.at(b, 0) = Scalar(1);
        units.emplace_back(w, std::move(e));
      }
    auto consider = [&](const std::vector<std::pair<int, Mat>>& seeds, int cap) {
      Sub U = generated_submodule(J, seeds);
      int d = U.rep->total_dim();
      if (d == 0 || d >= J->total_dim() || d > cap) return;
      Quot q = cokernel(U.incl);
      register_ses(U.rep, J, q.rep, U.incl, q.proj);
    };
    for (const auto& u : units) consider({u}, caps_.gen_dim);
    for (size_t i = 0; i < units.size(); ++i)
      for (size_t j = i + 1; j < units.size(); ++j)
        consider({units[i], units[j]}, caps_.pair_dim);
  }

  void sweep_moves() {
    for (int id : sorted_ids()) {
      ClassInfo& ci = info_[id];
      if (!ci.tracked || ci.injective || ci.fct_tried) continue;
      ci.fct_tried = true;
      try {
        sweep(id);
      } catch (const SplitExhaustion& e) {
        note(std::string("closure attempt degraded: ") + e.what());
      }
    }
  }

  void sweep(int id) {
    CosyzygyGraph g = cosyzygy_graph(C_, reg_, {info_[id].rep}, caps_.sweep);
    sync();
    if (!g.complete) {
      note("closure from " + dims_str(*info_[id].rep) + " stopped: " +
           g.stop_reason);
      return;
    }
    if (g.nodes.empty()) return;
    bool gain = false;
    for (const auto& n : g.nodes) gain = gain || !info_[n.reg_id].member;
    if (!gain) return;
    std::set<int> fam_ids;
    for (const auto& n : g.nodes) fam_ids.insert(n.reg_id);
    std::vector<CertFctNode> fam;
    for (const auto& n : g.nodes) {
      CertFctNode fn;
      fn.mod = info_[n.reg_id].handle;
      HullStep hs = injective_hull(C_, n.rep);
      fn.mults = hs.mults;
      fn.embed = hs.embed;
      const DecEntry& e = entry(hs.cosyz.rep);
      std::vector<RepPtr> parts;
      for (size_t i = 0; i < e.ids.size(); ++i) {
        int pid = e.ids[i];
        CertPart cp;
        if (info_[pid].injective) {
          cp.inj = inj_vertex_.at(pid);
          parts.push_back(C_.injectives[cp.inj]);
        } else {
          if (!fam_ids.count(pid))
            throw Error("closure family is not closed under cosyzygies");
          cp.mod = info_[pid].handle;
          parts.push_back(info_[pid].rep);
        }
        fn.parts.push_back(cp);
      }
      // iso: literal sum of the named parts -> the cokernel of the embedding
      DirectSum flat = direct_sum(C_.alg, parts);
      Morphism phi = zero_morphism(flat.rep, e.d.sum.rep);
      for (size_t i = 0; i < parts.size(); ++i) {
        auto iso = iso_indec(parts[i], e.d.pieces[i]);
        if (!iso) throw Error("registry representative does not match its class");
        phi = add(phi, compose(e.d.sum.in[i], compose(*iso, flat.out[i])));
      }
      fn.iso = compose(e.d.iso, phi);
      fam.push_back(std::move(fn));
    }
    for (const auto& n : g.nodes) {
      if (info_[n.reg_id].member) continue;
      cb_.add_fct(fam, info_[n.reg_id].handle);
      info_[n.reg_id].member = true;
      progress_ = true;
    }
  }

  // hom-space scan helpers; candidates are the basis plus seeded combinations
  std::vector<Morphism> candidates(const std::vector<Morphism>& basis,
                                   unsigned long long salt) {
    std::vector<Morphism> out = basis;
    if (basis.size() > 1) {
      std::mt19937_64 rng(mix(caps_.seed, salt));
      std::vector<Scalar> c(basis.size());
      for (int t = 0; t < caps_.hom_trials; ++t) {
        for (auto& x : c) x = Scalar(small_coeff(rng));
        Morphism f = lincomb(c, basis);
        if (!morphism_is_zero(f)) out.push_back(std::move(f));
      }
    }
    return out;
  }

  void scan_kernels() {
    auto members = sorted_members();
    for (int zid : members) {
      if (info_[zid].injective) continue;
      for (int xid : members) {
        if (info_[xid].dim <= info_[zid].dim) continue;
        auto key = std::make_pair(xid, zid);
        if (!scanned_ker_.insert(key).second) continue;
        try {
          kernel_of_surjection(info_[xid].rep, info_[zid].rep,
                               mix(0xA3, mix(xid, zid)));
        } catch (const SplitExhaustion& e) {
          note(std::string("kernel scan degraded: ") + e.what());
        }
      }
      // sums of two indecomposable injectives as additional sources
      for (int v = 0; v < C_.alg->vertices(); ++v)
        for (int w = v; w < C_.alg->vertices(); ++w) {
          auto key = std::make_pair(v * C_.alg->vertices() + w, zid);
          if (!scanned_pair_src_.insert(key).second) continue;
          std::vector<int> mults(C_.alg->vertices(), 0);
          mults[v] += 1;
          mults[w] += 1;
          DirectSum two =
              direct_sum(C_.alg, {C_.injectives[v], C_.injectives[w]});
          if (two.rep->total_dim() <= info_[zid].dim) continue;
          prime_injective_sum(two.rep, mults);
          try {
            kernel_of_surjection(two.rep, info_[zid].rep,
                                 mix(0xB7, mix(v * 97 + w, zid)));
          } catch (const SplitExhaustion& e) {
            note(std::string("kernel scan degraded: ") + e.what());
          }
        }
    }
  }

  void kernel_of_surjection(RepPtr X, RepPtr Z, unsigned long long salt) {
    auto basis = hom_basis(X, Z);
    if (basis.empty()) return;
    for (const Morphism& f : candidates(basis, salt)) {
      if (!is_surjective(f)) continue;
      Sub K = kernel(f);
      register_ses(K.rep, X, Z, K.incl, f);
      return;
    }
  }

  void scan_cokernels() {
    auto members = sorted_members();
    for (int zid : members) {
      if (info_[zid].injective) continue;  // monos out of injectives split
      for (int xid : members) {
        if (info_[xid].injective) continue;  // hulls cover injective targets
        if (info_[xid].dim <= info_[zid].dim) continue;
        auto key = std::make_pair(zid, xid);
        if (!scanned_coker_.insert(key).second) continue;
        try {
          cokernel_of_injection(info_[zid].rep, info_[xid].rep,
                                mix(0xC5, mix(zid, xid)));
        } catch (const SplitExhaustion& e) {
          note(std::string("cokernel scan degraded: ") + e.what());
        }
      }
    }
  }

  void cokernel_of_injection(RepPtr Z, RepPtr X, unsigned long long salt) {
    auto basis = hom_basis(Z, X);
    if (basis.empty()) return;
    for (const Morphism& g : candidates(basis, salt)) {
      if (!is_injective(g)) continue;
      Quot Q = cokernel(g);
      register_ses(Z, X, Q.rep, g, Q.proj);
      return;
    }
  }

  // f: X -> Y and g: Y -> X with im f = ker g and im g = ker f splice into
  // an exact two-periodic tail, so both cokernels are members
  void scan_interlocks() {
    auto members = sorted_members();
    for (size_t i = 0; i < members.size(); ++i) {
      for (size_t j = i; j < members.size(); ++j) {
        int xid = members[i], yid = members[j];
        if (info_[xid].rep->dims != info_[yid].rep->dims) continue;
        auto key = std::make_pair(xid, yid);
        if (!scanned_lock_.insert(key).second) continue;
        try {
          interlock(xid, yid, mix(0xD1, mix(xid, yid)));
        } catch (const SplitExhaustion& e) {
          note(std::string("interlock scan degraded: ") + e.what());
        }
      }
    }
  }

  void interlock(int xid, int yid, unsigned long long salt) {
    RepPtr X = info_[xid].rep, Y = info_[yid].rep;
    auto bxy = hom_basis(X, Y);
    auto byx = hom_basis(Y, X);
    if (bxy.empty() || byx.empty()) return;
    auto fs = candidates(bxy, mix(salt, 1));
    auto gs = candidates(byx, mix(salt, 2));
    for (const Morphism& f : fs) {
      if (morphism_is_zero(f)) continue;
      std::vector<int> rf = ranks(f);
      for (const Morphism& g : gs) {
        if (morphism_is_zero(g)) continue;
        std::vector<int> rg = ranks(g);
        bool exact_dims = true;
        for (size_t v = 0; v < rf.size(); ++v)
          exact_dims = exact_dims && rf[v] + rg[v] == Y->dims[v];
        if (!exact_dims) continue;
        if (!morphism_is_zero(compose(g, f))) continue;
        if (!morphism_is_zero(compose(f, g))) continue;
        emit_interlock(xid, yid, f, g);
        return;
      }
    }
  }

  void emit_interlock(int xid, int yid, const Morphism& f, const Morphism& g) {
    int hx = info_[xid].handle, hy = info_[yid].handle;
    Quot qf = cokernel(f);  // concluded by the cycle (Y <- X <- Y <- ...)
    if (!qf.rep->is_zero() && !all_member(entry(qf.rep).ids)) {
      int hq = cb_.add_module(qf.rep);
      cb_.add_per({hq, hy}, {qf.proj}, {hy, hx}, {f, g});
      absorb(qf.rep, hq);
    }
    Quot qg = cokernel(g);
    if (!qg.rep->is_zero() && !all_member(entry(qg.rep).ids)) {
      int hq = cb_.add_module(qg.rep);
      cb_.add_per({hq, hx}, {qg.proj}, {hx, hy}, {g, f});
      absorb(qg.rep, hq);
    }
  }

  bool goals_done() const {
    for (const Goal& g : goals_)
      if (!all_member(g.ids)) return false;
    return true;
  }
};

std::string join_report(const std::vector<std::string>& notes) {
  std::ostringstream os;
  for (const std::string& n : notes) os << "  - " << n << "\n";
  return os.str();
}

}  // namespace

std::string SearchResult::report() const {
  std::ostringstream os;
  if (found) {
    os << "all goals derived\n";
  } else {
    os << "missing goals:";
    for (const std::string& m : missing) os << " " << m;
    os << "\nderived goals:";
    if (derived.empty()) os << " (none)";
    for (const std::string& d : derived) os << " " << d;
    os << "\n";
  }
  os << "explored: " << classes << " classes, " << members << " members, "
     << sequences << " exact sequences, " << rounds << " rounds\n";
  if (!notes.empty()) {
    os << "cap notes:\n" << join_report(notes);
  }
  return os.str();
}

SearchResult search_membership(const Canon& C, const std::vector<RepPtr>& targets,
                               const SearchCaps& caps) {
  Searcher s(C, targets, caps);
  return s.run();
}

namespace {

Json regular_certificate(const Canon& C, const std::vector<HullStep>& steps) {
  CertBuilder cb(C);
  const HullStep& last = steps.back();
  // the final cosyzygy vanishes, so the last embedding is an isomorphism
  int h_last = cb.add_module(last.module);
  auto back = inverse(last.embed);
  if (!back) throw Error("terminal embedding is not invertible");
  cb.add_inj(h_last, last.mults, *back);
  for (int k = static_cast<int>(steps.size()) - 2; k >= 0; --k) {
    const HullStep& s = steps[k];
    int h_mid = cb.add_module(s.hull);
    cb.add_inj(h_mid, s.mults, identity_morphism(s.hull));
    int h_sub = cb.add_module(s.module);
    int h_quot = cb.add_module(s.cosyz.rep);
    cb.add_ses(h_sub, h_mid, h_quot, s.embed, s.cosyz.proj, h_sub);
  }
  return cb.finish("regular", {cb.add_module(steps.front().module)});
}

}  // namespace

Verdict decide_generates(AlgebraPtr alg, const SearchCaps& caps) {
  Canon C = Canon::make(alg);
  std::vector<std::string> notes;
  int guard = caps.resolution_guard > 0 ? caps.resolution_guard
                                        : std::max(24, 2 * alg->dim());

  // route one: a finite injective resolution of the regular module, guarded
  // in length and in cosyzygy size
  std::vector<HullStep> steps;
  RepPtr cur = regular_rep(alg);
  bool finite = false;
  while (true) {
    if (cur->is_zero()) {
      finite = true;
      break;
    }
    if (static_cast<int>(steps.size()) > caps.resolution_cap) {
      notes.push_back("regular resolution abandoned: length cap " +
                      std::to_string(caps.resolution_cap) + " reached");
      break;
    }
    HullStep h = injective_hull(C, cur);
    RepPtr next = h.cosyz.rep;
    if (!next->is_zero() && next->total_dim() > guard) {
      notes.push_back("regular resolution abandoned: cosyzygy of dimension " +
                      std::to_string(next->total_dim()) +
                      " exceeds the size guard " + std::to_string(guard));
      break;
    }
    steps.push_back(std::move(h));
    cur = next;
  }
  if (finite) {
    Verdict v;
    v.generates = true;
    v.route = "finite-injective-dimension";
    v.injdim = std::max(static_cast<int>(steps.size()) - 1, 0);
    v.certificate = regular_certificate(C, steps);
    CheckResult cr = check_certificate(alg, v.certificate);
    if (!cr.accepted)
      throw Error("internal: emitted certificate rejected: " + cr.reason);
    return v;
  }

  // route two: certify that every simple is generated
  SearchResult sr = search_membership(C, C.simples, caps);
  if (sr.found) {
    Verdict v;
    v.generates = true;
    v.route = "simples";
    v.certificate = sr.certificate;
    CheckResult cr = check_certificate(alg, v.certificate);
    if (!cr.accepted)
      throw Error("internal: emitted certificate rejected: " + cr.reason);
    return v;
  }
  Verdict v;
  v.report = join_report(notes) + sr.report();
  return v;
}

std::string verdict_text(const Verdict& v) {
  std::ostringstream os;
  if (v.generates) {
    os << "verdict: generates\nroute: " << v.route << "\n";
    if (v.injdim >= 0) os << "injective-dimension: " << v.injdim << "\n";
  } else {
    os << "verdict: unknown\n" << v.report;
  }
  return os.str();
}

}  // namespace quigen
