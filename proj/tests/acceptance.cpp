// Acceptance gate: six independently runnable criteria, one pass/fail line
// each.  Every check here goes through public interfaces only; where a
// criterion demands an independent oracle (covers, mutations), the oracle is
// rebuilt from first principles instead of calling the code under test.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "quigen/certificate.hpp"
#include "quigen/decompose.hpp"
#include "quigen/errors.hpp"
#include "quigen/io.hpp"
#include "quigen/search.hpp"

using namespace quigen;

namespace {

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure(what);
}

std::string source_path(const char* rel) {
  return std::string(QUIGEN_SOURCE_DIR "/") + rel;
}

AlgebraPtr load(const char* name) {
  return load_algebra_file(source_path("corpus/") + name);
}

// ---------------------------------------------------------------- oracles

// projective cover built directly from path actions, independent of both
// the hull construction and the duality bridge (same construction as the
// unit-test oracle; duplicated on purpose so the suites stay independent)
struct DirectCover {
  RepPtr cover;
  Morphism project;
};

DirectCover direct_cover(const Canon& C, RepPtr M) {
  const auto& alg = *C.alg;
  const Field& F = alg.field();
  Quot t = top(M);
  std::vector<RepPtr> parts;
  std::vector<Morphism> legs;
  for (int v = 0; v < alg.vertices(); ++v) {
    auto lift = solve(F, t.proj.blocks[v], Mat::identity(t.rep->dims[v]));
    require(lift.has_value(), "top projection must lift");
    for (int c = 0; c < t.rep->dims[v]; ++c) {
      Mat m(M->dims[v], 1);
      for (int r = 0; r < M->dims[v]; ++r) m.at(r, 0) = lift->at(r, c);
      Morphism leg{C.projectives[v], M, {}};
      std::vector<int> fibre_at(alg.vertices(), 0);
      std::vector<Mat> blocks;
      for (int w = 0; w < alg.vertices(); ++w)
        blocks.emplace_back(M->dims[w], C.projectives[v]->dims[w]);
      for (int b = 0; b < alg.dim(); ++b) {
        if (alg.basis_src(b) != v) continue;
        int w = alg.basis_tgt(b);
        Mat img = mul(F, evaluate_word(*M, v, alg.basis_word(b)), m);
        for (int r = 0; r < M->dims[w]; ++r)
          blocks[w].at(r, fibre_at[w]) = img.at(r, 0);
        ++fibre_at[w];
      }
      leg.blocks = std::move(blocks);
      require(is_morphism(leg), "cover leg must be a morphism");
      parts.push_back(C.projectives[v]);
      legs.push_back(std::move(leg));
    }
  }
  DirectSum ds = direct_sum(C.alg, parts);
  DirectCover out;
  out.cover = ds.rep;
  Morphism proj = zero_morphism(ds.rep, M);
  for (size_t k = 0; k < legs.size(); ++k)
    proj = add(proj, compose(legs[k], ds.out[k]));
  out.project = std::move(proj);
  require(is_surjective(out.project), "direct cover must be surjective");
  return out;
}

Mat random_invertible(const Field& F, std::mt19937_64& rng, int n) {
  while (true) {
    Mat T(n, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c)
        T.at(r, c) = F.reduce(Scalar(static_cast<int>(rng() % 7) - 3));
    if (inverse(F, T)) return T;
  }
}

RepPtr conjugate(RepPtr M, std::mt19937_64& rng) {
  const auto& alg = *M->alg;
  const Field& F = alg.field();
  std::vector<Mat> T, Ti;
  for (int v = 0; v < alg.vertices(); ++v) {
    T.push_back(random_invertible(F, rng, M->dims[v]));
    Ti.push_back(*inverse(F, T.back()));
  }
  std::vector<Mat> maps;
  for (int a = 0; a < alg.n_arrows(); ++a) {
    int i = alg.arrow(a).src, j = alg.arrow(a).tgt;
    maps.push_back(mul(F, T[j], mul(F, M->maps[a], Ti[i])));
  }
  auto out = make_rep(M->alg, M->dims, std::move(maps));
  require(!check_module(*out).has_value(), "conjugate must stay a module");
  return out;
}

// random but genuine module: kernel, image or cokernel of a random morphism
// between random sums of canonical modules
RepPtr random_module(const Canon& c, std::mt19937_64& rng, int max_dim) {
  AlgebraPtr A = c.alg;
  auto pick = [&](int n) {
    std::vector<RepPtr> parts;
    for (int k = 0; k < n; ++k) {
      int w = static_cast<int>(rng() % A->vertices());
      switch (rng() % 3) {
        case 0: parts.push_back(c.simples[w]); break;
        case 1: parts.push_back(c.projectives[w]); break;
        default: parts.push_back(c.injectives[w]); break;
      }
    }
    return direct_sum(A, parts).rep;
  };
  for (int attempt = 0; attempt < 8; ++attempt) {
    RepPtr X = pick(1 + static_cast<int>(rng() % 2));
    RepPtr Y = pick(1 + static_cast<int>(rng() % 2));
    auto fs = hom_basis(X, Y);
    if (fs.empty()) continue;
    std::vector<Scalar> cs;
    for (size_t k = 0; k < fs.size(); ++k)
      cs.emplace_back(static_cast<int>(rng() % 7) - 3);
    Morphism f = lincomb(cs, fs);
    RepPtr M;
    switch (rng() % 3) {
      case 0: M = kernel(f).rep; break;
      case 1: M = image(f).rep; break;
      default: M = cokernel(f).rep; break;
    }
    if (!M->is_zero() && M->total_dim() <= max_dim) return M;
  }
  return c.simples[rng() % A->vertices()];
}

// rank-nullity per vertex, criterion 5(iv); returns blocks checked
int rank_nullity(const Morphism& f) {
  const Field& F = f.src->alg->field();
  int checked = 0;
  for (size_t v = 0; v < f.blocks.size(); ++v) {
    int rank = column_space_basis(F, f.blocks[v]).ncols;
    int null = kernel_basis(F, f.blocks[v]).ncols;
    require(rank + null == f.src->dims[v], "rank-nullity per vertex");
    ++checked;
  }
  return checked;
}

void check_hull_step(const HullStep& s, int* morphism_blocks) {
  const Field& F = s.module->alg->field();
  require(is_morphism(s.embed), "embedding is a morphism");
  require(is_morphism(s.cosyz.proj), "projection is a morphism");
  require(is_injective(s.embed), "embedding is injective");
  require(is_surjective(s.cosyz.proj), "projection is surjective");
  require(morphism_is_zero(compose(s.cosyz.proj, s.embed)), "composite is zero");
  for (size_t v = 0; v < s.module->dims.size(); ++v) {
    Mat im = column_space_basis(F, s.embed.blocks[v]);
    Mat ker = kernel_basis(F, s.cosyz.proj.blocks[v]);
    require(same_column_span(F, im, ker), "exactness in the middle");
  }
  Sub sj = socle(s.hull);
  for (size_t v = 0; v < s.module->dims.size(); ++v)
    require(solve(F, s.embed.blocks[v], sj.incl.blocks[v]).has_value(),
            "minimality: the hull socle lifts into the module");
  if (morphism_blocks) {
    *morphism_blocks += rank_nullity(s.embed);
    *morphism_blocks += rank_nullity(s.cosyz.proj);
  }
}

// ------------------------------------------------------------- criterion 1

std::string criterion1() {
  auto A = load("sec6.alg");
  require(A->dim() == 36, "dim A must be 36");
  Canon c = Canon::make(A);
  std::vector<int> ones(6, 1);
  for (int v = 0; v < 6; ++v) {
    require(c.projectives[v]->dims == ones, "projective dimension vector");
    require(c.injectives[v]->dims == ones, "injective dimension vector");
  }
  require(find_iso(c.projectives[0], c.injectives[5]).has_value(), "P1 = I6");
  require(find_iso(c.projectives[1], c.injectives[3]).has_value(), "P2 = I4");
  require(find_iso(c.projectives[3], c.injectives[2]).has_value(), "P4 = I3");
  for (int v : {2, 4, 5})
    require(!is_injective_module(c, c.projectives[v]),
            "P3, P5, P6 are not injective");
  return "dim 36, dimension vectors and iso pairs exact";
}

// ------------------------------------------------------------- criterion 2

std::string criterion2() {
  auto A = load("sec6.alg");
  Canon c = Canon::make(A);
  RepPtr Ma = load_module_file(source_path("corpus/sec6-Ma.mod"), A);
  RepPtr Mb = load_module_file(source_path("corpus/sec6-Mb.mod"), A);
  HullStep ha = injective_hull(c, Ma);
  require(ha.mults == std::vector<int>({0, 0, 0, 0, 0, 1}), "hull of M_a is I6");
  require(find_iso(ha.cosyz.rep, Mb).has_value(), "cosyzygy of M_a is M_b");
  check_hull_step(ha, nullptr);
  HullStep hb = injective_hull(c, Mb);
  require(hb.mults == std::vector<int>({0, 0, 0, 0, 1, 0}), "hull of M_b is I5");
  require(find_iso(hb.cosyz.rep, Ma).has_value(), "cosyzygy of M_b is M_a");
  check_hull_step(hb, nullptr);

  Registry reg(c);
  CosyzygyGraph g = cosyzygy_graph(c, reg, {Ma}, GraphCaps{});
  require(g.complete, "orbit closure completes");
  require(g.nodes.size() == 2, "orbit has exactly two classes");
  require(g.seeds == std::vector<int>({0}), "one seed node");
  require(g.nodes[0].rep->dims == Ma->dims, "first node is M_a");
  require(g.nodes[1].rep->dims == Mb->dims, "second node is M_b");
  using Edges = std::vector<std::pair<int, int>>;
  require(g.nodes[0].out == Edges({{1, 1}}), "M_a maps to M_b once");
  require(g.nodes[1].out == Edges({{0, 1}}), "M_b maps to M_a once");
  return "two-cycle {M_a, M_b} reproduced exactly";
}

// ------------------------------------------------------------- criterion 3

// flip the k-th string leaf inside a json subtree (matrix entries, module
// ids, arrow names alike); every flip produces a different value
bool flip_kth_string(Json& j, int& k) {
  if (j.is_array() || j.is_object()) {
    for (auto& el : j)
      if (flip_kth_string(el, k)) return true;
    return false;
  }
  if (j.is_string() && k-- == 0) {
    std::string s = j.get<std::string>();
    j = (s == "1") ? "2" : "1";
    return true;
  }
  return false;
}

int count_strings(const Json& j) {
  if (j.is_string()) return 1;
  int n = 0;
  if (j.is_array() || j.is_object())
    for (const auto& el : j) n += count_strings(el);
  return n;
}

// the first witness matrix of a step (one block per vertex)
Json& witness_blocks(Json& step) {
  std::string rule = step.at("rule");
  if (rule == "ses") return step.at("f");
  if (rule == "per") return step.at("beta").at(0);
  if (rule == "fct") return step.at("nodes").at(0).at("embed");
  return step.at("iso");  // inj, sum
}

// Every mutation here invalidates the derivation by construction: unknown
// ids, witnesses that cannot satisfy their rank conditions (zeroed), matrix
// shapes that no longer match the module dimensions, dropped derivations of
// goals, header mismatches.  Witness ENTRIES are deliberately not flipped
// blindly: witnesses are not unique (a nonzero rescaling of a block can be
// another perfectly valid embedding or isomorphism), so a sound checker must
// accept some entry flips -- those are not corruptions.
std::vector<std::pair<std::string, Json>> mutations(const Json& cert) {
  std::vector<std::pair<std::string, Json>> out;
  auto push = [&](const std::string& tag, Json m) {
    out.emplace_back(tag, std::move(m));
  };

  const auto& steps = cert.at("steps");
  for (size_t i = 0; i < steps.size(); ++i) {
    const Json& s = steps[i];
    std::string rule = s.at("rule");
    std::string conclusion = s.at("conclusion");

    {  // conclusion points at a module that does not exist
      Json m = cert;
      m.at("steps").at(i).at("conclusion") = "__missing__";
      push("step " + std::to_string(i) + " conclusion unknown", m);
    }
    {  // first premise-like id points at a module that does not exist
      Json m = cert;
      Json& t = m.at("steps").at(i);
      if (rule == "ses")
        t.at(t.at("sub") == conclusion ? "quot" : "sub") = "__missing__";
      else if (rule == "sum")
        t.at("sum") = "__missing__";
      else if (rule == "per")
        t.at("chain").at(1) = "__missing__";
      else if (rule == "fct")
        t.at("family").at(0) = "__missing__";
      else
        t.at("mults").push_back(1);  // inj: multiplicity vector length
      push("step " + std::to_string(i) + " premise unknown", m);
    }
    {  // zero the first witness: kills injectivity/surjectivity/invertibility
      Json m = cert;
      Json& w = witness_blocks(m.at("steps").at(i));
      for (Json& block : w)
        for (Json& row : block)
          for (Json& e : row) e = "0";
      if (m != cert) push("step " + std::to_string(i) + " witness zeroed", m);
    }
    {  // drop a row from the first nonempty witness block: shape mismatch
      Json m = cert;
      Json& w = witness_blocks(m.at("steps").at(i));
      for (Json& block : w) {
        if (block.size() > 0) {
          block.erase(block.size() - 1);
          push("step " + std::to_string(i) + " witness shape", m);
          break;
        }
      }
    }
    if (rule == "per") {
      Json m = cert;
      Json& cyc = m.at("steps").at(i).at("cycle");
      if (cyc.size() > 1) {  // rotate the cycle against its gamma maps
        Json first = cyc.at(0);
        cyc.erase(0);
        cyc.push_back(first);
        push("step " + std::to_string(i) + " cycle seam", m);
      }
      Json m2 = cert;
      Json& ch = m2.at("steps").at(i).at("chain");
      std::swap(ch.at(0), ch.at(ch.size() - 1));
      if (m2 != cert) push("step " + std::to_string(i) + " chain flip", m2);
    } else if (rule == "ses") {
      // only a corruption when the end terms have different dimension
      // vectors; swapping isomorphic literals can leave the sequence exact
      std::string sub = s.at("sub"), quot = s.at("quot");
      if (cert.at("modules").at(sub).at("dims") !=
          cert.at("modules").at(quot).at("dims")) {
        Json m = cert;
        std::swap(m.at("steps").at(i).at("sub"), m.at("steps").at(i).at("quot"));
        push("step " + std::to_string(i) + " sub/quot swap", m);
      }
    } else if (rule == "sum") {
      Json m = cert;
      m.at("steps").at(i).at("conclusion") = m.at("steps").at(i).at("sum");
      if (m != cert) push("step " + std::to_string(i) + " conclusion", m);
    } else if (rule == "fct") {
      Json m = cert;
      Json& fam = m.at("steps").at(i).at("family");
      if (fam.size() > 1) {
        fam.erase(0);
        push("step " + std::to_string(i) + " family drop", m);
      }
      Json m2 = cert;
      Json& mults = m2.at("steps").at(i).at("nodes").at(0).at("mults");
      mults.at(0) = mults.at(0).get<int>() + 1;
      push("step " + std::to_string(i) + " hull mults", m2);
    } else if (rule == "inj") {
      Json m = cert;
      Json& mults = m.at("steps").at(i).at("mults");
      mults.at(0) = mults.at(0).get<int>() + 1;
      push("step " + std::to_string(i) + " inj mults", m);
    }
  }

  int mi = 0;
  for (const auto& [id, mod] : cert.at("modules").items()) {
    (void)mod;
    Json m = cert;
    Json& dims = m.at("modules").at(id).at("dims");
    dims.at(0) = dims.at(0).get<int>() + 1;
    push("module " + id + " dims", m);
    if (mi < 12) {
      Json m2 = cert;
      int leaves = count_strings(cert.at("modules").at(id).at("maps"));
      if (leaves > 0) {
        int kk = 0;
        flip_kth_string(m2.at("modules").at(id).at("maps"), kk);
        push("module " + id + " action entry", m2);
      }
    }
    ++mi;
  }

  {
    Json m = cert;
    m.at("goals").erase(0);
    push("goal dropped", m);
  }
  if (cert.at("goals").size() > 1) {
    Json m = cert;
    m.at("goals").at(1) = m.at("goals").at(0);
    push("goal duplicated", m);
  }
  {
    Json m = cert;
    m.at("kind") = (cert.at("kind") == "simples") ? "regular" : "simples";
    push("kind flipped", m);
  }
  {
    Json m = cert;
    std::string h = m.at("algebra").at("hash");
    h[0] = (h[0] == '0') ? '1' : '0';
    m.at("algebra").at("hash") = h;
    push("algebra hash", m);
  }
  {
    Json m = cert;
    m.at("version") = cert.at("version").get<int>() + 1;
    push("version bump", m);
  }
  {
    Json m = cert;
    std::swap(m.at("steps").at(0), m.at("steps").at(m.at("steps").size() - 1));
    if (m != cert) push("steps reordered", m);
  }
  {  // remove every step that derives the last goal: it stays underived
    Json m = cert;
    std::string goal = cert.at("goals").at(cert.at("goals").size() - 1);
    Json& st = m.at("steps");
    for (int i = static_cast<int>(st.size()) - 1; i >= 0; --i)
      if (st.at(i).at("conclusion") == goal) st.erase(i);
    if (m != cert) push("goal derivation dropped", m);
  }
  return out;
}

std::string criterion3() {
  auto A = load("sec6.alg");
  Verdict v = decide_generates(A);
  require(v.generates, "verdict must be generates");
  require(v.route == "simples", "six-vertex route goes through the simples");
  require(v.certificate.at("goals").size() == 6, "all six simples derived");
  require(check_certificate(A, v.certificate).accepted, "checker countersigns");

  auto muts = mutations(v.certificate);
  std::set<std::string> seen;
  seen.insert(v.certificate.dump());
  int tried = 0;
  for (const auto& [tag, m] : muts) {
    if (!seen.insert(m.dump()).second) continue;  // must differ from original
    ++tried;
    CheckResult r = check_certificate(A, m);
    require(!r.accepted, "corruption accepted: " + tag);
  }
  require(tried >= 100, "need at least 100 distinct corruptions, got " +
                            std::to_string(tried));
  std::ostringstream os;
  os << "generates via simples; " << tried << "/" << tried
     << " corruptions rejected";
  return os.str();
}

// ------------------------------------------------------------- criterion 4

std::string criterion4() {
  auto run = [](const char* file) { return decide_generates(load(file)); };

  Verdict commutative = run("kx3.alg");
  require(commutative.generates, "commutative fixture generates");
  require(commutative.route == "finite-injective-dimension",
          "commutative fixture resolves finitely");

  Verdict selfinj = run("kx2.alg");
  require(selfinj.generates, "self-injective fixture generates");
  require(selfinj.route == "finite-injective-dimension" && selfinj.injdim == 0,
          "self-injective fixture has dimension zero");

  Verdict gldim = run("a2.alg");
  require(gldim.generates, "finite-global-dimension fixture generates");

  Verdict nakayama = run("nakayama.alg");
  require(nakayama.generates, "finite-representation-type fixture generates");

  for (const char* file : {"rad2.alg", "monomial.alg"}) {
    Verdict v = run(file);
    require(v.generates, std::string(file) + " generates");
    require(v.route == "simples", std::string(file) + " goes via the simples");
    bool used_fct = false;
    for (const auto& s : v.certificate.at("steps"))
      used_fct = used_fct || s.at("rule") == "fct";
    require(used_fct, std::string(file) + " must use a closure family step");
  }
  return "all six classes generate, routes as required";
}

// ------------------------------------------------------------- criterion 5

std::string criterion5() {
  std::mt19937_64 rng(20260814);
  int morphism_blocks = 0;

  // (i) randomized resolution steps, exact and minimal
  const char* files[] = {"a2.alg",   "nakayama.alg",  "rad2.alg",
                         "kx3.alg",  "monomial.alg",  "sec6.alg",
                         "local-fct.alg", "local-unknown.alg"};
  int steps = 0;
  std::vector<Canon> canons;
  for (const char* f : files) canons.push_back(Canon::make(load(f)));
  while (steps < 500) {
    const Canon& c = canons[steps % canons.size()];
    // one-vertex algebras put the whole hull in a single fibre, so the
    // verification systems grow quadratically with the module; keep those
    // draws smaller than the multi-vertex ones
    int cap = c.alg->vertices() == 1 ? 6 : 12;
    RepPtr M = random_module(c, rng, cap);
    HullStep h = injective_hull(c, M);
    check_hull_step(h, &morphism_blocks);
    ++steps;
  }

  // (ii) Krull-Schmidt recovery on conjugated sums
  int splits = 0;
  while (splits < 200) {
    const Canon& c = canons[splits % canons.size()];
    // endomorphism systems grow with the square of the total dimension, and
    // on a one-vertex algebra the whole module is a single fibre; redraw
    // oversized sums instead of splitting such blocks
    int cap = c.alg->vertices() == 1 ? 10 : 16;
    std::vector<RepPtr> parts;
    for (int total = 0; parts.empty() || total > cap; ) {
      parts.clear();
      total = 0;
      int n = 2 + static_cast<int>(rng() % 3);
      for (int k = 0; k < n; ++k) {
        int w = static_cast<int>(rng() % c.alg->vertices());
        switch (rng() % 3) {
          case 0: parts.push_back(c.simples[w]); break;
          case 1: parts.push_back(c.projectives[w]); break;
          default: parts.push_back(c.injectives[w]); break;
        }
        total += parts.back()->total_dim();
      }
    }
    RepPtr M = conjugate(direct_sum(c.alg, parts).rep, rng);
    Decomposition d = decompose(M);
    require(d.pieces.size() == parts.size(), "piece count recovered");
    require(is_iso(d.iso) && is_morphism(d.iso), "decomposition iso");
    morphism_blocks += rank_nullity(d.iso);
    std::vector<int> taken(parts.size(), 0);
    for (const auto& p : parts) {
      bool matched = false;
      for (size_t k = 0; k < d.pieces.size() && !matched; ++k) {
        if (taken[k]) continue;
        if (iso_indec(p, d.pieces[k])) {
          taken[k] = 1;
          matched = true;
        }
      }
      require(matched, "multiset of summands recovered");
    }
    ++splits;
  }

  // (iii) duality bridge on every corpus module of total dimension <= 12
  int probes = 0;
  for (size_t ci = 0; ci < canons.size(); ++ci) {
    const Canon& c = canons[ci];
    const Canon& oc = c.op_canon();
    std::vector<RepPtr> mods;
    for (int v = 0; v < c.alg->vertices(); ++v) {
      mods.push_back(c.simples[v]);
      mods.push_back(c.projectives[v]);
      mods.push_back(c.injectives[v]);
    }
    mods.push_back(regular_rep(c.alg));
    if (std::string(files[ci]) == "sec6.alg") {
      mods.push_back(load_module_file(source_path("corpus/sec6-Ma.mod"), c.alg));
      mods.push_back(load_module_file(source_path("corpus/sec6-Mb.mod"), c.alg));
    }
    for (const auto& M : mods) {
      if (M->total_dim() > 12) continue;
      RepPtr lhs = dual_op(*cosyzygy(c, M), c.opp);
      RepPtr DM = dual_op(*M, c.opp);
      DirectCover dc = direct_cover(oc, DM);
      morphism_blocks += rank_nullity(dc.project);
      RepPtr rhs = kernel(dc.project).rep;
      require(find_iso(lhs, rhs).has_value(),
              "duality bridge on " + dims_str(*M));
      ++probes;
    }
  }

  std::ostringstream os;
  os << "500 resolution steps, 200 splits, " << probes << " bridge probes, "
     << morphism_blocks << " rank-nullity blocks, zero failures";
  return os.str();
}

// ------------------------------------------------------------- criterion 6

std::string criterion6() {
  auto E = load("local-unknown.alg");
  Verdict v = decide_generates(E);
  require(!v.generates, "witness algebra stays unknown at default caps");
  require(v.report.find("missing goals:") != std::string::npos,
          "frontier report lists missing goals");
  require(v.report.find("cap notes:") != std::string::npos,
          "frontier report lists cap notes");
  std::string recorded = read_file(source_path("golden/local-unknown.verdict.txt"));
  require(verdict_text(v) == recorded, "recorded unknown behaviour reproduced");

  const GraphCaps levels[] = {{8, 6}, {16, 12}, {32, 24}};
  const char* generating[] = {"kx2.alg",  "kx3.alg",      "a2.alg",
                              "nakayama.alg", "rad2.alg", "monomial.alg",
                              "local-fct.alg", "sec6.alg"};
  for (const char* file : generating) {
    auto A = load(file);
    for (const GraphCaps& lvl : levels) {
      SearchCaps caps;
      caps.sweep = lvl;
      Verdict w = decide_generates(A, caps);
      require(w.generates, std::string(file) + " must stay generates at caps (" +
                               std::to_string(lvl.max_nodes) + "," +
                               std::to_string(lvl.max_dim) + ")");
    }
  }
  return "unknown with frontier report; no generates verdict flips over 3 "
         "cap levels";
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<std::string()> run;
    long budget_ms;  // 0 = no stated budget
  };
  const Criterion table[] = {
      {"C1 six-vertex structural data", criterion1, 5000},
      {"C2 six-vertex cosyzygy dynamics", criterion2, 10000},
      {"C3 end-to-end verdict and mutation suite", criterion3, 300000},
      {"C4 class coverage with required routes", criterion4, 120000},
      {"C5 property suites", criterion5, 0},
      {"C6 honest unknown and cap monotonicity", criterion6, 0},
  };
  int failures = 0;
  for (const auto& crit : table) {
    auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
      detail = crit.run();
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    long ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    if (ok && crit.budget_ms > 0 && ms > crit.budget_ms) {
      ok = false;
      detail = "over budget: " + std::to_string(ms) + " ms > " +
               std::to_string(crit.budget_ms) + " ms";
    }
    std::cout << crit.name << ": " << (ok ? "PASS" : "FAIL") << " (" << ms
              << " ms) - " << detail << std::endl;
    failures += ok ? 0 : 1;
  }
  if (failures) std::cout << failures << " criterion(s) failed\n";
  return failures;
}
