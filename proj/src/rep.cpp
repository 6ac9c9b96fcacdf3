#include "quigen/rep.hpp"

#include <numeric>
#include <sstream>

#include "quigen/errors.hpp"

namespace quigen {

int Representation::total_dim() const {
  return std::accumulate(dims.begin(), dims.end(), 0);
}

RepPtr make_rep(AlgebraPtr alg, std::vector<int> dims, std::vector<Mat> maps) {
  auto M = std::make_shared<Representation>();
  M->alg = std::move(alg);
  M->dims = std::move(dims);
  M->maps = std::move(maps);
  return M;
}

RepPtr zero_rep(AlgebraPtr alg) {
  std::vector<int> dims(alg->vertices(), 0);
  std::vector<Mat> maps;
  for (int a = 0; a < alg->n_arrows(); ++a) maps.emplace_back(0, 0);
  return make_rep(alg, std::move(dims), std::move(maps));
}

RepPtr simple_rep(AlgebraPtr alg, int v) {
  std::vector<int> dims(alg->vertices(), 0);
  dims[v] = 1;
  std::vector<Mat> maps;
  for (int a = 0; a < alg->n_arrows(); ++a)
    maps.emplace_back(dims[alg->arrow(a).tgt], dims[alg->arrow(a).src]);
  return make_rep(alg, std::move(dims), std::move(maps));
}

// P_v = e_v A: basis classes starting at v, graded fibres by target vertex
RepPtr indec_projective(AlgebraPtr alg, int v) {
  const int n = alg->vertices();
  std::vector<std::vector<int>> fibre(n);             // global basis ids
  std::vector<int> local(alg->dim(), -1);             // id -> index in fibre
  for (int b = 0; b < alg->dim(); ++b) {
    if (alg->basis_src(b) != v) continue;
    local[b] = static_cast<int>(fibre[alg->basis_tgt(b)].size());
    fibre[alg->basis_tgt(b)].push_back(b);
  }
  std::vector<int> dims(n);
  for (int w = 0; w < n; ++w) dims[w] = static_cast<int>(fibre[w].size());
  std::vector<Mat> maps;
  const Field& F = alg->field();
  for (int a = 0; a < alg->n_arrows(); ++a) {
    int i = alg->arrow(a).src, j = alg->arrow(a).tgt;
    Mat m(dims[j], dims[i]);
    for (int c = 0; c < dims[i]; ++c) {
      int b = fibre[i][c];
      const Mat& rm = alg->right_mult(a);
      for (int r = 0; r < alg->dim(); ++r) {
        if (F.is_zero(rm.at(r, b))) continue;
        // products stay in e_v A, so every target class lies in the fibre
        m.at(local[r], c) = rm.at(r, b);
      }
    }
    maps.push_back(std::move(m));
  }
  return make_rep(alg, std::move(dims), std::move(maps));
}

RepPtr indec_injective(AlgebraPtr alg, int v) {
  auto opp = alg->opposite();
  return dual_op(*indec_projective(opp, v), alg);
}

RepPtr regular_rep(AlgebraPtr alg) {
  std::vector<RepPtr> parts;
  for (int v = 0; v < alg->vertices(); ++v)
    parts.push_back(indec_projective(alg, v));
  return direct_sum(alg, parts).rep;
}

Mat evaluate_word(const Representation& M, int src, const std::vector<int>& word) {
  const Field& F = M.alg->field();
  Mat cur = Mat::identity(M.dims[src]);
  for (int a : word) cur = mul(F, M.maps[a], cur);
  return cur;
}

Mat evaluate_relation(const Representation& M, const Relation& r) {
  const Field& F = M.alg->field();
  Mat out(M.dims[r.tgt], M.dims[r.src]);
  for (const auto& t : r.terms)
    out = add(F, out, scale(F, t.coeff, evaluate_word(M, r.src, t.arrows)));
  return out;
}

std::optional<std::string> check_module(const Representation& M) {
  const auto& alg = *M.alg;
  if (static_cast<int>(M.dims.size()) != alg.vertices())
    return "dimension vector has wrong length";
  if (static_cast<int>(M.maps.size()) != alg.n_arrows())
    return "wrong number of arrow matrices";
  for (int a = 0; a < alg.n_arrows(); ++a) {
    if (M.maps[a].nrows != M.dims[alg.arrow(a).tgt] ||
        M.maps[a].ncols != M.dims[alg.arrow(a).src])
      return "matrix for arrow " + alg.arrow(a).name + " has wrong shape";
  }
  for (const auto& r : alg.spec().relations) {
    if (!is_zero(alg.field(), evaluate_relation(M, r)))
      return "relation at line " + std::to_string(r.line) + " is violated";
  }
  return std::nullopt;
}

bool is_morphism(const Morphism& f) {
  const auto& alg = *f.src->alg;
  const Field& F = alg.field();
  if (f.src->alg.get() != f.dst->alg.get()) return false;
  for (int v = 0; v < alg.vertices(); ++v)
    if (f.blocks[v].nrows != f.dst->dims[v] || f.blocks[v].ncols != f.src->dims[v])
      return false;
  for (int a = 0; a < alg.n_arrows(); ++a) {
    int i = alg.arrow(a).src, j = alg.arrow(a).tgt;
    Mat lhs = mul(F, f.blocks[j], f.src->maps[a]);
    Mat rhs = mul(F, f.dst->maps[a], f.blocks[i]);
    if (!eq(F, lhs, rhs)) return false;
  }
  return true;
}

Morphism zero_morphism(RepPtr src, RepPtr dst) {
  Morphism f{std::move(src), std::move(dst), {}};
  for (int v = 0; v < f.src->alg->vertices(); ++v)
    f.blocks.emplace_back(f.dst->dims[v], f.src->dims[v]);
  return f;
}

Morphism identity_morphism(RepPtr M) {
  Morphism f{M, M, {}};
  for (int d : M->dims) f.blocks.push_back(Mat::identity(d));
  return f;
}

Morphism compose(const Morphism& g, const Morphism& f) {
  const Field& F = f.src->alg->field();
  Morphism h{f.src, g.dst, {}};
  for (size_t v = 0; v < f.blocks.size(); ++v)
    h.blocks.push_back(mul(F, g.blocks[v], f.blocks[v]));
  return h;
}

Morphism add(const Morphism& f, const Morphism& g) {
  const Field& F = f.src->alg->field();
  Morphism h{f.src, f.dst, {}};
  for (size_t v = 0; v < f.blocks.size(); ++v)
    h.blocks.push_back(add(F, f.blocks[v], g.blocks[v]));
  return h;
}

Morphism sub(const Morphism& f, const Morphism& g) {
  const Field& F = f.src->alg->field();
  Morphism h{f.src, f.dst, {}};
  for (size_t v = 0; v < f.blocks.size(); ++v)
    h.blocks.push_back(sub(F, f.blocks[v], g.blocks[v]));
  return h;
}

Morphism scale(const Scalar& c, const Morphism& f) {
  const Field& F = f.src->alg->field();
  Morphism h{f.src, f.dst, {}};
  for (const auto& b : f.blocks) h.blocks.push_back(scale(F, c, b));
  return h;
}

Morphism pow_endo(const Morphism& f, long e) {
  Morphism acc = identity_morphism(f.src);
  Morphism base = f;
  while (e > 0) {
    if (e & 1) acc = compose(acc, base);
    e >>= 1;
    if (e) base = compose(base, base);
  }
  return acc;
}

bool morphism_is_zero(const Morphism& f) {
  const Field& F = f.src->alg->field();
  for (const auto& b : f.blocks)
    if (!is_zero(F, b)) return false;
  return true;
}

bool morphism_eq(const Morphism& f, const Morphism& g) {
  const Field& F = f.src->alg->field();
  if (f.blocks.size() != g.blocks.size()) return false;
  for (size_t v = 0; v < f.blocks.size(); ++v)
    if (!eq(F, f.blocks[v], g.blocks[v])) return false;
  return true;
}

std::vector<int> ranks(const Morphism& f) {
  const Field& F = f.src->alg->field();
  std::vector<int> r;
  for (const auto& b : f.blocks) r.push_back(rank(F, b));
  return r;
}

bool is_injective(const Morphism& f) {
  auto r = ranks(f);
  for (size_t v = 0; v < r.size(); ++v)
    if (r[v] != f.src->dims[v]) return false;
  return true;
}

bool is_surjective(const Morphism& f) {
  auto r = ranks(f);
  for (size_t v = 0; v < r.size(); ++v)
    if (r[v] != f.dst->dims[v]) return false;
  return true;
}

bool is_iso(const Morphism& f) {
  if (f.src->dims != f.dst->dims) return false;
  return is_injective(f);
}

std::optional<Morphism> inverse(const Morphism& f) {
  if (f.src->dims != f.dst->dims) return std::nullopt;
  const Field& F = f.src->alg->field();
  Morphism g{f.dst, f.src, {}};
  for (const auto& b : f.blocks) {
    auto inv = inverse(F, b);
    if (!inv) return std::nullopt;
    g.blocks.push_back(std::move(*inv));
  }
  return g;
}

Morphism lincomb(const std::vector<Scalar>& c, const std::vector<Morphism>& fs) {
  if (fs.empty()) throw Error("lincomb needs at least one morphism");
  const Field& F = fs[0].src->alg->field();
  Morphism out = zero_morphism(fs[0].src, fs[0].dst);
  for (size_t k = 0; k < fs.size(); ++k) {
    if (F.is_zero(c[k])) continue;
    out = add(out, scale(c[k], fs[k]));
  }
  return out;
}

DirectSum direct_sum(AlgebraPtr alg, const std::vector<RepPtr>& parts) {
  const Field& F = alg->field();
  const int n = alg->vertices();
  std::vector<int> dims(n, 0), off0(n, 0);
  std::vector<std::vector<int>> offs;  // per part, per vertex
  for (const auto& p : parts) {
    offs.push_back(dims);
    for (int v = 0; v < n; ++v) dims[v] += p->dims[v];
  }
  std::vector<Mat> maps;
  for (int a = 0; a < alg->n_arrows(); ++a) {
    int i = alg->arrow(a).src, j = alg->arrow(a).tgt;
    Mat m(dims[j], dims[i]);
    for (size_t k = 0; k < parts.size(); ++k) {
      const Mat& b = parts[k]->maps[a];
      for (int r = 0; r < b.nrows; ++r)
        for (int c = 0; c < b.ncols; ++c)
          m.at(offs[k][j] + r, offs[k][i] + c) = b.at(r, c);
    }
    maps.push_back(std::move(m));
  }
  DirectSum out;
  out.rep = make_rep(alg, dims, std::move(maps));
  for (size_t k = 0; k < parts.size(); ++k) {
    Morphism in{parts[k], out.rep, {}}, pr{out.rep, parts[k], {}};
    for (int v = 0; v < n; ++v) {
      Mat iv(out.rep->dims[v], parts[k]->dims[v]);
      Mat pv(parts[k]->dims[v], out.rep->dims[v]);
      for (int c = 0; c < parts[k]->dims[v]; ++c) {
        iv.at(offs[k][v] + c, c) = F.reduce(Scalar(1));
        pv.at(c, offs[k][v] + c) = F.reduce(Scalar(1));
      }
      in.blocks.push_back(std::move(iv));
      pr.blocks.push_back(std::move(pv));
    }
    out.in.push_back(std::move(in));
    out.out.push_back(std::move(pr));
  }
  return out;
}

RepPtr dual_op(const Representation& M, AlgebraPtr target) {
  if (target->vertices() != M.alg->vertices() ||
      target->n_arrows() != M.alg->n_arrows())
    throw Error("dual_op: algebras do not match");
  std::vector<Mat> maps;
  for (int a = 0; a < target->n_arrows(); ++a) {
    if (target->arrow(a).src != M.alg->arrow(a).tgt ||
        target->arrow(a).tgt != M.alg->arrow(a).src)
      throw Error("dual_op: target is not the opposite algebra");
    maps.push_back(transpose(M.maps[a]));
  }
  return make_rep(target, M.dims, std::move(maps));
}

Morphism dual_op(const Morphism& f, AlgebraPtr target) {
  Morphism g{dual_op(*f.dst, target), dual_op(*f.src, target), {}};
  for (const auto& b : f.blocks) g.blocks.push_back(transpose(b));
  return g;
}

Canon Canon::make(AlgebraPtr alg) {
  Canon c;
  c.alg = alg;
  c.opp = alg->opposite();
  for (int v = 0; v < alg->vertices(); ++v) {
    c.simples.push_back(simple_rep(alg, v));
    c.projectives.push_back(indec_projective(alg, v));
    c.injectives.push_back(indec_injective(alg, v));
  }
  return c;
}

const Canon& Canon::op_canon() const {
  if (!op_cache_) op_cache_ = std::make_shared<Canon>(Canon::make(opp));
  return *op_cache_;
}

std::string dims_str(const Representation& M) {
  std::ostringstream os;
  os << "(";
  for (size_t v = 0; v < M.dims.size(); ++v) {
    if (v) os << ",";
    os << M.dims[v];
  }
  os << ")";
  return os.str();
}

}  // namespace quigen
