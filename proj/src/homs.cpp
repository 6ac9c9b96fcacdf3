#include <numeric>

#include "quigen/errors.hpp"
#include "quigen/rep.hpp"

// hom spaces, kernels/images/cokernels, radical/socle/top

namespace quigen {

namespace {

// unknown layout for hom systems: block F_v row-major, vertex blocks stacked
struct HomLayout {
  std::vector<int> off;
  int total = 0;
  HomLayout(const Representation& M, const Representation& N) {
    int n = static_cast<int>(M.dims.size());
    off.resize(n);
    for (int v = 0; v < n; ++v) {
      off[v] = total;
      total += N.dims[v] * M.dims[v];
    }
  }
  int idx(const Representation& M, int v, int r, int c) const {
    return off[v] + r * M.dims[v] + c;
  }
};

// arrow maps of a subobject spanned per vertex by the columns of incl[v]
std::vector<Mat> induced_maps(const Representation& ambient,
                              const std::vector<Mat>& incl) {
  const auto& alg = *ambient.alg;
  const Field& F = alg.field();
  std::vector<Mat> maps;
  for (int a = 0; a < alg.n_arrows(); ++a) {
    int i = alg.arrow(a).src, j = alg.arrow(a).tgt;
    auto x = solve(F, incl[j], mul(F, ambient.maps[a], incl[i]));
    if (!x) throw Error("internal: span is not arrow-stable");
    maps.push_back(std::move(*x));
  }
  return maps;
}

Sub sub_from_columns(RepPtr M, std::vector<Mat> cols) {
  std::vector<int> dims;
  for (const auto& m : cols) dims.push_back(m.ncols);
  auto rep = make_rep(M->alg, dims, induced_maps(*M, cols));
  Morphism incl{rep, M, std::move(cols)};
  return Sub{rep, std::move(incl)};
}

}  // namespace

std::vector<Morphism> hom_basis(RepPtr Mp, RepPtr Np) {
  const Representation& M = *Mp;
  const Representation& N = *Np;
  const auto& alg = *M.alg;
  const Field& F = alg.field();
  HomLayout L(M, N);
  int rows = 0;
  for (int a = 0; a < alg.n_arrows(); ++a)
    rows += N.dims[alg.arrow(a).tgt] * M.dims[alg.arrow(a).src];
  Mat sys(rows, L.total);
  int row = 0;
  for (int a = 0; a < alg.n_arrows(); ++a) {
    int i = alg.arrow(a).src, j = alg.arrow(a).tgt;
    const Mat& Ma = M.maps[a];
    const Mat& Na = N.maps[a];
    for (int r = 0; r < N.dims[j]; ++r) {
      for (int c = 0; c < M.dims[i]; ++c) {
        // (F_j * Ma - Na * F_i)[r][c] = 0
        for (int k = 0; k < M.dims[j]; ++k) {
          if (F.is_zero(Ma.at(k, c))) continue;
          int x = L.idx(M, j, r, k);
          sys.at(row, x) = F.add(sys.at(row, x), Ma.at(k, c));
        }
        for (int k = 0; k < N.dims[i]; ++k) {
          if (F.is_zero(Na.at(r, k))) continue;
          int x = L.idx(M, i, k, c);
          sys.at(row, x) = F.sub(sys.at(row, x), Na.at(r, k));
        }
        ++row;
      }
    }
  }
  Mat ker = kernel_basis(F, sys);
  std::vector<Morphism> out;
  for (int k = 0; k < ker.ncols; ++k) {
    Morphism f{Mp, Np, {}};
    for (size_t v = 0; v < M.dims.size(); ++v) {
      Mat b(N.dims[v], M.dims[v]);
      for (int r = 0; r < b.nrows; ++r)
        for (int c = 0; c < b.ncols; ++c)
          b.at(r, c) = ker.at(L.idx(M, static_cast<int>(v), r, c), k);
      f.blocks.push_back(std::move(b));
    }
    out.push_back(std::move(f));
  }
  return out;
}

Sub kernel(const Morphism& f) {
  const Field& F = f.src->alg->field();
  std::vector<Mat> cols;
  for (const auto& b : f.blocks) cols.push_back(kernel_basis(F, b));
  return sub_from_columns(f.src, std::move(cols));
}

Sub image(const Morphism& f) {
  const Field& F = f.src->alg->field();
  std::vector<Mat> cols;
  for (const auto& b : f.blocks) cols.push_back(column_space_basis(F, b));
  return sub_from_columns(f.dst, std::move(cols));
}

Quot cokernel(const Morphism& f) {
  const auto& alg = *f.src->alg;
  const Field& F = alg.field();
  const int n = alg.vertices();
  std::vector<Mat> sect(n), proj(n);
  std::vector<int> dims(n);
  for (int v = 0; v < n; ++v) {
    Mat B = column_space_basis(F, f.blocks[v]);
    std::vector<int> comp = span_completion(F, B);
    int d = f.dst->dims[v];
    int c = static_cast<int>(comp.size());
    dims[v] = c;
    Mat sigma(d, c);
    for (int k = 0; k < c; ++k) sigma.at(comp[k], k) = F.reduce(Scalar(1));
    // T = [B | sigma] is invertible; the projection reads off the sigma
    // coordinates, so proj = bottom rows of T^{-1}
    Mat T = hstack(B, sigma);
    auto Ti = inverse(F, T);
    if (!Ti) throw Error("internal: cokernel completion failed");
    Mat p(c, d);
    for (int r = 0; r < c; ++r)
      for (int cc = 0; cc < d; ++cc) p.at(r, cc) = Ti->at(B.ncols + r, cc);
    sect[v] = std::move(sigma);
    proj[v] = std::move(p);
  }
  std::vector<Mat> maps;
  for (int a = 0; a < alg.n_arrows(); ++a) {
    int i = alg.arrow(a).src, j = alg.arrow(a).tgt;
    maps.push_back(mul(F, proj[j], mul(F, f.dst->maps[a], sect[i])));
  }
  auto rep = make_rep(f.src->alg, dims, std::move(maps));
  Morphism pi{f.dst, rep, std::move(proj)};
  return Quot{rep, std::move(pi)};
}

Sub radical(RepPtr M) {
  const auto& alg = *M->alg;
  const Field& F = alg.field();
  const int n = alg.vertices();
  std::vector<Mat> cols;
  for (int v = 0; v < n; ++v) {
    Mat acc(M->dims[v], 0);
    for (int a = 0; a < alg.n_arrows(); ++a)
      if (alg.arrow(a).tgt == v) acc = hstack(acc, M->maps[a]);
    cols.push_back(column_space_basis(F, acc));
  }
  return sub_from_columns(M, std::move(cols));
}

Sub socle(RepPtr M) {
  const auto& alg = *M->alg;
  const Field& F = alg.field();
  const int n = alg.vertices();
  std::vector<Mat> cols;
  for (int v = 0; v < n; ++v) {
    Mat acc(0, M->dims[v]);
    for (int a = 0; a < alg.n_arrows(); ++a)
      if (alg.arrow(a).src == v) acc = vstack(acc, M->maps[a]);
    cols.push_back(kernel_basis(F, acc));
  }
  return sub_from_columns(M, std::move(cols));
}

Quot top(RepPtr M) { return cokernel(radical(M).incl); }

}  // namespace quigen
