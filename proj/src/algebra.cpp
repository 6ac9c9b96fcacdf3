#include "quigen/algebra.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "quigen/errors.hpp"

namespace quigen {

namespace {

// a path of length l is stored as (path of length l-1, last arrow)
struct PathRec {
  int prev = -1;   // index within grade l-1; the source vertex when l == 1
  int arrow = -1;  // last arrow
  int src = 0, tgt = 0;
};

constexpr long kMaxTotalPaths = 2000000;

std::string path_word_name(const AlgebraSpec& spec, int src,
                           const std::vector<int>& word) {
  if (word.empty()) return "e" + std::to_string(src + 1);
  std::string out;
  for (size_t i = 0; i < word.size(); ++i) {
    if (i) out += ".";
    out += spec.arrows[word[i]].name;
  }
  return out;
}

}  // namespace

std::shared_ptr<const Algebra> Algebra::build(AlgebraSpec spec) {
  const Field& F = spec.field;
  const int n = spec.n_vertices;
  const int na = static_cast<int>(spec.arrows.size());
  const int N = spec.nilpotency;
  if (n <= 0) throw Error("algebra needs at least one vertex");
  if (N < 1) throw Error("nilpotency bound must be positive");
  for (const auto& a : spec.arrows) {
    if (a.src < 0 || a.src >= n || a.tgt < 0 || a.tgt >= n)
      throw Error("arrow " + a.name + " has an out-of-range endpoint");
  }
  for (const auto& r : spec.relations) {
    if (r.length < 2) throw Error("relations must have length at least 2");
    if (r.length > N)
      throw Error("relation of length " + std::to_string(r.length) +
                  " exceeds the nilpotency bound " + std::to_string(N));
  }

  // enumerate paths grade by grade
  std::vector<std::vector<PathRec>> grade(static_cast<size_t>(N) + 1);
  // (prev, arrow) -> index, per grade >= 1
  std::vector<std::map<std::pair<int, int>, int>> at(static_cast<size_t>(N) + 1);
  grade[0].resize(n);
  for (int v = 0; v < n; ++v) grade[0][v] = PathRec{-1, -1, v, v};
  long total = n;
  for (int l = 1; l <= N; ++l) {
    for (int p = 0; p < static_cast<int>(grade[l - 1].size()); ++p) {
      for (int a = 0; a < na; ++a) {
        if (spec.arrows[a].src != grade[l - 1][p].tgt) continue;
        at[l][{p, a}] = static_cast<int>(grade[l].size());
        grade[l].push_back(PathRec{p, a, grade[l - 1][p].src, spec.arrows[a].tgt});
      }
    }
    total += static_cast<long>(grade[l].size());
    if (total > kMaxTotalPaths)
      throw Error("path enumeration exceeds " + std::to_string(kMaxTotalPaths) +
                  " paths; lower the nilpotency bound");
  }

  // prep[l][p][a] = index in grade l+1 of arrow a followed by path p, or -1
  std::vector<std::vector<std::vector<int>>> prep(static_cast<size_t>(N));
  for (int l = 0; l + 1 <= N; ++l) {
    prep[l].assign(grade[l].size(), std::vector<int>(na, -1));
    for (int p = 0; p < static_cast<int>(grade[l].size()); ++p) {
      for (int a = 0; a < na; ++a) {
        if (l == 0) {
          if (spec.arrows[a].tgt != grade[0][p].src) continue;
          prep[l][p][a] = at[1].at({spec.arrows[a].src, a});
        } else {
          const PathRec& rec = grade[l][p];
          int q = prep[l - 1][rec.prev][a];
          if (q < 0) continue;
          prep[l][p][a] = at[l + 1].at({q, rec.arrow});
        }
      }
    }
  }

  // index of e_src * word within its grade (words are known composable here)
  auto word_index = [&](int src, const std::vector<int>& word) -> int {
    int idx = src;
    for (size_t i = 0; i < word.size(); ++i) {
      auto it = at[i + 1].find({idx, word[i]});
      if (it == at[i + 1].end()) return -1;
      idx = it->second;
    }
    return idx;
  };

  // relation vectors per grade
  std::vector<std::vector<std::vector<Scalar>>> rel_rows(static_cast<size_t>(N) + 1);
  for (const auto& r : spec.relations) {
    std::vector<Scalar> v(grade[r.length].size(), Scalar(0));
    for (const auto& t : r.terms) {
      int idx = word_index(r.src, t.arrows);
      if (idx < 0) throw Error("relation term is not a composable path");
      v[idx] = F.add(v[idx], t.coeff);
    }
    rel_rows[r.length].push_back(std::move(v));
  }

  // ideal span per grade, stored as rref rows; grade l >= 2:
  //   I_l = A_1 * I_{l-1} + I_{l-1} * A_1 + R_l
  std::vector<Rref> ideal(static_cast<size_t>(N) + 1);
  std::vector<std::vector<char>> is_pivot(static_cast<size_t>(N) + 1);
  ideal[0] = Rref{Mat(0, n), {}, 0};
  ideal[1] = Rref{Mat(0, static_cast<int>(grade[1].size())), {}, 0};
  is_pivot[0].assign(n, 0);
  is_pivot[1].assign(grade[1].size(), 0);
  for (int l = 2; l <= N; ++l) {
    const int np = static_cast<int>(grade[l].size());
    std::vector<std::vector<Scalar>> rows = rel_rows[l];
    const Mat& prev = ideal[l - 1].m;
    for (int r = 0; r < prev.nrows; ++r) {
      for (int a = 0; a < na; ++a) {
        std::vector<Scalar> right(np, Scalar(0)), left(np, Scalar(0));
        bool any_r = false, any_l = false;
        for (int p = 0; p < prev.ncols; ++p) {
          const Scalar& c = prev.at(r, p);
          if (F.is_zero(c)) continue;
          auto it = at[l].find({p, a});
          if (it != at[l].end()) {
            right[it->second] = F.add(right[it->second], c);
            any_r = true;
          }
          int q = prep[l - 1][p][a];
          if (q >= 0) {
            left[q] = F.add(left[q], c);
            any_l = true;
          }
        }
        if (any_r) rows.push_back(std::move(right));
        if (any_l) rows.push_back(std::move(left));
      }
    }
    Mat span(static_cast<int>(rows.size()), np);
    for (int r = 0; r < span.nrows; ++r)
      for (int c = 0; c < np; ++c) span.at(r, c) = rows[r][c];
    ideal[l] = rref(F, span);
    // drop zero rows so the extension step stays small
    Mat compact(ideal[l].rank, np);
    for (int r = 0; r < ideal[l].rank; ++r)
      for (int c = 0; c < np; ++c) compact.at(r, c) = ideal[l].m.at(r, c);
    ideal[l].m = std::move(compact);
    is_pivot[l].assign(np, 0);
    for (int c : ideal[l].pivot_cols) is_pivot[l][c] = 1;
  }

  // admissibility: every length-N path must lie in the ideal
  if (N < static_cast<int>(grade.size()) && !grade[N].empty()) {
    if (ideal[N].rank != static_cast<int>(grade[N].size())) {
      for (int p = 0; p < static_cast<int>(grade[N].size()); ++p) {
        if (is_pivot[N][p]) continue;
        std::vector<int> word;
        int idx = p, ll = N;
        while (ll > 0) {
          word.push_back(grade[ll][idx].arrow);
          idx = grade[ll][idx].prev;
          --ll;
        }
        std::reverse(word.begin(), word.end());
        throw AdmissibilityError(
            "path " + path_word_name(spec, grade[N][p].src, word) +
            " of length " + std::to_string(N) +
            " does not reduce to zero; the ideal is not admissible at this "
            "nilpotency bound");
      }
    }
  }

  auto alg = std::shared_ptr<Algebra>(new Algebra());
  alg->spec_ = std::move(spec);

  // global basis: non-pivot path classes, grade by grade
  std::vector<std::vector<int>> global(static_cast<size_t>(N));  // path -> basis id
  for (int l = 0; l < N; ++l) {
    global[l].assign(grade[l].size(), -1);
    for (int p = 0; p < static_cast<int>(grade[l].size()); ++p) {
      if (is_pivot[l][p]) continue;
      global[l][p] = static_cast<int>(alg->basis_src_.size());
      alg->basis_src_.push_back(grade[l][p].src);
      alg->basis_tgt_.push_back(grade[l][p].tgt);
      alg->basis_len_.push_back(l);
      std::vector<int> word;
      int idx = p, ll = l;
      while (ll > 0) {
        word.push_back(grade[ll][idx].arrow);
        idx = grade[ll][idx].prev;
        --ll;
      }
      std::reverse(word.begin(), word.end());
      alg->basis_word_.push_back(std::move(word));
    }
  }
  const int dim = alg->dim();

  // normal form of each path over the global basis; pivot paths reduce via
  // their (fully reduced) rref row, so the expansion is immediate
  std::vector<std::vector<std::vector<std::pair<int, Scalar>>>> nf(
      static_cast<size_t>(N));
  for (int l = 0; l < N; ++l) {
    nf[l].resize(grade[l].size());
    std::vector<int> pivot_row(grade[l].size(), -1);
    for (size_t r = 0; r < ideal[l].pivot_cols.size(); ++r)
      pivot_row[ideal[l].pivot_cols[r]] = static_cast<int>(r);
    for (int p = 0; p < static_cast<int>(grade[l].size()); ++p) {
      if (!is_pivot[l][p]) {
        nf[l][p].push_back({global[l][p], Scalar(1)});
        continue;
      }
      int r = pivot_row[p];
      for (int c = 0; c < static_cast<int>(grade[l].size()); ++c) {
        if (is_pivot[l][c]) continue;
        const Scalar& x = ideal[l].m.at(r, c);
        if (!F.is_zero(x)) nf[l][p].push_back({global[l][c], F.neg(x)});
      }
    }
  }

  alg->right_mult_.assign(na, Mat(dim, dim));
  for (int b = 0; b < dim; ++b) {
    int l = alg->basis_len_[b];
    int p = -1;
    // recover the grade-local index of basis class b
    {
      int idx = alg->basis_src_[b];
      const auto& w = alg->basis_word_[b];
      for (size_t i = 0; i < w.size(); ++i) idx = at[i + 1].at({idx, w[i]});
      p = idx;
    }
    for (int a = 0; a < na; ++a) {
      if (alg->spec_.arrows[a].src != alg->basis_tgt_[b]) continue;
      if (l + 1 == N) continue;  // admissible: reduces to zero
      auto it = at[l + 1].find({p, a});
      if (it == at[l + 1].end()) continue;
      for (const auto& [gb, coef] : nf[l + 1][it->second])
        alg->right_mult_[a].at(gb, b) = coef;
    }
  }
  return alg;
}

std::vector<Scalar> Algebra::path_class(int src,
                                        const std::vector<int>& word) const {
  std::vector<Scalar> v(dim(), Scalar(0));
  v[unit_index(src)] = Scalar(1);
  const Field& F = field();
  for (int a : word) {
    std::vector<Scalar> next(dim(), Scalar(0));
    for (int b = 0; b < dim(); ++b) {
      if (F.is_zero(v[b])) continue;
      for (int r = 0; r < dim(); ++r) {
        const Scalar& m = right_mult_[a].at(r, b);
        if (!F.is_zero(m)) next[r] = F.add(next[r], F.mul(m, v[b]));
      }
    }
    v = std::move(next);
  }
  return v;
}

std::string Algebra::basis_name(int b) const {
  return path_word_name(spec_, basis_src_[b], basis_word_[b]);
}

std::shared_ptr<const Algebra> Algebra::opposite() const {
  if (opp_cache_) return opp_cache_;
  AlgebraSpec op = spec_;
  op.label = spec_.label.empty() ? "op" : spec_.label + ".op";
  for (auto& a : op.arrows) std::swap(a.src, a.tgt);
  for (auto& r : op.relations) {
    std::swap(r.src, r.tgt);
    for (auto& t : r.terms) std::reverse(t.arrows.begin(), t.arrows.end());
  }
  opp_cache_ = build(std::move(op));
  return opp_cache_;
}

std::string Algebra::canonical_text() const {
  std::ostringstream os;
  os << "field " << spec_.field.name() << "\n";
  os << "vertices " << spec_.n_vertices << "\n";
  for (const auto& a : spec_.arrows)
    os << "arrow " << a.name << " : " << (a.src + 1) << " -> " << (a.tgt + 1)
       << "\n";
  for (const auto& r : spec_.relations) {
    os << "relation ";
    for (size_t t = 0; t < r.terms.size(); ++t) {
      if (t) os << " + ";
      os << spec_.field.str(r.terms[t].coeff) << "*"
         << path_word_name(spec_, r.src, r.terms[t].arrows);
    }
    os << "\n";
  }
  os << "nilpotency " << spec_.nilpotency << "\n";
  return os.str();
}

std::string Algebra::hash_hex() const {
  // FNV-1a, 64 bit
  std::string s = canonical_text();
  unsigned long long h = 14695981039346656037ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

int Algebra::arrow_index(const std::string& name) const {
  for (int a = 0; a < n_arrows(); ++a)
    if (spec_.arrows[a].name == name) return a;
  return -1;
}

}  // namespace quigen
