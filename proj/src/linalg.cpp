#include "quigen/linalg.hpp"

namespace quigen {

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
  return m;
}

bool is_zero(const Field& F, const Mat& m) {
  for (const Scalar& x : m.a)
    if (!F.is_zero(x)) return false;
  return true;
}

bool eq(const Field& F, const Mat& x, const Mat& y) {
  if (!x.same_shape(y)) return false;
  for (size_t i = 0; i < x.a.size(); ++i)
    if (!F.eq(x.a[i], y.a[i])) return false;
  return true;
}

static void check_same_shape(const Mat& x, const Mat& y, const char* op) {
  if (!x.same_shape(y)) throw DimensionMismatch(std::string(op) + ": shape mismatch");
}

Mat add(const Field& F, const Mat& x, const Mat& y) {
  check_same_shape(x, y, "add");
  Mat r(x.nrows, x.ncols);
  for (size_t i = 0; i < x.a.size(); ++i) r.a[i] = F.add(x.a[i], y.a[i]);
  return r;
}

Mat sub(const Field& F, const Mat& x, const Mat& y) {
  check_same_shape(x, y, "sub");
  Mat r(x.nrows, x.ncols);
  for (size_t i = 0; i < x.a.size(); ++i) r.a[i] = F.sub(x.a[i], y.a[i]);
  return r;
}

Mat neg(const Field& F, const Mat& x) {
  Mat r(x.nrows, x.ncols);
  for (size_t i = 0; i < x.a.size(); ++i) r.a[i] = F.neg(x.a[i]);
  return r;
}

Mat scale(const Field& F, const Scalar& c, const Mat& x) {
  Mat r(x.nrows, x.ncols);
  for (size_t i = 0; i < x.a.size(); ++i) r.a[i] = F.mul(c, x.a[i]);
  return r;
}

Mat mul(const Field& F, const Mat& x, const Mat& y) {
  if (x.ncols != y.nrows) throw DimensionMismatch("mul: inner dimensions disagree");
  Mat r(x.nrows, y.ncols);
  for (int i = 0; i < x.nrows; ++i)
    for (int k = 0; k < x.ncols; ++k) {
      const Scalar& xik = x.at(i, k);
      if (F.is_zero(xik)) continue;
      for (int j = 0; j < y.ncols; ++j) {
        const Scalar& ykj = y.at(k, j);
        if (F.is_zero(ykj)) continue;
        r.at(i, j) = F.add(r.at(i, j), F.mul(xik, ykj));
      }
    }
  return r;
}

Mat transpose(const Mat& x) {
  Mat r(x.ncols, x.nrows);
  for (int i = 0; i < x.nrows; ++i)
    for (int j = 0; j < x.ncols; ++j) r.at(j, i) = x.at(i, j);
  return r;
}

Mat hstack(const Mat& x, const Mat& y) {
  if (x.nrows != y.nrows) throw DimensionMismatch("hstack: row counts disagree");
  Mat r(x.nrows, x.ncols + y.ncols);
  for (int i = 0; i < x.nrows; ++i) {
    for (int j = 0; j < x.ncols; ++j) r.at(i, j) = x.at(i, j);
    for (int j = 0; j < y.ncols; ++j) r.at(i, x.ncols + j) = y.at(i, j);
  }
  return r;
}

Mat vstack(const Mat& x, const Mat& y) {
  if (x.ncols != y.ncols) throw DimensionMismatch("vstack: column counts disagree");
  Mat r(x.nrows + y.nrows, x.ncols);
  for (int i = 0; i < x.nrows; ++i)
    for (int j = 0; j < x.ncols; ++j) r.at(i, j) = x.at(i, j);
  for (int i = 0; i < y.nrows; ++i)
    for (int j = 0; j < x.ncols; ++j) r.at(x.nrows + i, j) = y.at(i, j);
  return r;
}

Mat cols(const Mat& x, const std::vector<int>& idx) {
  Mat r(x.nrows, static_cast<int>(idx.size()));
  for (int j = 0; j < r.ncols; ++j)
    for (int i = 0; i < x.nrows; ++i) r.at(i, j) = x.at(i, idx[j]);
  return r;
}

Mat pow(const Field& F, Mat x, int e) {
  if (x.nrows != x.ncols) throw DimensionMismatch("pow: matrix not square");
  Mat r = Mat::identity(x.nrows);
  while (e > 0) {
    if (e & 1) r = mul(F, r, x);
    e >>= 1;
    if (e) x = mul(F, x, x);
  }
  return r;
}

Rref rref(const Field& F, Mat m) {
  Rref out;
  int lead = 0;
  for (int col = 0; col < m.ncols && lead < m.nrows; ++col) {
    int piv = -1;
    for (int i = lead; i < m.nrows; ++i)
      if (!F.is_zero(m.at(i, col))) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != lead)
      for (int j = 0; j < m.ncols; ++j) std::swap(m.at(piv, j), m.at(lead, j));
    Scalar d = F.inv(m.at(lead, col));
    for (int j = 0; j < m.ncols; ++j) m.at(lead, j) = F.mul(d, m.at(lead, j));
    for (int i = 0; i < m.nrows; ++i) {
      if (i == lead) continue;
      const Scalar c = m.at(i, col);
      if (F.is_zero(c)) continue;
      for (int j = 0; j < m.ncols; ++j)
        m.at(i, j) = F.sub(m.at(i, j), F.mul(c, m.at(lead, j)));
    }
    out.pivot_cols.push_back(col);
    ++lead;
  }
  out.rank = static_cast<int>(out.pivot_cols.size());
  out.m = std::move(m);
  return out;
}

int rank(const Field& F, const Mat& m) { return rref(F, m).rank; }

Mat kernel_basis(const Field& F, const Mat& m) {
  Rref r = rref(F, m);
  std::vector<bool> is_pivot(m.ncols, false);
  for (int c : r.pivot_cols) is_pivot[c] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < m.ncols; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Mat k(m.ncols, static_cast<int>(free_cols.size()));
  for (int j = 0; j < k.ncols; ++j) {
    int fc = free_cols[j];
    k.at(fc, j) = Scalar(1);
    for (int i = 0; i < r.rank; ++i) k.at(r.pivot_cols[i], j) = F.neg(r.m.at(i, fc));
  }
  return k;
}

std::optional<Mat> solve(const Field& F, const Mat& A, const Mat& B) {
  if (A.nrows != B.nrows) throw DimensionMismatch("solve: row counts disagree");
  Rref r = rref(F, hstack(A, B));
  // any pivot landing in the right block marks an inconsistent column
  for (int c : r.pivot_cols)
    if (c >= A.ncols) return std::nullopt;
  Mat x(A.ncols, B.ncols);
  for (int i = 0; i < r.rank; ++i)
    for (int j = 0; j < B.ncols; ++j) x.at(r.pivot_cols[i], j) = r.m.at(i, A.ncols + j);
  return x;
}

std::optional<Mat> inverse(const Field& F, const Mat& m) {
  if (m.nrows != m.ncols) return std::nullopt;
  Rref r = rref(F, hstack(m, Mat::identity(m.nrows)));
  if (r.rank != m.nrows) return std::nullopt;
  if (!r.pivot_cols.empty() && r.pivot_cols.back() >= m.ncols) return std::nullopt;
  Mat inv(m.nrows, m.nrows);
  for (int i = 0; i < m.nrows; ++i)
    for (int j = 0; j < m.nrows; ++j) inv.at(i, j) = r.m.at(i, m.ncols + j);
  return inv;
}

Mat column_space_basis(const Field& F, const Mat& m) {
  Rref r = rref(F, m);
  return cols(m, r.pivot_cols);
}

bool same_column_span(const Field& F, const Mat& x, const Mat& y) {
  if (x.nrows != y.nrows) return false;
  int rx = rank(F, x), ry = rank(F, y);
  if (rx != ry) return false;
  return rank(F, hstack(x, y)) == rx;
}

std::vector<int> span_completion(const Field& F, const Mat& m) {
  std::vector<int> picked;
  Mat cur = m;
  int r = rank(F, cur);
  for (int i = 0; i < m.nrows && r + static_cast<int>(picked.size()) < m.nrows; ++i) {
    Mat e(m.nrows, 1);
    e.at(i, 0) = Scalar(1);
    Mat cand = hstack(cur, e);
    if (rank(F, cand) > r + static_cast<int>(picked.size())) {
      picked.push_back(i);
      cur = std::move(cand);
    }
  }
  return picked;
}

}  // namespace quigen
