#pragma once

#include <optional>
#include <vector>

#include "quigen/field.hpp"

namespace quigen {

// Dense matrix, row-major. Zero-by-n shapes are legal everywhere.
struct Mat {
  int nrows = 0, ncols = 0;
  std::vector<Scalar> a;

  Mat() = default;
  Mat(int r, int c) : nrows(r), ncols(c), a(static_cast<size_t>(r) * c, Scalar(0)) {}

  Scalar& at(int i, int j) { return a[static_cast<size_t>(i) * ncols + j]; }
  const Scalar& at(int i, int j) const { return a[static_cast<size_t>(i) * ncols + j]; }

  static Mat identity(int n);

  bool same_shape(const Mat& o) const { return nrows == o.nrows && ncols == o.ncols; }
};

bool is_zero(const Field& F, const Mat& m);
bool eq(const Field& F, const Mat& x, const Mat& y);

Mat add(const Field& F, const Mat& x, const Mat& y);
Mat sub(const Field& F, const Mat& x, const Mat& y);
Mat neg(const Field& F, const Mat& x);
Mat scale(const Field& F, const Scalar& c, const Mat& x);
Mat mul(const Field& F, const Mat& x, const Mat& y);
Mat transpose(const Mat& x);
Mat hstack(const Mat& x, const Mat& y);  // side by side
Mat vstack(const Mat& x, const Mat& y);
Mat cols(const Mat& x, const std::vector<int>& idx);
Mat pow(const Field& F, Mat x, int e);  // square matrix power, e >= 0

struct Rref {
  Mat m;
  std::vector<int> pivot_cols;  // increasing
  int rank = 0;
};

// Reduced row echelon form. Pivot choice is deterministic: first row with a
// nonzero entry in the leftmost unfinished column.
Rref rref(const Field& F, Mat m);

int rank(const Field& F, const Mat& m);

// Columns span the right nullspace {v : m v = 0}; echelonized, deterministic.
Mat kernel_basis(const Field& F, const Mat& m);

// X with A X = B, or nullopt if inconsistent. Shapes must agree.
std::optional<Mat> solve(const Field& F, const Mat& A, const Mat& B);

std::optional<Mat> inverse(const Field& F, const Mat& m);

// Basis of the column span: the pivot columns of the original matrix.
Mat column_space_basis(const Field& F, const Mat& m);

// Do the columns of x and y span the same subspace of k^n?
bool same_column_span(const Field& F, const Mat& x, const Mat& y);

// Indices of standard basis vectors extending the column span of m to k^n.
std::vector<int> span_completion(const Field& F, const Mat& m);

}  // namespace quigen
