#include "hopf/linalg.hpp"

#include <algorithm>

namespace hopf {

Mat Mat::identity(int n) {
  Mat I(n, n);
  for (int i = 0; i < n; ++i) I.at(i, i) = 1;
  return I;
}

Mat mat_add(const PrimeField& F, const Mat& A, const Mat& B) {
  if (A.rows != B.rows || A.cols != B.cols) throw InternalError("mat_add: shape mismatch");
  Mat C(A.rows, A.cols);
  for (size_t i = 0; i < A.a.size(); ++i) C.a[i] = F.add(A.a[i], B.a[i]);
  return C;
}

Mat mat_sub(const PrimeField& F, const Mat& A, const Mat& B) {
  if (A.rows != B.rows || A.cols != B.cols) throw InternalError("mat_sub: shape mismatch");
  Mat C(A.rows, A.cols);
  for (size_t i = 0; i < A.a.size(); ++i) C.a[i] = F.sub(A.a[i], B.a[i]);
  return C;
}

Mat mat_scale(const PrimeField& F, Fe c, const Mat& A) {
  Mat C(A.rows, A.cols);
  for (size_t i = 0; i < A.a.size(); ++i) C.a[i] = F.mul(c, A.a[i]);
  return C;
}

Mat mat_mul(const PrimeField& F, const Mat& A, const Mat& B) {
  if (A.cols != B.rows) throw InternalError("mat_mul: shape mismatch");
  Mat C(A.rows, B.cols);
  for (int i = 0; i < A.rows; ++i) {
    for (int k = 0; k < A.cols; ++k) {
      Fe aik = A.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < B.cols; ++j) {
        C.at(i, j) = F.add(C.at(i, j), F.mul(aik, B.at(k, j)));
      }
    }
  }
  return C;
}

Mat mat_pow(const PrimeField& F, const Mat& A, std::uint64_t e) {
  if (A.rows != A.cols) throw InternalError("mat_pow: not square");
  Mat r = Mat::identity(A.rows);
  Mat base = A;
  while (e) {
    if (e & 1) r = mat_mul(F, r, base);
    base = mat_mul(F, base, base);
    e >>= 1;
  }
  return r;
}

Mat transpose(const Mat& A) {
  Mat T(A.cols, A.rows);
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < A.cols; ++j) T.at(j, i) = A.at(i, j);
  return T;
}

Mat kron(const PrimeField& F, const Mat& A, const Mat& B) {
  Mat C(A.rows * B.rows, A.cols * B.cols);
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < A.cols; ++j) {
      Fe aij = A.at(i, j);
      if (aij == 0) continue;
      for (int k = 0; k < B.rows; ++k)
        for (int l = 0; l < B.cols; ++l)
          C.at(i * B.rows + k, j * B.cols + l) = F.mul(aij, B.at(k, l));
    }
  return C;
}

Fe mat_trace(const PrimeField& F, const Mat& A) {
  Fe t = 0;
  for (int i = 0; i < std::min(A.rows, A.cols); ++i) t = F.add(t, A.at(i, i));
  return t;
}

Vec mat_apply(const PrimeField& F, const Mat& A, const Vec& v) {
  if (static_cast<int>(v.size()) != A.cols) throw InternalError("mat_apply: shape mismatch");
  Vec r(A.rows, 0);
  for (int i = 0; i < A.rows; ++i) {
    Fe s = 0;
    for (int j = 0; j < A.cols; ++j) s = F.add(s, F.mul(A.at(i, j), v[j]));
    r[i] = s;
  }
  return r;
}

bool is_zero(const Mat& A) {
  return std::all_of(A.a.begin(), A.a.end(), [](Fe x) { return x == 0; });
}

std::vector<int> rref(const PrimeField& F, Mat& M) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < M.cols && row < M.rows; ++col) {
    int pr = -1;
    for (int i = row; i < M.rows; ++i) {
      if (M.at(i, col) != 0) {
        pr = i;
        break;
      }
    }
    if (pr < 0) continue;
    if (pr != row) {
      for (int j = 0; j < M.cols; ++j) std::swap(M.at(pr, j), M.at(row, j));
    }
    Fe s = F.inv(M.at(row, col));
    for (int j = col; j < M.cols; ++j) M.at(row, j) = F.mul(s, M.at(row, j));
    for (int i = 0; i < M.rows; ++i) {
      if (i == row) continue;
      Fe f = M.at(i, col);
      if (f == 0) continue;
      for (int j = col; j < M.cols; ++j)
        M.at(i, j) = F.sub(M.at(i, j), F.mul(f, M.at(row, j)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

int rank(const PrimeField& F, Mat M) { return static_cast<int>(rref(F, M).size()); }

std::vector<Vec> nullspace(const PrimeField& F, Mat M) {
  int n = M.cols;
  std::vector<int> pivots = rref(F, M);
  std::vector<bool> is_pivot(n, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (int free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vec v(n, 0);
    v[free] = 1;
    for (size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = F.neg(M.at(static_cast<int>(r), free));
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> solve_linear(const PrimeField& F, Mat A, Vec b) {
  if (static_cast<int>(b.size()) != A.rows) throw InternalError("solve_linear: shape mismatch");
  Mat aug(A.rows, A.cols + 1);
  for (int i = 0; i < A.rows; ++i) {
    for (int j = 0; j < A.cols; ++j) aug.at(i, j) = A.at(i, j);
    aug.at(i, A.cols) = b[i];
  }
  std::vector<int> pivots = rref(F, aug);
  // inconsistent iff a pivot lands in the augmented column
  if (!pivots.empty() && pivots.back() == A.cols) return std::nullopt;
  Vec x(A.cols, 0);
  for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(static_cast<int>(r), A.cols);
  return x;
}

std::optional<Mat> inverse(const PrimeField& F, const Mat& A) {
  if (A.rows != A.cols) throw InternalError("inverse: not square");
  int n = A.rows;
  Mat aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = A.at(i, j);
    aug.at(i, n + i) = 1;
  }
  std::vector<int> pivots = rref(F, aug);
  if (static_cast<int>(pivots.size()) < n || pivots[n - 1] != n - 1) return std::nullopt;
  Mat inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

Mat rows_matrix(const std::vector<Vec>& rows, int cols) {
  Mat M(static_cast<int>(rows.size()), cols);
  for (size_t i = 0; i < rows.size(); ++i) {
    if (static_cast<int>(rows[i].size()) != cols) throw InternalError("rows_matrix: ragged rows");
    for (int j = 0; j < cols; ++j) M.at(static_cast<int>(i), j) = rows[i][j];
  }
  return M;
}

void SpanBuilder::reduce(Vec& v) const {
  for (size_t r = 0; r < rows_.size(); ++r) {
    Fe f = v[pivots_[r]];
    if (f == 0) continue;
    const Vec& row = rows_[r];
    for (int j = pivots_[r]; j < cols_; ++j) v[j] = F_.sub(v[j], F_.mul(f, row[j]));
  }
}

bool SpanBuilder::add(Vec v) {
  if (static_cast<int>(v.size()) != cols_) throw InternalError("SpanBuilder: size mismatch");
  reduce(v);
  int piv = -1;
  for (int j = 0; j < cols_; ++j) {
    if (v[j] != 0) {
      piv = j;
      break;
    }
  }
  if (piv < 0) return false;
  Fe s = F_.inv(v[piv]);
  for (int j = piv; j < cols_; ++j) v[j] = F_.mul(s, v[j]);
  // back-substitute into existing rows to stay fully reduced
  for (size_t r = 0; r < rows_.size(); ++r) {
    Fe f = rows_[r][piv];
    if (f == 0) continue;
    for (int j = piv; j < cols_; ++j) rows_[r][j] = F_.sub(rows_[r][j], F_.mul(f, v[j]));
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(piv);
  return true;
}

bool SpanBuilder::contains(Vec v) const {
  reduce(v);
  return std::all_of(v.begin(), v.end(), [](Fe x) { return x == 0; });
}

Mat random_matrix(const PrimeField& F, Rng& rng, int rows, int cols) {
  Mat M(rows, cols);
  for (auto& x : M.a) x = rng.field_elt(F);
  return M;
}

Mat random_invertible(const PrimeField& F, Rng& rng, int n) {
  for (int tries = 0; tries < 256; ++tries) {
    Mat M = random_matrix(F, rng, n, n);
    if (rank(F, M) == n) return M;
  }
  throw InternalError("random_invertible: no invertible matrix found");
}

}  // namespace hopf
