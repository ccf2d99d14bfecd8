#pragma once

#include <optional>
#include <vector>

#include "hopf/fp.hpp"

namespace hopf {

using Vec = std::vector<Fe>;

/// Dense row-major matrix over F_p.
struct Mat {
  int rows = 0;
  int cols = 0;
  std::vector<Fe> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}

  Fe& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  Fe at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  static Mat identity(int n);
  bool operator==(const Mat& o) const = default;
};

Mat mat_add(const PrimeField& F, const Mat& A, const Mat& B);
Mat mat_sub(const PrimeField& F, const Mat& A, const Mat& B);
Mat mat_scale(const PrimeField& F, Fe c, const Mat& A);
Mat mat_mul(const PrimeField& F, const Mat& A, const Mat& B);
Mat mat_pow(const PrimeField& F, const Mat& A, std::uint64_t e);
Mat transpose(const Mat& A);
Mat kron(const PrimeField& F, const Mat& A, const Mat& B);
Fe mat_trace(const PrimeField& F, const Mat& A);
Vec mat_apply(const PrimeField& F, const Mat& A, const Vec& v);
bool is_zero(const Mat& A);

/// Row-reduce M in place; returns pivot column indices. Reduced row echelon.
std::vector<int> rref(const PrimeField& F, Mat& M);

int rank(const PrimeField& F, Mat M);

/// Basis of the right nullspace {v : Mv = 0}.
std::vector<Vec> nullspace(const PrimeField& F, Mat M);

/// Any solution of Ax = b, or nullopt when inconsistent.
std::optional<Vec> solve_linear(const PrimeField& F, Mat A, Vec b);

std::optional<Mat> inverse(const PrimeField& F, const Mat& A);

/// Matrix whose rows are the given vectors.
Mat rows_matrix(const std::vector<Vec>& rows, int cols);

/// Incrementally maintained row space in reduced echelon form.
class SpanBuilder {
public:
  SpanBuilder(const PrimeField& F, int cols) : F_(F), cols_(cols) {}

  /// Reduces v against the current rows; inserts the remainder if nonzero.
  /// Returns true when the span grew.
  bool add(Vec v);
  /// True iff v lies in the current span.
  bool contains(Vec v) const;
  int dim() const { return static_cast<int>(rows_.size()); }

private:
  void reduce(Vec& v) const;
  PrimeField F_;
  int cols_;
  std::vector<Vec> rows_;    // echelon rows, pivot normalized to 1
  std::vector<int> pivots_;  // pivot column of each row
};

Mat random_matrix(const PrimeField& F, Rng& rng, int rows, int cols);
Mat random_invertible(const PrimeField& F, Rng& rng, int n);

}  // namespace hopf
