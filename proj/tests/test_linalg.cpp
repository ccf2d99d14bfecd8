#include <algorithm>

#include "doctest.h"
#include "hopf/linalg.hpp"

using namespace hopf;

namespace {
const PrimeField F(97, 3, 0);
}

TEST_CASE("rank basics") {
  CHECK(rank(F, Mat::identity(4)) == 4);
  CHECK(rank(F, Mat(3, 3)) == 0);
  Mat m(2, 3);
  m.at(0, 0) = 1;
  m.at(0, 1) = 2;
  m.at(1, 0) = 2;
  m.at(1, 1) = 4;  // second row twice the first
  CHECK(rank(F, m) == 1);
}

TEST_CASE("nullspace dimension complements rank") {
  Rng rng(11);
  for (int t = 0; t < 200; ++t) {
    int r = 1 + static_cast<int>(rng.below(6));
    int c = 1 + static_cast<int>(rng.below(6));
    Mat m = random_matrix(F, rng, r, c);
    auto ns = nullspace(F, m);
    CHECK(static_cast<int>(ns.size()) + rank(F, m) == c);
    for (const Vec& v : ns) {
      Vec mv = mat_apply(F, m, v);
      CHECK(std::all_of(mv.begin(), mv.end(), [](Fe x) { return x == 0; }));
    }
  }
}

TEST_CASE("rank of a product is bounded by both factors") {
  Rng rng(12);
  for (int t = 0; t < 100; ++t) {
    int a = 1 + static_cast<int>(rng.below(5));
    int b = 1 + static_cast<int>(rng.below(5));
    int c = 1 + static_cast<int>(rng.below(5));
    Mat A = random_matrix(F, rng, a, b);
    Mat B = random_matrix(F, rng, b, c);
    int rp = rank(F, mat_mul(F, A, B));
    CHECK(rp <= std::min(rank(F, A), rank(F, B)));
  }
}

TEST_CASE("solve_linear reports inconsistency explicitly") {
  Mat A(2, 2);
  A.at(0, 0) = 1;
  A.at(1, 0) = 1;  // x = b0 and x = b1
  CHECK(solve_linear(F, A, {3, 3}).has_value());
  CHECK_FALSE(solve_linear(F, A, {3, 4}).has_value());

  Rng rng(13);
  for (int t = 0; t < 50; ++t) {
    Mat M = random_matrix(F, rng, 4, 3);
    Vec x = {rng.field_elt(F), rng.field_elt(F), rng.field_elt(F)};
    Vec b = mat_apply(F, M, x);
    auto sol = solve_linear(F, M, b);
    REQUIRE(sol.has_value());
    CHECK(mat_apply(F, M, *sol) == b);
  }
}

TEST_CASE("inverse round trip") {
  Rng rng(14);
  Mat A = random_invertible(F, rng, 5);
  auto Ai = inverse(F, A);
  REQUIRE(Ai.has_value());
  CHECK(mat_mul(F, A, *Ai) == Mat::identity(5));
  Mat singular(2, 2);
  singular.at(0, 0) = 1;
  singular.at(1, 1) = 0;
  CHECK_FALSE(inverse(F, singular).has_value());
}

TEST_CASE("kron shapes and trace multiplicativity") {
  Rng rng(15);
  Mat A = random_matrix(F, rng, 3, 3);
  Mat B = random_matrix(F, rng, 2, 2);
  Mat K = kron(F, A, B);
  CHECK(K.rows == 6);
  CHECK(mat_trace(F, K) == F.mul(mat_trace(F, A), mat_trace(F, B)));
}

TEST_CASE("span builder agrees with batch rank") {
  Rng rng(16);
  for (int t = 0; t < 50; ++t) {
    std::vector<Vec> rows;
    int n = 5;
    for (int i = 0; i < 7; ++i) {
      Vec v(n);
      for (auto& x : v) x = rng.field_elt(F);
      rows.push_back(v);
    }
    SpanBuilder sb(F, n);
    for (const Vec& v : rows) sb.add(v);
    CHECK(sb.dim() == rank(F, rows_matrix(rows, n)));
    for (const Vec& v : rows) CHECK(sb.contains(v));
  }
}
