#pragma once

#include <functional>

#include "hopf/algebra.hpp"

namespace hopf {

/// Linear, cyclic trace on a StructureAlgebra, evaluated at a central point.
struct TraceFunction {
  enum class Kind { regular, custom };
  Kind kind = Kind::regular;
  std::function<Fe(const Vec&)> eval;

  Fe operator()(const Vec& x) const { return eval(x); }

  static TraceFunction regular(const StructureAlgebra& A);
  static TraceFunction custom(std::function<Fe(const Vec&)> fn);
};

/// Checks linearity and cyclicity (tr(xy) = tr(yx)) on all basis pairs.
bool verify_trace_function(const StructureAlgebra& A, const TraceFunction& tr);

/// Newton recurrence i*sigma_i = sum_{k=1..i} (-1)^{k-1} sigma_{i-k} psi_k,
/// valid since p > n. psi holds the power sums, lowest index first.
std::vector<Fe> power_sums_to_elementary(const PrimeField& F, const std::vector<Fe>& psi, int n);

/// Inverse direction, used by tests as the independent oracle.
std::vector<Fe> elementary_to_power_sums(const PrimeField& F, const std::vector<Fe>& sigma, int n);

struct CayleyHamiltonReport {
  bool pass = true;
  int degree = 0;
  std::string failure;  // description of the first violation
  Vec witness;          // the violating element, if any
  Vec residual;         // p_{n,a}(a) for the violating element

  explicit operator bool() const { return pass; }
};

/// Verifies tr(1) = n and p_{n,a}(a) = 0 on every basis element and `samples`
/// seeded random elements, with coefficients from power_sums_to_elementary.
CayleyHamiltonReport cayley_hamilton_check(const StructureAlgebra& A, const TraceFunction& tr,
                                           int n, int samples, Rng& rng);

/// The n x n matrix G[i][j] = tr(b_i b_j); symmetric by cyclicity.
Mat gram_matrix(const StructureAlgebra& A, const TraceFunction& tr);

struct DiscriminantReport {
  int gram_rank = 0;
  int lowest_vanishing_level = 0;  // gram_rank + 1
  int sd_crosscheck = 0;           // Wedderburn block sum
  bool agrees = false;             // gram_rank == sd_crosscheck
};

/// Rank of the trace Gram matrix at this fiber; every k x k minor of tuples of
/// algebra elements is a combination of minors of G, so the level-k ideals
/// vanish here exactly when rank G < k.
DiscriminantReport discriminant_level(const StructureAlgebra& A, const TraceFunction& tr,
                                      Rng& rng);

/// sd * |Stab(V)| == |G0| * dim(V)^2.
bool sd_formula_check(int fiber_sd, int stab_order, int g0_order, int dim_v);

}  // namespace hopf
