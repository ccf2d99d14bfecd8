#include "hopf/trace.hpp"

#include <algorithm>

namespace hopf {

TraceFunction TraceFunction::regular(const StructureAlgebra& A) {
  TraceFunction t;
  t.kind = Kind::regular;
  t.eval = [&A](const Vec& x) { return A.regular_trace(x); };
  return t;
}

TraceFunction TraceFunction::custom(std::function<Fe(const Vec&)> fn) {
  TraceFunction t;
  t.kind = Kind::custom;
  t.eval = std::move(fn);
  return t;
}

bool verify_trace_function(const StructureAlgebra& A, const TraceFunction& tr) {
  const PrimeField& F = A.field();
  int n = A.dim();
  Rng rng(F.seed() ^ 0x7'ace);
  for (int rep = 0; rep < 8; ++rep) {
    Vec x(n), y(n);
    for (auto& v : x) v = rng.field_elt(F);
    for (auto& v : y) v = rng.field_elt(F);
    Fe lam = rng.field_elt(F);
    Vec xly(n);
    for (int i = 0; i < n; ++i) xly[i] = F.add(x[i], F.mul(lam, y[i]));
    if (tr(xly) != F.add(tr(x), F.mul(lam, tr(y)))) return false;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Vec bi = A.basis_vec(i), bj = A.basis_vec(j);
      if (tr(A.mul(bi, bj)) != tr(A.mul(bj, bi))) return false;
    }
  return true;
}

std::vector<Fe> power_sums_to_elementary(const PrimeField& F, const std::vector<Fe>& psi, int n) {
  if (static_cast<int>(psi.size()) < n)
    throw Error("power_sums_to_elementary: need at least n power sums");
  if (F.p() <= static_cast<std::uint64_t>(n))
    throw Error("power_sums_to_elementary: needs p > n for the Newton divisions");
  std::vector<Fe> sigma(n + 1, 0);
  sigma[0] = 1;
  for (int i = 1; i <= n; ++i) {
    Fe acc = 0;
    for (int k = 1; k <= i; ++k) {
      Fe term = F.mul(sigma[i - k], psi[k - 1]);
      acc = (k % 2 == 1) ? F.add(acc, term) : F.sub(acc, term);
    }
    sigma[i] = F.mul(acc, F.inv(F.from_int(i)));
  }
  return std::vector<Fe>(sigma.begin() + 1, sigma.end());
}

std::vector<Fe> elementary_to_power_sums(const PrimeField& F, const std::vector<Fe>& sigma,
                                         int n) {
  // psi_i = i*(-1)^{i-1} sigma_i + sum_{k=1..i-1} (-1)^{k-1} sigma_k psi_{i-k}
  std::vector<Fe> psi(n + 1, 0);
  auto sig = [&](int i) -> Fe {
    if (i == 0) return 1;
    return i <= static_cast<int>(sigma.size()) ? sigma[i - 1] : 0;
  };
  for (int i = 1; i <= n; ++i) {
    Fe acc = F.mul(F.from_int(i), sig(i));
    acc = (i % 2 == 1) ? acc : F.neg(acc);
    for (int k = 1; k < i; ++k) {
      Fe term = F.mul(sig(k), psi[i - k]);
      acc = (k % 2 == 1) ? F.add(acc, term) : F.sub(acc, term);
    }
    psi[i] = acc;
  }
  return std::vector<Fe>(psi.begin() + 1, psi.end());
}

namespace {

// p_{n,a}(a) with c_i from the traces of powers of a
Vec characteristic_residual(const StructureAlgebra& A, const TraceFunction& tr, int n,
                            const Vec& a) {
  const PrimeField& F = A.field();
  std::vector<Fe> psi(n);
  Vec power = A.unit();
  for (int i = 1; i <= n; ++i) {
    power = A.mul(power, a);
    psi[i - 1] = tr(power);
  }
  std::vector<Fe> sigma = power_sums_to_elementary(F, psi, n);
  // p(t) = t^n - c_1 t^{n-1} + ... + (-1)^n c_n, evaluated at a by Horner
  Vec r = A.unit();
  for (int i = 1; i <= n; ++i) {
    r = A.mul(r, a);
    Fe ci = (i % 2 == 1) ? F.neg(sigma[i - 1]) : sigma[i - 1];
    for (int t = 0; t < A.dim(); ++t) r[t] = F.add(r[t], F.mul(ci, A.unit()[t]));
  }
  return r;
}

}  // namespace

CayleyHamiltonReport cayley_hamilton_check(const StructureAlgebra& A, const TraceFunction& tr,
                                           int n, int samples, Rng& rng) {
  const PrimeField& F = A.field();
  CayleyHamiltonReport rep;
  rep.degree = n;
  if (F.p() <= static_cast<std::uint64_t>(n)) throw Error("cayley_hamilton_check: needs p > n");

  if (tr(A.unit()) != F.from_int(n)) {
    rep.pass = false;
    rep.failure = "tr(1) != " + std::to_string(n);
    rep.witness = A.unit();
    return rep;
  }
  auto test = [&](const Vec& a, const std::string& what) {
    Vec res = characteristic_residual(A, tr, n, a);
    if (std::any_of(res.begin(), res.end(), [](Fe x) { return x != 0; })) {
      rep.pass = false;
      rep.failure = "characteristic polynomial does not annihilate " + what;
      rep.witness = a;
      rep.residual = res;
      return false;
    }
    return true;
  };
  for (int i = 0; i < A.dim(); ++i) {
    if (!test(A.basis_vec(i), "basis element " + A.labels()[i])) return rep;
  }
  for (int s = 0; s < samples; ++s) {
    Vec a(A.dim());
    for (auto& v : a) v = rng.field_elt(F);
    if (!test(a, "random element #" + std::to_string(s))) return rep;
  }
  return rep;
}

Mat gram_matrix(const StructureAlgebra& A, const TraceFunction& tr) {
  int n = A.dim();
  Mat G(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) G.at(i, j) = tr(A.mul(A.basis_vec(i), A.basis_vec(j)));
  return G;
}

DiscriminantReport discriminant_level(const StructureAlgebra& A, const TraceFunction& tr,
                                      Rng& rng) {
  DiscriminantReport rep;
  rep.gram_rank = rank(A.field(), gram_matrix(A, tr));
  rep.lowest_vanishing_level = rep.gram_rank + 1;
  rep.sd_crosscheck = square_dimension(A, rng);
  rep.agrees = (rep.gram_rank == rep.sd_crosscheck);
  return rep;
}

bool sd_formula_check(int fiber_sd, int stab_order, int g0_order, int dim_v) {
  return static_cast<long long>(fiber_sd) * stab_order ==
         static_cast<long long>(g0_order) * dim_v * dim_v;
}

}  // namespace hopf
