#include "hopf/poly.hpp"

#include <algorithm>

namespace hopf {

Poly poly_add(const PrimeField& F, const Poly& f, const Poly& g) {
  std::vector<Fe> c(std::max(f.c.size(), g.c.size()), 0);
  for (size_t i = 0; i < c.size(); ++i) {
    Fe a = i < f.c.size() ? f.c[i] : 0;
    Fe b = i < g.c.size() ? g.c[i] : 0;
    c[i] = F.add(a, b);
  }
  return Poly(std::move(c));
}

Poly poly_sub(const PrimeField& F, const Poly& f, const Poly& g) {
  std::vector<Fe> c(std::max(f.c.size(), g.c.size()), 0);
  for (size_t i = 0; i < c.size(); ++i) {
    Fe a = i < f.c.size() ? f.c[i] : 0;
    Fe b = i < g.c.size() ? g.c[i] : 0;
    c[i] = F.sub(a, b);
  }
  return Poly(std::move(c));
}

Poly poly_mul(const PrimeField& F, const Poly& f, const Poly& g) {
  if (f.is_zero() || g.is_zero()) return Poly();
  std::vector<Fe> c(f.c.size() + g.c.size() - 1, 0);
  for (size_t i = 0; i < f.c.size(); ++i) {
    if (f.c[i] == 0) continue;
    for (size_t j = 0; j < g.c.size(); ++j)
      c[i + j] = F.add(c[i + j], F.mul(f.c[i], g.c[j]));
  }
  return Poly(std::move(c));
}

Poly poly_scale(const PrimeField& F, Fe s, const Poly& f) {
  std::vector<Fe> c(f.c.size());
  for (size_t i = 0; i < c.size(); ++i) c[i] = F.mul(s, f.c[i]);
  return Poly(std::move(c));
}

std::pair<Poly, Poly> poly_divmod(const PrimeField& F, const Poly& f, const Poly& g) {
  if (g.is_zero()) throw InternalError("poly_divmod: division by zero polynomial");
  Poly r = f;
  if (f.degree() < g.degree()) return {Poly(), r};
  std::vector<Fe> q(f.degree() - g.degree() + 1, 0);
  Fe glead_inv = F.inv(g.leading());
  while (!r.is_zero() && r.degree() >= g.degree()) {
    int shift = r.degree() - g.degree();
    Fe coef = F.mul(r.leading(), glead_inv);
    q[shift] = coef;
    for (size_t i = 0; i < g.c.size(); ++i) {
      size_t k = i + shift;
      r.c[k] = F.sub(r.c[k], F.mul(coef, g.c[i]));
    }
    r.trim();
  }
  return {Poly(std::move(q)), r};
}

Poly poly_mod(const PrimeField& F, const Poly& f, const Poly& g) {
  return poly_divmod(F, f, g).second;
}

Poly poly_gcd(const PrimeField& F, Poly f, Poly g) {
  while (!g.is_zero()) {
    Poly r = poly_mod(F, f, g);
    f = std::move(g);
    g = std::move(r);
  }
  return poly_monic(F, f);
}

Poly poly_derivative(const PrimeField& F, const Poly& f) {
  if (f.degree() < 1) return Poly();
  std::vector<Fe> c(f.c.size() - 1);
  for (size_t i = 1; i < f.c.size(); ++i) c[i - 1] = F.mul(F.from_int(static_cast<long long>(i)), f.c[i]);
  return Poly(std::move(c));
}

Poly poly_monic(const PrimeField& F, const Poly& f) {
  if (f.is_zero() || f.leading() == 1) return f;
  return poly_scale(F, F.inv(f.leading()), f);
}

Fe poly_eval(const PrimeField& F, const Poly& f, Fe x) {
  Fe r = 0;
  for (size_t i = f.c.size(); i-- > 0;) r = F.add(F.mul(r, x), f.c[i]);
  return r;
}

Mat poly_eval_matrix(const PrimeField& F, const Poly& f, const Mat& M) {
  int n = M.rows;
  Mat r(n, n);
  for (size_t i = f.c.size(); i-- > 0;) {
    r = mat_mul(F, r, M);
    for (int d = 0; d < n; ++d) r.at(d, d) = F.add(r.at(d, d), f.c[i]);
  }
  return r;
}

Poly poly_powmod(const PrimeField& F, Poly base, std::uint64_t e, const Poly& g) {
  Poly r = Poly::constant(1);
  base = poly_mod(F, base, g);
  while (e) {
    if (e & 1) r = poly_mod(F, poly_mul(F, r, base), g);
    base = poly_mod(F, poly_mul(F, base, base), g);
    e >>= 1;
  }
  return r;
}

namespace {

// Monic annihilator of v under M: least-degree g with g(M)v = 0, found by the
// first linear dependency in the Krylov sequence v, Mv, M^2 v, ...
Poly krylov_annihilator(const PrimeField& F, const Mat& M, const Vec& v) {
  int n = M.rows;
  std::vector<Vec> seq;
  Vec cur = v;
  for (int d = 0; d <= n; ++d) {
    // check if cur depends on seq: solve [seq columns] x = cur
    Mat A(n, static_cast<int>(seq.size()));
    for (int i = 0; i < n; ++i)
      for (size_t j = 0; j < seq.size(); ++j) A.at(i, static_cast<int>(j)) = seq[j][i];
    if (auto x = solve_linear(F, A, cur)) {
      std::vector<Fe> coeffs(seq.size() + 1, 0);
      for (size_t j = 0; j < seq.size(); ++j) coeffs[j] = F.neg((*x)[j]);
      coeffs[seq.size()] = 1;
      return Poly(std::move(coeffs));
    }
    seq.push_back(cur);
    cur = mat_apply(F, M, cur);
  }
  throw InternalError("krylov_annihilator: no dependency in n+1 steps");
}

Poly poly_lcm(const PrimeField& F, const Poly& f, const Poly& g) {
  if (f.is_zero() || g.is_zero()) return Poly();
  Poly d = poly_gcd(F, f, g);
  return poly_monic(F, poly_divmod(F, poly_mul(F, f, g), d).first);
}

}  // namespace

Poly minimal_polynomial(const PrimeField& F, const Mat& M) {
  if (M.rows != M.cols) throw InternalError("minimal_polynomial: not square");
  int n = M.rows;
  if (n == 0) return Poly::constant(1);
  Poly m = Poly::constant(1);
  for (int i = 0; i < n && m.degree() < n; ++i) {
    Vec e(n, 0);
    e[i] = 1;
    // skip the basis vector if m already annihilates it
    Vec w = mat_apply(F, poly_eval_matrix(F, m, M), e);
    if (std::all_of(w.begin(), w.end(), [](Fe x) { return x == 0; })) continue;
    m = poly_lcm(F, m, krylov_annihilator(F, M, e));
  }
  return m;
}

namespace {

// All distinct roots of a monic squarefree product of linear factors,
// via seeded equal-degree splitting (degree 1). p odd unless brute-forced.
void split_roots(const PrimeField& F, const Poly& g, Rng& rng, std::vector<Fe>& out) {
  if (g.degree() <= 0) return;
  if (g.degree() == 1) {
    out.push_back(F.neg(g.c[0]));  // monic: x + c0
    return;
  }
  if (F.p() <= 64) {
    for (Fe r = 0; r < F.p(); ++r)
      if (poly_eval(F, g, r) == 0) out.push_back(r);
    return;
  }
  for (int tries = 0; tries < 128; ++tries) {
    Fe a = rng.field_elt(F);
    Poly shifted({a, 1});
    Poly h = poly_powmod(F, shifted, (F.p() - 1) / 2, g);
    h.c.resize(std::max<size_t>(h.c.size(), 1), 0);
    h.c[0] = F.sub(h.c[0], 1);
    h.trim();
    Poly d = poly_gcd(F, h, g);
    if (d.degree() > 0 && d.degree() < g.degree()) {
      split_roots(F, d, rng, out);
      split_roots(F, poly_monic(F, poly_divmod(F, g, d).first), rng, out);
      return;
    }
  }
  throw RetryExhaustedError("equal-degree splitting did not separate roots");
}

}  // namespace

LinearFactorization factor_into_linears(const PrimeField& F, const Poly& f, Rng& rng) {
  if (f.is_zero()) throw Error("factor_into_linears: zero polynomial");
  LinearFactorization out;
  out.lead = f.leading();
  out.cofactor = Poly::constant(1);
  Poly g = poly_monic(F, f);
  if (g.degree() == 0) return out;

  // squarefree decomposition (Yun); valid since deg f < p in all our uses
  std::vector<Poly> sqfree;  // sqfree[i] has multiplicity i+1
  {
    Poly d = poly_derivative(F, g);
    if (d.is_zero()) throw Error("factor_into_linears: derivative vanished (degree >= p)");
    Poly a = poly_gcd(F, g, d);
    Poly b = poly_divmod(F, g, a).first;
    Poly c = poly_divmod(F, d, a).first;
    Poly z = poly_sub(F, c, poly_derivative(F, b));
    while (b.degree() > 0) {
      Poly s = poly_gcd(F, b, z);
      sqfree.push_back(s);
      b = poly_divmod(F, b, s).first;
      z = poly_divmod(F, z, s).first;
      z = poly_sub(F, z, poly_derivative(F, b));
    }
  }

  for (size_t i = 0; i < sqfree.size(); ++i) {
    const Poly& s = sqfree[i];
    if (s.degree() <= 0) continue;
    int mult = static_cast<int>(i) + 1;
    // roots in F_p are exactly the common factors with x^p - x
    Poly xp = poly_powmod(F, Poly({0, 1}), F.p(), s);
    Poly xpmx = poly_sub(F, xp, Poly({0, 1}));
    Poly lin = poly_gcd(F, xpmx, s);
    std::vector<Fe> roots;
    split_roots(F, lin, rng, roots);
    for (Fe r : roots) out.roots.emplace_back(r, mult);
    Poly rest = poly_monic(F, poly_divmod(F, s, lin).first);
    for (int k = 0; k < mult; ++k) out.cofactor = poly_mul(F, out.cofactor, rest);
  }
  std::sort(out.roots.begin(), out.roots.end());
  return out;
}

}  // namespace hopf
