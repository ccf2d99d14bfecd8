#pragma once

#include <utility>
#include <vector>

#include "hopf/linalg.hpp"

namespace hopf {

/// Univariate polynomial over F_p, coefficients lowest degree first.
/// Invariant: leading coefficient nonzero unless the polynomial is zero
/// (represented by an empty coefficient vector).
struct Poly {
  std::vector<Fe> c;

  Poly() = default;
  explicit Poly(std::vector<Fe> coeffs) : c(std::move(coeffs)) { trim(); }

  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  Fe leading() const { return c.empty() ? 0 : c.back(); }
  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  bool operator==(const Poly& o) const = default;

  static Poly constant(Fe v) { return Poly({v}); }
  static Poly x_minus(const PrimeField& F, Fe r) { return Poly({F.neg(r), 1}); }
};

Poly poly_add(const PrimeField& F, const Poly& f, const Poly& g);
Poly poly_sub(const PrimeField& F, const Poly& f, const Poly& g);
Poly poly_mul(const PrimeField& F, const Poly& f, const Poly& g);
Poly poly_scale(const PrimeField& F, Fe s, const Poly& f);
/// (quotient, remainder) with g nonzero.
std::pair<Poly, Poly> poly_divmod(const PrimeField& F, const Poly& f, const Poly& g);
Poly poly_mod(const PrimeField& F, const Poly& f, const Poly& g);
/// Monic gcd.
Poly poly_gcd(const PrimeField& F, Poly f, Poly g);
Poly poly_derivative(const PrimeField& F, const Poly& f);
Poly poly_monic(const PrimeField& F, const Poly& f);
Fe poly_eval(const PrimeField& F, const Poly& f, Fe x);
/// f(M) for a square matrix M.
Mat poly_eval_matrix(const PrimeField& F, const Poly& f, const Mat& M);
/// base^e mod g.
Poly poly_powmod(const PrimeField& F, Poly base, std::uint64_t e, const Poly& g);

/// Monic polynomial of least degree annihilating the square matrix M.
Poly minimal_polynomial(const PrimeField& F, const Mat& M);

/// Result of splitting off linear factors: f = lead * prod (x-r)^mult * cofactor,
/// where cofactor is monic with no roots in F_p (1 when f splits completely).
struct LinearFactorization {
  std::vector<std::pair<Fe, int>> roots;  // (root, multiplicity), sorted by root
  Poly cofactor;                          // monic, rootless
  Fe lead = 1;

  bool split() const { return cofactor.degree() <= 0; }
  int nonsplit_degree() const { return cofactor.degree() <= 0 ? 0 : cofactor.degree(); }
};

/// Squarefree decomposition plus seeded equal-degree splitting.
LinearFactorization factor_into_linears(const PrimeField& F, const Poly& f, Rng& rng);

}  // namespace hopf
