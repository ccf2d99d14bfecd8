#include "hopf/algebra.hpp"

#include <algorithm>
#include <map>

namespace hopf {

Fe StructureAlgebra::structure_constant(int i, int j, int k) const {
  for (const auto& [kk, v] : basis_product(i, j))
    if (kk == k) return v;
  return 0;
}

Vec StructureAlgebra::basis_vec(int i) const {
  Vec v(n_, 0);
  v[i] = 1;
  return v;
}

Vec StructureAlgebra::mul(const Vec& x, const Vec& y) const {
  Vec z(n_, 0);
  for (int i = 0; i < n_; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < n_; ++j) {
      if (y[j] == 0) continue;
      Fe xy = F_.mul(x[i], y[j]);
      for (const auto& [k, v] : basis_product(i, j)) z[k] = F_.add(z[k], F_.mul(xy, v));
    }
  }
  return z;
}

Vec StructureAlgebra::pow_elt(Vec x, std::uint64_t e) const {
  Vec r = unit_;
  while (e) {
    if (e & 1) r = mul(r, x);
    x = mul(x, x);
    e >>= 1;
  }
  return r;
}

Vec StructureAlgebra::inv_elt(const Vec& x) const {
  auto sol = solve_linear(F_, left_regular_matrix(x), unit_);
  return sol ? *sol : Vec{};
}

Mat StructureAlgebra::left_regular_matrix(const Vec& x) const {
  Mat L(n_, n_);
  for (int i = 0; i < n_; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < n_; ++j) {
      for (const auto& [k, v] : basis_product(i, j)) {
        // x b_j has coefficient x_i c_{ijk} on b_k: column j, row k
        L.at(k, j) = F_.add(L.at(k, j), F_.mul(x[i], v));
      }
    }
  }
  return L;
}

Fe StructureAlgebra::regular_trace(const Vec& x) const {
  Fe t = 0;
  for (int i = 0; i < n_; ++i)
    if (x[i] != 0) t = F_.add(t, F_.mul(x[i], basis_trace_[i]));
  return t;
}

StructureAlgebra build_algebra(const PrimeField& F, std::vector<std::string> labels,
                               std::vector<std::vector<std::pair<int, Fe>>> products, Vec unit,
                               bool verify) {
  StructureAlgebra A;
  A.F_ = F;
  A.n_ = static_cast<int>(labels.size());
  const int n = A.n_;
  if (products.size() != static_cast<size_t>(n) * n)
    throw Error("build_algebra: tensor shape mismatch");
  if (static_cast<int>(unit.size()) != n) throw Error("build_algebra: unit length mismatch");
  A.labels_ = std::move(labels);
  A.prod_ = std::move(products);
  A.unit_ = std::move(unit);

  if (verify) {
    // unit is a two-sided identity on every basis element
    for (int i = 0; i < n; ++i) {
      Vec b = A.basis_vec(i);
      if (A.mul(A.unit_, b) != b || A.mul(b, A.unit_) != b)
        throw Error("build_algebra: unit fails on basis element " + A.labels_[i]);
    }
    // associativity on all basis triples
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        Vec ij(n, 0);
        for (const auto& [k, v] : A.basis_product(i, j)) ij[k] = F.add(ij[k], v);
        for (int k = 0; k < n; ++k) {
          Vec lhs = A.mul(ij, A.basis_vec(k));
          Vec rhs = A.mul(A.basis_vec(i), A.mul(A.basis_vec(j), A.basis_vec(k)));
          if (lhs != rhs)
            throw Error("build_algebra: associativity fails at triple (" + A.labels_[i] + ", " +
                        A.labels_[j] + ", " + A.labels_[k] + ")");
        }
      }
    }
  }

  A.basis_trace_.assign(n, 0);
  for (int i = 0; i < n; ++i) {
    Fe t = 0;
    for (int j = 0; j < n; ++j) t = F.add(t, A.structure_constant(i, j, j));
    A.basis_trace_[i] = t;
  }
  return A;
}

StructureAlgebra build_algebra_dense(const PrimeField& F, std::vector<std::string> labels,
                                     const std::vector<Fe>& tensor, Vec unit, bool verify) {
  size_t n = labels.size();
  if (tensor.size() != n * n * n) throw Error("build_algebra: tensor shape mismatch");
  std::vector<std::vector<std::pair<int, Fe>>> prods(n * n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k) {
        Fe v = tensor[(i * n + j) * n + k];
        if (v != 0) prods[i * n + j].emplace_back(static_cast<int>(k), v);
      }
  return build_algebra(F, std::move(labels), std::move(prods), std::move(unit), verify);
}

StructureAlgebra change_basis(const StructureAlgebra& A, const Mat& T) {
  const PrimeField& F = A.field();
  int n = A.dim();
  auto Tinv = inverse(F, T);
  if (!Tinv) throw Error("change_basis: matrix not invertible");
  std::vector<std::vector<std::pair<int, Fe>>> prods(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    Vec bi(n, 0);
    for (int r = 0; r < n; ++r) bi[r] = T.at(r, i);
    for (int j = 0; j < n; ++j) {
      Vec bj(n, 0);
      for (int r = 0; r < n; ++r) bj[r] = T.at(r, j);
      Vec p = mat_apply(F, *Tinv, A.mul(bi, bj));
      for (int k = 0; k < n; ++k)
        if (p[k] != 0) prods[static_cast<size_t>(i) * n + j].emplace_back(k, p[k]);
    }
  }
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = "t" + std::to_string(i);
  return build_algebra(F, std::move(labels), std::move(prods), mat_apply(F, *Tinv, A.unit()),
                       false);
}

StructureAlgebra permute_basis(const StructureAlgebra& A, const std::vector<int>& perm) {
  int n = A.dim();
  std::vector<int> inv(n);
  for (int i = 0; i < n; ++i) inv[perm[i]] = i;
  std::vector<std::vector<std::pair<int, Fe>>> prods(static_cast<size_t>(n) * n);
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) {
    labels[i] = A.labels()[perm[i]];
    for (int j = 0; j < n; ++j) {
      auto& row = prods[static_cast<size_t>(i) * n + j];
      for (const auto& [k, v] : A.basis_product(perm[i], perm[j])) row.emplace_back(inv[k], v);
      std::sort(row.begin(), row.end());
    }
  }
  Vec unit(n);
  for (int i = 0; i < n; ++i) unit[i] = A.unit()[perm[i]];
  return build_algebra(A.field(), std::move(labels), std::move(prods), std::move(unit), false);
}

std::vector<Vec> radical(const StructureAlgebra& A) {
  const PrimeField& F = A.field();
  int n = A.dim();
  if (F.p() <= static_cast<std::uint64_t>(n))
    throw Error("radical: trace-form criterion needs p > dim");
  // kernel of the trace form G[i][j] = tr_reg(b_i b_j)
  Mat G(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Fe t = 0;
      for (const auto& [k, v] : A.basis_product(i, j))
        t = F.add(t, F.mul(v, A.regular_trace(A.basis_vec(k))));
      G.at(i, j) = t;
    }
  std::vector<Vec> rad = nullspace(F, G);

  // verify: two-sided ideal, every element nilpotent
  if (!rad.empty()) {
    SpanBuilder span(F, n);
    for (const Vec& r : rad) span.add(r);
    auto in_span = [&](const Vec& v) { return span.contains(v); };
    for (const Vec& r : rad) {
      Vec power = r;
      bool nil = false;
      for (int e = 0; e < n + 1; ++e) {
        if (std::all_of(power.begin(), power.end(), [](Fe x) { return x == 0; })) {
          nil = true;
          break;
        }
        power = A.mul(power, r);
      }
      if (!nil) throw InternalError("radical: non-nilpotent element in trace-form kernel");
      for (int i = 0; i < n; ++i) {
        if (!in_span(A.mul(A.basis_vec(i), r)) || !in_span(A.mul(r, A.basis_vec(i))))
          throw InternalError("radical: kernel is not a two-sided ideal");
      }
    }
  }
  return rad;
}

std::vector<Vec> center(const StructureAlgebra& A) {
  const PrimeField& F = A.field();
  int n = A.dim();
  // z central iff sum_j z_j (c[j][i][k] - c[i][j][k]) = 0 for all i, k
  Mat M(n * n, n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      for (const auto& [k, v] : A.basis_product(j, i))
        M.at(i * n + k, j) = F.add(M.at(i * n + k, j), v);
      for (const auto& [k, v] : A.basis_product(i, j))
        M.at(i * n + k, j) = F.sub(M.at(i * n + k, j), v);
    }
  }
  return nullspace(F, M);
}

namespace {

// quotient of A by the span of rad (a two-sided ideal): basis = non-pivot
// coordinates after row reduction of the ideal
struct Quotient {
  StructureAlgebra B;
  std::vector<int> coords;  // which A-coordinates survive
  Mat reducer;              // RREF rows spanning the ideal
  std::vector<int> pivots;

  Vec project(const StructureAlgebra& A, Vec x) const {
    const PrimeField& F = A.field();
    for (size_t r = 0; r < pivots.size(); ++r) {
      Fe f = x[pivots[r]];
      if (f == 0) continue;
      for (int j = 0; j < A.dim(); ++j)
        x[j] = F.sub(x[j], F.mul(f, reducer.at(static_cast<int>(r), j)));
    }
    Vec y(coords.size());
    for (size_t i = 0; i < coords.size(); ++i) y[i] = x[coords[i]];
    return y;
  }
};

Quotient quotient_by_ideal(const StructureAlgebra& A, const std::vector<Vec>& ideal) {
  const PrimeField& F = A.field();
  int n = A.dim();
  Quotient Q;
  Q.reducer = rows_matrix(ideal, n);
  Q.pivots = rref(F, Q.reducer);
  Q.reducer.rows = static_cast<int>(Q.pivots.size());
  Q.reducer.a.resize(static_cast<size_t>(Q.reducer.rows) * n);
  std::vector<bool> is_pivot(n, false);
  for (int c : Q.pivots) is_pivot[c] = true;
  for (int i = 0; i < n; ++i)
    if (!is_pivot[i]) Q.coords.push_back(i);

  int m = static_cast<int>(Q.coords.size());
  std::vector<std::string> labels(m);
  std::vector<std::vector<std::pair<int, Fe>>> prods(static_cast<size_t>(m) * m);
  for (int i = 0; i < m; ++i) labels[i] = A.labels()[Q.coords[i]];
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      Vec p = Q.project(A, A.mul(A.basis_vec(Q.coords[i]), A.basis_vec(Q.coords[j])));
      for (int k = 0; k < m; ++k)
        if (p[k] != 0) prods[static_cast<size_t>(i) * m + j].emplace_back(k, p[k]);
    }
  Q.B = build_algebra(F, std::move(labels), std::move(prods), Q.project(A, A.unit()), false);
  return Q;
}

}  // namespace

BlockReport wedderburn_blocks(const StructureAlgebra& A, Rng& rng) {
  const PrimeField& F = A.field();
  std::vector<Vec> rad = radical(A);
  Quotient Q = quotient_by_ideal(A, rad);
  const StructureAlgebra& B = Q.B;
  int nb = B.dim();

  BlockReport rep;
  rep.radical_dim = static_cast<int>(rad.size());

  std::vector<Vec> zb = center(B);
  int m = static_cast<int>(zb.size());

  // Split Z(B) by factoring minimal polynomials of random central elements.
  // Each element's spectral idempotents refine the current partition; the
  // partition is complete when it has dim Z(B) cells.
  std::vector<Vec> idem{B.unit()};
  for (int attempt = 0; attempt < 32 && static_cast<int>(idem.size()) < m; ++attempt) {
    Vec z(nb, 0);
    for (const Vec& zv : zb) {
      Fe c = rng.field_elt(F);
      for (int i = 0; i < nb; ++i) z[i] = F.add(z[i], F.mul(c, zv[i]));
    }
    Poly mp = minimal_polynomial(F, B.left_regular_matrix(z));
    Rng frng = rng.fork(0x66c0fac7 + attempt);
    LinearFactorization fac = factor_into_linears(F, mp, frng);
    if (!fac.split())
      throw NonSplitBlockError("central factor of degree " +
                               std::to_string(fac.nonsplit_degree()) +
                               " does not split over F_p");
    if (std::any_of(fac.roots.begin(), fac.roots.end(),
                    [](const auto& r) { return r.second > 1; }))
      throw InternalError("central element of the semisimple quotient has a repeated eigenvalue");
    // spectral idempotents of z by Lagrange interpolation
    std::vector<Vec> spectral;
    for (size_t i = 0; i < fac.roots.size(); ++i) {
      Vec e = B.unit();
      Fe denom = 1;
      for (size_t j = 0; j < fac.roots.size(); ++j) {
        if (j == i) continue;
        Vec zr = z;
        for (int t = 0; t < nb; ++t) zr[t] = F.sub(z[t], F.mul(fac.roots[j].first, B.unit()[t]));
        e = B.mul(e, zr);
        denom = F.mul(denom, F.sub(fac.roots[i].first, fac.roots[j].first));
      }
      Fe s = F.inv(denom);
      for (auto& x : e) x = F.mul(s, x);
      spectral.push_back(std::move(e));
    }
    std::vector<Vec> refined;
    for (const Vec& e : idem)
      for (const Vec& f : spectral) {
        Vec ef = B.mul(e, f);
        if (std::any_of(ef.begin(), ef.end(), [](Fe x) { return x != 0; }))
          refined.push_back(std::move(ef));
      }
    idem = std::move(refined);
  }
  if (static_cast<int>(idem.size()) != m)
    throw RetryExhaustedError("central splitting incomplete after 32 random elements");

  // orthogonality, completeness, centrality
  Vec total(nb, 0);
  for (size_t i = 0; i < idem.size(); ++i) {
    for (int t = 0; t < nb; ++t) total[t] = F.add(total[t], idem[i][t]);
    for (size_t j = 0; j < idem.size(); ++j) {
      Vec pij = B.mul(idem[i], idem[j]);
      if (pij != (i == j ? idem[i] : Vec(nb, 0)))
        throw InternalError("wedderburn: idempotents not orthogonal");
    }
    for (int g = 0; g < nb; ++g) {
      if (B.mul(idem[i], B.basis_vec(g)) != B.mul(B.basis_vec(g), idem[i]))
        throw InternalError("wedderburn: idempotent not central");
    }
  }
  if (total != B.unit()) throw InternalError("wedderburn: idempotents do not sum to 1");

  for (const Vec& e : idem) {
    int bd = rank(F, B.left_regular_matrix(e));
    int d = 0;
    while ((d + 1) * (d + 1) <= bd) ++d;
    if (d * d != bd)
      throw NonSplitBlockError("block dimension " + std::to_string(bd) +
                               " is not a perfect square; F_p is not a splitting field");
    rep.irreducible_dims.push_back(d);
    rep.sd += bd;
  }
  std::sort(rep.irreducible_dims.begin(), rep.irreducible_dims.end());

  if (rep.sd != nb || rep.sd != A.dim() - rep.radical_dim)
    throw InternalError("wedderburn: block sum disagrees with dim - radical_dim");
  return rep;
}

int square_dimension(const StructureAlgebra& A, Rng& rng) {
  BlockReport rep = wedderburn_blocks(A, rng);
  return rep.sd;
}

}  // namespace hopf
