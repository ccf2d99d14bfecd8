#include "hopf/rep.hpp"

#include <algorithm>

namespace hopf {

GeneratorRep GeneratorRep::from_character(const Character& chi, FiberPoint point) {
  GeneratorRep r;
  r.point = std::move(point);
  r.dim = 1;
  for (Fe v : chi.values) {
    Mat m(1, 1);
    m.at(0, 0) = v;
    r.gen.push_back(m);
  }
  return r;
}

bool check_relations(const PrimeField& F, const GeneratorRep& rep, const Presentation& P,
                     std::string* first_failure) {
  if (static_cast<int>(rep.gen.size()) != P.num_gens())
    throw Error("check_relations: generator count mismatch");
  for (const Mat& g : rep.gen)
    if (g.rows != rep.dim || g.cols != rep.dim)
      throw Error("check_relations: matrix dimension mismatch");
  for (int g = 0; g < P.num_gens(); ++g) {
    if (P.invertible[g] && !inverse(F, rep.gen[g])) {
      if (first_failure) *first_failure = "generator " + P.gen_names[g] + " not invertible";
      return false;
    }
  }
  for (const Relation& rel : P.relations) {
    Mat lhs = eval_word_matrix(F, rep.gen, rel.lhs, rep.dim);
    Mat rhs = eval_word_matrix(F, rep.gen, rel.rhs, rep.dim);
    if (!(lhs == rhs)) {
      if (first_failure) *first_failure = rel.name;
      return false;
    }
  }
  return true;
}

bool is_irreducible(const PrimeField& F, const GeneratorRep& rep) {
  int d = rep.dim;
  int d2 = d * d;
  // row space of the generated matrix subalgebra, closed breadth-first
  SpanBuilder span(F, d2);
  std::vector<Mat> frontier;
  auto add = [&](const Mat& M) {
    if (span.add(M.a)) frontier.push_back(M);
  };
  add(Mat::identity(d));
  size_t head = 0;
  while (head < frontier.size() && span.dim() < d2 + 1) {
    Mat cur = frontier[head++];
    for (const Mat& g : rep.gen) add(mat_mul(F, g, cur));
  }
  return span.dim() == d2;
}

HomSpace hom_space(const PrimeField& F, const GeneratorRep& V, const GeneratorRep& W) {
  if (V.gen.size() != W.gen.size()) throw Error("hom_space: generator count mismatch");
  if (V.point != W.point) throw Error("hom_space: modules live over different fibers");
  int dv = V.dim, dw = W.dim;
  int unknowns = dw * dv;  // X is dw x dv
  Mat sys(static_cast<int>(V.gen.size()) * unknowns, unknowns);
  int row = 0;
  for (size_t g = 0; g < V.gen.size(); ++g) {
    const Mat& A = V.gen[g];
    const Mat& B = W.gen[g];
    // X A - B X = 0, entry (i, j): sum_k X[i][k] A[k][j] - sum_k B[i][k] X[k][j]
    for (int i = 0; i < dw; ++i)
      for (int j = 0; j < dv; ++j) {
        for (int k = 0; k < dv; ++k)
          sys.at(row, i * dv + k) = F.add(sys.at(row, i * dv + k), A.at(k, j));
        for (int k = 0; k < dw; ++k)
          sys.at(row, k * dv + j) = F.sub(sys.at(row, k * dv + j), B.at(i, k));
        ++row;
      }
  }
  HomSpace H;
  for (const Vec& v : nullspace(F, sys)) {
    Mat X(dw, dv);
    X.a = v;
    H.basis.push_back(std::move(X));
  }
  return H;
}

int hom_dim(const PrimeField& F, const GeneratorRep& V, const GeneratorRep& W) {
  return hom_space(F, V, W).dim();
}

namespace {

Mat normalize_first_entry(const PrimeField& F, Mat X) {
  for (Fe v : X.a) {
    if (v != 0) {
      Fe s = F.inv(v);
      for (auto& x : X.a) x = F.mul(s, x);
      break;
    }
  }
  return X;
}

}  // namespace

std::optional<Mat> iso_witness(const PrimeField& F, const GeneratorRep& V, const GeneratorRep& W) {
  if (V.dim != W.dim) return std::nullopt;
  HomSpace H = hom_space(F, V, W);
  if (H.dim() == 0) return std::nullopt;
  const Mat& X = H.basis.front();
  if (!inverse(F, X))
    throw InternalError("singular intertwiner between irreducible modules");
  return normalize_first_entry(F, X);
}

bool is_isomorphic(const PrimeField& F, const GeneratorRep& V, const GeneratorRep& W) {
  if (!is_irreducible(F, V) || !is_irreducible(F, W))
    throw Error("is_isomorphic: inputs must be irreducible");
  return iso_witness(F, V, W).has_value();
}

GeneratorRep dual_rep(const PrimeField& F, const GeneratorRep& V, const HopfSymbolTable& T,
                      FiberPoint dual_point) {
  GeneratorRep D;
  D.point = std::move(dual_point);
  D.dim = V.dim;
  for (size_t g = 0; g < V.gen.size(); ++g)
    D.gen.push_back(transpose(eval_word_matrix(F, V.gen, T.antipode[g], V.dim)));
  return D;
}

GeneratorRep tensor_rep(const PrimeField& F, const GeneratorRep& V, const GeneratorRep& W,
                        const HopfSymbolTable& T, FiberPoint product_point) {
  GeneratorRep P;
  P.point = std::move(product_point);
  P.dim = V.dim * W.dim;
  for (size_t g = 0; g < T.coproduct.size(); ++g) {
    Mat acc(P.dim, P.dim);
    for (const auto& [left, right] : T.coproduct[g]) {
      Mat l = eval_word_matrix(F, V.gen, left, V.dim);
      Mat r = eval_word_matrix(F, W.gen, right, W.dim);
      acc = mat_add(F, acc, kron(F, l, r));
    }
    P.gen.push_back(std::move(acc));
  }
  return P;
}

GeneratorRep twist_by_character(const PrimeField& F, const Character& chi, const GeneratorRep& V,
                                const HopfSymbolTable& T) {
  GeneratorRep R;
  R.point = V.point;
  R.dim = V.dim;
  for (size_t g = 0; g < T.coproduct.size(); ++g) {
    Mat acc(V.dim, V.dim);
    for (const auto& [left, right] : T.coproduct[g]) {
      Fe c = eval_word_scalar(F, chi.values, left);
      if (c == 0) continue;
      acc = mat_add(F, acc, mat_scale(F, c, eval_word_matrix(F, V.gen, right, V.dim)));
    }
    R.gen.push_back(std::move(acc));
  }
  return R;
}

}  // namespace hopf
