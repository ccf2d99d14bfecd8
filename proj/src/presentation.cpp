#include "hopf/presentation.hpp"

namespace hopf {

Word Word::times(const PrimeField& F, const Word& o) const {
  Word r;
  r.coeff = F.mul(coeff, o.coeff);
  r.factors = factors;
  r.factors.insert(r.factors.end(), o.factors.begin(), o.factors.end());
  return r;
}

Word Word::powered(const PrimeField& F, int e) const {
  Word r;
  if (e == 0) return r;
  int n = e > 0 ? e : -e;
  Fe c = F.pow(coeff, static_cast<std::uint64_t>(n));
  if (e < 0) c = F.inv(c);
  r.coeff = c;
  if (e > 0) {
    for (int i = 0; i < n; ++i) r.factors.insert(r.factors.end(), factors.begin(), factors.end());
  } else {
    for (int i = 0; i < n; ++i)
      for (auto it = factors.rbegin(); it != factors.rend(); ++it)
        r.factors.push_back({it->gen, -it->exp});
  }
  return r;
}

Mat eval_word_matrix(const PrimeField& F, const std::vector<Mat>& gens, const Word& w, int dim) {
  Mat r = mat_scale(F, w.coeff, Mat::identity(dim));
  for (const WordFactor& f : w.factors) {
    const Mat& G = gens.at(static_cast<size_t>(f.gen));
    if (f.exp >= 0) {
      r = mat_mul(F, r, mat_pow(F, G, static_cast<std::uint64_t>(f.exp)));
    } else {
      auto Gi = inverse(F, G);
      if (!Gi) throw Error("eval_word_matrix: generator matrix not invertible");
      r = mat_mul(F, r, mat_pow(F, *Gi, static_cast<std::uint64_t>(-f.exp)));
    }
  }
  return r;
}

Vec eval_word_element(const StructureAlgebra& A, const Presentation& P, const Word& w) {
  const PrimeField& F = A.field();
  Vec r = A.unit();
  for (auto& x : r) x = F.mul(w.coeff, x);
  for (const WordFactor& f : w.factors) {
    const Vec& g = P.gen_vectors.at(static_cast<size_t>(f.gen));
    Vec gp;
    if (f.exp >= 0) {
      gp = A.pow_elt(g, static_cast<std::uint64_t>(f.exp));
    } else {
      Vec gi = A.inv_elt(g);
      if (gi.empty()) throw Error("eval_word_element: generator not invertible in the fiber");
      gp = A.pow_elt(gi, static_cast<std::uint64_t>(-f.exp));
    }
    r = A.mul(r, gp);
  }
  return r;
}

Fe eval_word_scalar(const PrimeField& F, const std::vector<Fe>& values, const Word& w) {
  Fe r = w.coeff;
  for (const WordFactor& f : w.factors) {
    Fe v = values.at(static_cast<size_t>(f.gen));
    if (f.exp >= 0) {
      r = F.mul(r, F.pow(v, static_cast<std::uint64_t>(f.exp)));
    } else {
      r = F.mul(r, F.pow(F.inv(v), static_cast<std::uint64_t>(-f.exp)));
    }
  }
  return r;
}

bool scalars_satisfy_relations(const PrimeField& F, const Presentation& P,
                               const std::vector<Fe>& values) {
  for (const Relation& rel : P.relations) {
    bool lhs_invertible_ok = true;
    // a relation word with negative exponents needs a nonzero base value
    for (const Word* w : {&rel.lhs, &rel.rhs})
      for (const WordFactor& f : w->factors)
        if (f.exp < 0 && values[static_cast<size_t>(f.gen)] == 0) lhs_invertible_ok = false;
    if (!lhs_invertible_ok) return false;
    if (eval_word_scalar(F, values, rel.lhs) != eval_word_scalar(F, values, rel.rhs)) return false;
  }
  return true;
}

Character char_product(const PrimeField& F, const Character& a, const Character& b) {
  Character r;
  r.values.resize(a.values.size());
  for (size_t i = 0; i < a.values.size(); ++i) r.values[i] = F.mul(a.values[i], b.values[i]);
  return r;
}

Character char_inverse(const PrimeField& F, const HopfSymbolTable& T, const Character& chi) {
  Character r;
  r.values.resize(chi.values.size());
  for (size_t i = 0; i < chi.values.size(); ++i)
    r.values[i] = eval_word_scalar(F, chi.values, T.antipode[i]);
  return r;
}

Character counit_character(const HopfSymbolTable& T) { return Character{T.counit}; }

}  // namespace hopf
