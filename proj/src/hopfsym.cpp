#include "hopf/hopfsym.hpp"

#include <algorithm>

namespace hopf {

void verify_hopf_table(const StructureAlgebra& A, const Presentation& P,
                       const HopfSymbolTable& T) {
  const PrimeField& F = A.field();
  for (int g = 0; g < P.num_gens(); ++g) {
    // (counit ⊗ id) Delta(g) = g
    Vec acc(A.dim(), 0);
    for (const auto& [left, right] : T.coproduct[g]) {
      Fe c = eval_word_scalar(F, T.counit, left);
      if (c == 0) continue;
      Vec r = eval_word_element(A, P, right);
      for (int i = 0; i < A.dim(); ++i) acc[i] = F.add(acc[i], F.mul(c, r[i]));
    }
    if (acc != P.gen_vectors[g])
      throw Error("hopf table: counit axiom fails on generator " + P.gen_names[g]);
  }
}

std::vector<Character> enumerate_characters(const PrimeField& F, const Presentation& P,
                                            const std::vector<std::vector<Fe>>& candidates) {
  std::vector<Character> out;
  if (candidates.size() != static_cast<size_t>(P.num_gens()))
    throw Error("enumerate_characters: candidate list shape mismatch");
  std::vector<Fe> values(P.num_gens());
  auto walk = [&](auto&& self, int g) -> void {
    if (g == P.num_gens()) {
      if (scalars_satisfy_relations(F, P, values)) out.push_back(Character{values});
      return;
    }
    for (Fe v : candidates[g]) {
      values[g] = v;
      self(self, g + 1);
    }
  };
  walk(walk, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Word> winding(const PrimeField& F, const Character& chi, Side side,
                          const HopfSymbolTable& T) {
  std::vector<Word> images;
  for (size_t g = 0; g < T.coproduct.size(); ++g) {
    std::optional<Word> image;
    for (const auto& [left, right] : T.coproduct[g]) {
      const Word& applied = (side == Side::left) ? left : right;
      const Word& kept = (side == Side::left) ? right : left;
      Fe c = eval_word_scalar(F, chi.values, applied);
      if (c == 0) continue;
      if (image) throw Error("winding: generator image is not a single scaled word");
      image = kept.scaled(F, c);
    }
    if (!image) throw Error("winding: generator image vanished (invalid character)");
    images.push_back(*image);
  }
  return images;
}

void verify_winding_automorphism(const StructureAlgebra& A, const Presentation& P,
                                 const std::vector<Word>& images) {
  const PrimeField& F = A.field();
  // substitute the images into each relation and compare inside the fiber
  auto eval_through = [&](const Word& w) {
    Vec r = A.unit();
    for (auto& x : r) x = F.mul(w.coeff, x);
    for (const WordFactor& f : w.factors) {
      Vec img = eval_word_element(A, P, images[static_cast<size_t>(f.gen)].powered(F, f.exp));
      r = A.mul(r, img);
    }
    return r;
  };
  for (const Relation& rel : P.relations) {
    if (eval_through(rel.lhs) != eval_through(rel.rhs))
      throw Error("winding image violates relation " + rel.name);
  }
}

Stabilizer stabilizer(const PrimeField& F, const GeneratorRep& V,
                      const std::vector<Character>& g0, const HopfSymbolTable& T) {
  Stabilizer s;
  for (size_t i = 0; i < g0.size(); ++i) {
    GeneratorRep tw = twist_by_character(F, g0[i], V, T);
    if (auto w = iso_witness(F, tw, V)) {
      s.members.push_back(static_cast<int>(i));
      s.witness.push_back(*w);
    }
  }
  // closure under the group law
  for (int i : s.members)
    for (int j : s.members) {
      Character prod = char_product(F, g0[static_cast<size_t>(i)], g0[static_cast<size_t>(j)]);
      bool found = false;
      for (int k : s.members)
        if (g0[static_cast<size_t>(k)] == prod) {
          found = true;
          break;
        }
      if (!found) throw InternalError("stabilizer: member set not closed under the group law");
    }
  return s;
}

bool is_maximally_stable(const GeneratorRep& V, const Stabilizer& stab) {
  long long bound = static_cast<long long>(V.dim) * V.dim;
  long long order = static_cast<long long>(stab.members.size());
  if (order > bound)
    throw InternalError("stabilizer order exceeds dim^2; contradiction with the module bound");
  return order == bound;
}

namespace {

int group_index(const std::vector<Character>& group, const Character& c) {
  for (size_t i = 0; i < group.size(); ++i)
    if (group[i] == c) return static_cast<int>(i);
  return -1;
}

// the unique scalar with A = s * B, for nonzero proportional matrices
Fe proportionality(const PrimeField& F, const Mat& A, const Mat& B) {
  Fe s = 0;
  for (size_t t = 0; t < B.a.size(); ++t) {
    if (B.a[t] != 0) {
      s = F.mul(A.a[t], F.inv(B.a[t]));
      break;
    }
  }
  Mat diff = mat_sub(F, A, mat_scale(F, s, B));
  if (!is_zero(diff)) throw Error("witness products are not proportional to the expected witness");
  return s;
}

}  // namespace

int CocycleTable::identity_index() const {
  int id = -1;
  for (int i = 0; i < size(); ++i)
    if (mult[static_cast<size_t>(i)][static_cast<size_t>(i)] == i) {
      if (id >= 0) throw Error("cocycle: multiple idempotent group elements");
      id = i;
    }
  if (id < 0) throw Error("cocycle: group table has no identity");
  return id;
}

CocycleTable extract_cocycle(const PrimeField& F, const GeneratorRep& V, const Stabilizer& stab,
                             const std::vector<Character>& g0) {
  size_t n = stab.members.size();
  CocycleTable T;
  for (int m : stab.members) T.group.push_back(g0[static_cast<size_t>(m)]);
  T.element_names.resize(n);
  for (size_t i = 0; i < n; ++i) T.element_names[i] = "chi" + std::to_string(i);
  T.mult.assign(n, std::vector<int>(n, -1));
  T.gamma.assign(n, std::vector<Fe>(n, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      int k = group_index(T.group, char_product(F, T.group[i], T.group[j]));
      if (k < 0) throw InternalError("extract_cocycle: stabilizer not closed");
      T.mult[i][j] = k;
      Mat prod = mat_mul(F, stab.witness[i], stab.witness[j]);
      T.gamma[i][j] = proportionality(F, prod, stab.witness[static_cast<size_t>(k)]);
    }

  validate_cocycle(F, T);

  // the witnesses are always linearly independent (they pick out distinct
  // character lines inside V (x) V*)
  SpanBuilder span(F, V.dim * V.dim);
  for (const Mat& w : stab.witness)
    if (!span.add(w.a)) throw InternalError("extract_cocycle: witnesses linearly dependent");
  return T;
}

void validate_cocycle(const PrimeField& F, const CocycleTable& T) {
  size_t n = T.mult.size();
  size_t id = static_cast<size_t>(T.identity_index());
  for (size_t i = 0; i < n; ++i) {
    if (T.gamma[id][i] != 1 || T.gamma[i][id] != 1)
      throw Error("cocycle: not normalized at element " + std::to_string(i));
  }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k) {
        // gamma(i,j) gamma(ij,k) = gamma(j,k) gamma(i,jk)
        Fe lhs = F.mul(T.gamma[i][j], T.gamma[static_cast<size_t>(T.mult[i][j])][k]);
        Fe rhs = F.mul(T.gamma[j][k], T.gamma[i][static_cast<size_t>(T.mult[j][k])]);
        if (lhs != rhs)
          throw Error("cocycle identity fails on triple (" + std::to_string(i) + ", " +
                      std::to_string(j) + ", " + std::to_string(k) + ")");
      }
}

StructureAlgebra twisted_group_algebra(const PrimeField& F, const CocycleTable& T,
                                       const std::string& label_prefix) {
  size_t n = T.mult.size();
  std::vector<std::string> labels(n);
  std::vector<std::vector<std::pair<int, Fe>>> prods(n * n);
  for (size_t i = 0; i < n; ++i) {
    labels[i] = i < T.element_names.size() && !T.element_names[i].empty()
                    ? T.element_names[i]
                    : label_prefix + std::to_string(i);
  }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      prods[i * n + j].emplace_back(T.mult[i][j], T.gamma[i][j]);
  Vec unit(n, 0);
  unit[static_cast<size_t>(T.identity_index())] = 1;
  return build_algebra(F, std::move(labels), std::move(prods), std::move(unit));
}

bool verify_primitive_quotient(const PrimeField& F, const GeneratorRep& V,
                               const Stabilizer& stab, const CocycleTable& T, Rng& rng,
                               std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  size_t n = T.mult.size();
  if (n != static_cast<size_t>(V.dim) * V.dim)
    return fail("stabilizer order differs from dim(V)^2");

  // chi -> L_chi is an algebra map from the twisted group algebra
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      Mat lhs = mat_mul(F, stab.witness[i], stab.witness[j]);
      Mat rhs = mat_scale(F, T.gamma[i][j], stab.witness[static_cast<size_t>(T.mult[i][j])]);
      if (!(lhs == rhs)) return fail("witness map is not an algebra map");
    }
  // injective: the witnesses are linearly independent
  SpanBuilder span(F, V.dim * V.dim);
  for (const Mat& w : stab.witness)
    if (!span.add(w.a)) return fail("witnesses are linearly dependent");

  // algebra-level consequence: one matrix block of size dim(V)
  StructureAlgebra twisted = twisted_group_algebra(F, T);
  BlockReport rep = wedderburn_blocks(twisted, rng);
  if (rep.radical_dim != 0) return fail("twisted group algebra has a radical");
  if (rep.irreducible_dims != std::vector<int>{V.dim})
    return fail("twisted group algebra is not a single block of size dim(V)");
  return true;
}

std::vector<int> tensor_character_multiplicities(const PrimeField& F,
                                                 const GeneratorRep& v_tensor_vdual,
                                                 const std::vector<Character>& g0) {
  std::vector<int> mult;
  mult.reserve(g0.size());
  for (const Character& chi : g0) {
    GeneratorRep one = GeneratorRep::from_character(chi, v_tensor_vdual.point);
    mult.push_back(hom_dim(F, one, v_tensor_vdual));
  }
  return mult;
}

}  // namespace hopf
