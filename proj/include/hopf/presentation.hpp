#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hopf/algebra.hpp"

namespace hopf {

/// coeff * prod_i gen[i]^exp[i]; negative exponents are allowed on
/// invertible generators.
struct WordFactor {
  int gen = 0;
  int exp = 1;
};

struct Word {
  Fe coeff = 1;
  std::vector<WordFactor> factors;

  static Word one() { return Word{}; }
  static Word scalar(Fe c) { return Word{c, {}}; }
  static Word gen(int g, int e = 1) { return Word{1, {{g, e}}}; }
  Word scaled(const PrimeField& F, Fe c) const { return Word{F.mul(coeff, c), factors}; }
  Word times(const PrimeField& F, const Word& o) const;
  Word powered(const PrimeField& F, int e) const;  // factors must be invertible for e < 0
};

struct Relation {
  std::string name;
  Word lhs;
  Word rhs;
};

/// A presented fiber algebra: generators embedded in a StructureAlgebra plus
/// the defining relations bound to the fiber's central parameter values.
struct Presentation {
  std::vector<std::string> gen_names;
  std::vector<bool> invertible;   // group-like generators must stay invertible
  std::vector<Vec> gen_vectors;   // coordinates in the fiber algebra
  std::vector<Relation> relations;

  int num_gens() const { return static_cast<int>(gen_names.size()); }
};

/// Generator-level coproduct, counit and antipode data.
struct HopfSymbolTable {
  // per generator, Delta(g) as a finite sum of (left word, right word) pairs
  std::vector<std::vector<std::pair<Word, Word>>> coproduct;
  std::vector<Fe> counit;
  std::vector<Word> antipode;
  std::vector<std::string> central_labels;
};

/// An algebra map fiber -> F_p, stored as one value per presented generator.
struct Character {
  std::vector<Fe> values;
  bool operator==(const Character& o) const = default;
  bool operator<(const Character& o) const { return values < o.values; }
};

/// Evaluate a word on generator matrices (dim: size of the identity for the
/// empty word).
Mat eval_word_matrix(const PrimeField& F, const std::vector<Mat>& gens, const Word& w, int dim);

/// Evaluate a word inside the fiber algebra.
Vec eval_word_element(const StructureAlgebra& A, const Presentation& P, const Word& w);

/// Evaluate a word on scalar generator values (negative exponents invert).
Fe eval_word_scalar(const PrimeField& F, const std::vector<Fe>& values, const Word& w);

/// Whether the scalar tuple satisfies every relation of P.
bool scalars_satisfy_relations(const PrimeField& F, const Presentation& P,
                               const std::vector<Fe>& values);

/// Pointwise product (the character group law; verified against convolution
/// in the test suite).
Character char_product(const PrimeField& F, const Character& a, const Character& b);

/// chi^{-1} = chi o S, evaluated through the antipode words.
Character char_inverse(const PrimeField& F, const HopfSymbolTable& T, const Character& chi);

Character counit_character(const HopfSymbolTable& T);

}  // namespace hopf
