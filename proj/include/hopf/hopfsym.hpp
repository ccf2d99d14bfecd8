#pragma once

#include <map>

#include "hopf/rep.hpp"

namespace hopf {

/// Verifies the generator-level coproduct/counit axiom: (counit ⊗ id) applied
/// to each generator's coproduct returns that generator, evaluated in the
/// fiber. (That the counit is an algebra map is a statement about the
/// identity fiber's relations; the family context checks it there.)
void verify_hopf_table(const StructureAlgebra& A, const Presentation& P,
                       const HopfSymbolTable& T);

/// All algebra maps fiber -> F_p: candidate values per generator come from the
/// family closed form, every combination is verified against the relations.
std::vector<Character> enumerate_characters(const PrimeField& F, const Presentation& P,
                                            const std::vector<std::vector<Fe>>& candidates);

enum class Side { left, right };

/// Image of each generator under the winding automorphism attached to chi,
/// as a single scaled word; throws if the image does not collapse to one term
/// (cannot happen when chi kills the non-group-like part). When `verify` is
/// set, checks the images preserve all relations of P inside A.
std::vector<Word> winding(const PrimeField& F, const Character& chi, Side side,
                          const HopfSymbolTable& T);

void verify_winding_automorphism(const StructureAlgebra& A, const Presentation& P,
                                 const std::vector<Word>& images);

/// Stabilizer of V inside G0 with one intertwiner witness per member
/// (normalized; the counit's witness is the identity). Verified closed under
/// the group law.
struct Stabilizer {
  std::vector<int> members;   // indices into G0
  std::vector<Mat> witness;   // L_chi : (chi ⊗ V) -> V
};

Stabilizer stabilizer(const PrimeField& F, const GeneratorRep& V,
                      const std::vector<Character>& g0, const HopfSymbolTable& T);

/// Asserts |Stab| <= dim^2 (throws InternalError otherwise) and returns
/// whether equality holds.
bool is_maximally_stable(const GeneratorRep& V, const Stabilizer& stab);

/// Normalized 2-cocycle on a finite group given by its multiplication table.
/// When extracted from a stabilizer, `group` holds the member characters.
struct CocycleTable {
  std::vector<std::string> element_names;
  std::vector<std::vector<int>> mult;   // index of element i * element j
  std::vector<std::vector<Fe>> gamma;   // gamma(element i, element j)
  std::vector<Character> group;         // stabilizer characters, when applicable

  int size() const { return static_cast<int>(mult.size()); }
  int identity_index() const;  // the unique e with e*e = e; throws if absent
};

/// gamma(chi, theta) is the unique scalar with L_chi L_theta = gamma L_{chi theta};
/// the witnesses must be those of a maximally stable module. The cocycle
/// identity is checked on all triples and the witnesses on linear independence.
CocycleTable extract_cocycle(const PrimeField& F, const GeneratorRep& V, const Stabilizer& stab,
                             const std::vector<Character>& g0);

/// Normalization and the cocycle identity on all triples; throws naming the
/// first failing triple.
void validate_cocycle(const PrimeField& F, const CocycleTable& table);

/// The twisted group algebra k_gamma G on the table's group.
StructureAlgebra twisted_group_algebra(const PrimeField& F, const CocycleTable& table,
                                       const std::string& label_prefix = "u");

/// Checks that chi -> L_chi is an injective algebra map onto End(V): the
/// twisted group algebra built from the extracted cocycle is dim(V)^2
/// dimensional and decomposes as a single matrix block of size dim(V).
bool verify_primitive_quotient(const PrimeField& F, const GeneratorRep& V,
                               const Stabilizer& stab, const CocycleTable& table, Rng& rng,
                               std::string* why = nullptr);

/// Multiplicity of each G0 character inside V ⊗ V* (passed already formed).
std::vector<int> tensor_character_multiplicities(const PrimeField& F,
                                                 const GeneratorRep& v_tensor_vdual,
                                                 const std::vector<Character>& g0);

}  // namespace hopf
