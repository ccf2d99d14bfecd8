#pragma once

#include "hopf/presentation.hpp"

namespace hopf {

/// Values of the central parameters that cut out one fiber.
using FiberPoint = std::vector<Fe>;

/// A module over a presented fiber algebra: one matrix per generator.
struct GeneratorRep {
  FiberPoint point;
  std::vector<Mat> gen;
  int dim = 0;

  static GeneratorRep from_character(const Character& chi, FiberPoint point);
};

/// Evaluates each defining relation as a matrix identity; on failure reports
/// the first violated relation's name.
bool check_relations(const PrimeField& F, const GeneratorRep& rep, const Presentation& P,
                     std::string* first_failure = nullptr);

/// Burnside criterion over a splitting field: the span of all products of
/// generator matrices (breadth-first closure from the identity) has dimension
/// dim^2 exactly for irreducible modules.
bool is_irreducible(const PrimeField& F, const GeneratorRep& rep);

struct HomSpace {
  std::vector<Mat> basis;  // intertwiners X with X pi_V(g) = pi_W(g) X
  int dim() const { return static_cast<int>(basis.size()); }
};

/// Solves the intertwiner equations for all generators as one linear system.
HomSpace hom_space(const PrimeField& F, const GeneratorRep& V, const GeneratorRep& W);

int hom_dim(const PrimeField& F, const GeneratorRep& V, const GeneratorRep& W);

/// Intertwiner witnessing V ~= W, normalized so its first nonzero entry in
/// row-major order is 1; nullopt when not isomorphic. Both inputs must be
/// irreducible (not re-verified here; is_isomorphic is the checked entry
/// point). A nonzero hom between irreducibles must be invertible; if not,
/// that is an internal contradiction and throws.
std::optional<Mat> iso_witness(const PrimeField& F, const GeneratorRep& V, const GeneratorRep& W);

/// Checked variant: verifies both modules are irreducible first.
bool is_isomorphic(const PrimeField& F, const GeneratorRep& V, const GeneratorRep& W);

/// Dual module: g acts by transpose of pi_V(S(g)); lives over the
/// antipode-image fiber.
GeneratorRep dual_rep(const PrimeField& F, const GeneratorRep& V, const HopfSymbolTable& T,
                      FiberPoint dual_point);

/// Tensor product through the generator coproducts; lives over the product
/// fiber.
GeneratorRep tensor_rep(const PrimeField& F, const GeneratorRep& V, const GeneratorRep& W,
                        const HopfSymbolTable& T, FiberPoint product_point);

/// chi (x) V, realized by precomposing with the left winding map: the matrix
/// of g becomes pi_V applied to sum chi(g_(1)) g_(2).
GeneratorRep twist_by_character(const PrimeField& F, const Character& chi, const GeneratorRep& V,
                                const HopfSymbolTable& T);

}  // namespace hopf
