#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hopf/poly.hpp"

namespace hopf {

/// Finite-dimensional associative unital algebra given by structure constants
/// over the basis: b_i * b_j = sum_k c[i][j][k] b_k. Products are held sparsely
/// (one list of (k, coeff) pairs per basis pair); monomial algebras have a
/// single term per pair.
class StructureAlgebra {
public:
  StructureAlgebra() = default;

  const PrimeField& field() const { return F_; }
  int dim() const { return n_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const Vec& unit() const { return unit_; }

  const std::vector<std::pair<int, Fe>>& basis_product(int i, int j) const {
    return prod_[static_cast<size_t>(i) * n_ + j];
  }
  Fe structure_constant(int i, int j, int k) const;

  Vec basis_vec(int i) const;
  Vec mul(const Vec& x, const Vec& y) const;
  Vec pow_elt(Vec x, std::uint64_t e) const;
  /// Inverse of x, or empty when x is not invertible.
  Vec inv_elt(const Vec& x) const;

  /// Matrix of left multiplication by x in the algebra basis; linear in x.
  Mat left_regular_matrix(const Vec& x) const;
  /// trace of left multiplication by x.
  Fe regular_trace(const Vec& x) const;

  friend StructureAlgebra build_algebra(const PrimeField& F, std::vector<std::string> labels,
                                        std::vector<std::vector<std::pair<int, Fe>>> products,
                                        Vec unit, bool verify);

private:
  PrimeField F_;
  int n_ = 0;
  std::vector<std::string> labels_;
  std::vector<std::vector<std::pair<int, Fe>>> prod_;  // n*n sparse rows
  Vec unit_;
  std::vector<Fe> basis_trace_;  // regular trace of each basis element
};

/// Builds the algebra and verifies associativity on all basis triples and
/// that `unit` is a two-sided identity; failures name the offending triple.
StructureAlgebra build_algebra(const PrimeField& F, std::vector<std::string> labels,
                               std::vector<std::vector<std::pair<int, Fe>>> products, Vec unit,
                               bool verify = true);

/// Same, from a dense n*n*n tensor (row-major in (i,j,k)).
StructureAlgebra build_algebra_dense(const PrimeField& F, std::vector<std::string> labels,
                                     const std::vector<Fe>& tensor, Vec unit, bool verify = true);

/// Transport structure constants along an invertible change of basis T
/// (columns of T are the new basis in the old coordinates).
StructureAlgebra change_basis(const StructureAlgebra& A, const Mat& T);

/// Relabel/permute the basis by perm (new index i holds old basis perm[i]).
StructureAlgebra permute_basis(const StructureAlgebra& A, const std::vector<int>& perm);

/// Basis of the Jacobson radical: the kernel of (x,y) -> tr_reg(xy).
/// Requires p > dim(A); the returned span is verified to be a nilpotent
/// two-sided ideal.
std::vector<Vec> radical(const StructureAlgebra& A);

/// Basis of the center {z : zb = bz for all basis b}.
std::vector<Vec> center(const StructureAlgebra& A);

/// One Wedderburn factor per entry: factor of dimension d^2 contributing an
/// irreducible of dimension d.
struct BlockReport {
  int radical_dim = 0;
  std::vector<int> irreducible_dims;  // sorted ascending, one d per block
  int sd = 0;                         // sum of d^2

  int num_irreducibles() const { return static_cast<int>(irreducible_dims.size()); }
  bool operator==(const BlockReport& o) const = default;
};

/// Splits A / rad(A) into matrix blocks by factoring the minimal polynomial of
/// a random central element (seeded, up to 32 retries). Throws
/// NonSplitBlockError when a central factor refuses to split over F_p or a
/// block dimension is not a perfect square.
BlockReport wedderburn_blocks(const StructureAlgebra& A, Rng& rng);

/// dim(A) - dim rad(A); asserted equal to the Wedderburn block sum.
int square_dimension(const StructureAlgebra& A, Rng& rng);

}  // namespace hopf
