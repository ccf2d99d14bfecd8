#pragma once

#include <memory>
#include <set>

#include "hopf/hopfsym.hpp"
#include "hopf/trace.hpp"

namespace hopf {

/// Closed-form expectations for one fiber, used as the oracle side of the
/// acceptance loop.
struct ExpectedReport {
  int sd = 0;
  int level = 0;  // sd + 1
  std::vector<int> irr_dims;
  int irr_count = 0;
  bool all_max_stable = false;
  bool in_lowest_stratum = false;
};

/// Everything one fiber carries: the structure-constant algebra, the bound
/// presentation, the Hopf symbol table and a seed irreducible module.
struct FiberBundle {
  FiberPoint point;
  StructureAlgebra algebra;
  Presentation pres;
  HopfSymbolTable hopf;
  GeneratorRep seed;
};

/// One of the example families, parametrized over MaxSpec of its central
/// subalgebra. Points are tuples of central coordinate values.
class FiberFamily {
public:
  virtual ~FiberFamily() = default;

  const PrimeField& field() const { return F_; }
  const std::string& name() const { return name_; }
  int ell() const { return ell_; }
  int fiber_dim() const { return fiber_dim_; }
  /// Human-readable description of the central parameter coordinates.
  virtual std::string parameter_space() const = 0;

  virtual FiberPoint identity_point() const = 0;
  /// Convolution product of central characters (the group law on MaxSpec).
  virtual FiberPoint point_product(const FiberPoint& a, const FiberPoint& b) const = 0;
  /// Image of the point under the antipode (the fiber the dual lives over).
  virtual FiberPoint point_antipode(const FiberPoint& a) const = 0;
  /// Whether the fiber at this point is constructible over F_p (the needed
  /// roots exist); fills `why` with the skip reason otherwise.
  virtual bool point_valid(const FiberPoint& a, std::string* why = nullptr) const = 0;
  virtual FiberBundle fiber(const FiberPoint& a) const = 0;
  /// All characters of the fiber algebra (closed-form candidates, verified).
  virtual std::vector<Character> fiber_characters(const FiberPoint& a) const = 0;
  /// Deduplicated tuples of multiplicative central rescalings swept out by the
  /// winding action of the family's full character group.
  virtual std::vector<std::vector<Fe>> winding_rescales(Side side) const = 0;
  /// Central rescaling tuple of one character of the family.
  virtual std::vector<Fe> central_rescale(const Character& chi, Side side) const = 0;
  virtual ExpectedReport expected_report(const FiberPoint& a) const = 0;
  /// Deterministic grid: distinguished values plus seed-derived samples for
  /// continuous parameters; every point is valid.
  virtual std::vector<FiberPoint> default_grid(int samples, Rng& rng) const = 0;
  virtual std::vector<std::pair<std::string, long long>> point_params(const FiberPoint& a) const = 0;
  /// Builds a point from named parameters (missing names are an error).
  virtual FiberPoint point_from_params(
      const std::vector<std::pair<std::string, long long>>& params) const = 0;

  /// G0: the character group of the identity fiber.
  const std::vector<Character>& identity_characters() const;
  int g0_order() const { return static_cast<int>(identity_characters().size()); }

protected:
  PrimeField F_;
  std::string name_;
  int ell_ = 0;
  int fiber_dim_ = 0;
  mutable std::vector<Character> g0_cache_;
};

/// Factory. Passing no prime selects find_prime(m = needed root order,
/// bound = fiber_dim^2) per the default-configuration rule; explicit primes
/// only need p ≡ 1 (mod ell) and p > fiber_dim.
std::unique_ptr<FiberFamily> make_family(const std::string& name, int ell,
                                         std::optional<std::uint64_t> prime, std::uint64_t seed);

std::vector<std::string> family_names();

/// The twisted group algebra of (Z/ell)^2 with the standard root-of-unity
/// cocycle; a full matrix algebra of size ell.
StructureAlgebra quantum_torus(const PrimeField& F, int ell);
/// The same algebra presented through a CocycleTable (shared builder).
CocycleTable quantum_torus_cocycle(const PrimeField& F, int ell);

/// Applies each character's central rescaling to the point: the orbit swept
/// out by an explicit character list.
std::set<FiberPoint> orbit_on_central_points(const FiberFamily& fam,
                                             const std::vector<Character>& chars,
                                             const FiberPoint& point, Side side);

/// Orbit of the identity point under the full winding group, as a point set.
std::set<FiberPoint> winding_orbit_of_identity(const FiberFamily& fam, Side side);

/// An ell-th root of a in F_p, or nullopt when none exists. Deterministic.
std::optional<Fe> ell_th_root(const PrimeField& F, Fe a, int ell);

/// The ell distinct ell-th roots of unity (requires ell | p-1).
std::vector<Fe> roots_of_unity(const PrimeField& F, int ell);

}  // namespace hopf
