#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace hopf {

/// A field element, always stored reduced into [0, p).
using Fe = std::uint64_t;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
/// Bad run configuration (unknown family, empty grid, invalid prime, ...).
struct ConfigError : Error {
  using Error::Error;
};
/// The coefficient field is not a splitting field for some central factor.
struct NonSplitBlockError : Error {
  using Error::Error;
};
/// Randomized central splitting gave up after the configured retry budget.
struct RetryExhaustedError : Error {
  using Error::Error;
};
/// A consistency check that can only fail on a bug fired.
struct InternalError : Error {
  using Error::Error;
};

bool is_prime(std::uint64_t n);

/// Smallest prime p with p ≡ 1 (mod m) and p > bound.
std::uint64_t find_prime(std::uint64_t m, std::uint64_t bound);

/// Element of multiplicative order exactly m, chosen deterministically:
/// the smallest generator of F_p^* raised to (p-1)/m. Requires m | p-1.
Fe primitive_root_of_unity(std::uint64_t p, std::uint64_t m);

/// Smallest generator of the cyclic group F_p^*.
Fe field_generator(std::uint64_t p);

/// The exact coefficient field F_p together with a distinguished primitive
/// m-th root of unity and the seed all randomized procedures derive from.
class PrimeField {
public:
  PrimeField() = default;
  PrimeField(std::uint64_t p, std::uint64_t m, std::uint64_t seed);

  std::uint64_t p() const { return p_; }
  std::uint64_t m() const { return m_; }
  Fe epsilon() const { return epsilon_; }
  std::uint64_t seed() const { return seed_; }

  Fe add(Fe a, Fe b) const {
    Fe s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Fe sub(Fe a, Fe b) const { return a >= b ? a - b : a + p_ - b; }
  Fe neg(Fe a) const { return a == 0 ? 0 : p_ - a; }
  Fe mul(Fe a, Fe b) const {
    return static_cast<Fe>(static_cast<unsigned __int128>(a) * b % p_);
  }
  Fe pow(Fe a, std::uint64_t e) const;
  Fe inv(Fe a) const;
  /// Reduce a (possibly negative) machine integer into the field.
  Fe from_int(long long v) const;
  /// epsilon^k for k possibly negative.
  Fe eps_pow(long long k) const;

private:
  std::uint64_t p_ = 2;
  std::uint64_t m_ = 1;
  Fe epsilon_ = 1;
  std::uint64_t seed_ = 0;
};

/// Deterministic RNG; every randomized routine draws from one of these so
/// reruns with the same seed are bit-identical.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : seed_(seed), eng_(seed) {}

  std::uint64_t bits() { return eng_(); }
  std::uint64_t below(std::uint64_t n);
  Fe field_elt(const PrimeField& F) { return below(F.p()); }
  Fe nonzero_elt(const PrimeField& F) { return 1 + below(F.p() - 1); }
  /// Independent stream derived from the original seed and a salt.
  Rng fork(std::uint64_t salt) const;

  std::uint64_t seed() const { return seed_; }

private:
  std::uint64_t seed_;
  std::mt19937_64 eng_;
};

/// Stable 64-bit mix used to derive per-fiber RNG streams.
std::uint64_t mix64(std::uint64_t x);

}  // namespace hopf
