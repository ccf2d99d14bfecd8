#include "hopf/fp.hpp"

#include <array>

namespace hopf {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % n);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t n) {
  std::uint64_t r = 1 % n;
  a %= n;
  while (e) {
    if (e & 1) r = mulmod(r, a, n);
    a = mulmod(a, a, n);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  // deterministic Miller-Rabin for 64-bit inputs
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t find_prime(std::uint64_t m, std::uint64_t bound) {
  if (m < 1 || bound < 1) throw ConfigError("find_prime: m and bound must be positive");
  // first candidate ≡ 1 (mod m) strictly above bound
  std::uint64_t c = bound / m * m + 1;
  while (c <= bound) c += m;
  if (m == 1) c = bound + 1;
  // Dirichlet guarantees termination; the cap turns a logic bug into an error.
  for (std::uint64_t i = 0; i < (1ull << 26); ++i, c += (m == 1 ? 1 : m)) {
    if (is_prime(c)) return c;
  }
  throw Error("find_prime: search budget exhausted");
}

namespace {

std::uint64_t smallest_generator(std::uint64_t p) {
  if (p == 2) return 1;
  // distinct prime factors of p-1
  std::uint64_t n = p - 1;
  std::array<std::uint64_t, 16> fac{};
  int nf = 0;
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      fac[nf++] = q;
      while (n % q == 0) n /= q;
    }
  }
  if (n > 1) fac[nf++] = n;
  for (std::uint64_t g = 2; g < p; ++g) {
    bool ok = true;
    for (int i = 0; i < nf; ++i) {
      if (powmod(g, (p - 1) / fac[i], p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw InternalError("no generator found; modulus is not prime");
}

}  // namespace

Fe field_generator(std::uint64_t p) {
  if (!is_prime(p)) throw ConfigError("field_generator: p is not prime");
  return smallest_generator(p);
}

Fe primitive_root_of_unity(std::uint64_t p, std::uint64_t m) {
  if (!is_prime(p)) throw ConfigError("primitive_root_of_unity: p is not prime");
  if (m == 0 || (p - 1) % m != 0)
    throw ConfigError("primitive_root_of_unity: m does not divide p-1");
  Fe eps = powmod(smallest_generator(p), (p - 1) / m, p);
  // order must be exactly m
  std::uint64_t n = m;
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      if (powmod(eps, m / q, p) == 1) throw InternalError("root of unity has premature order");
      while (n % q == 0) n /= q;
    }
  }
  if (n > 1 && powmod(eps, m / n, p) == 1) throw InternalError("root of unity has premature order");
  return eps;
}

PrimeField::PrimeField(std::uint64_t p, std::uint64_t m, std::uint64_t seed)
    : p_(p), m_(m), seed_(seed) {
  if (!is_prime(p)) throw ConfigError("PrimeField: modulus " + std::to_string(p) + " is not prime");
  if (m == 0 || (p - 1) % m != 0)
    throw ConfigError("PrimeField: root order " + std::to_string(m) + " does not divide p-1");
  epsilon_ = primitive_root_of_unity(p, m);
}

Fe PrimeField::pow(Fe a, std::uint64_t e) const { return powmod(a, e, p_); }

Fe PrimeField::inv(Fe a) const {
  if (a == 0) throw Error("division by zero in F_p");
  return powmod(a, p_ - 2, p_);
}

Fe PrimeField::from_int(long long v) const {
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += static_cast<long long>(p_);
  return static_cast<Fe>(r);
}

Fe PrimeField::eps_pow(long long k) const {
  long long r = k % static_cast<long long>(m_);
  if (r < 0) r += static_cast<long long>(m_);
  return pow(epsilon_, static_cast<std::uint64_t>(r));
}

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw InternalError("Rng::below(0)");
  // rejection sampling keeps the draw exactly uniform
  std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x;
  do {
    x = eng_();
  } while (x >= limit);
  return x % n;
}

Rng Rng::fork(std::uint64_t salt) const { return Rng(mix64(seed_ ^ mix64(salt))); }

std::uint64_t mix64(std::uint64_t x) {
  // splitmix64 finalizer
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

}  // namespace hopf
