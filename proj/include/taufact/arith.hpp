#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "taufact/error.hpp"

namespace taufact::arith {

/// A signed 64-bit integer as unit * product of prime powers.
/// Units (+1/-1) carry an empty factor list.
struct PrimeFactorization {
    std::int64_t value = 1;
    int sign = 1;                                         // +1 or -1
    std::vector<std::pair<std::int64_t, int>> factors;    // (prime, exponent), primes ascending

    std::int64_t abs_value() const { return sign < 0 ? -value : value; }
    int exponent_of(std::int64_t p) const;
    std::int64_t total_multiplicity() const;              // sum of exponents
};

// Unique factorization of x != 0. Trial division over a small-prime sieve,
// then Miller-Rabin + Pollard rho for any 64-bit cofactor.
PrimeFactorization factor(std::int64_t x);

// Deterministic for all 64-bit inputs; true iff |x| is a usual prime.
bool is_prime(std::int64_t x);

// Largest e with p^e | x. p must pass is_prime.
int multiplicity(std::int64_t x, std::int64_t p);

// base^exp mod n in [0, n), overflow-free for any 64-bit base and modulus >= 2.
std::int64_t mod_pow(std::int64_t base, std::uint64_t exp, std::int64_t n);

// (a*b) mod n without overflow; inputs reduced internally.
std::int64_t mod_mul(std::int64_t a, std::int64_t b, std::int64_t n);

// Nonnegative residue of x mod n.
std::int64_t mod_residue(std::int64_t x, std::int64_t n);

// All positive divisors, ascending.
std::vector<std::int64_t> divisors(const PrimeFactorization &f);

} // namespace taufact::arith
