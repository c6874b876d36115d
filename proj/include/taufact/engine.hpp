#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "taufact/arith.hpp"
#include "taufact/relations.hpp"

namespace taufact::engine {

/// x = unit * product(parts), every part a nonunit (|part| >= 2).
/// Proper when there are at least two parts. Parts are kept sorted
/// ascending by value.
struct SignedFactorization {
    int unit = 1; // +1 or -1
    std::vector<std::int64_t> parts;

    bool proper() const { return parts.size() >= 2; }
    std::int64_t product() const;
};

enum class SignConvention {
    canonical_signs,   // distinct signed multisets that are tau_n-factorizations
    all_sign_patterns, // distinct signed multisets, no tau filter (erratum audits)
};

struct EnumConfig {
    std::optional<int> max_parts;                // >= 2 when set
    SignConvention signs = SignConvention::canonical_signs;
    std::size_t partition_cap = 10'000'000;
};

// All multisets of integers >= 2 with product m, parts nonincreasing,
// listed in descending lexicographic order; includes the trivial {m}.
std::vector<std::vector<std::int64_t>> multiplicative_partitions(std::int64_t m,
                                                                 const EnumConfig &cfg = {});

// True iff all parts are pairwise tau_n-related.
bool is_tau_factorization(const SignedFactorization &f, const relations::Modulus &n);

// Sign-alignment reduction: a proper tau_n-factorization of x exists iff
// some multiplicative partition of |x| into >= 2 parts lies in a single
// mu_n class (signs then align, the global sign lands in the unit).
bool exists_proper_tau_factorization(std::int64_t x, const relations::Modulus &n);

// Same search over precomputed divisors of abs_x (ascending); lets sweeps
// reuse one factorization across several moduli.
bool exists_proper_tau_factorization(std::int64_t abs_x,
                                     std::span<const std::int64_t> divisors,
                                     const relations::Modulus &n);

// Definition-level atom oracle: no proper tau_n-factorization exists.
bool is_tau_atom_oracle(std::int64_t x, const relations::Modulus &n);

// First proper tau_n-factorization in canonical order (descending
// partitions, signs aligned toward the larger residue representative),
// or nullopt when x is a tau_n-atom.
std::optional<SignedFactorization>
find_proper_tau_factorization(std::int64_t x, const relations::Modulus &n);

// All proper factorizations of x as distinct signed multisets, sorted by
// (absolute parts, negation count, parts). canonical_signs keeps only
// tau_n-factorizations; all_sign_patterns drops the tau filter.
std::vector<SignedFactorization>
enumerate_proper_tau_factorizations(std::int64_t x, const relations::Modulus &n,
                                    const EnumConfig &cfg = {});

struct PrimeCheckVerdict {
    enum class Kind { confirmed_prime, counterexample_found, no_counterexample_up_to };
    Kind kind;
    std::int64_t multiple = 0; // counterexample product
    std::int64_t bound = 0;    // scan bound for no_counterexample_up_to
    std::optional<SignedFactorization> witness;
};

// Scan multiples m = x, 2x, ... <= bound for a tau_n-factorization of m
// none of whose parts x divides. Deterministic: increasing multiples,
// canonical partition order.
PrimeCheckVerdict falsify_tau_prime(std::int64_t x, const relations::Modulus &n,
                                    std::int64_t bound);

// Theorem-backed fast path first (tau_n-prime characterization), else the
// bounded falsifier.
PrimeCheckVerdict is_tau_prime_check(std::int64_t x, const relations::Modulus &n,
                                     std::int64_t bound);

// 100*x capped at 10^7.
std::int64_t default_prime_bound(std::int64_t x);

} // namespace taufact::engine
