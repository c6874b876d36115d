#include "taufact/arith.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <numeric>

namespace taufact::arith {

namespace {

constexpr std::int64_t kSieveLimit = 1'000'000;

// Odd primes below kSieveLimit, built once.
const std::vector<std::int32_t> &small_primes() {
    static const std::vector<std::int32_t> primes = [] {
        std::vector<bool> composite(kSieveLimit + 1, false);
        std::vector<std::int32_t> out;
        out.push_back(2);
        for (std::int64_t i = 3; i <= kSieveLimit; i += 2) {
            if (!composite[i]) {
                out.push_back(static_cast<std::int32_t>(i));
                for (std::int64_t j = i * i; j <= kSieveLimit; j += 2 * i)
                    composite[j] = true;
            }
        }
        return out;
    }();
    return primes;
}

using u128 = unsigned __int128;

std::uint64_t mul_mod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
    return static_cast<std::uint64_t>(u128(a) * b % n);
}

std::uint64_t pow_mod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t n) {
    std::uint64_t result = 1 % n;
    base %= n;
    while (exp) {
        if (exp & 1)
            result = mul_mod_u64(result, base, n);
        base = mul_mod_u64(base, base, n);
        exp >>= 1;
    }
    return result;
}

// Deterministic Miller-Rabin for 64-bit: the standard 12-base certificate.
bool miller_rabin_u64(std::uint64_t n) {
    if (n < 2)
        return false;
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL,
                            23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0)
            return n == p;
    }
    std::uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL,
                            23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = pow_mod_u64(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool witness = true;
        for (int i = 1; i < r; ++i) {
            x = mul_mod_u64(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness)
            return false;
    }
    return true;
}

std::uint64_t pollard_rho(std::uint64_t n) {
    if (n % 2 == 0)
        return 2;
    for (std::uint64_t c = 1;; ++c) {
        std::uint64_t x = 2, y = 2, d = 1;
        auto step = [&](std::uint64_t v) { return (mul_mod_u64(v, v, n) + c) % n; };
        while (d == 1) {
            x = step(x);
            y = step(step(y));
            std::uint64_t diff = x > y ? x - y : y - x;
            d = std::gcd(diff, n);
        }
        if (d != n)
            return d;
    }
}

void factor_u64(std::uint64_t n, std::vector<std::pair<std::int64_t, int>> &out) {
    if (n == 1)
        return;
    if (miller_rabin_u64(n)) {
        out.emplace_back(static_cast<std::int64_t>(n), 1);
        return;
    }
    std::uint64_t d = pollard_rho(n);
    std::vector<std::pair<std::int64_t, int>> left, right;
    factor_u64(d, left);
    factor_u64(n / d, right);
    // merge exponent lists
    for (auto &pe : right)
        left.push_back(pe);
    std::sort(left.begin(), left.end());
    for (auto &pe : left) {
        if (!out.empty() && out.back().first == pe.first)
            out.back().second += pe.second;
        else
            out.push_back(pe);
    }
}

} // namespace

int PrimeFactorization::exponent_of(std::int64_t p) const {
    for (const auto &[q, e] : factors)
        if (q == p)
            return e;
    return 0;
}

std::int64_t PrimeFactorization::total_multiplicity() const {
    std::int64_t t = 0;
    for (const auto &[p, e] : factors)
        t += e;
    return t;
}

PrimeFactorization factor(std::int64_t x) {
    if (x == 0)
        raise(errc::zero_input, "factor: input must be nonzero");
    if (x == std::numeric_limits<std::int64_t>::min())
        raise(errc::out_of_range, "factor: |x| exceeds 2^63-1");
    PrimeFactorization result;
    result.value = x;
    result.sign = x < 0 ? -1 : 1;
    std::uint64_t m = static_cast<std::uint64_t>(x < 0 ? -x : x);
    for (std::int32_t p : small_primes()) {
        if (std::uint64_t(p) * std::uint64_t(p) > m)
            break;
        if (m % std::uint64_t(p) == 0) {
            int e = 0;
            while (m % std::uint64_t(p) == 0) {
                m /= std::uint64_t(p);
                ++e;
            }
            result.factors.emplace_back(p, e);
        }
    }
    if (m > 1) {
        if (m <= std::uint64_t(kSieveLimit) * std::uint64_t(kSieveLimit) && m < (1ULL << 62) &&
            miller_rabin_u64(m)) {
            result.factors.emplace_back(static_cast<std::int64_t>(m), 1);
        } else {
            std::vector<std::pair<std::int64_t, int>> rest;
            factor_u64(m, rest);
            for (auto &pe : rest)
                result.factors.push_back(pe);
            std::sort(result.factors.begin(), result.factors.end());
        }
    }
    return result;
}

bool is_prime(std::int64_t x) {
    if (x == std::numeric_limits<std::int64_t>::min())
        return false; // 2^63 is not prime
    std::uint64_t m = static_cast<std::uint64_t>(x < 0 ? -x : x);
    return miller_rabin_u64(m);
}

int multiplicity(std::int64_t x, std::int64_t p) {
    if (x == 0)
        raise(errc::zero_input, "multiplicity: x must be nonzero");
    if (!is_prime(p))
        raise(errc::not_prime, "multiplicity: p is not a usual prime");
    std::int64_t ap = p < 0 ? -p : p;
    std::int64_t m = x;
    int e = 0;
    while (m % ap == 0) {
        m /= ap;
        ++e;
    }
    return e;
}

std::int64_t mod_residue(std::int64_t x, std::int64_t n) {
    std::int64_t r = x % n;
    return r < 0 ? r + n : r;
}

std::int64_t mod_mul(std::int64_t a, std::int64_t b, std::int64_t n) {
    if (n < 2)
        raise(errc::bad_modulus, "mod_mul: modulus must be >= 2");
    std::uint64_t ua = static_cast<std::uint64_t>(mod_residue(a, n));
    std::uint64_t ub = static_cast<std::uint64_t>(mod_residue(b, n));
    return static_cast<std::int64_t>(mul_mod_u64(ua, ub, static_cast<std::uint64_t>(n)));
}

std::int64_t mod_pow(std::int64_t base, std::uint64_t exp, std::int64_t n) {
    if (n < 2)
        raise(errc::bad_modulus, "mod_pow: modulus must be >= 2");
    std::uint64_t b = static_cast<std::uint64_t>(mod_residue(base, n));
    return static_cast<std::int64_t>(pow_mod_u64(b, exp, static_cast<std::uint64_t>(n)));
}

std::vector<std::int64_t> divisors(const PrimeFactorization &f) {
    std::vector<std::int64_t> out{1};
    for (const auto &[p, e] : f.factors) {
        std::size_t n = out.size();
        std::int64_t pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < n; ++i)
                out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace taufact::arith

namespace taufact {

const char *errc_name(errc c) {
    switch (c) {
    case errc::zero_input: return "zero_input";
    case errc::out_of_range: return "out_of_range";
    case errc::not_prime: return "not_prime";
    case errc::bad_modulus: return "bad_modulus";
    case errc::no_generator: return "no_generator";
    case errc::unit_input: return "unit_input";
    case errc::too_many_partitions: return "too_many_partitions";
    case errc::table_too_large: return "table_too_large";
    case errc::unsupported_modulus: return "unsupported_modulus";
    case errc::prime_search_exhausted: return "prime_search_exhausted";
    case errc::unknown_check: return "unknown_check";
    case errc::bad_signature: return "bad_signature";
    }
    return "unknown";
}

} // namespace taufact
