#include "taufact/engine.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "taufact/classifier.hpp"

namespace taufact::engine {

namespace {

void require_nonunit(std::int64_t x, const char *who) {
    if (x >= -1 && x <= 1)
        raise(errc::unit_input, std::string(who) + ": |x| must be >= 2");
}

std::int64_t abs64(std::int64_t x) { return x < 0 ? -x : x; }

// Partition search core: parts of rem, nonincreasing from max_part, all in
// the mu class of residue target, optionally skipping parts divisible by
// avoid. Parts are appended to out (descending) when out is non-null.
bool class_partition_dfs(std::int64_t rem, std::int64_t max_part, std::int64_t target,
                         std::int64_t n, std::int64_t avoid,
                         std::span<const std::int64_t> divisors,
                         std::vector<std::int64_t> *out) {
    if (rem == 1)
        return true;
    for (auto it = divisors.rbegin(); it != divisors.rend(); ++it) {
        std::int64_t d = *it;
        if (d > max_part || d > rem)
            continue;
        if (d < 2)
            break;
        if (rem % d != 0)
            continue;
        if (avoid != 0 && d % avoid == 0)
            continue;
        std::int64_t r = d % n;
        if (r != target && (n - r) % n != target)
            continue;
        if (out)
            out->push_back(d);
        if (class_partition_dfs(rem / d, d, target, n, avoid, divisors, out))
            return true;
        if (out)
            out->pop_back();
    }
    return false;
}

// First proper single-class partition of m in canonical order (descending
// partitions, class targets in first-part order), sign-aligned toward the
// larger residue representative. unit is set for product = +m.
std::optional<SignedFactorization> find_aligned(std::int64_t m, const relations::Modulus &n,
                                                std::int64_t avoid,
                                                std::span<const std::int64_t> divisors) {
    for (auto it = divisors.rbegin(); it != divisors.rend(); ++it) {
        std::int64_t d = *it;
        if (d >= m)
            continue;
        if (d < 2)
            break;
        if (avoid != 0 && d % avoid == 0)
            continue;
        std::int64_t r = d % n.n();
        std::int64_t r2 = (n.n() - r) % n.n();
        for (std::int64_t t : {r, r2}) {
            std::vector<std::int64_t> parts{d};
            if (class_partition_dfs(m / d, d, t, n.n(), avoid, divisors, &parts)) {
                std::int64_t rep = std::max(t, (n.n() - t) % n.n());
                for (auto &p : parts)
                    if (p % n.n() != rep % n.n())
                        p = -p;
                std::sort(parts.begin(), parts.end());
                std::int64_t prod_sign = 1;
                for (std::int64_t p : parts)
                    if (p < 0)
                        prod_sign = -prod_sign;
                SignedFactorization f;
                f.unit = prod_sign < 0 ? -1 : 1;
                f.parts = std::move(parts);
                return f;
            }
            if (r2 == r)
                break;
        }
    }
    return std::nullopt;
}

} // namespace

std::int64_t SignedFactorization::product() const {
    std::int64_t p = unit;
    for (std::int64_t v : parts)
        p *= v;
    return p;
}

std::vector<std::vector<std::int64_t>> multiplicative_partitions(std::int64_t m,
                                                                 const EnumConfig &cfg) {
    if (m < 2)
        raise(errc::unit_input, "multiplicative_partitions: m must be >= 2");
    if (cfg.max_parts && *cfg.max_parts < 2)
        raise(errc::out_of_range, "max_parts must be >= 2 when set");
    auto divs = arith::divisors(arith::factor(m));
    std::vector<std::vector<std::int64_t>> out;
    std::vector<std::int64_t> prefix;

    auto rec = [&](auto &&self, std::int64_t rem, std::int64_t max_part) -> void {
        if (rem == 1) {
            if (out.size() >= cfg.partition_cap)
                raise(errc::too_many_partitions, "multiplicative partition cap exceeded");
            out.push_back(prefix);
            return;
        }
        if (cfg.max_parts && prefix.size() >= static_cast<std::size_t>(*cfg.max_parts))
            return;
        for (auto it = divs.rbegin(); it != divs.rend(); ++it) {
            std::int64_t d = *it;
            if (d > max_part || d > rem)
                continue;
            if (d < 2)
                break;
            if (rem % d != 0)
                continue;
            prefix.push_back(d);
            self(self, rem / d, d);
            prefix.pop_back();
        }
    };
    rec(rec, m, m);
    return out;
}

bool is_tau_factorization(const SignedFactorization &f, const relations::Modulus &n) {
    if (f.parts.size() < 2)
        return true;
    std::int64_t r0 = arith::mod_residue(f.parts.front(), n.n());
    for (std::int64_t p : f.parts)
        if (arith::mod_residue(p, n.n()) != r0)
            return false;
    return true;
}

bool exists_proper_tau_factorization(std::int64_t abs_x,
                                     std::span<const std::int64_t> divisors,
                                     const relations::Modulus &n) {
    for (auto it = divisors.rbegin(); it != divisors.rend(); ++it) {
        std::int64_t d = *it;
        if (d >= abs_x)
            continue;
        if (d < 2)
            break;
        std::int64_t r = d % n.n();
        if (class_partition_dfs(abs_x / d, d, r, n.n(), 0, divisors, nullptr))
            return true;
    }
    return false;
}

bool exists_proper_tau_factorization(std::int64_t x, const relations::Modulus &n) {
    require_nonunit(x, "exists_proper_tau_factorization");
    std::int64_t ax = abs64(x);
    auto divs = arith::divisors(arith::factor(ax));
    return exists_proper_tau_factorization(ax, divs, n);
}

bool is_tau_atom_oracle(std::int64_t x, const relations::Modulus &n) {
    require_nonunit(x, "is_tau_atom_oracle");
    return !exists_proper_tau_factorization(x, n);
}

std::optional<SignedFactorization>
find_proper_tau_factorization(std::int64_t x, const relations::Modulus &n) {
    require_nonunit(x, "find_proper_tau_factorization");
    std::int64_t ax = abs64(x);
    auto divs = arith::divisors(arith::factor(ax));
    auto found = find_aligned(ax, n, 0, divs);
    if (found && x < 0)
        found->unit = -found->unit;
    return found;
}

namespace {

// Distinct signed variants of one unsigned partition (parts ascending).
// Values are forced positive, forced negative, or free depending on which
// residues hit the target; free values branch over the negated count.
void signed_variants(const std::vector<std::int64_t> &parts_asc, std::int64_t n,
                     std::int64_t target, bool ignore_tau,
                     std::set<std::vector<std::int64_t>> &sink) {
    struct Group {
        std::int64_t value;
        int count;
        int neg_min, neg_max;
    };
    std::vector<Group> groups;
    for (std::size_t i = 0; i < parts_asc.size();) {
        std::size_t j = i;
        while (j < parts_asc.size() && parts_asc[j] == parts_asc[i])
            ++j;
        Group g{parts_asc[i], static_cast<int>(j - i), 0, 0};
        if (ignore_tau) {
            g.neg_min = 0;
            g.neg_max = g.count;
        } else {
            bool pos_ok = g.value % n == target;
            bool neg_ok = (n - g.value % n) % n == target;
            if (!pos_ok && !neg_ok)
                return; // partition cannot align to this target
            g.neg_min = pos_ok ? 0 : g.count;
            g.neg_max = neg_ok ? g.count : 0;
        }
        groups.push_back(g);
        i = j;
    }
    std::vector<int> negs(groups.size());
    auto rec = [&](auto &&self, std::size_t gi) -> void {
        if (gi == groups.size()) {
            std::vector<std::int64_t> signed_parts;
            signed_parts.reserve(parts_asc.size());
            for (std::size_t g = 0; g < groups.size(); ++g) {
                for (int c = 0; c < negs[g]; ++c)
                    signed_parts.push_back(-groups[g].value);
                for (int c = negs[g]; c < groups[g].count; ++c)
                    signed_parts.push_back(groups[g].value);
            }
            std::sort(signed_parts.begin(), signed_parts.end());
            sink.insert(std::move(signed_parts));
            return;
        }
        for (int k = groups[gi].neg_min; k <= groups[gi].neg_max; ++k) {
            negs[gi] = k;
            self(self, gi + 1);
        }
    };
    rec(rec, 0);
}

} // namespace

std::vector<SignedFactorization>
enumerate_proper_tau_factorizations(std::int64_t x, const relations::Modulus &n,
                                    const EnumConfig &cfg) {
    require_nonunit(x, "enumerate_proper_tau_factorizations");
    std::int64_t ax = abs64(x);
    auto partitions = multiplicative_partitions(ax, cfg);
    std::set<std::vector<std::int64_t>> sink;
    for (const auto &parts_desc : partitions) {
        if (parts_desc.size() < 2)
            continue;
        std::vector<std::int64_t> asc(parts_desc.rbegin(), parts_desc.rend());
        if (cfg.signs == SignConvention::all_sign_patterns) {
            signed_variants(asc, n.n(), 0, /*ignore_tau=*/true, sink);
        } else {
            std::int64_t r = asc.front() % n.n();
            signed_variants(asc, n.n(), r, false, sink);
            std::int64_t r2 = (n.n() - r) % n.n();
            if (r2 != r)
                signed_variants(asc, n.n(), r2, false, sink);
        }
        if (sink.size() > cfg.partition_cap)
            raise(errc::too_many_partitions, "signed factorization cap exceeded");
    }
    std::vector<SignedFactorization> out;
    out.reserve(sink.size());
    for (const auto &parts : sink) {
        SignedFactorization f;
        f.parts = parts;
        int neg = static_cast<int>(std::count_if(parts.begin(), parts.end(),
                                                 [](std::int64_t v) { return v < 0; }));
        f.unit = ((neg % 2 != 0) != (x < 0)) ? -1 : 1;
        out.push_back(std::move(f));
    }
    auto key = [](const SignedFactorization &f) {
        std::vector<std::int64_t> abs_parts;
        abs_parts.reserve(f.parts.size());
        int neg = 0;
        for (std::int64_t v : f.parts) {
            abs_parts.push_back(abs64(v));
            if (v < 0)
                ++neg;
        }
        std::sort(abs_parts.begin(), abs_parts.end());
        return std::make_tuple(std::move(abs_parts), neg, f.parts);
    };
    std::sort(out.begin(), out.end(),
              [&](const auto &a, const auto &b) { return key(a) < key(b); });
    return out;
}

PrimeCheckVerdict falsify_tau_prime(std::int64_t x, const relations::Modulus &n,
                                    std::int64_t bound) {
    if (x < 2)
        raise(errc::out_of_range, "falsify_tau_prime: x must be >= 2");
    if (bound < x)
        raise(errc::out_of_range, "falsify_tau_prime: bound must be >= x");
    for (std::int64_t m = x; m <= bound; m += x) {
        auto divs = arith::divisors(arith::factor(m));
        if (auto f = find_aligned(m, n, x, divs))
            return {PrimeCheckVerdict::Kind::counterexample_found, m, bound, std::move(f)};
    }
    return {PrimeCheckVerdict::Kind::no_counterexample_up_to, 0, bound, std::nullopt};
}

PrimeCheckVerdict is_tau_prime_check(std::int64_t x, const relations::Modulus &n,
                                     std::int64_t bound) {
    if (x < 2)
        raise(errc::out_of_range, "is_tau_prime_check: x must be >= 2");
    if (classifier::classify_tau_prime(x, n))
        return {PrimeCheckVerdict::Kind::confirmed_prime, 0, bound, std::nullopt};
    return falsify_tau_prime(x, n, bound);
}

std::int64_t default_prime_bound(std::int64_t x) {
    std::int64_t b = x > 100'000 ? 10'000'000 : 100 * x;
    return std::max(b, x);
}

} // namespace taufact::engine
