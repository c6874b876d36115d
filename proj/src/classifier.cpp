#include "taufact/classifier.hpp"

#include <algorithm>

#include "taufact/arith.hpp"

namespace taufact::classifier {

const char *atom_rule_name(AtomRule r) {
    switch (r) {
    case AtomRule::usual_prime: return "usual-prime";
    case AtomRule::single_modulus_factor: return "single-modulus-factor";
    case AtomRule::repeated_modulus_factor: return "repeated-modulus-factor";
    case AtomRule::single_unit_class: return "single-unit-class";
    case AtomRule::x0_chain_one_unit: return "x0-chain-one-unit";
    case AtomRule::two_unit_classes: return "two-unit-classes";
    case AtomRule::x0_chain_two_units: return "x0-chain-two-units";
    case AtomRule::double_unit_plus_one: return "double-unit-plus-one";
    case AtomRule::x0_chain_double_unit_plus_one: return "x0-chain-double-unit-plus-one";
    case AtomRule::triple_unit_with_double: return "triple-unit-with-double";
    case AtomRule::no_atom_family: return "no-atom-family";
    case AtomRule::tau2_equivalence: return "tau2-equivalence";
    case AtomRule::tau2_or_tau3_union: return "tau2-or-tau3-union";
    }
    return "unknown";
}

bool classify_atom_supported(std::int64_t n) {
    return n == 2 || n == 3 || n == 4 || n == 5 || n == 6 || n == 7 || n == 11;
}

namespace {

std::int64_t abs64(std::int64_t x) { return x < 0 ? -x : x; }

// Atom families for odd prime n in {3,5,7,11}, decided on the signature of
// an integer coprime to n and known composite.
AtomVerdict classify_families(const signatures::Signature &s, std::int64_t n) {
    const auto &counts = s.unit_counts;
    int x0 = counts[0];
    std::vector<std::pair<int, int>> nz; // (index, count), indices >= 1
    for (int i = 1; i < s.q; ++i)
        if (counts[static_cast<std::size_t>(i)] > 0)
            nz.emplace_back(i, counts[static_cast<std::size_t>(i)]);

    if (nz.empty()) // composite, every factor in the x0 class
        return {false, AtomRule::single_unit_class};
    if (n == 5) {
        if (nz[0].second == 1)
            return {true, AtomRule::x0_chain_one_unit};
        return {false, AtomRule::no_atom_family};
    }
    if (n == 7) {
        if (nz.size() == 1 && nz[0].second == 1)
            return {true, AtomRule::x0_chain_one_unit};
        if (nz.size() == 2 && nz[0].second == 1 && nz[1].second == 1 && x0 == 0)
            return {true, AtomRule::two_unit_classes};
        return {false, AtomRule::no_atom_family};
    }
    // n == 11, q = 5
    if (nz.size() == 1 && nz[0].second == 1)
        return {true, AtomRule::x0_chain_one_unit};
    if (nz.size() == 2 && nz[0].second == 1 && nz[1].second == 1) {
        if (x0 == 0)
            return {true, AtomRule::two_unit_classes};
        if ((nz[0].first + nz[1].first) % 5 != 0)
            return {true, AtomRule::x0_chain_two_units};
        return {false, AtomRule::no_atom_family};
    }
    if (nz.size() == 2) {
        auto [a, ca] = nz[0];
        auto [b, cb] = nz[1];
        if (ca > cb) {
            std::swap(a, b);
            std::swap(ca, cb);
        }
        // now ca <= cb; b is the repeated class
        if (ca == 1 && cb == 2) {
            if ((2 * b) % 5 == a)
                return {false, AtomRule::no_atom_family};
            if (x0 == 0)
                return {true, AtomRule::double_unit_plus_one};
            if ((2 * b + a) % 5 != 0)
                return {true, AtomRule::x0_chain_double_unit_plus_one};
            return {false, AtomRule::no_atom_family};
        }
        if (ca == 1 && cb == 3 && x0 == 0 && (2 * b) % 5 == a)
            return {true, AtomRule::triple_unit_with_double};
    }
    return {false, AtomRule::no_atom_family};
}

} // namespace

AtomVerdict classify_atom(std::int64_t x, std::int64_t n) {
    if (x >= -1 && x <= 1)
        raise(errc::unit_input, "classify_atom: |x| must be >= 2");
    if (!classify_atom_supported(n))
        raise(errc::unsupported_modulus,
              "classify_atom supports n in {2,3,4,5,6,7,11}; use the oracle or "
              "signature paths elsewhere");
    std::int64_t ax = abs64(x);
    if (n == 4) {
        AtomVerdict v = classify_atom(ax, 2);
        return {v.is_atom, AtomRule::tau2_equivalence};
    }
    if (n == 6) {
        AtomVerdict v2 = classify_atom(ax, 2);
        AtomVerdict v3 = classify_atom(ax, 3);
        return {v2.is_atom || v3.is_atom, AtomRule::tau2_or_tau3_union};
    }
    if (arith::is_prime(ax))
        return {true, AtomRule::usual_prime};
    if (n == 2) {
        int e = arith::multiplicity(ax, 2);
        if (e == 1)
            return {true, AtomRule::single_modulus_factor};
        if (e >= 2)
            return {false, AtomRule::repeated_modulus_factor};
        return {false, AtomRule::single_unit_class};
    }
    auto table = relations::shared_class_table(n);
    auto s = signatures::signature_of(ax, *table);
    if (s.zero_count == 1)
        return {true, AtomRule::single_modulus_factor};
    if (s.zero_count >= 2)
        return {false, AtomRule::repeated_modulus_factor};
    return classify_families(s, n);
}

bool classify_tau_prime(std::int64_t x, const relations::Modulus &n) {
    if (x < 2)
        raise(errc::out_of_range, "classify_tau_prime: x must be >= 2");
    auto f = arith::factor(x);
    int outside = 0; // factors (with multiplicity) of primes not dividing n
    for (const auto &[p, e] : f.factors) {
        if (n.n() % p == 0) {
            if (e > 1)
                return false;
        } else {
            outside += e;
            if (outside > 1)
                return false;
        }
    }
    return true;
}

std::vector<ConditionInterpretation> all_interpretations() {
    return {
        {ZeroMReading::every_integer, PartialLowerBound::from_one},
        {ZeroMReading::every_integer, PartialLowerBound::from_zero},
        {ZeroMReading::positive_divisors, PartialLowerBound::from_one},
        {ZeroMReading::positive_divisors, PartialLowerBound::from_zero},
    };
}

std::string interpretation_name(const ConditionInterpretation &ci) {
    std::string name = ci.z_reading == ZeroMReading::every_integer ? "z-every-integer"
                                                                   : "z-positive-divisors";
    name += ci.c_lower == PartialLowerBound::from_one ? "/c-from-1" : "/c-from-0";
    return name;
}

ConditionReport check_generalization_conditions(const GeneralizationInstance &g,
                                                const ConditionInterpretation &ci) {
    if (g.q < 2 || g.n != 2 * g.q + 1)
        raise(errc::out_of_range, "generalization instance: q must be (n-1)/2 >= 2");
    if (g.i <= 0 || g.i >= g.q || g.j <= 0 || g.j >= g.q)
        raise(errc::out_of_range, "generalization instance: i, j must lie in (0, q)");
    if (g.m < 0 || g.k < 0)
        raise(errc::out_of_range, "generalization instance: m, k must be >= 0");

    ConditionReport r;
    if (g.m == 0) {
        if (ci.z_reading == ZeroMReading::every_integer) {
            // every integer divides 0, so some multiple of i eventually hits
            // any reachable j; flagged rather than guessed
            r.divisor_condition = false;
            r.m0_flagged = true;
        } else {
            r.divisor_condition = true; // no positive divisors: vacuous
        }
    } else {
        r.divisor_condition = true;
        for (int z = 1; z <= g.m; ++z)
            if (g.m % z == 0 && (z * g.i) % g.q == g.j % g.q) {
                r.divisor_condition = false;
                break;
            }
    }
    r.x0_barrier = (g.m * g.i + g.j) % g.q != 0 || g.k == 0;
    r.partial_condition = true;
    int lo = ci.c_lower == PartialLowerBound::from_one ? 1 : 0;
    for (int c = lo; c < g.m - 1; ++c)
        if ((c * g.i + g.j) % g.q == 0) {
            r.partial_condition = false;
            break;
        }
    r.holds = r.divisor_condition && r.x0_barrier && r.partial_condition;
    return r;
}

GeneralizationPrediction
predict_atom_via_generalization(const signatures::Signature &s, std::int64_t n,
                                const ConditionInterpretation &ci) {
    GeneralizationPrediction out;
    if (s.zero_count != 0 || s.q < 2)
        return out;
    std::vector<std::pair<int, int>> nz;
    for (int i = 1; i < s.q; ++i)
        if (s.unit_counts[static_cast<std::size_t>(i)] > 0)
            nz.emplace_back(i, s.unit_counts[static_cast<std::size_t>(i)]);
    if (nz.empty() || nz.size() > 2)
        return out;
    int k = s.unit_counts[0];

    std::vector<GeneralizationInstance> candidates;
    if (nz.size() == 1) {
        auto [a, c] = nz[0];
        if (c == 1)
            candidates.push_back({n, s.q, a, a, 0, k}); // x0^k xj; i unused at m = 0
        else
            candidates.push_back({n, s.q, a, a, c - 1, k});
    } else {
        auto [a, ca] = nz[0];
        auto [b, cb] = nz[1];
        if (cb == 1)
            candidates.push_back({n, s.q, a, b, ca, k});
        if (ca == 1)
            candidates.push_back({n, s.q, b, a, cb, k});
    }
    if (candidates.empty())
        return out;
    out.applicable = true;
    for (const auto &g : candidates) {
        auto report = check_generalization_conditions(g, ci);
        out.m0_flagged = out.m0_flagged || report.m0_flagged;
        out.predicted_atom = out.predicted_atom || report.holds;
    }
    return out;
}

} // namespace taufact::classifier
