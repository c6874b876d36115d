#include "doctest.h"

#include "taufact/classifier.hpp"
#include "taufact/engine.hpp"

using namespace taufact;
using namespace taufact::classifier;
using relations::Modulus;

namespace {

signatures::Signature sig(int q, int zero, std::vector<int> counts) {
    signatures::Signature s;
    s.q = q;
    s.zero_count = zero;
    s.unit_counts = std::move(counts);
    return s;
}

} // namespace

TEST_CASE("tau-prime characterization on the worked examples") {
    CHECK(classify_tau_prime(14, Modulus(2)));
    CHECK_FALSE(classify_tau_prime(98, Modulus(2))); // 7 appears squared
    CHECK(classify_tau_prime(6, Modulus(6)));
    CHECK(classify_tau_prime(7, Modulus(5)));
    CHECK(classify_tau_prime(2, Modulus(2)));
    CHECK_FALSE(classify_tau_prime(4, Modulus(2)));
    CHECK_FALSE(classify_tau_prime(15, Modulus(2))); // two primes outside n
    CHECK(classify_tau_prime(10, Modulus(2)));
    CHECK_THROWS_AS(classify_tau_prime(1, Modulus(2)), error);
}

TEST_CASE("atom classification reproduces the worked verdicts and rules") {
    auto v98 = classify_atom(98, 2);
    CHECK(v98.is_atom);
    CHECK(v98.rule == AtomRule::single_modulus_factor);

    auto v45 = classify_atom(45, 3);
    CHECK_FALSE(v45.is_atom);
    CHECK(v45.rule == AtomRule::repeated_modulus_factor);

    auto v50 = classify_atom(50, 11);
    CHECK(v50.is_atom);
    CHECK(v50.rule == AtomRule::double_unit_plus_one);

    auto v296 = classify_atom(296, 11);
    CHECK(v296.is_atom);
    CHECK(v296.rule == AtomRule::triple_unit_with_double); // x1^3 * x2, 2*1 = 2

    auto v6 = classify_atom(6, 7);
    CHECK(v6.is_atom);
    CHECK(v6.rule == AtomRule::two_unit_classes);

    CHECK_FALSE(classify_atom(6, 5).is_atom);
    CHECK(classify_atom(7, 11).rule == AtomRule::usual_prime);
    CHECK_FALSE(classify_atom(16, 4).is_atom);
    CHECK(classify_atom(16, 4).rule == AtomRule::tau2_equivalence);
    CHECK(classify_atom(18, 6).is_atom); // 2 * 3^2 is a tau2-atom
    CHECK(classify_atom(18, 6).rule == AtomRule::tau2_or_tau3_union);
    CHECK_FALSE(classify_atom(36, 6).is_atom);
    CHECK(classify_atom(-50, 11).is_atom);

    CHECK_THROWS_AS(classify_atom(10, 13), error);
    try {
        classify_atom(10, 13);
    } catch (const error &e) {
        CHECK(e.code() == errc::unsupported_modulus);
    }
    CHECK_THROWS_AS(classify_atom(1, 2), error);
}

TEST_CASE("tau4 classification delegates to tau2") {
    for (std::int64_t x = 2; x <= 2000; ++x)
        CHECK(classify_atom(x, 4).is_atom == classify_atom(x, 2).is_atom);
}

TEST_CASE("classifier agrees with the oracle at unit-test scale") {
    for (std::int64_t n : {2, 3, 4, 5, 6, 7, 11}) {
        Modulus mod(n);
        for (std::int64_t x = 2; x <= 2000; ++x)
            CHECK_MESSAGE(classify_atom(x, n).is_atom ==
                              engine::is_tau_atom_oracle(x, mod),
                          "x=", x, " n=", n);
    }
}

TEST_CASE("generalized conditions on the worked instances") {
    // x1^3 * x2 at q=5: divisors 1,3 miss j=2; full sum 5 = 0 needs k=0
    auto r1 = check_generalization_conditions({11, 5, 1, 2, 3, 0});
    CHECK(r1.holds);
    CHECK(r1.divisor_condition);
    CHECK(r1.x0_barrier);
    CHECK(r1.partial_condition);

    auto r2 = check_generalization_conditions({7, 3, 1, 2, 1, 0});
    CHECK(r2.holds);

    auto r3 = check_generalization_conditions({7, 3, 1, 2, 1, 1});
    CHECK_FALSE(r3.holds);
    CHECK_FALSE(r3.x0_barrier); // 1 + 2 = 0 (mod 3) yet k = 1

    // m = 0 splits the readings
    ConditionInterpretation literal{ZeroMReading::every_integer, PartialLowerBound::from_one};
    auto r4 = check_generalization_conditions({11, 5, 1, 2, 0, 3}, literal);
    CHECK_FALSE(r4.holds);
    CHECK(r4.m0_flagged);
    auto r5 = check_generalization_conditions({11, 5, 1, 2, 0, 3});
    CHECK(r5.holds);
    CHECK_FALSE(r5.m0_flagged);

    CHECK_THROWS_AS(check_generalization_conditions({11, 5, 0, 2, 1, 0}), error);
    CHECK_THROWS_AS(check_generalization_conditions({11, 4, 1, 2, 1, 0}), error);
}

TEST_CASE("shape prediction from signatures") {
    auto p1 = predict_atom_via_generalization(sig(5, 0, {0, 3, 1, 0, 0}), 11);
    CHECK(p1.applicable);
    CHECK(p1.predicted_atom);

    // x0^3 * xj: applicable; the adjudicated reading predicts, the literal flags
    auto p2 = predict_atom_via_generalization(sig(2, 0, {3, 1}), 5);
    CHECK(p2.applicable);
    CHECK(p2.predicted_atom);
    ConditionInterpretation literal{ZeroMReading::every_integer, PartialLowerBound::from_one};
    auto p2l = predict_atom_via_generalization(sig(2, 0, {3, 1}), 5, literal);
    CHECK(p2l.applicable);
    CHECK_FALSE(p2l.predicted_atom);
    CHECK(p2l.m0_flagged);

    // three distinct unit classes: outside the shape
    auto p3 = predict_atom_via_generalization(sig(5, 0, {0, 1, 1, 1, 0}), 11);
    CHECK_FALSE(p3.applicable);

    // zero-class factors: outside the shape
    auto p4 = predict_atom_via_generalization(sig(5, 1, {0, 1, 0, 0, 0}), 11);
    CHECK_FALSE(p4.applicable);

    // no count-1 class to serve as x_j
    auto p5 = predict_atom_via_generalization(sig(5, 0, {0, 2, 2, 0, 0}), 11);
    CHECK_FALSE(p5.applicable);
}

TEST_CASE("interpretation inventory") {
    auto all = all_interpretations();
    CHECK(all.size() == 4);
    CHECK(interpretation_name(adjudicated_interpretation()) ==
          "z-positive-divisors/c-from-1");
}
