#include "doctest.h"

#include <algorithm>

#include "naive_oracle.hpp"
#include "taufact/engine.hpp"

using namespace taufact;
using namespace taufact::engine;
using relations::Modulus;

namespace {

std::vector<std::int64_t> V(std::initializer_list<std::int64_t> xs) { return xs; }

bool contains_parts(const std::vector<SignedFactorization> &fs,
                    const std::vector<std::int64_t> &parts, int unit) {
    return std::any_of(fs.begin(), fs.end(), [&](const SignedFactorization &f) {
        return f.parts == parts && f.unit == unit;
    });
}

} // namespace

TEST_CASE("multiplicative partitions in canonical descending order") {
    auto p28 = multiplicative_partitions(28);
    REQUIRE(p28.size() == 4);
    CHECK(p28[0] == V({28}));
    CHECK(p28[1] == V({14, 2}));
    CHECK(p28[2] == V({7, 4}));
    CHECK(p28[3] == V({7, 2, 2}));

    auto p12 = multiplicative_partitions(12);
    REQUIRE(p12.size() == 4);
    CHECK(p12[0] == V({12}));
    CHECK(p12[1] == V({6, 2}));
    CHECK(p12[2] == V({4, 3}));
    CHECK(p12[3] == V({3, 2, 2}));

    CHECK(multiplicative_partitions(13) == std::vector<std::vector<std::int64_t>>{{13}});

    EnumConfig two_parts;
    two_parts.max_parts = 2;
    auto limited = multiplicative_partitions(28, two_parts);
    REQUIRE(limited.size() == 3);
    CHECK(limited[2] == V({7, 4}));

    CHECK_THROWS_AS(multiplicative_partitions(1), error);
    EnumConfig bad;
    bad.max_parts = 1;
    CHECK_THROWS_AS(multiplicative_partitions(6, bad), error);
    EnumConfig tiny_cap;
    tiny_cap.partition_cap = 2;
    CHECK_THROWS_AS(multiplicative_partitions(28, tiny_cap), error);
}

TEST_CASE("tau-factorization membership") {
    CHECK(is_tau_factorization({1, {-14, -7}}, Modulus(7)));
    CHECK(is_tau_factorization({1, {4, 4}}, Modulus(8)));
    CHECK_FALSE(is_tau_factorization({1, {2, 49}}, Modulus(2)));
}

TEST_CASE("existence and the atom oracle on the worked examples") {
    CHECK(exists_proper_tau_factorization(6, Modulus(5)));   // -1 * -2 * 3
    CHECK_FALSE(exists_proper_tau_factorization(6, Modulus(7)));
    CHECK_FALSE(exists_proper_tau_factorization(98, Modulus(2)));
    CHECK(exists_proper_tau_factorization(16, Modulus(8)));  // 4 * 4
    CHECK(exists_proper_tau_factorization(98, Modulus(7)));  // -14 * -7

    CHECK(is_tau_atom_oracle(50, Modulus(11)));
    CHECK(is_tau_atom_oracle(296, Modulus(11)));
    CHECK_FALSE(is_tau_atom_oracle(16, Modulus(8)));
    CHECK(is_tau_atom_oracle(98, Modulus(2)));
    CHECK_THROWS_AS(is_tau_atom_oracle(1, Modulus(5)), error);
    CHECK_THROWS_AS(is_tau_atom_oracle(-1, Modulus(5)), error);
}

TEST_CASE("atom oracle is sign-invariant") {
    for (std::int64_t n : {2, 3, 5, 7, 8, 11})
        for (std::int64_t x = 2; x <= 400; ++x)
            CHECK(is_tau_atom_oracle(x, Modulus(n)) == is_tau_atom_oracle(-x, Modulus(n)));
}

TEST_CASE("found factorizations match the published witnesses") {
    auto w6 = find_proper_tau_factorization(6, Modulus(5));
    REQUIRE(w6.has_value());
    CHECK(w6->unit == -1);
    CHECK(w6->parts == V({-2, 3}));

    auto w16 = find_proper_tau_factorization(16, Modulus(8));
    REQUIRE(w16.has_value());
    CHECK(w16->unit == 1);
    CHECK(w16->parts == V({4, 4}));

    CHECK_FALSE(find_proper_tau_factorization(98, Modulus(2)).has_value());
    auto w98 = find_proper_tau_factorization(98, Modulus(7));
    REQUIRE(w98.has_value());
    CHECK(w98->product() == 98);
    CHECK(is_tau_factorization(*w98, Modulus(7)));
}

TEST_CASE("enumeration is complete, valid and canonical") {
    auto fs = enumerate_proper_tau_factorizations(98, Modulus(7));
    CHECK(contains_parts(fs, {-14, -7}, 1));
    CHECK(contains_parts(fs, {7, 14}, 1));
    for (const auto &f : fs) {
        CHECK(f.product() == 98);
        CHECK(is_tau_factorization(f, Modulus(7)));
        CHECK(f.proper());
    }

    CHECK(enumerate_proper_tau_factorizations(97, Modulus(5)).empty());

    EnumConfig all;
    all.signs = SignConvention::all_sign_patterns;
    auto f28 = enumerate_proper_tau_factorizations(28, Modulus(3), all);
    CHECK(f28.size() == 14); // 4 from {2,14}, 4 from {4,7}, 6 from {2,2,7}
    for (const auto &f : f28)
        CHECK(f.product() == 28);

    // the same count is reached for any modulus: the tau filter is off
    auto f28b = enumerate_proper_tau_factorizations(28, Modulus(11), all);
    CHECK(f28b.size() == 14);
}

TEST_CASE("enumeration of negative inputs keeps products right") {
    auto fs = enumerate_proper_tau_factorizations(-98, Modulus(7));
    for (const auto &f : fs)
        CHECK(f.product() == -98);
    CHECK(contains_parts(fs, {-14, -7}, -1));
}

TEST_CASE("every returned factorization agrees with the naive signed search") {
    for (std::int64_t n : {2, 3, 4, 5, 6, 7, 8, 11}) {
        Modulus mod(n);
        for (std::int64_t x = 2; x <= 600; ++x) {
            bool fast = exists_proper_tau_factorization(x, mod);
            bool slow = !naive::atom(x, n);
            CHECK_MESSAGE(fast == slow, "x=", x, " n=", n);
        }
        for (std::int64_t x : {-98, -50, -296, -16, -12})
            CHECK(is_tau_atom_oracle(x, mod) == naive::atom(x, n));
    }
}

TEST_CASE("prime falsification walks multiples in order") {
    auto v98 = falsify_tau_prime(98, Modulus(2), 500);
    REQUIRE(v98.kind == PrimeCheckVerdict::Kind::counterexample_found);
    CHECK(v98.multiple == 196);
    REQUIRE(v98.witness.has_value());
    CHECK(v98.witness->parts == V({14, 14}));
    CHECK(v98.witness->unit == 1);

    auto v18 = falsify_tau_prime(18, Modulus(2), 1800);
    REQUIRE(v18.kind == PrimeCheckVerdict::Kind::counterexample_found);
    CHECK(v18.multiple == 36);
    CHECK(v18.witness->parts == V({6, 6}));

    auto v6 = falsify_tau_prime(6, Modulus(7), 600);
    REQUIRE(v6.kind == PrimeCheckVerdict::Kind::counterexample_found);
    CHECK(v6.multiple == 12);
    CHECK(v6.witness->parts == V({-3, 4})); // 3 and 4 share a class; -3 = 4 (mod 7)
    CHECK(v6.witness->unit == -1);

    auto clean = falsify_tau_prime(14, Modulus(2), 1400);
    CHECK(clean.kind == PrimeCheckVerdict::Kind::no_counterexample_up_to);
    CHECK(clean.bound == 1400);
}

TEST_CASE("the combined prime check takes the fast path") {
    auto v14 = is_tau_prime_check(14, Modulus(2), 10000);
    CHECK(v14.kind == PrimeCheckVerdict::Kind::confirmed_prime);
    auto v7 = is_tau_prime_check(7, Modulus(5), 700);
    CHECK(v7.kind == PrimeCheckVerdict::Kind::confirmed_prime);
    auto v98 = is_tau_prime_check(98, Modulus(2), 500);
    CHECK(v98.kind == PrimeCheckVerdict::Kind::counterexample_found);
    CHECK(v98.multiple == 196);
}

TEST_CASE("default falsification bound") {
    CHECK(default_prime_bound(98) == 9800);
    CHECK(default_prime_bound(200'000) == 10'000'000);
}
