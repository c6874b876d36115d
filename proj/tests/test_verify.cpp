#include "doctest.h"

#include <algorithm>

#include "taufact/io.hpp"
#include "taufact/verify.hpp"

using namespace taufact;
using namespace taufact::verify;

namespace {

signatures::Signature sig(int q, int zero, std::vector<int> counts) {
    signatures::Signature s;
    s.q = q;
    s.zero_count = zero;
    s.unit_counts = std::move(counts);
    return s;
}

} // namespace

TEST_CASE("sweeps agree where the theory says they must") {
    auto r2 = sweep_compare(2, 2, 1000, {Path::oracle, Path::theorem});
    CHECK(r2.pass());
    CHECK(r2.checked == 999);

    auto r11 = sweep_compare(11, 2, 2000, {Path::oracle, Path::signature});
    CHECK(r11.pass());

    auto r8 = sweep_compare(8, 2, 100, {Path::oracle}, true);
    CHECK(r8.pass());
    auto rec16 = std::find_if(r8.verdicts.begin(), r8.verdicts.end(),
                              [](const SweepRecord &r) { return r.x == 16; });
    REQUIRE(rec16 != r8.verdicts.end());
    CHECK(rec16->oracle.has_value());
    CHECK_FALSE(*rec16->oracle); // 16 = 4 * 4 under tau_8

    CHECK_THROWS_AS(sweep_compare(13, 2, 10, {Path::theorem}), error);
    CHECK_THROWS_AS(sweep_compare(8, 2, 10, {Path::signature}), error);
    CHECK_THROWS_AS(sweep_compare(8, 1, 10, {Path::oracle}), error);
}

TEST_CASE("sweep reports serialize reproducibly") {
    auto a = sweep_compare(7, 2, 300, {Path::oracle, Path::theorem, Path::signature}, true);
    auto b = sweep_compare(7, 2, 300, {Path::oracle, Path::theorem, Path::signature}, true);
    CHECK(io::to_json(a).dump() == io::to_json(b).dump());
}

TEST_CASE("check ids are a bijection with names") {
    auto ids = all_check_ids();
    CHECK(ids.size() == 12);
    for (CheckId id : ids) {
        auto back = check_id_from_name(check_id_name(id));
        REQUIRE(back.has_value());
        CHECK(*back == id);
    }
    CHECK_FALSE(check_id_from_name("no-such-check").has_value());
    CHECK_THROWS_AS(run_theorem_check(static_cast<CheckId>(99)), error);
}

TEST_CASE("every theorem check passes at reduced scale") {
    CheckParams p;
    p.prime_atom_hi = 300;
    p.prime_char_hi = 400;
    p.falsifier_hi = 150;
    p.sweep_hi = 1200;
    p.propagation_hi = 800;
    p.table_prime_hi = 61;
    p.interpretation_cap = 3;
    p.soundness_cap = 3;
    for (const auto &check : run_all_checks(p)) {
        CHECK_MESSAGE(check.passed, check_id_name(check.id), ": ",
                      check.witnesses.empty() ? "" : check.witnesses.front());
    }
}

TEST_CASE("the class-representative check documents the any-base erratum") {
    CheckParams p;
    p.table_prime_hi = 31;
    auto check = run_theorem_check(CheckId::class_power_representatives, p);
    CHECK(check.passed);
    CHECK(check.note.find("any-base claim fails") != std::string::npos);
    CHECK(check.note.find("n=7, a=6") != std::string::npos);
}

TEST_CASE("instantiation uses the smallest primes per class") {
    auto t11 = relations::shared_class_table(11);
    CHECK(instantiate_signature(sig(5, 0, {0, 1, 0, 0, 2}), *t11) == 50); // 2 * 5^2
    auto t5 = relations::shared_class_table(5);
    CHECK(instantiate_signature(sig(2, 1, {0, 0}), *t5) == 5);
    // smallest prime in Unit(2) mod 11 is 7, so this lands below 296
    CHECK(instantiate_signature(sig(5, 0, {0, 3, 1, 0, 0}), *t11) == 56); // 2^3 * 7
    CHECK(signatures::signature_of(296, *t11) == sig(5, 0, {0, 3, 1, 0, 0}));
    CHECK_THROWS_AS(instantiate_signature(sig(5, 0, {0, 0, 0, 0, 0}), *t11), error);
    CHECK_THROWS_AS(instantiate_signature(sig(3, 0, {0, 1, 0}), *t11), error);
}

TEST_CASE("instantiate then read back the signature") {
    auto t11 = relations::shared_class_table(11);
    std::vector<int> counts(5, 0);
    auto rec = [&](auto &&self, std::size_t idx) -> void {
        if (idx == counts.size()) {
            for (int zero = 0; zero <= 1; ++zero) {
                auto s = sig(5, zero, counts);
                if (s.total() < 1)
                    continue;
                auto x = instantiate_signature(s, *t11);
                CHECK(signatures::signature_of(x, *t11) == s);
            }
            return;
        }
        for (int c = 0; c <= 2; ++c) {
            counts[idx] = c;
            self(self, idx + 1);
            counts[idx] = 0;
        }
    };
    rec(rec, 0);
}

TEST_CASE("interpretation scoring matches the derived tallies") {
    auto scores = score_interpretations({5, 7, 11}, 4);
    REQUIRE(scores.size() == 4);
    for (const auto &s : scores) {
        CHECK(s.shapes == 525);
        CHECK(s.soundness_violations == 0);
        if (s.interpretation.z_reading == classifier::ZeroMReading::every_integer) {
            CHECK(s.flagged_m0 == 105);
            CHECK(s.predicted == 74);
            CHECK(s.missed_atoms == 105);
        } else {
            CHECK(s.flagged_m0 == 0);
            CHECK(s.predicted == 179);
            CHECK(s.missed_atoms == 0);
        }
    }
    auto adjudicated = adjudicate_interpretation(scores);
    CHECK(adjudicated == classifier::adjudicated_interpretation());
}
