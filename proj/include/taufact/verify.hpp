#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "taufact/classifier.hpp"
#include "taufact/engine.hpp"
#include "taufact/signatures.hpp"

namespace taufact::verify {

enum class Path { oracle, theorem, signature };

const char *path_name(Path p);

struct SweepRecord {
    std::int64_t x = 0;
    std::optional<bool> oracle;
    std::optional<bool> theorem;
    std::optional<bool> signature;
    std::string theorem_rule;

    bool consistent() const;
};

struct DiscrepancyReport {
    std::int64_t n = 0;
    std::int64_t lo = 0;
    std::int64_t hi = 0;
    std::vector<Path> paths;
    std::vector<SweepRecord> mismatches;
    std::vector<SweepRecord> verdicts; // populated when recording is requested
    std::uint64_t checked = 0;

    bool pass() const { return mismatches.empty(); }
};

// Verdicts per requested path for every x in [lo, hi]; deterministic.
DiscrepancyReport sweep_compare(std::int64_t n, std::int64_t lo, std::int64_t hi,
                                const std::vector<Path> &paths,
                                bool record_verdicts = false);

/// One check per source theorem, 1:1.
enum class CheckId {
    prime_implies_atom,          // tau_n-primes are atoms
    tau_prime_characterization,  // the product-form prime test vs the falsifier
    tau3_atom_form,
    modulus_multiplicity,        // multiplicity-one rule
    atom_propagation,            // atoms survive passing from n to multiples of n
    tau4_equals_tau2,
    tau6_union_tau2_tau3,
    class_power_representatives, // table invariants + the "any base" erratum
    tau5_atom_form,
    tau7_atom_form,
    tau11_atom_form,             // includes the 625-entry family audit
    generalized_atom_conditions, // interpretation scoring + soundness sweep
};

const char *check_id_name(CheckId id);
std::optional<CheckId> check_id_from_name(std::string_view name);
std::vector<CheckId> all_check_ids();

struct CheckParams {
    std::int64_t prime_atom_hi = 2000;
    std::int64_t prime_char_hi = 5000;
    std::int64_t falsifier_hi = 500;
    std::int64_t sweep_hi = 10000;
    std::int64_t propagation_hi = 5000;
    std::int64_t table_prime_hi = 199;
    int interpretation_cap = 4;
    int soundness_cap = 5;
};

struct TheoremCheck {
    CheckId id;
    std::string params;
    bool passed = false;
    std::vector<std::string> witnesses;
    std::string note;
};

TheoremCheck run_theorem_check(CheckId id, const CheckParams &params = {});
std::vector<TheoremCheck> run_all_checks(const CheckParams &params = {});

enum class InstantiationStrategy { smallest_primes };

// Smallest concrete integer realizing the signature: n^zero_count times the
// smallest prime of each required class, repeated per multiplicity.
std::int64_t instantiate_signature(const signatures::Signature &s,
                                   const relations::ClassTable &t,
                                   InstantiationStrategy strategy =
                                       InstantiationStrategy::smallest_primes,
                                   std::int64_t prime_cap = 1'000'000);

struct InterpretationScore {
    classifier::ConditionInterpretation interpretation;
    std::string name;
    std::uint64_t shapes = 0;
    std::uint64_t predicted = 0;
    std::uint64_t soundness_violations = 0;
    std::uint64_t flagged_m0 = 0;
    std::uint64_t missed_atoms = 0;
};

// Scores every candidate reading of the generalized atom conditions against
// the signature decision, over all x0^k xi^m xj shapes with m, k <= count_cap.
std::vector<InterpretationScore>
score_interpretations(const std::vector<std::int64_t> &moduli, int count_cap);

// Zero soundness violations, then maximal coverage, then listed order.
classifier::ConditionInterpretation
adjudicate_interpretation(const std::vector<InterpretationScore> &scores);

} // namespace taufact::verify
