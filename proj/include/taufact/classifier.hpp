#pragma once

#include <cstdint>
#include <string>

#include "taufact/relations.hpp"
#include "taufact/signatures.hpp"

namespace taufact::classifier {

/// Which case decided the verdict. Fixed set; serialized by name.
enum class AtomRule {
    usual_prime,                   // atom
    single_modulus_factor,         // n divides x exactly once: atom
    repeated_modulus_factor,       // n divides x twice or more: reducible
    single_unit_class,             // n=2,3: composite coprime to n: reducible
    x0_chain_one_unit,             // x0...x0 * xi: atom
    two_unit_classes,              // xi * xj, i != j: atom
    x0_chain_two_units,            // x0...x0 * xi * xj, i+j != 0: atom
    double_unit_plus_one,          // xi * xi * xj, 2i != j: atom
    x0_chain_double_unit_plus_one, // x0... * xi * xi * xj, 2i+j != 0: atom
    triple_unit_with_double,       // xi * xi * xi * x_{2i}: atom
    no_atom_family,                // matched no atom family: reducible
    tau2_equivalence,              // n=4 reduces to n=2
    tau2_or_tau3_union,            // n=6 reduces to n=2 / n=3
};

const char *atom_rule_name(AtomRule r);

struct AtomVerdict {
    bool is_atom = false;
    AtomRule rule = AtomRule::no_atom_family;
};

// Theorem-backed classification for n in {2,3,4,5,6,7,11}; other moduli
// raise unsupported_modulus (callers fall back to the oracle or the
// signature decision).
AtomVerdict classify_atom(std::int64_t x, std::int64_t n);

bool classify_atom_supported(std::int64_t n);

// tau_n-prime characterization: x = (distinct primes dividing n, each to
// the first power) * (at most one prime not dividing n).
bool classify_tau_prime(std::int64_t x, const relations::Modulus &n);

/// The x0^k * xi^m * xj shape: i, j nonzero unit indices, m copies of
/// class i, k copies of the x0 class, one copy of class j.
struct GeneralizationInstance {
    std::int64_t n = 0;
    int q = 0;
    int i = 0;
    int j = 0;
    int m = 0;
    int k = 0;
};

// Quantifier ranges the source conditions leave open. The m = 0 case is
// where the readings split: taken literally every integer divides 0 and
// condition (1) can never be satisfied; read as "positive divisors of m"
// it is vacuous.
enum class ZeroMReading { every_integer, positive_divisors };
enum class PartialLowerBound { from_one, from_zero };

struct ConditionInterpretation {
    ZeroMReading z_reading = ZeroMReading::positive_divisors;
    PartialLowerBound c_lower = PartialLowerBound::from_one;

    friend bool operator==(const ConditionInterpretation &,
                           const ConditionInterpretation &) = default;
};

// Empirically adjudicated reading: zero soundness violations and maximal
// coverage at desk scale (see the verification harness).
constexpr ConditionInterpretation adjudicated_interpretation() {
    return {ZeroMReading::positive_divisors, PartialLowerBound::from_one};
}

std::vector<ConditionInterpretation> all_interpretations();
std::string interpretation_name(const ConditionInterpretation &ci);

struct ConditionReport {
    bool holds = false;
    bool divisor_condition = false;  // (1) every z | m has z*i != j (mod q)
    bool x0_barrier = false;         // (2) m*i + j == 0 (mod q) forces k = 0
    bool partial_condition = false;  // (3) c*i + j != 0 (mod q) for c < m-1
    bool m0_flagged = false;         // literal reading, m = 0: unsatisfiable
};

ConditionReport
check_generalization_conditions(const GeneralizationInstance &g,
                                const ConditionInterpretation &ci = adjudicated_interpretation());

struct GeneralizationPrediction {
    bool applicable = false;    // signature matches the x0^k xi^m xj shape
    bool predicted_atom = false; // conditions hold for some shape assignment
    bool m0_flagged = false;
};

// One-directional: predicted_atom = false means "no prediction", never
// "reducible".
GeneralizationPrediction
predict_atom_via_generalization(const signatures::Signature &s, std::int64_t n,
                                const ConditionInterpretation &ci = adjudicated_interpretation());

} // namespace taufact::classifier
