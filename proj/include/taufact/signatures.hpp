#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "taufact/relations.hpp"

namespace taufact::signatures {

/// Multiset of mu_n class indices of an integer's prime factors:
/// zero_count factors in [0], unit_counts[i] factors in Unit(i)
/// (index 0 is the x0 class [1]). Atomicity depends only on this.
struct Signature {
    int q = 0;
    int zero_count = 0;
    std::vector<int> unit_counts; // size q

    int unit_total() const;
    int total() const { return zero_count + unit_total(); }

    friend bool operator==(const Signature &, const Signature &) = default;
    friend std::strong_ordering operator<=>(const Signature &a, const Signature &b);
};

// Class indices of the prime factors of |x|, with multiplicity.
Signature signature_of(std::int64_t x, const relations::ClassTable &t);

// Zero if the block contains a zero-class element, else Unit(sum mod q).
relations::MuClassIndex block_class(const std::vector<relations::MuClassIndex> &block,
                                    const relations::ClassTable &t);

enum class Verdict {
    atom,
    reducible,
    unit, // the empty signature (no factors); only appears in tables
};

struct AtomDecision {
    Verdict verdict = Verdict::atom;
    // Reducible only: >= 2 blocks partitioning the signature, all with the
    // same block class.
    std::vector<Signature> witness_blocks;
};

// Exhaustive partition search with memoization on (residual multiset,
// required class). Reducible iff the index multiset splits into >= 2
// blocks of equal block class; a witness partition is always produced.
AtomDecision signature_is_atom(const Signature &s);

/// Every signature with zero_count = 0, x0 count in x0_levels, and counts
/// for indices 1..q-1 at most max_per_class, with its verdict.
struct AtomTable {
    std::int64_t n = 0;
    int max_per_class = 0;
    std::vector<int> x0_levels;
    struct Entry {
        Signature signature;
        AtomDecision decision;
    };
    std::vector<Entry> entries; // deterministic generation order
};

AtomTable generate_atom_table(std::int64_t n, int max_per_class,
                              const std::vector<int> &x0_levels,
                              std::size_t entry_cap = 1'000'000);

// Atom entries, canonically sorted.
std::vector<Signature> atoms_in_table(const AtomTable &t);

} // namespace taufact::signatures
