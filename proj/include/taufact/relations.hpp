#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <vector>

#include "taufact/error.hpp"

namespace taufact::relations {

/// Validated modulus n >= 2 with the derived mu-class bookkeeping:
/// ceil(n/2) mu_n classes, and (n-1)/2 unit-class indices when n is an
/// odd prime.
class Modulus {
  public:
    explicit Modulus(std::int64_t n);

    std::int64_t n() const { return n_; }
    bool is_odd_prime() const { return odd_prime_; }
    std::int64_t class_count() const { return (n_ + 1) / 2; }

    // (n-1)/2; only meaningful for odd prime n.
    std::int64_t unit_index_modulus() const;

  private:
    std::int64_t n_;
    bool odd_prime_;
};

// x tau_n y  <=>  n | x - y
bool tau_related(std::int64_t x, std::int64_t y, const Modulus &n);

// x mu_n y  <=>  x ≡ y or x ≡ -y (mod n)
bool mu_related(std::int64_t x, std::int64_t y, const Modulus &n);

/// Tagged class index: Zero (the class of multiples of n) or Unit(i),
/// the class of base^i for the table's chosen base, 0 <= i < (n-1)/2.
class MuClassIndex {
  public:
    static MuClassIndex zero() { return MuClassIndex(-1); }
    static MuClassIndex unit(int i) { return MuClassIndex(i); }

    bool is_zero() const { return i_ < 0; }
    int index() const; // requires !is_zero()

    friend auto operator<=>(const MuClassIndex &, const MuClassIndex &) = default;

  private:
    explicit MuClassIndex(int i) : i_(i) {}
    int i_;
};

/// For an odd prime n: the mu_n class structure indexed by powers of a
/// verified generator. Residues r and n-r share an index; base^q mu_n 1.
/// Immutable after construction; safe to share across threads.
class ClassTable {
  public:
    std::int64_t n() const { return n_; }
    std::int64_t base() const { return base_; }
    std::int64_t q() const { return q_; } // (n-1)/2

    MuClassIndex index_of_residue(std::int64_t r) const;

    // members[0] = {0}; members[1+i] = residues of Unit(i), ascending.
    std::vector<std::vector<std::int64_t>> class_members() const;

  private:
    friend ClassTable build_class_table(std::int64_t n);
    std::int64_t n_ = 0;
    std::int64_t base_ = 0;
    std::int64_t q_ = 0;
    std::vector<std::int32_t> residue_to_index_; // size n; -1 = Zero
};

// Smallest a in (1, n) whose powers a^1..a^q represent the q distinct
// nonzero mu_n classes. Exists for every odd prime (Z_n^*/{±1} is cyclic).
std::int64_t find_mu_generator(std::int64_t n);

// Audits the power-representative claim for one (n, a) pair: true iff
// a^1..a^q hit q distinct nonzero classes and a^q mu_n 1.
bool verify_mureps_claim(std::int64_t n, std::int64_t a);

ClassTable build_class_table(std::int64_t n);

// Process-wide immutable cache, keyed by n.
std::shared_ptr<const ClassTable> shared_class_table(std::int64_t n);

// Zero if n | x, else Unit(i) with x mu_n base^i. x must be nonzero.
MuClassIndex class_index(std::int64_t x, const ClassTable &t);

// Zero absorbs; Unit(i)+Unit(j) = Unit((i+j) mod q).
MuClassIndex index_add(MuClassIndex i, MuClassIndex j, const ClassTable &t);

} // namespace taufact::relations
