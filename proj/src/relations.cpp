#include "taufact/relations.hpp"

#include <map>
#include <mutex>
#include <set>

#include "taufact/arith.hpp"

namespace taufact::relations {

Modulus::Modulus(std::int64_t n) : n_(n) {
    if (n < 2)
        raise(errc::bad_modulus, "modulus must be >= 2");
    odd_prime_ = (n % 2 == 1) && arith::is_prime(n);
}

std::int64_t Modulus::unit_index_modulus() const {
    if (!odd_prime_)
        raise(errc::bad_modulus, "unit_index_modulus requires an odd prime modulus");
    return (n_ - 1) / 2;
}

bool tau_related(std::int64_t x, std::int64_t y, const Modulus &n) {
    return arith::mod_residue(x, n.n()) == arith::mod_residue(y, n.n());
}

bool mu_related(std::int64_t x, std::int64_t y, const Modulus &n) {
    std::int64_t rx = arith::mod_residue(x, n.n());
    std::int64_t ry = arith::mod_residue(y, n.n());
    return rx == ry || rx == (n.n() - ry) % n.n();
}

int MuClassIndex::index() const {
    if (is_zero())
        raise(errc::out_of_range, "MuClassIndex: Zero has no unit index");
    return i_;
}

MuClassIndex ClassTable::index_of_residue(std::int64_t r) const {
    if (r < 0 || r >= n_)
        raise(errc::out_of_range, "index_of_residue: residue outside [0, n)");
    std::int32_t i = residue_to_index_[static_cast<std::size_t>(r)];
    return i < 0 ? MuClassIndex::zero() : MuClassIndex::unit(i);
}

std::vector<std::vector<std::int64_t>> ClassTable::class_members() const {
    std::vector<std::vector<std::int64_t>> members(static_cast<std::size_t>(q_) + 1);
    members[0].push_back(0);
    for (std::int64_t r = 1; r < n_; ++r)
        members[static_cast<std::size_t>(residue_to_index_[static_cast<std::size_t>(r)]) + 1]
            .push_back(r);
    return members;
}

namespace {

void require_odd_prime(std::int64_t n) {
    if (n < 3 || n % 2 == 0 || !arith::is_prime(n))
        raise(errc::bad_modulus, "modulus must be an odd prime");
}

} // namespace

bool verify_mureps_claim(std::int64_t n, std::int64_t a) {
    require_odd_prime(n);
    if (a <= 1 || a >= n)
        raise(errc::out_of_range, "base must satisfy 1 < a < n");
    std::int64_t q = (n - 1) / 2;
    std::set<std::int64_t> classes; // canonical member min(r, n-r)
    std::int64_t power = 1;
    for (std::int64_t e = 1; e <= q; ++e) {
        power = arith::mod_mul(power, a, n);
        classes.insert(std::min(power, n - power));
    }
    bool last_is_unit = (power == 1 || power == n - 1);
    return static_cast<std::int64_t>(classes.size()) == q && last_is_unit;
}

std::int64_t find_mu_generator(std::int64_t n) {
    require_odd_prime(n);
    for (std::int64_t a = 2; a < n; ++a)
        if (verify_mureps_claim(n, a))
            return a;
    raise(errc::no_generator, "no mu generator found (unexpected for odd prime)");
}

ClassTable build_class_table(std::int64_t n) {
    require_odd_prime(n);
    if (n > 1'000'000)
        raise(errc::bad_modulus, "class tables capped at n <= 10^6");
    ClassTable t;
    t.n_ = n;
    t.q_ = (n - 1) / 2;
    t.base_ = find_mu_generator(n);
    t.residue_to_index_.assign(static_cast<std::size_t>(n), -1);
    std::int64_t power = 1;
    for (std::int64_t e = 1; e <= t.q_; ++e) {
        power = arith::mod_mul(power, t.base_, n);
        std::int32_t idx = static_cast<std::int32_t>(e % t.q_);
        t.residue_to_index_[static_cast<std::size_t>(power)] = idx;
        t.residue_to_index_[static_cast<std::size_t>(n - power)] = idx;
    }
    return t;
}

std::shared_ptr<const ClassTable> shared_class_table(std::int64_t n) {
    static std::mutex mtx;
    static std::map<std::int64_t, std::shared_ptr<const ClassTable>> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end())
        return it->second;
    auto table = std::make_shared<const ClassTable>(build_class_table(n));
    cache.emplace(n, table);
    return table;
}

MuClassIndex class_index(std::int64_t x, const ClassTable &t) {
    if (x == 0)
        raise(errc::zero_input, "class_index: x must be nonzero");
    return t.index_of_residue(arith::mod_residue(x, t.n()));
}

MuClassIndex index_add(MuClassIndex i, MuClassIndex j, const ClassTable &t) {
    if (i.is_zero() || j.is_zero())
        return MuClassIndex::zero();
    return MuClassIndex::unit(static_cast<int>((i.index() + j.index()) % t.q()));
}

} // namespace taufact::relations
