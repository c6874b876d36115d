#pragma once

// Definition-literal oracles, kept independent of the production search
// paths. Exponential; test scale only.

#include <cstdint>
#include <vector>

namespace naive {

inline void collect_partitions(std::int64_t m, std::int64_t max_part,
                               std::vector<std::int64_t> &prefix,
                               std::vector<std::vector<std::int64_t>> &out) {
    if (m == 1) {
        out.push_back(prefix);
        return;
    }
    for (std::int64_t d = max_part < m ? max_part : m; d >= 2; --d) {
        if (m % d != 0)
            continue;
        prefix.push_back(d);
        collect_partitions(m / d, d, prefix, out);
        prefix.pop_back();
    }
}

inline std::vector<std::vector<std::int64_t>> partitions(std::int64_t m) {
    std::vector<std::vector<std::int64_t>> out;
    std::vector<std::int64_t> prefix;
    collect_partitions(m, m, prefix, out);
    return out;
}

// Every signed multiplicative partition, pairwise congruence checked
// directly against the definition.
inline bool atom(std::int64_t x, std::int64_t n) {
    std::int64_t ax = x < 0 ? -x : x;
    for (const auto &parts : partitions(ax)) {
        std::size_t k = parts.size();
        if (k < 2)
            continue;
        for (std::uint64_t mask = 0; mask < (1ULL << k); ++mask) {
            bool ok = true;
            std::int64_t r0 = 0;
            for (std::size_t i = 0; i < k && ok; ++i) {
                std::int64_t sp = (mask >> i) & 1 ? -parts[i] : parts[i];
                std::int64_t r = ((sp % n) + n) % n;
                if (i == 0)
                    r0 = r;
                else if (r != r0)
                    ok = false;
            }
            if (ok)
                return false;
        }
    }
    return true;
}

// Set-partition reducibility on an index multiset (entries: -1 for the
// zero class, otherwise a unit index). Partition into >= 2 blocks whose
// classes (zero-absorbing index sums mod q) all agree.
inline bool signature_atom(const std::vector<int> &items, int q) {
    std::size_t n = items.size();
    if (n < 2)
        return true;
    std::vector<int> assign(n, -1);
    auto block_cls = [&](const std::vector<int> &members) {
        long sum = 0;
        for (int it : members) {
            if (it < 0)
                return -1;
            sum += it;
        }
        return static_cast<int>(sum % q);
    };
    // enumerate set partitions via restricted growth strings
    std::vector<int> rgs(n, 0);
    while (true) {
        int blocks = 0;
        for (std::size_t i = 0; i < n; ++i)
            blocks = std::max(blocks, rgs[i] + 1);
        if (blocks >= 2) {
            bool same = true;
            int cls = -2;
            for (int b = 0; b < blocks && same; ++b) {
                std::vector<int> members;
                for (std::size_t i = 0; i < n; ++i)
                    if (rgs[i] == b)
                        members.push_back(items[i]);
                int c = block_cls(members);
                if (cls == -2)
                    cls = c;
                else if (c != cls)
                    same = false;
            }
            if (same)
                return false;
        }
        // next restricted growth string
        std::size_t i = n - 1;
        while (i > 0) {
            int maxv = 0;
            for (std::size_t j = 0; j < i; ++j)
                maxv = std::max(maxv, rgs[j] + 1);
            if (rgs[i] < maxv) {
                ++rgs[i];
                for (std::size_t j = i + 1; j < n; ++j)
                    rgs[j] = 0;
                break;
            }
            --i;
        }
        if (i == 0)
            return true;
    }
}

} // namespace naive
