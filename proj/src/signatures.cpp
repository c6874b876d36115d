#include "taufact/signatures.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>

#include "taufact/arith.hpp"

namespace taufact::signatures {

int Signature::unit_total() const {
    return std::accumulate(unit_counts.begin(), unit_counts.end(), 0);
}

std::strong_ordering operator<=>(const Signature &a, const Signature &b) {
    if (auto c = a.q <=> b.q; c != 0)
        return c;
    if (auto c = a.zero_count <=> b.zero_count; c != 0)
        return c;
    return a.unit_counts <=> b.unit_counts;
}

Signature signature_of(std::int64_t x, const relations::ClassTable &t) {
    if (x >= -1 && x <= 1)
        raise(errc::unit_input, "signature_of: |x| must be >= 2");
    Signature s;
    s.q = static_cast<int>(t.q());
    s.unit_counts.assign(static_cast<std::size_t>(s.q), 0);
    auto f = arith::factor(x < 0 ? -x : x);
    for (const auto &[p, e] : f.factors) {
        auto idx = relations::class_index(p, t);
        if (idx.is_zero())
            s.zero_count += e;
        else
            s.unit_counts[static_cast<std::size_t>(idx.index())] += e;
    }
    return s;
}

relations::MuClassIndex block_class(const std::vector<relations::MuClassIndex> &block,
                                    const relations::ClassTable &t) {
    if (block.empty())
        raise(errc::bad_signature, "block_class: block must be nonempty");
    std::int64_t sum = 0;
    for (auto idx : block) {
        if (idx.is_zero())
            return relations::MuClassIndex::zero();
        sum += idx.index();
    }
    return relations::MuClassIndex::unit(static_cast<int>(sum % t.q()));
}

namespace {

void validate_signature(const Signature &s) {
    if (s.q < 1 || s.unit_counts.size() != static_cast<std::size_t>(s.q))
        raise(errc::bad_signature, "signature: unit_counts must have q entries");
    if (s.zero_count < 0)
        raise(errc::bad_signature, "signature: negative zero_count");
    for (int c : s.unit_counts)
        if (c < 0)
            raise(errc::bad_signature, "signature: negative count");
}

// Memoized question: can `state` be split into >= 0 blocks, each with index
// sum ≡ c (mod q)? Packed keys when q <= 9 and all counts <= 63; a map
// fallback covers larger shapes.
class PartitionSearch {
  public:
    explicit PartitionSearch(int q) : q_(q) {}

    bool can_partition(const std::vector<int> &state, int c) {
        if (std::all_of(state.begin(), state.end(), [](int v) { return v == 0; }))
            return true;
        bool fast = q_ <= 9 &&
                    std::all_of(state.begin(), state.end(), [](int v) { return v <= 63; });
        if (fast) {
            std::uint64_t key = pack(state, c);
            auto it = memo_fast().find(key);
            if (it != memo_fast().end())
                return it->second;
            bool result = search(state, c);
            memo_fast()[key] = result;
            return result;
        }
        auto key = std::make_pair(state, c);
        auto it = memo_slow().find(key);
        if (it != memo_slow().end())
            return it->second;
        bool result = search(state, c);
        memo_slow()[key] = result;
        return result;
    }

    // Enumerates anchored submultisets T of state with sum(T) ≡ c in a fixed
    // odometer order; fn(T) returning true stops the scan.
    template <typename Fn>
    bool for_each_anchored_subset(const std::vector<int> &state, int c, Fn &&fn) {
        std::size_t anchor = 0;
        while (anchor < state.size() && state[anchor] == 0)
            ++anchor;
        std::vector<int> take(state.size(), 0);
        return subset_rec(state, c, anchor, 0, 0, take, fn);
    }

  private:
    std::uint64_t pack(const std::vector<int> &state, int c) const {
        std::uint64_t key = static_cast<std::uint64_t>(c) | (std::uint64_t(q_) << 6);
        int shift = 10;
        for (int v : state) {
            key |= std::uint64_t(v) << shift;
            shift += 6;
        }
        return key;
    }

    bool search(const std::vector<int> &state, int c) {
        return for_each_anchored_subset(state, c, [&](const std::vector<int> &take) {
            std::vector<int> rest(state.size());
            for (std::size_t i = 0; i < state.size(); ++i)
                rest[i] = state[i] - take[i];
            return can_partition(rest, c);
        });
    }

    template <typename Fn>
    bool subset_rec(const std::vector<int> &state, int c, std::size_t anchor,
                    std::size_t pos, int sum, std::vector<int> &take, Fn &&fn) {
        if (pos == state.size()) {
            if (sum % q_ == c)
                return fn(take);
            return false;
        }
        int lo = pos == anchor ? 1 : 0;
        for (int k = lo; k <= state[pos]; ++k) {
            take[pos] = k;
            if (subset_rec(state, c, anchor, pos + 1, sum + k * static_cast<int>(pos),
                           take, fn))
                return true;
        }
        take[pos] = 0;
        return false;
    }

    static std::unordered_map<std::uint64_t, bool> &memo_fast() {
        thread_local std::unordered_map<std::uint64_t, bool> memo;
        return memo;
    }
    static std::map<std::pair<std::vector<int>, int>, bool> &memo_slow() {
        thread_local std::map<std::pair<std::vector<int>, int>, bool> memo;
        return memo;
    }

    int q_;
};

Signature block_signature(int q, int zero, std::vector<int> counts) {
    Signature b;
    b.q = q;
    b.zero_count = zero;
    b.unit_counts = std::move(counts);
    return b;
}

} // namespace

AtomDecision signature_is_atom(const Signature &s) {
    validate_signature(s);
    int total = s.total();
    if (total == 0)
        raise(errc::unit_input, "signature_is_atom: at least one factor required");
    if (total == 1)
        return {Verdict::atom, {}};
    if (s.zero_count >= 2) {
        // two blocks, each holding a zero-class factor
        std::vector<int> zeros(s.unit_counts.size(), 0);
        AtomDecision d{Verdict::reducible, {}};
        d.witness_blocks.push_back(block_signature(s.q, 1, zeros));
        d.witness_blocks.push_back(block_signature(s.q, s.zero_count - 1, s.unit_counts));
        return d;
    }
    if (s.zero_count == 1)
        return {Verdict::atom, {}}; // the zero block cannot be matched

    PartitionSearch search(s.q);
    for (int c = 0; c < s.q; ++c) {
        std::vector<int> first_take;
        bool found = search.for_each_anchored_subset(s.unit_counts, c,
                                                     [&](const std::vector<int> &take) {
            int taken = std::accumulate(take.begin(), take.end(), 0);
            if (taken == s.total())
                return false; // proper first block only
            std::vector<int> rest(take.size());
            for (std::size_t i = 0; i < take.size(); ++i)
                rest[i] = s.unit_counts[i] - take[i];
            if (!search.can_partition(rest, c))
                return false;
            first_take = take;
            return true;
        });
        if (!found)
            continue;
        AtomDecision d{Verdict::reducible, {}};
        d.witness_blocks.push_back(block_signature(s.q, 0, first_take));
        std::vector<int> rem(s.unit_counts);
        for (std::size_t i = 0; i < rem.size(); ++i)
            rem[i] -= first_take[i];
        while (std::any_of(rem.begin(), rem.end(), [](int v) { return v > 0; })) {
            std::vector<int> next;
            search.for_each_anchored_subset(rem, c, [&](const std::vector<int> &take) {
                std::vector<int> rest(take.size());
                for (std::size_t i = 0; i < take.size(); ++i)
                    rest[i] = rem[i] - take[i];
                if (!search.can_partition(rest, c))
                    return false;
                next = take;
                return true;
            });
            d.witness_blocks.push_back(block_signature(s.q, 0, next));
            for (std::size_t i = 0; i < rem.size(); ++i)
                rem[i] -= next[i];
        }
        return d;
    }
    return {Verdict::atom, {}};
}

AtomTable generate_atom_table(std::int64_t n, int max_per_class,
                              const std::vector<int> &x0_levels,
                              std::size_t entry_cap) {
    if (n < 3 || n % 2 == 0 || !arith::is_prime(n))
        raise(errc::bad_modulus, "atom tables require an odd prime modulus");
    if (max_per_class < 1)
        raise(errc::out_of_range, "max_per_class must be >= 1");
    std::vector<int> levels(x0_levels);
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
    if (levels.empty())
        raise(errc::out_of_range, "at least one x0 level required");
    for (int l : levels)
        if (l != 0 && l != 1)
            raise(errc::out_of_range, "x0 levels are restricted to {0, 1}");

    int q = static_cast<int>((n - 1) / 2);
    double per_level = 1;
    for (int i = 1; i < q; ++i)
        per_level *= max_per_class + 1;
    if (per_level * static_cast<double>(levels.size()) > static_cast<double>(entry_cap))
        raise(errc::table_too_large, "atom table would exceed the entry cap");

    AtomTable table;
    table.n = n;
    table.max_per_class = max_per_class;
    table.x0_levels = levels;
    for (int level : levels) {
        std::vector<int> counts(static_cast<std::size_t>(q), 0);
        counts[0] = level;
        // odometer over counts[1..q-1], last index fastest
        while (true) {
            Signature s;
            s.q = q;
            s.zero_count = 0;
            s.unit_counts = counts;
            AtomTable::Entry entry;
            entry.signature = s;
            if (s.total() == 0)
                entry.decision = {Verdict::unit, {}};
            else
                entry.decision = signature_is_atom(s);
            table.entries.push_back(std::move(entry));

            int pos = q - 1;
            while (pos >= 1 && counts[static_cast<std::size_t>(pos)] == max_per_class) {
                counts[static_cast<std::size_t>(pos)] = 0;
                --pos;
            }
            if (pos < 1)
                break;
            ++counts[static_cast<std::size_t>(pos)];
        }
    }
    return table;
}

std::vector<Signature> atoms_in_table(const AtomTable &t) {
    std::vector<Signature> out;
    for (const auto &e : t.entries)
        if (e.decision.verdict == Verdict::atom)
            out.push_back(e.signature);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace taufact::signatures
