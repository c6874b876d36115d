#include "taufact/io.hpp"

#include <ostream>
#include <sstream>

namespace taufact::io {

json to_json(const arith::PrimeFactorization &f) {
    json j;
    j["value"] = f.value;
    j["sign"] = f.sign;
    json factors = json::array();
    for (const auto &[p, e] : f.factors)
        factors.push_back({p, e});
    j["factors"] = factors;
    return j;
}

json to_json(const engine::SignedFactorization &f) {
    json j;
    j["unit"] = f.unit;
    j["parts"] = f.parts;
    return j;
}

json to_json(const engine::PrimeCheckVerdict &v) {
    json j;
    switch (v.kind) {
    case engine::PrimeCheckVerdict::Kind::confirmed_prime:
        j["verdict"] = "confirmed-prime";
        break;
    case engine::PrimeCheckVerdict::Kind::counterexample_found:
        j["verdict"] = "counterexample-found";
        j["multiple"] = v.multiple;
        j["factorization"] = to_json(*v.witness);
        break;
    case engine::PrimeCheckVerdict::Kind::no_counterexample_up_to:
        j["verdict"] = "no-counterexample";
        j["bound"] = v.bound;
        break;
    }
    return j;
}

json to_json(const signatures::Signature &s) {
    json j;
    j["zero"] = s.zero_count;
    j["counts"] = s.unit_counts;
    return j;
}

const char *verdict_name(signatures::Verdict v) {
    switch (v) {
    case signatures::Verdict::atom: return "atom";
    case signatures::Verdict::reducible: return "reducible";
    case signatures::Verdict::unit: return "unit";
    }
    return "unknown";
}

std::string witness_string(const signatures::AtomDecision &d) {
    std::string out;
    for (std::size_t b = 0; b < d.witness_blocks.size(); ++b) {
        if (b)
            out += "|";
        const auto &block = d.witness_blocks[b];
        bool first = true;
        for (int z = 0; z < block.zero_count; ++z) {
            if (!first)
                out += ",";
            out += "z";
            first = false;
        }
        for (int i = 0; i < block.q; ++i)
            for (int c = 0; c < block.unit_counts[static_cast<std::size_t>(i)]; ++c) {
                if (!first)
                    out += ",";
                out += std::to_string(i);
                first = false;
            }
    }
    return out;
}

json to_json(const signatures::AtomDecision &d) {
    json j;
    j["verdict"] = verdict_name(d.verdict);
    if (d.verdict == signatures::Verdict::reducible) {
        json blocks = json::array();
        for (const auto &b : d.witness_blocks)
            blocks.push_back(to_json(b));
        j["witness"] = blocks;
    }
    return j;
}

namespace {

json table_header(const signatures::AtomTable &t) {
    json j;
    j["n"] = t.n;
    j["max_per_class"] = t.max_per_class;
    j["x0_levels"] = t.x0_levels;
    j["entries"] = json::array();
    return j;
}

json entry_json(const signatures::AtomTable::Entry &e) {
    json row;
    row["signature"] = to_json(e.signature);
    row["verdict"] = verdict_name(e.decision.verdict);
    if (e.decision.verdict == signatures::Verdict::reducible)
        row["witness"] = witness_string(e.decision);
    return row;
}

} // namespace

json to_json(const signatures::AtomTable &t) {
    json j = table_header(t);
    for (const auto &e : t.entries)
        j["entries"].push_back(entry_json(e));
    return j;
}

void write_table_json(std::ostream &os, const signatures::AtomTable &t) {
    os << "{\"n\":" << t.n << ",\"max_per_class\":" << t.max_per_class
       << ",\"x0_levels\":" << json(t.x0_levels).dump() << ",\"entries\":[\n";
    for (std::size_t i = 0; i < t.entries.size(); ++i) {
        os << entry_json(t.entries[i]).dump();
        if (i + 1 < t.entries.size())
            os << ",";
        os << "\n";
    }
    os << "]}\n";
}

void write_table_csv(std::ostream &os, const signatures::AtomTable &t) {
    int q = t.entries.empty() ? 0 : t.entries.front().signature.q;
    os << "zero";
    for (int i = 0; i < q; ++i)
        os << ",c" << i;
    os << ",verdict,witness\n";
    for (const auto &e : t.entries) {
        os << e.signature.zero_count;
        for (int i = 0; i < q; ++i)
            os << "," << e.signature.unit_counts[static_cast<std::size_t>(i)];
        os << "," << verdict_name(e.decision.verdict) << ",";
        if (e.decision.verdict == signatures::Verdict::reducible)
            os << witness_string(e.decision);
        os << "\n";
    }
}

json class_table_json(const relations::ClassTable &t) {
    json j;
    j["n"] = t.n();
    j["base"] = t.base();
    j["q"] = t.q();
    json classes = json::array();
    for (const auto &members : t.class_members())
        classes.push_back(members);
    j["classes"] = classes;
    return j;
}

json to_json(const verify::SweepRecord &r) {
    json j;
    j["x"] = r.x;
    if (r.oracle)
        j["oracle"] = *r.oracle;
    if (r.theorem) {
        j["theorem"] = *r.theorem;
        j["rule"] = r.theorem_rule;
    }
    if (r.signature)
        j["signature"] = *r.signature;
    return j;
}

json to_json(const verify::DiscrepancyReport &r) {
    json j;
    j["n"] = r.n;
    j["lo"] = r.lo;
    j["hi"] = r.hi;
    json paths = json::array();
    for (auto p : r.paths)
        paths.push_back(verify::path_name(p));
    j["paths"] = paths;
    j["checked"] = r.checked;
    j["pass"] = r.pass();
    json mism = json::array();
    for (const auto &m : r.mismatches)
        mism.push_back(to_json(m));
    j["mismatches"] = mism;
    if (!r.verdicts.empty()) {
        json v = json::array();
        for (const auto &rec : r.verdicts)
            v.push_back(to_json(rec));
        j["verdicts"] = v;
    }
    return j;
}

json to_json(const verify::TheoremCheck &c) {
    json j;
    j["id"] = verify::check_id_name(c.id);
    j["params"] = c.params;
    j["passed"] = c.passed;
    j["witnesses"] = c.witnesses;
    if (!c.note.empty())
        j["note"] = c.note;
    return j;
}

signatures::Signature parse_signature(int q, int zero_count, const std::string &counts_spec) {
    if (q < 1)
        raise(errc::bad_signature, "parse_signature: q must be >= 1");
    signatures::Signature s;
    s.q = q;
    s.zero_count = zero_count;
    s.unit_counts.assign(static_cast<std::size_t>(q), 0);
    std::stringstream ss(counts_spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty())
            continue;
        auto colon = item.find(':');
        if (colon == std::string::npos)
            raise(errc::bad_signature, "counts spec entries look like idx:count");
        int idx = std::stoi(item.substr(0, colon));
        int count = std::stoi(item.substr(colon + 1));
        if (idx < 0 || idx >= q || count < 0)
            raise(errc::bad_signature, "counts spec index/count out of range");
        s.unit_counts[static_cast<std::size_t>(idx)] += count;
    }
    return s;
}

std::string format_factorization(const arith::PrimeFactorization &f) {
    std::ostringstream os;
    os << f.value << " = ";
    if (f.sign < 0)
        os << "-1";
    if (f.factors.empty()) {
        if (f.sign > 0)
            os << "1";
        return os.str();
    }
    bool first = f.sign > 0;
    for (const auto &[p, e] : f.factors) {
        if (!first)
            os << " * ";
        os << p;
        if (e > 1)
            os << "^" << e;
        first = false;
    }
    return os.str();
}

std::string format_signed(const engine::SignedFactorization &f) {
    std::ostringstream os;
    if (f.unit < 0)
        os << "-1 * ";
    for (std::size_t i = 0; i < f.parts.size(); ++i) {
        if (i)
            os << " * ";
        if (f.parts[i] < 0)
            os << "(" << f.parts[i] << ")";
        else
            os << f.parts[i];
    }
    return os.str();
}

} // namespace taufact::io
