#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"

#include "taufact/engine.hpp"
#include "taufact/relations.hpp"
#include "taufact/signatures.hpp"
#include "taufact/verify.hpp"

namespace taufact::io {

// ordered_json keeps insertion order, so identical inputs serialize to
// byte-identical documents.
using json = nlohmann::ordered_json;

json to_json(const arith::PrimeFactorization &f);
json to_json(const engine::SignedFactorization &f);
json to_json(const engine::PrimeCheckVerdict &v);
json to_json(const signatures::Signature &s);
json to_json(const signatures::AtomDecision &d);
json to_json(const signatures::AtomTable &t);
json to_json(const verify::SweepRecord &r);
json to_json(const verify::DiscrepancyReport &r);
json to_json(const verify::TheoremCheck &c);

// {n, base, q, classes: [[members...], ...]}; classes[0] is the zero class.
json class_table_json(const relations::ClassTable &t);

const char *verdict_name(signatures::Verdict v);

// Blocks joined by '|', elements by ','; 'z' marks a zero-class factor,
// unit factors appear as their class index.
std::string witness_string(const signatures::AtomDecision &d);

// Row-streamed writers: constant memory for large tables.
void write_table_json(std::ostream &os, const signatures::AtomTable &t);
void write_table_csv(std::ostream &os, const signatures::AtomTable &t);

// "i:count,i:count" unit-count spec (index 0 = x0 class).
signatures::Signature parse_signature(int q, int zero_count, const std::string &counts_spec);

std::string format_factorization(const arith::PrimeFactorization &f);
std::string format_signed(const engine::SignedFactorization &f);

} // namespace taufact::io
