#pragma once

#include <json.hpp>

#include "kakeya/analysis/optimality.hpp"
#include "kakeya/analysis/uniqueness.hpp"
#include "kakeya/expansion/expansion.hpp"
#include "kakeya/oracle/oracle.hpp"
#include "kakeya/sequences/checks.hpp"

namespace kakeya {

using Json = nlohmann::ordered_json;

/// Exact values as "p/q" or "a+b*phi" strings; enclosures as {"lo","hi","bits"}.
Json value_to_json(const Value& v);
Value value_from_json(const Json& j);

Json to_json(const KakeyaVerdict& v);
KakeyaVerdict kakeya_verdict_from_json(const Json& j);

Json to_json(const SandwichWitness& w);
SandwichWitness sandwich_from_json(const Json& j);

Json to_json(const OptimalityVerdict& v);
OptimalityVerdict optimality_verdict_from_json(const Json& j);

Json to_json(const CounterexampleReport& r);
CounterexampleReport counterexample_from_json(const Json& j);

Json to_json(const UniquenessVerdict& v);
UniquenessVerdict uniqueness_verdict_from_json(const Json& j);

Json to_json(const EnvelopeReport& r);
EnvelopeReport envelope_report_from_json(const Json& j);

Json to_json(const MinError& m);
MinError min_error_from_json(const Json& j);

}  // namespace kakeya
