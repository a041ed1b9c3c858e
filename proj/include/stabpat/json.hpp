#pragma once

#include <json.hpp>

#include "stabpat/bijections.hpp"
#include "stabpat/eulerian.hpp"
#include "stabpat/extendability.hpp"
#include "stabpat/patterns.hpp"
#include "stabpat/stability.hpp"

namespace stabpat {

// Key order is fixed and every exact count is a decimal string, so equal
// results always serialize to identical bytes.
using Json = nlohmann::ordered_json;

Json to_json(const Multiset& m);
Json to_json(const Distribution& d);
Json to_json(const StabilityVerdict& v);
Json to_json(const PatternScan& r);
Json to_json(const ScanReport& r);
Json to_json(const GapVectors& g);
Json to_json(const ExtendabilityReport& r);
Json to_json(const WitnessPair& w);
Json to_json(const RunDecomposition& d);
Json to_json(const EulerianTable& t);
Json to_json(const ATable& t);
Json to_json(const SeriesCheck& c);

} // namespace stabpat
