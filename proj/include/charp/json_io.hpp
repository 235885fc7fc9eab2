#pragma once

// JSON forms of the domain types. Weights are integer arrays; data are
// {"type": "GL", "n": 4}. Object keys are emitted in sorted order, so dumps
// are byte-stable.

#include <json.hpp>

#include "charp/bundles.hpp"
#include "charp/certificate.hpp"
#include "charp/cohomology.hpp"
#include "charp/rootmorph.hpp"

namespace charp {

using Json = nlohmann::json;

Json to_json(const RootDatum& datum);
DatumPtr datum_from_json(const Json& j);

Json to_json(const Weight& w);
Weight weight_from_json(const Json& j, const DatumPtr& datum);

Json to_json(const Root& alpha);

Json to_json(const H1Status& s);
H1Status h1_from_json(const Json& j, const DatumPtr& datum);

Json to_json(const DigitExpansion& e);
Json to_json(const AndersenReport& r);
Json to_json(const Char0Cohomology& c);

Json to_json(const EquivariantBundleWeights& b);
EquivariantBundleWeights bundle_from_json(const Json& j);

Json to_json(const RingChar& r);
RingChar ring_from_json(const Json& j);

Json to_json(const MorphismVerdict& v);
// Failure roots are resolved against the source datum first, then the target.
MorphismVerdict verdict_from_json(const Json& j, const DatumPtr& source, const DatumPtr& target);

Json to_json(const RigidityVerdict& v);

// {"source": datum, "target": datum, "h": [[...]], "d_map": "identity" |
//  [{"from": root, "to": root}, ...], "q": int | [int per source root],
//  "ring": "5" | "5^2" | "0" | {"kind": ..., "p": ..., "n": ...}}
PMorphismData pmorphism_from_json(const Json& j);

Json to_json(const CaseRow& row);
Json to_json(const Certificate& c);
Certificate certificate_from_json(const Json& j);

}  // namespace charp
