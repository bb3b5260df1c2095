#pragma once

#include <nlohmann/json.hpp>

#include "schur/classify.hpp"
#include "schur/construct.hpp"
#include "schur/duality.hpp"
#include "schur/sring.hpp"

namespace schur::io {

using nlohmann::json;

// {"ring": spec, "moduli": [[...], ...]}
json ring_json(const CGRing& R);
// Parses the spec and checks the moduli when present. Throws ParseError.
RingPtr ring_from_json(const json& j);

json ring_info(const CGRing& R);
json ideal_json(const CGRing& R, Ideal I);
json set_json(const ElementSet& X);

// {"ring", "moduli", "rank", "classes"}
json sring_json(const SRing& A);
// Throws ParseError on a malformed document, InvalidArgument if the classes
// do not partition the ring.
SRing sring_from_json(const json& j);

json verify_json(const VerifyReport& report);
json wreath_json(const SRing& A);
json subgroup_json(const UnitSubgroup& K);
json decomposition_json(const Decomposition& D, const CGRing& R);
json nondense_json(const NondenseReport& report);
json duality_json(const DualityReport& report);
json construction_json(const Construction& c);

}  // namespace schur::io
