#pragma once

#include "poly/bwb.hpp"
#include "poly/coeff.hpp"
#include "poly/deform.hpp"
#include "poly/quantum.hpp"
#include "poly/ring.hpp"
#include "poly/schur.hpp"

#include "json.hpp"

namespace poly {

using Json = nlohmann::json;

// Schemas are documented in FORMATS.md; every emitter here round-trips
// through the matching parser.

Json to_json(const Coeff& c);
Coeff coeff_from_json(const Json& j);

Json to_json(const SchurClass& x);
SchurClass schur_from_json(const Json& j);

Json to_json(const BwbResult& r);

Json to_json(const QuantumClass& x);
QuantumClass quantum_from_json(const Json& j, const RingSpec& spec);

Json invariants_to_json(const Invariants& I);
Invariants invariants_from_json(const Json& j);

Json matrix_to_json(const BMatrix& B);
BMatrix matrix_from_json(const Json& j);

Json to_json(const DegeneracyResult& r);
Json to_json(const VlocusResult& r);

}  // namespace poly
