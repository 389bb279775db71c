#pragma once

#include <json.hpp>

#include "polyvar/envelope.hpp"
#include "polyvar/gridcount.hpp"
#include "polyvar/incidence.hpp"
#include "polyvar/partition.hpp"

namespace polyvar {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
Json to_json(const Polynomial& p);
Json to_json(const RationalPoint& p);
Json to_json(const HilbertData& d);
Json to_json(const GroebnerBasis& gb);
Json to_json(const DeltaProfile& p);
Json to_json(const ComponentInfo& c);
Json to_json(const SiegelResult& r);
Json to_json(const PartitionReport& r);
Json to_json(const EnvelopeReport& r);
Json to_json(const FullCover& c);
Json to_json(const BoundReport& r);
Json to_json(const GridComponentEstimate& e);
Json to_json(const StableGridEstimate& e);
Json to_json(const SharpConstructionResult& r);
Json to_json(const PartitionedIncidenceReport& r);
Json to_json(const TupleCertificate& c);
Json to_json(const ConverseBezoutReport& r);

std::string sign_key(const std::vector<int>& signs);

}  // namespace polyvar
