#pragma once

#include <json.hpp>

#include "vat/biclique.hpp"
#include "vat/measures.hpp"
#include "vat/reduction.hpp"

namespace vat {

// All records serialize with a fixed key order so equal inputs give
// byte-identical output.
using Json = nlohmann::ordered_json;

Json to_json(const Ratio& r);
Json to_json(const AttackResult& result);
Json to_json(const BicliqueWitness& w);
Json to_json(const LemmaIdentityReport& report);
Json to_json(const LemmaBoundsReport& report);
Json to_json(const ReductionReport& report);

std::string to_text(const AttackResult& result);
std::string to_text(const BicliqueWitness& w);
std::string to_text(const ReductionReport& report);

}  // namespace vat
