#pragma once

#include <nlohmann/json.hpp>

#include "orbitfin/definable.hpp"
#include "orbitfin/finstruct.hpp"
#include "orbitfin/formula.hpp"

namespace orbitfin::json {

using nlohmann::json;

json to_json(const AtomBase& base);
AtomBase base_from_json(const json& j);

json to_json(const Formula& f);
Formula formula_from_json(const json& j);

/// {"signature":[{"name","arity"}], "size":n, "relations":{name:[[ids]]}}
json to_json(const FinStructure& s);
FinStructure finstructure_from_json(const json& j);

/// {"base", "sorts":[{"name","dim"[,"family","orientation"]}], "relations":[{"name","arity","guard","formula"}]}
json to_json(const DefStructure& d);
DefStructure defstructure_from_json(const json& j);

/// The sampled structure plus its point table.
json to_json(const SampledStructure& s, const DefStructure& d);

/// Parse JSON text, converting syntax errors to ParseError.
json parse(const std::string& text);

} // namespace orbitfin::json
