#pragma once

// JSON forms of instances and results.
//
//   table: {"format":"table","n":3,"alpha":"1/2","values":{"+0-":"7/2",...}}
//   sum:   {"format":"sum","n":5,"alpha":"3/4",
//           "terms":[{"scope":[0,2],"values":{"++":"1",...}},...]}
//
// Rationals are strings "p/q" or "p"; plain JSON integers are accepted on
// input. Every parse failure throws FormatError naming the offending key.

#include <memory>

#include <nlohmann/json.hpp>

#include "skewbisub/bisubmodularity.hpp"
#include "skewbisub/lovasz.hpp"
#include "skewbisub/minimizer.hpp"
#include "skewbisub/oracle.hpp"

namespace skewbisub {

using json = nlohmann::json;

json to_json(const TableFunction& f);
json to_json(const SumFunction& f);
json to_json(const ChainDecomposition& d);
json to_json(const ViolationWitness& w);
json to_json(const MinimizeReport& r);

/// Parses either instance form; the result is a TableFunction or a SumFunction.
std::unique_ptr<ValueOracle> instance_from_json(const json& doc);

/// Parses {"atoms":[{"u":"+-","w":"2/5"},...]}.
ChainDecomposition decomposition_from_json(const json& doc);

}  // namespace skewbisub
