#pragma once

// JSON formats for every exchange type. Scalars are strings ("-3", "5/6")
// or {"m": 6, "coords": ["0","1"]} for cyclotomics (power-basis
// coordinates, constant term first); bare integral JSON numbers are
// accepted on input. Malformed input raises parse_error.

#include <string>

#include <json.hpp>

#include "lambdanr/characters.hpp"
#include "lambdanr/ghost.hpp"
#include "lambdanr/necklace.hpp"
#include "lambdanr/scalar.hpp"
#include "lambdanr/symrep.hpp"

namespace lambdanr {

using json = nlohmann::json;

json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const json& j);
Scalar scalar_from_text(const std::string& text);

json ring_to_json(const Ring& r);
Ring ring_from_json(const json& j);

// {"repr":"periodic","period":c,"values":[...]} |
// {"repr":"truncated","horizon":N,"values":[...]}
json ghost_to_json(const GhostVec& a);
GhostVec ghost_from_json(const json& j);

// {"repr":"sparse","entries":{"2":"3","6":"-1/2"}} |
// {"repr":"truncated","horizon":N,"values":[...]}
json neck_to_json(const NeckVec& x);
NeckVec neck_from_json(const json& j);

// {"kind":"cyclic","n":6} | {"kind":"symmetric","n":4} |
// {"kind":"product","factors":[...]}
json group_to_json(const GroupSpec& spec);
GroupPtr group_from_json(const json& j);

// {"ring":"Z"|"Q"|{"cyclotomic":m},"values":[...]} with values in the
// group's canonical class order.
json character_to_json(const ClassFunction& chi);
ClassFunction character_from_json(const json& j, GroupPtr group);

// {"k":2,"entries":[["1","3"],["1/3","-1"]]}
json mas_to_json(const MASMatrix& m);
MASMatrix mas_from_json(const json& j);

// Inline JSON text, or the contents of a file when prefixed with '@'.
json load_json_argument(const std::string& arg);

}  // namespace lambdanr
