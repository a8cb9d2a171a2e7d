#pragma once

#include <string>
#include <string_view>

#include "modpic/divisor_class.hpp"
#include "vendor_json.hpp"

namespace modpic {

// Class file format:
//   {"g":3,"n":0,"coeffs":{"lambda":"6","delta:1:{}":"-2"}}
// Keys: "lambda", "delta0", "omega:<i>", "psi:<i>" (input only) and
// "delta:<i>:{a,b,...}" with ascending marks.  Coefficients are "p" or "p/q".
std::string element_key(const BasisElement& b);
BasisElement parse_element_key(std::string_view key);

nlohmann::ordered_json to_json(const DivisorClass& d);
DivisorClass class_from_json(const nlohmann::ordered_json& doc);

std::string serialize(const DivisorClass& d);
// Throws ParseError.  When `expected` is given, the document's (g,n) must match.
DivisorClass parse_class(std::string_view text);
DivisorClass parse_class(std::string_view text, SpaceId expected);

}  // namespace modpic
