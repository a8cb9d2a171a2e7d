#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "modpic/families.hpp"
#include "modpic/vendor_json.hpp"

namespace modpic {

// Family file format:
//   {"g":0,"n":5,"components":[{"genus":0,"marks":[1,2,5]},{"genus":0,"marks":[3,4]}],
//    "edges":[[0,1]],"base":0,"moving":{"mark":1}}
// "moving" is {"mark":k} or {"edge":e}.  An optional "label" string is kept.
nlohmann::ordered_json to_json(const TestFamily& f);
TestFamily family_from_json(const nlohmann::ordered_json& doc);
TestFamily parse_family(std::string_view text);

// Pairing reports.  Row labels are family labels, column labels are caller
// supplied (usually class names).
std::string matrix_csv(const RationalMatrix& m, const std::vector<std::string>& row_labels,
                       const std::vector<std::string>& col_labels);
nlohmann::ordered_json matrix_json(const RationalMatrix& m,
                                   const std::vector<std::string>& row_labels,
                                   const std::vector<std::string>& col_labels);

}  // namespace modpic
