#pragma once

#include <nlohmann/json.hpp>

#include "conforma/algebra.hpp"

namespace conforma {

// Algebra spec files: a JSON presentation with declared parameters, generator
// families with grade ranges, and an explicit bracket table. Pairs absent from
// the table fall back to the skew image of the reversed pair, else to zero.
//
//   {"name": "...", "parameters": ["alpha"],
//    "generators": [{"family": "H", "grade-range": [-1, 4]}],
//    "brackets": [{"lhs": "L", "rhs": "L",
//                  "value": [{"gen": "L", "poly": "d + 2*l"}]}]}
nlohmann::json emit_spec_json(const Algebra& A, int grade_hi);

Algebra load_spec_json(const nlohmann::json& doc);

}  // namespace conforma
