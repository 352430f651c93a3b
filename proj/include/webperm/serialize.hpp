#pragma once

// JSON forms of the library's values:
//   Matching            [[opener, closer], ...] sorted by opener
//   DyckPath            "NENNENEE"
//   GridConfiguration   {"sigma": [...], "elbows": [[i, j], ...]}
//   ResolutionOutcome   {"<permutation word>": multiplicity, ...}
//   Cycle               [min, ...]
//   CoefficientVector   {"{{1,2},{3,4}}": coefficient, ...}
//   ClaimReport         {"claim", "n", "k", "lhs", "rhs", "pass"}
//   TransitionMatrix    {"n", "rows": [...], "cols": [...], "entries": [[...], ...]}
// Integers that do not fit in 64 bits are written as decimal strings.

#include <json.hpp>

#include "webperm/andre.hpp"
#include "webperm/enumeration.hpp"
#include "webperm/grid.hpp"
#include "webperm/oracle.hpp"
#include "webperm/transition.hpp"

namespace webperm {

nlohmann::json to_json(const BigInt& v);
nlohmann::json to_json(const Matching& m);
nlohmann::json to_json(const DyckPath& p);
nlohmann::json to_json(const GridConfiguration& g);
nlohmann::json to_json(const ResolutionOutcome& r);
nlohmann::json to_json(const Cycle& c);
nlohmann::json to_json(const CoefficientVector& c);
nlohmann::json to_json(const ClaimReport& r);
nlohmann::json to_json(const TransitionMatrix& a);

Matching matching_from_json(const nlohmann::json& j);
DyckPath dyck_from_json(const nlohmann::json& j);
GridConfiguration grid_from_json(const nlohmann::json& j);
Cycle cycle_from_json(const nlohmann::json& j);

}  // namespace webperm
