#pragma once

#include "json.hpp"

#include "quadrics/mu_involution.hpp"
#include "quadrics/polynomial.hpp"
#include "quadrics/poset.hpp"

namespace quadrics {

using nlohmann::json;

json to_json(const MuInvolution& pi);
MuInvolution mu_involution_from_json(const json& j);

// [{"exps": [...], "coef": int}, ...] in term order.
json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const json& j);

// {"mu": [...], "nodes": [{"id", "word", "rank", "dcount"}],
//  "edges": [{"src", "dst", "label", "mult"}]}
json to_json(const PosetDump& dump);
inline json to_json(const WeakOrderPoset& poset) { return to_json(dump(poset)); }
PosetDump poset_dump_from_json(const json& j);

}  // namespace quadrics
