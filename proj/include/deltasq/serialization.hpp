#pragma once

#include "deltasq/paths.hpp"
#include "deltasq/symfunc.hpp"

#include <json.hpp>

namespace deltasq {

nlohmann::json to_json(const QTPoly& p);      // [[qe,te,"p/r"],...]
QTPoly qtpoly_from_json(const nlohmann::json& j);

nlohmann::json to_json(const QTRat& r);       // {"num": ..., "den": ...}
QTRat qtrat_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Partition& p);   // [3,1,1]
Partition partition_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SymFunc& f);     // {"degree","basis":"m","terms":[...]}
SymFunc symfunc_from_json(const nlohmann::json& j);

// Row indices in path JSON are 1-based.
nlohmann::json to_json(const DecoratedLabelledPath& p);
nlohmann::json to_json(const SchroederPath& p);

} // namespace deltasq
