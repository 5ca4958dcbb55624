#pragma once

#include <string>

#include "spinnet/asymptotics.hpp"
#include "spinnet/recoupling.hpp"
#include "spinnet/yutsis.hpp"

#include <json.hpp>

namespace spinnet {

/// {"terms":[{"q":"p/q","r":radicand}],"float":value}; radicands beyond the
/// double-exact integer range are emitted as decimal strings.
nlohmann::json to_json(const RadicalRational& v);

nlohmann::json spin_json(Spin s);  // {"twice": n}

nlohmann::json to_json(const YutsisGraph& g);

nlohmann::json value_json_9j(const NineJLabels& labels, const RadicalRational& value);
nlohmann::json value_json_3nj(const ThreeNJLabels& labels, const RadicalRational& value);
nlohmann::json to_json(const DisentanglePlan& plan);

}  // namespace spinnet
