#pragma once

#include <string>

#include <json.hpp>

#include "balayage/balayage.hpp"
#include "balayage/charges.hpp"
#include "balayage/harmonic_measure.hpp"
#include "balayage/ray_geometry.hpp"
#include "balayage/regular_growth.hpp"
#include "balayage/step_function.hpp"
#include "balayage/subharmonic.hpp"

namespace balayage {

using Json = nlohmann::ordered_json;

// Parsers throw Error(InvalidArgument) on malformed input.
Json read_json_file(const std::string& path);
Complex complex_from_json(const Json& j);
AtomicCharge charge_from_json(const Json& j);
RaySystem rays_from_json(const Json& j);
GenusSchedule schedule_from_json(const Json& j);
// {"jumps": [[x, h], ...], "base": b}
StepFunction steps_from_json(const Json& j);
// "a,b"
Complex parse_complex(const std::string& text);
// "a,b" as two reals
std::pair<double, double> parse_pair(const std::string& text);

Json to_json(Complex z);
Json to_json(const AtomicCharge& nu);
Json to_json(const RaySystem& s);
Json to_json(const BalayageCharge& bal);
Json to_json(const BoundReport& rep);
Json to_json(const TrendReport& t);
Json to_json(const CRGReport& rep);

}  // namespace balayage
