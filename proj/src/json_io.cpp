#include "balayage/json_io.hpp"

#include <fstream>
#include <sstream>

#include "balayage/errors.hpp"

namespace balayage {

namespace {

double number(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_number())
    fail(ErrorCode::InvalidArgument, std::string("expected numeric field '") + key + "'");
  return j.at(key).get<double>();
}

const Json& array_field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_array())
    fail(ErrorCode::InvalidArgument, std::string("expected array field '") + key + "'");
  return j.at(key);
}

}  // namespace

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::InvalidArgument, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::InvalidArgument, path + ": " + e.what());
  }
}

Complex complex_from_json(const Json& j) { return {number(j, "re"), number(j, "im")}; }

AtomicCharge charge_from_json(const Json& j) {
  std::vector<Atom> atoms;
  for (const auto& a : array_field(j, "atoms")) atoms.push_back({complex_from_json(a), number(a, "mass")});
  return AtomicCharge(std::move(atoms));
}

RaySystem rays_from_json(const Json& j) {
  std::vector<double> t;
  for (const auto& x : array_field(j, "rays")) {
    if (!x.is_number()) fail(ErrorCode::InvalidArgument, "ray angles must be numbers");
    t.push_back(x.get<double>());
  }
  return RaySystem(std::move(t));
}

GenusSchedule schedule_from_json(const Json& j) {
  std::vector<double> radii;
  std::vector<int> genera;
  for (const auto& x : array_field(j, "radii")) {
    if (!x.is_number()) fail(ErrorCode::InvalidArgument, "schedule radii must be numbers");
    radii.push_back(x.get<double>());
  }
  for (const auto& x : array_field(j, "genera")) {
    if (!x.is_number_integer()) fail(ErrorCode::InvalidArgument, "schedule genera must be integers");
    genera.push_back(x.get<int>());
  }
  return GenusSchedule(std::move(radii), std::move(genera));
}

StepFunction steps_from_json(const Json& j) {
  std::vector<std::pair<double, double>> jumps;
  for (const auto& p : array_field(j, "jumps")) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number())
      fail(ErrorCode::InvalidArgument, "jumps must be [x, h] pairs");
    jumps.emplace_back(p[0].get<double>(), p[1].get<double>());
  }
  const double base = j.contains("base") ? number(j, "base") : 0.0;
  return StepFunction(std::move(jumps), base);
}

std::pair<double, double> parse_pair(const std::string& text) {
  std::istringstream in(text);
  in.imbue(std::locale::classic());
  double a = 0, b = 0;
  char comma = 0;
  if (!(in >> a >> comma >> b) || comma != ',' || !(in >> std::ws).eof())
    fail(ErrorCode::InvalidArgument, "expected 'a,b', got '" + text + "'");
  return {a, b};
}

Complex parse_complex(const std::string& text) {
  const auto [a, b] = parse_pair(text);
  return {a, b};
}

Json to_json(Complex z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

Json to_json(const AtomicCharge& nu) {
  Json atoms = Json::array();
  for (const auto& a : nu.atoms()) atoms.push_back(Json{{"re", a.z.real()}, {"im", a.z.imag()}, {"mass", a.mass}});
  return Json{{"atoms", atoms}};
}

Json to_json(const RaySystem& s) { return Json{{"rays", s.thetas()}}; }

Json to_json(const BalayageCharge& bal) {
  Json swept = Json::array();
  for (const auto& s : bal.swept())
    swept.push_back(Json{{"source", {{"re", s.source.z.real()}, {"im", s.source.z.imag()}, {"mass", s.source.mass}}},
                         {"sector", {s.host.alpha(), s.host.beta()}}});
  return Json{{"rays", bal.rays().thetas()}, {"kept", to_json(bal.kept())["atoms"]}, {"swept", swept}};
}

Json to_json(const BoundReport& rep) {
  Json bounds = Json::array();
  for (const auto& b : rep.bounds)
    bounds.push_back(Json{{"name", b.name},
                          {"side", b.side == BoundSide::Lower ? "lower" : "upper"},
                          {"hypothesis", b.hypothesis},
                          {"value", b.value},
                          {"holds", b.holds}});
  Json omitted = Json::array();
  for (const auto& o : rep.omitted) omitted.push_back(Json{{"name", o.name}, {"reason", o.reason}});
  return Json{{"bounds", bounds}, {"omitted", omitted}, {"all_hold", rep.all_hold()}};
}

Json to_json(const TrendReport& t) {
  return Json{{"radii", t.radii}, {"values", t.values}, {"slope", t.slope}, {"divergent", t.divergent}};
}

Json to_json(const CRGReport& rep) {
  Json rays = Json::array();
  for (const auto& r : rep.rays)
    rays.push_back(Json{{"ray", r.ray},
                        {"theta", r.theta},
                        {"limit", r.limit},
                        {"spread", r.spread},
                        {"exceptional_density", r.exceptional_density},
                        {"stable", r.stable},
                        {"radii", r.radii},
                        {"values", r.values}});
  return Json{{"p", rep.p}, {"window", {rep.window_lo, rep.window_hi}}, {"stable", rep.stable}, {"rays", rays}};
}

}  // namespace balayage
