#include "balayage/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <ostream>
#include <random>
#include <sstream>

#include "balayage/balayage.hpp"
#include "balayage/balayage_checks.hpp"
#include "balayage/errors.hpp"
#include "balayage/growth_scales.hpp"
#include "balayage/harmonic_measure.hpp"
#include "balayage/json_io.hpp"
#include "balayage/regular_growth.hpp"
#include "balayage/subharmonic.hpp"

namespace balayage {

namespace {

constexpr double kUnset = std::numeric_limits<double>::quiet_NaN();

struct Job {
  std::string out;
  unsigned seed = 1;
  double tol = kUnset;
  bool csv = false;
  bool json = false;

  std::string charge, system, schedule, steps;
  std::string z, interval, sector, range, edge = "alpha";
  std::vector<std::string> segments;
  double disk = kUnset;
  double a = 0.5, b = 2.0;

  double tmax = kUnset;
  int samples = 8;

  std::string check;
  double r0 = 1.0, r = kUnset, g = kUnset, t1 = kUnset, t2 = kUnset, x1 = kUnset, x2 = kUnset;
  double alpha = 0.0, beta = kPi, lo = kUnset, hi = kUnset;
  double p = 1.0, rlo = kUnset, rhi = kUnset, circle = kUnset;
  int q = 0;
  int ray = 0;
  std::vector<double> ts;
};

struct Result {
  Json json;
  std::string csv;  // command-specific table, empty for the generic flattening
  int code = kExitOk;
};

bool set(double v) { return !std::isnan(v); }

void require(bool ok, const std::string& what) {
  if (!ok) fail(ErrorCode::InvalidArgument, what);
}

AtomicCharge load_charge(const Job& j) {
  require(!j.charge.empty(), "--charge is required");
  return charge_from_json(read_json_file(j.charge));
}

RaySystem load_system(const Job& j) {
  return j.system.empty() ? RaySystem::real_axis() : rays_from_json(read_json_file(j.system));
}

std::string number_text(double v) {
  std::ostringstream s;
  s.imbue(std::locale::classic());
  s << std::setprecision(17) << v;
  return s.str();
}

void flatten(const Json& j, const std::string& key, std::ostringstream& s) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) flatten(it.value(), key.empty() ? it.key() : key + "." + it.key(), s);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], key + "." + std::to_string(i), s);
  } else if (j.is_number()) {
    s << key << ',' << number_text(j.get<double>()) << '\n';
  } else {
    s << key << ',' << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
  }
}

std::string to_csv(const Json& j) {
  std::ostringstream s;
  s << "key,value\n";
  flatten(j, "", s);
  return s.str();
}

Result cmd_hm(const Job& j) {
  require(!j.z.empty(), "--z is required");
  const Complex z = parse_complex(j.z);
  Result r;
  r.json["z"] = to_json(z);
  if (!j.interval.empty()) {
    const auto [t1, t2] = parse_pair(j.interval);
    const Interval I(t1, t2);
    BoundParameters bp;
    bp.a = j.a;
    bp.b = j.b;
    require(bp.a > 0 && bp.a < 1, "--a must lie in (0,1)");
    require(bp.b > 1, "--b must exceed 1");
    r.json["interval"] = {t1, t2};
    r.json["exact"] = hm_interval(z, I);
    if (z.imag() > 0) r.json["oracle"] = hm_interval_quad(z, I);
    r.json["bounds"] = to_json(hm_bounds(z, I, bp));
    return r;
  }
  if (!j.sector.empty()) {
    const auto [al, be] = parse_pair(j.sector);
    const Sector sec(al, be);
    if (set(j.disk)) {
      r.json["value"] = hm_sector_disk(sec, z, j.disk);
    } else {
      require(!j.range.empty(), "--sector needs --disk or --range");
      require(j.edge == "alpha" || j.edge == "beta", "--edge must be alpha or beta");
      const auto [a, b] = parse_pair(j.range);
      r.json["value"] = hm_sector_segment(sec, z, j.edge == "alpha" ? Edge::Alpha : Edge::Beta, a, b);
    }
    return r;
  }
  require(!j.system.empty(), "hm needs --interval, --sector or --system");
  const RaySystem s = load_system(j);
  SystemSet set_;
  if (set(j.disk)) set_.disk_radius = j.disk;
  for (const auto& seg : j.segments) {
    std::istringstream in(seg);
    in.imbue(std::locale::classic());
    double ray = 0, a = 0, b = 0;
    char c1 = 0, c2 = 0;
    if (!(in >> ray >> c1 >> a >> c2 >> b) || c1 != ',' || c2 != ',' || ray < 0 || ray != std::floor(ray))
      fail(ErrorCode::InvalidArgument, "--segment expects 'ray,a,b'");
    require(static_cast<std::size_t>(ray) < s.size(), "--segment ray index out of range");
    set_.segments.push_back({static_cast<std::size_t>(ray), a, b});
  }
  require(set_.disk_radius || !set_.segments.empty(), "--system needs --disk or --segment");
  r.json["value"] = hm_system(s, z, set_);
  return r;
}

Result cmd_balayage(const Job& j) {
  const AtomicCharge nu = load_charge(j);
  const RaySystem s = load_system(j);
  require(j.samples >= 1, "--samples must be positive");
  double tmax = j.tmax;
  if (!set(tmax)) {
    tmax = 1;
    for (const auto& a : nu.atoms()) tmax = std::max(tmax, 4 * std::abs(a.z));
  }
  require(tmax > 0, "--tmax must be positive");
  const BalayageCharge bal = balayage_system(nu, s);
  Result r;
  r.json["balayage"] = to_json(bal);
  r.json["total_mass"] = bal.total_mass();
  Json samples = Json::array();
  std::ostringstream csv;
  const bool real = s.is_real_axis();
  csv << (real ? "x,value\n" : "ray,theta,t,value\n");
  if (!nu.empty()) {
    if (real) {
      for (int i = -j.samples; i <= j.samples; ++i) {
        const double x = tmax * i / j.samples;
        const double v = bal.distribution_on_R(x);
        samples.push_back(Json{{"x", x}, {"value", v}});
        csv << number_text(x) << ',' << number_text(v) << '\n';
      }
    } else {
      for (std::size_t ray = 0; ray < s.size(); ++ray) {
        const RadialDistribution d = bal.ray_distribution(ray);
        for (int i = 1; i <= j.samples; ++i) {
          const double t = tmax * i / j.samples;
          const double v = d.value(t);
          samples.push_back(Json{{"ray", ray}, {"theta", s.theta(ray)}, {"t", t}, {"value", v}});
          csv << ray << ',' << number_text(s.theta(ray)) << ',' << number_text(t) << ',' << number_text(v) << '\n';
        }
      }
    }
  }
  r.json["samples"] = samples;
  r.csv = csv.str();
  return r;
}

Result dominance(const DominanceCheck& c) {
  Result r;
  r.json = Json{{"lhs", c.lhs}, {"rhs", c.rhs}, {"holds", c.holds}};
  r.code = c.holds ? kExitOk : kExitCheckFailed;
  return r;
}

Result hm_bounds_suite(const Job& j) {
  require(j.samples >= 1, "--samples must be positive");
  std::mt19937_64 rng(j.seed);
  std::uniform_real_distribution<double> u(0, 1);
  std::size_t applicable = 0, violations = 0;
  for (int i = 0; i < j.samples; ++i) {
    const double t1 = -10 + 20 * u(rng);
    const double t2 = t1 + 0.01 + 5 * u(rng);
    const Complex z(-20 + 40 * u(rng), std::exp(std::log(0.01) + std::log(1e4) * u(rng)));
    const BoundReport rep = hm_bounds(z, Interval(t1, t2));
    applicable += rep.bounds.size();
    for (const auto& b : rep.bounds) violations += b.holds ? 0 : 1;
  }
  Result r;
  r.json = Json{{"samples", j.samples}, {"seed", j.seed}, {"applicable", applicable}, {"violations", violations}};
  r.code = violations == 0 ? kExitOk : kExitCheckFailed;
  return r;
}

Result cmd_check(const Job& j) {
  const std::string& c = j.check;
  if (c == "hm-bounds") return hm_bounds_suite(j);
  const AtomicCharge nu = load_charge(j);
  Result r;
  if (c == "blaschke") {
    require(j.r0 > 0, "--r0 must be positive");
    if (j.system.empty()) {
      const BlaschkeReport b = blaschke_halfplane(nu, j.r0);
      r.json = Json{{"sum", b.sum}, {"finite", b.finite}};
    } else {
      const SystemBlaschkeReport b = blaschke_outside_system(nu, load_system(j), j.r0);
      Json sectors = Json::array();
      for (const auto& s : b.sectors)
        sectors.push_back(Json{{"sector", {s.sector.alpha(), s.sector.beta()}}, {"sum", s.sum}});
      r.json = Json{{"sectors", sectors}, {"finite", b.finite}};
    }
  } else if (c == "lindelof") {
    require(set(j.r) && j.r > j.r0 && j.q >= 1, "lindelof needs --q >= 1 and --r > --r0");
    r.json = Json{{"q", j.q}, {"sum", to_json(lindelof_sum(nu, j.q, j.r0, j.r))}};
  } else if (c == "thcup") {
    require(set(j.t1) && set(j.t2), "thcup needs --t1 and --t2");
    r = dominance(check_thcup_bound(nu, j.t1, j.t2, j.a));
  } else if (c == "ges") {
    require(set(j.r) && set(j.g), "ges needs --r and --g");
    const double g = j.g;
    r = dominance(check_ges_bound(nu, [g](double) { return g; }, j.r));
  } else if (c == "nubrb") {
    require(set(j.r) && set(j.g), "nubrb needs --r and --g");
    const double g = j.g;
    r = dominance(check_nubrB_bound(nu, load_system(j), [g](double) { return g; }, j.r));
  } else if (c == "lipschitz") {
    require(set(j.x1) && set(j.x2), "lipschitz needs --x1 and --x2");
    const LipschitzReport l = check_lipschitz(nu, j.x1, j.x2);
    r.json = Json{{"modulus", l.modulus}, {"bound", l.modulus_bound}, {"a", l.a}, {"holds", l.holds}};
    r.code = l.holds ? kExitOk : kExitCheckFailed;
  } else if (c == "carleman") {
    require(set(j.r), "carleman needs --r");
    const double tol = set(j.tol) ? j.tol : 1e-6;
    const CarlemanReport k = carleman_check(nu, j.r0, j.r);
    r.json = Json{{"lhs", k.lhs},
                  {"rhs", k.rhs},
                  {"residual", k.residual},
                  {"A", k.A},
                  {"B", k.B},
                  {"inner_correction", k.inner_correction},
                  {"circle_correction", k.circle_correction},
                  {"holds", k.residual <= tol}};
    r.code = k.residual <= tol ? kExitOk : kExitCheckFailed;
  } else if (c == "class-a") {
    require(set(j.r), "class-a needs --r");
    const CanonicalPotential pot(nu, -1);
    const ClassAFunctionals f = class_A_functionals(pot.evaluable(), j.alpha, j.beta, j.r0, j.r, hints_for(nu));
    const double tol = set(j.tol) ? j.tol : 1e-6;
    const double gap = std::max(std::abs(f.A - f.A_from_J), std::abs(f.A - f.A_from_nested));
    r.json = Json{{"A", f.A}, {"B", f.B}, {"J", f.J}, {"A_from_J", f.A_from_J}, {"A_from_nested", f.A_from_nested},
                  {"identity_gap", gap}, {"holds", gap <= tol}};
    r.code = gap <= tol ? kExitOk : kExitCheckFailed;
  } else if (c == "fubini") {
    require(set(j.lo) && set(j.hi), "fubini needs --lo and --hi");
    const RaySystem s = load_system(j);
    require(j.ray >= 0 && static_cast<std::size_t>(j.ray) < s.size(), "--ray out of range");
    const FubiniCheck f = check_fubini(nu, s, hat_function(s.size(), j.ray, j.lo, j.hi), set(j.tol) ? j.tol : 1e-8);
    r.json = Json{{"lhs", f.lhs}, {"rhs", f.rhs}, {"equal", f.equal}};
    r.code = f.equal ? kExitOk : kExitCheckFailed;
  } else if (c == "lindelof-preservation") {
    require(set(j.rhi) && j.rhi > 2 * j.r0, "lindelof-preservation needs --rhi > 2 r0");
    require(j.p >= 1 && j.p == std::floor(j.p), "--p must be a positive integer");
    const auto l = check_lindelof_preservation(nu, load_system(j), static_cast<int>(j.p), j.r0,
                                               dyadic_grid(2 * j.r0, j.rhi));
    Json diff = l.difference;
    r.json = Json{{"radii", l.radii}, {"difference", diff}, {"slope", l.slope},
                  {"fitted_constant", l.fitted_constant}, {"bounded", l.bounded}};
    r.code = l.bounded ? kExitOk : kExitCheckFailed;
  } else if (c == "exgr2") {
    const double q = kPi / 4;
    const RaySystem bis({q, 3 * q, 5 * q, 7 * q});
    const auto n = ray_counting(nu, bis);
    const std::array<StepFunction, 4> nk{n[0], n[1], n[2], n[3]};
    std::vector<double> ts = j.ts.empty() ? std::vector<double>{10, 100, 1000} : j.ts;
    for (double t : ts) require(t > 0, "--t values must be positive");
    const Exgr2Report e = exgr2_functionals(nk, ts, dyadic_grid(2, set(j.rhi) ? j.rhi : 1024));
    Json b = Json::array();
    for (const auto& bk : e.b) b.push_back(bk);
    Json L = Json::array();
    for (const auto& v : e.L) L.push_back(to_json(v));
    r.json = Json{{"t", e.ts}, {"b", b}, {"radii", e.radii}, {"L", L}};
  } else {
    fail(ErrorCode::InvalidArgument, "unknown check '" + c + "'");
  }
  return r;
}

Result cmd_growth(const Job& j) {
  require(j.steps.empty() != j.charge.empty(), "growth needs exactly one of --steps or --charge");
  const StepFunction f =
      j.steps.empty() ? radial_counting(load_charge(j), true) : steps_from_json(read_json_file(j.steps));
  require(set(j.rlo) && set(j.rhi), "growth needs --rlo and --rhi");
  require(j.rlo > 1 && j.rhi > j.rlo, "growth needs 1 < rlo < rhi");
  require(j.p >= 0, "--p must be nonnegative");
  const GrowthReport g = growth_report(f, j.p, j.rlo, j.rhi);
  Result r;
  const auto est = [](const Estimate& e) {
    return Json{{"value", e.infinite ? Json("inf") : Json(e.value)}, {"infinite", e.infinite},
                {"window", {e.window_lo, e.window_hi}}};
  };
  r.json = Json{{"order", est(g.order)},
                {"type", est(g.type)},
                {"convergence",
                 {{"integral", g.convergence.integral},
                  {"stieltjes", g.convergence.stieltjes},
                  {"parts_rhs", g.convergence.parts_rhs},
                  {"converges", g.convergence.converges},
                  {"trend", to_json(g.convergence.trend)}}}};
  return r;
}

Result cmd_potential(const Job& j) {
  const AtomicCharge nu = load_charge(j);
  const CanonicalPotential pot = j.schedule.empty() ? CanonicalPotential(nu, j.q)
                                                    : CanonicalPotential(nu, schedule_from_json(read_json_file(j.schedule)));
  Result r;
  if (set(j.circle)) {
    require(j.circle > 0, "--circle must be positive");
    CircleMeanOptions o;
    if (set(j.tol)) o.tol = j.tol;
    r.json = Json{{"circle_mean", circle_mean(pot.evaluable(), j.circle, o)}, {"r", j.circle}};
    return r;
  }
  require(!j.z.empty(), "potential needs --z or --circle");
  const Complex z = parse_complex(j.z);
  if (!j.system.empty()) {
    SweepOptions o;
    if (set(j.tol)) o.tol = j.tol;
    const SweptValue v = subharmonic_balayage_eval(pot.evaluable(), load_system(j), z, o, hints_for(nu));
    r.json = Json{{"z", to_json(z)}, {"balayage_value", v.value}, {"tail_estimate", v.tail_estimate}};
    return r;
  }
  const ExtendedReal v = pot(z);
  r.json = Json{{"z", to_json(z)}, {"value", v.is_bottom() ? Json("-inf") : Json(v.value())}, {"bottom", v.is_bottom()}};
  return r;
}

Result cmd_crg(const Job& j) {
  const AtomicCharge nu = load_charge(j);
  const RaySystem s = load_system(j);
  require(set(j.rlo) && set(j.rhi) && j.rlo > 1 && j.rhi > j.rlo, "crg needs 1 < --rlo < --rhi");
  require(j.p > 0, "--p must be positive");
  const BalayageCharge bal = balayage_system(nu, s);
  const auto n = bal.swept().empty() ? ray_counting(bal.kept(), s) : sampled_ray_counting(bal, 64 * j.rhi, 1 << 16);
  const double tol = set(j.tol) ? j.tol : 0.05;
  const CRGReport rep = j.p < 1 ? crg_small_p(s, n, j.p, j.rlo, j.rhi, tol) : crg_on_rays(s, n, j.p, j.rlo, j.rhi, tol);
  Result r;
  r.json = to_json(rep);
  return r;
}

void emit(const Job& job, const Result& res, std::ostream& out) {
  std::string text;
  if (job.csv)
    text = res.csv.empty() ? to_csv(res.json) : res.csv;
  else
    text = res.json.dump(2) + "\n";
  if (job.out.empty()) {
    out << text;
    return;
  }
  const std::string tmp = job.out + ".partial";
  {
    std::ofstream f(tmp, std::ios::binary);
    if (!f || !(f << text)) fail(ErrorCode::InvalidArgument, "cannot write " + job.out);
  }
  if (std::rename(tmp.c_str(), job.out.c_str()) != 0) {
    std::remove(tmp.c_str());
    fail(ErrorCode::InvalidArgument, "cannot write " + job.out);
  }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Job job;
  CLI::App app{"Balayage, harmonic measure and growth diagnostics", "balayage_cli"};
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();
  app.add_option("--out", job.out, "Output file (stdout by default)");
  app.add_option("--seed", job.seed, "Seed for randomized suites");
  app.add_option("--tol", job.tol, "Tolerance override")->check(CLI::PositiveNumber);
  auto* fj = app.add_flag("--json", job.json, "JSON output (default)");
  app.add_flag("--csv", job.csv, "CSV output")->excludes(fj);

  auto* hm = app.add_subcommand("hm", "Harmonic measure with oracle and bounds");
  hm->add_option("--z", job.z, "Point as 're,im'")->required();
  hm->add_option("--interval", job.interval, "Interval 't1,t2'");
  hm->add_option("--system", job.system, "Ray system JSON");
  hm->add_option("--sector", job.sector, "Sector 'alpha,beta'");
  hm->add_option("--disk", job.disk, "Disk radius")->check(CLI::PositiveNumber);
  hm->add_option("--segment", job.segments, "Segment 'ray,a,b' (repeatable)");
  hm->add_option("--edge", job.edge, "Sector edge: alpha or beta");
  hm->add_option("--range", job.range, "Edge range 'a,b'");
  hm->add_option("--a", job.a, "Bound parameter a in (0,1)");
  hm->add_option("--b", job.b, "Separation factor b > 1");

  auto* bal = app.add_subcommand("balayage", "Sweep a charge onto a ray system");
  bal->add_option("--charge", job.charge, "Charge JSON")->required();
  bal->add_option("--system", job.system, "Ray system JSON (real axis by default)");
  bal->add_option("--tmax", job.tmax, "Largest sampled radius")->check(CLI::PositiveNumber);
  bal->add_option("--samples", job.samples, "Samples per ray")->check(CLI::PositiveNumber);

  auto* chk = app.add_subcommand("check", "Run a named check");
  chk->add_option("name", job.check, "Check name")
      ->required()
      ->check(CLI::IsMember({"blaschke", "lindelof", "thcup", "ges", "nubrb", "lipschitz", "carleman", "class-a",
                             "fubini", "lindelof-preservation", "exgr2", "hm-bounds"}));
  chk->add_option("--charge", job.charge, "Charge JSON");
  chk->add_option("--system", job.system, "Ray system JSON");
  chk->add_option("--r0", job.r0, "Inner radius")->check(CLI::PositiveNumber);
  chk->add_option("--r", job.r, "Radius")->check(CLI::PositiveNumber);
  chk->add_option("--g", job.g, "Gauge radius g(r) > r")->check(CLI::PositiveNumber);
  chk->add_option("--q", job.q, "Integer order");
  chk->add_option("--p", job.p, "Order");
  chk->add_option("--t1", job.t1, "Interval start");
  chk->add_option("--t2", job.t2, "Interval end");
  chk->add_option("--a", job.a, "Separation parameter in (0,1)");
  chk->add_option("--x1", job.x1, "Lipschitz interval start");
  chk->add_option("--x2", job.x2, "Lipschitz interval end");
  chk->add_option("--alpha", job.alpha, "Sector start angle");
  chk->add_option("--beta", job.beta, "Sector end angle");
  chk->add_option("--ray", job.ray, "Ray index for the hat function");
  chk->add_option("--lo", job.lo, "Hat support start");
  chk->add_option("--hi", job.hi, "Hat support end");
  chk->add_option("--rhi", job.rhi, "Largest radius of a sweep")->check(CLI::PositiveNumber);
  chk->add_option("--t", job.ts, "Sample points t");
  chk->add_option("--samples", job.samples, "Random samples")->check(CLI::PositiveNumber);

  auto* gr = app.add_subcommand("growth", "Order, type and convergence class of a counting function");
  gr->add_option("--steps", job.steps, "Step function JSON");
  gr->add_option("--charge", job.charge, "Charge JSON (radial counting of |nu|)");
  gr->add_option("--p", job.p, "Order");
  gr->add_option("--rlo", job.rlo, "Window start");
  gr->add_option("--rhi", job.rhi, "Window end");

  auto* pot = app.add_subcommand("potential", "Canonical potential, circle mean or its balayage");
  pot->add_option("--charge", job.charge, "Charge JSON")->required();
  pot->add_option("--q", job.q, "Fixed genus")->check(CLI::Range(-1, 64));
  pot->add_option("--schedule", job.schedule, "Genus schedule JSON");
  pot->add_option("--z", job.z, "Point 're,im'");
  pot->add_option("--circle", job.circle, "Circle mean radius");
  pot->add_option("--system", job.system, "Ray system JSON for the swept value");

  auto* crg = app.add_subcommand("crg", "Completely regular growth diagnostics on rays");
  crg->add_option("--charge", job.charge, "Charge JSON")->required();
  crg->add_option("--system", job.system, "Ray system JSON (real axis by default)");
  crg->add_option("--p", job.p, "Order");
  crg->add_option("--rlo", job.rlo, "Window start");
  crg->add_option("--rhi", job.rhi, "Window end");

  for (auto* sub : {hm, bal, chk, gr, pot, crg}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadInput;
  }

  try {
    Result res;
    if (hm->parsed())
      res = cmd_hm(job);
    else if (bal->parsed())
      res = cmd_balayage(job);
    else if (chk->parsed())
      res = cmd_check(job);
    else if (gr->parsed())
      res = cmd_growth(job);
    else if (pot->parsed())
      res = cmd_potential(job);
    else
      res = cmd_crg(job);
    emit(job, res, out);
    return res.code;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return is_numeric_failure(e.code()) ? kExitNumeric : kExitBadInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
}

}  // namespace balayage
