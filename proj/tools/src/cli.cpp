#include "galperin/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "galperin/classical.hpp"
#include "galperin/errors.hpp"
#include "galperin/params.hpp"
#include "galperin/quantum.hpp"
#include "galperin/semiclassical.hpp"

#ifndef GALPERIN_VERSION
#define GALPERIN_VERSION "0.0.0"
#endif

namespace galperin::cli {
namespace {

using json = nlohmann::ordered_json;
namespace fs = std::filesystem;

constexpr const char* kTool = "pi-billiards";
constexpr const char* kCoefficient = "8n(n+1)/(2n+1)^2";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::optional<double> beta;
  std::optional<double> mass_ratio;
  std::optional<unsigned> N;
  std::optional<std::string> params_file;
  int precision = 12;
  std::string format = "csv";
  int n = 1;
  std::size_t samples = 400;
  double x_min = 1.0;
  double k = 1.0;
  double v0 = 1.0, x0 = 10.0, y0 = 1.0;
  std::string out;
  std::string trace;
  std::string manifest;
  std::string out_dir = "figures";
};

struct Geometry {
  BilliardParams params;
  double beta = 0.0;
  json description;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int geometry_sources(const Options& o) {
  return int(o.beta.has_value()) + int(o.mass_ratio.has_value()) + int(o.N.has_value()) +
         int(o.params_file.has_value());
}

double ratio_for_N(unsigned N) { return std::pow(100.0, static_cast<double>(N)); }

Geometry resolve_geometry(const Options& o) {
  if (geometry_sources(o) != 1) {
    throw UsageError("exactly one of --beta, --mass-ratio, --N, --params must be given");
  }
  Geometry g{BilliardParams(1.0, 1.0), 0.0, json::object()};
  if (o.beta) {
    g.params = BilliardParams::from_beta(*o.beta);
    g.beta = *o.beta;
    g.description["beta"] = *o.beta;
  } else if (o.mass_ratio) {
    g.params = BilliardParams::from_mass_ratio(*o.mass_ratio);
    g.description["mass_ratio"] = *o.mass_ratio;
  } else if (o.N) {
    g.params = BilliardParams::from_mass_ratio(ratio_for_N(*o.N));
    g.description["N"] = *o.N;
  } else {
    g.params = params_from_json(read_file(*o.params_file));
    g.description["params_file"] = *o.params_file;
    g.description["M"] = g.params.big_mass();
    g.description["m"] = g.params.small_mass();
    g.description["hbar"] = g.params.hbar();
  }
  if (!o.beta) g.beta = g.params.beta();
  return g;
}

double rounded(double value, int digits) { return std::strtod(format_number(value, digits).c_str(), nullptr); }

json manifest_head(const std::string& command) {
  json m;
  m["tool"] = kTool;
  m["version"] = version();
  m["command"] = command;
  return m;
}

void write_json_file(const fs::path& path, const json& doc) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write " + path.string());
  f << doc.dump(2) << '\n';
}

// Writes `body` to `path` (or `out` when empty) and the sidecar manifest.
template <class Body>
void emit(const Options& o, std::ostream& out, json manifest, Body body) {
  if (o.out.empty()) {
    body(out);
  } else {
    std::ofstream f(o.out, std::ios::binary);
    if (!f) throw UsageError("cannot write " + o.out);
    body(f);
    manifest["outputs"] = json::array({o.out});
  }
  if (!o.manifest.empty()) {
    write_json_file(o.manifest, manifest);
  } else if (!o.out.empty()) {
    write_json_file(o.out + ".manifest.json", manifest);
  }
}

void write_curve_csv(std::ostream& os, const CurveSeries& c, const std::string& tag_name, const std::string& tag,
                     int digits) {
  os << c.abscissa_name << ',' << c.ordinate_name << ",model," << tag_name << '\n';
  for (const CurvePoint& p : c.points) {
    os << format_number(p.abscissa, digits) << ',' << format_number(p.ordinate, digits) << ',' << c.model << ','
       << tag << '\n';
  }
}

void write_curve_json(std::ostream& os, const CurveSeries& c, const std::string& tag_name, const std::string& tag,
                      int digits, const json& manifest) {
  json doc;
  doc["model"] = c.model;
  doc["columns"] = json::array({c.abscissa_name, c.ordinate_name});
  doc[tag_name] = tag;
  doc["metadata"] = c.metadata;
  json points = json::array();
  for (const CurvePoint& p : c.points) points.push_back({rounded(p.abscissa, digits), rounded(p.ordinate, digits)});
  doc["points"] = std::move(points);
  doc["manifest"] = manifest;
  os << doc.dump(2) << '\n';
}

void write_curve_file(const fs::path& path, const CurveSeries& c, const std::string& tag_name, const std::string& tag,
                      int digits) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write " + path.string());
  write_curve_csv(f, c, tag_name, tag, digits);
}

classical::InitialCondition initial_condition(const Options& o) { return {o.v0, o.x0, o.y0}; }

// ---- subcommands

int cmd_digits(const Options& o, std::ostream& out) {
  if (!o.N) throw UsageError("digits requires --N");
  const classical::PiDigitsCertificate cert = classical::certify_pi_digits(*o.N, classical::precision_cap_from_env());
  if (!cert.agree()) {
    throw IndeterminateError("collision count " + cert.from_collisions.get_str() + " disagrees with series value " +
                             cert.from_series.get_str());
  }
  json m = manifest_head("digits");
  m["parameters"] = {{"N", *o.N}};
  m["certificate"] = {{"bits", cert.bits}, {"series", cert.from_series.get_str()}};
  if (o.format == "json") {
    out << json{{"N", *o.N},
                {"value", cert.from_collisions.get_str()},
                {"bits", cert.bits},
                {"series", cert.from_series.get_str()}}
               .dump(2)
        << '\n';
  } else {
    out << cert.from_collisions.get_str() << '\n';
    out << "certified at " << cert.bits << " bits; series value agrees\n";
  }
  if (!o.manifest.empty()) write_json_file(o.manifest, m);
  return kExitOk;
}

int cmd_count(const Options& o, std::ostream& out) {
  const Geometry g = resolve_geometry(o);
  std::string count;
  json certificate;
  if (o.beta) {
    count = std::to_string(classical::count_closed_form(*o.beta));
    certificate = {{"method", "double"}};
  } else {
    mpq_class ratio;
    unsigned start = 64;
    if (o.N) {
      mpz_class r;
      mpz_ui_pow_ui(r.get_mpz_t(), 100, *o.N);
      ratio = r;
      start = 64 + 10 * *o.N;
    } else {
      ratio = mpq_class(g.params.mass_ratio());
    }
    const classical::CertifiedCount c = classical::certified_count(ratio, start, classical::precision_cap_from_env());
    count = c.count.get_str();
    certificate = {{"method", "interval"}, {"bits", c.bits}, {"integer_tie", c.integer_tie}};
  }
  json m = manifest_head("count");
  m["parameters"] = g.description;
  m["certificate"] = certificate;
  if (o.format == "json") {
    out << json{{"count", count}, {"certificate", certificate}, {"parameters", g.description}}.dump(2) << '\n';
  } else {
    out << count << '\n';
  }
  if (!o.manifest.empty()) write_json_file(o.manifest, m);
  return kExitOk;
}

void write_trace_csv(std::ostream& os, const classical::CollisionTrace& trace, int digits) {
  os << "index,kind,t,x,y,vx,vy\n";
  for (const classical::CollisionEvent& e : trace.events) {
    const classical::ClassicalState& s = e.state_after;
    os << e.index << ',' << classical::to_string(e.kind) << ',' << format_number(e.t, digits) << ','
       << format_number(s.x, digits) << ',' << format_number(s.y, digits) << ',' << format_number(s.vx, digits) << ','
       << format_number(s.vy, digits) << '\n';
  }
}

void write_trace_json(std::ostream& os, const classical::CollisionTrace& trace, int digits, const json& manifest) {
  json events = json::array();
  for (const classical::CollisionEvent& e : trace.events) {
    const classical::ClassicalState& s = e.state_after;
    events.push_back({{"index", e.index},
                      {"kind", classical::to_string(e.kind)},
                      {"t", rounded(e.t, digits)},
                      {"x", rounded(s.x, digits)},
                      {"y", rounded(s.y, digits)},
                      {"vx", rounded(s.vx, digits)},
                      {"vy", rounded(s.vy, digits)}});
  }
  json doc;
  doc["count"] = trace.count;
  doc["exact_velocities"] = trace.exact;
  doc["max_energy_drift"] = trace.max_energy_drift;
  doc["events"] = std::move(events);
  doc["manifest"] = manifest;
  os << doc.dump(2) << '\n';
}

int cmd_simulate(const Options& o, std::ostream& out) {
  const Geometry g = resolve_geometry(o);
  const classical::CollisionTrace trace = classical::simulate(g.params, initial_condition(o));
  json m = manifest_head("simulate");
  m["parameters"] = g.description;
  m["parameters"]["v0"] = o.v0;
  m["parameters"]["x0"] = o.x0;
  m["parameters"]["y0"] = o.y0;
  m["count"] = trace.count;
  m["exact_velocities"] = trace.exact;
  auto body = [&](std::ostream& os) {
    if (o.format == "json") {
      write_trace_json(os, trace, o.precision, m);
    } else {
      write_trace_csv(os, trace, o.precision);
    }
  };
  if (o.trace.empty()) {
    body(out);
    if (!o.manifest.empty()) write_json_file(o.manifest, m);
    return kExitOk;
  }
  std::ofstream f(o.trace, std::ios::binary);
  if (!f) throw UsageError("cannot write " + o.trace);
  m["outputs"] = json::array({o.trace});
  body(f);
  write_json_file(o.manifest.empty() ? o.trace + ".manifest.json" : o.manifest, m);
  out << trace.count << '\n';
  return kExitOk;
}

int cmd_semiclassical(const Options& o, std::ostream& out) {
  const Geometry g = resolve_geometry(o);
  const semiclassical::SemiclassicalConfig cfg(o.n, g.params, o.x_min);
  const CurveSeries c = semiclassical::sample_curve(cfg, o.samples);
  json m = manifest_head("semiclassical");
  m["parameters"] = g.description;
  m["parameters"]["n"] = o.n;
  m["parameters"]["x_min"] = o.x_min;
  m["parameters"]["samples"] = o.samples;
  m["extremum_count"] = semiclassical::extremum_count(cfg);
  m["total_phase"] = semiclassical::total_phase(cfg);
  const std::string tag = std::to_string(o.n);
  emit(o, out, m, [&](std::ostream& os) {
    if (o.format == "json") {
      write_curve_json(os, c, "n", tag, o.precision, m);
    } else {
      write_curve_csv(os, c, "n", tag, o.precision);
    }
  });
  return kExitOk;
}

int cmd_quantum(const Options& o, std::ostream& out) {
  const Geometry g = resolve_geometry(o);
  const CurveSeries c = quantum::sample_quantum_curve(o.n, g.beta, o.k, o.samples);
  const double l = o.n * kPi / g.beta;
  json m = manifest_head("quantum");
  m["parameters"] = g.description;
  m["parameters"]["n"] = o.n;
  m["parameters"]["k"] = o.k;
  m["parameters"]["samples"] = o.samples;
  m["l"] = l;
  m["coefficient"] = kCoefficient;
  const std::string tag = format_number(l, o.precision);
  emit(o, out, m, [&](std::ostream& os) {
    if (o.format == "json") {
      write_curve_json(os, c, "l", tag, o.precision, m);
    } else {
      write_curve_csv(os, c, "l", tag, o.precision);
    }
  });
  return kExitOk;
}

int cmd_phaseshift(const Options& o, std::ostream& out) {
  const Geometry g = resolve_geometry(o);
  const double delta = quantum::phase_shift(o.n, g.beta);
  const double step = quantum::phase_shift_step(g.beta);
  json m = manifest_head("phaseshift");
  m["parameters"] = g.description;
  m["parameters"]["n"] = o.n;
  const int p = o.precision;
  if (o.format == "json") {
    json doc;
    doc["n"] = o.n;
    doc["beta"] = g.beta;
    doc["delta"] = rounded(delta, p);
    doc["delta_over_pi"] = rounded(delta / kPi, p);
    doc["delta_step"] = rounded(step, p);
    doc["delta_step_over_pi"] = rounded(step / kPi, p);
    out << doc.dump(2) << '\n';
  } else {
    out << "quantity,value,over_pi\n";
    out << "delta," << format_number(delta, p) << ',' << format_number(delta / kPi, p) << '\n';
    out << "delta_step," << format_number(step, p) << ',' << format_number(step / kPi, p) << '\n';
  }
  if (!o.manifest.empty()) write_json_file(o.manifest, m);
  return kExitOk;
}

int cmd_figures(const Options& o, std::ostream& out) {
  Geometry g{BilliardParams::from_beta(kPi / 10), kPi / 10, json{{"beta", kPi / 10}}};
  if (geometry_sources(o) > 1) throw UsageError("at most one of --beta, --mass-ratio, --N, --params may be given");
  if (geometry_sources(o) == 1) g = resolve_geometry(o);
  const fs::path dir(o.out_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw UsageError("cannot create " + dir.string() + ": " + ec.message());

  const int p = o.precision;
  const classical::InitialCondition init = initial_condition(o);
  json files = json::array();

  const CurveSeries fig3_classical = classical::classical_curve(g.params, init, o.samples);
  write_curve_file(dir / "fig3_classical.csv", fig3_classical, "n", "", p);
  files.push_back({{"file", "fig3_classical.csv"},
                   {"model", "classical"},
                   {"rows", fig3_classical.points.size()},
                   {"collisions", std::stoll(fig3_classical.metadata.at("collisions"))}});

  for (int n : {1, 10}) {
    const semiclassical::SemiclassicalConfig cfg(n, g.params, o.x_min);
    const CurveSeries c = semiclassical::sample_curve(cfg, o.samples);
    const std::string name = "fig3_n" + std::to_string(n) + ".csv";
    write_curve_file(dir / name, c, "n", std::to_string(n), p);
    files.push_back({{"file", name},
                     {"model", "semiclassical"},
                     {"n", n},
                     {"rows", c.points.size()},
                     {"extremum_count", semiclassical::extremum_count(cfg)},
                     {"curve_extrema", interior_extrema(c).size()}});
  }

  const CurveSeries fig5_classical = classical::classical_eta_curve(g.params, init, o.samples);
  write_curve_file(dir / "fig5_classical.csv", fig5_classical, "l", "", p);
  files.push_back({{"file", "fig5_classical.csv"}, {"model", "classical"}, {"rows", fig5_classical.points.size()}});

  // l = n pi / beta; at beta = pi/10 these are l = 10 and l = 100
  for (int n : {1, 10}) {
    const double l = n * kPi / g.beta;
    const CurveSeries c = quantum::sample_quantum_curve(n, g.beta, o.k, o.samples);
    const std::string name = "fig5_l" + std::to_string(static_cast<long>(std::lround(l))) + ".csv";
    write_curve_file(dir / name, c, "l", format_number(l, p), p);
    files.push_back({{"file", name},
                     {"model", "quantum"},
                     {"n", n},
                     {"l", l},
                     {"rows", c.points.size()},
                     {"curve_extrema", interior_extrema(c).size()}});
  }

  json m = manifest_head("figures");
  m["parameters"] = g.description;
  m["parameters"]["mass_ratio"] = g.params.mass_ratio();
  m["parameters"]["beta_used"] = g.beta;
  m["parameters"]["samples"] = o.samples;
  m["parameters"]["x_min"] = o.x_min;
  m["parameters"]["k"] = o.k;
  m["parameters"]["v0"] = o.v0;
  m["parameters"]["x0"] = o.x0;
  m["parameters"]["y0"] = o.y0;
  m["parameters"]["precision"] = p;
  m["coefficient"] = kCoefficient;
  m["files"] = std::move(files);
  write_json_file(dir / "manifest.json", m);
  out << "wrote " << m["files"].size() << " curves and manifest.json to " << dir.string() << '\n';
  return kExitOk;
}

void add_geometry(CLI::App* sub, Options& o) {
  sub->add_option("--beta", o.beta, "wedge angle in radians");
  sub->add_option("--mass-ratio", o.mass_ratio, "M/m");
  sub->add_option("--N", o.N, "mass ratio 100^N");
  sub->add_option("--params", o.params_file, "JSON file {\"M\":..,\"m\":..,\"hbar\":..}");
}

void add_output(CLI::App* sub, Options& o) {
  sub->add_option("--precision", o.precision, "significant digits")->check(CLI::Range(1, 17));
  sub->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--manifest", o.manifest, "write the JSON manifest here");
}

std::string one_line(std::string s) {
  std::replace(s.begin(), s.end(), '\n', ' ');
  while (!s.empty() && s.back() == ' ') s.pop_back();
  return s;
}

}  // namespace

const char* version() noexcept { return GALPERIN_VERSION; }

std::string format_number(double value, int digits) {
  if (value == 0.0) value = 0.0;  // drop the sign of -0
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, value);
  return buf;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Collision counting, semiclassical and quantum wedge models", kTool};
  app.set_version_flag("--version", std::string(kTool) + " " + version());
  app.require_subcommand(1);

  auto* digits = app.add_subcommand("digits", "floor(pi 10^N) from the collision count, certified");
  digits->add_option("--N", o.N, "number of decimals")->required();
  add_output(digits, o);

  auto* count = app.add_subcommand("count", "total number of collisions");
  add_geometry(count, o);
  add_output(count, o);

  auto* sim = app.add_subcommand("simulate", "event-driven collision trace");
  add_geometry(sim, o);
  add_output(sim, o);
  sim->add_option("--v0", o.v0, "initial big-ball speed toward the wall");
  sim->add_option("--x0", o.x0, "initial big-ball position");
  sim->add_option("--y0", o.y0, "initial small-ball position");
  sim->add_option("--trace", o.trace, "trace CSV path");

  auto* semi = app.add_subcommand("semiclassical", "mean small-ball position against alpha");
  add_geometry(semi, o);
  add_output(semi, o);
  semi->add_option("--n", o.n, "lower level of the superposition")->check(CLI::PositiveNumber);
  semi->add_option("--samples", o.samples, "grid size")->check(CLI::Range(2, 10000000));
  semi->add_option("--x-min", o.x_min, "turning width")->check(CLI::PositiveNumber);
  semi->add_option("--out", o.out, "curve path");

  auto* quant = app.add_subcommand("quantum", "mean angle against eta");
  add_geometry(quant, o);
  add_output(quant, o);
  quant->add_option("--n", o.n, "angular channel")->check(CLI::PositiveNumber);
  quant->add_option("--samples", o.samples, "grid size")->check(CLI::Range(2, 10000000));
  quant->add_option("--k", o.k, "wavenumber")->check(CLI::PositiveNumber);
  quant->add_option("--out", o.out, "curve path");

  auto* phase = app.add_subcommand("phaseshift", "delta(n) and its step in n");
  add_geometry(phase, o);
  add_output(phase, o);
  phase->add_option("--n", o.n, "angular channel")->check(CLI::PositiveNumber);

  auto* figs = app.add_subcommand("figures", "curve bundle for beta = pi/10 (or the given geometry)");
  add_geometry(figs, o);
  figs->add_option("--precision", o.precision, "significant digits")->check(CLI::Range(1, 17));
  figs->add_option("--samples", o.samples, "grid size per curve")->check(CLI::Range(2, 10000000));
  figs->add_option("--x-min", o.x_min, "semiclassical turning width")->check(CLI::PositiveNumber);
  figs->add_option("--k", o.k, "wavenumber")->check(CLI::PositiveNumber);
  figs->add_option("--out-dir", o.out_dir, "output directory");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kTool << ' ' << version() << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << kTool << ": " << one_line(e.what()) << '\n';
    return kExitUsage;
  }

  try {
    if (digits->parsed()) return cmd_digits(o, out);
    if (count->parsed()) return cmd_count(o, out);
    if (sim->parsed()) return cmd_simulate(o, out);
    if (semi->parsed()) return cmd_semiclassical(o, out);
    if (quant->parsed()) return cmd_quantum(o, out);
    if (phase->parsed()) return cmd_phaseshift(o, out);
    if (figs->parsed()) return cmd_figures(o, out);
  } catch (const UsageError& e) {
    err << kTool << ": " << one_line(e.what()) << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << kTool << ": " << one_line(e.what()) << '\n';
    return kExitUsage;
  } catch (const ValidityError& e) {
    err << kTool << ": " << one_line(e.what()) << '\n';
    return kExitUsage;
  } catch (const IndeterminateError& e) {
    err << kTool << ": indeterminate: " << one_line(e.what()) << '\n';
    return kExitIndeterminate;
  } catch (const PrecisionError& e) {
    err << kTool << ": indeterminate: " << one_line(e.what()) << '\n';
    return kExitIndeterminate;
  } catch (const std::exception& e) {
    err << kTool << ": internal error: " << one_line(e.what()) << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace galperin::cli
