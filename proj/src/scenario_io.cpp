#include "deltabound/scenario_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "deltabound/errors.hpp"

namespace deltabound {

namespace {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

void reject_unknown(const json& obj, const std::string& where, const std::set<std::string>& allowed) {
  for (const auto& [key, _] : obj.items())
    if (!allowed.count(key)) throw UsageError(where + ": unknown key '" + key + "'");
}

const json& require(const json& obj, const std::string& where, const std::string& key) {
  if (!obj.contains(key)) throw UsageError(where + ": missing required key '" + key + "'");
  return obj.at(key);
}

const json& require_object(const json& v, const std::string& where) {
  if (!v.is_object()) throw UsageError(where + ": expected an object");
  return v;
}

double get_number(const json& v, const std::string& where) {
  if (!v.is_number()) throw UsageError(where + ": expected a number");
  return v.get<double>();
}

int get_int(const json& v, const std::string& where) {
  if (!v.is_number_integer()) throw UsageError(where + ": expected an integer");
  return v.get<int>();
}

bool get_bool(const json& v, const std::string& where) {
  if (!v.is_boolean()) throw UsageError(where + ": expected true or false");
  return v.get<bool>();
}

std::string get_string(const json& v, const std::string& where) {
  if (!v.is_string()) throw UsageError(where + ": expected a string");
  return v.get<std::string>();
}

SurfaceInvariants parse_surface(const json& v, const std::string& where) {
  require_object(v, where);
  reject_unknown(v, where, {"genus", "systole", "lambda1", "n_ev", "n_geo5", "diameter"});
  SurfaceInvariants s;
  s.genus = get_int(require(v, where, "genus"), where + ".genus");
  s.systole = get_number(require(v, where, "systole"), where + ".systole");
  s.lambda1 = get_number(require(v, where, "lambda1"), where + ".lambda1");
  if (v.contains("n_ev")) s.n_ev = get_int(v.at("n_ev"), where + ".n_ev");
  if (v.contains("n_geo5")) s.n_geo5 = get_int(v.at("n_geo5"), where + ".n_geo5");
  if (v.contains("diameter")) s.diameter = get_number(v.at("diameter"), where + ".diameter");
  return s;
}

CoveringScenario parse_covering(const json& v) {
  const std::string where = "scenario";
  require_object(v, where);
  reject_unknown(v, where, {"kind", "base", "cover", "r0", "R0"});
  const std::string kind = get_string(require(v, where, "kind"), "scenario.kind");
  CoveringScenario sc;
  sc.base = parse_surface(require(v, where, "base"), "scenario.base");
  if (kind == "trivial") {
    if (v.contains("r0") || v.contains("R0")) throw UsageError("scenario: r0/R0 only apply to ramified coverings");
    sc.cover = sc.base;
    if (v.contains("cover")) {
      const auto c = parse_surface(v.at("cover"), "scenario.cover");
      if (c.genus != sc.base.genus || c.systole != sc.base.systole || c.lambda1 != sc.base.lambda1)
        throw UsageError("scenario.cover: a trivial covering needs cover identical to base");
    }
    sc.kind = TrivialCover{};
  } else if (kind == "unramified" || kind == "ramified") {
    sc.cover = parse_surface(require(v, where, "cover"), "scenario.cover");
    if (kind == "unramified") {
      if (v.contains("r0") || v.contains("R0")) throw UsageError("scenario: r0/R0 only apply to ramified coverings");
      sc.kind = UnramifiedCover{};
    } else {
      sc.kind = RamifiedCover{get_number(require(v, where, "r0"), "scenario.r0"),
                              get_number(require(v, where, "R0"), "scenario.R0")};
    }
  } else {
    throw UsageError("scenario.kind: expected trivial, unramified or ramified (got '" + kind + "')");
  }
  return sc;
}

QuadratureSpec parse_quadrature(const json& v) {
  const std::string where = "quadrature";
  require_object(v, where);
  reject_unknown(v, where, {"abs_tol", "rel_tol", "max_subdivisions", "tail_cutoff"});
  QuadratureSpec q = EvalOptions{}.supnorm_spec;
  if (v.contains("abs_tol")) q.abs_tol = get_number(v.at("abs_tol"), "quadrature.abs_tol");
  if (v.contains("rel_tol")) q.rel_tol = get_number(v.at("rel_tol"), "quadrature.rel_tol");
  if (v.contains("max_subdivisions"))
    q.max_subdivisions = get_int(v.at("max_subdivisions"), "quadrature.max_subdivisions");
  if (v.contains("tail_cutoff")) q.tail_cutoff = get_number(v.at("tail_cutoff"), "quadrature.tail_cutoff");
  q.validate();
  return q;
}

ParshinInputs parse_parshin(const json& v) {
  const std::string where = "parshin";
  require_object(v, where);
  reject_unknown(v, where, {"ell_Xv", "g_XP", "lambda1", "lambda_min", "simplified"});
  ParshinInputs p{};
  p.ell_xv = get_number(require(v, where, "ell_Xv"), "parshin.ell_Xv");
  p.g_xp = get_int(require(v, where, "g_XP"), "parshin.g_XP");
  p.lambda1_cover = get_number(require(v, where, "lambda1"), "parshin.lambda1");
  if (v.contains("lambda_min")) p.lambda_min = get_number(v.at("lambda_min"), "parshin.lambda_min");
  if (v.contains("simplified")) p.simplified = get_bool(v.at("simplified"), "parshin.simplified");
  return p;
}

ojson surface_json(const SurfaceInvariants& s) {
  ojson o;
  o["genus"] = s.genus;
  o["systole"] = s.systole;
  o["lambda1"] = s.lambda1;
  if (s.n_ev) o["n_ev"] = *s.n_ev;
  if (s.n_geo5) o["n_geo5"] = *s.n_geo5;
  if (s.diameter) o["diameter"] = *s.diameter;
  return o;
}

// Twelve significant digits, so reports stay byte-stable under last-bit noise.
double round12(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

ojson scalar_json(const LogScalar& v) {
  ojson o;
  if (v.sign() > 0) {
    o["log_value"] = round12(v.log());
    o["log10_value"] = round12(v.log10());
  } else {
    o["log_value"] = nullptr;
    o["log10_value"] = nullptr;
  }
  o["decimal"] = v.to_decimal(6);
  return o;
}

void attach_spectrum(SurfaceInvariants& s, const GeodesicLengthSpectrum& spectrum) {
  if (spectrum.empty()) return;
  if (spectrum.systole() < s.systole * (1.0 - 1e-12))
    throw DomainError("spectrum contains a length below the stated systole");
  if (!s.n_geo5) s.n_geo5 = n_geo_window(spectrum, 0.0, 5.0);
}

}  // namespace

ScenarioFile parse_scenario(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw UsageError(std::string("malformed JSON: ") + e.what());
  }
  require_object(doc, "document");
  reject_unknown(doc, "document", {"schema_version", "scenario", "mode", "quadrature", "spectrum", "parshin"});
  ScenarioFile f;
  f.schema_version = get_int(require(doc, "document", "schema_version"), "schema_version");
  if (f.schema_version != kScenarioSchemaVersion)
    throw UsageError("schema_version: expected 1 (got " + std::to_string(f.schema_version) + ")");
  f.scenario = parse_covering(require(doc, "document", "scenario"));
  if (doc.contains("mode")) f.mode = parse_mode(get_string(doc.at("mode"), "mode"));
  if (doc.contains("quadrature")) f.quadrature = parse_quadrature(doc.at("quadrature"));
  if (doc.contains("spectrum")) {
    const auto& v = doc.at("spectrum");
    if (!v.is_array()) throw UsageError("spectrum: expected an array of lengths");
    std::vector<double> lengths;
    for (std::size_t i = 0; i < v.size(); ++i) lengths.push_back(get_number(v[i], "spectrum[" + std::to_string(i) + "]"));
    f.spectrum = GeodesicLengthSpectrum(std::move(lengths));
  }
  if (doc.contains("parshin")) f.parshin = parse_parshin(doc.at("parshin"));
  f.scenario.validate();
  return f;
}

ScenarioFile load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read scenario file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_scenario(ss.str());
}

ojson to_json(const CoveringScenario& sc) {
  ojson o;
  o["kind"] = kind_name(sc.kind);
  o["base"] = surface_json(sc.base);
  if (!std::holds_alternative<TrivialCover>(sc.kind)) o["cover"] = surface_json(sc.cover);
  if (const auto* r = std::get_if<RamifiedCover>(&sc.kind)) {
    o["r0"] = r->r0;
    o["R0"] = r->big_r0;
  }
  return o;
}

ojson to_json(const ScenarioFile& f) {
  ojson o;
  o["schema_version"] = f.schema_version;
  o["scenario"] = to_json(f.scenario);
  o["mode"] = f.mode == Mode::tight ? "tight" : "paper";
  if (f.quadrature) {
    o["quadrature"] = {{"abs_tol", f.quadrature->abs_tol},
                       {"rel_tol", f.quadrature->rel_tol},
                       {"max_subdivisions", f.quadrature->max_subdivisions},
                       {"tail_cutoff", f.quadrature->tail_cutoff}};
  }
  if (f.spectrum) o["spectrum"] = f.spectrum->lengths();
  if (f.parshin) {
    ojson p;
    p["ell_Xv"] = f.parshin->ell_xv;
    p["g_XP"] = f.parshin->g_xp;
    p["lambda1"] = f.parshin->lambda1_cover;
    if (f.parshin->lambda_min) p["lambda_min"] = *f.parshin->lambda_min;
    p["simplified"] = f.parshin->simplified;
    o["parshin"] = p;
  }
  return o;
}

ojson to_json(const BoundReport& r) {
  ojson o;
  o["operation"] = r.operation;
  o["mode"] = to_string(r.mode);
  o["rounded"] = r.rounded;
  o["final"] = scalar_json(r.final);
  ojson terms = ojson::array();
  for (const auto& t : r.terms) {
    ojson item;
    item["label"] = t.label;
    item["source"] = t.source;
    const ojson value = scalar_json(t.value);
    for (auto& [k, v] : value.items()) item[k] = v;
    terms.push_back(item);
  }
  o["terms"] = terms;
  if (r.inputs) o["inputs"] = to_json(*r.inputs);
  return o;
}

EvalOptions options_for(const ScenarioFile& file, std::optional<Mode> mode_override, bool rounded) {
  EvalOptions o;
  o.mode = mode_override ? *mode_override : file.mode;
  o.rounded = rounded;
  if (file.quadrature) o.supnorm_spec = *file.quadrature;
  return o;
}

BoundReport evaluate_scenario(const ScenarioFile& file, const EvalOptions& opts) {
  CoveringScenario sc = file.scenario;
  if (file.spectrum) {
    if (std::holds_alternative<TrivialCover>(sc.kind)) {
      attach_spectrum(sc.base, *file.spectrum);
      sc.cover = sc.base;
    } else {
      attach_spectrum(sc.cover, *file.spectrum);
    }
  }
  if (std::holds_alternative<TrivialCover>(sc.kind)) return cor_6_3(sc.base, opts);
  if (std::holds_alternative<UnramifiedCover>(sc.kind)) return thm_6_1(sc, opts);
  return cor_6_4(sc, opts);
}

}  // namespace deltabound
