#include "itofrft/coeff_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include "json.hpp"

namespace itofrft::io {

using nlohmann::json;

namespace {

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw SchemaError("cannot write " + path.string());
  out << text;
}

json parse_or_throw(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string(what) + ": invalid JSON: " + e.what());
  }
}

double number_field(const json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key)) throw SchemaError(where + ": missing field '" + key + "'");
  const json& v = obj.at(key);
  if (!v.is_number()) throw SchemaError(where + ": field '" + key + "' must be a number");
  return v.get<double>();
}

int index_field(const json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key)) throw SchemaError(where + ": missing field '" + key + "'");
  const json& v = obj.at(key);
  if (!v.is_number_integer()) throw SchemaError(where + ": field '" + key + "' must be an integer");
  const auto i = v.get<long long>();
  if (i < 0) throw SchemaError(where + ": negative index " + key + " = " + std::to_string(i));
  if (i > kDegreeCap) {
    throw SchemaError(where + ": index " + key + " = " + std::to_string(i) +
                      " exceeds the degree cap " + std::to_string(kDegreeCap));
  }
  return static_cast<int>(i);
}

json complex_json(std::complex<double> z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

}  // namespace

CoeffFunction parse_coeff_json(const std::string& text) {
  const json doc = parse_or_throw(text, "coefficient file");
  if (!doc.is_object()) throw SchemaError("coefficient file: top level must be an object");
  const double nu = number_field(doc, "nu", "coefficient file");
  if (!(nu > 0.0) || !std::isfinite(nu)) {
    throw SchemaError("coefficient file: nu must be positive and finite");
  }
  if (!doc.contains("coeffs") || !doc.at("coeffs").is_array()) {
    throw SchemaError("coefficient file: 'coeffs' must be an array");
  }
  std::map<PolyIndex, std::complex<double>> coeffs;
  std::size_t k = 0;
  for (const json& rec : doc.at("coeffs")) {
    const std::string where = "coeffs[" + std::to_string(k++) + "]";
    if (!rec.is_object()) throw SchemaError(where + ": entry must be an object");
    const PolyIndex idx{index_field(rec, "m", where), index_field(rec, "n", where)};
    const std::complex<double> a{number_field(rec, "re", where), number_field(rec, "im", where)};
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
      throw SchemaError(where + ": coefficient must be finite");
    }
    if (!coeffs.emplace(idx, a).second) {
      throw SchemaError(where + ": duplicate index (" + std::to_string(idx.m) + ", " +
                        std::to_string(idx.n) + ")");
    }
  }
  return CoeffFunction(nu, std::move(coeffs));
}

CoeffFunction read_coeff_file(const std::filesystem::path& path) {
  return parse_coeff_json(slurp(path));
}

std::string coeff_to_json(const CoeffFunction& f) {
  json arr = json::array();
  for (const auto& [idx, a] : f.coeffs()) {
    arr.push_back({{"m", idx.m}, {"n", idx.n}, {"re", a.real()}, {"im", a.imag()}});
  }
  // nlohmann prints the shortest round-tripping decimal for doubles.
  return json{{"nu", f.nu()}, {"coeffs", arr}}.dump(2) + "\n";
}

void write_coeff_file(const std::filesystem::path& path, const CoeffFunction& f) {
  spit(path, coeff_to_json(f));
}

void write_spectrum_csv(std::ostream& out, const Spectrum& spec) {
  out << "m,n,s\n";
  char buf[64];
  for (const auto& e : spec.entries()) {
    std::snprintf(buf, sizeof buf, "%.17g", e.value);
    out << e.index.m << ',' << e.index.n << ',' << buf << '\n';
  }
}

SpectrumSummary summarize(const Spectrum& spec, double schatten_p) {
  SpectrumSummary s;
  auto sorted = spec.sorted();
  if (sorted.size() > 10) sorted.resize(10);
  s.top = std::move(sorted);
  s.schatten_p = schatten_p;
  for (int cutoff : {10, 20, 40}) s.schatten_partials[cutoff] = schatten_partial(spec, schatten_p, cutoff);
  s.kw = kw_constant(spec.nu(), spec.bergman(), spec.w());
  return s;
}

std::string summary_to_json(const Spectrum& spec, const SpectrumSummary& summary) {
  json top = json::array();
  for (const auto& e : summary.top) top.push_back({{"m", e.index.m}, {"n", e.index.n}, {"s", e.value}});
  json partials = json::array();
  for (const auto& [cutoff, value] : summary.schatten_partials) {
    partials.push_back({{"cutoff", cutoff}, {"value", value}});
  }
  json doc{
      {"nu", spec.nu()},
      {"alpha", spec.bergman().alpha()},
      {"beta", spec.bergman().beta()},
      {"w", complex_json(spec.w())},
      {"max_m", spec.max_m()},
      {"max_n", spec.max_n()},
      {"top", top},
      {"schatten", {{"p", summary.schatten_p}, {"partial_sums", partials}}},
      {"kw", {{"value", summary.kw.value}, {"lower", summary.kw.lower}, {"upper", summary.kw.upper}}},
  };
  return doc.dump(2) + "\n";
}

RunConfig parse_run_config(const std::string& text) {
  const json doc = parse_or_throw(text, "run config");
  if (!doc.is_object()) throw SchemaError("run config: top level must be an object");
  RunConfig cfg;
  if (doc.contains("quadrature")) {
    const json& q = doc.at("quadrature");
    if (!q.is_object()) throw SchemaError("run config: 'quadrature' must be an object");
    auto size = [&](const char* key, int& dst) {
      if (!q.contains(key)) return;
      if (!q.at(key).is_number_integer()) {
        throw SchemaError(std::string("run config: quadrature.") + key + " must be an integer");
      }
      dst = q.at(key).get<int>();
      if (dst < 8) {
        throw SchemaError(std::string("run config: quadrature.") + key + " must be at least 8");
      }
    };
    size("n_radial", cfg.n_radial);
    size("n_angular", cfg.n_angular);
    size("quadrant_n", cfg.quadrant_n);
  }
  auto positive = [](const json& v, const std::string& where) {
    if (!v.is_number() || !(v.get<double>() > 0.0)) {
      throw SchemaError("run config: " + where + " must be a positive number");
    }
    return v.get<double>();
  };
  if (doc.contains("tolerances")) {
    const json& t = doc.at("tolerances");
    if (!t.is_object()) throw SchemaError("run config: 'tolerances' must be an object");
    for (const auto& [name, v] : t.items()) cfg.tolerances[name] = positive(v, "tolerances." + name);
  }
  if (doc.contains("tolerance_override") && !doc.at("tolerance_override").is_null()) {
    cfg.tolerance_override = positive(doc.at("tolerance_override"), "tolerance_override");
  }
  if (doc.contains("output_dir")) {
    if (!doc.at("output_dir").is_string()) throw SchemaError("run config: 'output_dir' must be a string");
    cfg.output_dir = doc.at("output_dir").get<std::string>();
  }
  if (doc.contains("nu")) {
    const json& nus = doc.at("nu");
    if (!nus.is_array() || nus.empty()) throw SchemaError("run config: 'nu' must be a non-empty array");
    cfg.nus.clear();
    for (const json& v : nus) cfg.nus.push_back(positive(v, "nu[]"));
  }
  auto complex_value = [](const json& v, const std::string& where) {
    if (!v.is_object()) throw SchemaError("run config: " + where + " must be a {re, im} record");
    return std::complex<double>(number_field(v, "re", where), number_field(v, "im", where));
  };
  auto list = [&](const char* key) -> const json* {
    if (!doc.contains(key)) return nullptr;
    const json& v = doc.at(key);
    if (!v.is_array() || v.empty()) {
      throw SchemaError(std::string("run config: '") + key + "' must be a non-empty array");
    }
    return &v;
  };
  if (const json* ws = list("w")) {
    cfg.ws.clear();
    for (const json& v : *ws) cfg.ws.push_back(complex_value(v, "w[]"));
  }
  if (const json* abs = list("alpha_beta")) {
    cfg.alpha_betas.clear();
    for (const json& v : *abs) {
      if (!v.is_array() || v.size() != 2) throw SchemaError("run config: alpha_beta[] must be a pair");
      cfg.alpha_betas.emplace_back(positive(v[0], "alpha_beta[][0]"), positive(v[1], "alpha_beta[][1]"));
    }
  }
  if (const json* uvs = list("uv")) {
    cfg.uvs.clear();
    for (const json& v : *uvs) {
      if (!v.is_object()) throw SchemaError("run config: uv[] must be an object {u, v}");
      if (!v.contains("u") || !v.contains("v")) throw SchemaError("run config: uv[] needs fields u and v");
      const auto u = complex_value(v.at("u"), "uv[].u");
      const auto w = complex_value(v.at("v"), "uv[].v");
      if (!(std::abs(u) < 1.0) || !(std::abs(w) < 1.0)) {
        throw SchemaError("run config: uv[] entries must lie in the open unit disk");
      }
      cfg.uvs.emplace_back(u, w);
    }
  }
  return cfg;
}

RunConfig read_run_config(const std::filesystem::path& path) { return parse_run_config(slurp(path)); }

std::filesystem::path resolve_output_dir(const std::filesystem::path& configured) {
  if (const char* env = std::getenv(kOutputDirEnv); env != nullptr && *env != '\0') return env;
  return configured;
}

}  // namespace itofrft::io
