// itofrft: command-line front end.
//
// Exit codes: 0 ok, 1 domain error, 2 usage error, 3 verification failure.

#include <chrono>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "itofrft/coeff_io.hpp"
#include "itofrft/error.hpp"
#include "itofrft/kernels.hpp"
#include "itofrft/spectral.hpp"
#include "itofrft/transforms.hpp"
#include "itofrft/verify.hpp"
#include "json.hpp"

namespace {

using namespace itofrft;
using cd = std::complex<double>;
using nlohmann::json;

constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;
constexpr int kExitVerify = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json cjson(cd z) { return {{"re", z.real()}, {"im", z.imag()}}; }

void emit(const json& j) { std::cout << j.dump() << '\n'; }

// "center,half-width,count" -> count evenly spaced values.
std::vector<double> parse_grid(const std::string& spec) {
  double c = 0, h = 0;
  int n = 0;
  char tail = 0;
  if (std::sscanf(spec.c_str(), "%lf,%lf,%d%c", &c, &h, &n, &tail) != 3 || n < 1 || h < 0) {
    throw UsageError("grid spec must be 'center,half-width,count' with count >= 1, got '" + spec + "'");
  }
  std::vector<double> out;
  if (n == 1) return {c};
  for (int i = 0; i < n; ++i) out.push_back(c - h + 2.0 * h * i / (n - 1));
  return out;
}

struct Common {
  double nu = 1.0;
  double z_re = 0, z_im = 0, w_re = 0, w_im = 0;
  double u_re = 0, u_im = 0, v_re = 0, v_im = 0;
  double zeta_re = 0, zeta_im = 0;
  double alpha = 1.0, beta = 1.0;
  int m = 0, n = 0, max_m = 5, max_n = 5, trunc = 40;
  double tol = 1e-10;
  bool normalized = false;
  std::string action;
  std::string coeffs;
  std::string write_coeffs;
  std::string grid_x = "0,0,1", grid_y = "0,0,1";
  std::string method = "quadrature";
  int k = 0;
  int n_radial = 64, n_angular = 64;
  double schatten = 2.0;
  std::string out = ".";
  std::string config;
  std::vector<std::string> only;
  bool list = false;

  cd z() const { return {z_re, z_im}; }
  cd w() const { return {w_re, w_im}; }
  cd u() const { return {u_re, u_im}; }
  cd v() const { return {v_re, v_im}; }
};

int cmd_hermite(const Common& o) {
  if (o.action == "eval") {
    const ScaledPoint p{o.nu, o.z()};
    emit({{"value", cjson(o.normalized ? psi(p, {o.m, o.n}) : hermite_ito(p, {o.m, o.n}))}});
  } else if (o.action == "zeros") {
    const ZeroSet zs = zero_radii(o.nu, {o.m, o.n});
    emit({{"radii", zs.radii}, {"origin", zs.includes_origin}});
  } else {
    json idx = json::array();
    for (auto i : null_index_set(o.nu, o.z(), o.max_m, o.max_n, o.tol)) idx.push_back({i.m, i.n});
    emit({{"indices", idx}});
  }
  return 0;
}

int cmd_kernel(const Common& o) {
  cd value;
  if (o.action == "mehler") {
    value = mehler_closed(TransformParams(o.nu, o.u(), o.v()), o.z(), o.w());
  } else if (o.action == "mehler-series") {
    value = mehler_series(TransformParams(o.nu, o.u(), o.v()), o.z(), o.w(), o.trunc);
  } else if (o.action == "frft") {
    value = frft_kernel(TransformParams(o.nu, o.u(), o.v()), o.z(), o.w());
  } else if (o.action == "bergman") {
    value = bergman_kernel(o.alpha, o.beta, {o.u(), o.v()}, {o.z(), o.w()});
  } else {
    value = gram_kernel(o.nu, o.alpha, o.beta, o.w(), {o.zeta_re, o.zeta_im}, o.z(), o.trunc);
  }
  emit({{"value", cjson(value)}});
  return 0;
}

int cmd_transform(const Common& o) {
  const CoeffFunction f = io::read_coeff_file(o.coeffs);
  if (!o.write_coeffs.empty()) io::write_coeff_file(o.write_coeffs, f);
  const auto xs = parse_grid(o.grid_x);
  const auto ys = parse_grid(o.grid_y);
  json out = json::array();
  if (o.action == "frft") {
    const PlaneRule rule = plane_rule(f.nu(), o.n_radial, o.n_angular);
    const TransformParams p(f.nu(), o.u(), o.v());
    std::vector<cd> xis;
    for (double x : xs)
      for (double y : ys) xis.emplace_back(x, y);
    const auto vals = frft_apply_grid(p, f, xis, rule);
    for (std::size_t i = 0; i < xis.size(); ++i) out.push_back({{"point", {{"xi", cjson(xis[i])}}}, {"value", cjson(vals[i])}});
  } else if (o.action == "dual") {
    // x axis carries u, y axis carries v (real parameters).
    if (o.method != "quadrature" && o.method != "coeff") throw UsageError("--method must be quadrature or coeff");
    const bool quad = o.method == "quadrature";
    std::vector<cd> samples;
    std::optional<PlaneRule> rule;
    if (quad) {
      rule = plane_rule(f.nu(), o.n_radial, o.n_angular);
      samples = f.sample(std::vector<cd>(rule->nodes().begin(), rule->nodes().end()));
    }
    for (double u : xs)
      for (double v : ys) {
        const BidiskPoint uv{u, v};
        const cd val = quad ? dual_apply_samples(f.nu(), o.w(), samples, uv, *rule)
                            : dual_apply_coeff(f.nu(), o.w(), f, uv);
        out.push_back({{"point", {{"u", cjson(u)}, {"v", cjson(v)}}}, {"value", cjson(val)}});
      }
  } else {
    const auto profile = RadialFunction::mode_profile(f, o.k);
    for (double y : xs) {
      const cd val = rotational_frft(f.nu(), o.u_re, o.v_re, o.k, profile, y, o.n_radial);
      out.push_back({{"point", {{"y", y}}}, {"value", cjson(val)}});
    }
  }
  emit(out);
  return 0;
}

int cmd_spectrum(const Common& o) {
  const BergmanParams bp(o.alpha, o.beta);
  bp.require_bounded_regime();
  if (o.schatten <= 0) throw DomainError("--schatten must be positive");
  const Spectrum s = spectrum(o.nu, bp, o.w(), o.max_m, o.max_n);
  const auto dir = io::resolve_output_dir(o.out);
  std::filesystem::create_directories(dir);
  {
    std::ofstream csv(dir / "spectrum.csv");
    io::write_spectrum_csv(csv, s);
  }
  const auto summary = io::summarize(s, o.schatten);
  std::ofstream(dir / "summary.json") << io::summary_to_json(s, summary);
  emit({{"spectrum_csv", (dir / "spectrum.csv").string()}, {"summary_json", (dir / "summary.json").string()}});
  return 0;
}

std::string utc_timestamp() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return buf;
}

int cmd_verify(const Common& o) {
  if (o.list) {
    for (const auto& c : verify::catalog()) std::cout << c.name << '\t' << c.title << '\n';
    return 0;
  }
  io::RunConfig cfg;
  if (!o.config.empty()) {
    if (!std::filesystem::exists(o.config)) throw UsageError("config file not found: " + o.config);
    try {
      cfg = io::read_run_config(o.config);
    } catch (const io::SchemaError& e) {
      throw UsageError(e.what());
    }
  }
  std::vector<std::string> names = o.only;
  if (names.empty())
    for (const auto& c : verify::catalog()) names.push_back(c.name);
  for (const auto& n : names) {
    const auto& cat = verify::catalog();
    if (std::none_of(cat.begin(), cat.end(), [&](const auto& c) { return c.name == n; })) {
      throw UsageError("unknown check '" + n + "' (see --list)");
    }
  }
  std::vector<verify::CheckResult> results;
  for (const auto& n : names) {
    results.push_back(verify::run_check(n, cfg));
    std::cout << verify::format_line(results.back()) << std::endl;
  }
  const auto dir = io::resolve_output_dir(cfg.output_dir);
  std::filesystem::create_directories(dir);
  std::ofstream(dir / "report.json") << verify::report_json(results, utc_timestamp());
  const bool ok = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
  std::cout << (ok ? "all checks passed" : "verification failed") << " (report: " << (dir / "report.json").string()
            << ")\n";
  return ok ? 0 : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ito-Hermite polynomials, the 2D fractional Fourier transform and its dual"};
  app.require_subcommand(1);
  Common o;

  auto complex_flags = [&](CLI::App* c, const char* name, double& re, double& im) {
    c->add_option(std::string("--") + name + "-re", re);
    c->add_option(std::string("--") + name + "-im", im);
  };

  auto* hermite = app.add_subcommand("hermite", "evaluate H^nu_{m,n}, its zero circles, or a null index set");
  hermite->add_option("action", o.action)->required()->check(CLI::IsMember({"eval", "zeros", "nullset"}));
  hermite->add_option("--nu", o.nu)->check(CLI::PositiveNumber);
  hermite->add_option("--m", o.m)->check(CLI::NonNegativeNumber);
  hermite->add_option("--n", o.n)->check(CLI::NonNegativeNumber);
  complex_flags(hermite, "z", o.z_re, o.z_im);
  hermite->add_option("--max-m", o.max_m)->check(CLI::NonNegativeNumber);
  hermite->add_option("--max-n", o.max_n)->check(CLI::NonNegativeNumber);
  hermite->add_option("--tol", o.tol)->check(CLI::PositiveNumber);
  hermite->add_flag("--normalized", o.normalized, "print psi_{m,n} instead of H_{m,n}");

  auto* kernel = app.add_subcommand("kernel", "evaluate a kernel function");
  kernel->add_option("action", o.action)
      ->required()
      ->check(CLI::IsMember({"mehler", "mehler-series", "frft", "bergman", "gram"}));
  kernel->add_option("--nu", o.nu)->check(CLI::PositiveNumber);
  for (auto [name, re, im] : {std::tuple{"u", &o.u_re, &o.u_im}, {"v", &o.v_re, &o.v_im}, {"z", &o.z_re, &o.z_im},
                              {"w", &o.w_re, &o.w_im}, {"zeta", &o.zeta_re, &o.zeta_im}}) {
    complex_flags(kernel, name, *re, *im);
  }
  kernel->add_option("--alpha", o.alpha);
  kernel->add_option("--beta", o.beta);
  kernel->add_option("--trunc", o.trunc)->check(CLI::NonNegativeNumber);

  auto* transform = app.add_subcommand("transform", "apply a transform to a coefficient file on a grid");
  transform->add_option("action", o.action)->required()->check(CLI::IsMember({"frft", "dual", "hankel"}));
  transform->add_option("--coeffs", o.coeffs, "CoeffFile JSON")->required();
  complex_flags(transform, "u", o.u_re, o.u_im);
  complex_flags(transform, "v", o.v_re, o.v_im);
  complex_flags(transform, "w", o.w_re, o.w_im);
  transform->add_option("--x", o.grid_x, "first axis: center,half-width,count (Re xi, u, or y)");
  transform->add_option("--y", o.grid_y, "second axis: center,half-width,count (Im xi or v)");
  transform->add_option("--method", o.method, "dual only: quadrature or coeff");
  transform->add_option("--k", o.k, "hankel only: angular mode");
  transform->add_option("--write-coeffs", o.write_coeffs, "write the parsed CoeffFile back in canonical form");
  transform->add_option("--n-radial", o.n_radial)->check(CLI::Range(8, 1024));
  transform->add_option("--n-angular", o.n_angular)->check(CLI::Range(8, 4096));

  auto* spec = app.add_subcommand("spectrum", "tabulate singular values of the dual transform");
  spec->add_option("--nu", o.nu)->check(CLI::PositiveNumber);
  spec->add_option("--alpha", o.alpha);
  spec->add_option("--beta", o.beta);
  complex_flags(spec, "w", o.w_re, o.w_im);
  spec->add_option("--max-m", o.max_m)->check(CLI::NonNegativeNumber);
  spec->add_option("--max-n", o.max_n)->check(CLI::NonNegativeNumber);
  spec->add_option("--schatten", o.schatten, "exponent p of the Schatten partial sums");
  spec->add_option("--out", o.out, std::string("output directory (overridden by ") + io::kOutputDirEnv + ")");

  auto* ver = app.add_subcommand("verify", "run the verification suite");
  ver->add_option("--config", o.config, "RunConfig JSON");
  ver->add_option("--only", o.only, "run only the named checks");
  ver->add_flag("--list", o.list, "list the checks and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*hermite) return cmd_hermite(o);
    if (*kernel) return cmd_kernel(o);
    if (*transform) return cmd_transform(o);
    if (*spec) return cmd_spectrum(o);
    return cmd_verify(o);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomain;
  }
}
