#pragma once

// File formats: CoeffFile JSON, spectrum.csv / summary.json, and the
// verification RunConfig.
//
// CoeffFile:
//   {"nu": 1.0, "coeffs": [{"m": 0, "n": 0, "re": 1.0, "im": 0.0}, ...]}
// Complex numbers are always {"re", "im"} records.

#include <complex>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "itofrft/error.hpp"
#include "itofrft/spectral.hpp"
#include "itofrft/transforms.hpp"

namespace itofrft::io {

/// Malformed input file; the message names the violated rule.
class SchemaError : public DomainError {
 public:
  using DomainError::DomainError;
};

CoeffFunction parse_coeff_json(const std::string& text);
CoeffFunction read_coeff_file(const std::filesystem::path& path);
std::string coeff_to_json(const CoeffFunction& f);
void write_coeff_file(const std::filesystem::path& path, const CoeffFunction& f);

/// CSV with header "m,n,s", one row per index in row-major order.
void write_spectrum_csv(std::ostream& out, const Spectrum& spec);

struct SpectrumSummary {
  std::vector<SpectrumEntry> top;                  // ten largest values
  std::map<int, double> schatten_partials;         // cutoff -> partial sum
  double schatten_p = 2.0;
  KwBracket kw;
};

SpectrumSummary summarize(const Spectrum& spec, double schatten_p);
std::string summary_to_json(const Spectrum& spec, const SpectrumSummary& summary);

/// Settings for the verification runner.
struct RunConfig {
  int n_radial = 64;
  int n_angular = 64;
  int quadrant_n = 64;
  std::map<std::string, double> tolerances;   // per-check overrides
  std::optional<double> tolerance_override;   // applied to every check
  std::filesystem::path output_dir = ".";
  std::vector<double> nus = {0.5, 1.0, 2.0};
  std::vector<std::complex<double>> ws = {{0.0, 0.0}, {1.0, 0.0}, {1.0, 1.0}};
  std::vector<std::pair<double, double>> alpha_betas = {{1.0, 1.0}, {2.0, 0.5}};
  std::vector<std::pair<std::complex<double>, std::complex<double>>> uvs = {
      {{0.3, 0.0}, {0.5, 0.0}}, {{0.0, 0.5}, {0.2, 0.0}}, {{-0.4, 0.0}, {0.4, 0.0}}};
};

/// Throws SchemaError when sizes are below 8 or a tolerance is not positive.
RunConfig parse_run_config(const std::string& text);
RunConfig read_run_config(const std::filesystem::path& path);

/// Environment variable that, when set, replaces RunConfig::output_dir and
/// the --out flag.
inline constexpr const char* kOutputDirEnv = "ITOFRFT_OUTPUT_DIR";

std::filesystem::path resolve_output_dir(const std::filesystem::path& configured);

}  // namespace itofrft::io
