#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include "json.hpp"
#include <sstream>

#include "itofrft/coeff_io.hpp"

using namespace itofrft;
using namespace itofrft::io;
using nlohmann::json;
using cd = std::complex<double>;

namespace {

void expect_schema_error(const std::string& text, const std::string& fragment) {
  try {
    parse_coeff_json(text);
    ADD_FAILURE() << "accepted: " << text;
  } catch (const SchemaError& e) {
    EXPECT_NE(std::string(e.what()).find(fragment), std::string::npos) << e.what();
  }
}

}  // namespace

TEST(CoeffFile, RoundTripIsBitExact) {
  const CoeffFunction f(0.7, {{{0, 0}, cd(0.1, 1.0 / 3.0)},
                              {{3, 1}, cd(-2.5e-300, 6.02214076e23)},
                              {{200, 0}, cd(std::nextafter(1.0, 2.0), -0.0)}});
  const std::string text = coeff_to_json(f);
  const CoeffFunction g = parse_coeff_json(text);
  EXPECT_EQ(g.nu(), f.nu());
  ASSERT_EQ(g.coeffs().size(), f.coeffs().size());
  for (auto [idx, a] : f.coeffs()) {
    EXPECT_EQ(g.coeffs().at(idx).real(), a.real());
    EXPECT_EQ(g.coeffs().at(idx).imag(), a.imag());
  }
  EXPECT_EQ(coeff_to_json(g), text);

  const auto path = std::filesystem::temp_directory_path() / "itofrft_roundtrip.json";
  write_coeff_file(path, f);
  EXPECT_EQ(coeff_to_json(read_coeff_file(path)), text);
  std::filesystem::remove(path);
}

TEST(CoeffFile, SchemaViolationsAreNamed) {
  expect_schema_error("not json", "JSON");
  expect_schema_error(R"({"coeffs": []})", "nu");
  expect_schema_error(R"({"nu": 1})", "coeffs");
  expect_schema_error(R"({"nu": 0, "coeffs": []})", "nu");
  expect_schema_error(R"({"nu": 1, "coeffs": [{"m": 0.5, "n": 0, "re": 1, "im": 0}]})", "integer");
  expect_schema_error(R"({"nu": 1, "coeffs": [{"m": -1, "n": 0, "re": 1, "im": 0}]})", "negative");
  expect_schema_error(R"({"nu": 1, "coeffs": [{"m": 201, "n": 0, "re": 1, "im": 0}]})", "200");
  expect_schema_error(R"({"nu": 1, "coeffs": [{"m": 1, "n": 0, "re": 1, "im": 0}, {"m": 1, "n": 0, "re": 2, "im": 0}]})",
                      "duplicate");
  expect_schema_error(R"({"nu": 1, "coeffs": [{"m": 1, "n": 0, "re": "x", "im": 0}]})", "re");
  EXPECT_THROW(read_coeff_file("/nonexistent/coeffs.json"), DomainError);
}

TEST(SpectrumOutput, CsvShape) {
  const Spectrum s = spectrum(1.0, BergmanParams(1.0, 1.0), 0.0, 3, 4);
  std::ostringstream out;
  write_spectrum_csv(out, s);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "m,n,s");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  EXPECT_EQ(rows, 20);
}

TEST(SpectrumOutput, SummaryFields) {
  const Spectrum s = spectrum(1.0, BergmanParams(1.0, 1.0), cd(1.0, 0.0), 40, 40);
  const SpectrumSummary sum = summarize(s, 1.5);
  EXPECT_EQ(sum.top.size(), 10u);
  EXPECT_EQ(sum.top.front().index, (PolyIndex{0, 0}));
  EXPECT_EQ(sum.schatten_partials.size(), 3u);
  const json j = json::parse(summary_to_json(s, sum));
  for (const char* key : {"nu", "alpha", "beta", "w", "max_m", "max_n", "top", "schatten", "kw"})
    EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(j["schatten"]["p"], 1.5);
  EXPECT_LE(j["kw"]["lower"].get<double>(), j["kw"]["value"].get<double>());
}

TEST(RunConfigFile, DefaultsAndOverrides) {
  const RunConfig d = parse_run_config("{}");
  EXPECT_EQ(d.n_radial, 64);
  EXPECT_EQ(d.nus.size(), 3u);
  const RunConfig c = parse_run_config(R"({
    "quadrature": {"n_radial": 32, "n_angular": 16},
    "tolerances": {"AC10": 1e-8},
    "tolerance_override": 1e-3,
    "nu": [1.5],
    "w": [{"re": 0.5, "im": -0.5}],
    "alpha_beta": [[1, 3]],
    "uv": [{"u": {"re": 0.1, "im": 0}, "v": {"re": 0, "im": 0.2}}]})");
  EXPECT_EQ(c.n_radial, 32);
  EXPECT_EQ(c.n_angular, 16);
  EXPECT_EQ(c.tolerances.at("AC10"), 1e-8);
  EXPECT_EQ(c.tolerance_override.value(), 1e-3);
  EXPECT_EQ(c.nus, std::vector<double>{1.5});
  EXPECT_EQ(c.ws.front(), cd(0.5, -0.5));
  EXPECT_EQ(c.alpha_betas.front(), (std::pair{1.0, 3.0}));
  EXPECT_EQ(c.uvs.front().second, cd(0.0, 0.2));
}

TEST(RunConfigFile, Rejections) {
  EXPECT_THROW(parse_run_config(R"({"quadrature": {"n_radial": 4}})"), SchemaError);
  EXPECT_THROW(parse_run_config(R"({"tolerances": {"AC01": 0}})"), SchemaError);
  EXPECT_THROW(parse_run_config(R"({"tolerance_override": -1})"), SchemaError);
  EXPECT_THROW(parse_run_config("[1, 2]"), SchemaError);
}

TEST(OutputDir, EnvironmentOverrides) {
  unsetenv(kOutputDirEnv);
  EXPECT_EQ(resolve_output_dir("out"), std::filesystem::path("out"));
  setenv(kOutputDirEnv, "/tmp/elsewhere", 1);
  EXPECT_EQ(resolve_output_dir("out"), std::filesystem::path("/tmp/elsewhere"));
  unsetenv(kOutputDirEnv);
}
