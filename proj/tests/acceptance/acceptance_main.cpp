// Runs every acceptance criterion at its default tolerance and prints one
// PASS/FAIL line each. Exit status is nonzero if any criterion fails.
#include <cstdio>

#include "itofrft/coeff_io.hpp"
#include "itofrft/simd.hpp"
#include "itofrft/verify.hpp"

int main() {
  using namespace itofrft;
  const io::RunConfig cfg;
  std::printf("simd backend: %s\n", std::string(simd::backend_name(simd::active_backend())).c_str());
  int failed = 0, total = 0;
  for (const auto& name : verify::acceptance_names()) {
    const verify::CheckResult r = verify::run_check(name, cfg);
    std::printf("%s\n", verify::format_line(r).c_str());
    std::fflush(stdout);
    ++total;
    if (!r.passed) ++failed;
  }
  std::printf("%d/%d acceptance criteria passed\n", total - failed, total);
  return failed == 0 ? 0 : 1;
}
