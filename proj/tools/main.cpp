#include <iostream>
#include <string>
#include <vector>

#include "app/config.hpp"
#include "app/pipeline.hpp"

namespace {

constexpr const char* kUsageText =
    "usage: bosonstar <solve|verify|linearize|certify|evolve|selftest> [options]\n"
    "\n"
    "  --config FILE           JSON config; flags override its values\n"
    "  --n N --rmax R          grid (default 2048, 200)\n"
    "  --tol T --max-iter K    solver residual target and budget (1e-8, 5000)\n"
    "  --gamma G --m M --mu U  stabilization exponent and equation parameters (1.5, 0, 1)\n"
    "  --init NAME             gaussian | lorentzian\n"
    "  --init-width W          width of the Gaussian guess (1)\n"
    "  --far-window LO HI      far-field fit window (default from the grid)\n"
    "  --fourier-window LO HI  Fourier decay fit window (5 15)\n"
    "  --ell-max L             highest L_plus sector for linearize (2)\n"
    "  --kernel-threshold E    eigenvalue cutoff for kernel scans (1e-2)\n"
    "  --dt DT --steps S       evolve step and count (0.005, 200)\n"
    "  --record-every K        evolve sample and snapshot interval (20)\n"
    "  --seed S                seed for selftest property suites\n"
    "  --input FILE            r,value profile to check instead of a fresh solve\n"
    "  --out DIR               output directory (else $BOSONSTAR_OUT, else ./bosonstar_out)\n";

}  // namespace

int main(int argc, char** argv) {
  using namespace bosonstar::app;
  std::vector<std::string> args(argv + 1, argv + argc);
  for (const auto& a : args) {
    if (a == "-h" || a == "--help") {
      std::cout << kUsageText;
      return kOk;
    }
  }
  RunConfig cfg;
  try {
    cfg = parse_config(args);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << kUsageText;
    return kUsage;
  }
  return run_pipeline(cfg, std::cerr);
}
