#include "sine_transform.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "bosonstar/errors.hpp"

namespace bosonstar::detail {
namespace {

// FFTW planning is not thread-safe but executing an existing plan on fresh
// arrays is. Plans are made once per (kind, length) and never destroyed.
// FFTW_ESTIMATE keeps the chosen algorithm, hence the rounding, reproducible.
class PlanCache {
 public:
  fftw_plan get(fftw_r2r_kind kind, std::size_t len) {
    std::lock_guard lock(mutex_);
    const auto key = std::make_pair(static_cast<int>(kind), len);
    if (auto it = plans_.find(key); it != plans_.end()) return it->second;
    std::vector<double> a(len), b(len);
    fftw_plan p = fftw_plan_r2r_1d(static_cast<int>(len), a.data(), b.data(), kind,
                                   FFTW_ESTIMATE | FFTW_UNALIGNED);
    if (p == nullptr) throw NumericError("fftw: planning failed");
    plans_.emplace(key, p);
    return p;
  }

 private:
  std::mutex mutex_;
  std::map<std::pair<int, std::size_t>, fftw_plan> plans_;
};

PlanCache& cache() {
  static PlanCache c;
  return c;
}

}  // namespace

void dst1(std::span<const double> x, std::span<double> y) {
  const std::size_t n = x.size();
  if (y.size() != n) throw InvalidArgument("dst1: length mismatch");
  std::vector<double> in(x.begin(), x.end());
  fftw_execute_r2r(cache().get(FFTW_RODFT00, n), in.data(), y.data());
}

void dct1_interior(std::span<const double> x, std::span<double> y) {
  const std::size_t n = x.size();
  if (y.size() != n) throw InvalidArgument("dct1_interior: length mismatch");
  std::vector<double> in(n + 2, 0.0), out(n + 2);
  std::copy(x.begin(), x.end(), in.begin() + 1);
  fftw_execute_r2r(cache().get(FFTW_REDFT00, n + 2), in.data(), out.data());
  std::copy(out.begin() + 1, out.end() - 1, y.begin());
}

}  // namespace bosonstar::detail
