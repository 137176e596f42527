#include "fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <utility>

namespace shiftlab::detail {
namespace {

// fftw planning is not thread-safe; execution with the new-array interface is.
std::mutex g_plan_mutex;

fftw_plan plan_for(int size, int sign) {
  static std::map<std::pair<int, int>, fftw_plan> cache;
  std::lock_guard lock(g_plan_mutex);
  auto key = std::make_pair(size, sign);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  auto* in = fftw_alloc_complex(size);
  auto* out = fftw_alloc_complex(size);
  fftw_plan plan = fftw_plan_dft_1d(size, in, out, sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
  fftw_free(in);
  fftw_free(out);
  cache.emplace(key, plan);
  return plan;
}

Eigen::VectorXcd execute(const Eigen::VectorXcd& in, int sign) {
  const int size = static_cast<int>(in.size());
  Eigen::VectorXcd copy = in;  // fftw may scribble on its input
  Eigen::VectorXcd out(size);
  fftw_execute_dft(plan_for(size, sign), reinterpret_cast<fftw_complex*>(copy.data()),
                   reinterpret_cast<fftw_complex*>(out.data()));
  return out;
}

}  // namespace

Eigen::VectorXcd fft_forward(const Eigen::VectorXcd& in) { return execute(in, FFTW_FORWARD); }

Eigen::VectorXcd fft_backward(const Eigen::VectorXcd& in) { return execute(in, FFTW_BACKWARD); }

}  // namespace shiftlab::detail
