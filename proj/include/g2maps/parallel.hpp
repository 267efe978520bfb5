#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace g2maps {

/// out[i] = fn(in[i]), run on up to `jobs` threads. Output order matches
/// input order; the first exception thrown by fn is rethrown.
template <class In, class Fn>
auto parallel_map(const std::vector<In>& in, Fn fn, unsigned jobs) {
  using Out = decltype(fn(in.front()));
  std::vector<Out> out(in.size());
  if (jobs <= 1 || in.size() <= 1) {
    for (std::size_t i = 0; i < in.size(); ++i) out[i] = fn(in[i]);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < in.size(); i = next++) {
      try {
        out[i] = fn(in[i]);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < jobs && t < in.size(); ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
  return out;
}

}  // namespace g2maps
