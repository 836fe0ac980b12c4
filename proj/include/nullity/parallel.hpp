#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace nullity {

inline unsigned resolve_workers(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1U, std::thread::hardware_concurrency());
}

/// Splits [0, total) into fixed-size chunks handed out dynamically to
/// `workers` threads. body(begin, end, local) accumulates into the worker's
/// own Acc; the per-worker values are returned for the caller to merge.
/// Callers must merge with a commutative, associative operation so the
/// result is independent of scheduling.
template <typename Acc, typename Body>
std::vector<Acc> parallel_chunks(std::uint64_t total, unsigned workers, const Acc& init, Body body,
                                 std::uint64_t chunk = 4096) {
  workers = static_cast<unsigned>(std::min<std::uint64_t>(resolve_workers(workers), std::max<std::uint64_t>(1, (total + chunk - 1) / chunk)));
  std::vector<Acc> locals(workers, init);
  if (workers == 1) {
    for (std::uint64_t b = 0; b < total; b += chunk) body(b, std::min(total, b + chunk), locals[0]);
    return locals;
  }
  std::atomic<std::uint64_t> next{0};
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> threads;
    threads.reserve(workers);
    for (unsigned w = 0; w < workers; ++w)
      threads.emplace_back([&, w] {
        try {
          for (std::uint64_t b = next.fetch_add(chunk); b < total; b = next.fetch_add(chunk))
            body(b, std::min(total, b + chunk), locals[w]);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return locals;
}

}  // namespace nullity
