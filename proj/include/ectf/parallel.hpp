#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <mutex>
#include <optional>
#include <thread>
#include <utility>
#include <vector>

namespace ectf {

struct ExecOptions {
  unsigned threads = 1;  // 0 = hardware concurrency
};

inline unsigned resolve_threads(const ExecOptions& opt, std::size_t work) {
  unsigned t = opt.threads == 0 ? std::max(1U, std::thread::hardware_concurrency()) : opt.threads;
  return static_cast<unsigned>(std::min<std::size_t>(t, std::max<std::size_t>(work, 1)));
}

// Runs fn(i) for i in [0, count) and returns the result with the smallest i
// among those that produced a value. Indices are claimed in increasing order
// and workers stop once they pass the best index, so the answer matches the
// sequential loop for any thread count.
template <class Fn>
auto find_first(std::size_t count, const ExecOptions& opt, Fn&& fn)
    -> decltype(fn(std::size_t{})) {
  using Result = decltype(fn(std::size_t{}));
  const unsigned threads = resolve_threads(opt, count);
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i)
      if (auto r = fn(i)) return r;
    return Result{};
  }

  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{count};
  std::mutex mu;
  Result best_result{};
  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count || i > best.load()) return;
      if (auto r = fn(i)) {
        std::lock_guard lock(mu);
        if (i < best.load()) {
          best = i;
          best_result = std::move(r);
        }
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  return best_result;
}

// Evaluates fn(i) for every i in [0, count) and returns the results in index
// order; callers fold them sequentially to get scheduling-independent output.
template <class Fn>
auto map_indexed(std::size_t count, const ExecOptions& opt, Fn&& fn)
    -> std::vector<decltype(fn(std::size_t{}))> {
  std::vector<decltype(fn(std::size_t{}))> out(count);
  const unsigned threads = resolve_threads(opt, count);
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) out[i] = fn(i);
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  return out;
}

}  // namespace ectf
