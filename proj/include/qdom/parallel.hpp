#pragma once

// Minimal data-parallel helpers. Work is split into a fixed number of chunks
// so that reductions are bitwise independent of the worker count; QDOM_THREADS
// overrides the number of workers.

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

#include "qdom/common.hpp"

namespace qdom {

inline unsigned worker_count() {
  if (const char* env = std::getenv("QDOM_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1 && v <= 256) return unsigned(v);
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1u : hc;
}

namespace detail {
inline constexpr std::size_t kChunks = 64;
}

// f(begin, end) is invoked on disjoint index ranges covering [0, n).
template <class F>
void parallel_for(std::size_t n, F&& f) {
  if (n == 0) return;
  const unsigned workers = std::min<std::size_t>(worker_count(), n);
  if (workers <= 1) {
    f(std::size_t(0), n);
    return;
  }
  const std::size_t chunks = std::min(detail::kChunks, n);
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&]() {
      for (;;) {
        const std::size_t c = next.fetch_add(1);
        if (c >= chunks) return;
        const std::size_t b = c * n / chunks, e = (c + 1) * n / chunks;
        if (b < e) f(b, e);
      }
    });
  }
  for (auto& t : pool) t.join();
}

// Deterministic parallel reduction: per-chunk partial sums (pairwise within a
// chunk) are combined serially in chunk order.
template <class T, class Term>
T parallel_sum(std::size_t n, Term&& term) {
  if (n == 0) return T{};
  const std::size_t chunks = std::min(detail::kChunks, n);
  std::vector<T> partial(chunks, T{});
  parallel_for(chunks, [&](std::size_t cb, std::size_t ce) {
    for (std::size_t c = cb; c < ce; ++c) {
      const std::size_t b = c * n / chunks, e = (c + 1) * n / chunks;
      partial[c] = pairwise_sum<T>(e - b, [&](std::size_t i) { return term(b + i); });
    }
  });
  T s{};
  for (const T& p : partial) s += p;
  return s;
}

}  // namespace qdom
