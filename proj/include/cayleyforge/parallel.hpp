#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace cayleyforge {

// Worker count: CAYLEYFORGE_THREADS if set to a positive integer, otherwise
// the hardware concurrency.
inline std::size_t thread_count() {
  if (char const* env = std::getenv("CAYLEYFORGE_THREADS")) {
    try {
      long const n = std::stol(env);
      if (n > 0) {
        return static_cast<std::size_t>(n);
      }
    } catch (...) {
      // fall through to the default
    }
  }
  return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

// Calls body(i) for i in [0, n), splitting the range into contiguous chunks.
// body must only write to state owned by index i.
template <typename Body>
void parallel_for(std::size_t n, Body&& body, std::size_t min_chunk = 256) {
  std::size_t const workers = std::min(thread_count(), (n + min_chunk - 1) / std::max<std::size_t>(min_chunk, 1));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) {
      body(i);
    }
    return;
  }
  std::size_t const chunk = (n + workers - 1) / workers;
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    std::size_t const begin = w * chunk;
    std::size_t const end = std::min(n, begin + chunk);
    if (begin >= end) {
      break;
    }
    pool.emplace_back([&body, begin, end] {
      for (std::size_t i = begin; i < end; ++i) {
        body(i);
      }
    });
  }
}

}  // namespace cayleyforge
