#pragma once

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

namespace hbl {

// Raised when a computation would exceed the configured memory budget.
// Carries the pre-flight estimate so callers can report it.
class BudgetExceeded : public std::runtime_error {
public:
  BudgetExceeded(std::string what, std::uint64_t estimated_bytes)
      : std::runtime_error(std::move(what)), estimated_bytes(estimated_bytes) {}
  std::uint64_t estimated_bytes = 0;
};

// Raised when an internal consistency check fails (exit code 4 in the CLI).
class InvariantViolation : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

struct Budget {
  std::uint64_t bytes = std::uint64_t(4096) << 20;  // 4 GiB default

  static Budget from_env() {
    Budget b;
    if (const char* s = std::getenv("HBL_BUDGET_MB")) {
      char* end = nullptr;
      unsigned long long mb = std::strtoull(s, &end, 10);
      if (end && *end == '\0' && mb > 0) b.bytes = std::uint64_t(mb) << 20;
    }
    return b;
  }
};

inline std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

inline std::uint64_t hash_mix(std::uint64_t h, std::uint64_t v) {
  // splitmix64 step folded into a running hash
  v += 0x9e3779b97f4a7c15ull + h;
  v = (v ^ (v >> 30)) * 0xbf58476d1ce4e5b9ull;
  v = (v ^ (v >> 27)) * 0x94d049bb133111ebull;
  return v ^ (v >> 31);
}

// Exact floor(sqrt(x)) for 64-bit unsigned input.
inline std::uint64_t isqrt64(std::uint64_t x) {
  if (x == 0) return 0;
  std::uint64_t r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(x)));
  while (r > 0 && r > x / r) --r;
  while ((r + 1) <= x / (r + 1)) ++r;
  return r;
}

// Deterministic chunked parallel map: fn(chunk_index, begin, end).
// Results must be merged by the caller in chunk order if order matters.
inline void parallel_chunks(std::size_t n, unsigned threads,
                            const std::function<void(unsigned, std::size_t, std::size_t)>& fn) {
  if (threads <= 1 || n < 2048) {
    fn(0, 0, n);
    return;
  }
  unsigned t = std::min<unsigned>(threads, std::max<unsigned>(1, std::thread::hardware_concurrency()));
  t = std::min<std::size_t>(t, (n + 2047) / 2048);
  std::vector<std::thread> pool;
  std::size_t chunk = (n + t - 1) / t;
  for (unsigned i = 0; i < t; ++i) {
    std::size_t lo = std::min<std::size_t>(n, std::size_t(i) * chunk);
    std::size_t hi = std::min<std::size_t>(n, lo + chunk);
    pool.emplace_back([&fn, i, lo, hi] { fn(i, lo, hi); });
  }
  for (auto& th : pool) th.join();
}

}  // namespace hbl
