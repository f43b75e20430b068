#pragma once

// Deterministic parallel fold over an index range.
//
// [0, n) is cut into contiguous chunks whose boundaries depend only on n.
// Workers claim chunks from a shared counter and build one partial report
// per chunk; partials are folded in chunk order afterwards, so the result
// does not depend on the worker count or on scheduling.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <optional>
#include <thread>
#include <vector>

#include "wittcv/ffield.hpp"
#include "wittcv/report.hpp"

namespace wittcv {

struct ExecOptions {
  unsigned workers = 1;
  std::uint64_t bound = ffield::kDefaultEnumerationBound;
  bool force = false;
  std::optional<SamplingInfo> sampling;  // nullopt: exhaustive
};

inline constexpr std::uint64_t kMaxChunks = 512;

/// Throws Error(SizeOverflow) when an exhaustive run would exceed the bound
/// and the caller has not forced it.
void require_within_bound(std::uint64_t projected, const ExecOptions& opts, const char* what);

/// base^n saturating at UINT64_MAX.
std::uint64_t saturating_power(std::uint64_t base, std::uint64_t n) noexcept;

/// Per-chunk RNG seed derived from the run seed (splitmix64 finalizer).
std::uint64_t chunk_seed(std::uint64_t seed, std::uint64_t chunk) noexcept;

template <class ChunkFn>
VerificationReport parallel_fold(std::uint64_t n, unsigned workers, ChunkFn&& fn) {
  VerificationReport total;
  if (n == 0) return total;
  const std::uint64_t chunks = std::min<std::uint64_t>(n, kMaxChunks);
  const std::uint64_t base = n / chunks;
  const std::uint64_t extra = n % chunks;
  auto chunk_begin = [&](std::uint64_t c) { return c * base + std::min(c, extra); };

  std::vector<VerificationReport> partial(chunks);
  std::vector<std::exception_ptr> errors(chunks);
  std::atomic<std::uint64_t> next{0};
  auto work = [&] {
    for (std::uint64_t c = next++; c < chunks; c = next++) {
      try {
        partial[c] = fn(chunk_begin(c), chunk_begin(c + 1), c);
      } catch (...) {
        errors[c] = std::current_exception();
      }
    }
  };

  const unsigned threads = std::max(1U, std::min<unsigned>(workers, static_cast<unsigned>(chunks)));
  if (threads == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  for (const auto& part : partial) total.merge(part);
  return total;
}

}  // namespace wittcv
