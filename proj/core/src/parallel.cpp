#include "wittcv/parallel.hpp"

#include <limits>
#include <string>

#include "wittcv/error.hpp"

namespace wittcv {

void require_within_bound(std::uint64_t projected, const ExecOptions& opts, const char* what) {
  if (projected <= opts.bound || opts.force) return;
  throw Error(ErrorCode::SizeOverflow, std::string(what) + ": projected " + std::to_string(projected) +
                                           " evaluations exceed the bound " + std::to_string(opts.bound) +
                                           " (use --force to override)");
}

std::uint64_t saturating_power(std::uint64_t base, std::uint64_t n) noexcept {
  std::uint64_t r = 1;
  for (std::uint64_t k = 0; k < n; ++k) {
    if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    r *= base;
  }
  return r;
}

std::uint64_t chunk_seed(std::uint64_t seed, std::uint64_t chunk) noexcept {
  std::uint64_t z = seed + (chunk + 1) * 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace wittcv
