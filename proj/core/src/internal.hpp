#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>

#include "wittcv/autgrp.hpp"
#include "wittcv/ffield.hpp"
#include "wittcv/parallel.hpp"
#include "wittcv/report.hpp"
#include "wittcv/witt.hpp"

namespace wittcv::detail {

class Stopwatch {
 public:
  std::uint64_t elapsed_ms() const {
    const auto d = std::chrono::steady_clock::now() - start_;
    return static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::milliseconds>(d).count());
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline VerificationReport new_report(std::string task, const ffield::FieldCtx& f,
                                     const std::optional<SamplingInfo>& sampling = std::nullopt) {
  VerificationReport r;
  r.task = std::move(task);
  r.p = f.p();
  r.m = f.m();
  r.q = f.q();
  r.sampling = sampling;
  return r;
}

inline std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
  return a * b;
}

/// Writes `values` into x's coordinates starting at degree `first`.
inline void place(witt::WittElement& x, int first, const std::vector<ffield::Elem>& values) {
  std::fill(x.coeffs.begin(), x.coeffs.end(), ffield::Elem{});
  std::copy(values.begin(), values.end(), x.coeffs.begin() + first + 1);
}

/// Uniform element of g_first.
inline witt::WittElement random_in_filtration(const ffield::FieldCtx& f, int first, autgrp::Rng& rng) {
  witt::WittElement x = witt::zero(f);
  for (int d = first; d <= static_cast<int>(f.p()) - 2; ++d) x.coeff(d) = autgrp::random_element(f, rng);
  return x;
}

/// Uniform element of a subspace.
inline witt::WittElement random_in(const witt::Subspace& s, autgrp::Rng& rng) {
  std::vector<ffield::Elem> c(s.dim());
  for (auto& v : c) v = autgrp::random_element(s.field(), rng);
  return s.combination(c);
}

/// num/den with six decimals, "nan" for den = 0.
inline std::string ratio_string(std::uint64_t num, std::uint64_t den) {
  if (den == 0) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", static_cast<double>(num) / static_cast<double>(den));
  return buf;
}

}  // namespace wittcv::detail
