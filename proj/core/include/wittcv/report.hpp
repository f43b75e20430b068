#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace wittcv {

std::string_view version();

struct Failure {
  std::string label;
  std::string x;
  std::string y;  // empty when the counterexample is a single element

  friend bool operator==(const Failure&, const Failure&) = default;
};

struct Witness {
  int index = 0;
  std::string x;
  std::string y;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct SamplingInfo {
  std::uint64_t seed = 0;
  std::uint64_t samples = 0;

  friend bool operator==(const SamplingInfo&, const SamplingInfo&) = default;
};

/// Outcome of one verification task. `failures` keeps at most
/// kMaxStoredFailures counterexamples; counts["failures"] holds the total.
struct VerificationReport {
  static constexpr std::size_t kMaxStoredFailures = 64;

  std::string task;
  std::uint32_t p = 0;
  int m = 1;
  std::uint64_t q = 0;
  std::optional<SamplingInfo> sampling;  // nullopt: exhaustive
  std::map<std::string, std::uint64_t> counts;
  std::vector<Failure> failures;
  std::vector<Witness> witnesses;
  std::map<std::string, std::string> details;
  std::uint64_t duration_ms = 0;
  std::string tool_version{version()};

  bool verified() const noexcept { return failures.empty(); }

  void add_failure(Failure f);
  void bump(const std::string& key, std::uint64_t by = 1) { counts[key] += by; }

  /// Folds a partial report for a later range into this one.
  void merge(const VerificationReport& later);

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

/// Stable key order; `timing = false` writes duration_ms as 0.
std::string serialize(const VerificationReport& r, bool timing = true);
/// Throws Error(ParseError).
VerificationReport parse_report(std::string_view json);

/// Prefixes every count, failure label and detail key with `prefix/`.
VerificationReport with_prefix(VerificationReport r, const std::string& prefix);

}  // namespace wittcv
