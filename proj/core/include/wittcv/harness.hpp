#pragma once

// Task drivers and the command-line front end.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wittcv/parallel.hpp"
#include "wittcv/report.hpp"
#include "wittcv/varieties.hpp"
#include "wittcv/witt.hpp"

namespace wittcv::harness {

enum class Task { Centralizers, Cone, Covering, Middle, Witnesses, Counts, Census, Rectify, All };

std::string_view to_string(Task task);
/// Throws ParseError.
Task parse_task(std::string_view text);

struct FaultSpec {
  int i = 0;
  int j = 0;
  std::int64_t value = 0;
};

struct RunConfig {
  std::int64_t p = 5;
  int m = 1;
  Task task = Task::All;
  varieties::PairSpace space = varieties::PairSpace::Full;
  bool sampled = false;
  std::uint64_t samples = 100'000;
  std::uint64_t seed = 0;
  unsigned workers = 1;
  std::string out;  // empty: stdout
  bool force = false;
  std::optional<std::string> element;
  std::optional<FaultSpec> fault;
  bool timing = true;
};

/// Throws Error on an invalid combination (NotPrime, CharTooSmall,
/// DegreeUnsupported, ParseError, BadIndex).
void validate(const RunConfig& config);

ExecOptions exec_options(const RunConfig& config);

/// The algebra a config runs against, with the injected fault if any.
witt::WittAlgebra make_algebra(const RunConfig& config);

/// centralizer(x) against the closed form for every in-scope x, plus
/// z(x) inside g_1 for x in g_1 and no nilpotents at level 0.
VerificationReport centralizer_law(const witt::WittAlgebra& alg, const ExecOptions& opts);

/// Over elements with a_{-1} != 0: rectify succeeds exactly on nilpotents
/// and carries them onto D.
VerificationReport rectification_totality(const witt::WittAlgebra& alg, const ExecOptions& opts);

VerificationReport rectify_element(const witt::WittElement& x);

/// Jacobi on basis triples, ad(x^[p]) = ad(x)^p, and automorphism
/// equivariance of brackets, filtration, composition and certificates.
VerificationReport algebra_properties(const witt::WittAlgebra& alg, const ExecOptions& opts);

VerificationReport run_task(const RunConfig& config);

/// Every task in sequence; the aggregate is verified iff each part is.
/// In sampled mode, exhaustive-only parts that exceed the bound are skipped
/// and listed in the details.
VerificationReport run_all(const RunConfig& config);

/// Exit codes: 0 verified, 1 a check failed, 2 usage or configuration
/// error, 3 resource guard.
int cli_run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace wittcv::harness
