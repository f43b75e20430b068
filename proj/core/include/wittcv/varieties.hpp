#pragma once

// Nilpotent cone and nilpotent commuting variety of W1 over F_q.
//
// Components are represented by decidable certificate sets:
//
//   cert(0)(x, y):  x, y nilpotent and linearly dependent;
//   cert(i)(x, y):  x, y in g_i and pi_i(x), pi_i(y) linearly dependent,
//                   i >= 1, where pi_i drops the degrees >= p-1-i.
//
// For x in g_i the second condition says y lies in kx + g_{p-1-i} or x lies
// in ky + g_{p-1-i}. Each certificate set sits inside the closure of the
// corresponding component; the tasks below check that together they cover
// every commuting nilpotent pair.
//
// Pair spaces: Full is N x N, Borel is g_1 x g_1 (nilpotent part of the
// standard Borel g_0), BorelMinus is the nilpotent part of span{D, XD}.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wittcv/autgrp.hpp"
#include "wittcv/ffield.hpp"
#include "wittcv/parallel.hpp"
#include "wittcv/report.hpp"
#include "wittcv/witt.hpp"

namespace wittcv::varieties {

using ffield::Elem;
using ffield::FieldCtx;
using witt::WittAlgebra;
using witt::WittElement;

enum class PairSpace { Full, Borel, BorelMinus };

std::string_view to_string(PairSpace space);
/// Accepts "full", "borel", "borel-minus". Throws ParseError.
PairSpace parse_pair_space(std::string_view text);

struct Pair {
  WittElement x;
  WittElement y;

  friend bool operator==(const Pair&, const Pair&) = default;
};

/// Full: 0..(p-3)/2. Borel: 1..(p-3)/2. BorelMinus: {0}.
std::vector<int> valid_indices(PairSpace space, int p);

/// Throws BadIndex for an index outside valid_indices(space, p).
bool cert_membership(PairSpace space, int i, const WittElement& x, const WittElement& y);

/// Smallest valid index whose certificate holds.
std::optional<int> covering_index(PairSpace space, const WittElement& x, const WittElement& y);

/// (x, y) in S(i) = {x in g_i, y in kx + g_{p-1-i}}, 1 <= i <= (p-1)/2.
bool in_one_sided_set(int i, const WittElement& x, const WittElement& y);

/// (x, y) -> (a x + b y, c x + d y).
struct Gl2 {
  Elem a, b, c, d;
};

/// Throws Singular when ad - bc = 0.
Pair gl2_transform(const Gl2& g, const Pair& pair);

VerificationReport cone_census(const WittAlgebra& alg, const ExecOptions& opts);

VerificationReport verify_covering(const WittAlgebra& alg, PairSpace space, const ExecOptions& opts);

enum class MiddleMethod { Auto, Pairwise, Fibered };

/// Covering of g_h x g_h, h = (p-1)/2, by indices <= (p-3)/2. Pairwise
/// visits every pair. Fibered splits the square by the degree-h
/// coordinates (x_h, y_h): cert((p-3)/2) reads nothing else on g_h, so one
/// evaluation per fiber decides it, and the case tallies are exact counts.
/// Random pairs inside each fiber are re-evaluated as a cross-check.
VerificationReport verify_middle_redundancy(const WittAlgebra& alg, const ExecOptions& opts,
                                            MiddleMethod method = MiddleMethod::Auto);

VerificationReport component_witnesses(const WittAlgebra& alg, PairSpace space);

enum class CountMethod { ClosedForm, Enumerate };
enum class CountVariant { OneSided, Symmetrized };

/// Point count of a certificate set. OneSided with i >= 1 is S(i), with
/// closed form q^p - q^{2i+1} + q^{2i}; Symmetrized is S(i) u swap(S(i));
/// i = 0 is the cert(0) set. Only OneSided i >= 1 has a closed form.
/// Throws BadIndex or SizeOverflow.
std::uint64_t count_component(const FieldCtx& f, int i, CountMethod method,
                              CountVariant variant = CountVariant::OneSided,
                              std::uint64_t bound = ffield::kDefaultEnumerationBound);

/// Closed form against enumeration for every index of the full space.
VerificationReport component_counts(const FieldCtx& f, const ExecOptions& opts);

/// Every certified pair (cert index 0..(p-3)/2) is a commuting nilpotent
/// pair. Exhaustive walks every certificate set; sampled draws pairs.
VerificationReport certificate_soundness(const WittAlgebra& alg, const ExecOptions& opts);

/// Random member of the cert(i) set, i in 0..(p-3)/2.
Pair random_certified_pair(const WittAlgebra& alg, int i, autgrp::Rng& rng);

/// Number of commuting nilpotent pairs counted twice: through centralizers,
/// and as the union of the certificate sets.
VerificationReport commuting_census(const WittAlgebra& alg, PairSpace space, const ExecOptions& opts);

}  // namespace wittcv::varieties
