#include "wittcv/varieties.hpp"

#include <string>

#include "internal.hpp"
#include "wittcv/autgrp.hpp"
#include "wittcv/error.hpp"

namespace wittcv::varieties {

namespace {

using detail::place;
using ffield::VectorEnumeration;

constexpr int kRejectionLimit = 64;
constexpr std::uint64_t kPairwiseMiddleLimit = 100'000'000;
constexpr int kSpotChecksPerFiber = 64;

void fail(VerificationReport& r, const std::string& label, const WittElement& x) {
  r.add_failure({label, witt::to_string(x), ""});
}

void fail(VerificationReport& r, const std::string& label, const WittElement& x, const WittElement& y) {
  r.add_failure({label, witt::to_string(x), witt::to_string(y)});
}

// --- cone ------------------------------------------------------------------

void classify_cone(const WittElement& x, const WittElement& d, VerificationReport& r) {
  const bool nil = witt::is_nilpotent(x);
  const bool head = x.coeffs[0].code != 0;
  const bool g1 = witt::in_filtration(x, 1);
  if (g1) {
    r.bump("g1");
    if (!nil) fail(r, "g1_not_nilpotent", x);
  }
  if (nil) {
    r.bump("nilpotent");
    if (head) {
      r.bump("rectifiable");
      try {
        if (!(autgrp::aut_apply(autgrp::rectify(x), x) == d)) fail(r, "rectify", x);
      } catch (const Error&) {
        fail(r, "rectify", x);
      }
    } else if (!g1) {
      fail(r, "nilpotent_outside_partition", x);
    }
    return;
  }
  if (witt::is_nilpotent(witt::p_power(x))) fail(r, "power_nilpotent", x);
  if (head) {
    try {
      autgrp::rectify(x);
      fail(r, "rectified_non_nilpotent", x);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotRectifiable) throw;
    }
  }
}

// --- covering --------------------------------------------------------------

// First-coordinate set of a space: coordinates for degrees first..first+len-1.
struct FirstSet {
  int first;
  std::size_t len;
};

FirstSet first_set(PairSpace space, int p) {
  switch (space) {
    case PairSpace::Full:
      return {-1, static_cast<std::size_t>(p)};
    case PairSpace::Borel:
      return {1, static_cast<std::size_t>(p - 2)};
    case PairSpace::BorelMinus:
      return {-1, 2};
  }
  return {-1, static_cast<std::size_t>(p)};
}

void check_pair(PairSpace space, const WittElement& x, const WittElement& y, VerificationReport& r) {
  r.bump("pairs");
  if (auto i = covering_index(space, x, y)) {
    r.bump("hits/" + std::to_string(*i));
  } else {
    fail(r, "uncovered", x, y);
  }
}

// Enumerates y over the centralizer of x inside the space's second set.
void cover_from(const WittAlgebra& alg, PairSpace space, const WittElement& x, VerificationReport& r) {
  const FieldCtx& f = alg.field();
  if (space == PairSpace::BorelMinus) {
    WittElement y = alg.zero();
    for (const auto& v : VectorEnumeration(f, 2, UINT64_MAX)) {
      place(y, -1, v);
      if (!alg.bracket(x, y).is_zero() || !witt::is_nilpotent(y)) continue;
      check_pair(space, x, y, r);
    }
    return;
  }
  witt::Subspace z = alg.centralizer(x);
  if (space == PairSpace::Borel) z = z.intersect_filtration(1);
  for (const auto& c : VectorEnumeration(f, z.dim(), UINT64_MAX)) {
    const WittElement y = z.combination(c);
    if (space == PairSpace::Full && !witt::is_nilpotent(y)) continue;
    check_pair(space, x, y, r);
  }
}

VerificationReport covering_exhaustive(const WittAlgebra& alg, PairSpace space, const ExecOptions& opts) {
  const FieldCtx& f = alg.field();
  const int p = alg.p();
  const FirstSet fs = first_set(space, p);
  const std::uint64_t n = saturating_power(f.q(), fs.len);
  require_within_bound(detail::saturating_mul(n, static_cast<std::uint64_t>(p)), opts, "covering");
  const VectorEnumeration firsts(f, fs.len, UINT64_MAX);
  return parallel_fold(n, opts.workers, [&](std::uint64_t b, std::uint64_t e, std::uint64_t) {
    VerificationReport r;
    WittElement x = alg.zero();
    for (const auto& v : firsts.range(b, e)) {
      place(x, fs.first, v);
      if (space != PairSpace::Borel && !witt::is_nilpotent(x)) continue;
      r.bump("first_coordinates");
      cover_from(alg, space, x, r);
    }
    return r;
  });
}

VerificationReport covering_sampled(const WittAlgebra& alg, PairSpace space, const ExecOptions& opts) {
  const FieldCtx& f = alg.field();
  const WittElement d = alg.e(-1);
  const SamplingInfo s = *opts.sampling;
  return parallel_fold(s.samples, opts.workers, [&](std::uint64_t b, std::uint64_t e, std::uint64_t chunk) {
    VerificationReport r;
    autgrp::Rng rng(chunk_seed(s.seed, chunk));
    for (std::uint64_t k = b; k < e; ++k) {
      WittElement x = alg.zero();
      if (space == PairSpace::Full && autgrp::uniform_below(rng, 2) == 1) {
        x = autgrp::aut_apply(autgrp::aut_random(f, rng), d);
        r.bump("orbit_draws");
      } else {
        x = detail::random_in_filtration(f, 1, rng);
      }
      witt::Subspace z = alg.centralizer(x);
      if (space == PairSpace::Borel) z = z.intersect_filtration(1);
      bool drawn = false;
      for (int attempt = 0; attempt < kRejectionLimit && !drawn; ++attempt) {
        const WittElement y = detail::random_in(z, rng);
        if (space == PairSpace::Full && !witt::is_nilpotent(y)) continue;
        drawn = true;
        check_pair(space, x, y, r);
      }
      if (!drawn) r.bump("rejected");
    }
    return r;
  });
}

VerificationReport borel_minus_covering(const WittAlgebra& alg, const ExecOptions& opts) {
  const FieldCtx& f = alg.field();
  VerificationReport r = covering_exhaustive(alg, PairSpace::BorelMinus, opts);
  // N(B-) = kD, and its commuting square is everything.
  WittElement x = alg.zero();
  for (const auto& v : VectorEnumeration(f, 2, UINT64_MAX)) {
    place(x, -1, v);
    const bool in_kd = x.coeffs[1].code == 0;
    if (witt::is_nilpotent(x) != in_kd) fail(r, "borel_minus_nilpotent", x);
  }
  const std::uint64_t firsts = r.counts["first_coordinates"];
  if (firsts != f.q()) fail(r, "borel_minus_nilpotent_count", alg.zero());
  if (r.counts["pairs"] != firsts * firsts) fail(r, "borel_minus_square", alg.zero());
  return r;
}

// --- middle square ---------------------------------------------------------

int middle_case(const WittElement& x, const WittElement& y, int h) {
  if (x.is_zero() || y.is_zero()) return 1;
  if (y.coeff(h).code == 0) return 2;
  if (x.coeff(h).code == 0) return 3;
  return 4;
}

VerificationReport middle_pairwise(const WittAlgebra& alg, const ExecOptions& opts) {
  const FieldCtx& f = alg.field();
  const int p = alg.p();
  const int h = (p - 1) / 2;
  const auto d = static_cast<std::size_t>(p - 1 - h);
  const VectorEnumeration side(f, d, UINT64_MAX);
  VerificationReport r = parallel_fold(side.size(), opts.workers, [&](std::uint64_t b, std::uint64_t e, std::uint64_t) {
    VerificationReport part;
    WittElement x = alg.zero();
    WittElement y = alg.zero();
    for (const auto& vx : side.range(b, e)) {
      place(x, h, vx);
      for (const auto& vy : side) {
        place(y, h, vy);
        part.bump("pairs");
        part.bump("case" + std::to_string(middle_case(x, y, h)));
        if (!alg.bracket(x, y).is_zero()) fail(part, "noncommuting", x, y);
        if (auto i = covering_index(PairSpace::Full, x, y)) {
          part.bump("hits/" + std::to_string(*i));
        } else {
          fail(part, "uncovered", x, y);
        }
      }
    }
    return part;
  });
  r.details["method"] = "pairwise";
  return r;
}

VerificationReport middle_fibered(const WittAlgebra& alg, const ExecOptions& opts) {
  const FieldCtx& f = alg.field();
  const int p = alg.p();
  const int h = (p - 1) / 2;
  const std::uint64_t q = f.q();
  const std::uint64_t big_q = saturating_power(q, static_cast<std::uint64_t>(p - 2 - h));
  const std::uint64_t seed = opts.sampling ? opts.sampling->seed : 0;

  VerificationReport r = parallel_fold(q * q, opts.workers, [&](std::uint64_t b, std::uint64_t e, std::uint64_t chunk) {
    VerificationReport part;
    autgrp::Rng rng(chunk_seed(seed, chunk));
    for (std::uint64_t k = b; k < e; ++k) {
      const Elem a = f.element(k / q);
      const Elem c = f.element(k % q);
      part.bump("fibers");
      WittElement x = alg.zero();
      WittElement y = alg.zero();
      x.coeff(h) = a;
      y.coeff(h) = c;
      if (!cert_membership(PairSpace::Full, h - 1, x, y)) fail(part, "uncovered_fiber", x, y);
      for (int s = 0; s < kSpotChecksPerFiber; ++s) {
        for (int deg = h + 1; deg <= p - 2; ++deg) {
          x.coeff(deg) = autgrp::random_element(f, rng);
          y.coeff(deg) = autgrp::random_element(f, rng);
        }
        part.bump("spot_checks");
        if (!alg.bracket(x, y).is_zero()) fail(part, "noncommuting", x, y);
        if (!cert_membership(PairSpace::Full, h - 1, x, y)) fail(part, "fiber_not_constant", x, y);
      }
      // Exact tallies for the q^{2(d-1)} pairs of this fiber.
      const bool xa = a.code != 0;
      const bool yc = c.code != 0;
      if (xa && yc) {
        part.bump("case4", big_q * big_q);
      } else if (xa) {
        part.bump("case1", big_q);
        part.bump("case2", big_q * (big_q - 1));
      } else if (yc) {
        part.bump("case1", big_q);
        part.bump("case3", big_q * (big_q - 1));
      } else {
        part.bump("case1", 2 * big_q - 1);
        part.bump("case2", (big_q - 1) * (big_q - 1));
      }
      part.bump("pairs", big_q * big_q);
    }
    return part;
  });
  r.details["method"] = "fibered";
  return r;
}

}  // namespace

VerificationReport cone_census(const WittAlgebra& alg, const ExecOptions& opts) {
  const detail::Stopwatch clock;
  const FieldCtx& f = alg.field();
  const int p = alg.p();
  const auto p64 = static_cast<std::uint64_t>(p);
  const WittElement d = alg.e(-1);
  VerificationReport report = detail::new_report("cone", f, opts.sampling);

  if (!opts.sampling) {
    const std::uint64_t n = saturating_power(f.q(), p64);
    require_within_bound(detail::saturating_mul(n, p64), opts, "cone census");
    const VectorEnumeration all(f, static_cast<std::size_t>(p), UINT64_MAX);
    report.merge(parallel_fold(n, opts.workers, [&](std::uint64_t b, std::uint64_t e, std::uint64_t) {
      VerificationReport r;
      WittElement x = alg.zero();
      for (const auto& v : all.range(b, e)) {
        place(x, -1, v);
        classify_cone(x, d, r);
      }
      return r;
    }));
    auto& c = report.counts;
    c.try_emplace("g1", 0);
    c.try_emplace("nilpotent", 0);
    c.try_emplace("rectifiable", 0);
    if (c["g1"] != saturating_power(f.q(), p64 - 2)) fail(report, "g1_count", alg.zero());
    if (c["nilpotent"] != c["g1"] + c["rectifiable"]) fail(report, "partition_count", alg.zero());
  } else {
    const SamplingInfo s = *opts.sampling;
    report.merge(parallel_fold(s.samples, opts.workers, [&](std::uint64_t b, std::uint64_t e, std::uint64_t chunk) {
      VerificationReport r;
      autgrp::Rng rng(chunk_seed(s.seed, chunk));
      for (std::uint64_t k = b; k < e; ++k) {
        classify_cone(detail::random_in_filtration(f, -1, rng), d, r);
        classify_cone(detail::random_in_filtration(f, 1, rng), d, r);
        const WittElement orbit = autgrp::aut_apply(autgrp::aut_random(f, rng), d);
        if (!witt::is_nilpotent(orbit) || orbit.coeffs[0].code == 0) fail(r, "orbit_not_rectifiable", orbit);
        classify_cone(orbit, d, r);
        r.bump("samples");
      }
      return r;
    }));
  }
  report.details["rectifiable_fraction"] =
      detail::ratio_string(report.counts["rectifiable"], report.counts["nilpotent"]);
  report.duration_ms = clock.elapsed_ms();
  return report;
}

VerificationReport verify_covering(const WittAlgebra& alg, PairSpace space, const ExecOptions& opts) {
  const detail::Stopwatch clock;
  const FieldCtx& f = alg.field();
  const bool sampled = opts.sampling && space != PairSpace::BorelMinus;
  VerificationReport report =
      detail::new_report("covering/" + std::string(to_string(space)), f, sampled ? opts.sampling : std::nullopt);
  report.counts["pairs"] = 0;
  for (int i : valid_indices(space, alg.p())) report.counts["hits/" + std::to_string(i)] = 0;
  if (space == PairSpace::BorelMinus) {
    report.merge(borel_minus_covering(alg, opts));
  } else if (sampled) {
    report.merge(covering_sampled(alg, space, opts));
  } else {
    report.merge(covering_exhaustive(alg, space, opts));
  }
  report.duration_ms = clock.elapsed_ms();
  return report;
}

VerificationReport verify_middle_redundancy(const WittAlgebra& alg, const ExecOptions& opts, MiddleMethod method) {
  const detail::Stopwatch clock;
  const FieldCtx& f = alg.field();
  const int p = alg.p();
  const int h = (p - 1) / 2;
  const std::uint64_t square = saturating_power(f.q(), static_cast<std::uint64_t>(2 * (p - 1 - h)));
  if (method == MiddleMethod::Auto) {
    method = square <= std::min(opts.bound, kPairwiseMiddleLimit) ? MiddleMethod::Pairwise : MiddleMethod::Fibered;
  }
  if (method == MiddleMethod::Pairwise) require_within_bound(square, opts, "middle square");
  VerificationReport report = detail::new_report("middle", f);
  for (int c = 1; c <= 4; ++c) report.counts["case" + std::to_string(c)] = 0;
  report.merge(method == MiddleMethod::Pairwise ? middle_pairwise(alg, opts) : middle_fibered(alg, opts));
  report.duration_ms = clock.elapsed_ms();
  return report;
}

VerificationReport component_witnesses(const WittAlgebra& alg, PairSpace space) {
  const detail::Stopwatch clock;
  const FieldCtx& f = alg.field();
  const int p = alg.p();
  VerificationReport report = detail::new_report("witnesses/" + std::string(to_string(space)), f);
  const auto indices = valid_indices(space, p);

  std::uint64_t separating = 0;
  for (int i : indices) {
    const WittElement x = i == 0 ? alg.e(-1) : alg.e(i);
    const WittElement y = i == 0 ? alg.e(-1) : alg.e(p - 1 - i);
    report.witnesses.push_back({i, witt::to_string(x), witt::to_string(y)});
    if (!alg.bracket(x, y).is_zero() || !witt::is_nilpotent(x) || !witt::is_nilpotent(y)) {
      fail(report, "witness_not_commuting_nilpotent", x, y);
    }
    std::vector<int> hits;
    for (int j : indices) {
      if (cert_membership(space, j, x, y)) hits.push_back(j);
    }
    if (hits == std::vector<int>{i}) {
      ++separating;
    } else {
      fail(report, "witness_not_separating/" + std::to_string(i), x, y);
    }
  }
  const std::uint64_t expected = space == PairSpace::Full    ? static_cast<std::uint64_t>((p - 1) / 2)
                                 : space == PairSpace::Borel ? static_cast<std::uint64_t>((p - 3) / 2)
                                                             : 1;
  report.counts["components"] = separating;
  report.counts["expected_components"] = expected;
  if (separating != expected) fail(report, "component_count", alg.zero());

  const WittElement z = alg.zero();
  for (int i : indices) {
    if (!cert_membership(space, i, z, z)) fail(report, "shared_point/" + std::to_string(i), z, z);
  }
  report.counts["shared_point_indices"] = indices.size();
  report.duration_ms = clock.elapsed_ms();
  return report;
}

}  // namespace wittcv::varieties
