#include <string>

#include "internal.hpp"
#include "wittcv/autgrp.hpp"
#include "wittcv/error.hpp"
#include "wittcv/harness.hpp"

namespace wittcv::harness {

namespace {

using detail::place;
using ffield::VectorEnumeration;
using varieties::PairSpace;
using witt::WittAlgebra;
using witt::WittElement;

constexpr std::uint64_t kEquivarianceDraws = 10'000;

void fail(VerificationReport& r, const std::string& label, const WittElement& x, const std::string& y = "") {
  r.add_failure({label, witt::to_string(x), y});
}

void check_centralizer(const WittAlgebra& alg, const WittElement& x, VerificationReport& r) {
  const witt::Level level = witt::filtration_level(x);
  if (level.is_infinite()) {
    r.bump("zero");
    return;
  }
  if (level.value() == 0) {
    r.bump("level0");
    if (witt::is_nilpotent(x)) fail(r, "level0_nilpotent", x);
    return;
  }
  if (level.value() == -1 && !witt::is_nilpotent(x)) {
    r.bump("out_of_scope");
    return;
  }
  r.bump("in_scope");
  const witt::Subspace z = alg.centralizer(x);
  if (!(z == witt::centralizer_prediction(x))) fail(r, "centralizer", x);
  if (level.value() >= 1) {
    r.bump("borel_checked");
    if (!(z.intersect_filtration(1) == z)) fail(r, "borel_centralizer", x);
  }
}

void check_rectify(const WittElement& x, const WittElement& d, VerificationReport& r) {
  const bool nil = witt::is_nilpotent(x);
  try {
    const auto phi = autgrp::rectify(x);
    r.bump("rectified");
    if (!nil) fail(r, "rectified_non_nilpotent", x);
    if (!(autgrp::aut_apply(phi, x) == d)) fail(r, "rectify", x, autgrp::to_string(phi));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotRectifiable) throw;
    r.bump("refused");
    if (nil) fail(r, "refused_nilpotent", x);
  }
}

WittElement random_with_head(const ffield::FieldCtx& f, autgrp::Rng& rng) {
  WittElement x = detail::random_in_filtration(f, -1, rng);
  x.coeffs[0] = autgrp::random_nonzero(f, rng);
  return x;
}

// Visits x over F_q^p in parallel, exhaustive.
template <class Check>
VerificationReport over_all(const WittAlgebra& alg, const ExecOptions& opts, const char* what, Check check) {
  const auto p = static_cast<std::uint64_t>(alg.p());
  const std::uint64_t n = saturating_power(alg.field().q(), p);
  require_within_bound(detail::saturating_mul(n, p), opts, what);
  const VectorEnumeration all(alg.field(), alg.p(), UINT64_MAX);
  return parallel_fold(n, opts.workers, [&](std::uint64_t b, std::uint64_t e, std::uint64_t) {
    VerificationReport r;
    WittElement x = alg.zero();
    for (const auto& v : all.range(b, e)) {
      place(x, -1, v);
      check(x, r);
    }
    return r;
  });
}

template <class Draw>
VerificationReport over_samples(const SamplingInfo& s, unsigned workers, Draw draw) {
  return parallel_fold(s.samples, workers, [&](std::uint64_t b, std::uint64_t e, std::uint64_t chunk) {
    VerificationReport r;
    autgrp::Rng rng(chunk_seed(s.seed, chunk));
    for (std::uint64_t k = b; k < e; ++k) draw(rng, r);
    return r;
  });
}

void check_equivariance(const WittAlgebra& alg, autgrp::Rng& rng, VerificationReport& r) {
  const auto& f = alg.field();
  const int p = alg.p();
  const auto phi = autgrp::aut_random(f, rng);
  const auto psi = autgrp::aut_random(f, rng);
  const WittElement x = detail::random_in_filtration(f, -1, rng);
  const WittElement y = detail::random_in_filtration(f, -1, rng);
  r.bump("equivariance");
  const WittElement px = autgrp::aut_apply(phi, x);
  const WittElement py = autgrp::aut_apply(phi, y);
  if (!(autgrp::aut_apply(phi, alg.bracket(x, y)) == alg.bracket(px, py))) {
    fail(r, "bracket_equivariance", x, witt::to_string(y));
  }
  if (witt::filtration_level(px) != witt::filtration_level(x)) fail(r, "filtration_invariance", x);
  if (!(autgrp::aut_apply(autgrp::aut_compose(phi, psi), x) == autgrp::aut_apply(phi, autgrp::aut_apply(psi, x)))) {
    fail(r, "composition", x);
  }
  if (!(autgrp::aut_apply(autgrp::aut_invert(phi), px) == x)) fail(r, "inverse", x);

  const auto i = static_cast<int>(autgrp::uniform_below(rng, static_cast<std::uint64_t>((p - 1) / 2)));
  const varieties::Pair pair = varieties::random_certified_pair(alg, i, rng);
  if (!varieties::cert_membership(PairSpace::Full, i, autgrp::aut_apply(phi, pair.x), autgrp::aut_apply(phi, pair.y))) {
    fail(r, "certificate_equivariance/" + std::to_string(i), pair.x, witt::to_string(pair.y));
  }
  varieties::Gl2 g{};
  do {
    g = {autgrp::random_element(f, rng), autgrp::random_element(f, rng), autgrp::random_element(f, rng),
         autgrp::random_element(f, rng)};
  } while (f.sub(f.mul(g.a, g.d), f.mul(g.b, g.c)).code == 0);
  const varieties::Pair moved = varieties::gl2_transform(g, pair);
  if (!varieties::cert_membership(PairSpace::Full, i, moved.x, moved.y)) {
    fail(r, "certificate_gl2/" + std::to_string(i), pair.x, witt::to_string(pair.y));
  }
}

void check_restricted(const WittAlgebra& alg, const WittElement& x, VerificationReport& r) {
  r.bump("restricted");
  const auto lhs = alg.ad_matrix(witt::p_power(x));
  const auto rhs = ffield::mat_pow(alg.field(), alg.ad_matrix(x), static_cast<std::uint64_t>(alg.p()));
  if (!(lhs == rhs)) fail(r, "restrictedness", x);
}

}  // namespace

VerificationReport centralizer_law(const WittAlgebra& alg, const ExecOptions& opts) {
  const detail::Stopwatch clock;
  const auto& f = alg.field();
  VerificationReport report = detail::new_report("centralizers", f, opts.sampling);
  if (!opts.sampling) {
    report.merge(over_all(alg, opts, "centralizer law",
                          [&](const WittElement& x, VerificationReport& r) { check_centralizer(alg, x, r); }));
  } else {
    const WittElement d = alg.e(-1);
    report.merge(over_samples(*opts.sampling, opts.workers, [&](autgrp::Rng& rng, VerificationReport& r) {
      check_centralizer(alg, detail::random_in_filtration(f, -1, rng), r);
      check_centralizer(alg, detail::random_in_filtration(f, 0, rng), r);
      check_centralizer(alg, detail::random_in_filtration(f, 1, rng), r);
      check_centralizer(alg, autgrp::aut_apply(autgrp::aut_random(f, rng), d), r);
    }));
  }
  report.duration_ms = clock.elapsed_ms();
  return report;
}

VerificationReport rectification_totality(const WittAlgebra& alg, const ExecOptions& opts) {
  const detail::Stopwatch clock;
  const auto& f = alg.field();
  const WittElement d = alg.e(-1);
  VerificationReport report = detail::new_report("rectify", f, opts.sampling);
  report.counts["rectified"] = 0;
  report.counts["refused"] = 0;
  if (!opts.sampling) {
    report.merge(over_all(alg, opts, "rectification", [&](const WittElement& x, VerificationReport& r) {
      if (x.coeffs[0].code != 0) check_rectify(x, d, r);
    }));
  } else {
    report.merge(over_samples(*opts.sampling, opts.workers, [&](autgrp::Rng& rng, VerificationReport& r) {
      check_rectify(random_with_head(f, rng), d, r);
      check_rectify(autgrp::aut_apply(autgrp::aut_random(f, rng), d), d, r);
    }));
  }
  report.details["rectified_fraction"] =
      detail::ratio_string(report.counts["rectified"], report.counts["rectified"] + report.counts["refused"]);
  report.duration_ms = clock.elapsed_ms();
  return report;
}

VerificationReport rectify_element(const WittElement& x) {
  const detail::Stopwatch clock;
  VerificationReport report = detail::new_report("rectify", x.field);
  report.details["element"] = witt::to_string(x);
  try {
    const auto phi = autgrp::rectify(x);
    report.details["rectifiable"] = "true";
    report.details["automorphism"] = autgrp::to_string(phi);
    const WittElement image = autgrp::aut_apply(phi, x);
    report.details["image"] = witt::to_string(image);
    if (!(image == witt::basis(x.field, -1))) fail(report, "rectify", x, autgrp::to_string(phi));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotRectifiable) throw;
    report.details["rectifiable"] = "false";
    report.details["reason"] = e.what();
  }
  report.duration_ms = clock.elapsed_ms();
  return report;
}

VerificationReport algebra_properties(const WittAlgebra& alg, const ExecOptions& opts) {
  const detail::Stopwatch clock;
  const auto& f = alg.field();
  const int p = alg.p();
  VerificationReport report = detail::new_report("properties", f, opts.sampling);

  for (int i = -1; i <= p - 2; ++i) {
    for (int j = -1; j <= p - 2; ++j) {
      for (int k = -1; k <= p - 2; ++k) {
        const WittElement a = alg.e(i), b = alg.e(j), c = alg.e(k);
        const WittElement sum = alg.bracket(a, alg.bracket(b, c)) + alg.bracket(b, alg.bracket(c, a)) +
                                alg.bracket(c, alg.bracket(a, b));
        report.bump("jacobi_triples");
        if (!sum.is_zero()) fail(report, "jacobi", a, witt::to_string(b) + " " + witt::to_string(c));
      }
    }
  }

  if (!opts.sampling) {
    report.merge(over_all(alg, opts, "restrictedness",
                          [&](const WittElement& x, VerificationReport& r) { check_restricted(alg, x, r); }));
    report.merge(over_samples({0, kEquivarianceDraws}, opts.workers,
                              [&](autgrp::Rng& rng, VerificationReport& r) { check_equivariance(alg, rng, r); }));
  } else {
    report.merge(over_samples(*opts.sampling, opts.workers, [&](autgrp::Rng& rng, VerificationReport& r) {
      check_restricted(alg, detail::random_in_filtration(f, -1, rng), r);
      check_equivariance(alg, rng, r);
    }));
  }
  report.duration_ms = clock.elapsed_ms();
  return report;
}

}  // namespace wittcv::harness
