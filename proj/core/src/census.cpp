#include <string>

#include "internal.hpp"
#include "wittcv/error.hpp"
#include "wittcv/varieties.hpp"

namespace wittcv::varieties {

namespace {

using detail::place;
using ffield::VectorEnumeration;

// Visits every pair of S(i) once, as (x, y) with y in kx + g_{p-1-i}.
// Candidates y = a x + z are deduplicated with a per-x bitmap over g_i.
class OneSidedWalker {
 public:
  OneSidedWalker(const FieldCtx& f, int i)
      : f_(f),
        p_(static_cast<int>(f.p())),
        i_(i),
        xs_(f, static_cast<std::size_t>(p_ - 1 - i), UINT64_MAX),
        zs_(f, static_cast<std::size_t>(i), UINT64_MAX),
        seen_(xs_.size(), 0) {}

  std::uint64_t x_count() const noexcept { return xs_.size(); }

  template <class Visit>
  void walk(std::uint64_t begin, std::uint64_t end, Visit&& visit) {
    WittElement x = witt::zero(f_);
    WittElement y = witt::zero(f_);
    std::vector<std::uint64_t> touched;
    for (const auto& vx : xs_.range(begin, end)) {
      place(x, i_, vx);
      for (std::uint64_t a = 0; a < f_.q(); ++a) {
        const Elem s = f_.element(a);
        for (const auto& vz : zs_) {
          for (int d = -1; d <= p_ - 2; ++d) y.coeff(d) = f_.mul(s, x.coeff(d));
          for (std::size_t k = 0; k < vz.size(); ++k) {
            Elem& c = y.coeff(p_ - 1 - i_ + static_cast<int>(k));
            c = f_.add(c, vz[k]);
          }
          const std::uint64_t code = code_of(y);
          if (seen_[code]) continue;
          seen_[code] = 1;
          touched.push_back(code);
          visit(x, y);
        }
      }
      for (auto c : touched) seen_[c] = 0;
      touched.clear();
    }
  }

 private:
  // Index of y among the enumeration of g_i (odometer, last degree fastest).
  std::uint64_t code_of(const WittElement& y) const {
    std::uint64_t code = 0;
    for (int d = i_; d <= p_ - 2; ++d) code = code * f_.q() + y.coeff(d).code;
    return code;
  }

  FieldCtx f_;
  int p_;
  int i_;
  VectorEnumeration xs_;
  VectorEnumeration zs_;
  std::vector<std::uint8_t> seen_;
};

// Pairs of nilpotent, linearly dependent elements of a coordinate block.
std::uint64_t count_dependent_nilpotent(const FieldCtx& f, int first, std::size_t len) {
  const VectorEnumeration all(f, len, UINT64_MAX);
  WittElement x = witt::zero(f);
  std::uint64_t nilpotent = 0;
  std::uint64_t pairs = 0;
  for (const auto& v : all) {
    place(x, first, v);
    if (!witt::is_nilpotent(x)) continue;
    ++nilpotent;
    if (x.is_zero()) continue;
    for (std::uint64_t a = 0; a < f.q(); ++a) {
      if (witt::is_nilpotent(witt::scale(f.element(a), x))) ++pairs;
    }
  }
  // x = 0 pairs with every nilpotent y.
  return pairs + nilpotent;
}

bool covered_before(PairSpace space, int i, const WittElement& x, const WittElement& y) {
  for (int j : valid_indices(space, x.p())) {
    if (j >= i) break;
    if (cert_membership(space, j, x, y)) return true;
  }
  return false;
}

}  // namespace

std::uint64_t count_component(const FieldCtx& f, int i, CountMethod method, CountVariant variant,
                              std::uint64_t bound) {
  const auto p = static_cast<std::uint64_t>(f.p());
  const std::uint64_t q = f.q();
  if (i < 0 || 2 * static_cast<std::uint64_t>(i) > p - 3) {
    throw Error(ErrorCode::BadIndex, "component index " + std::to_string(i) + " out of range");
  }
  if (method == CountMethod::ClosedForm) {
    if (i == 0 || variant != CountVariant::OneSided) {
      throw Error(ErrorCode::BadIndex, "closed form exists only for the one-sided set with i >= 1");
    }
    const auto k = static_cast<std::uint64_t>(i);
    return saturating_power(q, p) - saturating_power(q, 2 * k + 1) + saturating_power(q, 2 * k);
  }
  ExecOptions opts;
  opts.bound = bound;
  if (i == 0) {
    require_within_bound(detail::saturating_mul(saturating_power(q, p), 2), opts, "component count");
    return count_dependent_nilpotent(f, -1, f.p());
  }
  require_within_bound(saturating_power(q, p), opts, "component count");
  OneSidedWalker walker(f, i);
  std::uint64_t total = 0;
  walker.walk(0, walker.x_count(), [&](const WittElement& x, const WittElement& y) {
    ++total;
    if (variant == CountVariant::Symmetrized && !in_one_sided_set(i, y, x)) ++total;
  });
  return total;
}

VerificationReport component_counts(const FieldCtx& f, const ExecOptions& opts) {
  const detail::Stopwatch clock;
  const int p = static_cast<int>(f.p());
  VerificationReport report = detail::new_report("counts", f);
  const auto fits = [&](std::uint64_t n) { return opts.force || n <= opts.bound; };
  const std::uint64_t qp = saturating_power(f.q(), static_cast<std::uint64_t>(p));

  if (fits(detail::saturating_mul(qp, 2))) {
    report.counts["S0/enumerate"] = count_component(f, 0, CountMethod::Enumerate, CountVariant::OneSided, UINT64_MAX);
  } else {
    report.details["S0/enumerate"] = "skipped: exceeds bound";
  }
  for (int i = 1; 2 * i <= p - 3; ++i) {
    const std::string key = "S" + std::to_string(i);
    const auto closed = count_component(f, i, CountMethod::ClosedForm);
    report.counts[key + "/closed_form"] = closed;
    if (!fits(qp)) {
      report.details[key + "/enumerate"] = "skipped: exceeds bound";
      continue;
    }
    const auto counted = count_component(f, i, CountMethod::Enumerate, CountVariant::OneSided, UINT64_MAX);
    report.counts[key + "/enumerate"] = counted;
    report.counts[key + "/symmetrized"] =
        count_component(f, i, CountMethod::Enumerate, CountVariant::Symmetrized, UINT64_MAX);
    if (counted != closed) {
      report.add_failure({key + "/closed_form_mismatch", std::to_string(closed), std::to_string(counted)});
    }
    report.details[key + "/ratio_to_q^p"] = detail::ratio_string(closed, qp);
  }
  report.duration_ms = clock.elapsed_ms();
  return report;
}

VerificationReport certificate_soundness(const WittAlgebra& alg, const ExecOptions& opts) {
  const detail::Stopwatch clock;
  const FieldCtx& f = alg.field();
  const int p = alg.p();
  VerificationReport report = detail::new_report("soundness", f, opts.sampling);
  auto check = [&](VerificationReport& r, int i, const WittElement& x, const WittElement& y) {
    r.bump("pairs/" + std::to_string(i));
    if (!cert_membership(PairSpace::Full, i, x, y)) {
      r.add_failure({"not_certified/" + std::to_string(i), witt::to_string(x), witt::to_string(y)});
    }
    if (!witt::is_nilpotent(x) || !witt::is_nilpotent(y) || !alg.bracket(x, y).is_zero()) {
      r.add_failure({"unsound/" + std::to_string(i), witt::to_string(x), witt::to_string(y)});
    }
  };

  if (!opts.sampling) {
    const std::uint64_t qp = saturating_power(f.q(), static_cast<std::uint64_t>(p));
    require_within_bound(detail::saturating_mul(qp, static_cast<std::uint64_t>(p)), opts, "certificate soundness");
    const VectorEnumeration all(f, static_cast<std::size_t>(p), UINT64_MAX);
    WittElement x = alg.zero();
    WittElement y = alg.zero();
    for (const auto& v : all) {
      place(x, -1, v);
      if (!witt::is_nilpotent(x)) continue;
      if (x.is_zero()) {
        for (const auto& w : all) {
          place(y, -1, w);
          if (witt::is_nilpotent(y)) check(report, 0, x, y);
        }
        continue;
      }
      for (std::uint64_t a = 0; a < f.q(); ++a) check(report, 0, x, witt::scale(f.element(a), x));
    }
    for (int i = 1; 2 * i <= p - 3; ++i) {
      OneSidedWalker walker(f, i);
      walker.walk(0, walker.x_count(), [&](const WittElement& a, const WittElement& b) {
        check(report, i, a, b);
        check(report, i, b, a);
      });
    }
  } else {
    const SamplingInfo s = *opts.sampling;
    report.merge(parallel_fold(s.samples, opts.workers, [&](std::uint64_t b, std::uint64_t e, std::uint64_t chunk) {
      VerificationReport r;
      autgrp::Rng rng(chunk_seed(s.seed, chunk));
      for (std::uint64_t k = b; k < e; ++k) {
        const auto i = static_cast<int>(autgrp::uniform_below(rng, static_cast<std::uint64_t>((p - 1) / 2)));
        const Pair pr = random_certified_pair(alg, i, rng);
        check(r, i, pr.x, pr.y);
      }
      return r;
    }));
  }
  report.duration_ms = clock.elapsed_ms();
  return report;
}

Pair random_certified_pair(const WittAlgebra& alg, int i, autgrp::Rng& rng) {
  const FieldCtx& f = alg.field();
  const int p = alg.p();
  const Elem a = autgrp::random_element(f, rng);
  if (i == 0) {
    WittElement x = autgrp::uniform_below(rng, 2) == 0
                        ? autgrp::aut_apply(autgrp::aut_random(f, rng), alg.e(-1))
                        : detail::random_in_filtration(f, 1, rng);
    WittElement y = witt::scale(a, x);
    if (autgrp::uniform_below(rng, 2) == 1) std::swap(x, y);
    return {std::move(x), std::move(y)};
  }
  WittElement x = detail::random_in_filtration(f, i, rng);
  WittElement y = witt::scale(a, x) + detail::random_in_filtration(f, p - 1 - i, rng);
  if (autgrp::uniform_below(rng, 2) == 1) std::swap(x, y);
  return {std::move(x), std::move(y)};
}

VerificationReport commuting_census(const WittAlgebra& alg, PairSpace space, const ExecOptions& opts) {
  const detail::Stopwatch clock;
  const FieldCtx& f = alg.field();
  const int p = alg.p();
  const std::uint64_t q = f.q();
  const std::uint64_t qp = saturating_power(q, static_cast<std::uint64_t>(p));
  VerificationReport report = detail::new_report("census/" + std::string(to_string(space)), f);
  const auto indices = valid_indices(space, p);

  // Through centralizers: sum over x of #(z(x) n second set).
  std::uint64_t firsts_len = space == PairSpace::Full ? p : space == PairSpace::Borel ? p - 2 : 2;
  const int first = space == PairSpace::Borel ? 1 : -1;
  const std::uint64_t n = saturating_power(q, firsts_len);
  require_within_bound(detail::saturating_mul(n, static_cast<std::uint64_t>(p)), opts, "commuting census");
  require_within_bound(detail::saturating_mul(qp, static_cast<std::uint64_t>(indices.size() + 1)), opts,
                       "commuting census");
  const VectorEnumeration firsts(f, firsts_len, UINT64_MAX);
  const VerificationReport via_centralizers =
      parallel_fold(n, opts.workers, [&](std::uint64_t b, std::uint64_t e, std::uint64_t) {
        VerificationReport r;
        WittElement x = alg.zero();
        WittElement y = alg.zero();
        for (const auto& v : firsts.range(b, e)) {
          place(x, first, v);
          if (space == PairSpace::BorelMinus) {
            if (!witt::is_nilpotent(x)) continue;
            for (const auto& w : firsts) {
              place(y, -1, w);
              if (witt::is_nilpotent(y) && alg.bracket(x, y).is_zero()) r.bump("pairs");
            }
            continue;
          }
          if (space == PairSpace::Full && !witt::is_nilpotent(x)) continue;
          witt::Subspace z = alg.centralizer(x);
          if (space == PairSpace::Borel) {
            r.bump("pairs", saturating_power(q, z.intersect_filtration(1).dim()));
            continue;
          }
          for (const auto& c : VectorEnumeration(f, z.dim(), UINT64_MAX)) {
            if (witt::is_nilpotent(z.combination(c))) r.bump("pairs");
          }
        }
        return r;
      });
  const std::uint64_t by_centralizers = via_centralizers.counts.count("pairs") ? via_centralizers.counts.at("pairs") : 0;

  // Union of certificate sets: a pair is counted under the first index whose
  // certificate it satisfies.
  std::uint64_t union_count = 0;
  for (int i : indices) {
    const std::string key = "cert" + std::to_string(i);
    std::uint64_t fresh = 0;
    if (i == 0) {
      const std::size_t len = space == PairSpace::BorelMinus ? 2 : static_cast<std::size_t>(p);
      fresh = count_dependent_nilpotent(f, -1, len);
      report.counts[key + "/size"] = fresh;
    } else {
      OneSidedWalker walker(f, i);
      std::uint64_t size = 0;
      walker.walk(0, walker.x_count(), [&](const WittElement& x, const WittElement& y) {
        ++size;
        if (!covered_before(space, i, x, y)) ++fresh;
        if (in_one_sided_set(i, y, x)) return;
        ++size;
        if (!covered_before(space, i, y, x)) ++fresh;
      });
      report.counts[key + "/size"] = size;
    }
    report.counts[key + "/new"] = fresh;
    union_count += fresh;
  }

  report.counts["pairs/centralizers"] = by_centralizers;
  report.counts["pairs/certificates"] = union_count;
  if (by_centralizers != union_count) {
    report.add_failure({"census_mismatch", std::to_string(by_centralizers), std::to_string(union_count)});
  }
  report.details["ratio_to_q^p"] = detail::ratio_string(by_centralizers, qp);
  // Each top-dimensional component contributes about q^p points.
  const std::uint64_t top = space == PairSpace::Full ? (p - 1) / 2 : space == PairSpace::Borel ? (p - 3) / 2 : 0;
  if (top > 0) report.details["ratio_per_component"] = detail::ratio_string(by_centralizers, qp * top);
  report.duration_ms = clock.elapsed_ms();
  return report;
}

}  // namespace wittcv::varieties
