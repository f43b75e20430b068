#include <string>

#include "wittcv/error.hpp"
#include "wittcv/varieties.hpp"

namespace wittcv::varieties {

namespace {

// Are x and y linearly dependent on the coordinate window [lo, hi)?
bool dependent_on(const FieldCtx& f, std::span<const Elem> x, std::span<const Elem> y, std::size_t lo,
                  std::size_t hi) {
  std::size_t k = lo;
  while (k < hi && x[k].code == 0) ++k;
  if (k == hi) return true;
  const Elem c = f.div(y[k], x[k]);
  for (std::size_t j = lo; j < hi; ++j) {
    if (y[j] != f.mul(c, x[j])) return false;
  }
  return true;
}

bool vanishes_below(std::span<const Elem> x, std::size_t k) {
  for (std::size_t j = 0; j < k; ++j) {
    if (x[j].code != 0) return false;
  }
  return true;
}

void require_valid(PairSpace space, int i, int p) {
  const int top = (p - 3) / 2;
  const int lo = space == PairSpace::Borel ? 1 : 0;
  const int hi = space == PairSpace::BorelMinus ? 0 : top;
  if (i < lo || i > hi) {
    throw Error(ErrorCode::BadIndex, "certificate index " + std::to_string(i) + " is not valid for " +
                                         std::string(to_string(space)) + " at p = " + std::to_string(p));
  }
}

}  // namespace

std::string_view to_string(PairSpace space) {
  switch (space) {
    case PairSpace::Full:
      return "full";
    case PairSpace::Borel:
      return "borel";
    case PairSpace::BorelMinus:
      return "borel-minus";
  }
  return "full";
}

PairSpace parse_pair_space(std::string_view text) {
  if (text == "full") return PairSpace::Full;
  if (text == "borel") return PairSpace::Borel;
  if (text == "borel-minus") return PairSpace::BorelMinus;
  throw Error(ErrorCode::ParseError, "unknown space '" + std::string(text) + "'");
}

std::vector<int> valid_indices(PairSpace space, int p) {
  std::vector<int> out;
  const int top = (p - 3) / 2;
  switch (space) {
    case PairSpace::Full:
      for (int i = 0; i <= top; ++i) out.push_back(i);
      break;
    case PairSpace::Borel:
      for (int i = 1; i <= top; ++i) out.push_back(i);
      break;
    case PairSpace::BorelMinus:
      out.push_back(0);
      break;
  }
  return out;
}

bool cert_membership(PairSpace space, int i, const WittElement& x, const WittElement& y) {
  witt::require_same_context(x, y);
  const int p = x.p();
  require_valid(space, i, p);
  const FieldCtx& f = x.field;
  if (i == 0) {
    if (!dependent_on(f, x.coeffs, y.coeffs, 0, x.coeffs.size())) return false;
    return witt::is_nilpotent(x) && witt::is_nilpotent(y);
  }
  const auto first = static_cast<std::size_t>(i + 1);
  if (!vanishes_below(x.coeffs, first) || !vanishes_below(y.coeffs, first)) return false;
  return dependent_on(f, x.coeffs, y.coeffs, first, static_cast<std::size_t>(p - i));
}

std::optional<int> covering_index(PairSpace space, const WittElement& x, const WittElement& y) {
  for (int i : valid_indices(space, x.p())) {
    if (cert_membership(space, i, x, y)) return i;
  }
  return std::nullopt;
}

bool in_one_sided_set(int i, const WittElement& x, const WittElement& y) {
  witt::require_same_context(x, y);
  const int p = x.p();
  if (i < 1 || 2 * i > p - 1) {
    throw Error(ErrorCode::BadIndex, "one-sided set index " + std::to_string(i) + " out of range");
  }
  const auto first = static_cast<std::size_t>(i + 1);
  if (!vanishes_below(x.coeffs, first) || !vanishes_below(y.coeffs, first)) return false;
  // y - c x must vanish below degree p-1-i, with c read off x's leading term.
  const auto stop = static_cast<std::size_t>(p - i);
  std::size_t k = first;
  while (k < stop && x.coeffs[k].code == 0) ++k;
  if (k == stop) return vanishes_below(std::span<const Elem>(y.coeffs).subspan(first), stop - first);
  return dependent_on(x.field, x.coeffs, y.coeffs, first, stop);
}

Pair gl2_transform(const Gl2& g, const Pair& pair) {
  witt::require_same_context(pair.x, pair.y);
  const FieldCtx& f = pair.x.field;
  const Elem det = f.sub(f.mul(g.a, g.d), f.mul(g.b, g.c));
  if (det.code == 0) throw Error(ErrorCode::Singular, "GL(2) matrix has zero determinant");
  return {witt::scale(g.a, pair.x) + witt::scale(g.b, pair.y), witt::scale(g.c, pair.x) + witt::scale(g.d, pair.y)};
}

}  // namespace wittcv::varieties
