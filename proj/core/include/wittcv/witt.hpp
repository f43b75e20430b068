#pragma once

// The p-dimensional Witt algebra W1 = Der(A), A = k[X]/(X^p), over F_q.
//
// Elements are coordinate vectors (a_{-1}, a_0, ..., a_{p-2}) in the graded
// basis e_i = X^{i+1} D, so x = u(X) D with u(X) = sum_j a_{j-1} X^j. Index k
// of the coefficient vector holds the coordinate of degree k - 1, which is
// also the X^k coefficient of u.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wittcv/ffield.hpp"

namespace wittcv::witt {

using ffield::Elem;
using ffield::FieldCtx;
using ffield::Matrix;

/// Filtration level: least degree with a nonzero coordinate, +inf for 0.
class Level {
 public:
  static constexpr int kInfinite = std::numeric_limits<int>::max();

  constexpr Level() = default;
  constexpr explicit Level(int value) : value_(value) {}
  static constexpr Level infinity() { return Level(); }

  constexpr bool is_infinite() const noexcept { return value_ == kInfinite; }
  constexpr int value() const noexcept { return value_; }

  friend constexpr auto operator<=>(Level, Level) = default;

  /// Saturating: anything plus +inf is +inf.
  friend constexpr Level operator+(Level a, Level b) {
    if (a.is_infinite() || b.is_infinite()) return infinity();
    return Level(a.value_ + b.value_);
  }

 private:
  int value_ = kInfinite;
};

struct WittElement {
  FieldCtx field;
  std::vector<Elem> coeffs;

  int p() const noexcept { return static_cast<int>(coeffs.size()); }
  Elem coeff(int degree) const { return coeffs[static_cast<std::size_t>(degree + 1)]; }
  Elem& coeff(int degree) { return coeffs[static_cast<std::size_t>(degree + 1)]; }
  bool is_zero() const noexcept;

  friend bool operator==(const WittElement&, const WittElement&) = default;
};

WittElement zero(const FieldCtx& f);
/// e_degree = X^{degree+1} D, degree in [-1, p-2].
WittElement basis(const FieldCtx& f, int degree);
/// Throws BadLength unless coeffs has exactly p entries.
WittElement make_element(const FieldCtx& f, std::vector<Elem> coeffs);
/// Integer coordinates reduced into the prime field.
WittElement from_ints(const FieldCtx& f, std::initializer_list<std::int64_t> coords);

WittElement operator+(const WittElement& x, const WittElement& y);
WittElement operator-(const WittElement& x, const WittElement& y);
WittElement operator-(const WittElement& x);
WittElement scale(Elem a, const WittElement& x);

/// Throws ContextMismatch.
void require_same_context(const WittElement& x, const WittElement& y);

/// Matrix of a derivation of A, columns indexed by 1, X, ..., X^{p-1}.
struct DerMatrix {
  Matrix matrix;

  friend bool operator==(const DerMatrix&, const DerMatrix&) = default;
};

/// x = u D acts on A by f -> u f'.
DerMatrix to_matrix(const WittElement& x);

/// Reads u off the image of X. Throws NotADerivation if the matrix is not
/// that of u D on every basis column.
WittElement from_matrix(const FieldCtx& f, const DerMatrix& m);

/// x^[p] as the p-th power of the derivation. Aborts if M^p fails the
/// derivation law, which can only mean an internal bug.
WittElement p_power(const WittElement& x);

/// x^[p] == 0. Evaluates M^p on X only: M^p is again a derivation and so
/// vanishes iff it kills X.
bool is_nilpotent(const WittElement& x);

Level filtration_level(const WittElement& x);

/// x lies in g_i = span{e_i, ..., e_{p-2}}.
inline bool in_filtration(const WittElement& x, int i) {
  return filtration_level(x) >= Level(i);
}

/// A subspace of W1 stored by its reduced row echelon basis, so equality of
/// subspaces is equality of bases.
class Subspace {
 public:
  Subspace(const FieldCtx& f, int p, const std::vector<std::vector<Elem>>& spanning);

  static Subspace span(const FieldCtx& f, const std::vector<WittElement>& elements);
  /// g_i for -1 <= i <= p-1 (g_{p-1} = 0).
  static Subspace filtration(const FieldCtx& f, int i);

  const FieldCtx& field() const noexcept { return field_; }
  int p() const noexcept { return p_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  const std::vector<std::vector<Elem>>& rows() const noexcept { return basis_; }
  std::vector<WittElement> basis() const;

  bool contains(const WittElement& x) const;
  bool is_subspace_of(const Subspace& other) const;
  Subspace sum(const Subspace& other) const;
  Subspace intersect_filtration(int i) const;

  /// sum_k c[k] * basis[k].
  WittElement combination(std::span<const Elem> c) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  FieldCtx field_;
  int p_;
  std::vector<std::vector<Elem>> basis_;
};

class WittAlgebra {
 public:
  explicit WittAlgebra(const FieldCtx& f);

  /// Copy with [e_i, e_j] = value e_{i+j} and [e_j, e_i] = -value e_{i+j}.
  /// Used to demonstrate that the verification tasks detect a broken algebra.
  WittAlgebra with_corrupted_constant(int i, int j, Elem value) const;

  const FieldCtx& field() const noexcept { return field_; }
  int p() const noexcept { return p_; }
  bool is_standard() const noexcept { return standard_; }

  /// Coefficient of e_{i+j} in [e_i, e_j]; j - i for the genuine algebra.
  Elem structure_constant(int i, int j) const;

  WittElement zero() const { return witt::zero(field_); }
  WittElement e(int degree) const { return basis(field_, degree); }

  WittElement bracket(const WittElement& x, const WittElement& y) const;
  /// Column j (degree j - 1) holds [x, e_{j-1}].
  Matrix ad_matrix(const WittElement& x) const;
  Subspace centralizer(const WittElement& x) const;

 private:
  void require_context(const WittElement& x) const;

  FieldCtx field_;
  int p_;
  bool standard_ = true;
  std::vector<Elem> constants_;  // p x p, row i+1, column j+1
};

/// Closed-form centralizer: kx for nilpotent x with a_{-1} != 0;
/// kx + g_{p-1-i} at level 1 <= i < (p-1)/2; g_{p-1-i} at level i >= (p-1)/2.
/// Throws OutOfLemmaScope elsewhere.
Subspace centralizer_prediction(const WittElement& x);

// Text format `p;m;[c_1,...,c_n]`; extension-field scalars are written as
// digit tuples `(d_0,...,d_{m-1})`, constant digit first.

struct ParsedVector {
  FieldCtx field;
  std::vector<Elem> values;
};

std::string format_scalar(const FieldCtx& f, Elem a);
std::string format_vector(const FieldCtx& f, std::span<const Elem> values);
/// Throws ParseError (or the FieldCtx::make errors for a bad header).
ParsedVector parse_vector(std::string_view text);

std::string to_string(const WittElement& x);
WittElement parse_element(std::string_view text);

}  // namespace wittcv::witt
