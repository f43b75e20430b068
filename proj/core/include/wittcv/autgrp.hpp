#pragma once

// Automorphisms of W1 induced by substitutions X -> phi(X) of A.
//
// phi(X) = a_1 X + ... + a_{p-1} X^{p-1} with a_1 != 0 gives the algebra
// automorphism P : f -> f(phi) of A. It acts on derivations by
//
//     M(Phi x) = P^{-1} M(x) P,
//
// so that Phi(D) = (1 / theta') D for theta the compositional inverse of phi,
// and an element u D is carried onto D by the substitution whose derivative
// is 1/u. These are all automorphisms of W1 for p > 3 (a classical fact the
// library assumes; the converse direction, automorphism => bracket
// preserving, is checked).

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wittcv/ffield.hpp"
#include "wittcv/witt.hpp"

namespace wittcv::autgrp {

using ffield::Elem;
using ffield::FieldCtx;
using ffield::Matrix;
using witt::WittElement;

using Rng = std::mt19937_64;

// std::uniform_int_distribution is implementation-defined; reports must be
// byte-identical across standard libraries, so sampling is done by hand.
std::uint64_t uniform_below(Rng& rng, std::uint64_t n);
Elem random_element(const FieldCtx& f, Rng& rng);
Elem random_nonzero(const FieldCtx& f, Rng& rng);

enum class AutCheck { None, Brackets };

#ifdef NDEBUG
inline constexpr AutCheck kDefaultAutCheck = AutCheck::None;
#else
inline constexpr AutCheck kDefaultAutCheck = AutCheck::Brackets;
#endif

class Automorphism {
 public:
  /// coeffs = (a_1, ..., a_{p-1}). Throws BadLength or NotInvertible.
  static Automorphism make(const FieldCtx& f, std::vector<Elem> coeffs,
                           AutCheck check = kDefaultAutCheck);
  static Automorphism identity(const FieldCtx& f);

  const FieldCtx& field() const noexcept { return field_; }
  int p() const noexcept { return static_cast<int>(field_.p()); }
  const std::vector<Elem>& substitution() const noexcept { return coeffs_; }
  /// phi as a vector of A (length p, constant term 0).
  std::vector<Elem> substitution_poly() const;
  /// theta with theta(phi(X)) = X, as a vector of A.
  const std::vector<Elem>& inverse_poly() const noexcept { return inverse_; }

  /// P : f -> f(phi), columns indexed by 1, X, ..., X^{p-1}.
  const Matrix& algebra_map() const noexcept { return forward_; }
  const Matrix& algebra_map_inverse() const noexcept { return backward_; }

  friend bool operator==(const Automorphism& a, const Automorphism& b) {
    return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
  }

 private:
  Automorphism(const FieldCtx& f, std::vector<Elem> coeffs);

  FieldCtx field_;
  std::vector<Elem> coeffs_;
  std::vector<Elem> inverse_;
  Matrix forward_;
  Matrix backward_;
};

/// Throws ContextMismatch.
WittElement aut_apply(const Automorphism& phi, const WittElement& x);

/// aut_apply(compose(phi, psi), x) == aut_apply(phi, aut_apply(psi, x)).
Automorphism aut_compose(const Automorphism& phi, const Automorphism& psi);
Automorphism aut_invert(const Automorphism& phi);

/// a_1 uniform on F_q^x, the other coefficients uniform on F_q.
Automorphism aut_random(const FieldCtx& f, Rng& rng);

/// Automorphism carrying a nilpotent x with a_{-1} != 0 onto D. Throws
/// NotRectifiable when a_{-1} = 0 or when 1/u has a nonzero X^{p-1} term
/// (exactly the non-nilpotent case).
Automorphism rectify(const WittElement& x);

/// 1/u in A; requires u_0 != 0.
std::vector<Elem> series_inverse(const FieldCtx& f, std::span<const Elem> u);

/// Phi[e_i, e_j] == [Phi e_i, Phi e_j] for all basis pairs.
bool preserves_brackets(const witt::WittAlgebra& alg, const Automorphism& phi);

/// `p;m;[a_1,...,a_{p-1}]`
std::string to_string(const Automorphism& phi);
Automorphism parse_automorphism(std::string_view text);

}  // namespace wittcv::autgrp
