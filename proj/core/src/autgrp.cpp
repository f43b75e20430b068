#include "wittcv/autgrp.hpp"

#include <limits>

#include "wittcv/error.hpp"

namespace wittcv::autgrp {

namespace {

// a * b truncated at X^n.
std::vector<Elem> truncated_product(const FieldCtx& f, std::span<const Elem> a,
                                    std::span<const Elem> b) {
  const std::size_t n = a.size();
  std::vector<Elem> reversed(b.rbegin(), b.rend());
  std::vector<Elem> out(n);
  for (std::size_t r = 0; r < n; ++r) {
    out[r] = f.dot(a.subspan(0, r + 1), std::span<const Elem>(reversed).subspan(n - 1 - r, r + 1));
  }
  return out;
}

// Columns phi^0, phi^1, ..., phi^{n-1}.
Matrix power_matrix(const FieldCtx& f, std::span<const Elem> phi) {
  const std::size_t n = phi.size();
  Matrix m(n, n);
  std::vector<Elem> power(n);
  power[0] = f.one();
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t r = 0; r < n; ++r) m(r, j) = power[r];
    if (j + 1 < n) power = truncated_product(f, power, phi);
  }
  return m;
}

// Solves lower-triangular m * v = rhs.
std::vector<Elem> forward_solve(const FieldCtx& f, const Matrix& m, std::span<const Elem> rhs) {
  const std::size_t n = rhs.size();
  std::vector<Elem> v(n);
  for (std::size_t r = 0; r < n; ++r) {
    const Elem acc = f.dot(m.row(r).subspan(0, r), std::span<const Elem>(v).subspan(0, r));
    v[r] = f.div(f.sub(rhs[r], acc), m(r, r));
  }
  return v;
}

}  // namespace

std::uint64_t uniform_below(Rng& rng, std::uint64_t n) {
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - max % n;
  std::uint64_t draw = rng();
  while (draw >= limit) draw = rng();
  return draw % n;
}

Elem random_element(const FieldCtx& f, Rng& rng) {
  return Elem{static_cast<std::uint32_t>(uniform_below(rng, f.q()))};
}

Elem random_nonzero(const FieldCtx& f, Rng& rng) {
  return Elem{static_cast<std::uint32_t>(1 + uniform_below(rng, f.q() - 1))};
}

Automorphism::Automorphism(const FieldCtx& f, std::vector<Elem> coeffs)
    : field_(f), coeffs_(std::move(coeffs)) {
  const auto phi = substitution_poly();
  forward_ = power_matrix(f, phi);
  std::vector<Elem> x(phi.size());
  x[1] = f.one();
  inverse_ = forward_solve(f, forward_, x);
  backward_ = power_matrix(f, inverse_);
}

Automorphism Automorphism::make(const FieldCtx& f, std::vector<Elem> coeffs, AutCheck check) {
  if (coeffs.size() + 1 != f.p()) {
    throw Error(ErrorCode::BadLength, "substitution needs p-1 coefficients");
  }
  for (auto c : coeffs) {
    if (!f.contains(c)) throw Error(ErrorCode::ContextMismatch, "coefficient outside the field");
  }
  if (coeffs[0].code == 0) throw Error(ErrorCode::NotInvertible, "linear coefficient a_1 is zero");
  Automorphism phi(f, std::move(coeffs));
  if (check == AutCheck::Brackets && !preserves_brackets(witt::WittAlgebra(f), phi)) {
    internal_failure("substitution automorphism fails to preserve brackets");
  }
  return phi;
}

Automorphism Automorphism::identity(const FieldCtx& f) {
  std::vector<Elem> c(f.p() - 1);
  c[0] = f.one();
  return Automorphism(f, std::move(c));
}

std::vector<Elem> Automorphism::substitution_poly() const {
  std::vector<Elem> phi(coeffs_.size() + 1);
  std::copy(coeffs_.begin(), coeffs_.end(), phi.begin() + 1);
  return phi;
}

WittElement aut_apply(const Automorphism& phi, const WittElement& x) {
  if (!(x.field == phi.field()) || x.p() != phi.p()) {
    throw Error(ErrorCode::ContextMismatch, "automorphism and element over different fields");
  }
  const FieldCtx& f = x.field;
  // P^{-1} M(x) P sends X to P^{-1}(u * phi').
  const auto poly = phi.substitution_poly();
  const std::size_t n = poly.size();
  std::vector<Elem> derivative(n);
  for (std::size_t j = 0; j + 1 < n; ++j) {
    derivative[j] = f.mul(f.from_int(static_cast<std::int64_t>(j + 1)), poly[j + 1]);
  }
  const auto image = truncated_product(f, x.coeffs, derivative);
  return {f, ffield::mat_vec(f, phi.algebra_map_inverse(), image)};
}

Automorphism aut_compose(const Automorphism& phi, const Automorphism& psi) {
  if (!(phi.field() == psi.field()) || phi.p() != psi.p()) {
    throw Error(ErrorCode::ContextMismatch, "automorphisms over different fields");
  }
  // phi(psi(X)) = P_psi applied to phi.
  const auto chi = ffield::mat_vec(phi.field(), psi.algebra_map(), phi.substitution_poly());
  return Automorphism::make(phi.field(), {chi.begin() + 1, chi.end()}, AutCheck::None);
}

Automorphism aut_invert(const Automorphism& phi) {
  const auto& theta = phi.inverse_poly();
  return Automorphism::make(phi.field(), {theta.begin() + 1, theta.end()}, AutCheck::None);
}

Automorphism aut_random(const FieldCtx& f, Rng& rng) {
  std::vector<Elem> c(f.p() - 1);
  c[0] = random_nonzero(f, rng);
  for (std::size_t k = 1; k < c.size(); ++k) c[k] = random_element(f, rng);
  return Automorphism::make(f, std::move(c), AutCheck::None);
}

std::vector<Elem> series_inverse(const FieldCtx& f, std::span<const Elem> u) {
  if (u.empty() || u[0].code == 0) throw Error(ErrorCode::DivisionByZero, "u(0) = 0 is not a unit of A");
  const std::size_t n = u.size();
  const Elem inv0 = f.inv(u[0]);
  std::vector<Elem> v(n);
  v[0] = inv0;
  std::vector<Elem> reversed(n);
  for (std::size_t r = 1; r < n; ++r) {
    // sum_{t=0}^{r} u_t v_{r-t} = 0
    for (std::size_t t = 0; t < r; ++t) reversed[t] = v[r - 1 - t];
    const Elem acc = f.dot(u.subspan(1, r), std::span<const Elem>(reversed).subspan(0, r));
    v[r] = f.neg(f.mul(acc, inv0));
  }
  return v;
}

Automorphism rectify(const WittElement& x) {
  const FieldCtx& f = x.field;
  if (x.coeff(-1).code == 0) {
    throw Error(ErrorCode::NotRectifiable, "D-coordinate is zero");
  }
  const auto v = series_inverse(f, x.coeffs);
  const std::size_t n = v.size();
  if (v[n - 1].code != 0) {
    throw Error(ErrorCode::NotRectifiable, "1/u has a nonzero X^{p-1} term; x is not nilpotent");
  }
  // psi' = 1/u; the X^{p-1} guard above is exactly the coefficient that
  // would need division by p.
  std::vector<Elem> psi(n - 1);
  for (std::size_t j = 0; j + 1 < n; ++j) {
    psi[j] = f.div(v[j], f.from_int(static_cast<std::int64_t>(j + 1)));
  }
  return Automorphism::make(f, std::move(psi), AutCheck::None);
}

bool preserves_brackets(const witt::WittAlgebra& alg, const Automorphism& phi) {
  const int p = alg.p();
  std::vector<WittElement> images;
  for (int i = -1; i <= p - 2; ++i) images.push_back(aut_apply(phi, alg.e(i)));
  for (int i = -1; i <= p - 2; ++i) {
    for (int j = i + 1; j <= p - 2; ++j) {
      const auto lhs = aut_apply(phi, alg.bracket(alg.e(i), alg.e(j)));
      const auto rhs = alg.bracket(images[static_cast<std::size_t>(i + 1)],
                                   images[static_cast<std::size_t>(j + 1)]);
      if (!(lhs == rhs)) return false;
    }
  }
  return true;
}

std::string to_string(const Automorphism& phi) {
  return witt::format_vector(phi.field(), phi.substitution());
}

Automorphism parse_automorphism(std::string_view text) {
  auto parsed = witt::parse_vector(text);
  return Automorphism::make(parsed.field, std::move(parsed.values));
}

}  // namespace wittcv::autgrp
