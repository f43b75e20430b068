#include "wittcv/witt.hpp"

#include <charconv>
#include <string>

#include "wittcv/error.hpp"

namespace wittcv::witt {

namespace {

std::size_t dim_of(const FieldCtx& f) { return static_cast<std::size_t>(f.p()); }

// f <- u * f' truncated at X^p, in the monomial basis of A.
void apply_derivation(const FieldCtx& f, std::span<const Elem> u, std::vector<Elem>& poly,
                      std::vector<Elem>& scratch) {
  const std::size_t n = poly.size();
  // scratch holds the derivative reversed: scratch[n-1-j] = (j+1) f_{j+1}.
  for (std::size_t j = 0; j < n; ++j) {
    const Elem d = j + 1 < n ? f.mul(f.from_int(static_cast<std::int64_t>(j + 1)), poly[j + 1]) : f.zero();
    scratch[n - 1 - j] = d;
  }
  for (std::size_t r = 0; r < n; ++r) {
    poly[r] = f.dot(u.subspan(0, r + 1), std::span<const Elem>(scratch).subspan(n - 1 - r, r + 1));
  }
}

}  // namespace

bool WittElement::is_zero() const noexcept {
  for (auto c : coeffs) {
    if (c.code != 0) return false;
  }
  return true;
}

WittElement zero(const FieldCtx& f) { return {f, std::vector<Elem>(dim_of(f))}; }

WittElement basis(const FieldCtx& f, int degree) {
  if (degree < -1 || degree > static_cast<int>(f.p()) - 2) {
    throw Error(ErrorCode::BadIndex, "basis degree " + std::to_string(degree) + " out of range");
  }
  WittElement x = zero(f);
  x.coeff(degree) = f.one();
  return x;
}

WittElement make_element(const FieldCtx& f, std::vector<Elem> coeffs) {
  if (coeffs.size() != dim_of(f)) {
    throw Error(ErrorCode::BadLength, "expected " + std::to_string(f.p()) + " coordinates, got " +
                                          std::to_string(coeffs.size()));
  }
  for (auto c : coeffs) {
    if (!f.contains(c)) throw Error(ErrorCode::ContextMismatch, "coordinate outside the field");
  }
  return {f, std::move(coeffs)};
}

WittElement from_ints(const FieldCtx& f, std::initializer_list<std::int64_t> coords) {
  std::vector<Elem> c;
  c.reserve(coords.size());
  for (auto v : coords) c.push_back(f.from_int(v));
  return make_element(f, std::move(c));
}

void require_same_context(const WittElement& x, const WittElement& y) {
  if (!(x.field == y.field) || x.coeffs.size() != y.coeffs.size()) {
    throw Error(ErrorCode::ContextMismatch, "elements live over different fields");
  }
}

WittElement operator+(const WittElement& x, const WittElement& y) {
  require_same_context(x, y);
  WittElement out = x;
  for (std::size_t k = 0; k < out.coeffs.size(); ++k) out.coeffs[k] = x.field.add(x.coeffs[k], y.coeffs[k]);
  return out;
}

WittElement operator-(const WittElement& x, const WittElement& y) {
  require_same_context(x, y);
  WittElement out = x;
  for (std::size_t k = 0; k < out.coeffs.size(); ++k) out.coeffs[k] = x.field.sub(x.coeffs[k], y.coeffs[k]);
  return out;
}

WittElement operator-(const WittElement& x) {
  WittElement out = x;
  for (auto& c : out.coeffs) c = x.field.neg(c);
  return out;
}

WittElement scale(Elem a, const WittElement& x) {
  WittElement out = x;
  for (auto& c : out.coeffs) c = x.field.mul(a, c);
  return out;
}

// ---------------------------------------------------------------------------

DerMatrix to_matrix(const WittElement& x) {
  const FieldCtx& f = x.field;
  const std::size_t n = x.coeffs.size();
  Matrix m(n, n);
  // Column k is u * k X^{k-1}: row r gets k * u_{r-k+1}.
  for (std::size_t k = 1; k < n; ++k) {
    const Elem kk = f.from_int(static_cast<std::int64_t>(k));
    for (std::size_t r = k - 1; r < n; ++r) m(r, k) = f.mul(kk, x.coeffs[r - k + 1]);
  }
  return {std::move(m)};
}

WittElement from_matrix(const FieldCtx& f, const DerMatrix& m) {
  const std::size_t n = dim_of(f);
  if (m.matrix.rows() != n || m.matrix.cols() != n) {
    throw Error(ErrorCode::NotADerivation, "matrix must be " + std::to_string(n) + "x" + std::to_string(n));
  }
  WittElement x{f, m.matrix.column(1)};
  const DerMatrix expected = to_matrix(x);
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t r = 0; r < n; ++r) {
      if (expected.matrix(r, c) != m.matrix(r, c)) {
        throw Error(ErrorCode::NotADerivation,
                    "Leibniz rule fails on basis column X^" + std::to_string(c));
      }
    }
  }
  return x;
}

WittElement p_power(const WittElement& x) {
  const FieldCtx& f = x.field;
  const DerMatrix power{ffield::mat_pow(f, to_matrix(x).matrix, f.p())};
  try {
    return from_matrix(f, power);
  } catch (const Error&) {
    internal_failure("p-th power of a derivation is not a derivation");
  }
}

bool is_nilpotent(const WittElement& x) {
  const FieldCtx& f = x.field;
  const std::size_t n = x.coeffs.size();
  std::vector<Elem> poly(n), scratch(n);
  if (n > 1) poly[1] = f.one();
  for (std::uint32_t k = 0; k < f.p(); ++k) {
    apply_derivation(f, x.coeffs, poly, scratch);
    bool all_zero = true;
    for (auto c : poly) all_zero = all_zero && c.code == 0;
    if (all_zero) return true;
  }
  return false;
}

Level filtration_level(const WittElement& x) {
  for (std::size_t k = 0; k < x.coeffs.size(); ++k) {
    if (x.coeffs[k].code != 0) return Level(static_cast<int>(k) - 1);
  }
  return Level::infinity();
}

// ---------------------------------------------------------------------------

Subspace::Subspace(const FieldCtx& f, int p, const std::vector<std::vector<Elem>>& spanning)
    : field_(f), p_(p), basis_(ffield::canonical_basis(f, spanning, static_cast<std::size_t>(p))) {}

Subspace Subspace::span(const FieldCtx& f, const std::vector<WittElement>& elements) {
  std::vector<std::vector<Elem>> rows;
  rows.reserve(elements.size());
  for (const auto& x : elements) {
    if (!(x.field == f)) throw Error(ErrorCode::ContextMismatch, "span over mixed fields");
    rows.push_back(x.coeffs);
  }
  return Subspace(f, static_cast<int>(f.p()), rows);
}

Subspace Subspace::filtration(const FieldCtx& f, int i) {
  const int p = static_cast<int>(f.p());
  if (i < -1 || i > p - 1) throw Error(ErrorCode::BadIndex, "filtration index out of range");
  std::vector<WittElement> gens;
  for (int d = i; d <= p - 2; ++d) gens.push_back(witt::basis(f, d));
  return span(f, gens);
}

std::vector<WittElement> Subspace::basis() const {
  std::vector<WittElement> out;
  out.reserve(basis_.size());
  for (const auto& row : basis_) out.push_back({field_, row});
  return out;
}

bool Subspace::contains(const WittElement& x) const {
  if (!(x.field == field_) || x.p() != p_) return false;
  std::vector<Elem> v = x.coeffs;
  for (const auto& row : basis_) {
    std::size_t pivot = 0;
    while (row[pivot].code == 0) ++pivot;
    const Elem factor = v[pivot];
    if (factor.code == 0) continue;
    for (std::size_t k = pivot; k < v.size(); ++k) v[k] = field_.sub(v[k], field_.mul(factor, row[k]));
  }
  for (auto c : v) {
    if (c.code != 0) return false;
  }
  return true;
}

bool Subspace::is_subspace_of(const Subspace& other) const {
  for (const auto& b : basis()) {
    if (!other.contains(b)) return false;
  }
  return true;
}

Subspace Subspace::sum(const Subspace& other) const {
  auto rows = basis_;
  rows.insert(rows.end(), other.basis_.begin(), other.basis_.end());
  return Subspace(field_, p_, rows);
}

Subspace Subspace::intersect_filtration(int i) const {
  // In reduced echelon form the rows pivoting at degree >= i span the
  // intersection with g_i; any combination using an earlier pivot keeps it.
  std::vector<std::vector<Elem>> keep;
  for (const auto& row : basis_) {
    std::size_t pivot = 0;
    while (row[pivot].code == 0) ++pivot;
    if (static_cast<int>(pivot) - 1 >= i) keep.push_back(row);
  }
  return Subspace(field_, p_, keep);
}

WittElement Subspace::combination(std::span<const Elem> c) const {
  if (c.size() != basis_.size()) throw Error(ErrorCode::BadLength, "one coefficient per basis vector");
  WittElement out = witt::zero(field_);
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    if (c[k].code == 0) continue;
    for (std::size_t j = 0; j < out.coeffs.size(); ++j) {
      out.coeffs[j] = field_.add(out.coeffs[j], field_.mul(c[k], basis_[k][j]));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

WittAlgebra::WittAlgebra(const FieldCtx& f) : field_(f), p_(static_cast<int>(f.p())) {
  const auto n = static_cast<std::size_t>(p_);
  constants_.resize(n * n);
  for (int i = -1; i <= p_ - 2; ++i) {
    for (int j = -1; j <= p_ - 2; ++j) {
      constants_[static_cast<std::size_t>(i + 1) * n + static_cast<std::size_t>(j + 1)] = f.from_int(j - i);
    }
  }
}

WittAlgebra WittAlgebra::with_corrupted_constant(int i, int j, Elem value) const {
  if (i < -1 || j < -1 || i > p_ - 2 || j > p_ - 2) {
    throw Error(ErrorCode::BadIndex, "structure constant index out of range");
  }
  WittAlgebra out = *this;
  const auto n = static_cast<std::size_t>(p_);
  out.constants_[static_cast<std::size_t>(i + 1) * n + static_cast<std::size_t>(j + 1)] = value;
  out.constants_[static_cast<std::size_t>(j + 1) * n + static_cast<std::size_t>(i + 1)] = field_.neg(value);
  out.standard_ = false;
  return out;
}

Elem WittAlgebra::structure_constant(int i, int j) const {
  return constants_[static_cast<std::size_t>(i + 1) * static_cast<std::size_t>(p_) +
                    static_cast<std::size_t>(j + 1)];
}

void WittAlgebra::require_context(const WittElement& x) const {
  if (!(x.field == field_) || x.p() != p_) {
    throw Error(ErrorCode::ContextMismatch, "element does not belong to this algebra");
  }
}

WittElement WittAlgebra::bracket(const WittElement& x, const WittElement& y) const {
  require_context(x);
  require_context(y);
  WittElement out = zero();
  for (int i = -1; i <= p_ - 2; ++i) {
    const Elem a = x.coeff(i);
    if (a.code == 0) continue;
    for (int j = -1; j <= p_ - 2 && i + j <= p_ - 2; ++j) {
      const Elem b = y.coeff(j);
      if (b.code == 0 || i + j < -1) continue;
      const Elem term = field_.mul(field_.mul(a, b), structure_constant(i, j));
      out.coeff(i + j) = field_.add(out.coeff(i + j), term);
    }
  }
  return out;
}

Matrix WittAlgebra::ad_matrix(const WittElement& x) const {
  require_context(x);
  const auto n = static_cast<std::size_t>(p_);
  Matrix m(n, n);
  for (int j = -1; j <= p_ - 2; ++j) {
    for (int i = -1; i <= p_ - 2; ++i) {
      const Elem a = x.coeff(i);
      if (a.code == 0 || i + j < -1 || i + j > p_ - 2) continue;
      const auto row = static_cast<std::size_t>(i + j + 1);
      const auto col = static_cast<std::size_t>(j + 1);
      m(row, col) = field_.add(m(row, col), field_.mul(a, structure_constant(i, j)));
    }
  }
  return m;
}

Subspace WittAlgebra::centralizer(const WittElement& x) const {
  return Subspace(field_, p_, ffield::mat_nullspace(field_, ad_matrix(x)));
}

Subspace centralizer_prediction(const WittElement& x) {
  const FieldCtx& f = x.field;
  const int p = x.p();
  const Level level = filtration_level(x);
  if (level.is_infinite()) throw Error(ErrorCode::OutOfLemmaScope, "x = 0");
  if (level.value() == -1) {
    if (!is_nilpotent(x)) throw Error(ErrorCode::OutOfLemmaScope, "x is not nilpotent");
    return Subspace::span(f, {x});
  }
  if (level.value() == 0) throw Error(ErrorCode::OutOfLemmaScope, "x has filtration level 0");
  const int i = level.value();
  const Subspace tail = Subspace::filtration(f, p - 1 - i);
  if (2 * i < p - 1) return Subspace::span(f, {x}).sum(tail);
  return tail;
}

// ---------------------------------------------------------------------------

std::string format_scalar(const FieldCtx& f, Elem a) {
  if (f.m() == 1) return std::to_string(a.code);
  const auto d = f.digits(a);
  std::string out = "(";
  for (int i = 0; i < f.m(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(d[static_cast<std::size_t>(i)]);
  }
  out += ')';
  return out;
}

std::string format_vector(const FieldCtx& f, std::span<const Elem> values) {
  std::string out = std::to_string(f.p()) + ';' + std::to_string(f.m()) + ";[";
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k > 0) out += ',';
    out += format_scalar(f, values[k]);
  }
  out += ']';
  return out;
}

namespace {

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  bool at_end() {
    skip_space();
    return pos_ == text_.size();
  }
  char peek() { return at_end() ? '\0' : text_[pos_]; }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::uint64_t number() {
    skip_space();
    std::uint64_t v = 0;
    const auto* first = text_.data() + pos_;
    const auto* last = text_.data() + text_.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr == first) fail("expected a number");
    pos_ += static_cast<std::size_t>(ptr - first);
    return v;
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::ParseError, why + " at offset " + std::to_string(pos_) + " in '" +
                                           std::string(text_) + "'");
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

ParsedVector parse_vector(std::string_view text) {
  Scanner in(text);
  const std::uint64_t p = in.number();
  in.expect(';');
  const std::uint64_t m = in.number();
  in.expect(';');
  if (p > (1ULL << 32) || m > 3) in.fail("header out of range");
  const FieldCtx f = FieldCtx::make(static_cast<std::int64_t>(p), static_cast<int>(m));
  ParsedVector out{f, {}};
  in.expect('[');
  if (in.peek() != ']') {
    while (true) {
      if (f.m() == 1) {
        const std::uint64_t v = in.number();
        if (v >= f.p()) in.fail("scalar not reduced");
        out.values.push_back(Elem{static_cast<std::uint32_t>(v)});
      } else {
        in.expect('(');
        std::vector<std::uint32_t> digits;
        for (int i = 0; i < f.m(); ++i) {
          if (i > 0) in.expect(',');
          const std::uint64_t d = in.number();
          if (d >= f.p()) in.fail("digit not reduced");
          digits.push_back(static_cast<std::uint32_t>(d));
        }
        in.expect(')');
        out.values.push_back(f.from_digits(digits));
      }
      if (in.peek() == ',') {
        in.expect(',');
        continue;
      }
      break;
    }
  }
  in.expect(']');
  if (!in.at_end()) in.fail("trailing characters");
  return out;
}

std::string to_string(const WittElement& x) { return format_vector(x.field, x.coeffs); }

WittElement parse_element(std::string_view text) {
  auto parsed = parse_vector(text);
  if (parsed.values.size() != parsed.field.p()) {
    throw Error(ErrorCode::BadLength, "element needs p coordinates");
  }
  return {parsed.field, std::move(parsed.values)};
}

}  // namespace wittcv::witt
