#include "wittcv/ffield.hpp"

#include <limits>
#include <map>
#include <mutex>
#include <string>
#include <utility>

#include "wittcv/error.hpp"

namespace wittcv::ffield {

namespace {

// Remainder of `num` modulo the monic `den` over F_p (constant-term first).
std::vector<std::uint32_t> poly_mod(std::uint32_t p, std::vector<std::uint32_t> num,
                                    std::span<const std::uint32_t> den) {
  const std::size_t dd = den.size() - 1;
  while (num.size() > dd && !num.empty()) {
    const std::uint64_t lead = num.back();
    if (lead != 0) {
      const std::size_t shift = num.size() - 1 - dd;
      for (std::size_t j = 0; j <= dd; ++j) {
        const std::uint64_t sub = lead * den[j] % p;
        num[shift + j] = static_cast<std::uint32_t>((num[shift + j] + p - sub) % p);
      }
    }
    num.pop_back();
  }
  return num;
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a;
  while (new_r != 0) {
    const std::int64_t quot = r / new_r;
    t -= quot * new_t;
    std::swap(t, new_t);
    r -= quot * new_r;
    std::swap(r, new_r);
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

// Extension fields up to this order get full addition/multiplication tables.
constexpr std::uint64_t kTableLimit = 1024;

}  // namespace

struct FieldCtx::Tables {
  std::vector<std::uint32_t> add;
  std::vector<std::uint32_t> mul;
};

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> poly) {
  const std::size_t deg = poly.size() - 1;
  if (deg == 0) return false;
  for (std::size_t k = 1; k <= deg / 2; ++k) {
    // Every monic divisor candidate of degree k, low coefficients by odometer.
    std::vector<std::uint32_t> g(k + 1, 0);
    g[k] = 1;
    while (true) {
      std::vector<std::uint32_t> num(poly.begin(), poly.end());
      auto rem = poly_mod(p, std::move(num), g);
      bool zero = true;
      for (auto c : rem) zero = zero && c == 0;
      if (zero) return false;
      std::size_t pos = 0;
      while (pos < k && ++g[pos] == p) g[pos++] = 0;
      if (pos == k) break;
    }
  }
  return true;
}

std::vector<std::uint32_t> smallest_irreducible(std::uint32_t p, int m) {
  std::vector<std::uint32_t> poly(static_cast<std::size_t>(m) + 1, 0);
  poly[static_cast<std::size_t>(m)] = 1;
  // (c_0, ..., c_{m-1}) in lexicographic order: c_{m-1} turns fastest.
  while (true) {
    if (is_irreducible(p, poly)) return poly;
    int pos = m - 1;
    while (pos >= 0 && ++poly[static_cast<std::size_t>(pos)] == p) {
      poly[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) internal_failure("no irreducible polynomial found");
  }
}

FieldCtx::FieldCtx(std::uint32_t p, int m, std::array<std::uint32_t, 4> modulus)
    : p_(p), m_(m), modulus_(modulus) {
  q_ = 1;
  for (int i = 0; i < m; ++i) q_ *= p;
  const std::uint64_t sq = static_cast<std::uint64_t>(p - 1) * (p - 1);
  lazy_terms_ = sq == 0 ? 1 : (std::numeric_limits<std::uint64_t>::max() - p) / sq;
  if (m == 1 || q_ > kTableLimit) return;

  static std::mutex mutex;
  static std::map<std::pair<std::uint32_t, int>, std::shared_ptr<const Tables>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{p, m}];
  if (!slot) {
    auto t = std::make_shared<Tables>();
    t->add.resize(q_ * q_);
    t->mul.resize(q_ * q_);
    for (std::uint32_t a = 0; a < q_; ++a) {
      for (std::uint32_t b = 0; b < q_; ++b) {
        t->add[a * q_ + b] = add_digits({a}, {b}).code;
        t->mul[a * q_ + b] = mul_poly({a}, {b}).code;
      }
    }
    slot = std::move(t);
  }
  tables_ = slot;
}

FieldCtx FieldCtx::make(std::int64_t p, int m) {
  if (p < 2 || !is_prime(static_cast<std::uint64_t>(p))) {
    throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  }
  if (p < 5) {
    throw Error(ErrorCode::CharTooSmall, "characteristic must exceed 3, got " + std::to_string(p));
  }
  if (m < 1 || m > 3) {
    throw Error(ErrorCode::DegreeUnsupported, "extension degree must be 1..3, got " + std::to_string(m));
  }
  std::uint64_t q = 1;
  for (int i = 0; i < m; ++i) {
    q *= static_cast<std::uint64_t>(p);
    if (q >= (1ULL << 32)) {
      throw Error(ErrorCode::DegreeUnsupported, "field order exceeds 2^32");
    }
  }
  std::array<std::uint32_t, 4> mod{};
  if (m > 1) {
    auto poly = smallest_irreducible(static_cast<std::uint32_t>(p), m);
    for (std::size_t i = 0; i < poly.size(); ++i) mod[i] = poly[i];
  }
  return FieldCtx(static_cast<std::uint32_t>(p), m, mod);
}

std::vector<std::uint32_t> FieldCtx::modulus() const {
  if (m_ == 1) return {};
  return {modulus_.begin(), modulus_.begin() + m_ + 1};
}

Elem FieldCtx::from_int(std::int64_t v) const noexcept {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return {static_cast<std::uint32_t>(r)};
}

Elem FieldCtx::element(std::uint64_t index) const {
  if (index >= q_) throw Error(ErrorCode::BadIndex, "element index out of range");
  return {static_cast<std::uint32_t>(index)};
}

std::array<std::uint32_t, 3> FieldCtx::digits(Elem a) const noexcept {
  std::array<std::uint32_t, 3> d{};
  std::uint32_t c = a.code;
  for (int i = 0; i < m_; ++i) {
    d[static_cast<std::size_t>(i)] = c % p_;
    c /= p_;
  }
  return d;
}

Elem FieldCtx::from_digits(std::span<const std::uint32_t> digits) const {
  if (digits.size() != static_cast<std::size_t>(m_)) {
    throw Error(ErrorCode::BadLength, "expected " + std::to_string(m_) + " digits");
  }
  std::uint32_t code = 0;
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (digits[i] >= p_) throw Error(ErrorCode::ParseError, "digit out of range");
    code = code * p_ + digits[i];
  }
  return {code};
}

Elem FieldCtx::add(Elem a, Elem b) const noexcept {
  if (m_ == 1) {
    std::uint32_t s = a.code + b.code;
    if (s >= p_) s -= p_;
    return {s};
  }
  if (tables_) return {tables_->add[a.code * q_ + b.code]};
  return add_digits(a, b);
}

Elem FieldCtx::add_digits(Elem a, Elem b) const noexcept {
  auto da = digits(a), db = digits(b);
  std::uint32_t code = 0;
  for (int i = m_; i-- > 0;) {
    std::uint32_t s = da[static_cast<std::size_t>(i)] + db[static_cast<std::size_t>(i)];
    if (s >= p_) s -= p_;
    code = code * p_ + s;
  }
  return {code};
}

Elem FieldCtx::neg(Elem a) const noexcept {
  if (m_ == 1) return {a.code == 0 ? 0 : p_ - a.code};
  auto da = digits(a);
  std::uint32_t code = 0;
  for (int i = m_; i-- > 0;) {
    const std::uint32_t d = da[static_cast<std::size_t>(i)];
    code = code * p_ + (d == 0 ? 0 : p_ - d);
  }
  return {code};
}

Elem FieldCtx::sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }

Elem FieldCtx::mul(Elem a, Elem b) const noexcept {
  if (m_ == 1) {
    return {static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.code) * b.code % p_)};
  }
  if (tables_) return {tables_->mul[a.code * q_ + b.code]};
  return mul_poly(a, b);
}

Elem FieldCtx::mul_poly(Elem a, Elem b) const noexcept {
  auto da = digits(a), db = digits(b);
  std::array<std::uint64_t, 5> prod{};
  for (int i = 0; i < m_; ++i) {
    for (int j = 0; j < m_; ++j) {
      prod[static_cast<std::size_t>(i + j)] +=
          static_cast<std::uint64_t>(da[static_cast<std::size_t>(i)]) * db[static_cast<std::size_t>(j)];
    }
  }
  for (auto& c : prod) c %= p_;
  for (int k = 2 * m_ - 2; k >= m_; --k) {
    const std::uint64_t lead = prod[static_cast<std::size_t>(k)];
    if (lead == 0) continue;
    for (int j = 0; j < m_; ++j) {
      const std::size_t at = static_cast<std::size_t>(k - m_ + j);
      prod[at] = (prod[at] + p_ - lead * modulus_[static_cast<std::size_t>(j)] % p_) % p_;
    }
    prod[static_cast<std::size_t>(k)] = 0;
  }
  std::uint32_t code = 0;
  for (int i = m_; i-- > 0;) code = code * p_ + static_cast<std::uint32_t>(prod[static_cast<std::size_t>(i)]);
  return {code};
}

Elem FieldCtx::pow(Elem a, std::uint64_t e) const noexcept {
  Elem result = one();
  while (e > 0) {
    if (e & 1U) result = mul(result, a);
    a = mul(a, a);
    e >>= 1U;
  }
  return result;
}

Elem FieldCtx::inv(Elem a) const {
  if (a.code == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  if (m_ == 1) return {inv_mod(a.code, p_)};
  return pow(a, q_ - 2);
}

Elem FieldCtx::dot(std::span<const Elem> a, std::span<const Elem> b) const noexcept {
  const std::size_t n = a.size() < b.size() ? a.size() : b.size();
  if (m_ == 1) {
    std::uint64_t acc = 0;
    std::uint64_t pending = 0;
    for (std::size_t i = 0; i < n; ++i) {
      acc += static_cast<std::uint64_t>(a[i].code) * b[i].code;
      if (++pending == lazy_terms_) {
        acc %= p_;
        pending = 0;
      }
    }
    return {static_cast<std::uint32_t>(acc % p_)};
  }
  Elem acc = zero();
  for (std::size_t i = 0; i < n; ++i) acc = add(acc, mul(a[i], b[i]));
  return acc;
}

// ---------------------------------------------------------------------------

std::uint64_t checked_power(std::uint64_t base, std::size_t n, std::uint64_t bound) {
  std::uint64_t result = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (base != 0 && result > bound / base) {
      throw Error(ErrorCode::SizeOverflow, std::to_string(base) + "^" + std::to_string(n) +
                                               " exceeds the enumeration bound " +
                                               std::to_string(bound));
    }
    result *= base;
  }
  if (result > bound) {
    throw Error(ErrorCode::SizeOverflow, "enumeration size exceeds bound " + std::to_string(bound));
  }
  return result;
}

VectorEnumeration::VectorEnumeration(const FieldCtx& f, std::size_t n, std::uint64_t bound)
    : field_(f), n_(n), size_(checked_power(f.q(), n, bound)) {}

std::vector<Elem> VectorEnumeration::at(std::uint64_t index) const {
  if (index >= size_) throw Error(ErrorCode::BadIndex, "vector index out of range");
  std::vector<Elem> v(n_);
  for (std::size_t i = n_; i-- > 0;) {
    v[i] = Elem{static_cast<std::uint32_t>(index % field_.q())};
    index /= field_.q();
  }
  return v;
}

VectorEnumeration::Cursor::Cursor(const VectorEnumeration& owner, std::uint64_t begin,
                                  std::uint64_t end)
    : q_minus_one_(static_cast<std::uint32_t>(owner.field_.q() - 1)),
      index_(begin),
      end_(end < owner.size_ ? end : owner.size_) {
  if (index_ < end_) current_ = owner.at(index_);
}

void VectorEnumeration::Cursor::advance() noexcept {
  ++index_;
  if (index_ >= end_) return;
  for (std::size_t i = current_.size(); i-- > 0;) {
    if (current_[i].code == q_minus_one_) {
      current_[i].code = 0;
    } else {
      ++current_[i].code;
      break;
    }
  }
}

VectorEnumeration::Cursor VectorEnumeration::cursor(std::uint64_t begin, std::uint64_t end) const {
  return Cursor(*this, begin, end);
}

VectorEnumeration::Range VectorEnumeration::range(std::uint64_t begin, std::uint64_t end) const {
  return Range(this, begin, end);
}

}  // namespace wittcv::ffield
