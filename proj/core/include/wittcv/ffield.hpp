#pragma once

// Finite fields F_p and F_{p^m} (m <= 3), dense matrices over them, and
// deterministic enumeration of coordinate spaces F_q^n.
//
// Elements are plain codes: an element with coefficients (c_0, ..., c_{m-1})
// over F_p (c_k the coefficient of t^k in F_p[t]/(modulus)) has code
// sum_k c_k p^k. The code is canonical, so structural equality is field
// equality, and the code doubles as the element's enumeration index.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <memory>
#include <span>
#include <vector>

namespace wittcv::ffield {

struct Elem {
  std::uint32_t code = 0;

  friend constexpr auto operator<=>(Elem, Elem) = default;
};

/// Upper bound on the number of items an exhaustive enumeration may visit.
inline constexpr std::uint64_t kDefaultEnumerationBound = 1'000'000'000ULL;

class FieldCtx {
 public:
  /// Builds F_{p^m}. Throws NotPrime, CharTooSmall (p < 5) or
  /// DegreeUnsupported (m outside [1, 3], or q >= 2^32).
  static FieldCtx make(std::int64_t p, int m = 1);

  std::uint32_t p() const noexcept { return p_; }
  int m() const noexcept { return m_; }
  std::uint64_t q() const noexcept { return q_; }

  /// Monic modulus coefficients (c_0, ..., c_m); empty for prime fields.
  std::vector<std::uint32_t> modulus() const;

  Elem zero() const noexcept { return {0}; }
  Elem one() const noexcept { return {1}; }
  Elem from_int(std::int64_t v) const noexcept;
  Elem element(std::uint64_t index) const;
  std::uint64_t index(Elem a) const noexcept { return a.code; }
  bool contains(Elem a) const noexcept { return a.code < q_; }

  std::array<std::uint32_t, 3> digits(Elem a) const noexcept;
  Elem from_digits(std::span<const std::uint32_t> digits) const;

  Elem add(Elem a, Elem b) const noexcept;
  Elem sub(Elem a, Elem b) const noexcept;
  Elem neg(Elem a) const noexcept;
  Elem mul(Elem a, Elem b) const noexcept;
  Elem inv(Elem a) const;  // throws DivisionByZero
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const noexcept;

  /// sum_k a[k] * b[k]; reduces lazily over prime fields.
  Elem dot(std::span<const Elem> a, std::span<const Elem> b) const noexcept;

  friend bool operator==(const FieldCtx& a, const FieldCtx& b) noexcept {
    return a.p_ == b.p_ && a.m_ == b.m_ && a.modulus_ == b.modulus_;
  }

 private:
  struct Tables;

  FieldCtx(std::uint32_t p, int m, std::array<std::uint32_t, 4> modulus);
  Elem mul_poly(Elem a, Elem b) const noexcept;
  Elem add_digits(Elem a, Elem b) const noexcept;

  std::uint32_t p_ = 0;
  int m_ = 1;
  std::uint64_t q_ = 0;
  std::array<std::uint32_t, 4> modulus_{};  // c_0..c_m, c_m = 1
  std::uint64_t lazy_terms_ = 1;            // products summable before reduction
  std::shared_ptr<const Tables> tables_;    // small extension fields only
};

bool is_prime(std::uint64_t n) noexcept;

/// Lexicographically smallest monic irreducible of degree m over F_p,
/// compared on (c_0, c_1, ..., c_{m-1}).
std::vector<std::uint32_t> smallest_irreducible(std::uint32_t p, int m);

/// Irreducibility by trial division against every monic polynomial of
/// degree 1..deg/2. Coefficients are constant-term first.
bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> poly);

// ---------------------------------------------------------------------------
// Dense matrices

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Elem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Elem operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Elem> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Elem> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::vector<Elem> column(std::size_t c) const;

  bool is_zero() const noexcept;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> data_;
};

Matrix mat_add(const FieldCtx& f, const Matrix& a, const Matrix& b);
Matrix mat_sub(const FieldCtx& f, const Matrix& a, const Matrix& b);
Matrix mat_mul(const FieldCtx& f, const Matrix& a, const Matrix& b);
std::vector<Elem> mat_vec(const FieldCtx& f, const Matrix& a, std::span<const Elem> v);

/// a^e by repeated squaring; a^0 is the identity. Throws NotSquare.
Matrix mat_pow(const FieldCtx& f, const Matrix& a, std::uint64_t e);

struct Echelon {
  Matrix reduced;                       // reduced row echelon form
  std::vector<std::size_t> pivot_cols;  // one per nonzero row, increasing

  std::size_t rank() const noexcept { return pivot_cols.size(); }
};

/// Gauss-Jordan elimination, pivoting on the leftmost nonzero column.
Echelon row_reduce(const FieldCtx& f, Matrix a);

/// Basis of {v : a v = 0}, returned in reduced row echelon form.
std::vector<std::vector<Elem>> mat_nullspace(const FieldCtx& f, const Matrix& a);

/// Reduced row echelon form of the span of `vectors` with zero rows dropped.
std::vector<std::vector<Elem>> canonical_basis(const FieldCtx& f,
                                               const std::vector<std::vector<Elem>>& vectors,
                                               std::size_t dim);

/// Throws Singular.
Matrix mat_inverse(const FieldCtx& f, const Matrix& a);

// ---------------------------------------------------------------------------
// Enumeration of F_q^n in odometer order: the last coordinate turns fastest,
// and each coordinate runs through the field in code order. Vector number k
// therefore has the base-q digits of k as coordinates, most significant
// first.

/// base^n, throwing SizeOverflow once it exceeds `bound`.
std::uint64_t checked_power(std::uint64_t base, std::size_t n, std::uint64_t bound);

class VectorEnumeration {
 public:
  class Cursor {
   public:
    bool valid() const noexcept { return index_ < end_; }
    std::uint64_t index() const noexcept { return index_; }
    const std::vector<Elem>& value() const noexcept { return current_; }
    void advance() noexcept;

   private:
    friend class VectorEnumeration;
    Cursor(const VectorEnumeration& owner, std::uint64_t begin, std::uint64_t end);

    std::uint32_t q_minus_one_ = 0;
    std::uint64_t index_ = 0;
    std::uint64_t end_ = 0;
    std::vector<Elem> current_;
  };

  struct Sentinel {};

  class Iterator {
   public:
    using value_type = std::vector<Elem>;
    using difference_type = std::ptrdiff_t;

    explicit Iterator(Cursor cursor) : cursor_(std::move(cursor)) {}
    const std::vector<Elem>& operator*() const noexcept { return cursor_.value(); }
    Iterator& operator++() noexcept {
      cursor_.advance();
      return *this;
    }
    void operator++(int) noexcept { cursor_.advance(); }
    friend bool operator==(const Iterator& it, Sentinel) noexcept { return !it.cursor_.valid(); }

   private:
    Cursor cursor_;
  };

  class Range {
   public:
    Iterator begin() const { return Iterator(owner_->cursor(begin_, end_)); }
    Sentinel end() const noexcept { return {}; }

   private:
    friend class VectorEnumeration;
    Range(const VectorEnumeration* owner, std::uint64_t b, std::uint64_t e)
        : owner_(owner), begin_(b), end_(e) {}
    const VectorEnumeration* owner_;
    std::uint64_t begin_;
    std::uint64_t end_;
  };

  VectorEnumeration(const FieldCtx& f, std::size_t n,
                    std::uint64_t bound = kDefaultEnumerationBound);

  std::uint64_t size() const noexcept { return size_; }
  std::size_t length() const noexcept { return n_; }
  std::vector<Elem> at(std::uint64_t index) const;

  Cursor cursor(std::uint64_t begin, std::uint64_t end) const;
  Range range(std::uint64_t begin, std::uint64_t end) const;
  Iterator begin() const { return Iterator(cursor(0, size_)); }
  Sentinel end() const noexcept { return {}; }

 private:
  FieldCtx field_;
  std::size_t n_;
  std::uint64_t size_;
};

inline VectorEnumeration enum_vectors(const FieldCtx& f, std::size_t n,
                                      std::uint64_t bound = kDefaultEnumerationBound) {
  return VectorEnumeration(f, n, bound);
}

}  // namespace wittcv::ffield
