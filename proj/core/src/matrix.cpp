#include <algorithm>
#include <string>
#include <utility>

#include "wittcv/error.hpp"
#include "wittcv/ffield.hpp"

namespace wittcv::ffield {

namespace {

void require_same_shape(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "matrix shapes differ");
  }
}

Matrix transpose(const Matrix& a) {
  Matrix t(a.cols(), a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) t(c, r) = a(r, c);
  }
  return t;
}

}  // namespace

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Elem{1};
  return m;
}

std::vector<Elem> Matrix::column(std::size_t c) const {
  std::vector<Elem> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

bool Matrix::is_zero() const noexcept {
  for (auto e : data_) {
    if (e.code != 0) return false;
  }
  return true;
}

Matrix mat_add(const FieldCtx& f, const Matrix& a, const Matrix& b) {
  require_same_shape(a, b);
  Matrix out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = f.add(a(r, c), b(r, c));
  }
  return out;
}

Matrix mat_sub(const FieldCtx& f, const Matrix& a, const Matrix& b) {
  require_same_shape(a, b);
  Matrix out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = f.sub(a(r, c), b(r, c));
  }
  return out;
}

Matrix mat_mul(const FieldCtx& f, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::DimensionMismatch, "inner dimensions differ");
  const Matrix bt = transpose(b);
  Matrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < b.cols(); ++c) out(r, c) = f.dot(a.row(r), bt.row(c));
  }
  return out;
}

std::vector<Elem> mat_vec(const FieldCtx& f, const Matrix& a, std::span<const Elem> v) {
  if (a.cols() != v.size()) throw Error(ErrorCode::DimensionMismatch, "vector length differs");
  std::vector<Elem> out(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) out[r] = f.dot(a.row(r), v);
  return out;
}

Matrix mat_pow(const FieldCtx& f, const Matrix& a, std::uint64_t e) {
  if (!a.is_square()) {
    throw Error(ErrorCode::NotSquare, std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
  }
  Matrix result = Matrix::identity(a.rows());
  Matrix base = a;
  while (e > 0) {
    if (e & 1U) result = mat_mul(f, result, base);
    e >>= 1U;
    if (e > 0) base = mat_mul(f, base, base);
  }
  return result;
}

Echelon row_reduce(const FieldCtx& f, Matrix a) {
  Echelon out;
  std::size_t next = 0;
  for (std::size_t c = 0; c < a.cols() && next < a.rows(); ++c) {
    std::size_t pivot = next;
    while (pivot < a.rows() && a(pivot, c).code == 0) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != next) {
      auto rp = a.row(pivot), rn = a.row(next);
      std::swap_ranges(rp.begin(), rp.end(), rn.begin());
    }
    const Elem scale = f.inv(a(next, c));
    for (std::size_t k = c; k < a.cols(); ++k) a(next, k) = f.mul(a(next, k), scale);
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == next) continue;
      const Elem factor = a(r, c);
      if (factor.code == 0) continue;
      for (std::size_t k = c; k < a.cols(); ++k) {
        a(r, k) = f.sub(a(r, k), f.mul(factor, a(next, k)));
      }
    }
    out.pivot_cols.push_back(c);
    ++next;
  }
  out.reduced = std::move(a);
  return out;
}

std::vector<std::vector<Elem>> canonical_basis(const FieldCtx& f,
                                               const std::vector<std::vector<Elem>>& vectors,
                                               std::size_t dim) {
  Matrix m(vectors.size(), dim);
  for (std::size_t r = 0; r < vectors.size(); ++r) {
    if (vectors[r].size() != dim) throw Error(ErrorCode::DimensionMismatch, "vector length differs");
    for (std::size_t c = 0; c < dim; ++c) m(r, c) = vectors[r][c];
  }
  const Echelon ech = row_reduce(f, std::move(m));
  std::vector<std::vector<Elem>> basis;
  basis.reserve(ech.rank());
  for (std::size_t r = 0; r < ech.rank(); ++r) {
    auto row = ech.reduced.row(r);
    basis.emplace_back(row.begin(), row.end());
  }
  return basis;
}

std::vector<std::vector<Elem>> mat_nullspace(const FieldCtx& f, const Matrix& a) {
  const Echelon ech = row_reduce(f, a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : ech.pivot_cols) is_pivot[c] = true;

  std::vector<std::vector<Elem>> kernel;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Elem> v(a.cols());
    v[free] = f.one();
    for (std::size_t r = 0; r < ech.rank(); ++r) v[ech.pivot_cols[r]] = f.neg(ech.reduced(r, free));
    kernel.push_back(std::move(v));
  }
  return canonical_basis(f, kernel, a.cols());
}

Matrix mat_inverse(const FieldCtx& f, const Matrix& a) {
  if (!a.is_square()) throw Error(ErrorCode::NotSquare, "inverse of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return {};
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    aug(r, n + r) = f.one();
  }
  const Echelon ech = row_reduce(f, std::move(aug));
  if (ech.rank() < n || ech.pivot_cols[n - 1] != n - 1) {
    throw Error(ErrorCode::Singular, "matrix is not invertible");
  }
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = ech.reduced(r, n + c);
  }
  return inv;
}

}  // namespace wittcv::ffield
