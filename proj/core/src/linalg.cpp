#include "mthv/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace mthv {

RationalMatrix RationalMatrix::from_rows(const std::vector<RationalVector>& rows, std::size_t cols) {
  RationalMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

RationalMatrix RationalMatrix::from_columns(const std::vector<RationalVector>& columns, std::size_t rows) {
  RationalMatrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw std::invalid_argument("column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalVector RationalMatrix::row(std::size_t i) const {
  return RationalVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                        data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

RationalVector RationalMatrix::apply(std::span<const Scalar> v) const {
  if (v.size() != cols_) throw std::invalid_argument("dimension mismatch in matrix-vector product");
  RationalVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Scalar acc = 0;
    for (std::size_t j = 0; j < cols_; ++j) {
      if (sgn((*this)(i, j)) != 0 && sgn(v[j]) != 0) acc += (*this)(i, j) * v[j];
    }
    out[i] = acc;
  }
  return out;
}

Echelon row_echelon(const RationalMatrix& m, std::span<const std::size_t> column_order) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::size_t> order(column_order.begin(), column_order.end());
  if (order.empty()) {
    order.resize(cols);
    std::iota(order.begin(), order.end(), std::size_t{0});
  }
  if (order.size() != cols) throw std::invalid_argument("column order has wrong length");

  // Clear denominators row by row so elimination runs over Z.
  std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    mpz_class lcm = 1;
    for (std::size_t j = 0; j < cols; ++j) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = m(i, j).get_num() * (lcm / m(i, j).get_den());
  }

  // Fraction-free forward elimination: every entry stays an integer minor of
  // the input and the division by the previous pivot is exact.
  std::vector<std::size_t> pivots;
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t oc = 0; oc < cols && r < rows; ++oc) {
    const std::size_t col = order[oc];
    std::size_t piv = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (sgn(a[i][col]) != 0) {
        piv = i;
        break;
      }
    }
    if (piv == rows) continue;
    std::swap(a[r], a[piv]);
    const mpz_class p = a[r][col];
    for (std::size_t i = r + 1; i < rows; ++i) {
      const mpz_class f = a[i][col];
      for (std::size_t oj = oc; oj < cols; ++oj) {
        const std::size_t j = order[oj];
        mpz_class t = a[i][j] * p - f * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      // Columns skipped earlier in the order are already zero below row r.
    }
    prev = p;
    pivots.push_back(col);
    ++r;
  }

  // Back-substitution to reduced form over Q.
  Echelon e;
  e.rref = RationalMatrix(rows, cols);
  e.pivots = pivots;
  const std::size_t rk = pivots.size();
  std::vector<RationalVector> red(rk, RationalVector(cols));
  for (std::size_t i = 0; i < rk; ++i) {
    const mpz_class& p = a[i][pivots[i]];
    for (std::size_t j = 0; j < cols; ++j) {
      if (sgn(a[i][j]) != 0) {
        red[i][j] = Scalar(a[i][j], p);
        red[i][j].canonicalize();
      }
    }
  }
  for (std::size_t i = rk; i-- > 0;) {
    for (std::size_t k = 0; k < i; ++k) {
      const Scalar f = red[k][pivots[i]];
      if (f == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) {
        if (sgn(red[i][j]) != 0) red[k][j] -= f * red[i][j];
      }
    }
  }
  for (std::size_t i = 0; i < rk; ++i) {
    for (std::size_t j = 0; j < cols; ++j) e.rref(i, j) = red[i][j];
  }
  return e;
}

std::size_t rank(const RationalMatrix& m) { return row_echelon(m).rank(); }

std::vector<RationalVector> kernel(const RationalMatrix& m) {
  const Echelon e = row_echelon(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;
  std::vector<RationalVector> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RationalVector v(cols);
    v[f] = 1;
    for (std::size_t i = 0; i < e.rank(); ++i) v[e.pivots[i]] = -e.rref(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RationalVector> member(std::span<const Scalar> target, const std::vector<RationalVector>& span) {
  const std::size_t n = target.size();
  for (const auto& v : span) {
    if (v.size() != n) throw std::invalid_argument("dimension mismatch between target and spanning vectors");
  }
  const std::size_t k = span.size();
  // Augmented system [span | target]; target is in the span iff the last
  // column carries no pivot.
  RationalMatrix aug(n, k + 1);
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = 0; i < n; ++i) aug(i, j) = span[j][i];
  }
  for (std::size_t i = 0; i < n; ++i) aug(i, k) = target[i];
  const Echelon e = row_echelon(aug);
  if (!e.pivots.empty() && e.pivots.back() == k) return std::nullopt;
  RationalVector x(k);
  for (std::size_t i = 0; i < e.rank(); ++i) x[e.pivots[i]] = e.rref(i, k);
  return x;
}

// ---------------------------------------------------------------------------

SubspaceReducer::SubspaceReducer(std::size_t dim, std::vector<std::size_t> column_order)
    : dim_(dim), order_(std::move(column_order)) {
  if (order_.empty()) {
    order_.resize(dim);
    std::iota(order_.begin(), order_.end(), std::size_t{0});
  }
  if (order_.size() != dim) throw std::invalid_argument("column order has wrong length");
}

RationalVector SubspaceReducer::reduce(RationalVector v) const {
  if (v.size() != dim_) throw std::invalid_argument("dimension mismatch in SubspaceReducer");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Scalar f = v[pivots_[i]];
    if (f == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (sgn(rows_[i][j]) != 0) v[j] -= f * rows_[i][j];
    }
  }
  return v;
}

bool SubspaceReducer::contains(const RationalVector& v) const {
  const RationalVector r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](const Scalar& x) { return sgn(x) == 0; });
}

bool SubspaceReducer::insert(const RationalVector& v) {
  RationalVector r = reduce(v);
  std::size_t pivot = dim_;
  for (std::size_t c : order_) {
    if (sgn(r[c]) != 0) {
      pivot = c;
      break;
    }
  }
  if (pivot == dim_) return false;
  const Scalar inv = 1 / r[pivot];
  for (auto& x : r) x *= inv;
  // Keep stored rows fully reduced against the new pivot.
  for (auto& row : rows_) {
    const Scalar f = row[pivot];
    if (f == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (sgn(r[j]) != 0) row[j] -= f * r[j];
    }
  }
  rows_.push_back(std::move(r));
  pivots_.push_back(pivot);
  return true;
}

}  // namespace mthv
