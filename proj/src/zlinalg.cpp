#include "hermlat/zlinalg.hpp"

#include <utility>

namespace hermlat {

namespace {

// g = s*x + t*y with g = gcd(x, y) >= 0.
void extended_gcd(const Int& x, const Int& y, Int& g, Int& s, Int& t) {
  Int r0 = x, r1 = y, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (r1 != 0) {
    Int q = r0 / r1;
    Int tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = s0 - q * s1;
    s0 = s1;
    s1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (r0 < 0) {
    r0 = -r0;
    s0 = -s0;
    t0 = -t0;
  }
  g = r0;
  s = s0;
  t = t0;
}

}  // namespace

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = 1;
  return out;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
  IntMatrix out(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = rows[i].at(j);
  return out;
}

IntVector IntMatrix::row(std::size_t i) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  IntMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int& x = (*this)(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) out(i, j) += x * other(k, j);
    }
  return out;
}

IntVector IntMatrix::operator*(const IntVector& v) const {
  IntVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
  return out;
}

RowEchelon row_echelon(const IntMatrix& input) {
  const std::size_t n = input.rows(), cols = input.cols();
  RowEchelon out{input, IntMatrix::identity(n), 0};
  IntMatrix& e = out.echelon;
  IntMatrix& u = out.transform;

  auto combine = [&](IntMatrix& m, std::size_t p, std::size_t q, const Int& a, const Int& b,
                     const Int& c, const Int& d) {
    // (row p, row q) <- (a*p + b*q, c*p + d*q)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Int x = m(p, j), y = m(q, j);
      m(p, j) = a * x + b * y;
      m(q, j) = c * x + d * y;
    }
  };

  std::size_t k = 0;
  for (std::size_t col = 0; col < cols && k < n; ++col) {
    for (std::size_t i = k + 1; i < n; ++i) {
      if (e(i, col) == 0) continue;
      if (e(k, col) == 0) {
        combine(e, k, i, 0, 1, 1, 0);
        combine(u, k, i, 0, 1, 1, 0);
        continue;
      }
      Int g, s, t;
      extended_gcd(e(k, col), e(i, col), g, s, t);
      Int a = e(k, col) / g, b = e(i, col) / g;
      // [[s, t], [-b, a]] has determinant s*a + t*b = 1.
      combine(e, k, i, s, t, -b, a);
      combine(u, k, i, s, t, -b, a);
    }
    if (e(k, col) != 0) ++k;
  }
  out.rank = k;
  return out;
}

void ZSpan::add(IntVector v) {
  for (std::size_t c = 0; c < dim_; ++c) {
    if (v[c] == 0) continue;
    if (!pivots_[c]) {
      if (v[c] < 0)
        for (auto& x : v) x = -x;
      pivots_[c] = std::move(v);
      return;
    }
    IntVector& p = *pivots_[c];
    Int g, s, t;
    extended_gcd(p[c], v[c], g, s, t);
    Int a = p[c] / g, b = v[c] / g;
    IntVector new_pivot(dim_), rest(dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
      new_pivot[j] = s * p[j] + t * v[j];
      rest[j] = a * v[j] - b * p[j];
    }
    p = std::move(new_pivot);
    v = std::move(rest);
  }
}

std::size_t ZSpan::rank() const {
  std::size_t r = 0;
  for (const auto& p : pivots_) r += p.has_value();
  return r;
}

bool ZSpan::contains(IntVector v) const {
  for (std::size_t c = 0; c < dim_; ++c) {
    if (v[c] == 0) continue;
    if (!pivots_[c]) return false;
    const IntVector& p = *pivots_[c];
    if (v[c] % p[c] != 0) return false;
    Int q = v[c] / p[c];
    for (std::size_t j = c; j < dim_; ++j) v[j] -= q * p[j];
  }
  return true;
}

std::optional<Int> ZSpan::index() const {
  Int idx = 1;
  for (std::size_t c = 0; c < dim_; ++c) {
    if (!pivots_[c]) return std::nullopt;
    idx *= (*pivots_[c])[c];
  }
  return idx;
}

std::vector<IntVector> ZSpan::basis() const {
  std::vector<IntVector> rows;
  for (const auto& p : pivots_)
    if (p) rows.push_back(*p);
  // Reduce entries above pivots, bottom-up.
  for (std::size_t i = rows.size(); i-- > 0;) {
    std::size_t c = 0;
    while (rows[i][c] == 0) ++c;
    for (std::size_t k = 0; k < i; ++k) {
      Int q = floor_div(rows[k][c], rows[i][c]);
      if (q == 0) continue;
      for (std::size_t j = c; j < dim_; ++j) rows[k][j] -= q * rows[i][j];
    }
  }
  return rows;
}

}  // namespace hermlat
