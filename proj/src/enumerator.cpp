#include "enumerator.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace hermlat::detail {

namespace {

using Rational = boost::multiprecision::cpp_rational;

Int round_nearest(const Rational& x) {
  Int num = boost::multiprecision::numerator(x), den = boost::multiprecision::denominator(x);
  return floor_div(2 * num + den, 2 * den);
}

// LLL with delta = 3/4 on a positive definite Gram matrix, exact rationals.
// On return gram = T * gram_in * T^T; rows of T are the new basis.
IntMatrix lll_reduce(IntMatrix& gram) {
  const std::size_t n = gram.rows();
  IntMatrix t = IntMatrix::identity(n);
  if (n < 2) return t;
  std::vector<std::vector<Rational>> mu(n, std::vector<Rational>(n));
  std::vector<Rational> b(n);
  const Rational delta(3, 4);

  auto reduce = [&](std::size_t k, std::size_t l) {
    if (2 * abs(mu[k][l]) <= 1) return;
    Int q = round_nearest(mu[k][l]);
    for (std::size_t j = 0; j < n; ++j) {
      t(k, j) -= q * t(l, j);
      gram(k, j) -= q * gram(l, j);
    }
    for (std::size_t j = 0; j < n; ++j) gram(j, k) = gram(k, j);
    gram(k, k) -= q * gram(l, k);
    mu[k][l] -= Rational(q);
    for (std::size_t i = 0; i < l; ++i) mu[k][i] -= Rational(q) * mu[l][i];
  };

  std::size_t k = 1, kmax = 0;
  b[0] = Rational(gram(0, 0));
  while (k < n) {
    if (k > kmax) {
      kmax = k;
      for (std::size_t j = 0; j < k; ++j) {
        Rational v = Rational(gram(k, j));
        for (std::size_t i = 0; i < j; ++i) v -= mu[j][i] * mu[k][i] * b[i];
        mu[k][j] = v / b[j];
      }
      Rational v = Rational(gram(k, k));
      for (std::size_t j = 0; j < k; ++j) v -= mu[k][j] * mu[k][j] * b[j];
      b[k] = v;
    }
    reduce(k, k - 1);
    if (b[k] < (delta - mu[k][k - 1] * mu[k][k - 1]) * b[k - 1]) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(t(k, j), t(k - 1, j));
        std::swap(gram(k, j), gram(k - 1, j));
      }
      for (std::size_t j = 0; j < n; ++j) std::swap(gram(j, k), gram(j, k - 1));
      for (std::size_t j = 0; j + 1 < k; ++j) std::swap(mu[k][j], mu[k - 1][j]);
      Rational m = mu[k][k - 1];
      Rational bb = b[k] + m * m * b[k - 1];
      mu[k][k - 1] = m * b[k - 1] / bb;
      b[k] = b[k - 1] * b[k] / bb;
      b[k - 1] = bb;
      for (std::size_t i = k + 1; i <= kmax; ++i) {
        Rational x = mu[i][k];
        mu[i][k] = mu[i][k - 1] - m * x;
        mu[i][k - 1] = x + mu[k][k - 1] * mu[i][k];
      }
      if (k > 1) --k;
      continue;
    }
    for (std::size_t l = k - 1; l-- > 0;) reduce(k, l);
    ++k;
  }
  return t;
}

}  // namespace

QuadraticEnumerator::QuadraticEnumerator(const IntMatrix& form) : form_(form) {
  const std::size_t n = form.rows();
  RowEchelon ech = row_echelon(form);
  rank_ = ech.rank;

  IntMatrix reduced;
  if (rank_ == n) {
    lift_ = IntMatrix::identity(n);
    reduced = form;
  } else {
    // U * Q = E with U unimodular; since Q is symmetric, Q * U^T = E^T, so the
    // last n - rank rows of U span the integer kernel and the first rows give
    // a complement.
    IntMatrix top(rank_, n);
    for (std::size_t i = 0; i < rank_; ++i)
      for (std::size_t j = 0; j < n; ++j) top(i, j) = ech.transform(i, j);
    for (std::size_t i = rank_; i < n; ++i) kernel_.push_back(ech.transform.row(i));
    lift_ = top.transpose();
    reduced = top * form * lift_;
  }

  // A unimodular change of the reduced basis keeps the search tree small
  // when the complement of the kernel comes out skewed.
  IntMatrix change = lll_reduce(reduced);
  lift_ = lift_ * change.transpose();

  const std::size_t r = rank_;
  std::vector<std::vector<Rational>> lower(r, std::vector<Rational>(r));
  std::vector<Rational> diag(r);
  for (std::size_t i = 0; i < r; ++i) {
    Rational d = Rational(reduced(i, i));
    for (std::size_t k = 0; k < i; ++k) d -= lower[i][k] * lower[i][k] * diag[k];
    if (d <= 0) throw Error(ErrorCode::NotDefinite, "reduced form is not positive definite");
    diag[i] = d;
    for (std::size_t j = i + 1; j < r; ++j) {
      Rational v = Rational(reduced(j, i));
      for (std::size_t k = 0; k < i; ++k) v -= lower[j][k] * lower[i][k] * diag[k];
      lower[j][i] = v / d;
    }
  }

  level_den_.assign(r, Int(1));
  level_c_.assign(r, std::vector<Int>(r));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i + 1; j < r; ++j)
      level_den_[i] = boost::multiprecision::lcm(level_den_[i], boost::multiprecision::denominator(lower[j][i]));
    for (std::size_t j = i + 1; j < r; ++j) {
      Rational c = lower[j][i] * Rational(level_den_[i]);
      level_c_[i][j] = boost::multiprecision::numerator(c);
    }
  }
  scale_ = 1;
  for (std::size_t i = 0; i < r; ++i)
    scale_ = boost::multiprecision::lcm(scale_, boost::multiprecision::denominator(diag[i]) * level_den_[i] * level_den_[i]);
  level_weight_.resize(r);
  for (std::size_t i = 0; i < r; ++i) {
    Rational w = diag[i] * Rational(scale_) / Rational(level_den_[i] * level_den_[i]);
    level_weight_[i] = boost::multiprecision::numerator(w);
  }
}

void QuadraticEnumerator::enumerate(
    const Int& bound, bool exact,
    const std::function<void(const IntVector&, const Int&)>& visit) const {
  const std::size_t r = rank_;
  if (r == 0 || bound <= 0) return;
  const Int total = bound * scale_;
  IntVector y(r);

  std::function<void(std::size_t, const Int&)> descend = [&](std::size_t level, const Int& remaining) {
    Int offset = 0;
    for (std::size_t j = level + 1; j < r; ++j)
      if (y[j] != 0) offset += level_c_[level][j] * y[j];
    const Int& den = level_den_[level];
    Int s = isqrt(remaining / level_weight_[level]);
    Int lo = ceil_div(-s - offset, den);
    Int hi = floor_div(s - offset, den);
    for (Int v = lo; v <= hi; ++v) {
      Int z = den * v + offset;
      Int rest = remaining - level_weight_[level] * z * z;
      if (rest < 0) continue;
      y[level] = v;
      if (level == 0) {
        Int value = (total - rest) / scale_;
        if (value == 0 || (exact && value != bound)) continue;
        visit(lift_ * y, value);
      } else {
        descend(level - 1, rest);
      }
    }
    y[level] = 0;
  };
  descend(r - 1, total);
}

}  // namespace hermlat::detail
