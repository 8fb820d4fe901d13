#include "hermlat/lattice.hpp"

#include <algorithm>

#include <boost/multiprecision/cpp_int.hpp>

#include "enumerator.hpp"

namespace hermlat {

using Rational = boost::multiprecision::cpp_rational;

AlgMatrix::AlgMatrix(std::initializer_list<std::initializer_list<AlgInt>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorCode::ShapeMismatch, "ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

AlgMatrix AlgMatrix::from_rows(const std::vector<CoordVector>& rows, std::size_t cols) {
  AlgMatrix out(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error(ErrorCode::ShapeMismatch, "row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = rows[i][j];
  }
  return out;
}

AlgMatrix AlgMatrix::diagonal(const std::vector<Int>& entries) {
  AlgMatrix out(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) out(i, i) = entries[i];
  return out;
}

CoordVector AlgMatrix::row(std::size_t i) const {
  return CoordVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

std::vector<CoordVector> AlgMatrix::row_list() const {
  std::vector<CoordVector> out;
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

AlgMatrix multiply(const Field& field, const AlgMatrix& x, const AlgMatrix& y) {
  if (x.cols() != y.rows()) throw Error(ErrorCode::ShapeMismatch, "matrix product shape");
  AlgMatrix out(x.rows(), y.cols());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t k = 0; k < x.cols(); ++k) {
      if (x(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < y.cols(); ++j) out(i, j) += field.mul(x(i, k), y(k, j));
    }
  return out;
}

AlgMatrix conjugate_transpose(const Field& field, const AlgMatrix& x) {
  AlgMatrix out(x.cols(), x.rows());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) out(j, i) = field.conj(x(i, j));
  return out;
}

bool is_hermitian(const Field& field, const AlgMatrix& x) {
  if (!x.square()) return false;
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = i; j < x.cols(); ++j)
      if (x(i, j) != field.conj(x(j, i))) return false;
  return true;
}

AlgMatrix direct_sum(const AlgMatrix& x, const AlgMatrix& y) {
  AlgMatrix out(x.rows() + y.rows(), x.cols() + y.cols());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) out(i, j) = x(i, j);
  for (std::size_t i = 0; i < y.rows(); ++i)
    for (std::size_t j = 0; j < y.cols(); ++j) out(x.rows() + i, x.cols() + j) = y(i, j);
  return out;
}

AlgInt determinant(const Field& field, const AlgMatrix& x) {
  if (!x.square()) throw Error(ErrorCode::ShapeMismatch, "determinant of non-square matrix");
  const std::size_t n = x.rows();
  if (n == 0) return AlgInt(1);
  AlgMatrix a = x;
  AlgInt prev(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k).is_zero()) {
      std::size_t p = k + 1;
      while (p < n && a(p, k).is_zero()) ++p;
      if (p == n) return AlgInt(0);
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        AlgInt v = field.mul(a(k, k), a(i, j)) - field.mul(a(i, k), a(k, j));
        a(i, j) = field.exact_div(v, prev);
      }
      a(i, k) = AlgInt(0);
    }
    prev = a(k, k);
  }
  AlgInt d = a(n - 1, n - 1);
  return negate ? -d : d;
}

TransferForm transfer(const Field& field, const AlgMatrix& gram) {
  const std::size_t n = gram.rows();
  TransferForm out{2 * n, IntMatrix(2 * n, 2 * n)};
  const AlgInt basis[2] = {AlgInt(1), field.omega()};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (int s = 0; s < 2; ++s)
        for (int r = 0; r < 2; ++r) {
          AlgInt v = field.mul(field.mul(basis[s], gram(i, j)), field.conj(basis[r]));
          out.doubled_gram(2 * i + s, 2 * j + r) = field.trace(v);
        }
  return out;
}

PositivityResult is_positive(const Field& field, const AlgMatrix& gram) {
  if (!is_hermitian(field, gram)) return {Positivity::Indefinite, 0};
  TransferForm tf = transfer(field, gram);
  const std::size_t n = tf.dim;
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(tf.doubled_gram(i, j));

  // Symmetric elimination: pivot on the diagonal only. A negative diagonal,
  // or a zero diagonal with a nonzero entry in its row, certifies an
  // indefinite form.
  std::vector<bool> done(n, false);
  std::size_t rank = 0;
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t p = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i]) continue;
      if (a[i][i] < 0) return {Positivity::Indefinite, 0};
      if (a[i][i] > 0 && p == n) p = i;
    }
    if (p == n) {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (!done[i] && !done[j] && a[i][j] != 0) return {Positivity::Indefinite, 0};
      break;
    }
    done[p] = true;
    ++rank;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i] || a[i][p] == 0) continue;
      Rational f = a[i][p] / a[p][p];
      for (std::size_t j = 0; j < n; ++j)
        if (!done[j]) a[i][j] -= f * a[p][j];
      a[i][p] = 0;
    }
  }
  if (rank == n) return {Positivity::Definite, rank / 2};
  return {Positivity::Semidefinite, rank / 2};
}

IntVector expand(const CoordVector& x) {
  IntVector out;
  out.reserve(2 * x.size());
  for (const auto& e : x) {
    out.push_back(e.a);
    out.push_back(e.b);
  }
  return out;
}

CoordVector collapse(const IntVector& z) {
  CoordVector out(z.size() / 2);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = AlgInt(z[2 * i], z[2 * i + 1]);
  return out;
}

HermLattice HermLattice::make(const Field& field, AlgMatrix gram) {
  if (!gram.square()) throw Error(ErrorCode::ShapeMismatch, "Gram matrix must be square");
  if (!is_hermitian(field, gram)) throw Error(ErrorCode::NotHermitian, "Gram matrix is not Hermitian");
  const std::size_t n = gram.rows();
  if (n == 0) return HermLattice(field, std::move(gram), 0, false);
  PositivityResult pos = is_positive(field, gram);
  if (pos.kind == Positivity::Definite) return HermLattice(field, std::move(gram), n, false);
  if (pos.kind == Positivity::Semidefinite && pos.rank + 1 == n)
    return HermLattice(field, std::move(gram), n - 1, true);
  throw Error(ErrorCode::NotDefinite,
              "Gram matrix is neither positive definite nor a formal Gram of corank one");
}

HermLattice HermLattice::diagonal(const Field& field, const std::vector<Int>& entries) {
  return make(field, AlgMatrix::diagonal(entries));
}

HermLattice HermLattice::zero(const Field& field) { return HermLattice(field, AlgMatrix(), 0, false); }

HermLattice HermLattice::orthogonal_sum(const HermLattice& other) const {
  if (field_ != other.field_) throw Error(ErrorCode::FieldMismatch, "orthogonal sum across fields");
  return make(field_, direct_sum(gram_, other.gram_));
}

AlgInt HermLattice::inner(const CoordVector& x, const CoordVector& y) const {
  const std::size_t n = generators();
  if (x.size() != n || y.size() != n) throw Error(ErrorCode::ShapeMismatch, "coordinate length");
  AlgInt out;
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    AlgInt row;
    for (std::size_t j = 0; j < n; ++j)
      if (!y[j].is_zero()) row += field_.mul(gram_(i, j), field_.conj(y[j]));
    out += field_.mul(x[i], row);
  }
  return out;
}

Int HermLattice::norm(const CoordVector& x) const { return inner(x, x).a; }

AlgMatrix gram_of(const HermLattice& lattice, const std::vector<CoordVector>& rows) {
  AlgMatrix out(rows.size(), rows.size());
  for (std::size_t p = 0; p < rows.size(); ++p)
    for (std::size_t q = p; q < rows.size(); ++q) {
      out(p, q) = lattice.inner(rows[p], rows[q]);
      out(q, p) = lattice.field().conj(out(p, q));
    }
  return out;
}

namespace {

void sort_vectors(std::vector<CoordVector>& vs) {
  std::sort(vs.begin(), vs.end(),
            [](const CoordVector& x, const CoordVector& y) { return expand(x) < expand(y); });
}

std::vector<CoordVector> enumerate_norm(const Field& field, const AlgMatrix& gram, const Int& t,
                                        RadicalPolicy policy) {
  const std::size_t n = gram.rows();
  if (t < 0) return {};
  detail::QuadraticEnumerator en(transfer(field, gram).doubled_gram);
  if (policy == RadicalPolicy::Reject && !en.kernel().empty())
    throw Error(ErrorCode::InfiniteSolutionSet, "form has a nonzero radical");
  if (t == 0) return {CoordVector(n)};
  std::vector<CoordVector> out;
  en.enumerate(2 * t, true, [&](const IntVector& z, const Int&) { out.push_back(collapse(z)); });
  sort_vectors(out);
  return out;
}

}  // namespace

std::vector<CoordVector> vectors_of_norm(const HermLattice& lattice, const Int& t) {
  return enumerate_norm(lattice.field(), lattice.gram(), t, RadicalPolicy::Quotient);
}

std::vector<CoordVector> vectors_of_norm(const Field& field, const AlgMatrix& gram, const Int& t,
                                         RadicalPolicy policy) {
  if (!is_hermitian(field, gram)) throw Error(ErrorCode::NotHermitian, "Gram matrix is not Hermitian");
  if (is_positive(field, gram).kind == Positivity::Indefinite)
    throw Error(ErrorCode::NotDefinite, "Gram matrix is indefinite");
  return enumerate_norm(field, gram, t, policy);
}

std::map<Int, std::vector<CoordVector>> vectors_up_to_norm(const HermLattice& lattice, const Int& t) {
  std::map<Int, std::vector<CoordVector>> out;
  if (t < 1) return out;
  detail::QuadraticEnumerator en(transfer(lattice.field(), lattice.gram()).doubled_gram);
  en.enumerate(2 * t, false, [&](const IntVector& z, const Int& value) {
    out[value / 2].push_back(collapse(z));
  });
  for (auto& [norm, vs] : out) sort_vectors(vs);
  return out;
}

AlgMatrix even_sublattice_basis(std::size_t n) {
  if (n < 2) throw Error(ErrorCode::PreconditionViolated, "even sublattice needs at least two generators");
  AlgMatrix x(n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    x(i, i) = AlgInt(1);
    x(i, i + 1) = AlgInt(-1);
  }
  x(n - 1, n - 2) = AlgInt(1);
  x(n - 1, n - 1) = AlgInt(Int(0), Int(1));
  return x;
}

HermLattice even_sublattice(const HermLattice& lattice) {
  const Field& f = lattice.field();
  if (f.m() != 1) throw Error(ErrorCode::PreconditionViolated, "even sublattice requires m = 1");
  if (lattice.pseudo()) throw Error(ErrorCode::PreconditionViolated, "even sublattice requires a free lattice");
  const std::size_t n = lattice.generators();
  for (std::size_t i = 0; i < n; ++i)
    if (lattice.gram()(i, i).a % 2 == 0)
      throw Error(ErrorCode::PreconditionViolated, "every basis vector must have odd norm");
  AlgMatrix x = even_sublattice_basis(n);
  return HermLattice::make(f, gram_of(lattice, x.row_list()));
}

Int discriminant(const HermLattice& lattice) {
  if (lattice.pseudo()) throw Error(ErrorCode::PseudoUnsupported, "discriminant of a non-free lattice");
  AlgInt d = determinant(lattice.field(), lattice.gram());
  if (!d.is_rational()) throw Error(ErrorCode::PreconditionViolated, "determinant is not rational");
  return d.a;
}

std::vector<IntVector> radical_basis(const HermLattice& lattice) {
  if (!lattice.pseudo()) return {};
  detail::QuadraticEnumerator en(transfer(lattice.field(), lattice.gram()).doubled_gram);
  return en.kernel();
}

}  // namespace hermlat
