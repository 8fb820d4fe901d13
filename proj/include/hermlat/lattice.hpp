#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <vector>

#include "hermlat/ring.hpp"
#include "hermlat/zlinalg.hpp"

namespace hermlat {

// Coordinates of a lattice vector over the formal generators of a lattice.
using CoordVector = std::vector<AlgInt>;

// Dense row-major matrix over O.
class AlgMatrix {
 public:
  AlgMatrix() = default;
  AlgMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  AlgMatrix(std::initializer_list<std::initializer_list<AlgInt>> rows);
  static AlgMatrix from_rows(const std::vector<CoordVector>& rows, std::size_t cols);
  static AlgMatrix diagonal(const std::vector<Int>& entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  AlgInt& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const AlgInt& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  CoordVector row(std::size_t i) const;
  std::vector<CoordVector> row_list() const;

  friend bool operator==(const AlgMatrix& x, const AlgMatrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.data_ == y.data_;
  }
  friend bool operator!=(const AlgMatrix& x, const AlgMatrix& y) { return !(x == y); }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<AlgInt> data_;
};

AlgMatrix multiply(const Field& field, const AlgMatrix& x, const AlgMatrix& y);
AlgMatrix conjugate_transpose(const Field& field, const AlgMatrix& x);
bool is_hermitian(const Field& field, const AlgMatrix& x);
// Block diagonal sum.
AlgMatrix direct_sum(const AlgMatrix& x, const AlgMatrix& y);
// Exact determinant over O (fraction-free elimination).
AlgInt determinant(const Field& field, const AlgMatrix& x);

enum class Positivity { Definite, Semidefinite, Indefinite };

struct PositivityResult {
  Positivity kind = Positivity::Indefinite;
  std::size_t rank = 0;  // rank over E; meaningful for Definite and Semidefinite

  friend bool operator==(const PositivityResult&, const PositivityResult&) = default;
};

// Restriction of scalars to Z along the basis v_1, w v_1, ..., v_N, w v_N,
// doubled so that entries stay integral: doubled_gram = 2 * Gram of x -> H(x, x).
struct TransferForm {
  std::size_t dim = 0;
  IntMatrix doubled_gram;
};

TransferForm transfer(const Field& field, const AlgMatrix& gram);
PositivityResult is_positive(const Field& field, const AlgMatrix& gram);
// Integer coordinates (a_1, b_1, ..., a_N, b_N) of x_i = a_i + b_i w.
IntVector expand(const CoordVector& x);
CoordVector collapse(const IntVector& z);

// A positive (semi-)definite Hermitian O-lattice given by its (formal) Gram
// matrix. Free lattices have a positive definite Gram on a basis; non-free
// lattices carry one redundant generator and a rank N-1 Gram.
class HermLattice {
 public:
  // Validates Hermitian symmetry, rational diagonal and positivity.
  static HermLattice make(const Field& field, AlgMatrix gram);
  static HermLattice diagonal(const Field& field, const std::vector<Int>& entries);
  static HermLattice zero(const Field& field);

  const Field& field() const { return field_; }
  const AlgMatrix& gram() const { return gram_; }
  std::size_t generators() const { return gram_.rows(); }
  std::size_t rank() const { return rank_; }
  bool pseudo() const { return pseudo_; }

  HermLattice orthogonal_sum(const HermLattice& other) const;

  AlgInt inner(const CoordVector& x, const CoordVector& y) const;
  Int norm(const CoordVector& x) const;

 private:
  HermLattice(Field field, AlgMatrix gram, std::size_t rank, bool pseudo)
      : field_(field), gram_(std::move(gram)), rank_(rank), pseudo_(pseudo) {}

  Field field_;
  AlgMatrix gram_;
  std::size_t rank_;
  bool pseudo_;
};

// k x k matrix of H(rows[p], rows[q]).
AlgMatrix gram_of(const HermLattice& lattice, const std::vector<CoordVector>& rows);

// Every vector of norm t, one coordinate vector per lattice vector, sorted
// lexicographically on the flattened integer coordinates. On a non-free
// lattice coordinates are representatives modulo the radical of the formal
// Gram matrix.
std::vector<CoordVector> vectors_of_norm(const HermLattice& lattice, const Int& t);

// Vectors of each norm 1..t.
std::map<Int, std::vector<CoordVector>> vectors_up_to_norm(const HermLattice& lattice,
                                                           const Int& t);

enum class RadicalPolicy { Quotient, Reject };

// Same as vectors_of_norm for a raw positive semidefinite Gram matrix. With
// RadicalPolicy::Reject a nonzero radical raises InfiniteSolutionSet.
std::vector<CoordVector> vectors_of_norm(const Field& field, const AlgMatrix& gram, const Int& t,
                                         RadicalPolicy policy);

// Basis v1 - v2, ..., v_{N-1} - v_N, v_{N-1} + i v_N of the sublattice of
// even-norm vectors (m = 1, every basis vector of odd norm).
AlgMatrix even_sublattice_basis(std::size_t n);
HermLattice even_sublattice(const HermLattice& lattice);

Int discriminant(const HermLattice& lattice);

// Z-basis of the integer kernel of the transfer form (empty when definite).
std::vector<IntVector> radical_basis(const HermLattice& lattice);

}  // namespace hermlat
