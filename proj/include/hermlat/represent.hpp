#pragma once

#include <map>
#include <optional>
#include <vector>

#include "hermlat/lattice.hpp"

namespace hermlat {

// Rows X with X * M_L * X^* equal to the Gram matrix of the represented lattice.
struct Witness {
  AlgMatrix rows;
};

// Exact check of X * M * X^* == target. Throws ShapeMismatch when X is not
// target-rows by gram-rows.
bool verify_witness(const Field& field, const AlgMatrix& target, const AlgMatrix& gram,
                    const AlgMatrix& rows);

// Searches witnesses for many targets against one fixed lattice, caching the
// vectors of each norm that has been asked for.
class RepresentationSearch {
 public:
  explicit RepresentationSearch(HermLattice lattice);

  const HermLattice& lattice() const { return lattice_; }

  // Exhaustive: std::nullopt proves that no witness exists.
  std::optional<Witness> find(const HermLattice& target);
  std::optional<Witness> find(const AlgMatrix& target_gram);

  // Number of vectors of norm t (modulo the radical on non-free lattices).
  std::size_t count(const Int& t);

 private:
  struct Candidate {
    CoordVector coords;
    CoordVector covector;  // M_L * conj(coords), so H(x, coords) = sum x_i covector_i
  };
  const std::vector<Candidate>& candidates(const Int& t);

  HermLattice lattice_;
  std::map<Int, std::vector<Candidate>> cache_;
};

std::optional<Witness> represents(const HermLattice& target, const HermLattice& lattice);

// Rank and the number of vectors of each norm up to a small bound. Equal
// signatures are necessary for isometry.
std::vector<Int> isometry_signature(const HermLattice& lattice);

// Isometric iff each represents the other and the ranks agree.
bool is_isometric(const HermLattice& x, const HermLattice& y);

// Indices of one lattice per isometry class, keeping the earliest index of
// each class, in increasing order.
std::vector<std::size_t> isometry_representatives(const std::vector<HermLattice>& lattices,
                                                  unsigned jobs = 1);

}  // namespace hermlat
