#pragma once

#include <functional>
#include <vector>

#include "hermlat/lattice.hpp"

namespace hermlat::detail {

// Depth-first enumeration of integer points of a positive semidefinite
// integral quadratic form below a bound. The form is first split as
// diag(Q', 0) by a unimodular change of basis, Q' is decomposed as L D L^T
// over Q, and every level bound is evaluated with integers only: all level
// terms are brought to one common denominator so a candidate coordinate y
// satisfies w * (den * y + offset)^2 <= remaining.
class QuadraticEnumerator {
 public:
  explicit QuadraticEnumerator(const IntMatrix& form);

  std::size_t dim() const { return form_.rows(); }
  std::size_t rank() const { return rank_; }
  // Kernel basis of the form, as vectors in the original coordinates.
  const std::vector<IntVector>& kernel() const { return kernel_; }

  // Calls visit(x, value) for every x (one per class modulo the kernel) with
  // 0 < x^T Q x <= bound, or x^T Q x == bound when exact is set.
  void enumerate(const Int& bound, bool exact,
                 const std::function<void(const IntVector&, const Int&)>& visit) const;

 private:
  IntMatrix form_;
  std::size_t rank_ = 0;
  IntMatrix lift_;  // dim x rank: reduced coordinates -> original coordinates
  std::vector<IntVector> kernel_;
  // Per level i (0-based over the reduced form):
  std::vector<Int> level_den_;             // den_i
  std::vector<std::vector<Int>> level_c_;  // c_ji = L_ji * den_i for j > i
  std::vector<Int> level_weight_;          // w_i
  Int scale_;                              // common denominator Lambda
};

}  // namespace hermlat::detail
