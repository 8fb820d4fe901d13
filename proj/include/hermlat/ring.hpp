#pragma once

#include <compare>
#include <ostream>
#include <string>
#include <vector>

#include "hermlat/bigint.hpp"

namespace hermlat {

// Which generator of the ring of integers is used: omega = sqrt(-m) for
// m = 1, 2 (mod 4), omega = (1 + sqrt(-m)) / 2 for m = 3 (mod 4).
enum class OmegaKind { Sqrt, Half };

// The element a + b*omega. Interpretation depends on the ambient Field, which
// is never stored in the element.
struct AlgInt {
  Int a;
  Int b;

  AlgInt() = default;
  AlgInt(Int re) : a(std::move(re)), b(0) {}  // NOLINT: integers embed implicitly
  AlgInt(int re) : a(re), b(0) {}             // NOLINT
  AlgInt(Int re, Int om) : a(std::move(re)), b(std::move(om)) {}

  bool is_zero() const { return a == 0 && b == 0; }
  bool is_rational() const { return b == 0; }

  friend bool operator==(const AlgInt& x, const AlgInt& y) { return x.a == y.a && x.b == y.b; }
  friend bool operator!=(const AlgInt& x, const AlgInt& y) { return !(x == y); }
  // Lexicographic on (a, b).
  friend bool operator<(const AlgInt& x, const AlgInt& y) {
    return x.a < y.a || (x.a == y.a && x.b < y.b);
  }

  friend AlgInt operator+(const AlgInt& x, const AlgInt& y) { return {x.a + y.a, x.b + y.b}; }
  friend AlgInt operator-(const AlgInt& x, const AlgInt& y) { return {x.a - y.a, x.b - y.b}; }
  friend AlgInt operator-(const AlgInt& x) { return {-x.a, -x.b}; }
  friend AlgInt operator*(const Int& k, const AlgInt& x) { return {k * x.a, k * x.b}; }
  AlgInt& operator+=(const AlgInt& y) {
    a += y.a;
    b += y.b;
    return *this;
  }
  AlgInt& operator-=(const AlgInt& y) {
    a -= y.a;
    b -= y.b;
    return *this;
  }
};

// Renders as e.g. "-1+w", "2w", "3".
std::string to_string(const AlgInt& x);
std::ostream& operator<<(std::ostream& os, const AlgInt& x);

// The imaginary quadratic field Q(sqrt(-m)) together with its ring of
// integers Z[omega]. All arithmetic on AlgInt goes through a Field.
class Field {
 public:
  static Field make(std::int64_t m);

  std::int64_t m() const { return m_; }
  OmegaKind omega_kind() const { return kind_; }
  // Field discriminant magnitude: 4m, or m when m = 3 (mod 4).
  std::int64_t discriminant() const { return disc_; }
  // Norm of omega: m, or (1 + m) / 4.
  std::int64_t omega_norm() const { return kind_ == OmegaKind::Sqrt ? m_ : quarter_; }
  // Trace of omega: 0, or 1.
  std::int64_t omega_trace() const { return kind_ == OmegaKind::Sqrt ? 0 : 1; }

  AlgInt omega() const { return AlgInt(Int(0), Int(1)); }

  AlgInt mul(const AlgInt& x, const AlgInt& y) const;
  AlgInt conj(const AlgInt& x) const;
  Int norm(const AlgInt& x) const;
  Int trace(const AlgInt& x) const;

  // x / d if it lies in O.
  bool divides(const AlgInt& d, const AlgInt& x) const;
  AlgInt exact_div(const AlgInt& x, const AlgInt& d) const;

  // All x with norm(x) = n, sorted lexicographically on (a, b).
  std::vector<AlgInt> elements_of_norm(const Int& n) const;
  std::vector<AlgInt> units() const { return elements_of_norm(1); }

  // Whether the ideal generated by the given elements is principal.
  bool is_principal_ideal(const std::vector<AlgInt>& generators) const;
  // Index of the ideal in O (its absolute norm); zero for the zero ideal.
  Int ideal_norm(const std::vector<AlgInt>& generators) const;
  // Whether x lies in the ideal generated by the given elements.
  bool ideal_contains(const std::vector<AlgInt>& generators, const AlgInt& x) const;

  friend bool operator==(const Field& x, const Field& y) { return x.m_ == y.m_; }
  friend bool operator!=(const Field& x, const Field& y) { return x.m_ != y.m_; }

 private:
  Field(std::int64_t m, OmegaKind kind, std::int64_t disc, std::int64_t quarter)
      : m_(m), kind_(kind), disc_(disc), quarter_(quarter) {}

  std::int64_t m_;
  OmegaKind kind_;
  std::int64_t disc_;
  std::int64_t quarter_;  // (1 + m) / 4 when kind_ == Half
};

bool is_square_free(std::int64_t m);

}  // namespace hermlat
