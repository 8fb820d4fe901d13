#include "hermlat/ring.hpp"

#include <algorithm>
#include <sstream>

#include "hermlat/zlinalg.hpp"

namespace hermlat {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonSquareFree: return "NonSquareFree";
    case ErrorCode::NonPositive: return "NonPositive";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::DivisorZero: return "DivisorZero";
    case ErrorCode::InfiniteSolutionSet: return "InfiniteSolutionSet";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::PseudoUnsupported: return "PseudoUnsupported";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::NotBinary: return "NotBinary";
    case ErrorCode::NotDefinite: return "NotDefinite";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::UnknownCheck: return "UnknownCheck";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Int isqrt(const Int& n) {
  if (n < 0) throw Error(ErrorCode::NonPositive, "isqrt of negative value");
  Int r = boost::multiprecision::sqrt(n);
  // boost returns the floor root; guard anyway.
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Int ceil_div(const Int& a, const Int& b) { return -floor_div(-a, b); }

std::int64_t to_i64(const Int& v) {
  if (v > Int(INT64_MAX) || v < Int(INT64_MIN)) throw std::overflow_error("integer exceeds 64 bits");
  return v.convert_to<std::int64_t>();
}

std::string to_string(const AlgInt& x) {
  std::ostringstream os;
  if (x.b == 0) {
    os << x.a;
    return os.str();
  }
  if (x.a != 0) os << x.a;
  if (x.b == 1) {
    os << (x.a != 0 ? "+w" : "w");
  } else if (x.b == -1) {
    os << "-w";
  } else {
    if (x.b > 0 && x.a != 0) os << '+';
    os << x.b << 'w';
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const AlgInt& x) { return os << to_string(x); }

bool is_square_free(std::int64_t m) {
  if (m < 1) return false;
  for (std::int64_t p = 2; p * p <= m; ++p)
    if (m % (p * p) == 0) return false;
  return true;
}

Field Field::make(std::int64_t m) {
  if (m < 1) throw Error(ErrorCode::NonPositive, "m must be positive, got " + std::to_string(m));
  if (!is_square_free(m))
    throw Error(ErrorCode::NonSquareFree, "m must be square-free, got " + std::to_string(m));
  if (m % 4 == 3) return Field(m, OmegaKind::Half, m, (1 + m) / 4);
  return Field(m, OmegaKind::Sqrt, 4 * m, 0);
}

AlgInt Field::mul(const AlgInt& x, const AlgInt& y) const {
  Int bd = x.b * y.b;
  if (kind_ == OmegaKind::Sqrt) return {x.a * y.a - m_ * bd, x.a * y.b + x.b * y.a};
  // omega^2 = omega - (1 + m) / 4
  return {x.a * y.a - quarter_ * bd, x.a * y.b + x.b * y.a + bd};
}

AlgInt Field::conj(const AlgInt& x) const {
  if (kind_ == OmegaKind::Sqrt) return {x.a, -x.b};
  return {x.a + x.b, -x.b};
}

Int Field::norm(const AlgInt& x) const {
  if (kind_ == OmegaKind::Sqrt) return x.a * x.a + m_ * x.b * x.b;
  return x.a * x.a + x.a * x.b + quarter_ * x.b * x.b;
}

Int Field::trace(const AlgInt& x) const {
  if (kind_ == OmegaKind::Sqrt) return 2 * x.a;
  return 2 * x.a + x.b;
}

bool Field::divides(const AlgInt& d, const AlgInt& x) const {
  if (d.is_zero()) throw Error(ErrorCode::DivisorZero, "division by zero element");
  AlgInt p = mul(x, conj(d));
  Int n = norm(d);
  return p.a % n == 0 && p.b % n == 0;
}

AlgInt Field::exact_div(const AlgInt& x, const AlgInt& d) const {
  if (!divides(d, x)) throw Error(ErrorCode::PreconditionViolated, "inexact division");
  AlgInt p = mul(x, conj(d));
  Int n = norm(d);
  return {p.a / n, p.b / n};
}

std::vector<AlgInt> Field::elements_of_norm(const Int& n) const {
  std::vector<AlgInt> out;
  if (n < 0) return out;
  if (kind_ == OmegaKind::Sqrt) {
    Int bmax = isqrt(n / m_);
    for (Int b = -bmax; b <= bmax; ++b) {
      Int r = n - m_ * b * b;
      Int s = isqrt(r);
      if (s * s != r) continue;
      out.emplace_back(s, b);
      if (s != 0) out.emplace_back(-s, b);
    }
  } else {
    // 4 N(a + b w) = (2a + b)^2 + m b^2
    Int four_n = 4 * n;
    Int bmax = isqrt(four_n / m_);
    for (Int b = -bmax; b <= bmax; ++b) {
      Int r = four_n - m_ * b * b;
      Int s = isqrt(r);
      if (s * s != r) continue;
      for (const Int& t : {s, Int(-s)}) {
        Int twice_a = t - b;
        if (twice_a % 2 != 0) continue;
        out.emplace_back(twice_a / 2, b);
        if (s == 0) break;
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

ZSpan ideal_span(const Field& field, const std::vector<AlgInt>& generators) {
  ZSpan span(2);
  for (const auto& g : generators) {
    AlgInt gw = field.mul(g, field.omega());
    span.add({g.a, g.b});
    span.add({gw.a, gw.b});
  }
  return span;
}

}  // namespace

Int Field::ideal_norm(const std::vector<AlgInt>& generators) const {
  auto idx = ideal_span(*this, generators).index();
  return idx ? *idx : Int(0);
}

bool Field::ideal_contains(const std::vector<AlgInt>& generators, const AlgInt& x) const {
  return ideal_span(*this, generators).contains({x.a, x.b});
}

bool Field::is_principal_ideal(const std::vector<AlgInt>& generators) const {
  ZSpan span = ideal_span(*this, generators);
  auto idx = span.index();
  if (!idx) return true;  // zero ideal
  for (const auto& x : elements_of_norm(*idx))
    if (span.contains({x.a, x.b})) return true;
  return false;
}

}  // namespace hermlat
