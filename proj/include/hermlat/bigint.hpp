#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace hermlat {

using Int = boost::multiprecision::cpp_int;

enum class ErrorCode {
  NonSquareFree,
  NonPositive,
  FieldMismatch,
  DivisorZero,
  InfiniteSolutionSet,
  PreconditionViolated,
  PseudoUnsupported,
  ShapeMismatch,
  NotBinary,
  NotDefinite,
  NotHermitian,
  UnknownCheck,
  ParseError,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Floor of the square root of a nonnegative integer.
Int isqrt(const Int& n);

Int floor_div(const Int& a, const Int& b);
Int ceil_div(const Int& a, const Int& b);

// Exact for |v| < 2^63; throws otherwise.
std::int64_t to_i64(const Int& v);

}  // namespace hermlat
