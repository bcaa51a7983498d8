#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace prym {

using Integer = std::int64_t;
using BigInt = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;

enum class ErrorCode {
  DimensionMismatch,
  Degenerate,
  Overflow,
  InvalidArgument,
  Unsupported,
  NotRealizable,
  NotEffective,
  NotAmple,
  Inconsistent,
  Io,
};

const char* describe(ErrorCode code);

/// Structured failure raised by every module; `code()` is stable for callers.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline Integer checkedAdd(Integer a, Integer b) {
  Integer r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "integer overflow in addition");
  return r;
}

inline Integer checkedSub(Integer a, Integer b) {
  Integer r;
  if (__builtin_sub_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "integer overflow in subtraction");
  return r;
}

inline Integer checkedMul(Integer a, Integer b) {
  Integer r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "integer overflow in multiplication");
  return r;
}

/// Narrow an exact value to Integer, failing loudly if it does not fit.
Integer toInteger(const BigInt& value);
Integer toInteger(const Rational& value);

// Componentwise helpers on coordinate vectors.
IntVector add(const IntVector& u, const IntVector& v);
IntVector subtract(const IntVector& u, const IntVector& v);
IntVector scale(Integer s, const IntVector& v);
bool isZero(const IntVector& v);

std::string formatVector(const IntVector& v);

}  // namespace prym
