#include "prym/arith.hpp"

#include <sstream>

#include "prym/matrix.hpp"

namespace prym {

const char* describe(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "dimension-mismatch";
    case ErrorCode::Degenerate: return "degenerate";
    case ErrorCode::Overflow: return "overflow";
    case ErrorCode::InvalidArgument: return "invalid-argument";
    case ErrorCode::Unsupported: return "unsupported";
    case ErrorCode::NotRealizable: return "not-realizable";
    case ErrorCode::NotEffective: return "not-effective";
    case ErrorCode::NotAmple: return "not-ample";
    case ErrorCode::Inconsistent: return "inconsistent";
    case ErrorCode::Io: return "io";
  }
  return "unknown";
}

Integer toInteger(const BigInt& value) {
  if (!value.fits_slong_p()) throw Error(ErrorCode::Overflow, "value does not fit in 64 bits: " + value.get_str());
  return static_cast<Integer>(value.get_si());
}

Integer toInteger(const Rational& value) {
  if (value.get_den() != 1) throw Error(ErrorCode::InvalidArgument, "non-integral rational " + value.get_str());
  return toInteger(BigInt(value.get_num()));
}

IntVector add(const IntVector& u, const IntVector& v) {
  if (u.size() != v.size()) throw Error(ErrorCode::DimensionMismatch, "vector sizes differ");
  IntVector r(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) r[i] = checkedAdd(u[i], v[i]);
  return r;
}

IntVector subtract(const IntVector& u, const IntVector& v) {
  if (u.size() != v.size()) throw Error(ErrorCode::DimensionMismatch, "vector sizes differ");
  IntVector r(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) r[i] = checkedSub(u[i], v[i]);
  return r;
}

IntVector scale(Integer s, const IntVector& v) {
  IntVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = checkedMul(s, v[i]);
  return r;
}

bool isZero(const IntVector& v) {
  for (Integer x : v)
    if (x != 0) return false;
  return true;
}

std::string formatVector(const IntVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

BigMatrix toBig(const IntMatrix& m) {
  BigMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = BigInt(static_cast<long>(m(i, j)));
  return r;
}

IntMatrix toInt(const BigMatrix& m) {
  IntMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = toInteger(m(i, j));
  return r;
}

IntMatrix multiplyChecked(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::DimensionMismatch, "matrix product: inner dimensions differ");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Integer s = 0;
      for (std::size_t k = 0; k < a.cols(); ++k) s = checkedAdd(s, checkedMul(a(i, k), b(k, j)));
      c(i, j) = s;
    }
  return c;
}

IntVector multiplyChecked(const IntMatrix& a, const IntVector& v) {
  if (a.cols() != v.size()) throw Error(ErrorCode::DimensionMismatch, "matrix-vector product: sizes differ");
  IntVector r(a.rows(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) r[i] = checkedAdd(r[i], checkedMul(a(i, k), v[k]));
  return r;
}

BigInt determinant(const BigMatrix& input) {
  if (input.rows() != input.cols()) throw Error(ErrorCode::DimensionMismatch, "determinant of a non-square matrix");
  const std::size_t n = input.rows();
  if (n == 0) return 1;
  BigMatrix m = input;
  BigInt sign = 1;
  BigInt previous = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swapRows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j));
        mpz_divexact(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(), previous.get_mpz_t());
      }
    previous = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

}  // namespace prym
