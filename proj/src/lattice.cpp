#include "prym/lattice.hpp"

#include <algorithm>
#include <string>

namespace prym {

GramLattice::GramLattice(IntMatrix gram, Symmetry symmetry) : gram_(std::move(gram)), symmetry_(symmetry) {
  if (gram_.rows() != gram_.cols())
    throw Error(ErrorCode::DimensionMismatch, "Gram matrix must be square");
  const std::size_t n = gram_.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (symmetry_ == Symmetry::Symmetric && gram_(i, j) != gram_(j, i))
        throw Error(ErrorCode::InvalidArgument, "Gram matrix is not symmetric");
      if (symmetry_ == Symmetry::Skew && gram_(i, j) != -gram_(j, i))
        throw Error(ErrorCode::InvalidArgument, "Gram matrix is not skew-symmetric");
    }
}

GramLattice GramLattice::diagonal(const IntVector& entries) {
  IntMatrix g(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) g(i, i) = entries[i];
  return GramLattice(std::move(g));
}

Integer pair(const GramLattice& lattice, const DivisorClass& u, const DivisorClass& v) {
  const std::size_t n = lattice.rank();
  if (u.size() != n || v.size() != n)
    throw Error(ErrorCode::DimensionMismatch, "class length " + std::to_string(u.size()) + "/" +
                                                  std::to_string(v.size()) + " does not match lattice rank " +
                                                  std::to_string(n));
  const IntMatrix& g = lattice.gram();
  Integer total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (u.coords[i] == 0) continue;
    Integer row = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (g(i, j) == 0 || v.coords[j] == 0) continue;
      row = checkedAdd(row, checkedMul(g(i, j), v.coords[j]));
    }
    total = checkedAdd(total, checkedMul(u.coords[i], row));
  }
  return total;
}

std::size_t SmithForm::rank() const {
  std::size_t r = 0;
  const std::size_t k = std::min(diagonal.rows(), diagonal.cols());
  for (std::size_t i = 0; i < k; ++i)
    if (diagonal(i, i) != 0) ++r;
  return r;
}

namespace {

// Position of the nonzero entry of least absolute value in the trailing block, if any.
bool findPivot(const BigMatrix& d, std::size_t t, std::size_t& pi, std::size_t& pj) {
  bool found = false;
  BigInt best;
  for (std::size_t i = t; i < d.rows(); ++i)
    for (std::size_t j = t; j < d.cols(); ++j) {
      if (d(i, j) == 0) continue;
      BigInt a = abs(d(i, j));
      if (!found || a < best) {
        found = true;
        best = a;
        pi = i;
        pj = j;
      }
    }
  return found;
}

}  // namespace

SmithForm smithNormalForm(const BigMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  SmithForm s{m, BigMatrix::identity(rows), BigMatrix::identity(cols)};
  BigMatrix& d = s.diagonal;
  BigMatrix& u = s.left;
  BigMatrix& v = s.right;

  const std::size_t limit = std::min(rows, cols);
  for (std::size_t t = 0; t < limit; ++t) {
    std::size_t pi = 0, pj = 0;
    if (!findPivot(d, t, pi, pj)) break;
    d.swapRows(t, pi);
    u.swapRows(t, pi);
    d.swapCols(t, pj);
    v.swapCols(t, pj);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (d(i, t) == 0) continue;
        BigInt q = d(i, t) / d(t, t);
        d.addRowMultiple(i, t, -q);
        u.addRowMultiple(i, t, -q);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (d(t, j) == 0) continue;
        BigInt q = d(t, j) / d(t, t);
        d.addColMultiple(j, t, -q);
        v.addColMultiple(j, t, -q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) {
        // A remainder smaller than the pivot survived; promote it and repeat.
        std::size_t bi = t, bj = t;
        BigInt best = abs(d(t, t));
        for (std::size_t i = t + 1; i < rows; ++i)
          if (d(i, t) != 0 && abs(d(i, t)) < best) best = abs(d(i, t)), bi = i, bj = t;
        for (std::size_t j = t + 1; j < cols; ++j)
          if (d(t, j) != 0 && abs(d(t, j)) < best) best = abs(d(t, j)), bi = t, bj = j;
        d.swapRows(t, bi);
        u.swapRows(t, bi);
        d.swapCols(t, bj);
        v.swapCols(t, bj);
        continue;
      }
      bool divisible = true;
      for (std::size_t i = t + 1; i < rows && divisible; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (d(i, j) % d(t, t) != 0) {
            d.addRowMultiple(t, i, 1);
            u.addRowMultiple(t, i, 1);
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    if (d(t, t) < 0) {
      d.negateRow(t);
      u.negateRow(t);
    }
  }
  return s;
}

IntMatrix hermiteRows(const IntMatrix& input) {
  BigMatrix a = toBig(input);
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    // gcd-reduce column c over rows r.. into row r
    for (;;) {
      std::size_t best = rows;
      for (std::size_t i = r; i < rows; ++i)
        if (a(i, c) != 0 && (best == rows || abs(a(i, c)) < abs(a(best, c)))) best = i;
      if (best == rows) break;
      a.swapRows(r, best);
      bool done = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (a(i, c) == 0) continue;
        BigInt q = a(i, c) / a(r, c);
        a.addRowMultiple(i, r, -q);
        if (a(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (a(r, c) == 0) continue;
    if (a(r, c) < 0) a.negateRow(r);
    for (std::size_t i = 0; i < r; ++i) {
      BigInt q;
      mpz_fdiv_q(q.get_mpz_t(), a(i, c).get_mpz_t(), a(r, c).get_mpz_t());
      if (q != 0) a.addRowMultiple(i, r, -q);
    }
    ++r;
  }
  BigMatrix out(r, cols);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = a(i, j);
  return toInt(out);
}

IntMatrix integerKernel(const IntMatrix& m) {
  SmithForm s = smithNormalForm(m);
  const std::size_t n = m.cols();
  const std::size_t r = s.rank();
  IntMatrix basis(n - r, n);
  for (std::size_t k = r; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) basis(k - r, i) = toInteger(s.right(i, k));
  return hermiteRows(basis);
}

std::optional<IntVector> solveInteger(const IntMatrix& m, const IntVector& b) {
  if (b.size() != m.rows()) throw Error(ErrorCode::DimensionMismatch, "right-hand side length differs from row count");
  SmithForm s = smithNormalForm(m);
  const std::size_t r = s.rank();
  std::vector<BigInt> ub(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t k = 0; k < m.rows(); ++k) ub[i] += s.left(i, k) * BigInt(static_cast<long>(b[k]));
  std::vector<BigInt> y(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i < r) {
      if (ub[i] % s.diagonal(i, i) != 0) return std::nullopt;
      y[i] = ub[i] / s.diagonal(i, i);
    } else if (ub[i] != 0) {
      return std::nullopt;
    }
  }
  IntVector x(m.cols());
  for (std::size_t i = 0; i < m.cols(); ++i) {
    BigInt acc = 0;
    for (std::size_t k = 0; k < m.cols(); ++k) acc += s.right(i, k) * y[k];
    x[i] = toInteger(acc);
  }
  return x;
}

DiscriminantData discriminantData(const GramLattice& lattice) {
  const BigMatrix g = toBig(lattice.gram());
  if (determinant(g) == 0) throw Error(ErrorCode::Degenerate, "discriminant data requires a nondegenerate lattice");
  SmithForm s = smithNormalForm(g);
  DiscriminantData out;
  std::vector<std::size_t> positions;
  for (std::size_t i = 0; i < lattice.rank(); ++i) {
    if (s.diagonal(i, i) > 1) {
      out.invariantFactors.push_back(s.diagonal(i, i));
      positions.push_back(i);
    }
  }
  out.isTwoElementary =
      std::all_of(out.invariantFactors.begin(), out.invariantFactors.end(), [](const BigInt& f) { return f == 2; });
  if (!out.isTwoElementary) return out;
  out.a = out.invariantFactors.size();

  // Generators of the dual quotient are the columns V e_i / 2; q(x) = x^T G x.
  int delta = 0;
  for (std::size_t p : positions) {
    BigInt q = 0;
    for (std::size_t i = 0; i < lattice.rank(); ++i)
      for (std::size_t j = 0; j < lattice.rank(); ++j) q += s.right(i, p) * g(i, j) * s.right(j, p);
    Rational value(q, 4);
    value.canonicalize();
    if (value.get_den() != 1) delta = 1;
  }
  out.delta = delta;
  return out;
}

Signature signature(const GramLattice& lattice) {
  if (lattice.symmetry() != Symmetry::Symmetric) throw Error(ErrorCode::InvalidArgument, "signature of a skew form");
  const std::size_t n = lattice.rank();
  RatMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = Rational(static_cast<long>(lattice.gram()(i, j)));

  Signature sig;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, p) == 0) ++p;
    if (p == n) {
      // All remaining diagonal entries vanish: fold an off-diagonal entry onto the diagonal.
      std::size_t fi = n, fj = n;
      for (std::size_t i = k; i < n && fi == n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (a(i, j) != 0) {
            fi = i;
            fj = j;
            break;
          }
      if (fi == n) throw Error(ErrorCode::Degenerate, "signature requires a nondegenerate lattice");
      a.addRowMultiple(fi, fj, 1);
      a.addColMultiple(fi, fj, 1);
      p = fi;
    }
    a.swapRows(k, p);
    a.swapCols(k, p);
    const Rational pivot = a(k, k);
    (pivot > 0 ? sig.positive : sig.negative) += 1;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      Rational f = a(i, k) / pivot;
      a.addRowMultiple(i, k, -f);
      a.addColMultiple(i, k, -f);
    }
  }
  return sig;
}

}  // namespace prym
