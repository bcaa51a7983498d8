#include "prym/level_set.hpp"

#include <algorithm>
#include <functional>

namespace prym {

namespace {

BigInt floorOf(const Rational& q) {
  BigInt r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

BigInt ceilOf(const Rational& q) {
  BigInt r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

// Integer interval of y with (y - centre)^2 <= bound, computed without rounding error.
std::pair<BigInt, BigInt> integerWindow(const Rational& centre, const Rational& bound) {
  BigInt root = sqrt(floorOf(bound));  // floor(sqrt(bound))
  BigInt hi = floorOf(centre) + root + 1;
  while (hi >= ceilOf(centre) && Rational(hi - centre) * Rational(hi - centre) > bound) --hi;
  BigInt lo = ceilOf(centre) - root - 1;
  while (lo <= floorOf(centre) && Rational(lo - centre) * Rational(lo - centre) > bound) ++lo;
  return {lo, hi};
}

}  // namespace

LevelSetSearch::LevelSetSearch(const GramLattice& lattice, const DivisorClass& level)
    : lattice_(lattice), level_(level) {
  const std::size_t n = lattice.rank();
  if (level.size() != n) throw Error(ErrorCode::DimensionMismatch, "level class length differs from lattice rank");
  if (square(lattice, level) <= 0) throw Error(ErrorCode::InvalidArgument, "level class must have positive square");

  IntMatrix row(1, n);
  for (std::size_t j = 0; j < n; ++j) {
    DivisorClass e(IntVector(n, 0));
    e.coords[j] = 1;
    row(0, j) = pair(lattice, level, e);
  }
  SmithForm s = smithNormalForm(row);
  gcd_ = s.diagonal(0, 0);
  unit_ = s.left(0, 0);
  particular_.resize(n);
  for (std::size_t i = 0; i < n; ++i) particular_[i] = toInteger(s.right(i, 0));
  for (std::size_t k = 1; k < n; ++k) {
    IntVector col(n);
    for (std::size_t i = 0; i < n; ++i) col[i] = toInteger(s.right(i, k));
    kernel_.push_back(std::move(col));
  }

  const std::size_t m = kernel_.size();
  const IntMatrix& g = lattice.gram();
  auto form = [&](const IntVector& x, const IntVector& y) {
    BigInt acc = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i] == 0) continue;
      BigInt rowSum = 0;
      for (std::size_t j = 0; j < n; ++j) rowSum += BigInt(static_cast<long>(g(i, j))) * BigInt(static_cast<long>(y[j]));
      acc += BigInt(static_cast<long>(x[i])) * rowSum;
    }
    return acc;
  };

  RatMatrix q(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) q(i, j) = Rational(-form(kernel_[i], kernel_[j]));
  std::vector<Rational> h(m);
  for (std::size_t i = 0; i < m; ++i) h[i] = Rational(form(kernel_[i], particular_));

  // Centre z solves Q z = h (Gaussian elimination over Q on a copy).
  {
    RatMatrix a = q;
    std::vector<Rational> rhs = h;
    for (std::size_t c = 0; c < m; ++c) {
      std::size_t p = c;
      while (p < m && a(p, c) == 0) ++p;
      if (p == m) throw Error(ErrorCode::Degenerate, "orthogonal complement of the level class is degenerate");
      a.swapRows(c, p);
      std::swap(rhs[c], rhs[p]);
      for (std::size_t i = 0; i < m; ++i) {
        if (i == c || a(i, c) == 0) continue;
        Rational f = a(i, c) / a(c, c);
        a.addRowMultiple(i, c, -f);
        rhs[i] -= f * rhs[c];
      }
    }
    centreUnit_.resize(m);
    for (std::size_t i = 0; i < m; ++i) centreUnit_[i] = rhs[i] / a(i, i);
  }
  maxSquareUnit_ = Rational(form(particular_, particular_));
  for (std::size_t i = 0; i < m; ++i) maxSquareUnit_ += h[i] * centreUnit_[i];

  // Fincke-Pohst coefficients: q(x) = sum_i c_ii (x_i + sum_{j>i} c_ij x_j)^2.
  coeff_.assign(m, std::vector<Rational>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) coeff_[i][j] = q(i, j);
  for (std::size_t i = 0; i < m; ++i) {
    if (coeff_[i][i] <= 0)
      throw Error(ErrorCode::InvalidArgument, "orthogonal complement of the level class is not negative definite");
    for (std::size_t j = i + 1; j < m; ++j) {
      coeff_[j][i] = coeff_[i][j];
      coeff_[i][j] /= coeff_[i][i];
    }
    for (std::size_t k = i + 1; k < m; ++k)
      for (std::size_t l = k; l < m; ++l) coeff_[k][l] -= coeff_[k][i] * coeff_[i][l];
  }
}

std::vector<DivisorClass> LevelSetSearch::find(Integer value, Integer minSquare) const {
  std::vector<DivisorClass> out;
  const BigInt target = unit_ * BigInt(static_cast<long>(value));
  if (target % gcd_ != 0) return out;
  const BigInt steps = target / gcd_;  // E0 = steps * particular_
  const Rational ratio(steps);

  // Scaling E0 by `steps` scales the centre by `steps` and the slice maximum by steps^2.
  const std::size_t m = kernel_.size();
  std::vector<Rational> centre(m);
  for (std::size_t i = 0; i < m; ++i) centre[i] = centreUnit_[i] * ratio;
  const Rational budget = maxSquareUnit_ * ratio * ratio - Rational(static_cast<long>(minSquare));
  if (budget < 0) return out;

  const std::size_t n = lattice_.rank();
  IntVector base(n);
  for (std::size_t i = 0; i < n; ++i) base[i] = toInteger(BigInt(BigInt(static_cast<long>(particular_[i])) * steps));

  std::vector<BigInt> y(m);
  std::function<void(std::size_t, const Rational&)> descend = [&](std::size_t level, const Rational& remaining) {
    if (level == 0) {
      IntVector e = base;
      for (std::size_t k = 0; k < m; ++k) {
        if (y[k] == 0) continue;
        e = add(e, scale(toInteger(y[k]), kernel_[k]));
      }
      out.emplace_back(std::move(e));
      return;
    }
    const std::size_t i = level - 1;
    Rational mu = centre[i];
    for (std::size_t j = i + 1; j < m; ++j) mu -= coeff_[i][j] * (Rational(y[j]) - centre[j]);
    auto [lo, hi] = integerWindow(mu, remaining / coeff_[i][i]);
    for (BigInt v = lo; v <= hi; ++v) {
      y[i] = v;
      Rational dev = Rational(v) - mu;
      descend(i, remaining - coeff_[i][i] * dev * dev);
    }
  };
  descend(m, budget);

  for (const auto& e : out)
    if (square(lattice_, e) < minSquare || pair(lattice_, level_, e) != value)
      throw Error(ErrorCode::Inconsistent, "level-set enumeration produced a vector off the slice");
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace prym
