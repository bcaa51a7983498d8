#pragma once

#include <vector>

#include "prym/lattice.hpp"

namespace prym {

/// Enumerates lattice vectors on an affine slice {E : level.E = t} of a hyperbolic lattice.
///
/// The level class must have positive square and a negative definite orthogonal
/// complement. Every E with level.E = t satisfies E^2 <= t^2 / level^2, so the set
/// {E : level.E = t, E^2 >= s} is finite; it is found by writing E = E0 + B y with B a
/// basis of level-perp and running a Fincke-Pohst enumeration of y against the positive
/// definite form -B^T G B, centred at the orthogonal projection. All arithmetic is exact.
class LevelSetSearch {
 public:
  LevelSetSearch(const GramLattice& lattice, const DivisorClass& level);

  /// All E with level.E = value and E^2 >= minSquare, sorted lexicographically.
  std::vector<DivisorClass> find(Integer value, Integer minSquare) const;

  const DivisorClass& level() const noexcept { return level_; }

 private:
  GramLattice lattice_;
  DivisorClass level_;
  BigInt gcd_;                       // content of the linear form E -> level.E
  BigInt unit_;                      // +-1 from the Smith form of that row vector
  IntVector particular_;             // level.particular_ = unit_ * gcd_
  std::vector<IntVector> kernel_;    // basis of level-perp
  std::vector<std::vector<Rational>> coeff_;  // Fincke-Pohst coefficients of -B^T G B
  std::vector<Rational> centreUnit_;          // projection centre for value = unit_ * gcd_
  Rational maxSquareUnit_;                    // max E^2 on the slice for value = unit_ * gcd_
};

}  // namespace prym
