#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "prym/arith.hpp"
#include "prym/matrix.hpp"

namespace prym {

enum class Symmetry { Symmetric, Skew };

/// Free Z-module of finite rank with an integral (skew-)symmetric bilinear form.
class GramLattice {
 public:
  GramLattice() = default;
  GramLattice(IntMatrix gram, Symmetry symmetry = Symmetry::Symmetric);

  static GramLattice diagonal(const IntVector& entries);

  std::size_t rank() const noexcept { return gram_.rows(); }
  const IntMatrix& gram() const noexcept { return gram_; }
  Symmetry symmetry() const noexcept { return symmetry_; }

 private:
  IntMatrix gram_;
  Symmetry symmetry_ = Symmetry::Symmetric;
};

/// Coefficient vector in the ambient lattice's fixed basis.
struct DivisorClass {
  IntVector coords;

  DivisorClass() = default;
  explicit DivisorClass(IntVector c) : coords(std::move(c)) {}

  std::size_t size() const noexcept { return coords.size(); }
  bool isZero() const { return prym::isZero(coords); }

  friend DivisorClass operator+(const DivisorClass& a, const DivisorClass& b) {
    return DivisorClass(add(a.coords, b.coords));
  }
  friend DivisorClass operator-(const DivisorClass& a, const DivisorClass& b) {
    return DivisorClass(subtract(a.coords, b.coords));
  }
  friend DivisorClass operator*(Integer s, const DivisorClass& a) { return DivisorClass(scale(s, a.coords)); }
  friend bool operator==(const DivisorClass& a, const DivisorClass& b) { return a.coords == b.coords; }
  friend bool operator<(const DivisorClass& a, const DivisorClass& b) { return a.coords < b.coords; }
};

Integer pair(const GramLattice& lattice, const DivisorClass& u, const DivisorClass& v);
inline Integer square(const GramLattice& lattice, const DivisorClass& u) { return pair(lattice, u, u); }

struct DiscriminantData {
  std::vector<BigInt> invariantFactors;  // > 1, each divides the next
  bool isTwoElementary = false;
  std::size_t a = 0;
  std::optional<int> delta;  // empty when the lattice is not 2-elementary
};

DiscriminantData discriminantData(const GramLattice& lattice);

struct Signature {
  std::size_t positive = 0;
  std::size_t negative = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

Signature signature(const GramLattice& lattice);

/// U * M * V = D with D diagonal (nonnegative, d_i | d_{i+1}) and U, V unimodular.
struct SmithForm {
  BigMatrix diagonal;
  BigMatrix left;
  BigMatrix right;

  std::size_t rank() const;
};

SmithForm smithNormalForm(const BigMatrix& m);
inline SmithForm smithNormalForm(const IntMatrix& m) { return smithNormalForm(toBig(m)); }

/// Rows form a Z-basis of {x in Z^n : M x = 0}, in row Hermite normal form
/// (positive leading entries, strictly increasing pivot columns).
IntMatrix integerKernel(const IntMatrix& m);

/// Row-style Hermite normal form of the row span of `rows`; zero rows dropped.
IntMatrix hermiteRows(const IntMatrix& rows);

/// Integer solution of M x = b, if one exists.
std::optional<IntVector> solveInteger(const IntMatrix& m, const IntVector& b);

}  // namespace prym
