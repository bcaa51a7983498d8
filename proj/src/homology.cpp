#include "prym/homology.hpp"

namespace prym {

SymmetricHomologyModel buildModel(Integer l, Integer m) {
  if (l < 0 || m < 0) throw Error(ErrorCode::InvalidArgument, "l and m must be non-negative");
  SymmetricHomologyModel model;
  model.l = l;
  model.m = m;
  const std::size_t n = static_cast<std::size_t>(4 * l + 2 * m);
  IntMatrix g(n, n);
  IntMatrix inv(n, n);
  for (Integer j = 0; j < l; ++j) {
    for (std::size_t base : {model.betaIndex(2 * j), model.iBetaIndex(2 * j)}) {
      g(base, base + 1) = 1;
      g(base + 1, base) = -1;
    }
  }
  for (Integer k = 0; k + 1 < 2 * m; ++k) {
    g(model.deltaIndex(k), model.deltaIndex(k + 1)) = 1;
    g(model.deltaIndex(k + 1), model.deltaIndex(k)) = -1;
  }
  for (Integer j = 0; j < 2 * l; ++j) {
    inv(model.betaIndex(j), model.iBetaIndex(j)) = 1;
    inv(model.iBetaIndex(j), model.betaIndex(j)) = 1;
  }
  for (Integer k = 0; k < 2 * m; ++k) inv(model.deltaIndex(k), model.deltaIndex(k)) = -1;
  model.form = GramLattice(g, Symmetry::Skew);
  model.involution = inv;
  return model;
}

IntMatrix antiInvariantSublattice(const SymmetricHomologyModel& model) {
  IntMatrix a = model.involution;
  for (std::size_t i = 0; i < a.rows(); ++i) a(i, i) = checkedAdd(a(i, i), 1);
  return integerKernel(a);
}

CycleClass applyInvolution(const SymmetricHomologyModel& model, const CycleClass& c) {
  return CycleClass(multiplyChecked(model.involution, c.coords));
}

CycleClass picardLefschetzTwist(const SymmetricHomologyModel& model, const CycleClass& alpha, const CycleClass& c) {
  if (pair(model.form, alpha, alpha) != 0) throw Error(ErrorCode::InvalidArgument, "vanishing cycle must be isotropic");
  return c + pair(model.form, c, alpha) * alpha;
}

CycleClass twistPair(const SymmetricHomologyModel& model, const CycleClass& alpha, const CycleClass& c) {
  return picardLefschetzTwist(model, applyInvolution(model, alpha), picardLefschetzTwist(model, alpha, c));
}

namespace {

bool antiInvariant(const SymmetricHomologyModel& model, const CycleClass& c) {
  return (c + applyInvolution(model, c)).isZero();
}

// Coordinates of an anti-invariant cycle in the HNF basis.
IntVector basisCoordinates(const IntMatrix& basis, const CycleClass& c) {
  auto sol = solveInteger(basis.transposed(), c.coords);
  if (!sol) throw Error(ErrorCode::Inconsistent, "anti-invariant cycle outside the kernel basis span");
  return *sol;
}

}  // namespace

GenerationResult generatesAntiInvariant(const SymmetricHomologyModel& model, const std::vector<CycleClass>& cycles) {
  const IntMatrix basis = antiInvariantSublattice(model);
  const std::size_t r = basis.rows();
  GenerationResult out;
  if (r == 0) {
    out.generates = true;
    out.index = BigInt(1);
    return out;
  }
  IntMatrix coords(cycles.size(), r);
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    if (cycles[i].size() != model.rank()) throw Error(ErrorCode::DimensionMismatch, "cycle length differs from rank");
    if (!antiInvariant(model, cycles[i]))
      throw Error(ErrorCode::InvalidArgument, "cycle " + formatVector(cycles[i].coords) + " is not anti-invariant");
    const IntVector x = basisCoordinates(basis, cycles[i]);
    for (std::size_t j = 0; j < r; ++j) coords(i, j) = x[j];
  }
  if (cycles.empty()) {
    out.rankDeficiency = r;
    return out;
  }
  const SmithForm s = smithNormalForm(coords);
  const std::size_t rank = s.rank();
  out.rankDeficiency = r - rank;
  if (out.rankDeficiency == 0) {
    BigInt index = 1;
    for (std::size_t i = 0; i < rank; ++i) index *= s.diagonal(i, i);
    out.index = index;
    out.generates = index == 1;
  }
  return out;
}

ParityResult parityObstruction(const SymmetricHomologyModel& model) {
  const IntMatrix basis = antiInvariantSublattice(model);
  ParityResult out;
  for (std::size_t i = 0; i < basis.rows(); ++i)
    for (std::size_t j = i + 1; j < basis.rows(); ++j) {
      CycleClass x(basis.row(i)), y(basis.row(j));
      const Integer v = pair(model.form, x, y);
      if (v % 2 != 0) {
        out.even = false;
        out.x = x;
        out.y = y;
        out.value = v;
        return out;
      }
    }
  return out;
}

std::optional<CycleClass> unitPairingCycle(const SymmetricHomologyModel& model, const CycleClass& alpha) {
  const IntMatrix basis = antiInvariantSublattice(model);
  std::vector<CycleClass> candidates;
  for (std::size_t i = 0; i < basis.rows(); ++i) candidates.emplace_back(basis.row(i));
  const std::size_t singles = candidates.size();
  for (std::size_t i = 0; i < singles; ++i)
    for (std::size_t j = i + 1; j < singles; ++j) {
      candidates.push_back(candidates[i] + candidates[j]);
      candidates.push_back(candidates[i] - candidates[j]);
    }
  for (const auto& c : candidates) {
    const Integer v = pair(model.form, c, alpha);
    if (v == 1) return c;
    if (v == -1) return Integer{-1} * c;
  }
  return std::nullopt;
}

std::vector<CycleClass> commutatorImages(const SymmetricHomologyModel& model) {
  const IntMatrix basis = antiInvariantSublattice(model);
  const std::size_t n = model.rank();
  auto unit = [n](std::size_t i) {
    CycleClass e(IntVector(n, 0));
    e.coords[i] = 1;
    return e;
  };
  std::vector<CycleClass> out;
  for (std::size_t b = 0; b < basis.rows(); ++b) {
    const CycleClass c(basis.row(b));
    for (Integer k = 0; k < 2 * model.m; ++k) {
      const CycleClass alpha = unit(model.deltaIndex(k));
      const Integer p = pair(model.form, c, alpha);
      if (p != 0) out.push_back(p * alpha);
    }
    for (Integer j = 0; j < 2 * model.l; ++j) {
      const CycleClass alpha = unit(model.betaIndex(j));
      const Integer p = pair(model.form, c, alpha);
      if (p != 0) out.push_back(p * (alpha - applyInvolution(model, alpha)));
    }
  }
  return out;
}

IntMatrix pushforward(const SymmetricHomologyModel& model) {
  const std::size_t h = static_cast<std::size_t>(2 * model.l);
  IntMatrix f(h, model.rank());
  for (Integer j = 0; j < 2 * model.l; ++j) {
    f(static_cast<std::size_t>(j), model.betaIndex(j)) = 1;
    f(static_cast<std::size_t>(j), model.iBetaIndex(j)) = 1;
  }
  return f;
}

}  // namespace prym
