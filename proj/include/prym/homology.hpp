#pragma once

#include <optional>
#include <string>
#include <vector>

#include "prym/lattice.hpp"

namespace prym {

/// H_1 of a double cover D -> C with involution: basis (beta_1..beta_2l, i beta_1..i beta_2l,
/// delta_1..delta_2m), symplectic blocks on the beta and i beta parts, a chain block on the
/// deltas. The involution swaps beta_j and i beta_j and negates every delta_k.
struct SymmetricHomologyModel {
  Integer l = 0;
  Integer m = 0;
  GramLattice form;
  IntMatrix involution;

  std::size_t rank() const { return form.rank(); }
  Integer coverGenus() const { return 2 * l + m; }
  std::size_t betaIndex(Integer j) const { return static_cast<std::size_t>(j); }
  std::size_t iBetaIndex(Integer j) const { return static_cast<std::size_t>(2 * l + j); }
  std::size_t deltaIndex(Integer k) const { return static_cast<std::size_t>(4 * l + k); }
};

using CycleClass = DivisorClass;

SymmetricHomologyModel buildModel(Integer l, Integer m);

/// Rows: a Z-basis of ker(1 + involution), in row Hermite normal form.
IntMatrix antiInvariantSublattice(const SymmetricHomologyModel& model);

CycleClass applyInvolution(const SymmetricHomologyModel& model, const CycleClass& c);

/// c + (c.alpha) alpha; alpha must be isotropic.
CycleClass picardLefschetzTwist(const SymmetricHomologyModel& model, const CycleClass& alpha, const CycleClass& c);

/// T_{i alpha} composed with T_alpha.
CycleClass twistPair(const SymmetricHomologyModel& model, const CycleClass& alpha, const CycleClass& c);

struct GenerationResult {
  bool generates = false;
  std::size_t rankDeficiency = 0;  // rank(H_1^-) - rank(span)
  std::optional<BigInt> index;     // finite index when the rank is full
};

/// Whether the integer span of the cycles is all of H_1^-. Throws InvalidArgument if a
/// cycle is not anti-invariant.
GenerationResult generatesAntiInvariant(const SymmetricHomologyModel& model, const std::vector<CycleClass>& cycles);

struct ParityResult {
  bool even = true;
  std::optional<CycleClass> x;
  std::optional<CycleClass> y;
  Integer value = 0;
};

/// Even exactly when every pairing of H_1^- basis vectors is even; otherwise a witness.
ParityResult parityObstruction(const SymmetricHomologyModel& model);

/// An anti-invariant c with c.alpha = 1, if one exists (searched over H_1^- basis vectors
/// and their pairwise sums and differences).
std::optional<CycleClass> unitPairingCycle(const SymmetricHomologyModel& model, const CycleClass& alpha);

/// {(c.alpha) alpha : alpha = delta_k} and {(c.alpha)(alpha - i alpha) : alpha = beta_j}
/// over the basis c of H_1^-, i.e. the images of the monodromy commutators.
std::vector<CycleClass> commutatorImages(const SymmetricHomologyModel& model);

/// Pushforward to H_1(C): beta_j and i beta_j go to the j-th basis vector, deltas to 0.
/// Returned as a 2l x rank matrix.
IntMatrix pushforward(const SymmetricHomologyModel& model);

}  // namespace prym
