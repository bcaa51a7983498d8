#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "prym/surface.hpp"

namespace prym {

/// Classes with E^2 = -1 and E.K = -1. On the supported surfaces these are exactly the
/// classes of the (-1)-curves.
std::vector<DivisorClass> minusOneCurves(const SurfaceModel& surface);

/// Generators of the cone of curves: the (-1)-curves for d <= 7, {E1, H - E1} on the
/// blow-up of the plane in one point, {H} on the plane. Cached per surface.
const std::vector<DivisorClass>& extremalRays(const SurfaceModel& surface);

struct PositivityFlags {
  bool effective = false;
  bool nef = false;
  bool ample = false;
};

PositivityFlags classifyPositivity(const SurfaceModel& surface, const DivisorClass& a);

struct Decomposition {
  DivisorClass first;   // lexicographically <= second
  DivisorClass second;
  Integer pairing = 0;  // first . second
};

/// Every unordered pair of nonzero effective classes summing to C, in lexicographic
/// order of `first`. Candidates range over the box a in [0, a_C],
/// b_i in [-C.(-K), a] of the plane model. Throws NotEffective if C is not effective.
void forEachEffectiveDecomposition(const SurfaceModel& surface, const DivisorClass& c,
                                   const std::function<void(const Decomposition&)>& visit);
std::vector<Decomposition> effectiveDecompositions(const SurfaceModel& surface, const DivisorClass& c);

/// The decompositions with first.second <= maxPairing, for nef C. Found by enumerating
/// the bounded slices {C1 : C1.C = t, C1^2 >= t - maxPairing} for t <= C^2/2 (slices of
/// C1.(-K) when C^2 = 0); same order as above.
std::vector<Decomposition> effectiveDecompositionsUpTo(const SurfaceModel& surface, const DivisorClass& c,
                                                       Integer maxPairing);

enum class ConnectednessException { A1, A2, A3, A4 };

struct ExceptionMatch {
  ConnectednessException which = ConnectednessException::A1;
  bool certain = true;  // false when the match depends on an unresolved h^0
  std::string detail;
};

struct ConnectednessVerdict {
  bool twoConnected = true;
  std::optional<Decomposition> witness;  // a decomposition minimising first.second
  std::vector<ExceptionMatch> blExceptions;
};

std::string describe(ConnectednessException e);

/// Direct 2-connectedness check, cross-checked for ample C against the exception list
/// of the Beltrametti-Lanteri criterion (an unexplained failure throws Inconsistent).
ConnectednessVerdict isTwoConnected(const SurfaceModel& surface, const DivisorClass& c);

/// Pattern match of the four exceptions for an ample class.
std::vector<ExceptionMatch> connectednessExceptions(const SurfaceModel& surface, const DivisorClass& c);

}  // namespace prym
