#pragma once

#include <string>
#include <vector>

#include "prym/surface.hpp"

namespace prym {

/// A class E on the K3 that belongs to one of the exceptional strata of the adjoint
/// very-ampleness criterion (or of the D^2 in [4, 8] pencil test).
struct ReiderException {
  enum class Kind {
    Orthogonal,   // D.E = 0, E^2 in {-1, -2}
    DegreeOne,    // D.E = 1, E^2 in {0, -1}
    DegreeTwo,    // D.E = 2, E^2 = 0
    Triple,       // D.E = 3, D = 3E, E^2 = 1
    HalfClass,    // D = 2E, E^2 = 2
  };
  DivisorClass e;
  Kind kind = Kind::Orthogonal;
  Integer pairing = 0;  // D.E
  Integer square = 0;   // E^2
};

std::string describe(ReiderException::Kind kind);

struct VeryAmpleVerdict {
  enum class Status { VeryAmple, NotVeryAmple, NotDetermined };
  Status status = Status::NotDetermined;
  std::string reason;
  std::vector<ReiderException> witnesses;  // empty when VeryAmple
};

std::string describe(VeryAmpleVerdict::Status status);

/// Very-ampleness of C on the quotient surface: a >= 1 on the plane, the per-degree
/// inequality systems (b sorted descending, all b_i >= 1) on del Pezzo surfaces.
VeryAmpleVerdict veryAmpleOnQuotient(const SurfaceModel& surface, const DivisorClass& c);

/// Every nonzero integral E in the four exceptional strata for D (requires D^2 > 0 and a
/// negative definite D-perp). Ordered by stratum, then lexicographically.
std::vector<ReiderException> reiderExceptionalSearch(const GramLattice& ns, const DivisorClass& d);

/// Very-ampleness of D = f^*(nC) on the K3 double cover; C must be ample on T.
VeryAmpleVerdict veryAmpleOnK3(const SurfaceModel& surface, const DivisorClass& c, Integer n);

}  // namespace prym
