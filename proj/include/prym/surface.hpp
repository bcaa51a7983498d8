#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "prym/lattice.hpp"

namespace prym {

/// Supported quotient surfaces: the plane, or a del Pezzo surface of degree 1..8
/// presented as the blow-up of the plane in 9 - d points (so never P1 x P1).
struct SurfaceKind {
  enum class Family { ProjectivePlane, DelPezzo };
  Family family = Family::ProjectivePlane;
  int degree = 9;

  static SurfaceKind projectivePlane() { return {Family::ProjectivePlane, 9}; }
  static SurfaceKind delPezzo(int d) { return {Family::DelPezzo, d}; }

  /// "p2", "dp1", ..., "dp8"; "p1xp1" is recognised and rejected.
  static SurfaceKind parse(const std::string& name);
  std::string name() const;

  friend bool operator==(const SurfaceKind&, const SurfaceKind&) = default;
};

struct NikulinInvariant {
  int r = 0;
  int a = 0;
  int delta = 0;
  friend bool operator==(const NikulinInvariant&, const NikulinInvariant&) = default;
};

struct SurfaceModel {
  SurfaceKind kind;
  GramLattice picard;                  // diag(1, -1, ..., -1)
  std::vector<std::string> basisNames; // "H", "E1", ...
  DivisorClass canonical;              // K_T
  DivisorClass branch;                 // B = -2 K_T
  NikulinInvariant nikulin;
  GramLattice k3;                      // span of f^*H, f^*E_i: diag(2, -2, ..., -2)

  int degree() const { return kind.degree; }
  std::size_t rank() const { return picard.rank(); }
  DivisorClass anticanonical() const { return Integer{-1} * canonical; }
  DivisorClass zero() const { return DivisorClass(IntVector(rank(), 0)); }
};

SurfaceModel makeSurface(SurfaceKind kind);

/// Class aH - sum b_i E_i on the given surface (b may be shorter; missing entries are 0).
DivisorClass fromPlaneModel(const SurfaceModel& surface, Integer a, const IntVector& b);
/// Inverse of fromPlaneModel: (a, b_1, ..., b_{9-d}).
std::pair<Integer, IntVector> toPlaneModel(const SurfaceModel& surface, const DivisorClass& c);

struct FixedLocusDescription {
  enum class Shape { Empty, TwoEllipticCurves, GenusCurvePlusRationals };
  Shape shape = Shape::Empty;
  int genus = 0;          // meaningful for GenusCurvePlusRationals
  int rationalCurves = 0; // k
  int branchSelfIntersection = 0;
  bool fromSupportedModel = false;  // (r, a, delta) is (1,1,1) or (10-d, 10-d, 1) with 1 <= d <= 8
};

FixedLocusDescription fixedLocusInvariants(const NikulinInvariant& invariant);

Integer genusOf(const SurfaceModel& surface, const DivisorClass& c);
Integer coveringGenus(const SurfaceModel& surface, const DivisorClass& c);

/// dim |C| when it follows from the genus formula; otherwise a lower bound with the
/// unresolved h^0(omega_T|_C) term named in `note`.
struct LinearSystemDim {
  Integer value = 0;
  bool exact = true;
  std::string note;
};

LinearSystemDim linearSystemDim(const SurfaceModel& surface, const DivisorClass& c);

/// Pullback of a class on T to the K3 lattice; coordinates are unchanged.
DivisorClass pullbackToK3(const SurfaceModel& surface, const DivisorClass& c);

}  // namespace prym
