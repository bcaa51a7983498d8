#include "prym/surface.hpp"

#include <algorithm>
#include <cctype>

namespace prym {

SurfaceKind SurfaceKind::parse(const std::string& raw) {
  std::string name;
  for (char ch : raw) name.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
  if (name == "p2") return projectivePlane();
  if (name == "p1xp1" || name == "p1p1" || name == "f0")
    throw Error(ErrorCode::Unsupported,
                "P1 x P1 is not supported: del Pezzo models are blow-ups of the plane, which excludes the quadric");
  if (name.size() == 3 && name.rfind("dp", 0) == 0 && std::isdigit(static_cast<unsigned char>(name[2]))) {
    const int d = name[2] - '0';
    if (d >= 1 && d <= 8) return delPezzo(d);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown surface '" + raw + "' (expected p2 or dp1..dp8)");
}

std::string SurfaceKind::name() const {
  return family == Family::ProjectivePlane ? std::string("p2") : "dp" + std::to_string(degree);
}

SurfaceModel makeSurface(SurfaceKind kind) {
  SurfaceModel t;
  if (kind.family == SurfaceKind::Family::ProjectivePlane) {
    kind.degree = 9;
  } else if (kind.degree < 1 || kind.degree > 8) {
    throw Error(ErrorCode::InvalidArgument,
                "del Pezzo degree must lie in 1..8, got " + std::to_string(kind.degree));
  }
  t.kind = kind;
  const std::size_t points = static_cast<std::size_t>(9 - kind.degree);
  const std::size_t rank = points + 1;

  IntVector picardDiag(rank, -1), k3Diag(rank, -2);
  picardDiag[0] = 1;
  k3Diag[0] = 2;
  t.picard = GramLattice::diagonal(picardDiag);
  t.k3 = GramLattice::diagonal(k3Diag);

  t.basisNames.push_back("H");
  for (std::size_t i = 1; i <= points; ++i) t.basisNames.push_back("E" + std::to_string(i));

  IntVector k(rank, 1);
  k[0] = -3;
  t.canonical = DivisorClass(k);
  t.branch = Integer{-2} * t.canonical;

  const int r = static_cast<int>(rank);
  t.nikulin = NikulinInvariant{r, r, 1};
  return t;
}

DivisorClass fromPlaneModel(const SurfaceModel& surface, Integer a, const IntVector& b) {
  const std::size_t points = surface.rank() - 1;
  if (b.size() > points)
    throw Error(ErrorCode::DimensionMismatch, "surface " + surface.kind.name() + " has " + std::to_string(points) +
                                                  " exceptional classes, got " + std::to_string(b.size()) +
                                                  " multiplicities");
  IntVector coords(surface.rank(), 0);
  coords[0] = a;
  for (std::size_t i = 0; i < b.size(); ++i) coords[i + 1] = checkedMul(-1, b[i]);
  return DivisorClass(coords);
}

std::pair<Integer, IntVector> toPlaneModel(const SurfaceModel& surface, const DivisorClass& c) {
  if (c.size() != surface.rank()) throw Error(ErrorCode::DimensionMismatch, "class length differs from Picard rank");
  IntVector b;
  for (std::size_t i = 1; i < c.size(); ++i) b.push_back(checkedMul(-1, c.coords[i]));
  return {c.coords[0], b};
}

FixedLocusDescription fixedLocusInvariants(const NikulinInvariant& inv) {
  if (inv.r < 0 || inv.a < 0) throw Error(ErrorCode::InvalidArgument, "main invariants must be non-negative");
  FixedLocusDescription out;
  out.branchSelfIntersection = 4 * (10 - inv.r);
  // (1,1,1) is the plane; (10-d, 10-d, 1) with 1 <= d <= 8 the del Pezzo models.
  out.fromSupportedModel = inv.r == inv.a && inv.delta == 1 && inv.r >= 1 && inv.r <= 9;
  if (inv.r == 10 && inv.a == 10 && inv.delta == 0) {
    out.shape = FixedLocusDescription::Shape::Empty;
    return out;
  }
  if (inv.r == 10 && inv.a == 8 && inv.delta == 0) {
    out.shape = FixedLocusDescription::Shape::TwoEllipticCurves;
    return out;
  }
  if ((inv.r + inv.a) % 2 != 0)
    throw Error(ErrorCode::NotRealizable, "not a realizable invariant: r + a must be even");
  const int g = 11 - (inv.r + inv.a) / 2;
  const int k = (inv.r - inv.a) / 2;
  if (g < 0 || k < 0)
    throw Error(ErrorCode::NotRealizable, "not a realizable invariant: fixed curve genus " + std::to_string(g) +
                                              ", rational components " + std::to_string(k));
  out.shape = FixedLocusDescription::Shape::GenusCurvePlusRationals;
  out.genus = g;
  out.rationalCurves = k;
  return out;
}

Integer genusOf(const SurfaceModel& t, const DivisorClass& c) {
  const Integer twice = checkedAdd(square(t.picard, c), pair(t.picard, c, t.canonical));
  if (twice % 2 != 0)
    throw Error(ErrorCode::Inconsistent, "class not characteristic-consistent: C^2 + C.K is odd");
  return twice / 2 + 1;
}

Integer coveringGenus(const SurfaceModel& t, const DivisorClass& c) {
  return checkedSub(checkedSub(checkedMul(2, genusOf(t, c)), pair(t.picard, c, t.canonical)), 1);
}

LinearSystemDim linearSystemDim(const SurfaceModel& t, const DivisorClass& c) {
  const Integer ck = pair(t.picard, c, t.canonical);
  const Integer value = checkedSub(checkedAdd(square(t.picard, c), 1), genusOf(t, c));
  if (ck < 0) return {value, true, {}};
  if (ck == 0) return {value, false, "C.K_T = 0: h0(omega_T|_C) not computed"};
  return {value, false, "C.K_T > 0: genus formula hypotheses fail, h0(omega_T|_C) not computed"};
}

DivisorClass pullbackToK3(const SurfaceModel& t, const DivisorClass& c) {
  if (c.size() != t.rank()) throw Error(ErrorCode::DimensionMismatch, "class length differs from Picard rank");
  return c;
}

}  // namespace prym
