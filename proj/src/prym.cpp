#include "prym/prym.hpp"

namespace prym {

std::string describe(HypothesisReport::HyperellipticClause clause) {
  return clause == HypothesisReport::HyperellipticClause::Vacuous ? "Vacuous" : "RequiresNonHyperelliptic";
}

std::string describe(CertifiedExample::Verdict v) {
  return v == CertifiedExample::Verdict::IrreducibleSymplectic ? "IrreducibleSymplectic" : "Inconclusive";
}

HypothesisReport hypothesisReport(const SurfaceModel& t, const DivisorClass& c, Integer n,
                                  bool assertNonHyperelliptic) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "multiplier n must be >= 1");
  if (c.size() != t.rank()) throw Error(ErrorCode::DimensionMismatch, "class length differs from Picard rank");
  const DivisorClass nc = n * c;
  const PositivityFlags flags = classifyPositivity(t, nc);
  if (!flags.effective) throw Error(ErrorCode::NotEffective, "class " + formatVector(nc.coords) + " is not effective");

  HypothesisReport r;
  r.veryAmpleC = veryAmpleOnQuotient(t, nc);
  if (flags.ample) {
    r.veryAmpleD = veryAmpleOnK3(t, c, n);
  } else {
    r.veryAmpleD.status = VeryAmpleVerdict::Status::NotDetermined;
    r.veryAmpleD.reason = "C is not ample";
  }
  r.cb = pair(t.picard, nc, t.branch);
  r.cbGreaterThanTwo = r.cb > 2;
  r.c2 = square(t.picard, nc);
  r.not44 = !(r.c2 == 4 && r.cb == 4);
  r.twoConnected = isTwoConnected(t, nc);
  r.branchSquare = square(t.picard, t.branch);
  r.hyperelliptic = r.branchSquare > 0 ? HypothesisReport::HyperellipticClause::Vacuous
                                       : HypothesisReport::HyperellipticClause::RequiresNonHyperelliptic;

  // Supported models have no rational branch components, so (a) is C.B > 0.
  const FixedLocusDescription locus = fixedLocusInvariants(t.nikulin);
  if (locus.rationalCurves != 0)
    throw Error(ErrorCode::Unsupported, "rational branch components are not representable");
  r.condA = r.cb > 0;
  r.condB = r.not44;
  r.condC = r.twoConnected.twoConnected;
  r.condD = r.hyperelliptic == HypothesisReport::HyperellipticClause::Vacuous || assertNonHyperelliptic;
  return r;
}

Integer prymDimension(const SurfaceModel& t, const DivisorClass& c, Integer n) {
  const DivisorClass nc = n * c;
  const Integer cb = pair(t.picard, nc, t.branch);
  if (cb % 2 != 0) throw Error(ErrorCode::Inconsistent, "C.B is odd");
  const Integer dim = checkedAdd(square(t.picard, nc), cb / 2);
  const Integer viaGenera = checkedMul(2, checkedSub(coveringGenus(t, nc), genusOf(t, nc)));
  if (dim != viaGenera)
    throw Error(ErrorCode::Inconsistent, "dimension " + std::to_string(dim) + " differs from 2(g(D) - g(C)) = " +
                                             std::to_string(viaGenera));
  return dim;
}

PullbackCodim nonIntegralPullbackCodim(const SurfaceModel& t, const DivisorClass& c) {
  const Integer c2 = square(t.picard, c);
  const Integer cb = pair(t.picard, c, t.branch);
  if (c2 <= 0 || cb <= 0) throw Error(ErrorCode::InvalidArgument, "needs C^2 > 0 and C.B > 0");
  PullbackCodim out;
  if (c2 % 2 != 0) {
    out.reason = "no candidate half-class: C^2/2 is not an integer";
    return out;
  }
  out.empty = false;
  out.codim = Rational(c2, 4) + Rational(cb, 4) - 1;
  out.codim.canonicalize();
  return out;
}

Integer milnorNumber(Integer contactOrder) {
  if (contactOrder < 1) throw Error(ErrorCode::InvalidArgument, "contact order must be >= 1");
  return contactOrder - 1;
}

CertifiedExample verdict(const SurfaceModel& t, const DivisorClass& c, Integer n, bool assertNonHyperelliptic) {
  CertifiedExample ex;
  ex.surface = t.kind;
  ex.c = c;
  ex.n = n;
  ex.report = hypothesisReport(t, c, n, assertNonHyperelliptic);
  ex.dimension = prymDimension(t, c, n);
  const DivisorClass nc = n * c;
  ex.mukai = {0, pullbackToK3(t, nc), checkedSub(1, coveringGenus(t, nc))};

  using S = VeryAmpleVerdict::Status;
  const HypothesisReport& r = ex.report;
  if (r.veryAmpleC.status != S::VeryAmple) ex.failed.push_back("veryAmpleC");
  if (r.veryAmpleD.status != S::VeryAmple) ex.failed.push_back("veryAmpleD");
  if (!r.cbGreaterThanTwo) ex.failed.push_back("CBgt2");
  if (!r.not44) ex.failed.push_back("not44");
  if (!r.condC) ex.failed.push_back("twoConnected");
  if (!r.condD) ex.failed.push_back("hyperelliptic");
  ex.verdict = ex.failed.empty() ? CertifiedExample::Verdict::IrreducibleSymplectic
                                 : CertifiedExample::Verdict::Inconclusive;
  return ex;
}

}  // namespace prym
