#pragma once

#include <optional>
#include <string>
#include <vector>

#include "prym/ampleness.hpp"
#include "prym/effective.hpp"

namespace prym {

struct HypothesisReport {
  enum class HyperellipticClause { Vacuous, RequiresNonHyperelliptic };

  VeryAmpleVerdict veryAmpleC;
  VeryAmpleVerdict veryAmpleD;
  bool cbGreaterThanTwo = false;
  Integer cb = 0;
  bool not44 = true;
  Integer c2 = 0;
  ConnectednessVerdict twoConnected;
  HyperellipticClause hyperelliptic = HyperellipticClause::Vacuous;
  Integer branchSquare = 0;

  // Conditions (a)-(d), checked per component.
  bool condA = false;  // C.B > 0 and C.B0 > 0 for each rational branch component
  bool condB = false;
  bool condC = false;
  bool condD = false;
};

std::string describe(HypothesisReport::HyperellipticClause clause);

/// Every condition evaluated on nC; nothing short-circuits.
HypothesisReport hypothesisReport(const SurfaceModel& surface, const DivisorClass& c, Integer n,
                                  bool assertNonHyperelliptic = false);

/// n^2 C^2 + n (C.B)/2, checked against 2(g(D) - g(C)) for nC.
Integer prymDimension(const SurfaceModel& surface, const DivisorClass& c, Integer n);

struct PullbackCodim {
  bool empty = true;
  std::string reason;  // set when empty
  Rational codim;      // set otherwise
};

PullbackCodim nonIntegralPullbackCodim(const SurfaceModel& surface, const DivisorClass& c);

Integer milnorNumber(Integer contactOrder);

struct MukaiVector {
  Integer rank = 0;
  DivisorClass d;
  Integer euler = 0;  // 1 - g(D)
};

struct CertifiedExample {
  enum class Verdict { IrreducibleSymplectic, Inconclusive };
  SurfaceKind surface;
  DivisorClass c;
  Integer n = 1;
  Integer dimension = 0;
  MukaiVector mukai;
  Verdict verdict = Verdict::Inconclusive;
  std::vector<std::string> failed;  // condition names: veryAmpleC, veryAmpleD, CBgt2, not44, twoConnected, hyperelliptic
  HypothesisReport report;
};

std::string describe(CertifiedExample::Verdict v);

CertifiedExample verdict(const SurfaceModel& surface, const DivisorClass& c, Integer n,
                         bool assertNonHyperelliptic = false);

}  // namespace prym
