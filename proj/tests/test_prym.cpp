#include <doctest.h>

#include <algorithm>
#include <random>

#include "prym/prym.hpp"

using namespace prym;

namespace {

SurfaceModel dp(int d) { return makeSurface(SurfaceKind::delPezzo(d)); }

bool failedOn(const CertifiedExample& ex, const std::string& name) {
  return std::find(ex.failed.begin(), ex.failed.end(), name) != ex.failed.end();
}

}  // namespace

TEST_SUITE("prym") {
  TEST_CASE("surface data") {
    const SurfaceModel t = dp(3);
    CHECK(t.canonical == DivisorClass({-3, 1, 1, 1, 1, 1, 1}));
    CHECK(square(t.picard, t.branch) == 12);
    CHECK(t.nikulin == NikulinInvariant{7, 7, 1});
    CHECK(fixedLocusInvariants(t.nikulin).branchSelfIntersection == 12);
    CHECK(fixedLocusInvariants(t.nikulin).rationalCurves == 0);
    CHECK(fixedLocusInvariants(t.nikulin).genus == 4);
    CHECK(fixedLocusInvariants(NikulinInvariant{10, 10, 0}).shape == FixedLocusDescription::Shape::Empty);
    CHECK(fixedLocusInvariants(NikulinInvariant{10, 8, 0}).shape ==
          FixedLocusDescription::Shape::TwoEllipticCurves);
    CHECK_THROWS_AS(fixedLocusInvariants(NikulinInvariant{3, 2, 1}), Error);
    CHECK_THROWS_AS(SurfaceKind::parse("p1xp1"), Error);
    CHECK_THROWS_AS(SurfaceKind::parse("dp9"), Error);
    CHECK(genusOf(t, t.anticanonical()) == 1);
    CHECK(coveringGenus(t, t.anticanonical()) == 4);
    CHECK(linearSystemDim(t, t.anticanonical()).value == 3);
    CHECK(linearSystemDim(t, t.anticanonical()).exact);
    CHECK_FALSE(linearSystemDim(t, t.canonical).exact);
    const auto [a, b] = toPlaneModel(t, fromPlaneModel(t, 4, {2, 1, 1, 1, 1, 1}));
    CHECK(a == 4);
    CHECK(b == IntVector{2, 1, 1, 1, 1, 1});
  }

  TEST_CASE("Prym dimension examples") {
    const SurfaceModel p2 = makeSurface(SurfaceKind::projectivePlane());
    for (Integer n = 1; n <= 8; ++n) CHECK(prymDimension(p2, DivisorClass({1}), n) == n * n + 3 * n);
    for (int d = 3; d <= 8; ++d) CHECK(prymDimension(dp(d), dp(d).anticanonical(), 1) == 2 * d);
    for (int d = 1; d <= 8; ++d)
      for (Integer n = 1; n <= 3; ++n)
        CHECK(prymDimension(dp(d), Integer{-2 * n} * dp(d).canonical, 1) == 2 * n * (2 * n + 1) * d);
  }

  TEST_CASE("Prym dimension identity on 10000 random effective classes") {
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<Integer> dist(-6, 12);
    int tested = 0;
    while (tested < 10000) {
      const int d = static_cast<int>(rng() % 9) + 1;
      const SurfaceModel t = d == 9 ? makeSurface(SurfaceKind::projectivePlane()) : dp(d);
      IntVector v(t.rank());
      for (auto& x : v) x = dist(rng);
      const DivisorClass c(v);
      if (!classifyPositivity(t, c).effective) continue;
      ++tested;
      const Integer c2 = square(t.picard, c), cb = pair(t.picard, c, t.branch);
      CHECK(2 * (coveringGenus(t, c) - genusOf(t, c)) == c2 + cb / 2);
      CHECK(prymDimension(t, c, 1) == c2 + cb / 2);
      if (c2 > 0 && cb > 0) {
        CHECK(prymDimension(t, c, 1) > 0);
        CHECK(prymDimension(t, c, 1) % 2 == 0);
      }
    }
  }

  TEST_CASE("codimension of the non-integral pullback locus") {
    const SurfaceModel t1 = dp(1);
    const PullbackCodim c44 = nonIntegralPullbackCodim(t1, Integer{2} * t1.anticanonical());
    CHECK_FALSE(c44.empty);
    CHECK(c44.codim == 1);
    const SurfaceModel t3 = dp(3);
    CHECK(nonIntegralPullbackCodim(t3, fromPlaneModel(t3, 4, {2, 1, 1, 1, 1, 1})).empty);
    const SurfaceModel t2 = dp(2);
    CHECK(nonIntegralPullbackCodim(t2, Integer{2} * t2.anticanonical()).codim == 3);
    const SurfaceModel p2 = makeSurface(SurfaceKind::projectivePlane());
    CHECK(nonIntegralPullbackCodim(p2, DivisorClass({2})).codim == 3);
    CHECK_THROWS_AS(nonIntegralPullbackCodim(t3, t3.canonical), Error);
  }

  TEST_CASE("Milnor number") {
    CHECK(milnorNumber(1) == 0);
    CHECK(milnorNumber(2) == 1);
    CHECK(milnorNumber(3) == 2);
    CHECK_THROWS_AS(milnorNumber(0), Error);
  }

  TEST_CASE("hypothesis reports") {
    const SurfaceModel p2 = makeSurface(SurfaceKind::projectivePlane());
    const HypothesisReport cubic = hypothesisReport(p2, DivisorClass({1}), 3);
    CHECK(cubic.veryAmpleC.status == VeryAmpleVerdict::Status::VeryAmple);
    CHECK(cubic.veryAmpleD.status == VeryAmpleVerdict::Status::VeryAmple);
    CHECK(cubic.cbGreaterThanTwo);
    CHECK(cubic.not44);
    CHECK(cubic.twoConnected.twoConnected);
    CHECK(cubic.hyperelliptic == HypothesisReport::HyperellipticClause::Vacuous);
    CHECK((cubic.condA && cubic.condB && cubic.condC && cubic.condD));

    const HypothesisReport r2 = hypothesisReport(dp(2), dp(2).anticanonical(), 1);
    CHECK(r2.veryAmpleC.status == VeryAmpleVerdict::Status::NotVeryAmple);
    const HypothesisReport r1 = hypothesisReport(dp(1), dp(1).anticanonical(), 1);
    CHECK_FALSE(r1.cbGreaterThanTwo);
    CHECK(r1.cb == 2);
    const HypothesisReport r44 = hypothesisReport(dp(1), Integer{2} * dp(1).anticanonical(), 1);
    CHECK_FALSE(r44.not44);
    CHECK_FALSE(r44.condB);

    for (int d = 1; d <= 8; ++d)
      CHECK(hypothesisReport(dp(d), dp(d).anticanonical(), 1).hyperelliptic ==
            HypothesisReport::HyperellipticClause::Vacuous);
    CHECK_THROWS_AS(hypothesisReport(dp(3), dp(3).canonical, 1), Error);
  }

  TEST_CASE("verdicts for the example families") {
    using V = CertifiedExample::Verdict;
    const SurfaceModel p2 = makeSurface(SurfaceKind::projectivePlane());
    for (Integer n = 3; n <= 6; ++n) CHECK(verdict(p2, DivisorClass({1}), n).verdict == V::IrreducibleSymplectic);
    for (int d = 3; d <= 8; ++d) {
      const CertifiedExample ex = verdict(dp(d), dp(d).anticanonical(), 1);
      CHECK(ex.verdict == V::IrreducibleSymplectic);
      CHECK(ex.dimension == 2 * d);
      CHECK(ex.mukai.euler == 1 - coveringGenus(dp(d), dp(d).anticanonical()));
    }
    for (int d = 1; d <= 8; ++d) {
      IntVector b(static_cast<std::size_t>(9 - d), 1);
      b[0] = 2;
      for (Integer n = 1; n <= 3; ++n) {
        const CertifiedExample ex = verdict(dp(d), fromPlaneModel(dp(d), 4, b), n);
        CHECK(ex.verdict == V::IrreducibleSymplectic);
        CHECK(ex.dimension == n * n * (4 + d) + n * (2 + d));
      }
      for (Integer n = 1; n <= 2; ++n) {
        const CertifiedExample ex = verdict(dp(d), Integer{-2 * n} * dp(d).canonical, 1);
        CHECK((ex.verdict == V::IrreducibleSymplectic) == (d >= 2 || n >= 2));
      }
    }

    const CertifiedExample e1 = verdict(dp(1), dp(1).anticanonical(), 1);
    CHECK(e1.verdict == V::Inconclusive);
    CHECK(failedOn(e1, "CBgt2"));
    const CertifiedExample e2 = verdict(dp(2), dp(2).anticanonical(), 1);
    CHECK(e2.verdict == V::Inconclusive);
    CHECK(e2.failed == std::vector<std::string>{"veryAmpleC"});
    const CertifiedExample line = verdict(p2, DivisorClass({1}), 1);
    CHECK(line.failed == std::vector<std::string>{"veryAmpleD"});
    const CertifiedExample conic = verdict(p2, DivisorClass({2}), 1);
    CHECK(failedOn(conic, "twoConnected"));
    CHECK(conic.report.twoConnected.blExceptions.at(0).which == ConnectednessException::A2);
  }
}
