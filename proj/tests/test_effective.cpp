#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "prym/effective.hpp"

using namespace prym;

namespace {

SurfaceModel dp(int d) { return makeSurface(SurfaceKind::delPezzo(d)); }

// Ample classes aH - sum b_i E_i with b sorted descending and anticanonical degree <= maxDegree.
std::vector<DivisorClass> ampleClasses(const SurfaceModel& t, Integer maxA, Integer maxDegree) {
  std::vector<DivisorClass> out;
  const std::size_t r = t.rank() - 1;
  IntVector b(r);
  std::function<void(Integer, std::size_t, Integer)> fill = [&](Integer a, std::size_t i, Integer cap) {
    if (i == r) {
      const DivisorClass c = fromPlaneModel(t, a, b);
      if (pair(t.picard, c, t.anticanonical()) <= maxDegree && classifyPositivity(t, c).ample) out.push_back(c);
      return;
    }
    for (Integer v = 1; v <= cap; ++v) {
      b[i] = v;
      fill(a, i + 1, v);
    }
  };
  for (Integer a = 1; a <= maxA; ++a) fill(a, 0, a);
  return out;
}

}  // namespace

TEST_SUITE("effective") {
  TEST_CASE("(-1)-curve counts agree with both oracles") {
    const std::size_t expected[] = {240, 56, 27, 16, 10, 6, 3, 1};
    for (int d = 1; d <= 8; ++d) {
      const SurfaceModel t = dp(d);
      const auto curves = minusOneCurves(t);
      CHECK(curves.size() == expected[d - 1]);
      CHECK(curves == oracle::minusOneCurves(t));
      if (d <= 6) CHECK(curves == oracle::cremonaClosure(t));
    }
  }

  TEST_CASE("positivity of named classes") {
    for (int d = 1; d <= 8; ++d) {
      const SurfaceModel t = dp(d);
      const PositivityFlags k = classifyPositivity(t, t.anticanonical());
      CHECK(k.ample);
      const PositivityFlags h = classifyPositivity(t, fromPlaneModel(t, 1, {}));
      CHECK(h.nef);
      CHECK_FALSE(h.ample);
      CHECK(h.effective);
      const PositivityFlags e = classifyPositivity(t, fromPlaneModel(t, 0, {-1}));
      CHECK(e.effective);
      CHECK_FALSE(e.nef);
      CHECK_FALSE(classifyPositivity(t, fromPlaneModel(t, 0, {1})).effective);
      CHECK_FALSE(classifyPositivity(t, t.canonical).effective);
    }
    const SurfaceModel t3 = dp(3);
    CHECK_FALSE(classifyPositivity(t3, fromPlaneModel(t3, 2, {1, 1, 1, 1, 1, 1})).effective);
    CHECK(classifyPositivity(t3, fromPlaneModel(t3, 2, {1, 1, 1, 1, 1})).effective);
    const SurfaceModel p2 = makeSurface(SurfaceKind::projectivePlane());
    CHECK(classifyPositivity(p2, DivisorClass({1})).ample);
    CHECK_FALSE(classifyPositivity(p2, DivisorClass({-1})).effective);
    CHECK(classifyPositivity(p2, DivisorClass({0})).effective);
  }

  TEST_CASE("nef implies effective; effective classes are closed under sums") {
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<Integer> dist(-4, 6);
    for (int k = 0; k < 2000; ++k) {
      const SurfaceModel t = dp(1 + k % 8);
      IntVector v(t.rank());
      for (auto& x : v) x = dist(rng);
      v[0] = std::abs(v[0]);
      const DivisorClass c(v);
      const PositivityFlags f = classifyPositivity(t, c);
      if (f.nef) CHECK(f.effective);
      if (f.ample) CHECK(f.nef);
      IntVector w(t.rank());
      for (auto& x : w) x = dist(rng);
      const DivisorClass c2(w);
      if (f.effective && classifyPositivity(t, c2).effective) CHECK(classifyPositivity(t, c + c2).effective);
    }
  }

  TEST_CASE("box decompositions equal the slow oracle") {
    for (int d : {4, 5, 6, 7, 8}) {
      const SurfaceModel t = dp(d);
      for (const auto& c : ampleClasses(t, 4, d >= 6 ? 7 : 5)) {
        const auto box = effectiveDecompositions(t, c);
        const auto slow = oracle::slowDecompositions(t, c);
        REQUIRE(box.size() == slow.size());
        for (std::size_t i = 0; i < box.size(); ++i) {
          CHECK(box[i].first == slow[i].first);
          CHECK(box[i].pairing == slow[i].pairing);
        }
      }
    }
    // A non-nef class as well.
    const SurfaceModel t = dp(6);
    const DivisorClass c = fromPlaneModel(t, 1, {0, 0, -1});
    CHECK(effectiveDecompositions(t, c).size() == oracle::slowDecompositions(t, c).size());
  }

  TEST_CASE("capped decompositions equal the box filtered by pairing") {
    for (int d : {3, 4, 6, 8}) {
      const SurfaceModel t = dp(d);
      for (const auto& c : ampleClasses(t, 5, 8)) {
        const auto box = effectiveDecompositions(t, c);
        for (Integer cap : {0, 1, 2, 3}) {
          std::vector<DivisorClass> expected;
          for (const auto& dec : box)
            if (dec.pairing <= cap) expected.push_back(dec.first);
          std::vector<DivisorClass> got;
          for (const auto& dec : effectiveDecompositionsUpTo(t, c, cap)) got.push_back(dec.first);
          CHECK(got == expected);
        }
      }
    }
  }

  TEST_CASE("2-connectedness examples") {
    const SurfaceModel p2 = makeSurface(SurfaceKind::projectivePlane());
    const ConnectednessVerdict conic = isTwoConnected(p2, DivisorClass({2}));
    CHECK_FALSE(conic.twoConnected);
    REQUIRE(conic.witness.has_value());
    CHECK(conic.witness->pairing == 1);
    REQUIRE(conic.blExceptions.size() == 1);
    CHECK(conic.blExceptions[0].which == ConnectednessException::A2);
    CHECK(isTwoConnected(p2, DivisorClass({3})).twoConnected);
    CHECK(isTwoConnected(p2, DivisorClass({1})).twoConnected);  // no decomposition at all

    // Section plus one fibre on the blow-up of the plane in a point.
    const SurfaceModel f1 = dp(8);
    const DivisorClass section = fromPlaneModel(f1, 2, {1});  // E1 + 2(H - E1)
    CHECK(classifyPositivity(f1, section).ample);
    const ConnectednessVerdict v = isTwoConnected(f1, section);
    CHECK_FALSE(v.twoConnected);
    REQUIRE_FALSE(v.blExceptions.empty());
    CHECK(v.blExceptions[0].which == ConnectednessException::A4);

    for (int d = 3; d <= 8; ++d) CHECK(isTwoConnected(dp(d), dp(d).anticanonical()).twoConnected);
    const SurfaceModel t1 = dp(1);
    const ConnectednessVerdict twoK = isTwoConnected(t1, Integer{2} * t1.anticanonical());
    CHECK_FALSE(twoK.twoConnected);
    REQUIRE_FALSE(twoK.blExceptions.empty());
    CHECK(twoK.blExceptions[0].which == ConnectednessException::A3);
    CHECK_THROWS_AS(isTwoConnected(t1, t1.canonical), Error);
  }

  TEST_CASE("direct 2-connectedness matches the exception list on small dP3/dP4 classes") {
    for (int d : {3, 4}) {
      const SurfaceModel t = dp(d);
      for (const auto& c : ampleClasses(t, 5, 8)) {
        const ConnectednessVerdict v = isTwoConnected(t, c);
        CHECK(v.twoConnected == v.blExceptions.empty());
      }
    }
  }
}
