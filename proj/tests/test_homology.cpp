#include <doctest.h>

#include <random>

#include "prym/homology.hpp"

using namespace prym;

namespace {

CycleClass unit(const SymmetricHomologyModel& m, std::size_t i) {
  CycleClass e(IntVector(m.rank(), 0));
  e.coords[i] = 1;
  return e;
}

CycleClass randomCycle(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<Integer> dist(-5, 5);
  IntVector v(n);
  for (auto& x : v) x = dist(rng);
  return CycleClass(v);
}

}  // namespace

TEST_SUITE("homology") {
  TEST_CASE("model examples") {
    const auto m11 = buildModel(1, 1);
    CHECK(m11.rank() == 6);
    CHECK(m11.coverGenus() == 3);
    CHECK(antiInvariantSublattice(m11).rows() == 4);
    const auto m20 = buildModel(2, 0);
    CHECK(m20.rank() == 8);
    CHECK(m20.coverGenus() == 4);
    CHECK(antiInvariantSublattice(buildModel(2, 3)).rows() == 10);
    CHECK(buildModel(0, 0).rank() == 0);
    CHECK_THROWS_AS(buildModel(-1, 0), Error);
  }

  TEST_CASE("twist examples") {
    const auto m = buildModel(1, 1);
    const CycleClass b1 = unit(m, m.betaIndex(0)), b2 = unit(m, m.betaIndex(1));
    const CycleClass ib1 = unit(m, m.iBetaIndex(0)), ib2 = unit(m, m.iBetaIndex(1));
    const CycleClass c = b2 - ib2;
    CHECK(pair(m.form, c, b1) == -1);
    CHECK(twistPair(m, b1, c) == b2 - ib2 - b1 + ib1);
    CHECK(picardLefschetzTwist(m, b1, b1) == b1);
    CHECK(picardLefschetzTwist(m, b1, ib1) == ib1);
  }

  TEST_CASE("generation examples") {
    const auto m = buildModel(1, 1);
    const IntMatrix basis = antiInvariantSublattice(m);
    std::vector<CycleClass> cycles, doubled;
    for (std::size_t i = 0; i < basis.rows(); ++i) {
      cycles.emplace_back(basis.row(i));
      doubled.push_back(Integer{2} * CycleClass(basis.row(i)));
    }
    CHECK(generatesAntiInvariant(m, cycles).generates);
    const GenerationResult half = generatesAntiInvariant(m, doubled);
    CHECK_FALSE(half.generates);
    CHECK(half.index == BigInt(16));
    const CycleClass d1 = unit(m, m.deltaIndex(0)), d2 = unit(m, m.deltaIndex(1));
    const CycleClass b1 = unit(m, m.betaIndex(0)), b2 = unit(m, m.betaIndex(1));
    const CycleClass ib1 = unit(m, m.iBetaIndex(0)), ib2 = unit(m, m.iBetaIndex(1));
    CHECK(generatesAntiInvariant(m, {d1, d2, b1 - ib1, b2 - ib2}).generates);
    const GenerationResult partial = generatesAntiInvariant(m, {d1, d2});
    CHECK(partial.rankDeficiency == 2);
    CHECK_THROWS_AS(generatesAntiInvariant(m, {b1}), Error);
  }

  TEST_CASE("parity examples") {
    CHECK(parityObstruction(buildModel(2, 0)).even);
    const auto m11 = buildModel(1, 1);
    const ParityResult odd = parityObstruction(m11);
    CHECK_FALSE(odd.even);
    CHECK(odd.value % 2 != 0);
    CHECK(*odd.x == unit(m11, m11.deltaIndex(0)));
    CHECK(*odd.y == unit(m11, m11.deltaIndex(1)));
    const auto m10 = buildModel(1, 0);
    const CycleClass x = unit(m10, 0) - unit(m10, 2), y = unit(m10, 1) - unit(m10, 3);
    CHECK(pair(m10.form, x, y) == 2 * pair(m10.form, unit(m10, 0), unit(m10, 1)));
  }

  TEST_CASE("model properties for 0 <= l, m <= 4") {
    std::mt19937_64 rng(51);
    for (Integer l = 0; l <= 4; ++l)
      for (Integer m = 0; m <= 4; ++m) {
        CAPTURE(l);
        CAPTURE(m);
        const auto model = buildModel(l, m);
        const std::size_t n = model.rank();
        CHECK(n == static_cast<std::size_t>(4 * l + 2 * m));
        CHECK(multiplyChecked(model.involution, model.involution) == IntMatrix::identity(n));
        CHECK(multiplyChecked(multiplyChecked(model.involution.transposed(), model.form.gram()), model.involution) ==
              model.form.gram());
        if (n > 0) CHECK(abs(determinant(toBig(model.form.gram()))) == 1);
        CHECK(2 - 2 * model.coverGenus() == 2 * (2 - 2 * l) - (2 * m + 2));

        const IntMatrix basis = antiInvariantSublattice(model);
        CHECK(basis.rows() == static_cast<std::size_t>(2 * l + 2 * m));
        for (std::size_t i = 0; i < basis.rows(); ++i) {
          const CycleClass c(basis.row(i));
          CHECK((c + applyInvolution(model, c)).isZero());
        }
        for (Integer j = 0; j < 2 * l; ++j) {
          const CycleClass v = unit(model, model.betaIndex(j)) - unit(model, model.iBetaIndex(j));
          CHECK(generatesAntiInvariant(model, {v}).rankDeficiency == basis.rows() - 1);
        }

        // Twists about isotropic classes preserve the form and are unipotent.
        for (std::size_t a = 0; a < n; ++a) {
          const CycleClass alpha = unit(model, a);
          for (int trial = 0; trial < 3; ++trial) {
            const CycleClass x = randomCycle(rng, n), y = randomCycle(rng, n);
            CHECK(pair(model.form, picardLefschetzTwist(model, alpha, x), picardLefschetzTwist(model, alpha, y)) ==
                  pair(model.form, x, y));
            const CycleClass once = picardLefschetzTwist(model, alpha, x) - x;
            CHECK((picardLefschetzTwist(model, alpha, once) - once).isZero());
          }
        }

        CHECK(parityObstruction(model).even == (m == 0));
        if (m >= 1) {
          const auto c = unitPairingCycle(model, unit(model, model.deltaIndex(0)));
          REQUIRE(c.has_value());
          CHECK(pair(model.form, *c, unit(model, model.deltaIndex(0))) == 1);
          CHECK((*c + applyInvolution(model, *c)).isZero());
          const GenerationResult g = generatesAntiInvariant(model, commutatorImages(model));
          CHECK(g.generates);
        } else {
          // Anti-invariant classes pair evenly with each other.
          for (std::size_t i = 0; i < basis.rows(); ++i)
            for (std::size_t j = 0; j < basis.rows(); ++j)
              CHECK(pair(model.form, CycleClass(basis.row(i)), CycleClass(basis.row(j))) % 2 == 0);
        }

        if (l > 0) {
          const IntMatrix f = pushforward(model);
          for (std::size_t i = 0; i < basis.rows(); ++i) {
            const CycleClass c(basis.row(i));
            // f_* kills anti-invariant classes.
            CHECK(isZero(multiplyChecked(f, c.coords)));
          }
        }
      }
  }
}
