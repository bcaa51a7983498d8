#include "prym/effective.hpp"

#include <algorithm>
#include <array>
#include <mutex>

#include "prym/level_set.hpp"

namespace prym {

std::vector<DivisorClass> minusOneCurves(const SurfaceModel& t) {
  LevelSetSearch search(t.picard, t.anticanonical());
  std::vector<DivisorClass> out;
  for (auto& e : search.find(1, -1))
    if (square(t.picard, e) == -1) out.push_back(std::move(e));
  return out;
}

const std::vector<DivisorClass>& extremalRays(const SurfaceModel& t) {
  static std::array<std::once_flag, 10> once;
  static std::array<std::vector<DivisorClass>, 10> rays;
  const int d = t.degree();
  std::call_once(once[static_cast<std::size_t>(d)], [&] {
    auto& out = rays[static_cast<std::size_t>(d)];
    if (t.kind.family == SurfaceKind::Family::ProjectivePlane) {
      out.push_back(DivisorClass({1}));
    } else if (d == 8) {
      out.push_back(DivisorClass({0, 1}));   // E1
      out.push_back(DivisorClass({1, -1}));  // H - E1
    } else {
      out = minusOneCurves(t);
    }
  });
  return rays[static_cast<std::size_t>(d)];
}

PositivityFlags classifyPositivity(const SurfaceModel& t, const DivisorClass& input) {
  const auto& rays = extremalRays(t);
  const DivisorClass antiK = t.anticanonical();
  PositivityFlags flags;

  bool allPositive = true;
  flags.nef = true;
  for (const auto& r : rays) {
    const Integer p = pair(t.picard, input, r);
    if (p < 0) flags.nef = false;
    if (p <= 0) allPositive = false;
  }
  flags.ample = flags.nef && allPositive && square(t.picard, input) > 0;

  // Fixed-component reduction: a curve class meeting A negatively is a fixed component
  // of |A|; each subtraction lowers the anticanonical degree by R.(-K) >= 1.
  DivisorClass a = input;
  for (;;) {
    if (pair(t.picard, a, antiK) < 0) {
      flags.effective = false;
      break;
    }
    const DivisorClass* negative = nullptr;
    for (const auto& r : rays)
      if (pair(t.picard, a, r) < 0) {
        negative = &r;
        break;
      }
    if (negative == nullptr) {
      flags.effective = true;  // nef residual (possibly zero)
      break;
    }
    a = a - *negative;
  }
  return flags;
}

namespace {

Decomposition makeDecomposition(const SurfaceModel& t, const DivisorClass& c1, const DivisorClass& c2) {
  Decomposition d;
  if (c2 < c1) {
    d.first = c2;
    d.second = c1;
  } else {
    d.first = c1;
    d.second = c2;
  }
  d.pairing = pair(t.picard, c1, c2);
  return d;
}

bool nonzeroEffective(const SurfaceModel& t, const DivisorClass& c) {
  return !c.isZero() && classifyPositivity(t, c).effective;
}

}  // namespace

void forEachEffectiveDecomposition(const SurfaceModel& t, const DivisorClass& c,
                                   const std::function<void(const Decomposition&)>& visit) {
  if (c.size() != t.rank()) throw Error(ErrorCode::DimensionMismatch, "class length differs from Picard rank");
  if (!classifyPositivity(t, c).effective)
    throw Error(ErrorCode::NotEffective, "class " + formatVector(c.coords) + " is not effective");
  const DivisorClass antiK = t.anticanonical();
  const Integer degree = pair(t.picard, c, antiK);
  const std::size_t points = t.rank() - 1;
  const Integer aC = c.coords[0];

  // Plane-model coordinates: class = a H + sum c_i E_i, so b_i = -c_i and
  // -K.(class) = 3a + sum c_i. Each coordinate range is the box bound for C1 intersected
  // with the same bound for C2 = C - C1.
  DivisorClass c1(IntVector(t.rank(), 0));
  std::vector<Integer> lo(points), hi(points);
  std::function<void(std::size_t, Integer)> recurse = [&](std::size_t i, Integer partial) {
    if (i == points) {
      if (partial < 1 || partial > degree - 1) return;
      const DivisorClass c2 = c - c1;
      if (c2 < c1) return;
      if (!nonzeroEffective(t, c1) || !nonzeroEffective(t, c2)) return;
      visit(makeDecomposition(t, c1, c2));
      return;
    }
    Integer restLo = 0, restHi = 0;
    for (std::size_t j = i + 1; j < points; ++j) {
      restLo += lo[j];
      restHi += hi[j];
    }
    for (Integer v = lo[i]; v <= hi[i]; ++v) {
      const Integer s = partial + v;
      if (s + restHi < 1 || s + restLo > degree - 1) continue;
      c1.coords[i + 1] = v;
      recurse(i + 1, s);
    }
    c1.coords[i + 1] = 0;
  };

  for (Integer a = 0; a <= aC; ++a) {
    c1.coords[0] = a;
    const Integer a2 = aC - a;
    bool empty = false;
    for (std::size_t i = 0; i < points; ++i) {
      const Integer cC = c.coords[i + 1];
      lo[i] = std::max(-a, cC - degree);
      hi[i] = std::min(degree, cC + a2);
      if (lo[i] > hi[i]) empty = true;
    }
    if (empty) continue;
    recurse(0, 3 * a);
  }
}

std::vector<Decomposition> effectiveDecompositions(const SurfaceModel& t, const DivisorClass& c) {
  std::vector<Decomposition> out;
  forEachEffectiveDecomposition(t, c, [&](const Decomposition& d) { out.push_back(d); });
  return out;
}

std::vector<Decomposition> effectiveDecompositionsUpTo(const SurfaceModel& t, const DivisorClass& c,
                                                       Integer maxPairing) {
  if (c.size() != t.rank()) throw Error(ErrorCode::DimensionMismatch, "class length differs from Picard rank");
  const PositivityFlags flags = classifyPositivity(t, c);
  if (!flags.nef) throw Error(ErrorCode::InvalidArgument, "bounded decomposition search needs a nef class");
  std::vector<Decomposition> out;
  auto consider = [&](const DivisorClass& c1) {
    const DivisorClass c2 = c - c1;
    if (pair(t.picard, c1, c2) > maxPairing) return;
    if (!nonzeroEffective(t, c1) || !nonzeroEffective(t, c2)) return;
    out.push_back(makeDecomposition(t, c1, c2));
  };
  const Integer c2 = square(t.picard, c);
  const Integer low = flags.ample ? 1 : 0;
  if (c2 > 0) {
    // Slice by t = C1.C; one of the two parts has t <= C^2/2, and C1.C2 = t - C1^2.
    LevelSetSearch search(t.picard, c);
    for (Integer v = low; 2 * v <= c2; ++v)
      for (const auto& c1 : search.find(v, v - maxPairing)) consider(c1);
  } else {
    // C^2 = 0: slice by the anticanonical degree instead, using C1.C >= 0.
    const DivisorClass antiK = t.anticanonical();
    const Integer degree = pair(t.picard, c, antiK);
    LevelSetSearch search(t.picard, antiK);
    for (Integer k = 1; 2 * k <= degree; ++k)
      for (const auto& c1 : search.find(k, low - maxPairing)) consider(c1);
  }
  std::sort(out.begin(), out.end(), [](const Decomposition& x, const Decomposition& y) { return x.first < y.first; });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const Decomposition& x, const Decomposition& y) { return x.first == y.first; }),
            out.end());
  return out;
}

std::string describe(ConnectednessException e) {
  switch (e) {
    case ConnectednessException::A1: return "A1";
    case ConnectednessException::A2: return "A2";
    case ConnectednessException::A3: return "A3";
    case ConnectednessException::A4: return "A4";
  }
  return "?";
}

std::vector<ExceptionMatch> connectednessExceptions(const SurfaceModel& t, const DivisorClass& c) {
  std::vector<ExceptionMatch> out;
  const Integer c2 = square(t.picard, c);
  // A1 needs the smooth quadric, which is not a supported model.
  if (t.kind.family == SurfaceKind::Family::ProjectivePlane && c == DivisorClass({2}))
    out.push_back({ConnectednessException::A2, true, "C^2 = 4 on P2 with C = O(2)"});

  if (c2 == 4 && std::all_of(c.coords.begin(), c.coords.end(), [](Integer x) { return x % 2 == 0; })) {
    DivisorClass half(c.coords);
    for (auto& x : half.coords) x /= 2;
    if (classifyPositivity(t, half).ample) {
      const LinearSystemDim dim = linearSystemDim(t, half);
      const Integer deltaGenus = 2 + square(t.picard, half) - (dim.value + 1);
      if (dim.exact) {
        if (deltaGenus == 1 || deltaGenus == 2)
          out.push_back({ConnectednessException::A3, true,
                         "C = 2L with L = " + formatVector(half.coords) + ", Delta-genus " +
                             std::to_string(deltaGenus)});
      } else {
        out.push_back({ConnectednessException::A3, false,
                       "C = 2L with L = " + formatVector(half.coords) + ", Delta-genus unresolved (" + dim.note + ")"});
      }
    }
  }

  if (t.kind.family == SurfaceKind::Family::DelPezzo && t.degree() == 8 &&
      pair(t.picard, c, DivisorClass({1, -1})) == 1)
    out.push_back({ConnectednessException::A4, true, "C is a section of the ruling plus fibres"});
  return out;
}

ConnectednessVerdict isTwoConnected(const SurfaceModel& t, const DivisorClass& c) {
  ConnectednessVerdict verdict;
  const PositivityFlags flags = classifyPositivity(t, c);
  if (!flags.effective) throw Error(ErrorCode::NotEffective, "class " + formatVector(c.coords) + " is not effective");

  auto minimal = [](const std::vector<Decomposition>& ds) -> std::optional<Decomposition> {
    if (ds.empty()) return std::nullopt;
    return *std::min_element(ds.begin(), ds.end(),
                             [](const Decomposition& x, const Decomposition& y) { return x.pairing < y.pairing; });
  };

  if (flags.nef) {
    verdict.witness = minimal(effectiveDecompositionsUpTo(t, c, 1));
    if (!verdict.witness) {
      // Every subtraction of a curve generator with an effective residual bounds the minimum.
      std::optional<Integer> bound;
      for (const auto& r : extremalRays(t)) {
        const DivisorClass rest = c - r;
        if (rest.isZero() || !classifyPositivity(t, rest).effective) continue;
        const Integer p = pair(t.picard, r, rest);
        if (!bound || p < *bound) bound = p;
      }
      verdict.witness = bound ? minimal(effectiveDecompositionsUpTo(t, c, *bound))
                              : minimal(effectiveDecompositions(t, c));
    }
  } else {
    verdict.witness = minimal(effectiveDecompositions(t, c));
  }
  verdict.twoConnected = !verdict.witness || verdict.witness->pairing >= 2;

  if (flags.ample) {
    verdict.blExceptions = connectednessExceptions(t, c);
    if (!verdict.twoConnected && verdict.blExceptions.empty())
      throw Error(ErrorCode::Inconsistent,
                  "ample class " + formatVector(c.coords) +
                      " fails 2-connectedness without matching any listed exception");
  }
  return verdict;
}

}  // namespace prym
