#include "prym/ampleness.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "prym/effective.hpp"
#include "prym/level_set.hpp"

namespace prym {

std::string describe(ReiderException::Kind kind) {
  switch (kind) {
    case ReiderException::Kind::Orthogonal: return "D.E=0,E^2<0";
    case ReiderException::Kind::DegreeOne: return "D.E=1";
    case ReiderException::Kind::DegreeTwo: return "D.E=2,E^2=0";
    case ReiderException::Kind::Triple: return "D=3E,E^2=1";
    case ReiderException::Kind::HalfClass: return "D=2E,E^2=2";
  }
  return "?";
}

std::string describe(VeryAmpleVerdict::Status status) {
  switch (status) {
    case VeryAmpleVerdict::Status::VeryAmple: return "VeryAmple";
    case VeryAmpleVerdict::Status::NotVeryAmple: return "NotVeryAmple";
    case VeryAmpleVerdict::Status::NotDetermined: return "NotDetermined";
  }
  return "?";
}

namespace {

VeryAmpleVerdict make(VeryAmpleVerdict::Status status, std::string reason) {
  VeryAmpleVerdict v;
  v.status = status;
  v.reason = std::move(reason);
  return v;
}

Integer sum(const IntVector& b, std::size_t from, std::size_t to) {
  Integer s = 0;
  for (std::size_t i = from; i < to && i < b.size(); ++i) s = checkedAdd(s, b[i]);
  return s;
}

// Inequalities for b sorted descending; returns the first violated one.
std::optional<std::string> violatedInequality(int d, Integer a, const IntVector& b) {
  const std::size_t r = b.size();
  auto need = [](Integer lhs, Integer rhs) { return lhs >= rhs; };
  if (d == 8) {
    if (!need(a, b[0] + 1)) return "a >= b1 + 1";
    return std::nullopt;
  }
  if (!need(a, b[0] + b[1] + 1)) return "a >= b1 + b2 + 1";
  if (d <= 4 && !need(2 * a, sum(b, 0, 5) + 1)) return "2a >= b1 + ... + b5 + 1";
  if (d <= 2 && !need(3 * a, 2 * b[0] + sum(b, 1, 7) + 1)) return "3a >= 2b1 + b2 + ... + b7 + 1";
  if (d == 1) {
    if (!need(4 * a, 2 * sum(b, 0, 3) + sum(b, 3, r) + 1)) return "4a >= 2(b1 + b2 + b3) + b4 + ... + b8 + 1";
    if (!need(5 * a, 2 * sum(b, 0, 6) + sum(b, 6, r) + 1)) return "5a >= 2(b1 + ... + b6) + b7 + b8 + 1";
    if (!need(6 * a, 3 * b[0] + 2 * sum(b, 1, r) + 1)) return "6a >= 3b1 + 2(b2 + ... + b8) + 1";
  }
  return std::nullopt;
}

}  // namespace

VeryAmpleVerdict veryAmpleOnQuotient(const SurfaceModel& t, const DivisorClass& c) {
  if (c.size() != t.rank()) throw Error(ErrorCode::DimensionMismatch, "class length differs from Picard rank");
  using S = VeryAmpleVerdict::Status;
  if (t.kind.family == SurfaceKind::Family::ProjectivePlane) {
    if (c.coords[0] >= 1) return make(S::VeryAmple, "O(a) on P2 with a >= 1");
    return make(S::NotVeryAmple, "O(a) on P2 with a < 1");
  }
  const int d = t.degree();
  const DivisorClass antiK = t.anticanonical();
  if (c == antiK && d == 2) return make(S::NotVeryAmple, "-K on degree 2 is the double cover of the plane");
  if ((c == antiK || c == Integer{2} * antiK) && d == 1)
    return make(S::NotDetermined, "excluded by criterion statement");

  auto [a, b] = toPlaneModel(t, c);
  std::sort(b.begin(), b.end(), std::greater<>());
  if (b.back() < 1) return make(S::NotVeryAmple, "some b_i < 1");
  if (auto failed = violatedInequality(d, a, b)) return make(S::NotVeryAmple, "fails " + *failed);
  return make(S::VeryAmple, "degree " + std::to_string(d) + " inequalities hold");
}

namespace {

void collect(const GramLattice& ns, const DivisorClass& d, const LevelSetSearch& search, Integer t,
             std::initializer_list<Integer> squares, ReiderException::Kind kind, std::vector<ReiderException>& out) {
  const Integer lowest = *std::min_element(squares.begin(), squares.end());
  for (auto& e : search.find(t, lowest)) {
    if (e.isZero()) continue;
    const Integer sq = square(ns, e);
    if (std::find(squares.begin(), squares.end(), sq) == squares.end()) continue;
    if (kind == ReiderException::Kind::Triple && !(Integer{3} * e == d)) continue;
    out.push_back({std::move(e), kind, t, sq});
  }
}

}  // namespace

std::vector<ReiderException> reiderExceptionalSearch(const GramLattice& ns, const DivisorClass& d) {
  if (d.size() != ns.rank()) throw Error(ErrorCode::DimensionMismatch, "class length differs from lattice rank");
  if (square(ns, d) <= 0) throw Error(ErrorCode::InvalidArgument, "exceptional search needs D^2 > 0");
  LevelSetSearch search(ns, d);
  std::vector<ReiderException> out;
  using K = ReiderException::Kind;
  collect(ns, d, search, 0, {-1, -2}, K::Orthogonal, out);
  collect(ns, d, search, 1, {0, -1}, K::DegreeOne, out);
  collect(ns, d, search, 2, {0}, K::DegreeTwo, out);
  collect(ns, d, search, 3, {1}, K::Triple, out);
  return out;
}

VeryAmpleVerdict veryAmpleOnK3(const SurfaceModel& t, const DivisorClass& c, Integer n) {
  using S = VeryAmpleVerdict::Status;
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "multiplier n must be >= 1");
  if (!classifyPositivity(t, c).ample)
    throw Error(ErrorCode::NotAmple, "class " + formatVector(c.coords) + " is not ample on " + t.kind.name());
  if (n >= 3) return make(S::VeryAmple, "n >= 3 multiple of an ample class on a K3");

  const DivisorClass d = pullbackToK3(t, n * c);
  const Integer d2 = square(t.k3, d);
  if (d2 > 8) {
    auto witnesses = reiderExceptionalSearch(t.k3, d);
    if (witnesses.empty()) return make(S::VeryAmple, "D^2 = " + std::to_string(d2) + " > 8, no exceptional class");
    VeryAmpleVerdict v = make(S::NotDetermined, "Reider obstruction");
    v.witnesses = std::move(witnesses);
    return v;
  }
  if (d2 >= 4) {
    // Ample D with D^2 >= 4 fails to be very ample only through an elliptic pencil of
    // degree 1 or 2 or through D = 2B with B^2 = 2.
    LevelSetSearch search(t.k3, d);
    std::vector<ReiderException> witnesses;
    collect(t.k3, d, search, 1, {0}, ReiderException::Kind::DegreeOne, witnesses);
    collect(t.k3, d, search, 2, {0}, ReiderException::Kind::DegreeTwo, witnesses);
    if (std::all_of(d.coords.begin(), d.coords.end(), [](Integer x) { return x % 2 == 0; })) {
      DivisorClass half(d.coords);
      for (auto& x : half.coords) x /= 2;
      if (square(t.k3, half) == 2)
        witnesses.push_back({half, ReiderException::Kind::HalfClass, pair(t.k3, d, half), 2});
    }
    if (witnesses.empty())
      return make(S::VeryAmple, "D^2 = " + std::to_string(d2) + ", no isotropic class of degree 1 or 2, D not 2B");
    VeryAmpleVerdict v = make(S::NotDetermined, "hyperelliptic or elliptic-pencil obstruction (D^2 = " +
                                                    std::to_string(d2) + ")");
    v.witnesses = std::move(witnesses);
    return v;
  }
  return make(S::NotDetermined, "Reider hypothesis D^2>8 fails (D^2=" + std::to_string(d2) + ")");
}

}  // namespace prym
