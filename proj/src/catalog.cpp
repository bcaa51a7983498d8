#include "prym/catalog.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <sstream>
#include <thread>

namespace prym {

std::pair<Integer, IntVector> parseDivisor(const SurfaceModel& t, const std::string& text) {
  std::vector<Integer> values;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidArgument, "malformed divisor entry '" + item + "'");
    }
    if (used != item.size()) throw Error(ErrorCode::InvalidArgument, "malformed divisor entry '" + item + "'");
    values.push_back(static_cast<Integer>(v));
  }
  if (values.size() != t.rank())
    throw Error(ErrorCode::InvalidArgument, "surface " + t.kind.name() + " takes " + std::to_string(t.rank()) +
                                                " coefficients (a, b1, ...), got " + std::to_string(values.size()));
  return {values[0], IntVector(values.begin() + 1, values.end())};
}

namespace {

std::string status(VeryAmpleVerdict::Status s) {
  switch (s) {
    case VeryAmpleVerdict::Status::VeryAmple: return "pass";
    case VeryAmpleVerdict::Status::NotVeryAmple: return "fail";
    case VeryAmpleVerdict::Status::NotDetermined: return "undetermined";
  }
  return "undetermined";
}

Json check(const std::string& st, const std::string& detail) {
  Json j;
  j["status"] = st;
  j["detail"] = detail;
  return j;
}

std::string veryAmpleDetail(const VeryAmpleVerdict& v) {
  std::string out = v.reason;
  for (const auto& w : v.witnesses) out += "; " + describe(w.kind) + " E=" + formatVector(w.e.coords);
  return out;
}

std::string verdictText(const CertifiedExample& ex) {
  if (ex.verdict == CertifiedExample::Verdict::IrreducibleSymplectic) return describe(ex.verdict);
  std::string out = "Inconclusive(";
  for (std::size_t i = 0; i < ex.failed.size(); ++i) out += (i ? "," : "") + ex.failed[i];
  return out + ")";
}

Json numerics(const SurfaceModel& t, const DivisorClass& nc) {
  Json j;
  j["C2"] = square(t.picard, nc);
  j["CB"] = pair(t.picard, nc, t.branch);
  j["genusC"] = genusOf(t, nc);
  j["genusD"] = coveringGenus(t, nc);
  const LinearSystemDim dim = linearSystemDim(t, nc);
  j["dimLinSys"] = dim.exact ? Json(dim.value) : Json(nullptr);
  j["prymDim"] = prymDimension(t, nc, 1);
  return j;
}

}  // namespace

Json makeRecord(const SurfaceModel& t, Integer a, const IntVector& b, Integer n, bool assertNonHyperelliptic) {
  const DivisorClass c = fromPlaneModel(t, a, b);
  const CertifiedExample ex = verdict(t, c, n, assertNonHyperelliptic);
  const HypothesisReport& r = ex.report;
  const DivisorClass nc = n * c;

  Json rec;
  rec["schemaVersion"] = kSchemaVersion;
  Json surface;
  surface["kind"] = t.kind.name();
  if (t.kind.family == SurfaceKind::Family::DelPezzo) surface["degree"] = t.degree();
  surface["nikulin"] = {t.nikulin.r, t.nikulin.a, t.nikulin.delta};
  rec["surface"] = surface;
  Json divisor;
  divisor["a"] = a;
  divisor["b"] = b;
  divisor["n"] = n;
  rec["divisor"] = divisor;
  rec["numerics"] = numerics(t, nc);

  Json checks;
  checks["veryAmpleC"] = check(status(r.veryAmpleC.status), veryAmpleDetail(r.veryAmpleC));
  checks["veryAmpleD"] = check(status(r.veryAmpleD.status), veryAmpleDetail(r.veryAmpleD));
  checks["CBgt2"] = check(r.cbGreaterThanTwo ? "pass" : "fail", "C.B = " + std::to_string(r.cb));
  checks["not44"] = check(r.not44 ? "pass" : "fail",
                          "(C^2, C.B) = (" + std::to_string(r.c2) + ", " + std::to_string(r.cb) + ")");
  std::string conn;
  if (r.twoConnected.witness) {
    const auto& w = *r.twoConnected.witness;
    conn = "min C1.C2 = " + std::to_string(w.pairing) + " at " + formatVector(w.first.coords) + " + " +
           formatVector(w.second.coords);
  } else {
    conn = "no effective decomposition";
  }
  for (const auto& e : r.twoConnected.blExceptions)
    conn += "; exception " + describe(e.which) + (e.certain ? "" : " (possible)") + ": " + e.detail;
  checks["twoConnected"] = check(r.condC ? "pass" : "fail", conn);
  if (r.hyperelliptic == HypothesisReport::HyperellipticClause::Vacuous)
    checks["hyperelliptic"] = check("pass", "vacuous: B^2 = " + std::to_string(r.branchSquare) + " > 0");
  else
    checks["hyperelliptic"] = check(r.condD ? "pass" : "undetermined",
                                    r.condD ? "non-hyperellipticity asserted by caller"
                                            : "B^2 <= 0: requires C non-hyperelliptic");
  rec["checks"] = checks;
  rec["verdict"] = verdictText(ex);
  rec["toolVersion"] = kToolVersion;
  return rec;
}

std::vector<std::string> selfCheck(const Json& record) {
  std::vector<std::string> diffs;
  try {
    const SurfaceModel t = makeSurface(SurfaceKind::parse(record.at("surface").at("kind").get<std::string>()));
    const Integer a = record.at("divisor").at("a").get<Integer>();
    const IntVector b = record.at("divisor").at("b").get<IntVector>();
    const Integer n = record.at("divisor").at("n").get<Integer>();
    const Json expected = numerics(t, n * fromPlaneModel(t, a, b));
    const Json& stored = record.at("numerics");
    for (const auto& [key, value] : expected.items()) {
      if (!stored.contains(key))
        diffs.push_back(key + ": missing");
      else if (stored.at(key) != value)
        diffs.push_back(key + ": stored " + stored.at(key).dump() + ", recomputed " + value.dump());
    }
  } catch (const std::exception& e) {
    diffs.push_back(std::string("unreadable record: ") + e.what());
  }
  return diffs;
}

namespace {

const char* kCheckNames[] = {"veryAmpleC", "veryAmpleD", "CBgt2", "not44", "twoConnected", "hyperelliptic"};

std::string csvQuote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

std::string csvHeader() {
  std::string h = "schemaVersion,surface,degree,nikulin,a,b,n,C2,CB,genusC,genusD,dimLinSys,prymDim";
  for (const char* name : kCheckNames) h += std::string(",") + name;
  return h + ",verdict,toolVersion";
}

std::string csvRow(const Json& rec) {
  std::ostringstream out;
  const Json& s = rec.at("surface");
  const Json& nikulin = s.at("nikulin");
  out << rec.at("schemaVersion").get<int>() << ',' << s.at("kind").get<std::string>() << ','
      << (s.contains("degree") ? s.at("degree").dump() : "") << ',' << nikulin[0] << ';' << nikulin[1] << ';'
      << nikulin[2] << ',';
  const Json& d = rec.at("divisor");
  out << d.at("a").dump() << ',';
  bool first = true;
  for (const auto& x : d.at("b")) {
    out << (first ? "" : ";") << x.dump();
    first = false;
  }
  out << ',' << d.at("n").dump();
  for (const char* key : {"C2", "CB", "genusC", "genusD", "dimLinSys", "prymDim"}) {
    const Json& v = rec.at("numerics").at(key);
    out << ',' << (v.is_null() ? "" : v.dump());
  }
  for (const char* name : kCheckNames) out << ',' << rec.at("checks").at(name).at("status").get<std::string>();
  out << ',' << csvQuote(rec.at("verdict").get<std::string>()) << ',' << rec.at("toolVersion").get<std::string>();
  return out.str();
}

std::string humanReport(const Json& rec) {
  std::ostringstream out;
  const Json& d = rec.at("divisor");
  out << "surface  " << rec.at("surface").at("kind").get<std::string>() << "\n";
  out << "divisor  a=" << d.at("a").dump() << " b=" << d.at("b").dump() << " n=" << d.at("n").dump() << "\n";
  for (const auto& [key, value] : rec.at("numerics").items()) out << "  " << key << " = " << value.dump() << "\n";
  for (const auto& [key, value] : rec.at("checks").items())
    out << "  [" << value.at("status").get<std::string>() << "] " << key << ": "
        << value.at("detail").get<std::string>() << "\n";
  out << "verdict  " << rec.at("verdict").get<std::string>() << "\n";
  return out.str();
}

std::string recordKey(const Json& rec) {
  IntVector b = rec.at("divisor").at("b").get<IntVector>();
  std::sort(b.begin(), b.end(), std::greater<>());
  return rec.at("surface").at("kind").get<std::string>() + "|" + rec.at("divisor").at("a").dump() + "|" +
         formatVector(b) + "|" + rec.at("divisor").at("n").dump();
}

std::vector<Json> searchRecords(const SurfaceKind& kind, Integer maxA, Integer maxN, unsigned jobs) {
  const SurfaceModel t = makeSurface(kind);
  const std::size_t points = t.rank() - 1;
  struct Candidate {
    Integer a;
    IntVector b;
    Integer n;
  };
  std::vector<Candidate> candidates;
  IntVector b(points);
  // Non-increasing b with 1 <= b_i <= a, generated in lexicographic order.
  std::function<void(Integer, std::size_t, Integer)> fill = [&](Integer a, std::size_t i, Integer cap) {
    if (i == points) {
      const DivisorClass c = fromPlaneModel(t, a, b);
      if (!classifyPositivity(t, c).ample) return;
      for (Integer n = 1; n <= maxN; ++n) candidates.push_back({a, b, n});
      return;
    }
    for (Integer v = 1; v <= cap; ++v) {
      b[i] = v;
      fill(a, i + 1, v);
    }
  };
  for (Integer a = 1; a <= maxA; ++a) fill(a, 0, a);
  std::sort(candidates.begin(), candidates.end(), [](const Candidate& x, const Candidate& y) {
    return std::tie(x.a, x.b, x.n) < std::tie(y.a, y.b, y.n);
  });

  std::vector<Json> out(candidates.size());
  std::vector<std::string> errors(candidates.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < candidates.size(); i = next++) {
      try {
        out[i] = makeRecord(t, candidates[i].a, candidates[i].b, candidates[i].n);
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < std::max(1u, jobs); ++j) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  for (std::size_t i = 0; i < errors.size(); ++i)
    if (!errors[i].empty())
      throw Error(ErrorCode::Inconsistent, "search failed at a=" + std::to_string(candidates[i].a) + " b=" +
                                               formatVector(candidates[i].b) + ": " + errors[i]);
  return out;
}

std::vector<GoldenRow> goldenCatalog() {
  using V = CertifiedExample::Verdict;
  std::vector<GoldenRow> rows;
  for (Integer n = 3; n <= 6; ++n)
    rows.push_back({"P2 n=" + std::to_string(n), SurfaceKind::projectivePlane(), 1, {}, n, n * n + 3 * n,
                    V::IrreducibleSymplectic, ""});
  for (int d = 3; d <= 8; ++d)
    rows.push_back({"dP" + std::to_string(d) + " -K", SurfaceKind::delPezzo(d), 3, IntVector(9 - d, 1), 1, 2 * d,
                    V::IrreducibleSymplectic, ""});
  for (int d = 1; d <= 8; ++d)
    for (Integer n = 1; n <= 3; ++n) {
      IntVector b(9 - d, 1);
      b[0] = 2;
      rows.push_back({"dP" + std::to_string(d) + " 4H-2E1-sum E n=" + std::to_string(n), SurfaceKind::delPezzo(d), 4,
                      b, n, n * n * (4 + d) + n * (2 + d), V::IrreducibleSymplectic, ""});
    }
  for (int d = 1; d <= 8; ++d)
    for (Integer n = 1; n <= 2; ++n) {
      const bool expected = d >= 2 || n >= 2;
      rows.push_back({"dP" + std::to_string(d) + " -" + std::to_string(2 * n) + "K (n=" + std::to_string(n) + ")",
                      SurfaceKind::delPezzo(d), 6 * n, IntVector(9 - d, 2 * n), 1, 2 * n * (2 * n + 1) * d,
                      expected ? V::IrreducibleSymplectic : V::Inconclusive, expected ? "" : "veryAmpleC"});
    }
  // Negative controls.
  rows.push_back({"dP1 -K", SurfaceKind::delPezzo(1), 3, IntVector(8, 1), 1, 2, V::Inconclusive, "CBgt2"});
  rows.push_back({"dP2 -K", SurfaceKind::delPezzo(2), 3, IntVector(7, 1), 1, 4, V::Inconclusive, "veryAmpleC"});
  rows.push_back({"P2 n=1", SurfaceKind::projectivePlane(), 1, {}, 1, 4, V::Inconclusive, "veryAmpleD"});
  rows.push_back({"P2 2H", SurfaceKind::projectivePlane(), 2, {}, 1, 10, V::Inconclusive, "twoConnected"});
  return rows;
}

std::vector<GoldenOutcome> runGoldenCatalog() {
  std::vector<GoldenOutcome> out;
  for (const auto& row : goldenCatalog()) {
    const SurfaceModel t = makeSurface(row.surface);
    const CertifiedExample ex = verdict(t, fromPlaneModel(t, row.a, row.b), row.n);
    GoldenOutcome o{row, ex.dimension, ex.verdict, ex.failed, false};
    o.matches = o.computedDim == row.expectedDim && o.computedVerdict == row.expectedVerdict &&
                (row.expectedFailure.empty() ||
                 std::find(ex.failed.begin(), ex.failed.end(), row.expectedFailure) != ex.failed.end());
    out.push_back(std::move(o));
  }
  return out;
}

}  // namespace prym
