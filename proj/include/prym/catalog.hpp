#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "prym/prym.hpp"

namespace prym {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolVersion = "0.1.0";

/// Parses "a,b1,...,b_{9-d}" (aH - sum b_i E_i); the length must match the surface.
std::pair<Integer, IntVector> parseDivisor(const SurfaceModel& surface, const std::string& text);

/// Record for D = f^*(nC), C = aH - sum b_i E_i. Field order is fixed.
Json makeRecord(const SurfaceModel& surface, Integer a, const IntVector& b, Integer n,
                bool assertNonHyperelliptic = false);

/// Recomputes the numerics block from surface + divisor; returns one line per mismatch.
std::vector<std::string> selfCheck(const Json& record);

std::string csvHeader();
std::string csvRow(const Json& record);
std::string humanReport(const Json& record);

/// Ample classes with 1 <= a <= maxA, b sorted descending with b_i >= 1, and 1 <= n <= maxN,
/// in lexicographic (a, b, n) order. Work is spread over `jobs` threads; the result does
/// not depend on it.
std::vector<Json> searchRecords(const SurfaceKind& kind, Integer maxA, Integer maxN, unsigned jobs);

/// Key used for duplicate suppression: surface, sorted divisor, n.
std::string recordKey(const Json& record);

struct GoldenRow {
  std::string id;
  SurfaceKind surface;
  Integer a = 0;
  IntVector b;
  Integer n = 1;
  Integer expectedDim = 0;
  CertifiedExample::Verdict expectedVerdict = CertifiedExample::Verdict::IrreducibleSymplectic;
  std::string expectedFailure;  // a condition that must be among the failed ones, if set
};

std::vector<GoldenRow> goldenCatalog();

struct GoldenOutcome {
  GoldenRow row;
  Integer computedDim = 0;
  CertifiedExample::Verdict computedVerdict = CertifiedExample::Verdict::Inconclusive;
  std::vector<std::string> failed;
  bool matches = false;
};

std::vector<GoldenOutcome> runGoldenCatalog();

}  // namespace prym
