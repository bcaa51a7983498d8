// Command-line front end: check, search, catalog, homology, verify.
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <set>

#include <CLI11.hpp>

#include "prym/catalog.hpp"
#include "prym/homology.hpp"

using namespace prym;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInconclusive = 1;
constexpr int kExitInput = 2;

unsigned defaultJobs() {
  if (const char* env = std::getenv("PRYM_JOBS")) {
    try {
      const int v = std::stoi(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return 1;
}

int runCheck(const std::string& surfaceName, const std::string& divisorText, Integer n, bool assertNonHyp,
             bool human, const std::string& format) {
  const SurfaceModel t = makeSurface(SurfaceKind::parse(surfaceName));
  const auto [a, b] = parseDivisor(t, divisorText);
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "--n must be >= 1");
  const Json rec = makeRecord(t, a, b, n, assertNonHyp);
  if (format == "csv")
    std::cout << csvHeader() << "\n" << csvRow(rec) << "\n";
  else if (human)
    std::cout << humanReport(rec);
  else
    std::cout << rec.dump(2) << "\n";
  return rec.at("verdict").get<std::string>() == "IrreducibleSymplectic" ? kExitOk : kExitInconclusive;
}

int runSearch(const std::string& surfaceName, Integer maxA, Integer maxN, const std::string& path, unsigned jobs,
              const std::string& format) {
  const SurfaceKind kind = SurfaceKind::parse(surfaceName);
  if (maxA < 0 || maxN < 0) throw Error(ErrorCode::InvalidArgument, "--max-a and --max-n must be non-negative");

  std::set<std::string> seen;
  bool fresh = true;
  if (format != "csv") {
    std::ifstream existing(path);
    std::string line;
    while (std::getline(existing, line)) {
      if (line.empty()) continue;
      seen.insert(recordKey(Json::parse(line)));
    }
  } else {
    std::ifstream existing(path);
    fresh = !existing || existing.peek() == std::ifstream::traits_type::eof();
  }
  std::ofstream out(path, std::ios::app);
  if (!out) throw Error(ErrorCode::Io, "cannot open '" + path + "' for writing");

  const std::vector<Json> records = searchRecords(kind, maxA, maxN, jobs);
  std::size_t written = 0;
  if (format == "csv" && fresh && !records.empty()) out << csvHeader() << "\n";
  for (const auto& rec : records) {
    if (!seen.insert(recordKey(rec)).second) continue;
    const auto diffs = selfCheck(rec);
    if (!diffs.empty()) throw Error(ErrorCode::Inconsistent, "self-check failed: " + diffs.front());
    out << (format == "csv" ? csvRow(rec) : rec.dump()) << "\n";
    ++written;
  }
  if (!out) throw Error(ErrorCode::Io, "write to '" + path + "' failed");
  std::cerr << written << " records written to " << path << "\n";
  return kExitOk;
}

int runCatalog() {
  const auto outcomes = runGoldenCatalog();
  std::size_t mismatches = 0;
  std::cout << std::left << std::setw(28) << "example" << std::setw(10) << "exp dim" << std::setw(10) << "dim"
            << std::setw(24) << "expected" << "computed\n";
  for (const auto& o : outcomes) {
    std::string computed = describe(o.computedVerdict);
    if (!o.failed.empty()) {
      computed += " (";
      for (std::size_t i = 0; i < o.failed.size(); ++i) computed += (i ? "," : "") + o.failed[i];
      computed += ")";
    }
    std::cout << std::setw(28) << o.row.id << std::setw(10) << o.row.expectedDim << std::setw(10) << o.computedDim
              << std::setw(24) << describe(o.row.expectedVerdict) << computed << (o.matches ? "" : "   MISMATCH")
              << "\n";
    if (!o.matches) ++mismatches;
  }
  std::cout << outcomes.size() - mismatches << "/" << outcomes.size() << " rows match\n";
  return mismatches == 0 ? kExitOk : kExitInconclusive;
}

int runHomology(Integer l, Integer m, bool generation, bool parity) {
  const SymmetricHomologyModel model = buildModel(l, m);
  Json rep;
  rep["l"] = l;
  rep["m"] = m;
  rep["rank"] = model.rank();
  rep["coverGenus"] = model.coverGenus();
  rep["antiInvariantRank"] = antiInvariantSublattice(model).rows();
  if (parity) {
    const ParityResult p = parityObstruction(model);
    Json j;
    j["result"] = p.even ? "EvenForm" : "OddPairingWitness";
    if (!p.even) {
      j["x"] = p.x->coords;
      j["y"] = p.y->coords;
      j["value"] = p.value;
    }
    rep["parity"] = j;
  }
  if (generation) {
    const GenerationResult g = generatesAntiInvariant(model, commutatorImages(model));
    Json j;
    j["generates"] = g.generates;
    j["rankDeficiency"] = g.rankDeficiency;
    j["index"] = g.index ? Json(g.index->get_str()) : Json(nullptr);
    rep["generationTest"] = j;
  }
  std::cout << rep.dump(2) << "\n";
  return kExitOk;
}

int runVerify(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot read '" + path + "'");
  std::string line;
  std::size_t lineNo = 0, bad = 0, total = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    if (line.empty()) continue;
    ++total;
    Json rec;
    try {
      rec = Json::parse(line);
    } catch (const std::exception& e) {
      std::cout << "line " << lineNo << ": " << e.what() << "\n";
      ++bad;
      continue;
    }
    for (const auto& diff : selfCheck(rec)) {
      std::cout << "line " << lineNo << ": " << diff << "\n";
      ++bad;
    }
  }
  std::cout << total << " records, " << bad << " diffs\n";
  return bad == 0 ? kExitOk : kExitInconclusive;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical checks for relative Prym varieties of K3 double covers"};
  app.require_subcommand(1);

  std::string surface, divisor, format = "json", out, in;
  Integer n = 1, maxA = 0, maxN = 1, l = 0, m = 0;
  unsigned jobs = defaultJobs();
  bool assertNonHyp = false, json = false, human = false, generation = false, parity = false;

  auto* check = app.add_subcommand("check", "evaluate one class; exit 0 certified, 1 inconclusive, 2 input error");
  check->add_option("--surface", surface, "p2 or dp1..dp8")->required();
  check->add_option("--divisor", divisor, "a,b1,...: the class aH - sum b_i E_i")->required();
  check->add_option("--n", n, "multiplier")->capture_default_str();
  check->add_flag("--assert-non-hyperelliptic", assertNonHyp);
  auto* jsonFlag = check->add_flag("--json", json, "JSON output (default)");
  check->add_flag("--human", human, "plain-text output")->excludes(jsonFlag);
  check->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

  auto* search = app.add_subcommand("search", "append records for a grid of ample classes to a JSONL file");
  search->add_option("--surface", surface)->required();
  search->add_option("--max-a", maxA)->required();
  search->add_option("--max-n", maxN)->required();
  search->add_option("--out", out)->required();
  search->add_option("--jobs", jobs, "worker threads (default $PRYM_JOBS or 1)")->check(CLI::PositiveNumber);
  search->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

  auto* catalog = app.add_subcommand("catalog", "reproduce the golden example table; exit 0 iff every row matches");

  auto* homology = app.add_subcommand("homology", "report on the double-cover homology model");
  homology->add_option("--l", l)->required();
  homology->add_option("--m", m)->required();
  homology->add_flag("--generation-test", generation);
  homology->add_flag("--parity", parity);

  auto* verify = app.add_subcommand("verify", "recompute the numerics of every record in a JSONL file");
  verify->add_option("--in", in)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (*check) return runCheck(surface, divisor, n, assertNonHyp, human, format);
    if (*search) return runSearch(surface, maxA, maxN, out, jobs, format);
    if (*catalog) return runCatalog();
    if (*homology) return runHomology(l, m, generation, parity);
    if (*verify) return runVerify(in);
  } catch (const Error& e) {
    std::cerr << "error (" << describe(e.code()) << "): " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
