#include <doctest.h>

#include <unistd.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "hgm/report.hpp"
#include "hgm/scan.hpp"

using namespace hgm;

namespace {
std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name) {
    path = std::string("/tmp/hgm_test_") + std::to_string(::getpid()) + "_" + name;
    std::remove(path.c_str());
  }
  ~TempFile() { std::remove(path.c_str()); }
};
}  // namespace

TEST_CASE("canonical enumeration") {
  auto g1 = enumerate_canonical_gammas(1);
  REQUIRE(g1.size() == 1);
  CHECK(g1[0].str() == "1,-1");

  auto g3 = enumerate_canonical_gammas(3);
  std::vector<std::string> names;
  for (const auto& g : g3) names.push_back(g.str());
  CHECK(names == std::vector<std::string>{"1,-1", "2,-1,-1", "3,-1,-1,-1", "3,-2,-1"});

  auto g6 = enumerate_canonical_gammas(6);
  for (const auto& g : g6) {
    CHECK(g.L <= 6);
    CHECK(std::find(g.negatives.begin(), g.negatives.end(), 1LL) != g.negatives.end());
  }
  // Sorted and duplicate-free.
  for (size_t i = 1; i < g6.size(); ++i) {
    CHECK(g6[i - 1] < g6[i]);
  }
}

TEST_CASE("scan records") {
  ScanRecord rec = scan_record(GammaVector::parse("3,-1,-1,-1"));
  CHECK(rec.gamma == "3,-1,-1,-1");
  CHECK(rec.L == 3);
  CHECK(rec.n == 3);
  CHECK(rec.hodge == std::vector<long long>{1, 1, 1, 0});
  CHECK_FALSE(rec.primitive);  // 1 lies in both alpha and beta
  REQUIRE(rec.reduced_hodge.has_value());
  CHECK(*rec.reduced_hodge == std::vector<long long>{1, 1});

  ScanRecord trivial = scan_record(GammaVector::parse("1,-1"));
  CHECK_FALSE(trivial.reduced_hodge.has_value());  // reduction is empty

  CHECK(record_json(rec).find("\"gamma\":\"3,-1,-1,-1\"") != std::string::npos);
  CHECK(record_csv(rec, 4) == "\"3,-1,-1,-1\",3,3,1,1,1,0,0");
  CHECK(csv_header(2) == "gamma,L,n,h0,h1,h2");
}

TEST_CASE("scan writes, resumes, and stays deterministic") {
  TempFile f("scan.jsonl");
  ScanOutcome first = run_scan(4, f.path, 2, false);
  CHECK(first.written == first.total);
  CHECK(first.skipped == 0);
  std::string bytes = slurp(f.path);
  CHECK(bytes.find("\"gamma\":\"3,-1,-1,-1\"") != std::string::npos);
  CHECK(bytes.back() == '\n');

  // Idempotent re-run: nothing written.
  ScanOutcome again = run_scan(4, f.path, 2, false);
  CHECK(again.written == 0);
  CHECK(again.skipped == again.total);
  CHECK(slurp(f.path) == bytes);

  // Truncate mid-line; the partial tail is rewritten.
  {
    std::ofstream out(f.path, std::ios::binary | std::ios::trunc);
    out << bytes.substr(0, bytes.size() / 2);
  }
  ScanOutcome resumed = run_scan(4, f.path, 2, false);
  CHECK(resumed.written > 0);
  CHECK(slurp(f.path) == bytes);

  // Worker count does not change the bytes.
  TempFile g("scan_j1.jsonl");
  run_scan(4, g.path, 1, false);
  CHECK(slurp(g.path) == bytes);

  // A dangling partial tail after a complete file is dropped.
  {
    std::ofstream out(f.path, std::ios::binary | std::ios::trunc);
    out << bytes << "{\"gamma\":\"2,";
  }
  ScanOutcome tail = run_scan(4, f.path, 2, false);
  CHECK(tail.written == 0);
  CHECK(slurp(f.path) == bytes);

  // A foreign file is refused.
  {
    std::ofstream out(f.path, std::ios::binary | std::ios::trunc);
    out << "{\"gamma\":\"9,-9\"}\n";
  }
  CHECK_THROWS_AS(run_scan(4, f.path, 2, false), Error);
}

TEST_CASE("a larger scan extends a smaller one in place") {
  // Records are ordered by L first, so an L <= 4 file is a prefix of L <= 6.
  TempFile f("scan_grow.jsonl");
  run_scan(4, f.path, 2, false);
  std::string small = slurp(f.path);
  ScanOutcome grown = run_scan(6, f.path, 2, false);
  CHECK(grown.skipped == enumerate_canonical_gammas(4).size());
  CHECK(grown.written > 0);
  std::string big = slurp(f.path);
  CHECK(big.rfind(small, 0) == 0);

  TempFile g("scan_fresh.jsonl");
  run_scan(6, g.path, 2, false);
  CHECK(slurp(g.path) == big);
}

TEST_CASE("csv scan") {
  TempFile f("scan.csv");
  run_scan(3, f.path, 2, true);
  std::string bytes = slurp(f.path);
  CHECK(bytes.rfind("gamma,L,n,h0", 0) == 0);
  CHECK(bytes.find("\"3,-1,-1,-1\",3,3,1,1,1,0") != std::string::npos);
  ScanOutcome again = run_scan(3, f.path, 2, true);
  CHECK(again.written == 0);
}

TEST_CASE("compute report with all methods") {
  ComputeReport rep = compute_report(GammaVector::parse("3,-1,-1,-1"), {"all"});
  REQUIRE(rep.methods.size() == 3);
  CHECK(rep.agree.has_value());
  CHECK(*rep.agree);
  CHECK(rep.hodge == std::vector<long long>{1, 1, 1, 0});
  CHECK(rep.M == "3");
  std::string j = report_json(rep);
  CHECK(j.find("\"agree\":true") != std::string::npos);
  CHECK(j.find("\"cone\"") != std::string::npos);

  ComputeReport single = compute_report(GammaVector::parse("3,-1,-1,-1"), {"zigzag"});
  CHECK_FALSE(single.agree.has_value());
  CHECK(report_json(single).find("\"agree\"") == std::string::npos);
}
