#include "doctest.h"

#include "kautz/verify.hpp"

using namespace kautz;
using nlohmann::json;

namespace {

Budget quiet() {
  Budget b;
  b.timing = false;
  return b;
}

const CheckRecord& record(const AnalysisReport& report, Check check) {
  for (const auto& r : report.records)
    if (r.check == check) return r;
  throw std::logic_error("check missing from report");
}

}  // namespace

TEST_CASE("check names round-trip") {
  for (Check c : all_checks()) CHECK(parse_check(to_string(c)) == c);
  CHECK(parse_check("eulerian") == Check::eulerian_hamiltonian);
  CHECK(parse_check("hamiltonian") == Check::eulerian_hamiltonian);
  CHECK_THROWS_AS(parse_check("nonsense"), std::invalid_argument);
  CHECK(all_checks().size() == 15);
  for (Check c : all_checks()) CHECK(guard_for(c) > 0);
}

TEST_CASE("verdict text") {
  CHECK(Verdict{VerdictKind::match, ""}.text() == "match");
  CHECK(Verdict{VerdictKind::mismatch, ""}.text() == "mismatch");
  CHECK(Verdict{VerdictKind::skipped, "guard"}.text() == "skipped(guard)");
  CHECK(Verdict{VerdictKind::indeterminate, "budget"}.text() == "indeterminate(budget)");
}

TEST_CASE("empty check set gives an empty report") {
  const AnalysisReport r = analyze({Family::CK, 3, 3}, {}, quiet());
  CHECK(r.records.empty());
  CHECK_FALSE(r.any_mismatch());
  CHECK(to_json(std::vector<AnalysisReport>{r}).empty());
}

TEST_CASE("single instance analysis") {
  const AnalysisReport r = analyze({Family::CK, 3, 4}, all_checks(), quiet());
  CHECK_FALSE(r.any_mismatch());
  const CheckRecord& diam = record(r, Check::diameter);
  CHECK(diam.predicted == 6);
  CHECK(diam.measured == 6);
  CHECK(diam.verdict.kind == VerdictKind::match);
  CHECK_FALSE(diam.citation.empty());

  const AnalysisReport sk = analyze({Family::sK, 3, 2}, {Check::antipodality}, quiet());
  CHECK(sk.records.front().measured == "antipodal");
  CHECK(sk.records.front().verdict.kind == VerdictKind::match);

  const AnalysisReport k = analyze({Family::K, 3, 3}, {Check::semigirth}, quiet());
  CHECK(k.records.front().measured == 3);
}

TEST_CASE("disconnected instances are skipped for connectivity") {
  const AnalysisReport r = analyze({Family::CK, 2, 3}, all_checks(), quiet());
  CHECK_FALSE(r.any_mismatch());
  CHECK(record(r, Check::connectivity).verdict.text() == "skipped(disconnected)");
  CHECK(record(r, Check::diameter).verdict.text() == "skipped(disconnected)");
  CHECK(record(r, Check::order).verdict.kind == VerdictKind::match);
}

TEST_CASE("guards are reported, not silently passed") {
  const AnalysisReport r = analyze({Family::CK, 9, 3}, {Check::superconnectivity}, quiet());
  CHECK(r.records.front().verdict.text() == "skipped(guard)");
  const AnalysisReport big = analyze({Family::CK, 4, 6}, {Check::distances}, quiet());
  CHECK(big.records.front().verdict.text() == "skipped(guard)");
}

TEST_CASE("quick grid verifies without mismatches") {
  const auto grid = preset_grid("quick");
  CHECK(std::find(grid.begin(), grid.end(), FamilySpec{Family::CK, 2, 3}) != grid.end());
  CHECK(std::find(grid.begin(), grid.end(), FamilySpec{Family::CK, 3, 4}) != grid.end());
  const auto reports = run_suite(grid, all_checks(), quiet());
  REQUIRE(reports.size() == grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    CHECK(reports[i].spec == grid[i]);
    for (const auto& rec : reports[i].records) {
      CAPTURE(grid[i].name());
      CAPTURE(std::string(to_string(rec.check)));
      CAPTURE(rec.detail.dump());
      CHECK(rec.verdict.kind != VerdictKind::mismatch);
      CHECK(rec.verdict.kind != VerdictKind::indeterminate);
    }
  }
  const std::string table = render_table(reports);
  CHECK(table.find("CK(3,4)") != std::string::npos);
  CHECK(table.find("mismatch") == std::string::npos);
}

TEST_CASE("json records carry the documented fields") {
  const auto reports = run_suite({{Family::sK, 3, 2}}, {Check::mean_distance, Check::layers}, quiet());
  const json doc = to_json(reports);
  REQUIRE(doc.size() == 2);
  for (const auto& rec : doc) {
    for (const char* key : {"family", "d", "l", "check", "predicted", "measured", "verdict", "citation", "runtime_ms"})
      CHECK(rec.contains(key));
    CHECK(rec["runtime_ms"] == 0);
  }
  CHECK(doc[0]["family"] == "sK");
  CHECK(doc[0]["measured"] == "13/6");
}

TEST_CASE("reports are reproducible") {
  const std::vector<FamilySpec> grid{{Family::CK, 3, 3}, {Family::sK, 3, 3}, {Family::MCK, 3, 4}};
  const std::string a = to_json(run_suite(grid, all_checks(), quiet())).dump();
  const std::string b = to_json(run_suite(grid, all_checks(), quiet())).dump();
  CHECK(a == b);
}

TEST_CASE("distance triangle") {
  const TriangleResult ck33 = verify_distance_triangle({Family::CK, 3, 3});
  CHECK(ck33.match);
  CHECK(ck33.pairs == 24 * 24);
  CHECK_FALSE(ck33.mismatch.has_value());

  const TriangleResult ck44 = verify_distance_triangle({Family::CK, 4, 4});
  CHECK(ck44.match);
  CHECK(ck44.pairs == 67600);

  const TriangleResult sk34 = verify_distance_triangle({Family::sK, 3, 4});
  CHECK(sk34.match);
  CHECK(sk34.pairs == 108 * 108);

  CHECK_THROWS_AS(verify_distance_triangle({Family::CK, 4, 5}), std::invalid_argument);
  CHECK_THROWS_AS(verify_distance_triangle({Family::CK, 2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(verify_distance_triangle({Family::MCK, 3, 3}), std::invalid_argument);
}

TEST_CASE("semigirth and diameter grow by one under the line digraph") {
  const SemigirthChain a = verify_semigirth_chain(3, 2);
  CHECK(a.match);
  CHECK(a.gamma_line == a.gamma + 1);
  const SemigirthChain b = verify_semigirth_chain(3, 3);
  CHECK(b.match);
  CHECK(b.diameter == 5);
  CHECK(b.diameter_line == 6);
  CHECK(verify_semigirth_chain(4, 2).match);
  CHECK_THROWS_AS(verify_semigirth_chain(4, 4), std::invalid_argument);
}

TEST_CASE("preset grids") {
  const auto quick = preset_grid("quick");
  const auto full = preset_grid("full");
  CHECK(full.size() > quick.size());
  CHECK(std::find(full.begin(), full.end(), FamilySpec{Family::CK, 3, 13}) != full.end());
  CHECK_THROWS_AS(preset_grid("huge"), std::invalid_argument);
}
