#include <doctest.h>

#include "hermlat/paperlab.hpp"
#include "support.hpp"

using namespace hermlat;
using support::lat;

namespace {

std::vector<std::string> ids(const std::vector<CheckResult>& rs) {
  std::vector<std::string> out;
  for (const auto& r : rs) out.push_back(r.check_id);
  return out;
}

}  // namespace

TEST_SUITE("paperlab") {
  TEST_CASE("catalog and filters") {
    CHECK(check_catalog().size() == 16);
    CHECK(check_catalog().front().id == "C1");
    CHECK(check_catalog().back().id == "C16");
    CHECK(ids(run_all(std::string("ternary"), 2)) == std::vector<std::string>{"C2", "C3", "C4", "C5", "C6"});
    CHECK(run_all(std::string("nonexistent")).empty());
    CHECK(ids(run_all(std::string("C16"))) == std::vector<std::string>{"C16"});
    try {
      run_check("C99");
      FAIL("no error for an unknown check");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::UnknownCheck);
    }
  }

  TEST_CASE("solvability tables") {
    CheckResult r = run_check("C3");
    CHECK(r.status == CheckStatus::Pass);
    CHECK(r.group == "ternary");
    auto computed = r.details.at("rows").at(0).at("computed");
    CHECK(computed.at(0).at("m") == nlohmann::json({6, 10, 15, 31, 39}));
    CHECK(computed.at(1).at("m") == nlohmann::json({23, 31}));
  }

  TEST_CASE("bounds") {
    CHECK(u2_bound(5).n == 2);
    for (std::int64_t m : {1, 2, 3, 5, 6, 7, 11, 19, 23, 47}) {
      U2Bound b = u2_bound(m);
      const Int d = 4 * b.omega_norm + 1;
      CHECK((2 * b.n - 1) * (2 * b.n - 1) <= d);
      CHECK(d < (2 * b.n + 1) * (2 * b.n + 1));
    }
    CHECK(run_check("C16").status == CheckStatus::Pass);
  }

  TEST_CASE("finiteness completions") {
    Field f11 = Field::make(11);
    auto found = finiteness_completions(f11, lat(f11, "[[2,\"w\"],[\"1-w\",2]]").gram());
    REQUIRE(found.size() == 1);
    CHECK(is_isometric(found[0], lat(f11, "[[1,0,0,0],[0,1,0,0],[0,0,2,\"w\"],[0,0,\"1-w\",2]]")));
  }

  TEST_CASE("reports") {
    std::vector<CheckResult> rs = {run_check("C3"), run_check("C16")};
    auto j = report_json(rs);
    CHECK(j.at("summary").at("pass") == 2);
    CHECK(j.at("summary").at("fail") == 0);
    CHECK(j.at("checks").size() == 2);
    CHECK(summary_table(rs).find("C16") != std::string::npos);
    CHECK(std::string(check_status_name(CheckStatus::Skipped)) == "Skipped");
  }
}
