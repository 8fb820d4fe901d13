#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(HERMLAT_CLI_PATH) + " " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::fgets(buf.data(), buf.size(), p)) out += buf.data();
  int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("queries exit 0") {
    auto r = run("truant -m 1 --lattice '<1,1>' --format text");
    CHECK(r.code == 0);
    CHECK(r.out.find("truant S=2 class [[2,1],[1,2]]") != std::string::npos);
    r = run("represents -m 5 --target '<1,3>' --in '<1,1,1>'");
    CHECK(r.code == 0);
    CHECK(r.out.find("\"represented\": false") != std::string::npos);
    r = run("represents -m 7 --target '<1,3>' --in '<1,1,1>'");
    CHECK(r.code == 0);
    CHECK(r.out.find("\"witness\"") != std::string::npos);
    r = run("enum-binary -m 1 --s-cap 1 --no-include-pseudo --format csv");
    CHECK(r.code == 0);
    r = run("certify -m 3 --lattice '<1,1,2>' --s-cap 2 --format text");
    CHECK(r.code == 0);
    CHECK(r.out.find("certified up to S <= 2") != std::string::npos);
    r = run("escalate -m 3 --max-rank 2 --s-cap 2 --format csv --jobs 2");
    CHECK(r.code == 0);
    CHECK(r.out.rfind("id,parent,rank", 0) == 0);
  }

  TEST_CASE("output is deterministic") {
    auto a = run("escalate -m 5 --max-rank 2 --s-cap 3");
    auto b = run("escalate -m 5 --max-rank 2 --s-cap 3 --jobs 3");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }

  TEST_CASE("verify-paper exit status") {
    CHECK(run("verify-paper --check C3 --check C16").code == 0);
    CHECK(run("verify-paper --check C10").code == 1);
    CHECK(run("verify-paper --group nonexistent --format text").code == 0);
  }

  TEST_CASE("usage errors exit 2") {
    CHECK(run("truant -m 12 --lattice '<1>'").code == 2);
    CHECK(run("truant -m 1").code == 2);
    CHECK(run("frobnicate").code == 2);
    CHECK(run("verify-paper --check C99").code == 2);
    CHECK(run("represents -m 1 --target '[[1,2],[2,1]]' --in '<1,1>'").code == 2);
    CHECK(run("escalate -m 1 --max-rank 7").code == 2);
    CHECK(run("s-value -m 1 --lattice '<1,2>' --format csv").code == 0);
    CHECK(run("--help").code == 0);
  }
}
