#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

// Runs the installed tool; captures stdout by default, stderr on request.
RunResult run(const std::string& args, bool capture_stderr = false) {
  std::string cmd = std::string(SHEAFSTAB_CLI_PATH) + " " + args;
  cmd += capture_stderr ? " 2>&1 1>/dev/null" : " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  int status = pclose(pipe);
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return RunResult{code, out};
}

std::string scene(const std::string& name) {
  return std::string(SHEAFSTAB_SCENES_DIR) + "/" + name;
}

std::string fixture(const std::string& name) {
  return std::string(SHEAFSTAB_DATA_DIR) + "/" + name;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("version flag") {
  auto r = run("--version");
  CHECK(r.exit_code == 0);
  CHECK(r.out.rfind("sheafstab ", 0) == 0);
}

TEST_CASE("builtin scenario passes") {
  auto r = run("paper-k3");
  CHECK(r.exit_code == 0);
  CHECK(r.out.rfind("scene: paper-k3\nvariety: K3 surface, H^2 = 2\n", 0) == 0);
  CHECK(contains(r.out, "result: pass (14 checks)"));
}

TEST_CASE("builtin scenario accepts any positive even degree") {
  auto r = run("paper-k3 --h2 6");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "H^2 = 6"));
  CHECK(contains(r.out, "result: pass (14 checks)"));

  CHECK(run("paper-k3 --h2 3").exit_code == 2);
  CHECK(run("paper-k3 --h2 0").exit_code == 2);
  CHECK(run("paper-k3 --h2=-4").exit_code == 2);
  auto err = run("paper-k3 --h2 3", true);
  CHECK(contains(err.out, "positive even"));
}

TEST_CASE("shipped scene reproduces the builtin report byte for byte") {
  auto from_file = run("verify " + scene("paper-k3.json"));
  auto builtin = run("paper-k3");
  CHECK(from_file.exit_code == 0);
  CHECK(builtin.exit_code == 0);
  CHECK(from_file.out == builtin.out);
}

TEST_CASE("reports are deterministic across runs") {
  for (const std::string emit : {"report", "tap", "json"}) {
    auto a = run("verify " + scene("paper-k3.json") + " --emit " + emit);
    auto b = run("verify " + scene("paper-k3.json") + " --emit " + emit);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(!a.out.empty());
  }
}

TEST_CASE("tap emission") {
  auto r = run("paper-k3 --emit tap");
  CHECK(r.exit_code == 0);
  CHECK(r.out.rfind("TAP version 13\n1..14\n", 0) == 0);
  CHECK(contains(r.out, "ok 1 - hilbert O"));
  CHECK(contains(r.out, "ok 14 - "));
  CHECK(!contains(r.out, "not ok"));
}

TEST_CASE("json emission") {
  auto r = run("paper-k3 --emit json");
  CHECK(r.exit_code == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["scene"] == "paper-k3");
  CHECK(doc["pass"] == true);
  CHECK(doc["checks"].size() == 14);
}

TEST_CASE("emit rejects unknown formats") {
  CHECK(run("paper-k3 --emit yaml").exit_code == 2);
}

TEST_CASE("verify distinguishes failure from error") {
  CHECK(run("verify " + fixture("good.json")).exit_code == 0);

  auto failing = run("verify " + fixture("bad_expectation.json"));
  CHECK(failing.exit_code == 1);
  CHECK(contains(failing.out, "FAIL"));
  CHECK(contains(failing.out, "result: FAIL (1 of 1 checks failed)"));

  auto tap = run("verify " + fixture("bad_expectation.json") + " --emit tap");
  CHECK(tap.exit_code == 1);
  CHECK(contains(tap.out, "not ok 1 - hilbert O"));
}

TEST_CASE("scene errors exit with code 2 and name their kind") {
  auto malformed = run("verify " + fixture("malformed.json"), true);
  CHECK(malformed.exit_code == 2);
  CHECK(contains(malformed.out, "scene error (parse error)"));
  CHECK(contains(malformed.out, "line"));

  auto unknown = run("verify " + fixture("unknown_name.json"), true);
  CHECK(unknown.exit_code == 2);
  CHECK(contains(unknown.out, "scene error (unknown name)"));

  auto forward = run("verify " + fixture("forward_ref.json"), true);
  CHECK(forward.exit_code == 2);
  CHECK(contains(forward.out, "scene error (cyclic reference)"));
  CHECK(contains(forward.out, "declared later"));

  auto negative = run("verify " + fixture("negative_rank.json"), true);
  CHECK(negative.exit_code == 2);
  CHECK(contains(negative.out, "scene error (invariant violation)"));

  CHECK(run("verify /nonexistent/x.json").exit_code == 2);
}

TEST_CASE("usage errors") {
  CHECK(run("").exit_code == 2);
  CHECK(run("--bogus").exit_code == 2);
  CHECK(run("verify").exit_code == 2);
}

}  // TEST_SUITE
