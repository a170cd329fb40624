// Exercises the shared library exactly the way the CLI does: through the C
// interface only.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>

#include "gradecheck/gradecheck.h"

namespace {

struct SessionGuard {
  gc_session* s = gc_session_new();
  ~SessionGuard() { gc_session_free(s); }
};

constexpr const char* kQuartic = "ring GF(32003)[x,y]\nideal x^3*y - x*y^3";

}  // namespace

TEST_CASE("report round trip through the C interface") {
  SessionGuard g;
  REQUIRE(g.s != nullptr);
  CHECK(gc_session_set_seed(g.s, 2024) == GC_OK);
  REQUIRE(gc_session_parse(g.s, kQuartic) == GC_OK);
  CHECK(std::string(gc_session_warnings(g.s)).empty());

  const char* out = nullptr;
  REQUIRE(gc_run_report(g.s, 1, &out) == GC_OK);
  std::string first(out);
  CHECK(first.find("\"super_stretched\": false") != std::string::npos);
  CHECK(first.find("\"stretched\": true") != std::string::npos);
  CHECK(first.find("\"obstruction\": \"not super-stretched\"") != std::string::npos);

  // Same session, same seed: byte-identical output.
  REQUIRE(gc_run_report(g.s, 1, &out) == GC_OK);
  CHECK(first == std::string(out));

  // Text mode mentions the named checks.
  REQUIRE(gc_run_report(g.s, 0, &out) == GC_OK);
  CHECK(std::string(out).find("countable-type check") != std::string::npos);
}

TEST_CASE("focused checks and options through the C interface") {
  SessionGuard g;
  CHECK(gc_session_set_option(g.s, "samples", 5) == GC_OK);
  CHECK(gc_session_set_option(g.s, "bogus", 1) == GC_PRECONDITION);
  REQUIRE(gc_session_parse(g.s, kQuartic) == GC_OK);

  const char* out = nullptr;
  REQUIRE(gc_run_check(g.s, "ss-sop", "(x+2*y)^2", &out) == GC_OK);
  std::string sop(out);
  CHECK(sop.find("\"verdict\": false") != std::string::npos);
  CHECK(sop.find("\"failing_degree\": 3") != std::string::npos);

  REQUIRE(gc_run_check(g.s, "hilbert", nullptr, &out) == GC_OK);
  CHECK(std::string(out).find("\"dim\": 1") != std::string::npos);

  CHECK(gc_run_check(g.s, "reduction", "x^2", &out) == GC_PRECONDITION);
  CHECK(std::string(gc_session_error(g.s)).find("degree-1") != std::string::npos);
}

TEST_CASE("error channels") {
  SessionGuard g;
  CHECK(gc_session_parse(g.s, "ring QQ[x] ideal x + 1") == GC_PRECONDITION);
  CHECK(std::string(gc_session_error(g.s)).find("homogeneous") != std::string::npos);

  // Warnings surface for characteristic 2.
  CHECK(gc_session_parse(g.s, "ring GF(2)[x,y] ideal x^2") == GC_OK);
  CHECK(std::string(gc_session_warnings(g.s)).find("characteristic 2") != std::string::npos);

  // Non-CM input: precondition status, but the report body still arrives.
  SessionGuard h;
  REQUIRE(gc_session_parse(h.s, "ring GF(32003)[x,y]\nideal x^2, x*y") == GC_OK);
  const char* out = nullptr;
  CHECK(gc_run_report(h.s, 1, &out) == GC_PRECONDITION);
  CHECK(std::string(out).find("\"cm\": false") != std::string::npos);

  CHECK(gc_version() != nullptr);
}
