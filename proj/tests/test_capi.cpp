// Exercised through the shared library only.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>

#include "belyi/belyi.h"

namespace {

struct Ctx {
  belyi_context* p = nullptr;
  Ctx() { REQUIRE(belyi_context_create(&p) == BELYI_OK); }
  ~Ctx() { belyi_context_destroy(p); }
};

std::string take(char* s) {
  std::string out = s ? s : "";
  belyi_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("status names and version") {
  CHECK(std::string(belyi_status_name(BELYI_OK)) == "OK");
  CHECK(std::string(belyi_status_name(BELYI_SYNTAX)) == "SYNTAX");
  CHECK(std::string(belyi_status_name(BELYI_EVIDENCE_INCOMPLETE)) == "EVIDENCE_INCOMPLETE");
  CHECK(std::string(belyi_version()).size() > 0);
}

TEST_CASE("permutations") {
  Ctx c;
  belyi_perm *p = nullptr, *q = nullptr, *pq = nullptr, *inv = nullptr;
  REQUIRE(belyi_perm_parse(c.p, "(1,2,3)", 4, &p) == BELYI_OK);
  const uint32_t img[] = {2, 1, 3, 4};
  REQUIRE(belyi_perm_from_images(c.p, img, 4, &q) == BELYI_OK);
  CHECK(belyi_perm_degree(p) == 4);
  uint32_t y = 0;
  CHECK(belyi_perm_apply(c.p, p, 3, &y) == BELYI_OK);
  CHECK(y == 1);
  CHECK(belyi_perm_apply(c.p, p, 5, &y) == BELYI_POINT_OUT_OF_RANGE);
  REQUIRE(belyi_perm_compose(c.p, p, q, &pq) == BELYI_OK);
  CHECK(belyi_perm_apply(c.p, pq, 1, &y) == BELYI_OK);
  CHECK(y == 1);  // 1 -> 2 under p, then 2 -> 1 under q
  REQUIRE(belyi_perm_inverse(c.p, p, &inv) == BELYI_OK);
  char* s = nullptr;
  CHECK(belyi_perm_to_string(c.p, inv, 0, &s) == BELYI_OK);
  CHECK(take(s) == "(1,3,2)");
  CHECK(belyi_perm_to_string(c.p, pq, 1, &s) == BELYI_OK);
  CHECK(take(s) == "(1)(2,3)(4)");
  CHECK(belyi_perm_cycle_type(c.p, p, &s) == BELYI_OK);
  CHECK(take(s) == "3 1");

  belyi_perm* bad = nullptr;
  const uint32_t dup[] = {1, 1};
  CHECK(belyi_perm_from_images(c.p, dup, 2, &bad) != BELYI_OK);
  CHECK(bad == nullptr);
  for (belyi_perm* x : {p, q, pq, inv}) belyi_perm_destroy(x);
}

TEST_CASE("errors carry JSON") {
  Ctx c;
  belyi_map* m = nullptr;
  CHECK(belyi_map_parse(c.p, "b(1,1", &m) == BELYI_SYNTAX);
  CHECK(m == nullptr);
  const std::string j = belyi_context_last_error_json(c.p);
  CHECK(j.find("\"code\":\"SYNTAX\"") != std::string::npos);
  CHECK(j.find("\"position\":5") != std::string::npos);
  REQUIRE(belyi_map_parse(c.p, "b(1,1)", &m) == BELYI_OK);
  CHECK(std::string(belyi_context_last_error(c.p)).empty());
  belyi_map_destroy(m);
  CHECK(belyi_map_full_chain(c.p, 2, 2, 7, &m) == BELYI_BAD_TRIPLE);
  CHECK(belyi_context_set_config_json(c.p, "{\"bogus\":1}") == BELYI_INVALID_ARGUMENT);
  CHECK(belyi_context_set_config_json(c.p, "{not json") == BELYI_INVALID_ARGUMENT);
  char* out = nullptr;
  CHECK(belyi_cmd_orbit(c.p, 2, 7, 11, "ax", &out) == BELYI_BAD_WORD);
  CHECK(out == nullptr);
}

TEST_CASE("maps and constellations") {
  Ctx c;
  belyi_map* m = nullptr;
  REQUIRE(belyi_map_parse(c.p, "b(1,1).b(10,1)", &m) == BELYI_OK);
  CHECK(belyi_map_degree(m) == 22);
  char* s = nullptr;
  CHECK(belyi_map_to_string(c.p, m, &s) == BELYI_OK);
  CHECK(take(s) == "b(1,1).b(10,1)");
  belyi_perm *g0 = nullptr, *g1 = nullptr;
  REQUIRE(belyi_map_monodromy(c.p, m, &g0, &g1) == BELYI_OK);
  CHECK(belyi_perm_cycle_type(c.p, g0, &s) == BELYI_OK);
  CHECK(take(s) == "10 2 1^10");

  belyi_constellation *a = nullptr, *b = nullptr;
  REQUIRE(belyi_constellation_create(c.p, g0, g1, &a) == BELYI_OK);
  belyi_perm *h0 = nullptr, *h1 = nullptr;
  REQUIRE(belyi_perm_parse(c.p, "(1,2,3,4,5,6,7,8,9,10)(11,21)", 22, &h0) == BELYI_OK);
  REQUIRE(belyi_perm_parse(c.p, "(1,11)(2,12)(3,13)(4,14)(5,15)(6,16)(7,17)(8,18)(9,19)(10,20)(21,22)",
                           22, &h1) == BELYI_OK);
  REQUIRE(belyi_constellation_create(c.p, h0, h1, &b) == BELYI_OK);
  int iso = -1, g = -1;
  CHECK(belyi_constellation_isomorphic(c.p, a, b, &iso) == BELYI_OK);
  CHECK(iso == 1);
  CHECK(belyi_constellation_genus(c.p, a, &g) == BELYI_OK);
  CHECK(g == 0);
  CHECK(belyi_constellation_json(c.p, a, &s) == BELYI_OK);
  CHECK(take(s).find("\"face_count\":1") != std::string::npos);

  belyi_constellation* bad = nullptr;
  belyi_perm* small = nullptr;
  REQUIRE(belyi_perm_parse(c.p, "(1,2)", 2, &small) == BELYI_OK);
  CHECK(belyi_constellation_create(c.p, g0, small, &bad) == BELYI_DEGREE_MISMATCH);

  belyi_constellation_destroy(a);
  belyi_constellation_destroy(b);
  for (belyi_perm* x : {g0, g1, h0, h1, small}) belyi_perm_destroy(x);
  belyi_map_destroy(m);
}

TEST_CASE("commands") {
  Ctx c;
  char* j = nullptr;
  REQUIRE(belyi_cmd_a5(c.p, &j) == BELYI_OK);
  CHECK(take(j).find("\"ab\":\"(1,2)(3,6)(4,11)(5,7)(8,10)(9,12)\"") != std::string::npos);
  REQUIRE(belyi_cmd_roots(c.p, &j) == BELYI_OK);
  CHECK(take(j).find("\"min_argument_gap\"") != std::string::npos);
  REQUIRE(belyi_cmd_monodromy(c.p, "b(1,1)", 1, &j) == BELYI_OK);
  const std::string mono = take(j);
  CHECK(mono.find("\"g1\":\"(1,2)\"") != std::string::npos);
  CHECK(mono.find("\"stability\":true") != std::string::npos);
  CHECK(belyi_cmd_monodromy(c.p, "f", 0, &j) == BELYI_NOT_BELYI);

  REQUIRE(belyi_cmd_evidence(c.p, 30, &j) == BELYI_EVIDENCE_INCOMPLETE);
  REQUIRE(j != nullptr);
  CHECK(take(j).find("\"complete\":false") != std::string::npos);
  REQUIRE(belyi_cmd_evidence(c.p, 2000, &j) == BELYI_OK);
  CHECK(take(j).find("\"prime\":47") != std::string::npos);

  char *svg = nullptr, *stats = nullptr;
  REQUIRE(belyi_cmd_render(c.p, "b(1,1)", 0, &svg, &stats) == BELYI_OK);
  CHECK(take(svg).find("<svg") != std::string::npos);
  CHECK(take(stats).find("\"arcs\":2") != std::string::npos);
}

TEST_CASE("configuration") {
  Ctx c;
  REQUIRE(belyi_context_set_config_json(c.p, "{\"initial_step\":0.0078125}") == BELYI_OK);
  REQUIRE(belyi_context_set_root_offset(c.p, 1.1) == BELYI_OK);
  char* j = nullptr;
  REQUIRE(belyi_context_config_json(c.p, &j) == BELYI_OK);
  const std::string cfg = take(j);
  CHECK(cfg.find("\"initial_step\":0.0078125") != std::string::npos);
  CHECK(cfg.find("\"root_angle_offset\":1.1") != std::string::npos);
}
