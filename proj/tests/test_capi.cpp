#include <doctest.h>

#include <string>

#include "zkwedge/zkwedge.h"

TEST_CASE("C interface round trip") {
  zkw_complex* k = nullptr;
  REQUIRE(zkw_complex_parse_scx("vertices: 3\n1\n2\n3\n", &k) == ZKW_OK);
  CHECK(zkw_complex_maximal_count(k) == 3);
  CHECK(zkw_complex_face_count(k) == 4);

  zkw_wedge* w = nullptr;
  zkw_trace* t = nullptr;
  REQUIRE(zkw_decompose(k, &w, &t) == ZKW_OK);
  zkw_spheres* s = nullptr;
  REQUIRE(zkw_wedge_realize(w, 1, &s) == ZKW_OK);
  REQUIRE(zkw_spheres_count(s) == 2);
  int dim = 0;
  uint64_t count = 0;
  zkw_spheres_entry(s, 0, &dim, &count);
  CHECK(dim == 3);
  CHECK(count == 3);
  zkw_spheres_entry(s, 1, &dim, &count);
  CHECK(dim == 4);
  CHECK(count == 2);

  zkw_betti* b = nullptr;
  REQUIRE(zkw_bigraded_betti(k, 2, &b) == ZKW_OK);
  uint64_t p[8] = {};
  size_t len = 0;
  zkw_betti_poincare(b, p, 8, &len);
  CHECK(len == 5);
  CHECK(p[3] == 3);
  CHECK(p[4] == 2);

  zkw_golod g{};
  REQUIRE(zkw_golod_verdict(k, 0, &g) == ZKW_OK);
  CHECK(g.golod == 1);
  CHECK(g.reason == ZKW_GOLOD_SHIFTED);

  zkw_ratfun* r = nullptr;
  REQUIRE(zkw_face_ring_poincare(3, p, len, &r) == ZKW_OK);
  char* coeffs = nullptr;
  REQUIRE(zkw_ratfun_series(r, 4, &coeffs) == ZKW_OK);
  CHECK(std::string(coeffs) == "1 3 6 12 24");
  zkw_string_free(coeffs);

  zkw_ratfun_free(r);
  zkw_betti_free(b);
  zkw_spheres_free(s);
  zkw_trace_free(t);
  zkw_wedge_free(w);
  zkw_complex_free(k);
}

TEST_CASE("C interface error codes") {
  zkw_complex* k = nullptr;
  CHECK(zkw_complex_parse_scx("vertices: 2\n1 1\n", &k) == ZKW_ERR_PARSE);
  CHECK(std::string(zkw_last_error()).find("line 2") != std::string::npos);
  CHECK(zkw_complex_parse_scx(nullptr, &k) == ZKW_ERR_INVALID_ARGUMENT);

  REQUIRE(zkw_complex_parse_scx("vertices: 4\n1 2\n2 3\n3 4\n1 4\n", &k) == ZKW_OK);
  zkw_wedge* w = nullptr;
  CHECK(zkw_decompose(k, &w, nullptr) == ZKW_ERR_NOT_SHIFTED);
  zkw_shift_verdict v{};
  CHECK(zkw_is_shifted(k, 1, &v) == ZKW_OK);
  CHECK(v.shifted == 0);
  zkw_complex_free(k);

  REQUIRE(zkw_complex_skeleton(11, 2, &k) == ZKW_OK);
  CHECK(zkw_is_shifted(k, 1, &v) == ZKW_ERR_SIZE_LIMIT);
  zkw_complex_free(k);

  REQUIRE(zkw_complex_parse_scx("vertices: 5\n1 2 3\n1 2 4\n1 3 4\n1 5\n", &k) == ZKW_OK);
  zkw_trace* t = nullptr;
  CHECK(zkw_regular_sequence(k, 1, &t) == ZKW_ERR_NON_REGULAR_STEP);
  REQUIRE(zkw_regular_sequence(k, 0, &t) == ZKW_OK);
  CHECK(zkw_trace_count(t) > 0);
  CHECK(zkw_trace_wedge(t, 0, ZKW_PART_C, &w) == ZKW_ERR_INVALID_ARGUMENT);
  zkw_trace_free(t);
  zkw_complex_free(k);
}

TEST_CASE("C interface families") {
  zkw_complex *a = nullptr, *b = nullptr;
  REQUIRE(zkw_complex_parse_scx("vertices: 3\n1 2 3\n", &a) == ZKW_OK);
  REQUIRE(zkw_complex_parse_scx("vertices: 3\n1 2 3\n", &b) == ZKW_OK);
  zkw_family *fa = nullptr, *fb = nullptr, *g = nullptr;
  REQUIRE(zkw_family_from_shifted(a, &fa) == ZKW_OK);
  REQUIRE(zkw_family_from_shifted(b, &fb) == ZKW_OK);
  int fa_face[] = {2, 3}, fb_face[] = {1, 2};
  REQUIRE(zkw_family_combine(ZKW_GLUE, fa, fb, fa_face, fb_face, 2, &g) == ZKW_OK);
  CHECK(zkw_family_level(g) == 0);
  int match = 0, tf = 0;
  REQUIRE(zkw_family_check_oracle(g, 1, &match, &tf) == ZKW_OK);
  CHECK(match == 1);
  CHECK(tf == 1);
  zkw_wedge* w = nullptr;
  REQUIRE(zkw_family_wedge(g, &w) == ZKW_OK);
  REQUIRE(zkw_wedge_count(w) == 1);
  int susp = 0;
  zkw_vset idx = 0;
  uint64_t mult = 0;
  zkw_wedge_summand(w, 0, &susp, &idx, &mult);
  CHECK(susp == 1);
  CHECK(idx == 0x9);  // {1,4}
  zkw_wedge_free(w);
  zkw_family_free(g);
  zkw_family_free(fa);
  zkw_family_free(fb);
  zkw_complex_free(a);
  zkw_complex_free(b);
}
