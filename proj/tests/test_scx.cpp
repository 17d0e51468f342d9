#include <doctest.h>

#include <random>

#include "support.hpp"
#include "zkwedge/error.hpp"
#include "zkwedge/scx.hpp"

using namespace zkw;
using support::complex_of;

TEST_CASE("parse examples") {
  CHECK(parse_scx("vertices: 3\n1 2\n3\n") == complex_of(3, {{1, 2}, {3}}));
  CHECK(parse_scx("vertices: 3\n# a comment\n1 2 3\n") == SimplicialComplex::skeleton(3, 3));
  CHECK(parse_scx("# header next\n\nvertices: 2   # two\n  1   2  # edge\n\n") == complex_of(2, {{1, 2}}));
}

TEST_CASE("parse errors carry line numbers") {
  auto message = [](const std::string& text) {
    try {
      parse_scx(text);
    } catch (const Error& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(message("vertices: 2\n1 1\n").find("line 2") != std::string::npos);
  CHECK(message("vertices: 2\n1 1\n").find("duplicate") != std::string::npos);
  CHECK(message("1 2\n").find("header") != std::string::npos);
  CHECK(message("\n\n").find("missing header") != std::string::npos);
  CHECK(message("vertices: 2\n\n1 3\n").find("line 3") != std::string::npos);
  CHECK(message("vertices: 2\n1 x\n").find("integer") != std::string::npos);
}

TEST_CASE("print and parse round trip") {
  for (int n = 0; n <= 7; ++n)
    for (int q = 0; q <= n; ++q) {
      auto k = SimplicialComplex::skeleton(n, q);
      CHECK(parse_scx(print_scx(k)) == k);
    }
  std::mt19937_64 rng(47);
  for (int i = 0; i < 30; ++i) {
    auto k = support::random_complex(1 + i % 7, rng);
    auto text = print_scx(k);
    CHECK(parse_scx(text) == k);
    CHECK(print_scx(parse_scx(text)) == text);
  }
  CHECK(print_scx(complex_of(3, {{1, 2}, {3}})) == "vertices: 3\n1 2\n3\n");
}
