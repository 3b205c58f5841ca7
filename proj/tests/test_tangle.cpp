#include "doctest.h"
#include "qsl2/tangle.hpp"

#include <string>

using namespace qsl2;

namespace {

using IntMatrix = std::vector<std::vector<int>>;

IntMatrix zeros(int n) { return IntMatrix(n, std::vector<int>(n, 0)); }

std::string error_of(const std::string& text) {
  try {
    parse_tangle(text);
  } catch (const TangleError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("single cap arc") {
  TangleDiagram d = parse_tangle("tangle arc components=1\ncap\n");
  CHECK(d.n == 1);
  CHECK(d.crossings.empty());
  REQUIRE(d.extrema.size() == 1);
  // oriented from the right endpoint to the left one
  CHECK(d.point_up[0][1]);
  CHECK_FALSE(d.point_up[0][0]);
  CHECK_FALSE(d.extrema[0].left_to_right);
}

TEST_CASE("comments and blank lines are ignored") {
  TangleDiagram d = parse_tangle("# demo\n\ntangle c components=2\n| X+ |  # first\n| X+ |\ncap cap\n");
  CHECK(d.crossings.size() == 2);
}

TEST_CASE("clasp diagram") {
  TangleDiagram d = builtin("clasp_B");
  CHECK(d.n == 2);
  CHECK(d.crossings.size() == 2);
  for (const auto& x : d.crossings) {
    CHECK(x.sign == -1);
    CHECK(x.bl.comp != x.br.comp);
  }
  CHECK(linking_matrix(d) == IntMatrix{{0, -1}, {-1, 0}});
}

TEST_CASE("parse errors carry a location") {
  std::string w = error_of("tangle bad components=1\n| X+\ncap\n");
  CHECK(w.find("row 1") != std::string::npos);
  CHECK(w.find("width mismatch") != std::string::npos);

  w = error_of("tangle bad components=1\n| Y\n");
  CHECK(w.find("unknown cell 'Y'") != std::string::npos);
  CHECK(w.find("cell 2") != std::string::npos);

  CHECK(error_of("tangle bad components=1\n| |\n").find("open at the top") != std::string::npos);
  CHECK(error_of("tangle bad components=2\n| cap |\ncap\n").find("adjacent") != std::string::npos);
  CHECK(error_of("tangle bad components=1\ncap cup\ncap\n").find("closed component") != std::string::npos);
  CHECK(error_of("| |\n").find("header") != std::string::npos);

  CHECK_THROWS_AS(builtin("nope"), TangleError);
}

TEST_CASE("builtins") {
  CHECK(builtin("trivial(3)").n == 3);
  CHECK(builtin("trivial(3)").crossings.empty());
  CHECK(builtin("trivial(0)").n == 0);

  TangleDiagram tb = builtin("borromean_TB");
  CHECK(tb.n == 3);
  CHECK(tb.crossings.size() == 6);
  CHECK(linking_matrix(tb) == zeros(3));

  TangleDiagram p = builtin("borromean_P");
  CHECK(p.n == 3);
  CHECK(linking_matrix(p) == zeros(3));
  CHECK(brunnian_form(p, 1));
  CHECK_FALSE(brunnian_form(tb, 1));

  TangleDiagram t3 = builtin("trivial(3)");
  for (int i = 1; i <= 3; ++i) CHECK(brunnian_form(t3, i));

  TangleDiagram pa = builtin("borromean_plus_arc");
  CHECK(pa.n == 4);
  for (const auto& x : pa.crossings) {
    CHECK(x.bl.comp != 3);
    CHECK(x.br.comp != 3);
  }
  CHECK(linking_matrix(pa) == zeros(4));
}

TEST_CASE("reading order of the Borromean diagram") {
  TangleDiagram tb = builtin("borromean_TB");
  // Each component passes through four crossing legs.
  for (int k = 0; k < 3; ++k) {
    int legs = 0;
    for (const auto& ev : tb.reading[k])
      if (ev.kind != ReadEvent::Extremum) ++legs;
    CHECK(legs == 4);
  }
  // Every crossing contributes exactly one alpha and one beta leg.
  std::vector<int> a(6, 0), b(6, 0);
  for (const auto& r : tb.reading)
    for (const auto& ev : r) {
      if (ev.kind == ReadEvent::CrossingAlpha) ++a[ev.index];
      if (ev.kind == ReadEvent::CrossingBeta) ++b[ev.index];
    }
  for (int c = 0; c < 6; ++c) {
    CHECK(a[c] == 1);
    CHECK(b[c] == 1);
  }
}

TEST_CASE("parse and serialize round trip") {
  for (const auto& name : builtin_names()) {
    TangleDiagram d = builtin(name);
    std::string s = serialize_tangle(d);
    TangleDiagram e = parse_tangle(s);
    CHECK(e.rows == d.rows);
    CHECK(e.n == d.n);
    CHECK(serialize_tangle(e) == s);
  }
}

TEST_CASE("linking matrix is symmetric and stable under distant RII") {
  for (const auto& name : builtin_names()) {
    IntMatrix lk = linking_matrix(builtin(name));
    for (std::size_t i = 0; i < lk.size(); ++i)
      for (std::size_t j = 0; j < lk.size(); ++j) CHECK(lk[i][j] == lk[j][i]);
  }
  IntMatrix c = linking_matrix(builtin("clasp_B_r2"));
  CHECK(c == IntMatrix{{0, -1, 0}, {-1, 0, 0}, {0, 0, 0}});
  CHECK(linking_matrix(builtin("borromean_TB_r2")) == zeros(4));
}

TEST_CASE("wiggles have zero writhe") {
  CHECK(linking_matrix(builtin("wiggle")) == zeros(1));
  CHECK(linking_matrix(builtin("wiggle_mirror")) == zeros(1));
  TangleDiagram w = builtin("wiggle");
  CHECK(w.extrema.size() == 3);
}
