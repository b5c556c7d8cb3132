#include <doctest.h>

#include <fstream>
#include <sstream>

#include "support.hpp"

using namespace qalg;

namespace {

std::string read_data(const std::string &name) {
  std::ifstream in(std::string(QALG_DATA_DIR) + "/" + name + ".alg");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

const char *kSmall = R"(algebra tiny
generators A B H
bracket [H, A] = 2*A
bracket [H, B] = -2*B
bracket [A, B] = H
)";

} // namespace

TEST_CASE("catalog contents") {
  const auto names = catalog_names();
  CHECK(names == std::vector<std::string>{"M3", "G3", "C3", "sl2", "so22", "M3alt"});
  const auto all = load_catalog(2);
  REQUIRE(all.size() == 6);
  CHECK(all[0].name == "M3");
  CHECK(all[0].algebra.dimension() == 10);
  for (const auto &b : all)
    CHECK_MESSAGE(!b.notes.empty(), b.name);
  CHECK(all[1].notes[1].find("t6(so(2)+so(2,1))") != std::string::npos);
  CHECK(all[2].notes[1].find("iso(3,1)") != std::string::npos);
  CHECK_THROWS_AS(load_bundle("nope"), ValidationError);
}

TEST_CASE("shipped files parse to the catalog bundles") {
  for (const auto &name : catalog_names()) {
    CHECK(catalog_source(name) == read_data(name));
    CHECK(parse_algebra_file(read_data(name), ParseOptions{2, true}) == load_bundle(name, 2));
  }
}

TEST_CASE("serialization round trip") {
  for (const auto &b : load_catalog(3)) {
    const std::string text = serialize(b);
    const AlgebraBundle again = parse_algebra_file(text, ParseOptions{3, true});
    CHECK_MESSAGE(again == b, b.name);
    CHECK(serialize(again) == text);
  }
}

TEST_CASE("a small Lie algebra file") {
  const AlgebraBundle b = parse_algebra_file(kSmall);
  CHECK(b.name == "tiny");
  CHECK(b.algebra.bracket(2, 0) == LieElement{{0, Scalar(2)}});
  CHECK(b.algebra.bracket(0, 2) == LieElement{{0, Scalar(-2)}});
  CHECK_FALSE(b.hopf.has_value());
  CHECK(jacobi_check(b.algebra).passed());
}

TEST_CASE("unbalanced parenthesis reports its position") {
  const std::string text = std::string(kSmall) + "bracket [A, H] = (A + B\n";
  try {
    parse_algebra_file(text);
    FAIL("expected a parse error");
  } catch (const ParseError &e) {
    CHECK(e.line() == 6);
    CHECK(e.column() == 24);
  }
}

TEST_CASE("duplicate relation") {
  const std::string text = std::string(kSmall) + "bracket [B, A] = -H\n";
  try {
    parse_algebra_file(text);
    FAIL("expected a validation error");
  } catch (const ValidationError &e) {
    CHECK(std::string(e.what()).find("duplicate relation") != std::string::npos);
  }
}

TEST_CASE("file-level diagnostics") {
  CHECK_THROWS_AS(parse_algebra_file("generators A B\n"), ParseError);
  CHECK_THROWS_AS(parse_algebra_file("algebra x\nbracket [A, B] = A\n"), ParseError);
  CHECK_THROWS_AS(parse_algebra_file("algebra x\ngenerators A z\n"), ParseError);
  CHECK_THROWS_AS(parse_algebra_file("algebra x\ngenerators A B\nfrobnicate A\n"), ParseError);
  CHECK_THROWS_AS(parse_algebra_file("algebra x\ngenerators A B\nbracket [A, B] = A*B\n"), ValidationError);
  // Jacobi fails: [A,[B,C]] + ... with [A,B] = C, [B,C] = A, [C,A] = C.
  CHECK_THROWS_AS(parse_algebra_file("algebra x\ngenerators A B C\nbracket [A, B] = C\nbracket [B, C] = A\n"
                                     "bracket [C, A] = C\n"),
                  ValidationError);
  CHECK_NOTHROW(parse_algebra_file("algebra x\ngenerators A B C\nbracket [A, B] = C\nbracket [B, C] = A\n"
                                   "bracket [C, A] = C\n",
                                   ParseOptions{2, false}));
  CHECK_THROWS_AS(parse_algebra_file("algebra x\ngenerators A B\nrmatrix z*(A (x) B)\n"), ParseError);
  CHECK_THROWS_AS(parse_algebra_file("algebra x\ngenerators A B\nrmatrix z*A*B\n"), ExpansionError);
  CHECK_THROWS_AS(parse_algebra_file("algebra x\ngenerators A B\nrmatrix z*(A*B /\\ B)\n"), ValidationError);
}

TEST_CASE("Hopf files need every coproduct") {
  const std::string text = "algebra x\ngenerators A B\nbracket [A, B] = 0\ncoproduct A = 1 (x) A + A (x) 1\n";
  CHECK_THROWS_AS(parse_algebra_file(text), ValidationError);
  const AlgebraBundle ok = parse_algebra_file(text + "coproduct B = 1 (x) B + B (x) exp(z*A)\n", ParseOptions{3, true});
  REQUIRE(ok.hopf.has_value());
  CHECK(hopf_suite(*ok.hopf).passed());
}

TEST_CASE("contraction lines") {
  const AlgebraBundle b = load_bundle("M3", 1);
  const ContractionMap &m = b.contraction("speed-time");
  CHECK(m.z_exponent == Scalar(1));
  CHECK(m.exponents[b.algebra.index("P0")] == Scalar(1));
  CHECK(m.exponents[b.algebra.index("P1")] == Scalar(0));
  CHECK_THROWS_AS(b.contraction("speed-light"), ValidationError);
}
