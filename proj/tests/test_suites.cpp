#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "qalg/suites.hpp"

using namespace qalg;

TEST_CASE("reports do not depend on the number of jobs") {
  const auto catalog = load_catalog(2);
  const std::string one = format_text(run_suites(catalog, Suite::All, 1, catalog));
  const std::string four = format_text(run_suites(catalog, Suite::All, 4, catalog));
  CHECK(one == four);
  CHECK(one == format_text(run_suites(catalog, Suite::All, 3, catalog)));
}

TEST_CASE("suites cover the expected checks") {
  const auto catalog = load_catalog(2);
  const auto reports = run_suites(catalog, Suite::All, 2, catalog);
  std::size_t hopf = 0, rmatrix = 0;
  for (const auto &r : reports) {
    hopf += r.suite == "hopf";
    rmatrix += r.suite == "rmatrix";
    if (r.algebra == "M3" && r.suite == "contraction") {
      bool g3 = false, c3 = false;
      for (const auto &c : r.checks) {
        g3 = g3 || (c.id == "quantum[speed-space] = G3" && c.passed);
        c3 = c3 || (c.id == "quantum[speed-time] = C3" && c.passed);
      }
      CHECK(g3);
      CHECK(c3);
    }
  }
  CHECK(hopf == 3);
  CHECK(rmatrix == 2);
}

TEST_CASE("records are one JSON object per check") {
  const auto catalog = load_catalog(2);
  const auto reports = run_suites({catalog[3]}, Suite::Classical, 1, catalog);
  std::istringstream in(format_records(reports));
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    const auto j = nlohmann::json::parse(line);
    CHECK(j.at("suite") == "classical");
    CHECK(j.at("algebra") == "sl2");
    CHECK(j.at("status") == "pass");
    CHECK(j.contains("check"));
    CHECK(j.at("microseconds").is_number_integer());
    ++n;
  }
  CHECK(n == reports.front().checks.size());
}

TEST_CASE("contracting M3 along speed-time gives C3") {
  const auto m3 = load_bundle("M3", 3);
  const AlgebraBundle c = contract_bundle(m3, "speed-time", ContractionLevel::Quantum);
  CHECK(same_content(c, load_bundle("C3", 3)));
  CHECK_FALSE(same_content(c, load_bundle("G3", 3)));
  const AlgebraBundle again = parse_algebra_file(serialize(c), ParseOptions{3, true});
  CHECK(same_content(again, c));
}
