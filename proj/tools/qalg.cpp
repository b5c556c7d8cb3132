// qalg: verification driver over the shipped catalog or user algebra files.
//
//   qalg check --algebra {NAME|all} --suite {classical|hopf|contraction|rmatrix|all}
//              [--order N] [--file PATH] [--format {text|records}] [--output PATH] [--jobs K]
//   qalg contract --from NAME --map MAP [--level {classical|quantum}] [--order N] [--file PATH]
//   qalg list
//
// Exit status: 0 all checks pass, 1 verification failure, 2 usage error.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "qalg/suites.hpp"

using namespace qalg;

namespace {

constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<AlgebraBundle> select(const std::string &algebra, const std::string &file, int order) {
  if (!file.empty()) {
    AlgebraBundle b = parse_algebra_file(read_file(file), ParseOptions{order, true});
    if (algebra != "all" && !algebra.empty() && algebra != b.name)
      throw ValidationError(file + " defines " + b.name + ", not " + algebra);
    return {std::move(b)};
  }
  if (algebra.empty() || algebra == "all")
    return load_catalog(order);
  const auto names = catalog_names();
  if (std::find(names.begin(), names.end(), algebra) == names.end())
    throw UsageError("no shipped algebra named '" + algebra + "'");
  return {load_bundle(algebra, order)};
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Exact verification of deformed conformal algebras"};
  app.require_subcommand(1);

  std::string algebra = "all", suite = "all", file, format = "text", output, from, map, level = "quantum";
  int order = ZSeries::kDefaultOrder, jobs = 1;

  auto *check = app.add_subcommand("check", "run verification suites");
  check->add_option("--algebra", algebra, "shipped bundle name or 'all'");
  check->add_option("--suite", suite, "classical, hopf, contraction, rmatrix or all")
      ->check(CLI::IsMember({"classical", "hopf", "contraction", "rmatrix", "all"}));
  check->add_option("--order", order, "truncation order N")->check(CLI::Range(0, 64));
  check->add_option("--file", file, "algebra file to check instead of the catalog");
  check->add_option("--format", format, "text or records")->check(CLI::IsMember({"text", "records"}));
  check->add_option("--output", output, "write the report here instead of standard output");
  check->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1, 256));

  auto *contract = app.add_subcommand("contract", "contract a bundle and print the result");
  contract->add_option("--from", from, "shipped bundle name")->required();
  contract->add_option("--map", map, "contraction map declared by the bundle")->required();
  contract->add_option("--level", level, "classical or quantum")->check(CLI::IsMember({"classical", "quantum"}));
  contract->add_option("--order", order, "truncation order N")->check(CLI::Range(0, 64));
  contract->add_option("--file", file, "algebra file to contract instead of the catalog");

  auto *list = app.add_subcommand("list", "list the shipped bundles");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (list->parsed()) {
      for (const auto &name : catalog_names())
        std::cout << name << "\n";
      return 0;
    }

    if (check->parsed()) {
      const auto bundles = select(algebra, file, order);
      const auto catalog = file.empty() && algebra == "all" ? bundles : load_catalog(order);
      const auto reports = run_suites(bundles, parse_suite(suite), jobs, catalog);
      const std::string text = format == "records" ? format_records(reports) : format_text(reports);
      if (output.empty()) {
        std::cout << text;
      } else {
        std::ofstream out(output);
        if (!out) {
          std::cerr << "qalg: cannot write " << output << "\n";
          return kUsage;
        }
        out << text;
      }
      for (const auto &r : reports)
        if (!r.passed())
          return 1;
      return 0;
    }

    if (contract->parsed()) {
      const AlgebraBundle source = select(from, file, order).front();
      AlgebraBundle result =
          contract_bundle(source, map, level == "quantum" ? ContractionLevel::Quantum : ContractionLevel::Classical);
      for (const auto &other : load_catalog(order)) {
        if (other.name == source.name)
          continue;
        AlgebraBundle probe = other;
        if (level == "classical")
          probe.hopf.reset();
        if (same_content(result, probe)) {
          std::cerr << "qalg: result matches shipped bundle " << other.name << "\n";
          result.name = other.name;
          result.algebra.set_name(other.name);
          if (result.hopf)
            result.hopf->name = other.name;
        }
      }
      std::cout << serialize(result);
      return 0;
    }
  } catch (const Divergence &e) {
    std::cerr << "qalg: " << e.what() << "\n";
    for (const auto &t : e.terms())
      std::cerr << "  " << t.where << ": " << t.term << " (eps^" << t.exponent << ")\n";
    return 1;
  } catch (const ParseError &e) {
    std::cerr << "qalg: " << e.what() << "\n";
    return kUsage;
  } catch (const ValidationError &e) {
    std::cerr << "qalg: " << e.what() << "\n";
    return 1;
  } catch (const std::exception &e) {
    std::cerr << "qalg: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
