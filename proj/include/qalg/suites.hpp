#pragma once

// Verification suites over bundles, as run by the command-line driver.

#include <string>
#include <vector>

#include "qalg/qconf.hpp"

namespace qalg {

enum class Suite { Classical, Hopf, Contraction, RMatrix, All };

Suite parse_suite(const std::string &name);
std::string suite_name(Suite s);

/// Reports for every (bundle, suite) pair that has data, bundle-major and in
/// suite order. `jobs` bounds the worker threads; the result does not depend on it.
/// `catalog` is searched for bundles matching quantum contractions.
std::vector<CheckReport> run_suites(const std::vector<AlgebraBundle> &bundles, Suite suite, int jobs,
                                    const std::vector<AlgebraBundle> &catalog);

/// Same algebra, r-matrix, cocommutator and Hopf tables (relations, coproducts,
/// counit). Names, notes, contraction maps and R-factors are ignored.
bool same_content(const AlgebraBundle &a, const AlgebraBundle &b);

enum class ContractionLevel { Classical, Quantum };

/// Contracts a bundle along one of its maps. The classical level keeps the Lie
/// algebra, r-matrix and cocommutator; the quantum level adds the Hopf tables.
/// Throws Divergence.
AlgebraBundle contract_bundle(const AlgebraBundle &b, const std::string &map, ContractionLevel level);

/// Human-readable report without timings.
std::string format_text(const std::vector<CheckReport> &reports);
/// One JSON object per check: suite, algebra, check, status, witness, microseconds.
std::string format_records(const std::vector<CheckReport> &reports);

} // namespace qalg
