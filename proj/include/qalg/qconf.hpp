#pragma once

// Algebra bundles: the shipped catalog and the line-oriented algebra file format.
//
//   algebra <NAME>
//   note <free text>
//   generators <id> <id> ...               declaration order = PBW order
//   lie [<X>, <Y>] = <linear expr>         classical bracket of a deformed bundle
//   bracket [<X>, <Y>] = <expr>            Lie bracket, or deformed relation when
//                                          the file has coproducts
//   coproduct <X> = <texpr>                sums of <expr> (x) <expr>
//   counit <X> = <rational>
//   rmatrix <wexpr>                        sums of <expr> * (<X> /\ <Y>)
//   cocommutator <X> = <wexpr>
//   rfactor <sign> z * <X> (x) <Y>         ordered, product read top to bottom
//   contraction <NAME>: <X> -> eps^<q> <X> ..., z -> eps^-<n> z
//
// `#` starts a comment. Unlisted brackets are zero; unlisted counits are zero;
// generators missing from a contraction keep exponent 0.

#include <optional>
#include <string>
#include <vector>

#include "qalg/expr.hpp"
#include "qalg/hopf.hpp"
#include "qalg/liebialg.hpp"

namespace qalg {

struct AlgebraBundle {
  std::string name;
  LieAlgebra algebra;
  std::optional<RMatrix> rmatrix;
  std::optional<Cocommutator> cocommutator;
  std::optional<DeformedHopfData> hopf;
  std::vector<ContractionMap> contractions;
  std::vector<std::string> notes;

  const ContractionMap &contraction(const std::string &map_name) const;

  friend bool operator==(const AlgebraBundle &, const AlgebraBundle &) = default;
};

struct ParseOptions {
  int order = ZSeries::kDefaultOrder;
  /// Run the per-component validation (Jacobi, antisymmetry, Hopf table checks).
  bool validate = true;
};

/// Parses one algebra file. Throws ParseError with line/column, or ValidationError.
AlgebraBundle parse_algebra_file(const std::string &text, const ParseOptions &options = {});

/// Parses a single expression over the given generators (for tests and tools).
ExprPtr parse_expression(const std::string &text, const GeneratorNames &generators);

/// Canonical text of a bundle; parsing it back yields an equal bundle.
std::string serialize(const AlgebraBundle &bundle);

/// Names of the shipped bundles, in catalog order.
std::vector<std::string> catalog_names();
/// Source text of a shipped bundle.
const std::string &catalog_source(const std::string &name);
/// Every shipped bundle, parsed and validated at `order`.
std::vector<AlgebraBundle> load_catalog(int order = ZSeries::kDefaultOrder);
AlgebraBundle load_bundle(const std::string &name, int order = ZSeries::kDefaultOrder);

} // namespace qalg
