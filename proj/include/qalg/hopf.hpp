#pragma once

// Quantum layer: deformed Hopf structures certified up to a truncation order N.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qalg/liebialg.hpp"
#include "qalg/ncpoly.hpp"
#include "qalg/report.hpp"

namespace qalg {

/// exp(coefficient * z * left (x) right).
struct RFactor {
  Scalar coefficient;
  GeneratorId left{};
  GeneratorId right{};

  friend bool operator==(const RFactor &, const RFactor &) = default;
};

struct DeformedHopfData {
  std::string name;
  GeneratorNames generators;
  int order = ZSeries::kDefaultOrder;
  RelationTable relations;
  std::vector<TensorPoly> coproducts; // one per generator
  std::vector<Scalar> counit;         // one per generator; the unit maps to 1
  std::optional<std::vector<RFactor>> rmatrix_factors; // product read left to right

  std::size_t dimension() const { return generators.size(); }
  std::optional<GeneratorId> find(const std::string &name) const;

  friend bool operator==(const DeformedHopfData &, const DeformedHopfData &) = default;
};

/// S(X) per generator, in normal form.
struct Antipode {
  std::vector<NCPoly> images;
};

/// Working state for checks over one bundle: a normalizer plus memoized
/// coproducts of words. Not thread-safe; use one per thread.
class HopfContext {
public:
  explicit HopfContext(const DeformedHopfData &h);

  const DeformedHopfData &data() const { return *h_; }
  Normalizer &normalizer() { return normalizer_; }
  int order() const { return h_->order; }

  /// Delta of a word, slot-normalized. Delta(1) = 1 (x) 1.
  const TensorPoly &coproduct_of_word(const Word &w);
  TensorPoly coproduct_extend(const NCPoly &a);

  /// Applies Delta to slot `slot` (0 or 1) of a rank-2 tensor, giving rank 3.
  TensorPoly coproduct_on_slot(const TensorPoly &t, int slot);

  NCPoly normalize(const NCPoly &a) { return normalizer_.normalize(a); }
  TensorPoly normalize(const TensorPoly &a) { return normalizer_.normalize(a); }

  /// Normalized slot-wise commutator [a, b].
  TensorPoly commutator(const TensorPoly &a, const TensorPoly &b);

private:
  const DeformedHopfData *h_;
  Normalizer normalizer_;
  std::map<Word, TensorPoly> word_coproducts_;
};

/// Renders the first differing z-order and offending term of a - b.
std::string first_difference(const TensorPoly &a, const TensorPoly &b, const GeneratorNames &names);
std::string first_difference(const NCPoly &a, const NCPoly &b, const GeneratorNames &names);

/// Completeness and normality (thrown as IncompleteTable / NonNormalEntry),
/// plus report entries for the z = 0 Lie limit, primitive coproducts at z = 0,
/// counit shape and the rewriting diamond spot check.
CheckReport validate_hopf_data(const DeformedHopfData &h);
/// Failed checks other than the diamond spot check. Diamond failures are
/// reported as findings and never reject a bundle.
std::vector<CheckResult> blocking_failures(const CheckReport &r);

/// Leftmost- vs rightmost-innermost normal forms on every strictly decreasing
/// degree-3 word plus `samples` random degree-3 words (fixed seed).
CheckReport diamond_check(const DeformedHopfData &h, int samples = 200, std::uint64_t seed = 0x5eedULL);

TensorPoly coproduct_extend(const DeformedHopfData &h, const NCPoly &a);

CheckReport check_coassociativity(const DeformedHopfData &h);
CheckReport check_coassociativity(HopfContext &ctx);
CheckReport check_homomorphism(const DeformedHopfData &h);
CheckReport check_homomorphism(HopfContext &ctx);
/// Checks only the listed pairs (a, b), a != b.
CheckReport check_homomorphism(HopfContext &ctx, const std::vector<std::pair<GeneratorId, GeneratorId>> &pairs);
CheckReport check_counit(const DeformedHopfData &h);

/// delta = Delta_(1) - sigma o Delta_(1), as coefficients of z.
Cocommutator first_order_delta(const DeformedHopfData &h);

/// Solves m(S (x) id)Delta(X) = eps(X) 1 order by order. Throws NoSolution when
/// Delta is not primitive at z = 0 or the iteration fails to close.
Antipode derive_antipode(const DeformedHopfData &h);
Antipode derive_antipode(HopfContext &ctx);
/// Both antipode axioms for every generator.
CheckReport check_antipode(HopfContext &ctx, const Antipode &s);

struct RMatrixPair {
  TensorPoly r;
  TensorPoly inverse;
};

/// Ordered product of the truncated factor exponentials and its structural
/// inverse; the inverse is cross-checked against Neumann-series inversion and
/// R R^-1 = 1 (x) 1, any mismatch being a hard failure.
RMatrixPair build_rmatrix(const DeformedHopfData &h);
RMatrixPair build_rmatrix(HopfContext &ctx);
/// (1 (x) 1 + X)^-1 = sum (-X)^k, slot-normalized.
TensorPoly invert_tensor(HopfContext &ctx, const TensorPoly &t);

CheckReport check_qybe(HopfContext &ctx, const TensorPoly &r);
CheckReport check_intertwining(HopfContext &ctx, const RMatrixPair &r);
/// Skew part of the z^1 component of R against a classical r-matrix.
CheckReport check_rmatrix_classical_limit(const DeformedHopfData &h, const TensorPoly &r, const RMatrix &classical);

/// eps-exponent bookkeeping on relations, coproducts, counit and R-factors.
DeformedHopfData quantum_contract(const DeformedHopfData &h, const ContractionMap &m);

/// z^0 part of the relations as a Lie algebra; throws NotLie if it is not one.
LieAlgebra classical_limit(const DeformedHopfData &h);

CheckReport subalgebra_closure_check(const DeformedHopfData &h, const std::vector<GeneratorId> &subset);

/// Old X = factor * new X' (with the new name), old z = z_factor * new z.
struct RelabelMap {
  std::vector<std::string> names;
  std::vector<Scalar> factors;
  Scalar z_factor{1};
};

/// Rewrites every table in the new basis. With `revalidate`, the result must
/// pass validation, coassociativity and homomorphism or ValidationError is thrown.
DeformedHopfData relabel(const DeformedHopfData &h, const RelabelMap &map, bool revalidate = true);

/// Full Hopf suite: coassociativity, homomorphism, counit and antipode axioms.
CheckReport hopf_suite(const DeformedHopfData &h);

} // namespace qalg
