#pragma once

// Classical layer: Lie algebras by structure constants, coboundary Lie
// bialgebras, Yang-Baxter and cocycle checks, and Inonu-Wigner contractions.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qalg/coeff.hpp"
#include "qalg/ncpoly.hpp"
#include "qalg/report.hpp"

namespace qalg {

/// Linear combination of generators, keyed by generator index.
using LieElement = std::map<std::size_t, Scalar>;

/// Element of g (x) g as coefficients of X_a (x) X_b.
using Bivector = std::map<std::pair<std::size_t, std::size_t>, Scalar>;

/// Element of g (x) g (x) g.
using Trivector = std::map<std::array<std::size_t, 3>, Scalar>;

class LieAlgebra {
public:
  LieAlgebra() = default;
  LieAlgebra(std::string name, GeneratorNames generators);

  const std::string &name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }
  const GeneratorNames &generators() const { return generators_; }
  std::size_t dimension() const { return generators_.size(); }
  std::optional<std::size_t> find(const std::string &generator) const;
  std::size_t index(const std::string &generator) const;

  /// Sets [X_i, X_j]; the reversed pair is derived.
  void set_bracket(std::size_t i, std::size_t j, const LieElement &value);
  LieElement bracket(std::size_t i, std::size_t j) const;
  LieElement bracket(const LieElement &a, const LieElement &b) const;

  /// Stored brackets (i < j), zero entries omitted.
  const std::map<std::pair<std::size_t, std::size_t>, LieElement> &structure_constants() const { return constants_; }

  std::string str(const LieElement &e) const;

  friend bool operator==(const LieAlgebra &, const LieAlgebra &) = default;

private:
  std::string name_;
  GeneratorNames generators_;
  std::map<std::pair<std::size_t, std::size_t>, LieElement> constants_;
};

/// r = z * sum c (X_i /\ X_j), i < j, with A /\ B = A (x) B - B (x) A.
struct RMatrix {
  struct Term {
    std::size_t i;
    std::size_t j;
    Scalar coefficient; // of z

    friend bool operator==(const Term &, const Term &) = default;
  };
  std::vector<Term> terms;

  /// Builds from a full tensor; throws ValidationError unless it is antisymmetric.
  static RMatrix from_bivector(const Bivector &b);
  Bivector to_bivector() const;
  bool is_zero() const { return terms.empty(); }

  friend bool operator==(const RMatrix &, const RMatrix &) = default;
};

/// delta(X) per generator, as coefficients of z in g (x) g.
struct Cocommutator {
  std::vector<Bivector> images;

  bool is_zero() const;
  bool is_antisymmetric() const;

  friend bool operator==(const Cocommutator &, const Cocommutator &) = default;
};

/// X -> eps^{a_X} X for each generator and z -> eps^{-n} z.
struct ContractionMap {
  std::string name;
  std::vector<Scalar> exponents;
  std::optional<Scalar> z_exponent;

  ContractionMap with_n(const Scalar &n) const {
    ContractionMap m = *this;
    m.z_exponent = n;
    return m;
  }

  friend bool operator==(const ContractionMap &, const ContractionMap &) = default;
};

std::string bivector_str(const Bivector &b, const GeneratorNames &names);
/// Cross-representation helpers: z * b as a rank-2 TensorPoly, and back.
TensorPoly bivector_to_tensor(const Bivector &b, int order);
Bivector tensor_to_bivector(const TensorPoly &t, int z_exponent);

/// Every triple (X,Y,Z) with nonvanishing Jacobiator is a failed check.
CheckReport jacobi_check(const LieAlgebra &g);

/// delta(X) = [X (x) 1 + 1 (x) X, r].
Cocommutator cocommutator_from_r(const LieAlgebra &g, const RMatrix &r);

/// Schouten bracket [[r,r]] = [r12,r13] + [r12,r23] + [r13,r23], coefficient of z^2.
Trivector schouten_bracket(const LieAlgebra &g, const RMatrix &r);
CheckReport cybe_check(const LieAlgebra &g, const RMatrix &r);

/// 1-cocycle condition for every pair and co-Jacobi for every generator.
CheckReport cocycle_and_cojacobi_check(const LieAlgebra &g, const Cocommutator &d);

struct ContractedBialgebra {
  LieAlgebra algebra;
  RMatrix r;
  Cocommutator delta;
};

/// Contracts brackets, r and delta by exact eps-exponent bookkeeping. Terms with
/// positive exponent vanish; any negative exponent throws Divergence listing all
/// offending terms.
ContractedBialgebra contract_bialgebra(const LieAlgebra &g, const RMatrix &r, const ContractionMap &m);
/// Contracts only the Lie brackets.
LieAlgebra contract_algebra(const LieAlgebra &g, const ContractionMap &m);

/// Smallest n for which neither r nor the induced delta diverges.
Scalar find_min_n0(const LieAlgebra &g, const RMatrix &r, const ContractionMap &m);

} // namespace qalg
