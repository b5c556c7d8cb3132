#pragma once

// Noncommutative polynomials over generator words with ZSeries coefficients,
// PBW normal-form rewriting against a commutator table, and tensor powers.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qalg/coeff.hpp"

namespace qalg {

/// Index into an algebra's ordered generator list; the list order is the PBW order.
enum class GeneratorId : std::uint8_t {};

constexpr GeneratorId gen(std::size_t index) { return static_cast<GeneratorId>(index); }
constexpr std::size_t index_of(GeneratorId g) { return static_cast<std::size_t>(g); }

using GeneratorNames = std::vector<std::string>;

/// A monomial in the free algebra. The empty word is the unit.
struct Word {
  std::vector<GeneratorId> letters;

  Word() = default;
  Word(std::initializer_list<GeneratorId> l) : letters(l) {}
  explicit Word(std::vector<GeneratorId> l) : letters(std::move(l)) {}

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }

  /// Non-decreasing in generator order.
  bool is_normal() const;
  Word operator+(const Word &o) const;

  std::string str(const GeneratorNames &names) const;

  friend bool operator==(const Word &, const Word &) = default;
  friend std::strong_ordering operator<=>(const Word &a, const Word &b) {
    if (a.letters.size() != b.letters.size())
      return a.letters.size() <=> b.letters.size();
    return a.letters <=> b.letters;
  }
};

/// Finite linear combination of words with series coefficients, truncated at order N.
class NCPoly {
public:
  using Terms = std::map<Word, ZSeries>;

  explicit NCPoly(int order = ZSeries::kDefaultOrder) : order_(order) {}

  static NCPoly unit(int order) { return constant(ZSeries::constant(Scalar(1), order)); }
  static NCPoly constant(const ZSeries &c);
  static NCPoly generator(GeneratorId g, int order);
  static NCPoly word(const Word &w, const ZSeries &c);

  int order() const { return order_; }
  bool is_zero() const { return terms_.empty(); }
  const Terms &terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  void add_term(const Word &w, const ZSeries &c);
  bool is_normal() const;
  /// Lowest z exponent present; 0 when zero.
  int min_z_exponent() const;
  /// Whether every word uses only letters from `allowed`.
  bool uses_only(const std::vector<bool> &allowed) const;

  NCPoly truncated(int order) const;
  /// The z^k component, with coefficients as single-term series.
  NCPoly slice(int exponent) const;
  NCPoly rescaled_z(const Scalar &c) const;

  NCPoly operator-() const;
  NCPoly &operator+=(const NCPoly &o);
  NCPoly &operator-=(const NCPoly &o);
  NCPoly &operator*=(const Scalar &c);
  NCPoly &operator*=(const ZSeries &c);

  friend NCPoly operator+(NCPoly a, const NCPoly &b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly &b) { return a -= b; }
  friend NCPoly operator*(NCPoly a, const Scalar &c) { return a *= c; }
  friend NCPoly operator*(NCPoly a, const ZSeries &c) { return a *= c; }

  friend bool operator==(const NCPoly &a, const NCPoly &b) {
    return a.order_ == b.order_ && a.terms_ == b.terms_;
  }

  std::string str(const GeneratorNames &names) const;

private:
  int order_;
  Terms terms_;
};

/// Free-algebra (concatenation) product. The result is generally not normal.
NCPoly poly_mul(const NCPoly &a, const NCPoly &b);

/// Key of a tensor term: one word per slot; slots beyond the rank stay empty.
using TensorKey = std::array<Word, 3>;

/// Element of A(x)A or A(x)A(x)A. Products act slot-wise with no sign rule.
class TensorPoly {
public:
  using Terms = std::map<TensorKey, ZSeries>;

  explicit TensorPoly(int rank = 2, int order = ZSeries::kDefaultOrder);

  static TensorPoly unit(int rank, int order);
  /// a (x) b.
  static TensorPoly outer(const NCPoly &a, const NCPoly &b);
  /// a (x) b (x) c.
  static TensorPoly outer(const NCPoly &a, const NCPoly &b, const NCPoly &c);

  int rank() const { return rank_; }
  int order() const { return order_; }
  bool is_zero() const { return terms_.empty(); }
  const Terms &terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  void add_term(const TensorKey &k, const ZSeries &c);
  bool is_normal() const;

  TensorPoly truncated(int order) const;
  TensorPoly slice(int exponent) const;

  /// Places a rank-2 tensor into legs (i,j) of a rank-3 tensor, 0-based.
  TensorPoly embed(int leg_a, int leg_b) const;

  TensorPoly operator-() const;
  TensorPoly &operator+=(const TensorPoly &o);
  TensorPoly &operator-=(const TensorPoly &o);
  TensorPoly &operator*=(const Scalar &c);

  friend TensorPoly operator+(TensorPoly a, const TensorPoly &b) { return a += b; }
  friend TensorPoly operator-(TensorPoly a, const TensorPoly &b) { return a -= b; }
  friend TensorPoly operator*(TensorPoly a, const Scalar &c) { return a *= c; }

  friend bool operator==(const TensorPoly &a, const TensorPoly &b) {
    return a.rank_ == b.rank_ && a.order_ == b.order_ && a.terms_ == b.terms_;
  }

  std::string str(const GeneratorNames &names) const;

private:
  int rank_;
  int order_;
  Terms terms_;
};

/// Slot-wise product. Throws RankMismatch on unequal ranks.
TensorPoly tensor_mul(const TensorPoly &a, const TensorPoly &b);
/// sigma(a (x) b) = b (x) a; rank 2 only.
TensorPoly flip(const TensorPoly &a);

/// Commutators [Y,X] for every ordered pair Y > X. Y.X rewrites to X.Y + table(Y,X).
class RelationTable {
public:
  RelationTable() = default;
  RelationTable(std::size_t generator_count, int order);

  std::size_t generator_count() const { return count_; }
  int order() const { return order_; }

  /// Stores [a,b] for a != b; the reversed pair is stored negated.
  void set(GeneratorId a, GeneratorId b, NCPoly value);
  bool has(GeneratorId a, GeneratorId b) const;
  void erase(GeneratorId a, GeneratorId b);
  /// Stored entry [Y,X], Y > X. Throws IncompleteTable if missing.
  const NCPoly &entry(GeneratorId y, GeneratorId x) const;
  /// [a,b] for any pair, derived by antisymmetry.
  NCPoly commutator(GeneratorId a, GeneratorId b) const;

  /// Names of missing (Y,X) pairs; empty when complete.
  std::vector<std::pair<GeneratorId, GeneratorId>> missing() const;
  bool is_complete() const { return missing().empty(); }

  friend bool operator==(const RelationTable &, const RelationTable &) = default;

private:
  std::size_t slot(GeneratorId y, GeneratorId x) const { return index_of(y) * count_ + index_of(x); }

  std::size_t count_ = 0;
  int order_ = ZSeries::kDefaultOrder;
  std::vector<std::optional<NCPoly>> entries_;
};

enum class RewriteStrategy { LeftmostInnermost, RightmostInnermost };

/// PBW normal-form engine bound to one relation table and truncation order.
///
/// Memoizes normal forms of words, so a Normalizer is not safe to share
/// between threads; construct one per thread.
class Normalizer {
public:
  static constexpr std::uint64_t kStepBudget = 10'000'000;

  Normalizer(const RelationTable &table, int order,
             RewriteStrategy strategy = RewriteStrategy::LeftmostInnermost,
             std::uint64_t step_budget = kStepBudget);

  int order() const { return order_; }
  const RelationTable &table() const { return *table_; }

  NCPoly normalize(const NCPoly &a);
  TensorPoly normalize(const TensorPoly &a);
  /// Normal form of a single word keeping z-degrees up to `budget`.
  const std::vector<std::pair<Word, ZSeries>> &word_normal_form(const Word &w, int budget);

  std::uint64_t steps() const { return steps_; }

private:
  using Key = std::pair<Word, int>;

  const RelationTable *table_;
  int order_;
  RewriteStrategy strategy_;
  std::uint64_t budget_;
  std::uint64_t steps_ = 0;
  std::map<Key, std::vector<std::pair<Word, ZSeries>>> memo_;
};

/// One-shot normalization with the default strategy.
NCPoly normalize(const NCPoly &a, const RelationTable &rel);

} // namespace qalg
