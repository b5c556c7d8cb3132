#include "qalg/ncpoly.hpp"

#include <algorithm>
#include <sstream>

namespace qalg {

namespace {

void accumulate(std::map<Word, ZSeries> &into, const Word &w, const ZSeries &c) {
  if (c.is_zero())
    return;
  auto it = into.find(w);
  if (it == into.end()) {
    into.emplace(w, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero())
    into.erase(it);
}

std::string render_coefficient(const ZSeries &c, bool first, bool &needs_star) {
  // Single-term series print inline with sign folded into the separator.
  std::ostringstream os;
  needs_star = true;
  if (c.terms().size() == 1) {
    const auto &[e, v] = c.terms().front();
    const bool neg = v.sign() < 0;
    os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
    Scalar mag = neg ? -v : v;
    if (e == 0) {
      if (mag.is_one()) {
        needs_star = false;
        return os.str();
      }
      os << mag;
      return os.str();
    }
    if (!mag.is_one())
      os << mag << "*";
    os << "z";
    if (e != 1)
      os << "^" << e;
    return os.str();
  }
  os << (first ? "" : " + ") << "(" << c.str() << ")";
  return os.str();
}

} // namespace

bool Word::is_normal() const { return std::is_sorted(letters.begin(), letters.end()); }

Word Word::operator+(const Word &o) const {
  Word w;
  w.letters.reserve(letters.size() + o.letters.size());
  w.letters.insert(w.letters.end(), letters.begin(), letters.end());
  w.letters.insert(w.letters.end(), o.letters.begin(), o.letters.end());
  return w;
}

std::string Word::str(const GeneratorNames &names) const {
  if (letters.empty())
    return "1";
  std::string out;
  for (std::size_t i = 0; i < letters.size();) {
    std::size_t j = i;
    while (j < letters.size() && letters[j] == letters[i])
      ++j;
    if (!out.empty())
      out += "*";
    out += names.at(index_of(letters[i]));
    if (j - i > 1)
      out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

// ---------------------------------------------------------------- NCPoly

NCPoly NCPoly::constant(const ZSeries &c) {
  NCPoly p(c.order());
  p.add_term(Word{}, c);
  return p;
}

NCPoly NCPoly::generator(GeneratorId g, int order) {
  return word(Word{g}, ZSeries::constant(Scalar(1), order));
}

NCPoly NCPoly::word(const Word &w, const ZSeries &c) {
  NCPoly p(c.order());
  p.add_term(w, c);
  return p;
}

void NCPoly::add_term(const Word &w, const ZSeries &c) {
  if (c.order() != order_)
    throw OrderMismatch("term order " + std::to_string(c.order()) + " in polynomial of order " +
                        std::to_string(order_));
  accumulate(terms_, w, c);
}

bool NCPoly::is_normal() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto &t) { return t.first.is_normal(); });
}

int NCPoly::min_z_exponent() const {
  int m = 0;
  bool first = true;
  for (const auto &[w, c] : terms_) {
    if (first || c.min_exponent() < m)
      m = c.min_exponent();
    first = false;
  }
  return m;
}

bool NCPoly::uses_only(const std::vector<bool> &allowed) const {
  for (const auto &[w, c] : terms_)
    for (auto g : w.letters)
      if (!allowed.at(index_of(g)))
        return false;
  return true;
}

NCPoly NCPoly::truncated(int order) const {
  NCPoly p(order);
  for (const auto &[w, c] : terms_)
    p.add_term(w, c.truncated(order));
  return p;
}

NCPoly NCPoly::slice(int exponent) const {
  NCPoly p(order_);
  for (const auto &[w, c] : terms_)
    p.add_term(w, c.slice(exponent));
  return p;
}

NCPoly NCPoly::rescaled_z(const Scalar &c) const {
  NCPoly p(order_);
  for (const auto &[w, s] : terms_)
    p.add_term(w, s.rescaled(c));
  return p;
}

NCPoly NCPoly::operator-() const {
  NCPoly p(*this);
  for (auto &[w, c] : p.terms_)
    c = -c;
  return p;
}

NCPoly &NCPoly::operator+=(const NCPoly &o) {
  if (o.order_ != order_)
    throw OrderMismatch("adding polynomials of different orders");
  for (const auto &[w, c] : o.terms_)
    accumulate(terms_, w, c);
  return *this;
}

NCPoly &NCPoly::operator-=(const NCPoly &o) { return *this += -o; }

NCPoly &NCPoly::operator*=(const Scalar &c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto &[w, s] : terms_)
    s *= c;
  return *this;
}

NCPoly &NCPoly::operator*=(const ZSeries &c) {
  Terms out;
  for (const auto &[w, s] : terms_)
    accumulate(out, w, s * c);
  terms_ = std::move(out);
  return *this;
}

std::string NCPoly::str(const GeneratorNames &names) const {
  if (terms_.empty())
    return "0";
  std::string out;
  bool first = true;
  for (const auto &[w, c] : terms_) {
    bool needs_star = true;
    out += render_coefficient(c, first, needs_star);
    if (w.empty()) {
      if (!needs_star)
        out += "1";
    } else {
      if (needs_star)
        out += "*";
      out += w.str(names);
    }
    first = false;
  }
  return out;
}

NCPoly poly_mul(const NCPoly &a, const NCPoly &b) {
  if (a.order() != b.order())
    throw OrderMismatch("multiplying polynomials of different orders");
  NCPoly p(a.order());
  for (const auto &[wa, ca] : a.terms()) {
    for (const auto &[wb, cb] : b.terms()) {
      if (ca.min_exponent() + cb.min_exponent() > a.order())
        continue;
      p.add_term(wa + wb, ca * cb);
    }
  }
  return p;
}

// ------------------------------------------------------------ TensorPoly

TensorPoly::TensorPoly(int rank, int order) : rank_(rank), order_(order) {
  if (rank != 2 && rank != 3)
    throw RankMismatch("tensor rank must be 2 or 3, got " + std::to_string(rank));
}

TensorPoly TensorPoly::unit(int rank, int order) {
  TensorPoly t(rank, order);
  t.add_term(TensorKey{}, ZSeries::constant(Scalar(1), order));
  return t;
}

TensorPoly TensorPoly::outer(const NCPoly &a, const NCPoly &b) {
  if (a.order() != b.order())
    throw OrderMismatch("outer product of different orders");
  TensorPoly t(2, a.order());
  for (const auto &[wa, ca] : a.terms())
    for (const auto &[wb, cb] : b.terms())
      t.add_term(TensorKey{wa, wb, Word{}}, ca * cb);
  return t;
}

TensorPoly TensorPoly::outer(const NCPoly &a, const NCPoly &b, const NCPoly &c) {
  TensorPoly ab = outer(a, b);
  TensorPoly t(3, a.order());
  for (const auto &[k, s] : ab.terms())
    for (const auto &[wc, cc] : c.terms())
      t.add_term(TensorKey{k[0], k[1], wc}, s * cc);
  return t;
}

void TensorPoly::add_term(const TensorKey &k, const ZSeries &c) {
  if (c.order() != order_)
    throw OrderMismatch("tensor term order mismatch");
  if (c.is_zero())
    return;
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero())
    terms_.erase(it);
}

bool TensorPoly::is_normal() const {
  for (const auto &[k, c] : terms_)
    for (const auto &w : k)
      if (!w.is_normal())
        return false;
  return true;
}

TensorPoly TensorPoly::truncated(int order) const {
  TensorPoly t(rank_, order);
  for (const auto &[k, c] : terms_)
    t.add_term(k, c.truncated(order));
  return t;
}

TensorPoly TensorPoly::slice(int exponent) const {
  TensorPoly t(rank_, order_);
  for (const auto &[k, c] : terms_)
    t.add_term(k, c.slice(exponent));
  return t;
}

TensorPoly TensorPoly::embed(int leg_a, int leg_b) const {
  if (rank_ != 2)
    throw RankMismatch("embed expects a rank-2 tensor");
  TensorPoly t(3, order_);
  for (const auto &[k, c] : terms_) {
    TensorKey out{};
    out[static_cast<std::size_t>(leg_a)] = k[0];
    out[static_cast<std::size_t>(leg_b)] = k[1];
    t.add_term(out, c);
  }
  return t;
}

TensorPoly TensorPoly::operator-() const {
  TensorPoly t(*this);
  for (auto &[k, c] : t.terms_)
    c = -c;
  return t;
}

TensorPoly &TensorPoly::operator+=(const TensorPoly &o) {
  if (o.rank_ != rank_)
    throw RankMismatch("adding tensors of rank " + std::to_string(rank_) + " and " + std::to_string(o.rank_));
  for (const auto &[k, c] : o.terms_)
    add_term(k, c);
  return *this;
}

TensorPoly &TensorPoly::operator-=(const TensorPoly &o) { return *this += -o; }

TensorPoly &TensorPoly::operator*=(const Scalar &c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto &[k, s] : terms_)
    s *= c;
  return *this;
}

std::string TensorPoly::str(const GeneratorNames &names) const {
  if (terms_.empty())
    return "0";
  std::string out;
  bool first = true;
  for (const auto &[k, c] : terms_) {
    bool needs_star = true;
    out += render_coefficient(c, first, needs_star);
    for (int i = 0; i < rank_; ++i) {
      const Word &w = k[static_cast<std::size_t>(i)];
      if (i)
        out += " (x) ";
      if (i == 0 && needs_star)
        out += w.empty() ? "" : "*";
      if (i > 0 || !needs_star || !w.empty())
        out += w.str(names);
    }
    first = false;
  }
  return out;
}

TensorPoly tensor_mul(const TensorPoly &a, const TensorPoly &b) {
  if (a.rank() != b.rank())
    throw RankMismatch("tensor_mul of rank " + std::to_string(a.rank()) + " and " + std::to_string(b.rank()));
  if (a.order() != b.order())
    throw OrderMismatch("tensor_mul of different orders");
  TensorPoly t(a.rank(), a.order());
  for (const auto &[ka, ca] : a.terms()) {
    for (const auto &[kb, cb] : b.terms()) {
      if (ca.min_exponent() + cb.min_exponent() > a.order())
        continue;
      t.add_term(TensorKey{ka[0] + kb[0], ka[1] + kb[1], ka[2] + kb[2]}, ca * cb);
    }
  }
  return t;
}

TensorPoly flip(const TensorPoly &a) {
  if (a.rank() != 2)
    throw RankMismatch("flip is defined on rank-2 tensors");
  TensorPoly t(2, a.order());
  for (const auto &[k, c] : a.terms())
    t.add_term(TensorKey{k[1], k[0], Word{}}, c);
  return t;
}

// --------------------------------------------------------- RelationTable

RelationTable::RelationTable(std::size_t generator_count, int order)
    : count_(generator_count), order_(order), entries_(generator_count * generator_count) {}

void RelationTable::set(GeneratorId a, GeneratorId b, NCPoly value) {
  if (a == b)
    throw ValidationError("commutator of a generator with itself cannot be set");
  if (value.order() != order_)
    value = value.truncated(order_);
  if (a > b)
    entries_[slot(a, b)] = std::move(value);
  else
    entries_[slot(b, a)] = -value;
}

bool RelationTable::has(GeneratorId a, GeneratorId b) const {
  if (a == b)
    return true;
  return a > b ? entries_[slot(a, b)].has_value() : entries_[slot(b, a)].has_value();
}

void RelationTable::erase(GeneratorId a, GeneratorId b) {
  if (a == b)
    return;
  entries_[a > b ? slot(a, b) : slot(b, a)].reset();
}

const NCPoly &RelationTable::entry(GeneratorId y, GeneratorId x) const {
  const auto &e = entries_.at(slot(y, x));
  if (!e)
    throw IncompleteTable("missing commutator entry for generator pair (" + std::to_string(index_of(y)) + "," +
                          std::to_string(index_of(x)) + ")");
  return *e;
}

NCPoly RelationTable::commutator(GeneratorId a, GeneratorId b) const {
  if (a == b)
    return NCPoly(order_);
  return a > b ? entry(a, b) : -entry(b, a);
}

std::vector<std::pair<GeneratorId, GeneratorId>> RelationTable::missing() const {
  std::vector<std::pair<GeneratorId, GeneratorId>> out;
  for (std::size_t y = 0; y < count_; ++y)
    for (std::size_t x = 0; x < y; ++x)
      if (!entries_[y * count_ + x])
        out.emplace_back(gen(y), gen(x));
  return out;
}

// ------------------------------------------------------------ Normalizer

Normalizer::Normalizer(const RelationTable &table, int order, RewriteStrategy strategy, std::uint64_t step_budget)
    : table_(&table), order_(order), strategy_(strategy), budget_(step_budget) {}

const std::vector<std::pair<Word, ZSeries>> &Normalizer::word_normal_form(const Word &w, int budget) {
  Key key{w, budget};
  if (auto it = memo_.find(key); it != memo_.end())
    return it->second;

  std::map<Word, ZSeries> acc;
  const auto &l = w.letters;
  std::ptrdiff_t pos = -1;
  if (l.size() >= 2) {
    if (strategy_ == RewriteStrategy::LeftmostInnermost) {
      for (std::size_t i = 0; i + 1 < l.size(); ++i)
        if (l[i] > l[i + 1]) {
          pos = static_cast<std::ptrdiff_t>(i);
          break;
        }
    } else {
      for (std::size_t i = l.size() - 1; i-- > 0;)
        if (l[i] > l[i + 1]) {
          pos = static_cast<std::ptrdiff_t>(i);
          break;
        }
    }
  }

  if (pos < 0) {
    acc.emplace(w, ZSeries::constant(Scalar(1), budget));
  } else {
    if (++steps_ > budget_)
      throw NonTermination("rewrite step budget of " + std::to_string(budget_) +
                           " exhausted; relation table is inconsistent");
    const auto i = static_cast<std::size_t>(pos);
    // Y X -> X Y + [Y,X]
    Word swapped = w;
    std::swap(swapped.letters[i], swapped.letters[i + 1]);
    for (const auto &[nw, nc] : word_normal_form(swapped, budget))
      accumulate(acc, nw, nc);

    const NCPoly &bracket = table_->entry(l[i], l[i + 1]);
    if (!bracket.is_zero()) {
      Word prefix(std::vector<GeneratorId>(l.begin(), l.begin() + pos));
      Word suffix(std::vector<GeneratorId>(l.begin() + pos + 2, l.end()));
      for (const auto &[bw, bc] : bracket.terms()) {
        const int lo = bc.min_exponent();
        if (lo < 0)
          throw ValidationError("relation entries must be power series in z");
        if (lo > budget)
          continue;
        const ZSeries coeff = bc.truncated(budget);
        // std::map nodes are stable, so references survive the recursive inserts
        const auto &sub = word_normal_form(prefix + bw + suffix, budget - lo);
        for (const auto &[nw, nc] : sub)
          accumulate(acc, nw, ZSeries::product(coeff, nc, budget));
      }
    }
  }

  std::vector<std::pair<Word, ZSeries>> result(acc.begin(), acc.end());
  return memo_.emplace(std::move(key), std::move(result)).first->second;
}

NCPoly Normalizer::normalize(const NCPoly &a) {
  NCPoly out(a.order());
  for (const auto &[w, c] : a.terms()) {
    const int budget = a.order() - c.min_exponent();
    for (const auto &[nw, nc] : word_normal_form(w, budget))
      out.add_term(nw, ZSeries::product(c, nc, a.order()));
  }
  return out;
}

TensorPoly Normalizer::normalize(const TensorPoly &a) {
  TensorPoly out(a.rank(), a.order());
  const int order = a.order();
  for (const auto &[k, c] : a.terms()) {
    const int budget = order - c.min_exponent();
    auto nf0 = word_normal_form(k[0], budget);
    auto nf1 = word_normal_form(k[1], budget);
    std::vector<std::pair<Word, ZSeries>> nf2{{Word{}, ZSeries::constant(Scalar(1), budget)}};
    if (a.rank() == 3)
      nf2 = word_normal_form(k[2], budget);
    for (const auto &[w0, c0] : nf0) {
      const ZSeries p0 = ZSeries::product(c, c0, order);
      if (p0.is_zero())
        continue;
      for (const auto &[w1, c1] : nf1) {
        if (p0.min_exponent() + c1.min_exponent() > order)
          continue;
        const ZSeries p1 = ZSeries::product(p0, c1, order);
        if (p1.is_zero())
          continue;
        for (const auto &[w2, c2] : nf2) {
          if (p1.min_exponent() + c2.min_exponent() > order)
            continue;
          out.add_term(TensorKey{w0, w1, w2}, ZSeries::product(p1, c2, order));
        }
      }
    }
  }
  return out;
}

NCPoly normalize(const NCPoly &a, const RelationTable &rel) {
  Normalizer n(rel, a.order());
  return n.normalize(a);
}

} // namespace qalg
