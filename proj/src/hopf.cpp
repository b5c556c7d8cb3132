#include "qalg/hopf.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <set>

namespace qalg {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t elapsed_us(Clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - t0).count();
}

Scalar word_weight(const Word &w, const std::vector<Scalar> &a) {
  Scalar s(0);
  for (auto g : w.letters)
    s += a.at(index_of(g));
  return s;
}

Scalar word_factor(const Word &w, const std::vector<Scalar> &f) {
  Scalar s(1);
  for (auto g : w.letters)
    s *= f.at(index_of(g));
  return s;
}

Scalar counit_of_word(const Word &w, const std::vector<Scalar> &eps) {
  Scalar s(1);
  for (auto g : w.letters)
    s *= eps.at(index_of(g));
  return s;
}

/// Renders up to three terms at the lowest z-order of a difference.
template <class Poly>
std::string render_lowest(const Poly &d, const GeneratorNames &names) {
  if (d.is_zero())
    return {};
  int lowest = d.order() + 1;
  for (const auto &[k, c] : d.terms())
    lowest = std::min(lowest, c.min_exponent());
  const Poly at = d.slice(lowest);
  Poly head = at * Scalar(0);
  for (const auto &[k, c] : at.terms()) {
    if (head.size() == 3)
      break;
    head.add_term(k, c);
  }
  std::string s = "first difference at z^" + std::to_string(lowest) + ": " + head.str(names);
  if (at.size() > 3)
    s += " + ... (" + std::to_string(at.size()) + " terms)";
  return s;
}

TensorPoly primitive(GeneratorId x, int order) {
  TensorPoly t(2, order);
  const ZSeries one = ZSeries::constant(Scalar(1), order);
  t.add_term(TensorKey{Word{}, Word{x}, Word{}}, one);
  t.add_term(TensorKey{Word{x}, Word{}, Word{}}, one);
  return t;
}

TensorPoly factor_exponential(const RFactor &f, int order) {
  TensorPoly t(2, order);
  Word a, b;
  for (int k = 0; k <= order; ++k) {
    Scalar c(1);
    for (int i = 0; i < k; ++i)
      c *= f.coefficient;
    c /= factorial(k);
    t.add_term(TensorKey{a, b, Word{}}, ZSeries::monomial(c, k, order));
    a.letters.push_back(f.left);
    b.letters.push_back(f.right);
  }
  return t;
}

void require_complete(const DeformedHopfData &h) {
  if (h.coproducts.size() != h.dimension())
    throw IncompleteTable(h.name + ": expected " + std::to_string(h.dimension()) + " coproducts, got " +
                          std::to_string(h.coproducts.size()));
  if (h.counit.size() != h.dimension())
    throw IncompleteTable(h.name + ": counit table has wrong size");
  if (h.relations.generator_count() != h.dimension())
    throw IncompleteTable(h.name + ": relation table has wrong size");
  const auto missing = h.relations.missing();
  if (!missing.empty()) {
    std::string s = h.name + ": missing commutator";
    for (const auto &[y, x] : missing)
      s += " [" + h.generators[index_of(y)] + "," + h.generators[index_of(x)] + "]";
    throw IncompleteTable(s);
  }
}

} // namespace

std::optional<GeneratorId> DeformedHopfData::find(const std::string &n) const {
  auto it = std::find(generators.begin(), generators.end(), n);
  if (it == generators.end())
    return std::nullopt;
  return gen(static_cast<std::size_t>(it - generators.begin()));
}

std::string first_difference(const TensorPoly &a, const TensorPoly &b, const GeneratorNames &names) {
  return render_lowest(a - b, names);
}

std::string first_difference(const NCPoly &a, const NCPoly &b, const GeneratorNames &names) {
  return render_lowest(a - b, names);
}

// ------------------------------------------------------------ HopfContext

HopfContext::HopfContext(const DeformedHopfData &h) : h_(&h), normalizer_(h.relations, h.order) {
  require_complete(h);
}

const TensorPoly &HopfContext::coproduct_of_word(const Word &w) {
  if (auto it = word_coproducts_.find(w); it != word_coproducts_.end())
    return it->second;
  TensorPoly value(2, order());
  if (w.empty()) {
    value = TensorPoly::unit(2, order());
  } else if (w.size() == 1) {
    value = normalizer_.normalize(h_->coproducts.at(index_of(w.letters[0])));
  } else {
    Word prefix(std::vector<GeneratorId>(w.letters.begin(), w.letters.end() - 1));
    const TensorPoly head = coproduct_of_word(prefix);
    const TensorPoly &last = coproduct_of_word(Word{w.letters.back()});
    value = normalizer_.normalize(tensor_mul(head, last));
  }
  return word_coproducts_.emplace(w, std::move(value)).first->second;
}

TensorPoly HopfContext::coproduct_extend(const NCPoly &a) {
  TensorPoly out(2, order());
  for (const auto &[w, c] : a.terms()) {
    const TensorPoly &dw = coproduct_of_word(w);
    for (const auto &[k, s] : dw.terms()) {
      if (c.min_exponent() + s.min_exponent() > order())
        continue;
      out.add_term(k, ZSeries::product(c, s, order()));
    }
  }
  return out;
}

TensorPoly HopfContext::coproduct_on_slot(const TensorPoly &t, int slot) {
  TensorPoly out(3, order());
  for (const auto &[k, c] : t.terms()) {
    const TensorPoly &dw = coproduct_of_word(k[static_cast<std::size_t>(slot)]);
    for (const auto &[k2, s] : dw.terms()) {
      if (c.min_exponent() + s.min_exponent() > order())
        continue;
      const TensorKey key = slot == 0 ? TensorKey{k2[0], k2[1], k[1]} : TensorKey{k[0], k2[0], k2[1]};
      out.add_term(key, ZSeries::product(c, s, order()));
    }
  }
  return out;
}

TensorPoly HopfContext::commutator(const TensorPoly &a, const TensorPoly &b) {
  return normalizer_.normalize(tensor_mul(a, b) - tensor_mul(b, a));
}

TensorPoly coproduct_extend(const DeformedHopfData &h, const NCPoly &a) {
  HopfContext ctx(h);
  return ctx.coproduct_extend(a);
}

// ------------------------------------------------------------- validation

CheckReport diamond_check(const DeformedHopfData &h, int samples, std::uint64_t seed) {
  const auto t0 = Clock::now();
  CheckReport report{"diamond", h.name, h.order, {}, 0};
  Normalizer left(h.relations, h.order, RewriteStrategy::LeftmostInnermost);
  Normalizer right(h.relations, h.order, RewriteStrategy::RightmostInnermost);
  const ZSeries one = ZSeries::constant(Scalar(1), h.order);

  auto run = [&](const std::string &id, const std::vector<Word> &words) {
    const auto t1 = Clock::now();
    std::string witness;
    std::size_t failures = 0;
    for (const auto &w : words) {
      const NCPoly p = NCPoly::word(w, one);
      NCPoly a = left.normalize(p);
      NCPoly b = right.normalize(p);
      if (a != b) {
        if (failures++ == 0)
          witness = w.str(h.generators) + ": " + first_difference(a, b, h.generators);
      }
    }
    if (failures > 1)
      witness += " (" + std::to_string(failures) + " failing words)";
    report.add(id + "(" + std::to_string(words.size()) + ")", failures == 0, witness, elapsed_us(t1));
  };

  const std::size_t n = h.dimension();
  std::vector<Word> critical;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < a; ++b)
      for (std::size_t c = 0; c < b; ++c)
        critical.push_back(Word{gen(a), gen(b), gen(c)});
  run("diamond-critical", critical);

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::vector<Word> random;
  for (int i = 0; i < samples; ++i)
    random.push_back(Word{gen(pick(rng)), gen(pick(rng)), gen(pick(rng))});
  run("diamond-random", random);

  report.microseconds = elapsed_us(t0);
  return report;
}

std::vector<CheckResult> blocking_failures(const CheckReport &r) {
  std::vector<CheckResult> out;
  for (const auto &c : r.checks)
    if (!c.passed && c.id.rfind("diamond", 0) != 0)
      out.push_back(c);
  return out;
}

CheckReport validate_hopf_data(const DeformedHopfData &h) {
  const auto t0 = Clock::now();
  require_complete(h);
  for (std::size_t y = 0; y < h.dimension(); ++y)
    for (std::size_t x = 0; x < y; ++x) {
      const NCPoly &e = h.relations.entry(gen(y), gen(x));
      if (!e.is_normal())
        throw NonNormalEntry(h.name + ": [" + h.generators[y] + "," + h.generators[x] + "] is not in normal form");
      if (!e.is_zero() && e.min_z_exponent() < 0)
        throw ValidationError(h.name + ": [" + h.generators[y] + "," + h.generators[x] +
                              "] has negative powers of z after expansion");
    }
  for (std::size_t x = 0; x < h.dimension(); ++x)
    if (!h.coproducts[x].is_normal())
      throw NonNormalEntry(h.name + ": Delta(" + h.generators[x] + ") is not in normal form");

  CheckReport report{"validate", h.name, h.order, {}, 0};
  try {
    classical_limit(h);
    report.add("z0-limit-is-lie", true);
  } catch (const NotLie &e) {
    report.add("z0-limit-is-lie", false, e.what());
  }
  for (std::size_t x = 0; x < h.dimension(); ++x) {
    const TensorPoly z0 = h.coproducts[x].slice(0);
    const TensorPoly expected = primitive(gen(x), h.order);
    report.add("primitive-at-z0[" + h.generators[x] + "]", z0 == expected,
               first_difference(z0, expected, h.generators));
  }
  report.append(diamond_check(h));
  report.microseconds = elapsed_us(t0);
  return report;
}

// ------------------------------------------------------------ Hopf axioms

CheckReport check_coassociativity(HopfContext &ctx) {
  const auto t0 = Clock::now();
  const auto &h = ctx.data();
  CheckReport report{"coassociativity", h.name, h.order, {}, 0};
  for (std::size_t x = 0; x < h.dimension(); ++x) {
    const auto t1 = Clock::now();
    const TensorPoly &d = ctx.coproduct_of_word(Word{gen(x)});
    const TensorPoly lhs = ctx.coproduct_on_slot(d, 1); // (1 (x) Delta) Delta
    const TensorPoly rhs = ctx.coproduct_on_slot(d, 0); // (Delta (x) 1) Delta
    report.add("coassoc[" + h.generators[x] + "]", lhs == rhs, first_difference(lhs, rhs, h.generators),
               elapsed_us(t1));
  }
  report.microseconds = elapsed_us(t0);
  return report;
}

CheckReport check_coassociativity(const DeformedHopfData &h) {
  HopfContext ctx(h);
  return check_coassociativity(ctx);
}

CheckReport check_homomorphism(HopfContext &ctx, const std::vector<std::pair<GeneratorId, GeneratorId>> &pairs) {
  const auto t0 = Clock::now();
  const auto &h = ctx.data();
  CheckReport report{"homomorphism", h.name, h.order, {}, 0};
  for (const auto &[a, b] : pairs) {
    const auto t1 = Clock::now();
    const TensorPoly lhs = ctx.coproduct_extend(h.relations.commutator(a, b));
    const TensorPoly da = ctx.coproduct_of_word(Word{a});
    const TensorPoly db = ctx.coproduct_of_word(Word{b});
    const TensorPoly rhs = ctx.commutator(da, db);
    report.add("hom[" + h.generators[index_of(a)] + "," + h.generators[index_of(b)] + "]", lhs == rhs,
               first_difference(lhs, rhs, h.generators), elapsed_us(t1));
  }
  report.microseconds = elapsed_us(t0);
  return report;
}

CheckReport check_homomorphism(HopfContext &ctx) {
  std::vector<std::pair<GeneratorId, GeneratorId>> pairs;
  const std::size_t n = ctx.data().dimension();
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t x = 0; x < y; ++x)
      pairs.emplace_back(gen(y), gen(x));
  return check_homomorphism(ctx, pairs);
}

CheckReport check_homomorphism(const DeformedHopfData &h) {
  HopfContext ctx(h);
  return check_homomorphism(ctx);
}

CheckReport check_counit(const DeformedHopfData &h) {
  const auto t0 = Clock::now();
  require_complete(h);
  CheckReport report{"counit", h.name, h.order, {}, 0};
  for (std::size_t x = 0; x < h.dimension(); ++x) {
    NCPoly left(h.order), right(h.order);
    for (const auto &[k, c] : h.coproducts[x].terms()) {
      left.add_term(k[1], c * counit_of_word(k[0], h.counit));
      right.add_term(k[0], c * counit_of_word(k[1], h.counit));
    }
    const NCPoly expected = NCPoly::generator(gen(x), h.order);
    report.add("counit-left[" + h.generators[x] + "]", left == expected, first_difference(left, expected, h.generators));
    report.add("counit-right[" + h.generators[x] + "]", right == expected,
               first_difference(right, expected, h.generators));
  }
  report.microseconds = elapsed_us(t0);
  return report;
}

Cocommutator first_order_delta(const DeformedHopfData &h) {
  require_complete(h);
  Cocommutator d;
  for (const auto &cop : h.coproducts) {
    const TensorPoly first = cop.slice(1);
    d.images.push_back(tensor_to_bivector(first - flip(first), 1));
  }
  return d;
}

// --------------------------------------------------------------- antipode

namespace {

class AntipodeSolver {
public:
  AntipodeSolver(HopfContext &ctx, std::vector<NCPoly> images) : ctx_(ctx), images_(std::move(images)) {}

  /// S(w) = S(x_n) ... S(x_1), normalized.
  const NCPoly &of_word(const Word &w) {
    if (auto it = cache_.find(w); it != cache_.end())
      return it->second;
    const int order = ctx_.order();
    NCPoly value = NCPoly::unit(order);
    if (w.size() == 1) {
      value = images_.at(index_of(w.letters[0]));
    } else if (w.size() > 1) {
      Word rest(std::vector<GeneratorId>(w.letters.begin() + 1, w.letters.end()));
      value = ctx_.normalize(poly_mul(of_word(rest), images_.at(index_of(w.letters[0]))));
    }
    return cache_.emplace(w, std::move(value)).first->second;
  }

  /// sum c S(w0) w1 over the terms of t.
  NCPoly left_action(const TensorPoly &t) {
    NCPoly out(ctx_.order());
    for (const auto &[k, c] : t.terms())
      out += poly_mul(of_word(k[0]), NCPoly::word(k[1], c));
    return ctx_.normalize(out);
  }

  /// sum c w0 S(w1).
  NCPoly right_action(const TensorPoly &t) {
    NCPoly out(ctx_.order());
    for (const auto &[k, c] : t.terms())
      out += poly_mul(NCPoly::word(k[0], c), of_word(k[1]));
    return ctx_.normalize(out);
  }

  const std::vector<NCPoly> &images() const { return images_; }

  void set_images(std::vector<NCPoly> images) {
    images_ = std::move(images);
    cache_.clear();
  }

private:
  HopfContext &ctx_;
  std::vector<NCPoly> images_;
  std::map<Word, NCPoly> cache_;
};

} // namespace

Antipode derive_antipode(HopfContext &ctx) {
  const auto &h = ctx.data();
  const int order = h.order;
  const std::size_t n = h.dimension();
  const ZSeries one = ZSeries::constant(Scalar(1), order);

  // Delta(X) minus its z^0 part X (x) 1, which is what carries S(X) itself.
  std::vector<TensorPoly> rest;
  std::vector<NCPoly> images;
  for (std::size_t x = 0; x < n; ++x) {
    const TensorPoly &d = h.coproducts[x];
    if (d.slice(0) != primitive(gen(x), order))
      throw NoSolution(h.name + ": Delta(" + h.generators[x] +
                       ") is not primitive at z = 0; the order-by-order antipode solve has no pivot");
    TensorPoly r = d;
    r.add_term(TensorKey{Word{gen(x)}, Word{}, Word{}}, -one);
    rest.push_back(std::move(r));
    images.push_back(-NCPoly::generator(gen(x), order));
  }

  AntipodeSolver solver(ctx, images);
  auto step = [&] {
    std::vector<NCPoly> next;
    for (std::size_t x = 0; x < n; ++x)
      next.push_back(NCPoly::constant(ZSeries::constant(h.counit[x], order)) - solver.left_action(rest[x]));
    return next;
  };
  // S_k depends only on S_j for j < k, so each pass fixes one more order.
  for (int k = 0; k <= order; ++k)
    solver.set_images(step());
  const auto settled = solver.images();
  if (step() != settled)
    throw NoSolution(h.name + ": antipode iteration did not settle by order " + std::to_string(order));
  return Antipode{settled};
}

Antipode derive_antipode(const DeformedHopfData &h) {
  HopfContext ctx(h);
  return derive_antipode(ctx);
}

CheckReport check_antipode(HopfContext &ctx, const Antipode &s) {
  const auto t0 = Clock::now();
  const auto &h = ctx.data();
  CheckReport report{"antipode", h.name, h.order, {}, 0};
  AntipodeSolver solver(ctx, s.images);
  for (std::size_t x = 0; x < h.dimension(); ++x) {
    const TensorPoly &d = ctx.coproduct_of_word(Word{gen(x)});
    const NCPoly expected = NCPoly::constant(ZSeries::constant(h.counit[x], h.order));
    const NCPoly left = solver.left_action(d);
    const NCPoly right = solver.right_action(d);
    report.add("antipode-left[" + h.generators[x] + "]", left == expected,
               first_difference(left, expected, h.generators));
    report.add("antipode-right[" + h.generators[x] + "]", right == expected,
               first_difference(right, expected, h.generators));
  }
  report.microseconds = elapsed_us(t0);
  return report;
}

// --------------------------------------------------------------- R-matrix

TensorPoly invert_tensor(HopfContext &ctx, const TensorPoly &t) {
  const int order = t.order();
  TensorPoly x = t - TensorPoly::unit(t.rank(), order);
  for (const auto &[k, c] : x.terms())
    if (c.min_exponent() < 1)
      throw NotInvertible("tensor is not of the form 1 (x) 1 + O(z)");
  TensorPoly result = TensorPoly::unit(t.rank(), order);
  TensorPoly power = TensorPoly::unit(t.rank(), order);
  const TensorPoly minus_x = -x;
  for (int k = 1; k <= order; ++k) {
    power = ctx.normalize(tensor_mul(power, minus_x));
    if (power.is_zero())
      break;
    result += power;
  }
  return result;
}

RMatrixPair build_rmatrix(HopfContext &ctx) {
  const auto &h = ctx.data();
  if (!h.rmatrix_factors)
    throw MissingFactors(h.name + " has no R-matrix factorization");
  const int order = h.order;
  TensorPoly r = TensorPoly::unit(2, order);
  TensorPoly inv = TensorPoly::unit(2, order);
  const auto &factors = *h.rmatrix_factors;
  for (const auto &f : factors)
    r = ctx.normalize(tensor_mul(r, factor_exponential(f, order)));
  for (auto it = factors.rbegin(); it != factors.rend(); ++it)
    inv = ctx.normalize(tensor_mul(inv, factor_exponential(RFactor{-it->coefficient, it->left, it->right}, order)));

  const TensorPoly unit = TensorPoly::unit(2, order);
  const TensorPoly rr = ctx.normalize(tensor_mul(r, inv));
  if (rr != unit)
    throw Error(h.name + ": R R^-1 != 1 (x) 1; " + first_difference(rr, unit, h.generators));
  const TensorPoly series_inv = invert_tensor(ctx, r);
  if (series_inv != inv)
    throw Error(h.name + ": structural R^-1 disagrees with series inversion; " +
                first_difference(inv, series_inv, h.generators));
  return {std::move(r), std::move(inv)};
}

RMatrixPair build_rmatrix(const DeformedHopfData &h) {
  HopfContext ctx(h);
  return build_rmatrix(ctx);
}

CheckReport check_qybe(HopfContext &ctx, const TensorPoly &r) {
  const auto t0 = Clock::now();
  const auto &h = ctx.data();
  CheckReport report{"qybe", h.name, h.order, {}, 0};
  const TensorPoly r12 = r.embed(0, 1), r13 = r.embed(0, 2), r23 = r.embed(1, 2);
  const TensorPoly lhs = ctx.normalize(tensor_mul(ctx.normalize(tensor_mul(r12, r13)), r23));
  const TensorPoly rhs = ctx.normalize(tensor_mul(ctx.normalize(tensor_mul(r23, r13)), r12));
  report.add("qybe", lhs == rhs, first_difference(lhs, rhs, h.generators), elapsed_us(t0));
  report.microseconds = elapsed_us(t0);
  return report;
}

CheckReport check_intertwining(HopfContext &ctx, const RMatrixPair &r) {
  const auto t0 = Clock::now();
  const auto &h = ctx.data();
  CheckReport report{"intertwining", h.name, h.order, {}, 0};
  for (std::size_t x = 0; x < h.dimension(); ++x) {
    const auto t1 = Clock::now();
    const TensorPoly d = ctx.coproduct_of_word(Word{gen(x)});
    const TensorPoly lhs = ctx.normalize(tensor_mul(ctx.normalize(tensor_mul(r.r, d)), r.inverse));
    const TensorPoly rhs = flip(d);
    report.add("intertwining[" + h.generators[x] + "]", lhs == rhs, first_difference(lhs, rhs, h.generators),
               elapsed_us(t1));
  }
  report.microseconds = elapsed_us(t0);
  return report;
}

CheckReport check_rmatrix_classical_limit(const DeformedHopfData &h, const TensorPoly &r, const RMatrix &classical) {
  const auto t0 = Clock::now();
  CheckReport report{"rmatrix-limit", h.name, h.order, {}, 0};
  const TensorPoly z0 = r.slice(0);
  const TensorPoly unit = TensorPoly::unit(2, h.order);
  report.add("rmatrix-z0", z0 == unit, first_difference(z0, unit, h.generators));
  const TensorPoly first = r.slice(1);
  const TensorPoly skew = (first - flip(first)) * Scalar(1, 2);
  const TensorPoly expected = bivector_to_tensor(classical.to_bivector(), h.order);
  report.add("rmatrix-z1-skew", skew == expected, first_difference(skew, expected, h.generators));
  report.microseconds = elapsed_us(t0);
  return report;
}

// ------------------------------------------------------------ contraction

DeformedHopfData quantum_contract(const DeformedHopfData &h, const ContractionMap &m) {
  require_complete(h);
  if (m.exponents.size() != h.dimension())
    throw ValidationError("contraction map '" + m.name + "' does not cover all generators of " + h.name);
  if (!m.z_exponent)
    throw ValidationError("contraction map '" + m.name + "' has no z exponent");
  const auto &a = m.exponents;
  const Scalar n = *m.z_exponent;
  const int order = h.order;
  const auto &names = h.generators;
  std::vector<Divergence::Term> bad;

  auto term_label = [&](int k, const Scalar &c, const std::string &body) {
    return c.str() + "*z^" + std::to_string(k) + "*" + body;
  };

  DeformedHopfData out;
  out.name = h.name + "/" + m.name;
  out.generators = names;
  out.order = order;
  out.relations = RelationTable(h.dimension(), order);
  out.counit.resize(h.dimension());

  for (std::size_t y = 0; y < h.dimension(); ++y)
    for (std::size_t x = 0; x < y; ++x) {
      const NCPoly &e = h.relations.entry(gen(y), gen(x));
      NCPoly kept(order);
      for (const auto &[w, s] : e.terms()) {
        ZSeries ks(order);
        for (const auto &[k, c] : s.terms()) {
          const Scalar ex = a[y] + a[x] + n * Scalar(k) - word_weight(w, a);
          if (ex.sign() < 0)
            bad.push_back({"[" + names[y] + "," + names[x] + "]", term_label(k, c, w.str(names)), ex.str()});
          else if (ex.is_zero())
            ks.add_term(k, c);
        }
        kept.add_term(w, ks);
      }
      out.relations.set(gen(y), gen(x), std::move(kept));
    }

  for (std::size_t x = 0; x < h.dimension(); ++x) {
    TensorPoly kept(2, order);
    for (const auto &[key, s] : h.coproducts[x].terms()) {
      ZSeries ks(order);
      for (const auto &[k, c] : s.terms()) {
        const Scalar ex = a[x] + n * Scalar(k) - word_weight(key[0], a) - word_weight(key[1], a);
        if (ex.sign() < 0)
          bad.push_back({"Delta(" + names[x] + ")",
                         term_label(k, c, key[0].str(names) + " (x) " + key[1].str(names)), ex.str()});
        else if (ex.is_zero())
          ks.add_term(k, c);
      }
      kept.add_term(key, ks);
    }
    out.coproducts.push_back(std::move(kept));

    if (!h.counit[x].is_zero()) {
      if (a[x].sign() < 0)
        bad.push_back({"epsilon(" + names[x] + ")", h.counit[x].str(), a[x].str()});
      else if (a[x].is_zero())
        out.counit[x] = h.counit[x];
    }
  }

  if (h.rmatrix_factors) {
    std::vector<RFactor> kept;
    for (const auto &f : *h.rmatrix_factors) {
      const Scalar ex = n - a[index_of(f.left)] - a[index_of(f.right)];
      if (ex.sign() < 0)
        bad.push_back({"R", "exp(" + f.coefficient.str() + "*z*" + names[index_of(f.left)] + " (x) " +
                                names[index_of(f.right)] + ")",
                       ex.str()});
      else if (ex.is_zero())
        kept.push_back(f);
    }
    out.rmatrix_factors = std::move(kept);
  }

  if (!bad.empty())
    throw Divergence(std::move(bad));

  const auto failed = blocking_failures(validate_hopf_data(out));
  if (!failed.empty())
    throw ValidationError(out.name + ": contracted bundle fails validation, " + failed.front().id);
  return out;
}

LieAlgebra classical_limit(const DeformedHopfData &h) {
  LieAlgebra g(h.name, h.generators);
  for (std::size_t y = 0; y < h.dimension(); ++y)
    for (std::size_t x = 0; x < y; ++x) {
      const NCPoly z0 = h.relations.entry(gen(y), gen(x)).slice(0);
      LieElement v;
      for (const auto &[w, c] : z0.terms()) {
        if (w.size() != 1)
          throw NotLie(h.name + ": z^0 part of [" + h.generators[y] + "," + h.generators[x] +
                       "] is not linear in the generators");
        v.emplace(index_of(w.letters[0]), c.coefficient(0));
      }
      if (!v.empty())
        g.set_bracket(y, x, v);
    }
  const CheckReport j = jacobi_check(g);
  if (!j.passed()) {
    std::string s = h.name + ": z^0 brackets violate the Jacobi identity";
    for (const auto &c : j.checks)
      if (!c.passed) {
        s += " (" + c.id + ")";
        break;
      }
    throw NotLie(s);
  }
  return g;
}

CheckReport subalgebra_closure_check(const DeformedHopfData &h, const std::vector<GeneratorId> &subset) {
  const auto t0 = Clock::now();
  require_complete(h);
  CheckReport report{"closure", h.name, h.order, {}, 0};
  std::vector<bool> allowed(h.dimension(), false);
  for (auto g : subset)
    allowed.at(index_of(g)) = true;
  auto outside = [&](const Word &w) {
    return std::any_of(w.letters.begin(), w.letters.end(), [&](GeneratorId g) { return !allowed[index_of(g)]; });
  };
  std::vector<GeneratorId> sorted = subset;
  std::sort(sorted.begin(), sorted.end());
  for (auto x : sorted) {
    std::string witness;
    for (const auto &[k, c] : h.coproducts[index_of(x)].terms())
      if (outside(k[0]) || outside(k[1])) {
        TensorPoly t(2, h.order);
        t.add_term(k, c);
        witness = "Delta(" + h.generators[index_of(x)] + ") contains " + t.str(h.generators);
        break;
      }
    report.add("coproduct[" + h.generators[index_of(x)] + "]", witness.empty(), witness);
  }
  for (std::size_t i = 0; i < sorted.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      const auto y = sorted[i], x = sorted[j];
      const NCPoly &e = h.relations.entry(y, x);
      std::string witness;
      for (const auto &[w, c] : e.terms())
        if (outside(w)) {
          witness = "[" + h.generators[index_of(y)] + "," + h.generators[index_of(x)] + "] contains " +
                    NCPoly::word(w, c).str(h.generators);
          break;
        }
      report.add("bracket[" + h.generators[index_of(y)] + "," + h.generators[index_of(x)] + "]", witness.empty(),
                 witness);
    }
  report.microseconds = elapsed_us(t0);
  return report;
}

// ---------------------------------------------------------------- relabel

DeformedHopfData relabel(const DeformedHopfData &h, const RelabelMap &map, bool revalidate) {
  require_complete(h);
  const std::size_t n = h.dimension();
  if (map.names.size() != n || map.factors.size() != n)
    throw InvalidMap("relabel map must give a name and factor for each of the " + std::to_string(n) + " generators");
  std::set<std::string> seen;
  for (const auto &name : map.names)
    if (name.empty() || !seen.insert(name).second)
      throw InvalidMap("relabel map is not a bijection on generator names ('" + name + "')");
  for (const auto &f : map.factors)
    if (f.is_zero())
      throw InvalidMap("relabel factors must be nonzero");
  if (map.z_factor.is_zero())
    throw InvalidMap("z rescaling must be nonzero");

  const int order = h.order;
  const auto &s = map.factors;
  auto transform_poly = [&](const NCPoly &p, const Scalar &divisor) {
    NCPoly out(order);
    for (const auto &[w, c] : p.terms())
      out.add_term(w, c.rescaled(map.z_factor) * (word_factor(w, s) / divisor));
    return out;
  };

  DeformedHopfData out;
  out.name = h.name + "'";
  out.generators = map.names;
  out.order = order;
  out.relations = RelationTable(n, order);
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t x = 0; x < y; ++x)
      out.relations.set(gen(y), gen(x), transform_poly(h.relations.entry(gen(y), gen(x)), s[y] * s[x]));
  for (std::size_t x = 0; x < n; ++x) {
    TensorPoly t(2, order);
    for (const auto &[k, c] : h.coproducts[x].terms())
      t.add_term(k, c.rescaled(map.z_factor) * (word_factor(k[0], s) * word_factor(k[1], s) / s[x]));
    out.coproducts.push_back(std::move(t));
    out.counit.push_back(h.counit[x] / s[x]);
  }
  if (h.rmatrix_factors) {
    std::vector<RFactor> fs;
    for (const auto &f : *h.rmatrix_factors)
      fs.push_back({f.coefficient * map.z_factor * s[index_of(f.left)] * s[index_of(f.right)], f.left, f.right});
    out.rmatrix_factors = std::move(fs);
  }

  if (revalidate) {
    CheckReport v = validate_hopf_data(out);
    HopfContext ctx(out);
    v.append(check_coassociativity(ctx));
    v.append(check_homomorphism(ctx));
    const auto failed = blocking_failures(v);
    if (!failed.empty())
      throw ValidationError(out.name + ": relabeled bundle fails validation (" + std::to_string(failed.size()) +
                            " failing checks, first " + failed.front().id + ")");
  }
  return out;
}

CheckReport hopf_suite(const DeformedHopfData &h) {
  const auto t0 = Clock::now();
  HopfContext ctx(h);
  CheckReport report{"hopf", h.name, h.order, {}, 0};
  report.append(check_coassociativity(ctx));
  report.append(check_homomorphism(ctx));
  report.append(check_counit(h));
  try {
    const Antipode s = derive_antipode(ctx);
    report.append(check_antipode(ctx, s));
  } catch (const NoSolution &e) {
    report.add("antipode", false, e.what());
  }
  report.microseconds = elapsed_us(t0);
  return report;
}

} // namespace qalg
