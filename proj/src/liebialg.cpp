#include "qalg/liebialg.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

namespace qalg {

namespace {

void add_to(LieElement &e, std::size_t k, const Scalar &c) {
  if (c.is_zero())
    return;
  auto [it, inserted] = e.emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero())
      e.erase(it);
  }
}

template <class Map, class Key>
void add_entry(Map &m, const Key &k, const Scalar &c) {
  if (c.is_zero())
    return;
  auto [it, inserted] = m.emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero())
      m.erase(it);
  }
}

std::string term_str(const Scalar &c, const std::string &body, bool first) {
  std::string s;
  const bool neg = c.sign() < 0;
  s += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
  const Scalar mag = neg ? -c : c;
  if (!mag.is_one())
    s += mag.str() + "*";
  return s + body;
}

std::string trivector_str(const Trivector &t, const GeneratorNames &names) {
  if (t.empty())
    return "0";
  std::string s;
  bool first = true;
  for (const auto &[k, c] : t) {
    s += term_str(c, names[k[0]] + " (x) " + names[k[1]] + " (x) " + names[k[2]], first);
    first = false;
  }
  return s;
}

/// [T, 1 (x) Y + Y (x) 1] with T = sum t A (x) B.
Bivector bracket_right(const LieAlgebra &g, const Bivector &t, std::size_t y) {
  Bivector out;
  for (const auto &[ab, c] : t) {
    for (const auto &[k, v] : g.bracket(ab.first, y))
      add_entry(out, std::pair{k, ab.second}, c * v);
    for (const auto &[k, v] : g.bracket(ab.second, y))
      add_entry(out, std::pair{ab.first, k}, c * v);
  }
  return out;
}

/// [1 (x) X + X (x) 1, T].
Bivector bracket_left(const LieAlgebra &g, std::size_t x, const Bivector &t) {
  Bivector out;
  for (const auto &[ab, c] : t) {
    for (const auto &[k, v] : g.bracket(x, ab.first))
      add_entry(out, std::pair{k, ab.second}, c * v);
    for (const auto &[k, v] : g.bracket(x, ab.second))
      add_entry(out, std::pair{ab.first, k}, c * v);
  }
  return out;
}

Bivector subtract(Bivector a, const Bivector &b) {
  for (const auto &[k, c] : b)
    add_entry(a, k, -c);
  return a;
}

std::int64_t elapsed_us(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - t0).count();
}

} // namespace

// ------------------------------------------------------------ LieAlgebra

LieAlgebra::LieAlgebra(std::string name, GeneratorNames generators)
    : name_(std::move(name)), generators_(std::move(generators)) {}

std::optional<std::size_t> LieAlgebra::find(const std::string &generator) const {
  auto it = std::find(generators_.begin(), generators_.end(), generator);
  if (it == generators_.end())
    return std::nullopt;
  return static_cast<std::size_t>(it - generators_.begin());
}

std::size_t LieAlgebra::index(const std::string &generator) const {
  if (auto i = find(generator))
    return *i;
  throw ValidationError("unknown generator '" + generator + "' in " + name_);
}

void LieAlgebra::set_bracket(std::size_t i, std::size_t j, const LieElement &value) {
  if (i == j)
    throw ValidationError("bracket of a generator with itself is zero by antisymmetry");
  LieElement v;
  for (const auto &[k, c] : value)
    add_to(v, k, i < j ? c : -c);
  const auto key = std::minmax(i, j);
  if (v.empty())
    constants_.erase({key.first, key.second});
  else
    constants_[{key.first, key.second}] = std::move(v);
}

LieElement LieAlgebra::bracket(std::size_t i, std::size_t j) const {
  if (i == j)
    return {};
  auto it = constants_.find({std::min(i, j), std::max(i, j)});
  if (it == constants_.end())
    return {};
  if (i < j)
    return it->second;
  LieElement neg;
  for (const auto &[k, c] : it->second)
    neg.emplace(k, -c);
  return neg;
}

LieElement LieAlgebra::bracket(const LieElement &a, const LieElement &b) const {
  LieElement out;
  for (const auto &[i, ci] : a)
    for (const auto &[j, cj] : b)
      for (const auto &[k, ck] : bracket(i, j))
        add_to(out, k, ci * cj * ck);
  return out;
}

std::string LieAlgebra::str(const LieElement &e) const {
  if (e.empty())
    return "0";
  std::string s;
  bool first = true;
  for (const auto &[k, c] : e) {
    s += term_str(c, generators_[k], first);
    first = false;
  }
  return s;
}

// ----------------------------------------------------- bialgebra objects

RMatrix RMatrix::from_bivector(const Bivector &b) {
  RMatrix r;
  for (const auto &[ab, c] : b) {
    const auto [a, bb] = ab;
    auto it = b.find({bb, a});
    const Scalar partner = it == b.end() ? Scalar(0) : it->second;
    if (a == bb || partner != -c)
      throw ValidationError("r-matrix is not antisymmetric");
    if (a < bb)
      r.terms.push_back({a, bb, c});
  }
  return r;
}

Bivector RMatrix::to_bivector() const {
  Bivector b;
  for (const auto &t : terms) {
    add_entry(b, std::pair{t.i, t.j}, t.coefficient);
    add_entry(b, std::pair{t.j, t.i}, -t.coefficient);
  }
  return b;
}

bool Cocommutator::is_zero() const {
  return std::all_of(images.begin(), images.end(), [](const Bivector &b) { return b.empty(); });
}

bool Cocommutator::is_antisymmetric() const {
  for (const auto &b : images)
    for (const auto &[ab, c] : b) {
      auto it = b.find({ab.second, ab.first});
      if (it == b.end() || it->second != -c)
        return false;
    }
  return true;
}

std::string bivector_str(const Bivector &b, const GeneratorNames &names) {
  if (b.empty())
    return "0";
  std::string s;
  bool first = true;
  for (const auto &[ab, c] : b) {
    s += term_str(c, names[ab.first] + " (x) " + names[ab.second], first);
    first = false;
  }
  return s;
}

TensorPoly bivector_to_tensor(const Bivector &b, int order) {
  TensorPoly t(2, order);
  for (const auto &[ab, c] : b)
    t.add_term(TensorKey{Word{gen(ab.first)}, Word{gen(ab.second)}, Word{}}, ZSeries::monomial(c, 1, order));
  return t;
}

Bivector tensor_to_bivector(const TensorPoly &t, int z_exponent) {
  Bivector b;
  for (const auto &[k, c] : t.terms()) {
    const Scalar v = c.coefficient(z_exponent);
    if (v.is_zero())
      continue;
    if (k[0].size() != 1 || k[1].size() != 1)
      throw ValidationError("tensor term is not in g (x) g");
    add_entry(b, std::pair{index_of(k[0].letters[0]), index_of(k[1].letters[0])}, v);
  }
  return b;
}

// ---------------------------------------------------------------- checks

CheckReport jacobi_check(const LieAlgebra &g) {
  const auto t0 = std::chrono::steady_clock::now();
  CheckReport report{"jacobi", g.name(), 0, {}, 0};
  const auto &names = g.generators();
  const std::size_t n = g.dimension();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        const LieElement xi{{i, Scalar(1)}}, xj{{j, Scalar(1)}}, xk{{k, Scalar(1)}};
        LieElement sum = g.bracket(g.bracket(xi, xj), xk);
        for (const auto &[p, c] : g.bracket(g.bracket(xj, xk), xi))
          add_to(sum, p, c);
        for (const auto &[p, c] : g.bracket(g.bracket(xk, xi), xj))
          add_to(sum, p, c);
        report.add("jacobi[" + names[i] + "," + names[j] + "," + names[k] + "]", sum.empty(),
                   "Jacobiator = " + g.str(sum));
      }
  report.microseconds = elapsed_us(t0);
  return report;
}

Cocommutator cocommutator_from_r(const LieAlgebra &g, const RMatrix &r) {
  const Bivector rb = r.to_bivector();
  Cocommutator d;
  d.images.reserve(g.dimension());
  for (std::size_t x = 0; x < g.dimension(); ++x)
    d.images.push_back(bracket_left(g, x, rb));
  return d;
}

Trivector schouten_bracket(const LieAlgebra &g, const RMatrix &r) {
  const Bivector rb = r.to_bivector();
  Trivector out;
  for (const auto &[ab, c1] : rb) {
    for (const auto &[cd, c2] : rb) {
      const auto [a, b] = ab;
      const auto [c, d] = cd;
      const Scalar w = c1 * c2;
      // [r12, r13] = [Xa,Xc] (x) Xb (x) Xd
      for (const auto &[k, v] : g.bracket(a, c))
        add_entry(out, std::array{k, b, d}, w * v);
      // [r12, r23] = Xa (x) [Xb,Xc] (x) Xd
      for (const auto &[k, v] : g.bracket(b, c))
        add_entry(out, std::array{a, k, d}, w * v);
      // [r13, r23] = Xa (x) Xc (x) [Xb,Xd]
      for (const auto &[k, v] : g.bracket(b, d))
        add_entry(out, std::array{a, c, k}, w * v);
    }
  }
  return out;
}

CheckReport cybe_check(const LieAlgebra &g, const RMatrix &r) {
  const auto t0 = std::chrono::steady_clock::now();
  CheckReport report{"cybe", g.name(), 0, {}, 0};
  const Trivector s = schouten_bracket(g, r);
  report.add("cybe", s.empty(), "[[r,r]] = z^2*(" + trivector_str(s, g.generators()) + ")", elapsed_us(t0));
  report.microseconds = elapsed_us(t0);
  return report;
}

CheckReport cocycle_and_cojacobi_check(const LieAlgebra &g, const Cocommutator &d) {
  const auto t0 = std::chrono::steady_clock::now();
  CheckReport report{"cocycle", g.name(), 0, {}, 0};
  const auto &names = g.generators();
  const std::size_t n = g.dimension();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y) {
      Bivector lhs;
      for (const auto &[k, c] : g.bracket(x, y))
        for (const auto &[ab, v] : d.images.at(k))
          add_entry(lhs, ab, c * v);
      Bivector rhs = bracket_right(g, d.images.at(x), y);
      for (const auto &[ab, v] : bracket_left(g, x, d.images.at(y)))
        add_entry(rhs, ab, v);
      const Bivector diff = subtract(lhs, rhs);
      report.add("cocycle[" + names[x] + "," + names[y] + "]", diff.empty(),
                 "delta([X,Y]) - rhs = z*(" + bivector_str(diff, names) + ")");
    }
  for (std::size_t x = 0; x < n; ++x) {
    Trivector t;
    for (const auto &[ab, c] : d.images.at(x))
      for (const auto &[pq, v] : d.images.at(ab.first))
        add_entry(t, std::array{pq.first, pq.second, ab.second}, c * v);
    Trivector cyc;
    for (const auto &[k, v] : t) {
      add_entry(cyc, k, v);
      add_entry(cyc, std::array{k[2], k[0], k[1]}, v);
      add_entry(cyc, std::array{k[1], k[2], k[0]}, v);
    }
    report.add("cojacobi[" + names[x] + "]", cyc.empty(), "cyclic sum = z^2*(" + trivector_str(cyc, names) + ")");
  }
  report.microseconds = elapsed_us(t0);
  return report;
}

// ------------------------------------------------------------ contraction

namespace {

void require_cover(const LieAlgebra &g, const ContractionMap &m) {
  if (m.exponents.size() != g.dimension())
    throw ValidationError("contraction map '" + m.name + "' does not cover all generators of " + g.name());
}

} // namespace

LieAlgebra contract_algebra(const LieAlgebra &g, const ContractionMap &m) {
  require_cover(g, m);
  const auto &a = m.exponents;
  const auto &names = g.generators();
  LieAlgebra out(g.name() + "/" + m.name, names);
  std::vector<Divergence::Term> bad;
  for (const auto &[ij, value] : g.structure_constants()) {
    LieElement kept;
    for (const auto &[k, c] : value) {
      // [X_i', X_j'] = eps^{a_i + a_j - a_k} c X_k'
      const Scalar e = a[ij.first] + a[ij.second] - a[k];
      if (e.sign() < 0)
        bad.push_back({"[" + names[ij.first] + "," + names[ij.second] + "]", c.str() + "*" + names[k], e.str()});
      else if (e.is_zero())
        kept.emplace(k, c);
    }
    if (!kept.empty())
      out.set_bracket(ij.first, ij.second, kept);
  }
  if (!bad.empty())
    throw Divergence(std::move(bad));
  return out;
}

ContractedBialgebra contract_bialgebra(const LieAlgebra &g, const RMatrix &r, const ContractionMap &m) {
  require_cover(g, m);
  if (!m.z_exponent)
    throw ValidationError("contraction map '" + m.name + "' has no z exponent");
  const auto &a = m.exponents;
  const Scalar n = *m.z_exponent;
  const auto &names = g.generators();
  std::vector<Divergence::Term> bad;

  ContractedBialgebra out;
  try {
    out.algebra = contract_algebra(g, m);
  } catch (const Divergence &d) {
    bad = d.terms();
  }

  for (const auto &t : r.terms) {
    const Scalar e = n - a[t.i] - a[t.j];
    if (e.sign() < 0)
      bad.push_back({"r", t.coefficient.str() + "*z*" + names[t.i] + "/\\" + names[t.j], e.str()});
    else if (e.is_zero())
      out.r.terms.push_back(t);
  }

  const Cocommutator delta = cocommutator_from_r(g, r);
  out.delta.images.resize(g.dimension());
  for (std::size_t x = 0; x < g.dimension(); ++x)
    for (const auto &[ab, c] : delta.images[x]) {
      const Scalar e = a[x] + n - a[ab.first] - a[ab.second];
      if (e.sign() < 0)
        bad.push_back({"delta(" + names[x] + ")", c.str() + "*z*" + names[ab.first] + "(x)" + names[ab.second],
                       e.str()});
      else if (e.is_zero())
        out.delta.images[x].emplace(ab, c);
    }

  if (!bad.empty())
    throw Divergence(std::move(bad));
  return out;
}

Scalar find_min_n0(const LieAlgebra &g, const RMatrix &r, const ContractionMap &m) {
  require_cover(g, m);
  const auto &a = m.exponents;
  std::optional<Scalar> n0;
  auto raise = [&](const Scalar &bound) {
    if (!n0 || bound > *n0)
      n0 = bound;
  };
  for (const auto &t : r.terms)
    raise(a[t.i] + a[t.j]);
  const Cocommutator delta = cocommutator_from_r(g, r);
  for (std::size_t x = 0; x < g.dimension(); ++x)
    for (const auto &[ab, c] : delta.images[x])
      raise(a[ab.first] + a[ab.second] - a[x]);
  return n0.value_or(Scalar(0));
}

} // namespace qalg
