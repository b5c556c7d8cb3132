// Acceptance run: one PASS/FAIL line per criterion.
//
//   acceptance [--known-failure K]...
//
// Exit status is 0 iff every failing criterion is listed as a known failure and
// every listed criterion does fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "qalg/qconf.hpp"

using namespace qalg;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool passed = true;
  std::string detail;

  void require(bool ok, const std::string &what) {
    if (!ok) {
      passed = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

const AlgebraBundle &bundle(const std::string &name, int order) {
  static std::map<std::pair<std::string, int>, AlgebraBundle> cache;
  auto key = std::make_pair(name, order);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, load_bundle(name, order)).first;
  return it->second;
}

std::string first_failed(const CheckReport &r) {
  for (const auto &c : r.checks)
    if (!c.passed)
      return c.id + (c.witness.empty() ? "" : " " + c.witness);
  return {};
}

LieAlgebra renamed(LieAlgebra g, const std::string &name) {
  g.set_name(name);
  return g;
}

const std::vector<std::string> kQuantum{"M3", "G3", "C3"};

Outcome criterion1() {
  Outcome o;
  const auto t0 = Clock::now();
  for (const auto &n : kQuantum) {
    const CheckReport r = jacobi_check(bundle(n, 4).algebra);
    o.require(r.passed(), n + " jacobi: " + first_failed(r));
  }
  LieAlgebra m = bundle("M3", 4).algebra;
  const std::size_t k1 = m.index("K1"), k2 = m.index("K2");
  LieElement flipped = m.bracket(k1, k2);
  for (auto &[i, c] : flipped)
    c = -c;
  m.set_bracket(k1, k2, flipped);
  const CheckReport mutated = jacobi_check(m);
  o.require(mutated.failures() >= 1, "sign-flipped [K1,K2] still satisfies Jacobi");
  o.require(seconds_since(t0) < 1.0, "runtime over 1 s");
  return o;
}

Outcome criterion2() {
  Outcome o;
  for (const auto &n : {"sl2", "so22", "M3", "G3", "C3", "M3alt"}) {
    const auto t0 = Clock::now();
    const auto &b = bundle(n, 4);
    const CheckReport r = cybe_check(b.algebra, *b.rmatrix);
    o.require(r.passed(), std::string(n) + " cybe: " + first_failed(r));
    o.require(seconds_since(t0) < 1.0, std::string(n) + " cybe over 1 s");
  }
  const auto &alt = bundle("M3alt", 4);
  for (const auto &map : {"speed-space", "speed-time"}) {
    const ContractionMap &m = alt.contraction(map);
    const ContractedBialgebra c = contract_bialgebra(alt.algebra, *alt.rmatrix, m.with_n(find_min_n0(alt.algebra, *alt.rmatrix, m)));
    o.require(!c.r.is_zero() && cybe_check(c.algebra, c.r).passed(), std::string("contracted alternate ") + map);
  }
  const auto &m3 = bundle("M3", 4);
  RMatrix without = *m3.rmatrix;
  const std::size_t j = m3.algebra.index("J"), p2 = m3.algebra.index("P2");
  std::erase_if(without.terms, [&](const RMatrix::Term &t) { return t.i == std::min(j, p2) && t.j == std::max(j, p2); });
  o.require(without.terms.size() + 1 == m3.rmatrix->terms.size(), "J/\\P2 term not found");
  o.require(!cybe_check(m3.algebra, without).passed(), "CYBE holds without J/\\P2");
  return o;
}

Outcome criterion3() {
  Outcome o;
  for (const auto &n : kQuantum) {
    const auto &b = bundle(n, 4);
    const Cocommutator d = cocommutator_from_r(b.algebra, *b.rmatrix);
    o.require(d == *b.cocommutator, n + " cocommutator differs from the shipped table");
    o.require(d.images[b.algebra.index("D")] == b.rmatrix->to_bivector(), n + " delta(D) != r");
  }
  return o;
}

Outcome criterion4() {
  Outcome o;
  struct Case {
    std::string algebra, map;
    long n0;
  };
  for (const Case &c : {Case{"M3", "speed-space", 2}, Case{"M3", "speed-time", 1}, Case{"M3alt", "speed-space", 2},
                        Case{"M3alt", "speed-time", 2}}) {
    const auto &b = bundle(c.algebra, 4);
    const ContractionMap &m = b.contraction(c.map);
    const Scalar n0 = find_min_n0(b.algebra, *b.rmatrix, m);
    o.require(n0 == Scalar(c.n0), c.algebra + " " + c.map + " n0 = " + n0.str());
    const ContractedBialgebra above = contract_bialgebra(b.algebra, *b.rmatrix, m.with_n(n0 + Scalar(1)));
    o.require(above.r.is_zero() && above.delta.is_zero(), c.algebra + " " + c.map + " nonzero at n0+1");
  }
  return o;
}

Outcome criterion5() {
  Outcome o;
  const auto t0 = Clock::now();
  for (const auto &n : kQuantum) {
    const CheckReport r = hopf_suite(*bundle(n, 4).hopf);
    std::size_t coassoc = 0, hom = 0;
    for (const auto &c : r.checks) {
      coassoc += c.id.rfind("coassoc[", 0) == 0;
      hom += c.id.rfind("hom[", 0) == 0;
    }
    o.require(coassoc == 10 && hom == 45, n + " check counts");
    o.require(r.passed(), n + " hopf: " + first_failed(r));
  }
  o.require(seconds_since(t0) < 300.0, "runtime over 5 min");
  return o;
}

Outcome criterion6() {
  Outcome o;
  for (const auto &n : kQuantum) {
    const auto &b = bundle(n, 4);
    o.require(first_order_delta(*b.hopf) == *b.cocommutator, n + " first-order delta differs");
  }
  return o;
}

Outcome criterion7() {
  Outcome o;
  const auto &m3 = bundle("M3", 4);
  for (const auto &[map, target] : {std::pair{"speed-space", "G3"}, std::pair{"speed-time", "C3"}}) {
    const DeformedHopfData c = quantum_contract(*m3.hopf, m3.contraction(map));
    const DeformedHopfData &t = *bundle(target, 4).hopf;
    o.require(c.relations == t.relations, std::string(map) + " relations differ from " + target);
    o.require(c.coproducts == t.coproducts, std::string(map) + " coproducts differ from " + target);
    o.require(c.counit == t.counit, std::string(map) + " counit differs from " + target);
  }
  return o;
}

Outcome criterion8() {
  Outcome o;
  for (const auto &n : {"G3", "C3"}) {
    const auto &b = bundle(n, 4);
    HopfContext ctx(*b.hopf);
    const RMatrixPair r = build_rmatrix(ctx);
    TensorPoly one = TensorPoly::unit(2, b.hopf->order);
    o.require(ctx.normalize(tensor_mul(r.r, r.inverse)) == one, std::string(n) + " R R^-1 != 1");
    const CheckReport q = check_qybe(ctx, r.r);
    o.require(q.passed(), std::string(n) + " qybe: " + first_failed(q));
    const CheckReport in = check_intertwining(ctx, r);
    o.require(in.passed() && in.checks.size() == 10, std::string(n) + " intertwining: " + first_failed(in));
    const CheckReport cl = check_rmatrix_classical_limit(*b.hopf, r.r, *b.rmatrix);
    o.require(cl.passed(), std::string(n) + " classical limit: " + first_failed(cl));
  }
  return o;
}

Outcome criterion9() {
  Outcome o;
  for (const auto &n : kQuantum) {
    const auto &b = bundle(n, 4);
    o.require(renamed(classical_limit(*b.hopf), n) == renamed(b.algebra, n), n + " classical limit differs");
  }
  return o;
}

Outcome criterion10() {
  Outcome o;
  for (const auto &n : kQuantum) {
    const auto &h = *bundle(n, 4).hopf;
    std::vector<GeneratorId> weyl;
    for (const auto *g : {"J", "P0", "P1", "P2", "K1", "K2", "D"})
      weyl.push_back(*h.find(g));
    const CheckReport r = subalgebra_closure_check(h, weyl);
    o.require(r.passed(), n + " Weyl closure: " + first_failed(r));
  }
  const auto &m3 = *bundle("M3", 4).hopf;
  std::vector<GeneratorId> poincare;
  for (const auto *g : {"J", "P0", "P1", "P2", "K1", "K2"})
    poincare.push_back(*m3.find(g));
  const CheckReport r = subalgebra_closure_check(m3, poincare);
  bool k1_witness = false;
  for (const auto &c : r.checks)
    k1_witness = k1_witness || (!c.passed && c.id == "coproduct[K1]" && c.witness.find("Delta(K1)") != std::string::npos);
  o.require(!r.passed() && k1_witness, "Poincare subset of M3 not rejected with a Delta(K1) witness");
  return o;
}

RelabelMap null_plane_map() {
  // Old generator order: P0 P1 P2 K1 K2 J D C0 C1 C2.
  return RelabelMap{{"Pplus", "E1", "E2", "Q1", "Q2", "J3", "K3", "Pminus", "F1", "F2"},
                    {Scalar(1), Scalar(-1), Scalar(-1), Scalar(1), Scalar(1), Scalar(-1), Scalar(1), Scalar(-1),
                     Scalar(1), Scalar(1)},
                    Scalar(2)};
}

Outcome criterion11() {
  Outcome o;
  const DeformedHopfData primed = relabel(*bundle("C3", 4).hopf, null_plane_map());
  const CheckReport r = hopf_suite(primed);
  o.require(r.passed(), "relabeled C3: " + first_failed(r));
  return o;
}

NCPoly random_element(std::mt19937_64 &rng, std::size_t n, int order) {
  NCPoly p(order);
  std::uniform_int_distribution<int> terms(1, 4), len(0, 4), coef(-3, 3), zexp(0, 2);
  std::uniform_int_distribution<std::size_t> letter(0, n - 1);
  for (int t = terms(rng); t > 0; --t) {
    Word w;
    for (int l = len(rng); l > 0; --l)
      w.letters.push_back(gen(letter(rng)));
    const int c = coef(rng);
    if (c != 0)
      p.add_term(w, ZSeries::monomial(Scalar(c), zexp(rng), order));
  }
  return p;
}

Outcome criterion12() {
  Outcome o;
  for (const auto &n : kQuantum) {
    const auto &h = *bundle(n, 4).hopf;
    const CheckReport d = diamond_check(h, 200);
    for (const auto &c : d.checks)
      if (c.id.rfind("diamond-random", 0) == 0)
        o.require(c.passed, n + " " + c.id + ": " + c.witness);
    Normalizer norm(h.relations, h.order);
    std::mt19937_64 rng(0xC0FFEE);
    bool idempotent = true;
    for (int i = 0; i < 500 && idempotent; ++i) {
      const NCPoly once = norm.normalize(random_element(rng, h.dimension(), h.order));
      idempotent = once.is_normal() && norm.normalize(once) == once;
    }
    o.require(idempotent, n + " normalize not idempotent");
  }
  return o;
}

} // namespace

int main(int argc, char **argv) {
  std::set<std::size_t> known;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--known-failure" && i + 1 < argc) {
      known.insert(static_cast<std::size_t>(std::stoul(argv[++i])));
    } else {
      std::fprintf(stderr, "usage: acceptance [--known-failure K]...\n");
      return 2;
    }
  }
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"jacobi suites and mutation", criterion1},
      {"classical Yang-Baxter", criterion2},
      {"cocommutators from r", criterion3},
      {"minimal contraction exponents", criterion4},
      {"Hopf suite at N=4", criterion5},
      {"first-order coproduct gives the cocommutator", criterion6},
      {"quantum contractions reproduce G3 and C3", criterion7},
      {"universal R-matrix suite at N=4", criterion8},
      {"classical limits", criterion9},
      {"Weyl and Poincare closure", criterion10},
      {"null-plane relabeling", criterion11},
      {"rewriting robustness", criterion12},
  };
  int unexpected = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception &e) {
      o.passed = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const bool listed = known.count(i + 1) > 0;
    const char *note = o.passed ? (listed ? "  [listed as known failure but passed]" : "")
                                : (listed ? "  [known failure]" : "");
    unexpected += (o.passed == listed) ? 1 : 0;
    std::printf("criterion %2zu %s  %s (%.2fs)%s%s%s\n", i + 1, o.passed ? "PASS" : "FAIL", criteria[i].first.c_str(),
                seconds_since(t0), o.passed ? "" : "  ", o.detail.c_str(), note);
    std::fflush(stdout);
  }
  return unexpected == 0 ? 0 : 1;
}
