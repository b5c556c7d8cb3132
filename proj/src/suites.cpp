#include "qalg/suites.hpp"

#include <atomic>
#include <chrono>
#include <functional>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace qalg {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t elapsed_us(Clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - t0).count();
}

/// Runs f over a report, recording it as a single failed check if it throws.
CheckReport guarded(const std::string &suite, const AlgebraBundle &b, int order,
                    const std::function<void(CheckReport &)> &f) {
  CheckReport r{suite, b.name, order, {}, 0};
  const auto t0 = Clock::now();
  try {
    f(r);
  } catch (const Error &e) {
    r.add(suite + "-error", false, e.what());
  }
  r.microseconds = elapsed_us(t0);
  return r;
}

void append_checks(CheckReport &into, const CheckReport &from) { into.checks.insert(into.checks.end(), from.checks.begin(), from.checks.end()); }

CheckReport classical_suite(const AlgebraBundle &b) {
  return guarded("classical", b, 0, [&](CheckReport &r) {
    append_checks(r, jacobi_check(b.algebra));
    if (!b.rmatrix)
      return;
    append_checks(r, cybe_check(b.algebra, *b.rmatrix));
    const Cocommutator from_r = cocommutator_from_r(b.algebra, *b.rmatrix);
    const auto &names = b.algebra.generators();
    if (b.cocommutator) {
      for (std::size_t x = 0; x < names.size(); ++x) {
        const Bivector &want = b.cocommutator->images[x];
        const Bivector &got = from_r.images[x];
        r.add("delta-from-r[" + names[x] + "]", want == got,
              "from r: z*(" + bivector_str(got, names) + "), table: z*(" + bivector_str(want, names) + ")");
      }
    }
    append_checks(r, cocycle_and_cojacobi_check(b.algebra, b.cocommutator ? *b.cocommutator : from_r));
  });
}

CheckReport hopf_checks(const AlgebraBundle &b) {
  const int order = b.hopf->order;
  return guarded("hopf", b, order, [&](CheckReport &r) {
    const DeformedHopfData &h = *b.hopf;
    append_checks(r, validate_hopf_data(h));
    append_checks(r, hopf_suite(h));
    LieAlgebra limit = classical_limit(h);
    limit.set_name(b.algebra.name());
    r.add("classical-limit", limit == b.algebra, "z = 0 relations differ from the classical brackets");
    if (b.cocommutator) {
      const Cocommutator d = first_order_delta(h);
      const auto &names = h.generators;
      for (std::size_t x = 0; x < names.size(); ++x)
        r.add("first-order-delta[" + names[x] + "]", d.images[x] == b.cocommutator->images[x],
              "Delta_(1) - sigma Delta_(1) = z*(" + bivector_str(d.images[x], names) + ")");
    }
  });
}

CheckReport contraction_suite(const AlgebraBundle &b, const std::vector<AlgebraBundle> &catalog) {
  const int order = b.hopf ? b.hopf->order : 0;
  return guarded("contraction", b, order, [&](CheckReport &r) {
    for (const auto &m : b.contractions) {
      if (b.rmatrix) {
        const Scalar n0 = find_min_n0(b.algebra, *b.rmatrix, m);
        bool finite = true;
        std::string why;
        try {
          const ContractedBialgebra at = contract_bialgebra(b.algebra, *b.rmatrix, m.with_n(n0));
          finite = !at.r.is_zero();
          why = "contracted r-matrix vanishes at n0";
        } catch (const Divergence &e) {
          finite = false;
          why = e.what();
        }
        r.add("n0[" + m.name + "] = " + n0.str(), finite, why);
        const ContractedBialgebra above = contract_bialgebra(b.algebra, *b.rmatrix, m.with_n(n0 + Scalar(1)));
        r.add("vanishes-above-n0[" + m.name + "]", above.r.is_zero() && above.delta.is_zero(),
              "r or delta survives at n0 + 1");
        if (m.z_exponent)
          r.add("declared-n[" + m.name + "]", *m.z_exponent == n0, "declared n = " + m.z_exponent->str());
        const ContractedBialgebra c = contract_bialgebra(b.algebra, *b.rmatrix, m.with_n(n0));
        append_checks(r, [&] {
          CheckReport y = cybe_check(c.algebra, c.r);
          for (auto &k : y.checks)
            k.id = m.name + ":" + k.id;
          return y;
        }());
      }
      if (b.hopf && m.z_exponent) {
        std::string matched;
        std::string why = "no shipped bundle has the same content";
        try {
          const AlgebraBundle q = contract_bundle(b, m.name, ContractionLevel::Quantum);
          for (const auto &other : catalog)
            if (other.name != b.name && same_content(q, other))
              matched = other.name;
        } catch (const Error &e) {
          why = e.what();
        }
        r.add("quantum[" + m.name + "]" + (matched.empty() ? "" : " = " + matched), !matched.empty(), why);
      }
    }
  });
}

CheckReport rmatrix_suite(const AlgebraBundle &b) {
  return guarded("rmatrix", b, b.hopf->order, [&](CheckReport &r) {
    HopfContext ctx(*b.hopf);
    const RMatrixPair rm = build_rmatrix(ctx);
    const TensorPoly unit = TensorPoly::unit(2, b.hopf->order);
    const TensorPoly product = ctx.normalize(tensor_mul(rm.r, rm.inverse));
    r.add("inverse", product == unit, first_difference(product, unit, b.hopf->generators));
    append_checks(r, check_qybe(ctx, rm.r));
    append_checks(r, check_intertwining(ctx, rm));
    if (b.rmatrix)
      append_checks(r, check_rmatrix_classical_limit(*b.hopf, rm.r, *b.rmatrix));
  });
}

} // namespace

Suite parse_suite(const std::string &name) {
  if (name == "classical")
    return Suite::Classical;
  if (name == "hopf")
    return Suite::Hopf;
  if (name == "contraction")
    return Suite::Contraction;
  if (name == "rmatrix")
    return Suite::RMatrix;
  if (name == "all")
    return Suite::All;
  throw ValidationError("unknown suite '" + name + "'");
}

std::string suite_name(Suite s) {
  switch (s) {
  case Suite::Classical: return "classical";
  case Suite::Hopf: return "hopf";
  case Suite::Contraction: return "contraction";
  case Suite::RMatrix: return "rmatrix";
  case Suite::All: return "all";
  }
  return {};
}

std::vector<CheckReport> run_suites(const std::vector<AlgebraBundle> &bundles, Suite suite, int jobs,
                                    const std::vector<AlgebraBundle> &catalog) {
  std::vector<std::function<CheckReport()>> tasks;
  auto want = [&](Suite s) { return suite == Suite::All || suite == s; };
  for (const auto &b : bundles) {
    if (want(Suite::Classical))
      tasks.emplace_back([&b] { return classical_suite(b); });
    if (want(Suite::Hopf) && b.hopf)
      tasks.emplace_back([&b] { return hopf_checks(b); });
    if (want(Suite::Contraction) && !b.contractions.empty())
      tasks.emplace_back([&b, &catalog] { return contraction_suite(b, catalog); });
    if (want(Suite::RMatrix) && b.hopf && b.hopf->rmatrix_factors)
      tasks.emplace_back([&b] { return rmatrix_suite(b); });
  }

  std::vector<CheckReport> out(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++)
      out[i] = tasks[i]();
  };
  const std::size_t width = std::max<std::size_t>(1, std::min<std::size_t>(static_cast<std::size_t>(std::max(jobs, 1)), tasks.size()));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < width; ++t)
    pool.emplace_back(worker);
  worker();
  for (auto &t : pool)
    t.join();
  return out;
}

bool same_content(const AlgebraBundle &a, const AlgebraBundle &b) {
  if (a.algebra.generators() != b.algebra.generators() ||
      a.algebra.structure_constants() != b.algebra.structure_constants())
    return false;
  if (a.rmatrix != b.rmatrix || a.cocommutator != b.cocommutator)
    return false;
  if (a.hopf.has_value() != b.hopf.has_value())
    return false;
  if (!a.hopf)
    return true;
  return a.hopf->order == b.hopf->order && a.hopf->relations == b.hopf->relations &&
         a.hopf->coproducts == b.hopf->coproducts && a.hopf->counit == b.hopf->counit;
}

AlgebraBundle contract_bundle(const AlgebraBundle &b, const std::string &map, ContractionLevel level) {
  const ContractionMap &m = b.contraction(map);
  AlgebraBundle out;
  out.name = b.name + "/" + map;
  out.notes.push_back("contraction of " + b.name + " along " + map);
  if (b.rmatrix) {
    const ContractionMap mn = m.z_exponent ? m : m.with_n(find_min_n0(b.algebra, *b.rmatrix, m));
    ContractedBialgebra c = contract_bialgebra(b.algebra, *b.rmatrix, mn);
    out.algebra = std::move(c.algebra);
    out.rmatrix = std::move(c.r);
    out.cocommutator = std::move(c.delta);
  } else {
    out.algebra = contract_algebra(b.algebra, m);
  }
  out.algebra.set_name(out.name);
  if (level == ContractionLevel::Quantum) {
    if (!b.hopf)
      throw ValidationError(b.name + " has no Hopf data to contract");
    DeformedHopfData h = quantum_contract(*b.hopf, m);
    h.name = out.name;
    out.hopf = std::move(h);
  }
  return out;
}

std::string format_text(const std::vector<CheckReport> &reports) {
  std::ostringstream os;
  std::size_t total = 0, failed = 0;
  for (const auto &r : reports) {
    os << "== " << r.algebra << " " << r.suite;
    if (r.order > 0)
      os << " (order " << r.order << ")";
    os << "\n";
    for (const auto &c : r.checks) {
      os << (c.passed ? "PASS " : "FAIL ") << c.id;
      if (!c.passed && !c.witness.empty())
        os << "\n     " << c.witness;
      os << "\n";
    }
    total += r.checks.size();
    failed += r.failures();
  }
  os << "summary: " << total << " checks, " << failed << " failed\n";
  return os.str();
}

std::string format_records(const std::vector<CheckReport> &reports) {
  std::ostringstream os;
  for (const auto &r : reports)
    for (const auto &c : r.checks) {
      nlohmann::ordered_json j;
      j["suite"] = r.suite;
      j["algebra"] = r.algebra;
      j["check"] = c.id;
      j["status"] = c.passed ? "pass" : "fail";
      if (!c.passed && !c.witness.empty())
        j["witness"] = c.witness;
      j["microseconds"] = c.microseconds;
      os << j.dump() << "\n";
    }
  return os.str();
}

} // namespace qalg
