#include "magic/theorems.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "magic/lattice.hpp"
#include "magic/sampling.hpp"

namespace magic {

namespace {

const Integer kEntryBound = 1000000;

std::mt19937_64 job_rng(std::uint64_t seed, std::initializer_list<std::uint64_t> path) {
  std::vector<std::uint32_t> words{static_cast<std::uint32_t>(seed),
                                   static_cast<std::uint32_t>(seed >> 32)};
  for (auto p : path) words.push_back(static_cast<std::uint32_t>(p));
  std::seed_seq seq(words.begin(), words.end());
  return std::mt19937_64(seq);
}

template <class T, class F>
std::string show_matrix(const SquareMatrix<T>& m, F&& cell) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.order(); ++i) {
    out += i ? ",[" : "[";
    for (std::size_t j = 0; j < m.order(); ++j) {
      if (j) out += ",";
      out += cell(m(i, j));
    }
    out += "]";
  }
  return out + "]";
}

std::string show(const IntMatrix& m) {
  return show_matrix(m, [](const Integer& v) { return v.str(); });
}
std::string show(const ElementMatrix& m) {
  return show_matrix(m, [](const Element& e) { return e.to_string(); });
}

CheckLine pass(std::string label, std::string detail) {
  return {std::move(label), Verdict::Pass, std::move(detail)};
}
CheckLine fail(std::string label, std::string detail) {
  return {std::move(label), Verdict::Fail, std::move(detail)};
}

// ---- pms-group -------------------------------------------------------------

CheckLine pms_group(const HarnessOptions& o, std::size_t n) {
  const std::string label = "n=" + std::to_string(n);
  const auto basis = lattice_basis(n);
  auto rng = job_rng(o.seed, {1, n});
  const auto z = zero(n);
  for (std::uint64_t t = 0; t < o.trials; ++t) {
    const auto a = random_pms(basis, rng, kEntryBound);
    const auto b = random_pms(basis, rng, kEntryBound);
    const auto c = random_pms(basis, rng, kEntryBound);
    auto bad = [&](const std::string& law) {
      return fail(label, law + " fails for A=" + show(a.entries()) +
                             " B=" + show(b.entries()) + " C=" + show(c.entries()));
    };
    const auto ab = add(a, b);
    if (verify(ab.entries()).constant() != a.constant() + b.constant() ||
        ab.constant() != a.constant() + b.constant())
      return bad("closure with constant c_A + c_B");
    if (add(ab, c) != add(a, add(b, c))) return bad("associativity");
    if (ab != add(b, a)) return bad("commutativity");
    if (add(a, z) != a || add(z, a) != a) return bad("identity");
    const auto na = neg(a);
    if (add(a, na) != z || verify(na.entries()).constant() != -a.constant())
      return bad("inverse");
    if (verify(subtract(a, b).entries()).constant() != a.constant() - b.constant())
      return bad("subgroup criterion A - B");
  }
  return pass(label, std::to_string(o.trials) +
                         " random triples (entries within 10^6): closure, "
                         "associativity, commutativity, identity, inverse, "
                         "constant homomorphism, subgroup criterion");
}

// ---- direct-sum-group ------------------------------------------------------

CheckLine direct_sum_group(const HarnessOptions& o, std::size_t n) {
  const std::string label = "n=" + std::to_string(n);
  const auto basis = lattice_basis(n);
  auto rng = job_rng(o.seed, {2, n});
  for (std::uint64_t t = 0; t < o.trials; ++t) {
    const auto a = random_pms(basis, rng, kEntryBound);
    const auto b = random_pms(basis, rng, kEntryBound);
    const auto c = random_pms(basis, rng, kEntryBound);
    const auto d = random_pms(basis, rng, kEntryBound);
    auto bad = [&](const std::string& law) {
      return fail(label, law + " fails for A=" + show(a.entries()) +
                             " B=" + show(b.entries()));
    };
    const auto ab = direct_sum(a, b);
    const auto checked = verify(ab.entries());
    if (ab.order() != 2 * n || checked.constant() != a.constant() + b.constant())
      return bad("order 2n with constant c_A + c_B");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (ab(i, j) != a(i, j) || ab(i + n, j + n) != a(i, j) ||
            ab(i, j + n) != b(i, j) || ab(i + n, j) != b(i, j))
          return bad("block layout [[A,B],[B,A]]");
    const auto sum = add(ab, direct_sum(c, d));
    if (sum != direct_sum(add(a, c), add(b, d)) ||
        verify(sum.entries()).constant() !=
            a.constant() + b.constant() + c.constant() + d.constant())
      return bad("closure with constant c_A + c_B + c_C + c_D");
    if (neg(ab) != direct_sum(neg(a), neg(b))) return bad("inverse");
    if (add(ab, direct_sum(zero(n), zero(n))) != ab) return bad("identity");
  }
  return pass(label, std::to_string(o.trials) +
                         " random quadruples: order-2n square with constant "
                         "c_A + c_B, block layout, closure, identity, inverse");
}

// ---- constructions ---------------------------------------------------------

CheckLine constructions(const HarnessOptions& o, std::size_t n) {
  const std::string label = "n=" + std::to_string(n);
  const auto basis = lattice_basis(n);
  std::vector<std::vector<PseudoMagicSquare>> other_bases;
  for (std::size_t m = 1; m <= o.max_order; ++m) other_bases.push_back(lattice_basis(m));
  auto rng = job_rng(o.seed, {3, n});
  for (std::uint64_t t = 0; t < o.trials; ++t) {
    const auto a = random_pms(basis, rng, kEntryBound);
    const Integer k = random_integer(rng, -1000, 1000);
    const auto& ob = other_bases[static_cast<std::size_t>(
        random_integer(rng, 0, other_bases.size() - 1))];
    const auto b = random_pms(ob, rng, 1000);
    auto bad = [&](const std::string& law) {
      return fail(label, law + " fails for A=" + show(a.entries()) +
                             " k=" + k.str() + " B=" + show(b.entries()));
    };
    if (verify(scale(a, k).entries()).constant() != k * a.constant())
      return bad("scale constant k * c");
    if (verify(shift(a, k).entries()).constant() != a.constant() + k * n)
      return bad("shift constant c + n k");
    if (scale(a, -1) != neg(a)) return bad("scale by -1 is negation");
    if (shift(shift(a, k), -k) != a) return bad("inverse shifts");
    const auto kr = kronecker(a, b);
    if (kr.order() != n * b.order() ||
        verify(kr.entries()).constant() != a.constant() * b.constant())
      return bad("Kronecker constant c_A * c_B");
  }
  return pass(label, std::to_string(o.trials) +
                         " random draws: scale, shift, Kronecker with orders 1.." +
                         std::to_string(o.max_order));
}

// ---- gms-group -------------------------------------------------------------

CheckLine gms_exhaustive(const HarnessOptions& o, unsigned m, std::size_t n) {
  const std::string label = "Z_" + std::to_string(m) + " n=" + std::to_string(n);
  const GroupPtr g = ProductRing::residues(m);
  std::vector<GroupMagicSquare> set;
  try {
    set = all_gms(g, n, o.budget);
  } catch (const BudgetExceeded& e) {
    return {label, Verdict::Skipped, e.what()};
  }
  std::set<ElementMatrix> members;
  for (const auto& a : set) members.insert(a.entries());
  const auto e = identity_gms(g, n);
  auto bad = [&](const std::string& law, const std::string& where) {
    return fail(label, law + " fails for " + where);
  };
  if (!members.count(e.entries())) return bad("identity membership", show(e.entries()));
  for (const auto& a : set) {
    if (combine(e, a) != a) return bad("identity", show(a.entries()));
    const auto inv = ginvert(a);
    if (!members.count(inv.entries()) || combine(a, inv) != e)
      return bad("inverse", show(a.entries()));
  }
  std::uint64_t pairs = 0;
  for (const auto& a : set)
    for (const auto& b : set) {
      ++pairs;
      const auto ab = combine(a, b);
      if (!members.count(ab.entries()))
        return bad("closure", show(a.entries()) + " * " + show(b.entries()));
      if (gverify(g, ab.entries()).constant() != g->op(a.constant(), b.constant()) ||
          ab.constant() != g->op(a.constant(), b.constant()))
        return bad("constant composition", show(a.entries()) + " * " + show(b.entries()));
      if (ab != combine(b, a))
        return bad("commutativity", show(a.entries()) + " * " + show(b.entries()));
    }
  const std::uint64_t k = set.size();
  std::uint64_t triples = 0;
  std::string mode;
  auto assoc = [&](const GroupMagicSquare& a, const GroupMagicSquare& b,
                   const GroupMagicSquare& c) {
    ++triples;
    return combine(combine(a, b), c) == combine(a, combine(b, c));
  };
  if (k * k * k <= 1'000'000) {
    mode = "all";
    for (const auto& a : set)
      for (const auto& b : set)
        for (const auto& c : set)
          if (!assoc(a, b, c)) return bad("associativity", show(a.entries()));
  } else {
    mode = "sampled";
    auto rng = job_rng(o.seed, {4, m, n});
    for (std::uint64_t t = 0; t < o.trials; ++t) {
      const auto& a = set[rng() % k];
      const auto& b = set[rng() % k];
      const auto& c = set[rng() % k];
      if (!assoc(a, b, c)) return bad("associativity", show(a.entries()));
    }
  }
  return pass(label, std::to_string(k) + " squares of " + std::to_string(m) + "^" +
                         std::to_string(n * n) + " candidates; identity and inverses for all, " +
                         "closure, constant composition and commutativity for all " +
                         std::to_string(pairs) + " pairs; associativity on " + mode +
                         " " + std::to_string(triples) + " triples");
}

CheckLine gms_sampled(const HarnessOptions& o, const GroupPtr& g,
                      std::uint64_t tag, std::size_t n) {
  const std::string label = g->name() + " n=" + std::to_string(n);
  auto rng = job_rng(o.seed, {5, tag, n});
  const auto e = identity_gms(g, n);
  for (std::uint64_t t = 0; t < o.trials; ++t) {
    const auto a = random_gms(g, n, rng, kEntryBound);
    const auto b = random_gms(g, n, rng, kEntryBound);
    const auto c = random_gms(g, n, rng, kEntryBound);
    auto bad = [&](const std::string& law) {
      return fail(label, law + " fails for A=" + show(a.entries()) +
                             " B=" + show(b.entries()));
    };
    const auto ab = combine(a, b);
    if (gverify(g, ab.entries()).constant() != g->op(a.constant(), b.constant()))
      return bad("closure with constant c_A * c_B");
    if (combine(ab, c) != combine(a, combine(b, c))) return bad("associativity");
    if (ab != combine(b, a)) return bad("commutativity");
    if (combine(e, a) != a) return bad("identity");
    if (combine(a, ginvert(a)) != e) return bad("inverse");
  }
  return pass(label, std::to_string(o.trials) +
                         " random triples: closure, constant composition, "
                         "associativity, commutativity, identity, inverse");
}

// ---- ring-gms --------------------------------------------------------------

std::string describe(const OperationVerdict& v) {
  std::ostringstream out;
  if (v.closed()) {
    out << v.operation << " closed on " << v.pairs_checked << " pairs";
    return out.str();
  }
  const auto& ce = *v.first;
  out << v.operation << " leaves the set on " << v.violations << " of "
      << v.pairs_checked << " pairs; first A=" << show(ce.left)
      << " B=" << show(ce.right) << " -> " << show(ce.result) << " ("
      << to_string(ce.broken) << " fold of " << ce.line.to_string() << " is "
      << ce.actual << ", row 0 gives " << ce.expected << ")";
  return out.str();
}

CheckLine ring_closure(const HarnessOptions& o, unsigned m, std::size_t n) {
  const std::string label = "closure Z_" + std::to_string(m) + " n=" + std::to_string(n);
  ClosureReport r;
  try {
    r = closure_search(ProductRing::residues(m), n, {o.budget, 1});
  } catch (const BudgetExceeded& e) {
    return {label, Verdict::Skipped, e.what()};
  }
  std::string detail = std::to_string(r.members) + " ring GMS of " +
                       std::to_string(r.candidates) + " candidates; " +
                       describe(r.add) + "; " + describe(r.mul);
  return {label, r.closed() ? Verdict::Pass : Verdict::Counterexample, detail};
}

CheckLine ring_laws_circulant(const HarnessOptions& o, std::size_t n) {
  const std::string label = "circulant family over Z n=" + std::to_string(n);
  const RingPtr z = ProductRing::integers();
  auto rng = job_rng(o.seed, {6, n});
  const auto zeros = zeros_rms(z, n);
  const auto ones = ones_rms(z, n);
  if (zeros.additive_constant() != Element::integer(0) ||
      zeros.multiplicative_constant() != Element::integer(0) ||
      ones.additive_constant() != Element::integer(Integer(n)) ||
      ones.multiplicative_constant() != Element::integer(1))
    return fail(label, "identity squares have unexpected constants");
  for (std::uint64_t t = 0; t < o.trials; ++t) {
    const auto a = random_circulant_rms(z, n, rng, 1000);
    const auto b = random_circulant_rms(z, n, rng, 1000);
    const auto c = random_circulant_rms(z, n, rng, 1000);
    auto bad = [&](const std::string& law) {
      return fail(label, law + " fails for A=" + show(a.entries()) +
                             " B=" + show(b.entries()) + " C=" + show(c.entries()));
    };
    try {
      if (add_p(a, b) != add_p(b, a)) return bad("additive commutativity");
      if (mul_p(a, b) != mul_p(b, a)) return bad("multiplicative commutativity");
      if (add_p(add_p(a, b), c) != add_p(a, add_p(b, c))) return bad("additive associativity");
      if (mul_p(mul_p(a, b), c) != mul_p(a, mul_p(b, c)))
        return bad("multiplicative associativity");
      if (mul_p(a, add_p(b, c)) != add_p(mul_p(a, b), mul_p(a, c)))
        return bad("distributivity");
      if (add_p(a, zeros) != a || mul_p(a, ones) != a) return bad("identities");
      const auto s = add_p(a, b);
      if (s.additive_constant() != z->add(a.additive_constant(), b.additive_constant()))
        return bad("additive constant of +_p");
      const auto p = mul_p(a, b);
      if (p.multiplicative_constant() !=
          z->mul(a.multiplicative_constant(), b.multiplicative_constant()))
        return bad("multiplicative constant of ._p");
    } catch (const ClosureViolation& e) {
      return bad(std::string("closure (") + e.what() + ")");
    }
  }
  return pass(label, std::to_string(o.trials) +
                         " random triples: commutativity, associativity, "
                         "distributivity, identities, constants");
}

bool scalar_ok(const Element& r, const RingMagicSquare& a) {
  const auto& ring = *a.ring();
  const auto s = scalar_act(r, a);
  const auto checked = rverify(a.ring(), s.entries());
  Element power = ring.one();
  for (std::size_t i = 0; i < a.order(); ++i) power = ring.mul(power, r);
  const Element want_add = ring.mul(r, a.additive_constant());
  const Element want_mul = ring.mul(power, a.multiplicative_constant());
  return checked.additive_constant() == want_add && s.additive_constant() == want_add &&
         checked.multiplicative_constant() == want_mul &&
         s.multiplicative_constant() == want_mul;
}

CheckLine scalar_exhaustive(const HarnessOptions& o, unsigned m, std::size_t n) {
  const std::string label = "scalar action Z_" + std::to_string(m) + " n=" + std::to_string(n);
  const RingPtr ring = ProductRing::residues(m);
  std::vector<RingMagicSquare> set;
  try {
    set = all_rms(ring, n, o.budget);
  } catch (const BudgetExceeded& e) {
    return {label, Verdict::Skipped, e.what()};
  }
  std::uint64_t cases = 0;
  for (const auto& r : ring->elements())
    for (const auto& a : set) {
      ++cases;
      try {
        if (!scalar_ok(r, a))
          return fail(label, "constants differ for r=" + r.to_string() + " A=" + show(a.entries()));
      } catch (const NotMagic& e) {
        return fail(label, std::string("result not magic: ") + e.what());
      }
    }
  return pass(label, "all " + std::to_string(cases) +
                         " (r, A) pairs: result is a ring GMS with constants "
                         "(r c_add, r^n c_mul)");
}

CheckLine scalar_sampled(const HarnessOptions& o, std::size_t n) {
  const std::string label = "scalar action Z n=" + std::to_string(n);
  const RingPtr z = ProductRing::integers();
  auto rng = job_rng(o.seed, {7, n});
  for (std::uint64_t t = 0; t < o.trials; ++t) {
    const auto a = random_circulant_rms(z, n, rng, 1000);
    const Element r = z->sample(rng, 1000);
    try {
      if (!scalar_ok(r, a))
        return fail(label, "constants differ for r=" + r.to_string() + " A=" + show(a.entries()));
    } catch (const NotMagic& e) {
      return fail(label, std::string("result not magic: ") + e.what());
    }
  }
  return pass(label, std::to_string(o.trials) +
                         " random (r, A) pairs: constants (r c_add, r^n c_mul)");
}

struct Job {
  std::size_t section;
  std::function<CheckLine()> run;
};

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::Counterexample: return "COUNTEREXAMPLE";
    case Verdict::Skipped: return "SKIP";
  }
  return "?";
}

Verdict TheoremSection::verdict() const {
  Verdict v = Verdict::Pass;
  for (const auto& c : checks) {
    if (c.verdict == Verdict::Fail) return Verdict::Fail;
    if (c.verdict == Verdict::Counterexample) v = Verdict::Counterexample;
  }
  return v;
}

bool TheoremReport::completed() const {
  return std::none_of(sections.begin(), sections.end(), [](const TheoremSection& s) {
    return s.verdict() == Verdict::Fail;
  });
}

TheoremReport check_theorems(const HarnessOptions& options) {
  const HarnessOptions o = options;
  TheoremReport report;
  report.options = o;
  report.sections = {
      {"pms-group", "(P_n, +) is an abelian group and a subgroup of (M_n(Z), +)", {}},
      {"direct-sum-group", "direct sums [[A,B],[B,A]] form an abelian group of order-2n squares", {}},
      {"constructions", "scaling, shifting and Kronecker products of PMS are PMS", {}},
      {"gms-group", "GMS over an abelian group form an abelian group under the componentwise operation", {}},
      {"ring-gms", "ring GMS form a commutative ring with unit under componentwise + and .", {}},
  };

  std::vector<Job> jobs;
  for (std::size_t n = 1; n <= o.max_order; ++n)
    jobs.push_back({0, [&o, n] { return pms_group(o, n); }});
  for (std::size_t n = 1; n <= o.max_order; ++n)
    jobs.push_back({1, [&o, n] { return direct_sum_group(o, n); }});
  for (std::size_t n = 1; n <= o.max_order; ++n)
    jobs.push_back({2, [&o, n] { return constructions(o, n); }});
  for (unsigned m = 2; m <= o.max_ring; ++m)
    for (std::size_t n = 1; n <= o.max_order; ++n)
      jobs.push_back({3, [&o, m, n] { return gms_exhaustive(o, m, n); }});
  const std::vector<std::pair<std::uint64_t, GroupPtr>> sampled_groups = {
      {0, ProductRing::integers()},
      {1, ProductRing::product({2, 3})},
      {2, ProductRing::product({0, 4})},
  };
  for (const auto& [tag, g] : sampled_groups)
    for (std::size_t n = 1; n <= o.max_order; ++n)
      jobs.push_back({3, [&o, tag = tag, g = g, n] { return gms_sampled(o, g, tag, n); }});
  for (unsigned m = 2; m <= o.max_ring; ++m)
    for (std::size_t n = 1; n <= o.max_order; ++n)
      jobs.push_back({4, [&o, m, n] { return ring_closure(o, m, n); }});
  for (std::size_t n = 1; n <= o.max_order; ++n)
    jobs.push_back({4, [&o, n] { return ring_laws_circulant(o, n); }});
  for (unsigned m = 2; m <= o.max_ring; ++m)
    for (std::size_t n = 1; n <= o.max_order; ++n)
      jobs.push_back({4, [&o, m, n] { return scalar_exhaustive(o, m, n); }});
  for (std::size_t n = 1; n <= o.max_order; ++n)
    jobs.push_back({4, [&o, n] { return scalar_sampled(o, n); }});

  std::vector<CheckLine> lines(jobs.size());
  auto run_one = [&](std::size_t k) {
    try {
      lines[k] = jobs[k].run();
    } catch (const std::exception& e) {
      lines[k] = fail("internal", e.what());
    }
  };
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(o.workers, jobs.size()));
  if (workers == 1) {
    for (std::size_t k = 0; k < jobs.size(); ++k) run_one(k);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::size_t k; (k = next.fetch_add(1)) < jobs.size();) run_one(k);
      });
    for (auto& t : pool) t.join();
  }
  for (std::size_t k = 0; k < jobs.size(); ++k)
    report.sections[jobs[k].section].checks.push_back(std::move(lines[k]));
  return report;
}

std::string render_text(const TheoremReport& report) {
  const auto& o = report.options;
  std::ostringstream out;
  out << "check-theorems seed=" << o.seed << " trials=" << o.trials
      << " max-ring=" << o.max_ring << " max-order=" << o.max_order
      << " budget=" << o.budget << "\n";
  for (const auto& s : report.sections) {
    out << "\n== " << s.id << ": " << to_string(s.verdict()) << "\n";
    out << "   claim: " << s.claim << "\n";
    for (const auto& c : s.checks)
      out << "   [" << to_string(c.verdict) << "] " << c.label << ": " << c.detail << "\n";
  }
  out << "\nresult: " << (report.completed() ? "completed" : "failed") << "\n";
  return out.str();
}

Json render_json(const TheoremReport& report) {
  const auto& o = report.options;
  Json doc;
  doc["seed"] = o.seed;
  doc["trials"] = o.trials;
  doc["max_ring"] = o.max_ring;
  doc["max_order"] = o.max_order;
  doc["budget"] = o.budget;
  Json sections = Json::array();
  for (const auto& s : report.sections) {
    Json js;
    js["id"] = s.id;
    js["claim"] = s.claim;
    js["verdict"] = to_string(s.verdict());
    Json checks = Json::array();
    for (const auto& c : s.checks)
      checks.push_back({{"label", c.label}, {"verdict", to_string(c.verdict)}, {"detail", c.detail}});
    js["checks"] = std::move(checks);
    sections.push_back(std::move(js));
  }
  doc["sections"] = std::move(sections);
  doc["completed"] = report.completed();
  return doc;
}

}  // namespace magic
