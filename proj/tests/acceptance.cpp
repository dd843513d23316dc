// Acceptance gate: one PASS/FAIL line per criterion. Exit status is nonzero
// when any criterion fails. Time limits are wall-clock on the whole criterion
// unless noted.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "magic/enumerate.hpp"
#include "magic/gms.hpp"
#include "magic/lattice.hpp"
#include "magic/matroid.hpp"
#include "magic/ring_gms.hpp"
#include "magic/sampling.hpp"
#include "magic/theorems.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace magic;

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

struct Outcome {
  bool ok = true;
  std::string detail;
};

// Records the first failed expectation of a criterion.
class Tally {
 public:
  void expect(bool cond, const std::string& what) {
    if (!cond && ok_) {
      ok_ = false;
      first_ = what;
    }
  }
  Outcome done(std::string detail) const {
    return {ok_, ok_ ? std::move(detail) : first_ + "; " + detail};
  }

 private:
  bool ok_ = true;
  std::string first_;
};

std::mt19937_64 rng_for(std::uint64_t criterion) {
  std::seed_seq seq{std::uint32_t(20240601), std::uint32_t(criterion)};
  return std::mt19937_64(seq);
}

// ---------------------------------------------------------------------------

Outcome fixtures(double& worst_ms) {
  Tally t;
  const auto l_rows = testing::ints({{4, 9, 2}, {3, 5, 7}, {8, 1, 6}});
  const IntMatrix neg5(4, Integer(-5));
  auto t0 = Clock::now();
  const auto l = verify(l_rows);
  const double l_ms = ms_since(t0);
  t0 = Clock::now();
  const auto n = verify(neg5);
  const double n_ms = ms_since(t0);
  worst_ms = std::max(l_ms, n_ms);
  t.expect(l.constant() == 15, "Loh-Shu constant " + l.constant().str());
  t.expect(n.constant() == -20, "all -5 constant " + n.constant().str());
  t.expect(l_ms < 1.0, "Loh-Shu verify took " + std::to_string(l_ms) + " ms");
  t.expect(n_ms < 1.0, "all -5 verify took " + std::to_string(n_ms) + " ms");
  std::ostringstream d;
  d << std::fixed << std::setprecision(4) << "constants 15 and -20; verify took " << l_ms
    << " ms and " << n_ms << " ms";
  return t.done(d.str());
}

Outcome group_suite() {
  Tally t;
  auto rng = rng_for(2);
  std::size_t triples = 0;
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto basis = lattice_basis(n);
    const auto z = zero(n);
    for (int k = 0; k < 1000; ++k, ++triples) {
      const auto a = random_pms(basis, rng, 1000000);
      const auto b = random_pms(basis, rng, 1000000);
      const auto c = random_pms(basis, rng, 1000000);
      for (const auto* s : {&a, &b, &c})
        for (const auto& v : s->entries().cells())
          t.expect(v >= -1000000 && v <= 1000000, "entry out of [-10^6, 10^6]");
      const auto ab = add(a, b);
      t.expect(add(ab, c) == add(a, add(b, c)), "associativity");
      t.expect(ab == add(b, a), "commutativity");
      t.expect(add(a, z) == a, "identity");
      t.expect(add(a, neg(a)) == z, "inverse");
      t.expect(verify(ab.entries()).constant() == a.constant() + b.constant(),
               "constant homomorphism");
    }
  }
  return t.done(std::to_string(triples) + " triples over n = 1..5");
}

Outcome direct_sum_suite() {
  Tally t;
  auto rng = rng_for(3);
  std::size_t pairs = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto basis = lattice_basis(n);
    for (int k = 0; k < 500; ++k, ++pairs) {
      const auto a = random_pms(basis, rng, 1000000);
      const auto b = random_pms(basis, rng, 1000000);
      const auto c = random_pms(basis, rng, 1000000);
      const auto d = random_pms(basis, rng, 1000000);
      const auto ab = verify(direct_sum(a, b).entries());
      t.expect(ab.order() == 2 * n, "direct sum order");
      t.expect(ab.constant() == a.constant() + b.constant(), "direct sum constant");
      t.expect(add(direct_sum(a, b), direct_sum(c, d)) == direct_sum(add(a, c), add(b, d)),
               "sum of direct sums");
    }
  }
  return t.done(std::to_string(pairs) + " pairs over n = 1..4");
}

Outcome gms_exhaustive() {
  Tally t;
  std::ostringstream d;
  struct Case {
    int m;
    std::size_t n;
  };
  for (auto [m, n] : {Case{2, 2}, Case{3, 2}, Case{2, 3}}) {
    const GroupPtr g = ProductRing::residues(m);
    const auto all = all_gms(g, n);
    std::set<ElementMatrix> members;
    for (const auto& a : all) members.insert(a.entries());
    const auto e = identity_gms(g, n);
    t.expect(members.count(e.entries()) == 1, "identity square missing");
    std::size_t pairs = 0;
    for (const auto& a : all) {
      t.expect(combine(e, a) == a, "identity law");
      const auto inv = ginvert(a);
      t.expect(members.count(inv.entries()) == 1, "inverse not a GMS");
      t.expect(combine(a, inv) == e, "inverse law");
      for (const auto& b : all) {
        ++pairs;
        const auto ab = combine(a, b);
        t.expect(members.count(ab.entries()) == 1, "closure");
        t.expect(gverify(g, ab.entries()).constant() == g->op(a.constant(), b.constant()),
                 "constant composition");
      }
    }
    d << "Z_" << m << " n=" << n << ": " << all.size() << " squares, " << pairs << " pairs; ";
  }
  return t.done(d.str() + "exhaustive");
}

Outcome ring_closure() {
  Tally t;
  std::ostringstream d;
  struct Case {
    int m;
    std::size_t n;
  };
  for (auto [m, n] : {Case{2, 2}, Case{2, 3}, Case{3, 2}}) {
    const auto ring = ProductRing::residues(m);
    const auto ref = oracle::ring_closure(m, n);
    const auto one = closure_search(ring, n, {10'000'000, 1});
    const auto again = closure_search(ring, n, {10'000'000, 1});
    const auto four = closure_search(ring, n, {10'000'000, 4});
    auto same = [](const OperationVerdict& x, const OperationVerdict& y) {
      if (x.pairs_checked != y.pairs_checked || x.violations != y.violations) return false;
      if (x.first.has_value() != y.first.has_value()) return false;
      return !x.first || (x.first->left_index == y.first->left_index &&
                          x.first->right_index == y.first->right_index &&
                          x.first->result == y.first->result && x.first->line == y.first->line);
    };
    for (const auto* other : {&again, &four})
      t.expect(same(one.add, other->add) && same(one.mul, other->mul),
               "closure_search not deterministic");
    auto matches = [&](const OperationVerdict& v,
                       const std::optional<std::pair<std::size_t, std::size_t>>& first,
                       std::uint64_t violations) {
      if (v.violations != violations || v.first.has_value() != first.has_value()) return false;
      return !first || (v.first->left_index == first->first &&
                        v.first->right_index == first->second &&
                        testing::flat(v.first->left) == ref.set[first->first] &&
                        testing::flat(v.first->right) == ref.set[first->second]);
    };
    t.expect(one.members == ref.members, "member count differs from oracle");
    t.expect(matches(one.add, ref.first_add, ref.add_violations), "add_p verdict differs");
    t.expect(matches(one.mul, ref.first_mul, ref.mul_violations), "mul_p verdict differs");
    d << "Z_" << m << " n=" << n << ": " << (one.closed() ? "closed" : "counterexample")
      << " (" << one.add.violations << "/" << one.mul.violations << " violations); ";
  }
  return t.done(d.str() + "oracle agrees, 1 and 4 workers agree");
}

Outcome lattice_rank() {
  Tally t;
  auto rng = rng_for(6);
  std::ostringstream d;
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto basis = lattice_basis(n);
    const std::size_t oracle_dim = n * n + 1 - oracle::rational_rank(oracle::line_constraints(n));
    t.expect(basis.size() == (n - 1) * (n - 1) + 1, "basis size for n=" + std::to_string(n));
    t.expect(basis.size() == oracle_dim, "oracle rank disagrees for n=" + std::to_string(n));
    for (int k = 0; k < 200; ++k) {
      std::vector<Integer> coeffs;
      for (std::size_t i = 0; i < basis.size(); ++i)
        coeffs.push_back(random_integer(rng, -1000000, 1000000));
      t.expect(decompose(compose(basis, coeffs), basis) == coeffs, "round trip");
    }
    d << basis.size() << (n < 6 ? "," : "");
  }
  return t.done("basis sizes " + d.str() + " for n = 1..6; 1200 round trips");
}

Outcome census() {
  Tally t;
  SearchSpec spec;
  spec.order = 3;
  spec.lo = 1;
  spec.hi = 9;
  spec.constant = 15;
  spec.require_distinct_entries = true;
  const auto squares = enumerate_pms(spec);
  const auto classes = count_classes(spec);
  const auto brute = oracle::permutation_squares();
  const auto brute_classes = oracle::orbit_sizes(brute, 3);

  std::vector<oracle::Flat> got;
  for (const auto& s : squares) got.push_back(testing::flat(s.entries()));
  t.expect(squares.size() == 8, "expected 8 squares, enumerator emitted " +
                                    std::to_string(squares.size()));
  t.expect(classes.size() == 1, "expected 1 class, found " + std::to_string(classes.size()));
  t.expect(got == brute, "enumerator differs from permutation oracle");
  t.expect(classes.size() == brute_classes.size(), "class count differs from oracle");

  // Every search window here with at most 10^5 naive candidates.
  std::size_t specs = 0;
  for (std::size_t n = 1; n <= 3; ++n)
    for (long long lo = -2; lo <= 1; ++lo)
      for (long long hi = lo; hi <= lo + 16; ++hi) {
        std::size_t naive = 1;
        for (std::size_t k = 0; k < n * n && naive <= 100000; ++k)
          naive *= static_cast<std::size_t>(hi - lo + 1);
        if (naive > 100000) break;
        for (bool distinct : {false, true}) {
          SearchSpec s;
          s.order = n;
          s.lo = lo;
          s.hi = hi;
          s.require_distinct_entries = distinct;
          std::vector<oracle::Flat> pruned;
          for (const auto& p : enumerate_pms(s)) pruned.push_back(testing::flat(p.entries()));
          ++specs;
          t.expect(pruned == oracle::naive_filter(n, lo, hi, std::nullopt, distinct),
                   "pruned != naive");
        }
      }
  std::ostringstream d;
  d << "enumerator: " << squares.size() << " squares in " << classes.size()
    << " classes; permutation oracle: " << brute.size() << " squares in "
    << brute_classes.size() << " classes; pruned == naive on " << specs << " windows";
  return t.done(d.str());
}

Outcome kron_scalar() {
  Tally t;
  auto rng = rng_for(8);
  const auto z = ProductRing::integers();
  for (int k = 0; k < 500; ++k) {
    const std::size_t n = 1 + k % 4, m = 1 + (k / 4) % 4;
    const auto a = random_pms(lattice_basis(n), rng, 1000000);
    const auto b = random_pms(lattice_basis(m), rng, 1000000);
    t.expect(verify(kronecker(a, b).entries()).constant() == a.constant() * b.constant(),
             "Kronecker constant");

    const auto r = z->sample(rng, 1000);
    const auto sq = random_circulant_rms(z, n, rng, 1000);
    const auto s = scalar_act(r, sq);
    const auto checked = rverify(z, s.entries());
    Integer power = 1;
    for (std::size_t i = 0; i < n; ++i) power *= r.value();
    t.expect(checked.additive_constant().value() == r.value() * sq.additive_constant().value(),
             "scalar additive constant");
    t.expect(checked.multiplicative_constant().value() ==
                 power * sq.multiplicative_constant().value(),
             "scalar multiplicative constant");
    t.expect(s.additive_constant() == checked.additive_constant() &&
                 s.multiplicative_constant() == checked.multiplicative_constant(),
             "asserted constants differ from rverify");
  }
  return t.done("500 Kronecker pairs and 500 scalar actions");
}

Outcome matroids() {
  Tally t;
  auto rng = rng_for(9);
  std::size_t subsets = 0;
  for (int k = 0; k < 100; ++k) {
    const std::size_t n = 2 + k % 3;
    const auto basis = lattice_basis(n);
    const std::size_t size = 1 + rng() % 6;
    std::vector<PseudoMagicSquare> ground;
    for (std::size_t i = 0; i < size; ++i) {
      if (i > 0 && rng() % 3 == 0)
        ground.push_back(add(ground[rng() % i], ground[rng() % i]));
      else
        ground.push_back(random_pms(basis, rng, 4));
    }
    const auto sys = vector_matroid(ground);
    t.expect(is_matroid(sys).is_matroid, "vector matroid failed the axioms");
    std::vector<std::uint32_t> masks;
    for (const auto& s : sys.independent()) {
      std::uint32_t mask = 0;
      for (auto i : s) mask |= 1u << i;
      masks.push_back(mask);
    }
    t.expect(oracle::matroid_axioms(masks), "direct axiom check failed");
    subsets += std::size_t{1} << size;
  }
  const auto basis3 = vector_matroid(lattice_basis(3));
  const std::size_t rank = basis3.rank({0, 1, 2, 3, 4});
  t.expect(rank == 5, "rank of lattice_basis(3) is " + std::to_string(rank));
  return t.done("100 ground sets (" + std::to_string(subsets) +
                " subsets) pass; lattice_basis(3) rank " + std::to_string(rank));
}

Outcome determinism() {
  Tally t;
  HarnessOptions o;
  o.seed = 12345;
  o.workers = 1;
  const auto first = render_text(check_theorems(o));
  const auto second = render_text(check_theorems(o));
  o.workers = 4;
  const auto parallel = render_text(check_theorems(o));
  t.expect(first == second, "two runs differ");
  t.expect(first == parallel, "1 and 4 workers differ");
  return t.done("3 reports of " + std::to_string(first.size()) + " bytes are identical");
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string name;
    double limit_ms;
    std::function<Outcome()> run;
  };
  double fixture_ms = 0;
  const std::vector<Criterion> criteria = {
      {1, "fixture constants", 0, [&] { return fixtures(fixture_ms); }},
      {2, "PMS group laws", 10'000, group_suite},
      {3, "direct sums", 5'000, direct_sum_suite},
      {4, "GMS group, exhaustive", 30'000, gms_exhaustive},
      {5, "ring closure search", 60'000, ring_closure},
      {6, "lattice rank", 10'000, lattice_rank},
      {7, "enumeration census", 5'000, census},
      {8, "Kronecker and scalar action", 5'000, kron_scalar},
      {9, "vector matroids", 30'000, matroids},
      {10, "determinism", 0, determinism},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = Clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double ms = ms_since(t0);
    const bool in_time = c.limit_ms == 0 || ms < c.limit_ms;
    const bool ok = out.ok && in_time;
    failed += !ok;
    std::ostringstream line;
    line << (ok ? "PASS" : "FAIL") << "  " << std::setw(2) << c.id << "  " << c.name << ": "
         << out.detail << " [" << std::fixed << std::setprecision(1) << ms << " ms";
    if (c.limit_ms > 0) line << ", limit " << static_cast<long>(c.limit_ms) << " ms";
    if (c.id == 1) line << ", limit 1 ms per verify";
    line << "]";
    if (!in_time) line << " too slow";
    std::cout << line.str() << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed ? 1 : 0;
}
