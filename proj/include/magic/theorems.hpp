#pragma once

// Machine-check harness for the algebraic claims about magic squares:
//   pms-group         (P_n, +) is an abelian group and a subgroup of M_n(Z)
//   direct-sum-group  direct sums [[A,B],[B,A]] form an abelian group
//   constructions     scaling, shifting and Kronecker products stay magic
//   gms-group         GMS over an abelian group form a group componentwise
//   ring-gms          ring GMS under +_p and ._p: closure search, ring laws
//                     on a closed family, scalar action and identities
//
// Every random draw derives from the seed and the position of the check in
// the report, so the rendered report is identical for any worker count.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "magic/json_io.hpp"

namespace magic {

struct HarnessOptions {
  std::uint64_t trials = 200;
  std::uint64_t seed = 1;
  unsigned max_ring = 3;
  std::size_t max_order = 3;
  unsigned workers = 1;
  // Exhaustive searches run only when |R|^(n*n) is at most this.
  std::uint64_t budget = 10'000'000;
};

enum class Verdict { Pass, Fail, Counterexample, Skipped };
std::string to_string(Verdict v);

struct CheckLine {
  std::string label;
  Verdict verdict = Verdict::Pass;
  std::string detail;
};

struct TheoremSection {
  std::string id;
  std::string claim;
  std::vector<CheckLine> checks;

  // Fail dominates Counterexample, which dominates Pass. Skips are ignored.
  Verdict verdict() const;
};

struct TheoremReport {
  HarnessOptions options;
  std::vector<TheoremSection> sections;

  // True when no check failed. Counterexamples found by the closure search
  // are findings, not failures.
  bool completed() const;
};

TheoremReport check_theorems(const HarnessOptions& options);

std::string render_text(const TheoremReport& report);
Json render_json(const TheoremReport& report);

}  // namespace magic
