// magicsq: verify, build, combine and enumerate magic squares.
//
// Exit codes: 0 success, 1 domain-level negative (not magic, closure
// violation, axiom violation, incompatible operands), 2 usage or parse error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "magic/enumerate.hpp"
#include "magic/json_io.hpp"
#include "magic/lattice.hpp"
#include "magic/theorems.hpp"

namespace {

using namespace magic;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

// Thrown for bad flag combinations found after CLI11 parsing.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Common {
  std::optional<std::string> modulus;
  bool ring = false;
  bool json = false;
  std::string output;
};

std::optional<Integer> modulus_of(const Common& c) {
  if (!c.modulus) return std::nullopt;
  try {
    return Integer(*c.modulus);
  } catch (const std::exception&) {
    throw UsageError("--modulus expects an integer, got " + *c.modulus);
  }
}

Integer integer_flag(const std::string& flag, const std::string& text) {
  try {
    return Integer(text);
  } catch (const std::exception&) {
    throw UsageError(flag + " expects an integer, got " + text);
  }
}

void emit(const Json& doc, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << doc.dump(2) << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << doc.dump(2) << "\n";
}

std::string describe(const PseudoMagicSquare& a) {
  return "PMS, order " + std::to_string(a.order()) + ", constant " + a.constant().str();
}

std::string describe(const GroupMagicSquare& a) {
  return "GMS over " + a.group()->name() + ", order " + std::to_string(a.order()) +
         ", constant " + a.constant().to_string();
}

std::string describe(const RingMagicSquare& a) {
  return "ring GMS over " + a.ring()->name() + ", order " + std::to_string(a.order()) +
         ", additive constant " + a.additive_constant().to_string() +
         ", multiplicative constant " + a.multiplicative_constant().to_string();
}

bool over_z(const MatrixDocument& d) {
  return same_carrier(d.ring->carrier(), Carrier::integers());
}

// ---- verify ----------------------------------------------------------------

int verify_cmd(const std::string& file, const Common& c) {
  const auto doc = read_matrix(file, modulus_of(c));
  std::string line;
  Json out;
  try {
    if (c.ring) {
      const auto a = rverify(doc.ring, doc.entries);
      line = describe(a);
      out = {{"magic", true},
             {"kind", "ring-gms"},
             {"ring", a.ring()->name()},
             {"order", a.order()},
             {"additive_constant", a.additive_constant().to_string()},
             {"multiplicative_constant", a.multiplicative_constant().to_string()}};
    } else if (over_z(doc)) {
      const auto a = verify(integer_entries(doc));
      line = describe(a);
      out = {{"magic", true},
             {"kind", "pms"},
             {"order", a.order()},
             {"constant", integer_to_json(a.constant())}};
    } else {
      const auto a = gverify(doc.ring, doc.entries);
      line = describe(a);
      out = {{"magic", true},
             {"kind", "gms"},
             {"group", a.group()->name()},
             {"order", a.order()},
             {"constant", a.constant().to_string()}};
    }
  } catch (const NotMagic& e) {
    if (c.json) {
      std::cout << Json{{"magic", false},
                        {"violation", e.what()},
                        {"line", e.line().to_string()},
                        {"expected", e.expected()},
                        {"actual", e.actual()}}
                       .dump(2)
                << "\n";
    } else {
      std::cout << e.what() << "\n";
    }
    return kNegative;
  }
  if (c.json)
    std::cout << out.dump(2) << "\n";
  else
    std::cout << line << "\n";
  return kOk;
}

// ---- make ------------------------------------------------------------------

int make_cmd(const std::string& what, std::size_t n, const Common& c) {
  const auto m = modulus_of(c);
  const auto ring = m ? ProductRing::residues(*m) : ProductRing::integers();
  if (n == 0) throw UsageError("order must be at least 1");
  Json doc;
  std::string line;
  if (what == "loh-shu") {
    const auto a = loh_shu();
    doc = to_json(a);
    line = describe(a);
  } else if (what == "zero") {
    const auto a = zeros_rms(ring, n);
    doc = to_json(a);
    line = describe(a);
  } else if (what == "ones") {
    const auto a = ones_rms(ring, n);
    doc = to_json(a);
    line = describe(a);
  } else {
    throw UsageError("unknown square " + what);
  }
  emit(doc, c.output);
  if (!c.output.empty() && c.output != "-") std::cout << line << "\n";
  return kOk;
}

// ---- combine ---------------------------------------------------------------

struct CombineArgs {
  std::string op;
  std::vector<std::string> inputs;
  std::optional<std::string> k;
};

int combine_cmd(const CombineArgs& args, const Common& c) {
  static const std::vector<std::string> binary = {"add", "mul", "direct-sum", "kron"};
  static const std::vector<std::string> unary = {"scale", "shift", "scalar-act", "neg"};
  const bool is_binary = std::find(binary.begin(), binary.end(), args.op) != binary.end();
  const bool is_unary = std::find(unary.begin(), unary.end(), args.op) != unary.end();
  if (!is_binary && !is_unary) throw UsageError("unknown operation " + args.op);
  const std::size_t want = is_binary ? 2 : 1;
  if (args.inputs.size() != want)
    throw UsageError(args.op + " takes " + std::to_string(want) + " input file(s)");
  const bool needs_k = args.op == "scale" || args.op == "shift" || args.op == "scalar-act";
  if (needs_k && !args.k) throw UsageError(args.op + " needs -k");

  std::vector<MatrixDocument> docs;
  for (const auto& f : args.inputs) docs.push_back(read_matrix(f, modulus_of(c)));
  const auto& ring = docs[0].ring;
  for (const auto& d : docs)
    if (!same_carrier(d.ring->carrier(), ring->carrier()))
      throw CarrierMismatch("operands live over " + ring->name() + " and " + d.ring->name());

  Json out;
  std::string line;
  auto finish = [&](const auto& result) {
    out = to_json(result);
    line = describe(result);
  };

  if (c.ring || args.op == "mul" || args.op == "scalar-act") {
    std::vector<RingMagicSquare> sq;
    for (const auto& d : docs) sq.push_back(rverify(d.ring, d.entries));
    if (args.op == "add") {
      finish(add_p(sq[0], sq[1]));
    } else if (args.op == "mul") {
      finish(mul_p(sq[0], sq[1]));
    } else if (args.op == "scalar-act") {
      // k acts through its image in every factor of the carrier.
      const std::vector<Integer> parts(ring->carrier()->arity(), integer_flag("-k", *args.k));
      finish(scalar_act(ring->make(parts), sq[0]));
    } else {
      throw UsageError(args.op + " is not a ring operation");
    }
  } else if (over_z(docs[0])) {
    std::vector<PseudoMagicSquare> sq;
    for (const auto& d : docs) sq.push_back(verify(integer_entries(d)));
    if (args.op == "add") finish(add(sq[0], sq[1]));
    else if (args.op == "direct-sum") finish(direct_sum(sq[0], sq[1]));
    else if (args.op == "kron") finish(kronecker(sq[0], sq[1]));
    else if (args.op == "scale") finish(scale(sq[0], integer_flag("-k", *args.k)));
    else if (args.op == "shift") finish(shift(sq[0], integer_flag("-k", *args.k)));
    else finish(neg(sq[0]));
  } else {
    std::vector<GroupMagicSquare> sq;
    for (const auto& d : docs) sq.push_back(gverify(d.ring, d.entries));
    if (args.op == "add") finish(combine(sq[0], sq[1]));
    else if (args.op == "neg") finish(ginvert(sq[0]));
    else throw UsageError(args.op + " needs integer squares (no modulus)");
  }
  emit(out, c.output);
  (c.output.empty() || c.output == "-" ? std::cerr : std::cout) << line << "\n";
  return kOk;
}

// ---- enumerate -------------------------------------------------------------

struct EnumerateArgs {
  std::size_t order = 3;
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  std::optional<std::int64_t> constant;
  bool distinct = false;
  bool classes = false;
  unsigned workers = 1;
  std::uint64_t budget = 1'000'000'000;
};

int enumerate_cmd(const EnumerateArgs& a, const Common& c) {
  SearchSpec spec;
  spec.order = a.order;
  spec.lo = a.lo;
  spec.hi = a.hi;
  spec.constant = a.constant;
  spec.require_distinct_entries = a.distinct;
  EnumerateOptions opts{a.budget, a.workers};
  Json doc;
  std::ostringstream text;
  if (a.classes) {
    const auto classes = count_classes(spec, opts);
    std::size_t total = 0;
    Json list = Json::array();
    for (const auto& k : classes) {
      total += k.size;
      list.push_back({{"size", k.size}, {"representative", to_json(k.representative)}});
    }
    doc = {{"squares", total}, {"classes", classes.size()}, {"representatives", list}};
    text << total << " squares in " << classes.size() << " classes\n";
    for (const auto& k : classes)
      text << "  " << k.size << " x " << to_json(k.representative)["entries"].dump() << "\n";
  } else {
    Json list = Json::array();
    std::size_t count = 0;
    enumerate_pms(
        spec,
        [&](const PseudoMagicSquare& s) {
          ++count;
          if (c.json)
            list.push_back(to_json(s)["entries"]);
          else
            text << to_json(s)["entries"].dump() << "  constant " << s.constant() << "\n";
        },
        opts);
    doc = {{"count", count}, {"squares", list}};
    text << count << " squares\n";
  }
  if (c.json)
    emit(doc, c.output);
  else
    std::cout << text.str();
  return kOk;
}

// ---- basis -----------------------------------------------------------------

int basis_cmd(std::size_t n, const Common& c) {
  if (n == 0) throw UsageError("order must be at least 1");
  const auto basis = lattice_basis(n);
  if (c.json) {
    Json list = Json::array();
    for (const auto& b : basis) list.push_back(to_json(b));
    emit({{"order", n}, {"rank", basis.size()}, {"basis", list}}, c.output);
    return kOk;
  }
  std::cout << "lattice basis of order-" << n << " PMS, rank " << basis.size() << "\n";
  for (std::size_t i = 0; i < basis.size(); ++i)
    std::cout << "  B" << i << " " << to_json(basis[i])["entries"].dump() << "  constant "
              << basis[i].constant() << "\n";
  return kOk;
}

// ---- matroid ---------------------------------------------------------------

int matroid_cmd(const std::string& file, std::size_t basis_order,
                const std::vector<std::string>& squares, const Common& c) {
  const int sources = !file.empty() + (basis_order > 0) + !squares.empty();
  if (sources != 1)
    throw UsageError("give exactly one of SYSTEM, --basis or --squares");
  std::optional<IndependenceSystem> sys;
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) throw ParseError("cannot open " + file);
    Json doc;
    try {
      doc = Json::parse(in);
    } catch (const Json::parse_error& e) {
      throw ParseError(file + ": " + e.what());
    }
    sys.emplace(parse_system(doc));
  } else {
    std::vector<PseudoMagicSquare> ground;
    std::vector<std::string> labels;
    if (basis_order > 0) {
      ground = lattice_basis(basis_order);
    } else {
      for (const auto& f : squares) {
        ground.push_back(verify(integer_entries(read_matrix(f))));
        labels.push_back(f);
      }
    }
    sys.emplace(vector_matroid(ground, labels));
  }
  const auto verdict = is_matroid(*sys);
  IndexSet all(sys->ground_size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  const std::size_t rank = sys->rank(all);
  if (c.json) {
    Json doc = {{"ground", sys->ground_size()},
                {"independent_sets", sys->independent().size()},
                {"rank", rank},
                {"matroid", verdict.is_matroid}};
    if (!verdict.is_matroid) {
      doc["violated"] = to_string(*verdict.violated);
      doc["witness"] = verdict.witness;
      doc["detail"] = verdict.detail;
    }
    std::cout << doc.dump(2) << "\n";
  } else if (verdict.is_matroid) {
    std::cout << "matroid: ground " << sys->ground_size() << ", "
              << sys->independent().size() << " independent sets, rank " << rank << "\n";
  } else {
    std::cout << "not a matroid: " << to_string(*verdict.violated) << ": " << verdict.detail
              << "\n";
  }
  return verdict.is_matroid ? kOk : kNegative;
}

// ---- check-theorems --------------------------------------------------------

int check_cmd(const HarnessOptions& o, const Common& c) {
  const auto report = check_theorems(o);
  if (c.json)
    emit(render_json(report), c.output);
  else if (c.output.empty() || c.output == "-")
    std::cout << render_text(report);
  else {
    std::ofstream out(c.output);
    if (!out) throw UsageError("cannot write " + c.output);
    out << render_text(report);
  }
  return report.completed() ? kOk : kNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verify, construct and enumerate magic squares over Z, Z_m and products"};
  app.require_subcommand(1);
  Common common;

  auto add_common = [&](CLI::App* sub, bool matrix_flags) {
    sub->add_flag("--json", common.json, "Machine-readable output");
    if (matrix_flags) {
      sub->add_option("--modulus", common.modulus, "Read entries as residues mod m");
      sub->add_flag("--ring", common.ring, "Treat squares as ring GMS (sum and product magic)");
    }
  };

  std::string verify_file;
  auto* verify = app.add_subcommand("verify", "Check whether a matrix file is magic");
  verify->add_option("file", verify_file, "Matrix JSON")->required();
  add_common(verify, true);

  std::string make_what;
  std::size_t make_n = 3;
  auto* make = app.add_subcommand("make", "Write a standard square: loh-shu, zero, ones");
  make->add_option("square", make_what)->required()->check(CLI::IsMember({"loh-shu", "zero", "ones"}));
  make->add_option("-n,--order", make_n, "Order for zero and ones");
  make->add_option("-o,--output", common.output, "Output file (default stdout)");
  add_common(make, true);

  CombineArgs combine_args;
  auto* combine = app.add_subcommand(
      "combine", "Apply add, mul, direct-sum, kron, scale, shift, neg or scalar-act");
  combine->add_option("op", combine_args.op)->required();
  combine->add_option("inputs", combine_args.inputs, "Matrix JSON files")->required();
  combine->add_option("-k", combine_args.k, "Integer argument of scale, shift, scalar-act");
  combine->add_option("-o,--output", common.output, "Output file (default stdout)");
  add_common(combine, true);

  EnumerateArgs en;
  auto* enumerate = app.add_subcommand("enumerate", "List every PMS with entries in [lo, hi]");
  enumerate->add_option("-n,--order", en.order)->required();
  enumerate->add_option("--lo", en.lo)->required();
  enumerate->add_option("--hi", en.hi)->required();
  enumerate->add_option("--constant", en.constant);
  enumerate->add_flag("--distinct", en.distinct, "Require pairwise distinct entries");
  enumerate->add_flag("--classes", en.classes, "Group results by dihedral symmetry");
  enumerate->add_option("--workers", en.workers)->check(CLI::Range(1u, 1024u));
  enumerate->add_option("--budget", en.budget, "Abort after this many search nodes");
  enumerate->add_option("-o,--output", common.output, "Output file for --json");
  add_common(enumerate, false);

  std::size_t basis_n = 3;
  auto* basis = app.add_subcommand("basis", "Print a Z-basis of the order-n PMS lattice");
  basis->add_option("-n,--order", basis_n)->required();
  basis->add_option("-o,--output", common.output, "Output file for --json");
  add_common(basis, false);

  std::string system_file;
  std::size_t matroid_basis = 0;
  std::vector<std::string> matroid_squares;
  auto* matroid = app.add_subcommand("matroid", "Check the matroid axioms");
  matroid->add_option("system", system_file, "Independence system JSON");
  matroid->add_option("--basis", matroid_basis, "Vector matroid of the order-n lattice basis");
  matroid->add_option("--squares", matroid_squares, "Vector matroid of these PMS files");
  add_common(matroid, false);

  HarnessOptions ho;
  ho.workers = std::max(1u, std::thread::hardware_concurrency());
  auto* check = app.add_subcommand("check-theorems", "Run the algebraic property harness");
  check->add_option("--trials", ho.trials, "Random trials per check");
  check->add_option("--seed", ho.seed);
  check->add_option("--max-ring", ho.max_ring, "Largest modulus m for Z_m searches")
      ->check(CLI::Range(2u, 1000u));
  check->add_option("--max-order", ho.max_order)->check(CLI::Range(std::size_t{1}, std::size_t{8}));
  check->add_option("--workers", ho.workers)->check(CLI::Range(1u, 1024u));
  check->add_option("--budget", ho.budget, "Exhaustive searches up to this many candidates");
  check->add_option("-o,--output", common.output, "Output file");
  add_common(check, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*verify) return verify_cmd(verify_file, common);
    if (*make) return make_cmd(make_what, make_n, common);
    if (*combine) return combine_cmd(combine_args, common);
    if (*enumerate) return enumerate_cmd(en, common);
    if (*basis) return basis_cmd(basis_n, common);
    if (*matroid) return matroid_cmd(system_file, matroid_basis, matroid_squares, common);
    if (*check) return check_cmd(ho, common);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const NotSquare& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InvalidSearchSpec& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const GroundSetTooLarge& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    // NotMagic, ClosureViolation, mismatches, budgets, infeasible constants.
    std::cerr << e.what() << "\n";
    return kNegative;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
