#include "magic/algebra.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace magic {

Integer random_integer(std::mt19937_64& rng, const Integer& lo,
                       const Integer& hi) {
  // Rejection sampling over 64-bit limbs keeps arbitrary widths exact.
  const Integer width = hi - lo + 1;
  const std::size_t bits = boost::multiprecision::msb(width) + 1;
  for (;;) {
    Integer v = 0;
    for (std::size_t got = 0; got < bits; got += 64) v = (v << 64) | rng();
    v &= (Integer(1) << bits) - 1;
    if (v < width) return lo + v;
  }
}

// ---- Carrier ---------------------------------------------------------------

CarrierPtr Carrier::integers() {
  static const CarrierPtr z(new Carrier({Integer(0)}, ""));
  return z;
}

CarrierPtr Carrier::residues(const Integer& modulus) {
  if (modulus < 1) throw InvalidStructure("modulus must be at least 1");
  return CarrierPtr(new Carrier({modulus}, ""));
}

CarrierPtr Carrier::product(std::vector<Integer> moduli) {
  if (moduli.empty()) throw InvalidStructure("product needs a factor");
  for (const auto& m : moduli)
    if (m < 0) throw InvalidStructure("negative modulus");
  return CarrierPtr(new Carrier(std::move(moduli), ""));
}

CarrierPtr Carrier::labeled(std::size_t size, std::string tag) {
  if (size == 0) throw InvalidStructure("empty carrier");
  if (tag.empty()) throw InvalidStructure("labeled carrier needs a tag");
  return CarrierPtr(new Carrier({Integer(size)}, std::move(tag)));
}

bool Carrier::finite() const {
  return std::none_of(moduli_.begin(), moduli_.end(),
                      [](const Integer& m) { return m == 0; });
}

std::optional<Integer> Carrier::cardinality() const {
  if (!finite()) return std::nullopt;
  Integer n = 1;
  for (const auto& m : moduli_) n *= m;
  return n;
}

std::string Carrier::name() const {
  if (!tag_.empty()) return tag_;
  std::string out;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    if (i) out += " x ";
    out += moduli_[i] == 0 ? std::string("Z") : "Z_" + moduli_[i].str();
  }
  return out;
}

bool Carrier::contains(std::span<const Integer> parts) const {
  if (parts.size() != moduli_.size()) return false;
  for (std::size_t i = 0; i < parts.size(); ++i)
    if (moduli_[i] != 0 && (parts[i] < 0 || parts[i] >= moduli_[i]))
      return false;
  return true;
}

bool same_carrier(const CarrierPtr& a, const CarrierPtr& b) {
  return a == b || (a && b && *a == *b);
}

// ---- Element ---------------------------------------------------------------

Element::Element(CarrierPtr carrier, std::vector<Integer> parts)
    : carrier_(std::move(carrier)), parts_(std::move(parts)) {
  if (!carrier_ || !carrier_->contains(parts_))
    throw CarrierMismatch("value does not belong to " +
                          (carrier_ ? carrier_->name() : std::string("?")));
}

Element Element::reduced(CarrierPtr carrier, std::vector<Integer> parts) {
  if (parts.size() != carrier->arity())
    throw CarrierMismatch("wrong number of components for " + carrier->name());
  for (std::size_t i = 0; i < parts.size(); ++i)
    if (carrier->moduli()[i] != 0)
      parts[i] = mod_floor(parts[i], carrier->moduli()[i]);
  return Element(std::move(carrier), std::move(parts), Unchecked{});
}

Element Element::integer(Integer value) {
  return Element(Carrier::integers(), {std::move(value)}, Unchecked{});
}

const Integer& Element::value() const {
  if (parts_.size() != 1)
    throw CarrierMismatch("value() on a product element");
  return parts_.front();
}

std::string Element::to_string() const {
  if (parts_.size() == 1) return parts_.front().str();
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ",";
    out += parts_[i].str();
  }
  return out + ")";
}

bool operator==(const Element& a, const Element& b) {
  return a.parts_ == b.parts_ && same_carrier(a.carrier_, b.carrier_);
}

void AbelianGroup::require_member(const Element& e) const {
  if (!same_carrier(e.carrier(), carrier()))
    throw CarrierMismatch("element of " + e.carrier()->name() +
                          " used with " + carrier()->name());
}

// ---- ProductRing -----------------------------------------------------------

ProductRing::ProductRing(CarrierPtr carrier) : carrier_(std::move(carrier)) {
  if (!carrier_->tag().empty())
    throw InvalidStructure("product rings are built from moduli only");
}

std::shared_ptr<const ProductRing> ProductRing::integers() {
  static const auto z = std::make_shared<const ProductRing>(Carrier::integers());
  return z;
}

std::shared_ptr<const ProductRing> ProductRing::residues(const Integer& modulus) {
  return std::make_shared<const ProductRing>(Carrier::residues(modulus));
}

std::shared_ptr<const ProductRing> ProductRing::product(
    std::vector<Integer> moduli) {
  return std::make_shared<const ProductRing>(
      Carrier::product(std::move(moduli)));
}

Element ProductRing::make(std::vector<Integer> parts) const {
  return Element::reduced(carrier_, std::move(parts));
}

Element ProductRing::op(const Element& a, const Element& b) const {
  require_member(a);
  require_member(b);
  std::vector<Integer> out(carrier_->arity());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.parts()[i] + b.parts()[i];
  return make(std::move(out));
}

Element ProductRing::mul(const Element& a, const Element& b) const {
  require_member(a);
  require_member(b);
  std::vector<Integer> out(carrier_->arity());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.parts()[i] * b.parts()[i];
  return make(std::move(out));
}

Element ProductRing::inverse(const Element& a) const {
  require_member(a);
  std::vector<Integer> out(carrier_->arity());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = -a.parts()[i];
  return make(std::move(out));
}

Element ProductRing::identity() const {
  return make(std::vector<Integer>(carrier_->arity(), Integer(0)));
}

Element ProductRing::one() const {
  return make(std::vector<Integer>(carrier_->arity(), Integer(1)));
}

std::vector<Element> ProductRing::elements(std::size_t limit) const {
  auto card = carrier_->cardinality();
  if (!card) throw BudgetExceeded(carrier_->name() + " is infinite");
  if (*card > limit)
    throw BudgetExceeded(carrier_->name() + " has more than " +
                         std::to_string(limit) + " elements");
  const auto& moduli = carrier_->moduli();
  std::vector<Element> out;
  out.reserve(static_cast<std::size_t>(*card));
  std::vector<Integer> parts(moduli.size(), Integer(0));
  for (;;) {
    out.push_back(make(parts));
    // Odometer with the first factor most significant.
    std::size_t k = parts.size();
    while (k > 0) {
      --k;
      if (++parts[k] < moduli[k]) break;
      parts[k] = 0;
      if (k == 0) return out;
    }
  }
}

Element ProductRing::sample(std::mt19937_64& rng, const Integer& bound) const {
  std::vector<Integer> parts;
  for (const auto& m : carrier_->moduli())
    parts.push_back(m == 0 ? random_integer(rng, -bound, bound) : random_integer(rng, 0, m - 1));
  return make(std::move(parts));
}

// ---- TableGroup ------------------------------------------------------------

TableGroup::TableGroup(std::vector<std::vector<std::size_t>> table,
                       std::string tag)
    : table_(std::move(table)) {
  const std::size_t k = table_.size();
  if (k == 0) throw InvalidStructure("empty operation table");
  for (const auto& row : table_) {
    if (row.size() != k) throw InvalidStructure("operation table is not square");
    for (auto v : row)
      if (v >= k) throw InvalidStructure("operation table leaves the carrier");
  }
  carrier_ = Carrier::labeled(k, std::move(tag));
  // Best-effort identity and inverses; check_axioms reports when they fail.
  for (std::size_t e = 0; e < k; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < k && ok; ++a) ok = table_[e][a] == a;
    if (ok) {
      identity_ = e;
      break;
    }
  }
  inverse_.assign(k, 0);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      if (table_[a][b] == identity_) {
        inverse_[a] = b;
        break;
      }
}

std::shared_ptr<const TableGroup> TableGroup::unverified(
    std::vector<std::vector<std::size_t>> table, std::string tag) {
  return std::shared_ptr<const TableGroup>(
      new TableGroup(std::move(table), std::move(tag)));
}

std::shared_ptr<const TableGroup> TableGroup::create(
    std::vector<std::vector<std::size_t>> table, std::string tag) {
  auto group = unverified(std::move(table), std::move(tag));
  auto report = check_axioms(*group);
  if (const auto* bad = report.first_failure())
    throw InvalidStructure("not an abelian group (" + bad->axiom +
                           "): " + bad->witness);
  return group;
}

Element TableGroup::label(std::size_t i) const {
  return Element(carrier_, {Integer(i)});
}

std::size_t TableGroup::index_of(const Element& e) const {
  require_member(e);
  return static_cast<std::size_t>(e.value());
}

Element TableGroup::op(const Element& a, const Element& b) const {
  return label(table_[index_of(a)][index_of(b)]);
}

Element TableGroup::identity() const { return label(identity_); }

Element TableGroup::inverse(const Element& a) const {
  return label(inverse_[index_of(a)]);
}

std::vector<Element> TableGroup::elements(std::size_t limit) const {
  if (table_.size() > limit) throw BudgetExceeded("table too large");
  std::vector<Element> out;
  for (std::size_t i = 0; i < table_.size(); ++i) out.push_back(label(i));
  return out;
}

Element TableGroup::sample(std::mt19937_64& rng, const Integer&) const {
  return label(static_cast<std::size_t>(random_integer(rng, 0, table_.size() - 1)));
}

// ---- axiom checks ----------------------------------------------------------

bool AxiomReport::passed() const { return first_failure() == nullptr; }

const AxiomResult* AxiomReport::first_failure() const {
  for (const auto& r : results)
    if (!r.passed) return &r;
  return nullptr;
}

namespace {

using Law = std::function<std::optional<std::string>(
    std::span<const Element* const>)>;

// Runs `law` over all `arity`-tuples of a finite carrier when affordable,
// otherwise over seeded random tuples.
class LawRunner {
 public:
  LawRunner(const AbelianGroup& g, const AxiomBudget& budget)
      : group_(g), budget_(budget), rng_(budget.seed) {
    auto card = g.carrier()->cardinality();
    if (card && (*card) * (*card) * (*card) <= budget.exhaustive_limit)
      elements_ = g.elements(static_cast<std::size_t>(*card));
  }

  AxiomResult run(std::string name, std::size_t arity, const Law& law) {
    AxiomResult result;
    result.axiom = std::move(name);
    std::vector<const Element*> args(arity);
    if (elements_) {
      result.exhaustive = true;
      const std::size_t k = elements_->size();
      std::vector<std::size_t> idx(arity, 0);
      for (;;) {
        for (std::size_t i = 0; i < arity; ++i) args[i] = &(*elements_)[idx[i]];
        ++result.cases;
        if (auto w = law(args)) {
          result.passed = false;
          result.witness = *w;
          return result;
        }
        std::size_t p = arity;
        while (p > 0) {
          --p;
          if (++idx[p] < k) break;
          idx[p] = 0;
          if (p == 0) return result;
        }
        if (arity == 0) return result;
      }
    }
    std::vector<Element> drawn;
    for (std::uint64_t t = 0; t < budget_.samples; ++t) {
      drawn.clear();
      for (std::size_t i = 0; i < arity; ++i)
        drawn.push_back(group_.sample(rng_, budget_.sample_bound));
      for (std::size_t i = 0; i < arity; ++i) args[i] = &drawn[i];
      ++result.cases;
      if (auto w = law(args)) {
        result.passed = false;
        result.witness = *w;
        return result;
      }
    }
    return result;
  }

 private:
  const AbelianGroup& group_;
  const AxiomBudget& budget_;
  std::mt19937_64 rng_;
  std::optional<std::vector<Element>> elements_;
};

std::string show(std::initializer_list<std::pair<const char*, const Element*>> xs) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [name, e] : xs) {
    if (!first) out << ", ";
    first = false;
    out << name << "=" << e->to_string();
  }
  return out.str();
}

void add_group_laws(LawRunner& run, AxiomReport& report,
                    const AbelianGroup& g) {
  const CarrierPtr& c = g.carrier();
  report.results.push_back(run.run("closure", 2, [&](auto x) -> std::optional<std::string> {
    Element r = g.op(*x[0], *x[1]);
    if (same_carrier(r.carrier(), c) && c->contains(r.parts())) return std::nullopt;
    return show({{"a", x[0]}, {"b", x[1]}});
  }));
  report.results.push_back(run.run("associativity", 3, [&](auto x) -> std::optional<std::string> {
    Element l = g.op(g.op(*x[0], *x[1]), *x[2]);
    Element r = g.op(*x[0], g.op(*x[1], *x[2]));
    if (l == r) return std::nullopt;
    return show({{"a", x[0]}, {"b", x[1]}, {"c", x[2]}, {"(ab)c", &l}, {"a(bc)", &r}});
  }));
  report.results.push_back(run.run("commutativity", 2, [&](auto x) -> std::optional<std::string> {
    Element l = g.op(*x[0], *x[1]);
    Element r = g.op(*x[1], *x[0]);
    if (l == r) return std::nullopt;
    return show({{"a", x[0]}, {"b", x[1]}, {"ab", &l}, {"ba", &r}});
  }));
  const Element e = g.identity();
  report.results.push_back(run.run("identity", 1, [&](auto x) -> std::optional<std::string> {
    Element r = g.op(e, *x[0]);
    if (r == *x[0] && g.op(*x[0], e) == *x[0]) return std::nullopt;
    return show({{"e", &e}, {"a", x[0]}, {"ea", &r}});
  }));
  report.results.push_back(run.run("inverse", 1, [&](auto x) -> std::optional<std::string> {
    Element inv = g.inverse(*x[0]);
    Element r = g.op(*x[0], inv);
    if (r == e && g.op(inv, *x[0]) == e) return std::nullopt;
    return show({{"a", x[0]}, {"inverse", &inv}, {"a*inverse", &r}});
  }));
}

}  // namespace

AxiomReport check_axioms(const AbelianGroup& group, const AxiomBudget& budget) {
  AxiomReport report;
  report.structure = group.name();
  LawRunner run(group, budget);
  add_group_laws(run, report, group);
  return report;
}

AxiomReport check_ring_axioms(const CommutativeRing& ring,
                              const AxiomBudget& budget) {
  AxiomReport report;
  report.structure = ring.name();
  LawRunner run(ring, budget);
  add_group_laws(run, report, ring);
  for (auto& r : report.results) r.axiom = "additive " + r.axiom;
  const CarrierPtr& c = ring.carrier();
  report.results.push_back(run.run("multiplicative closure", 2, [&](auto x) -> std::optional<std::string> {
    Element r = ring.mul(*x[0], *x[1]);
    if (same_carrier(r.carrier(), c) && c->contains(r.parts())) return std::nullopt;
    return show({{"a", x[0]}, {"b", x[1]}});
  }));
  report.results.push_back(run.run("multiplicative associativity", 3, [&](auto x) -> std::optional<std::string> {
    Element l = ring.mul(ring.mul(*x[0], *x[1]), *x[2]);
    Element r = ring.mul(*x[0], ring.mul(*x[1], *x[2]));
    if (l == r) return std::nullopt;
    return show({{"a", x[0]}, {"b", x[1]}, {"c", x[2]}, {"(ab)c", &l}, {"a(bc)", &r}});
  }));
  report.results.push_back(run.run("multiplicative commutativity", 2, [&](auto x) -> std::optional<std::string> {
    Element l = ring.mul(*x[0], *x[1]);
    Element r = ring.mul(*x[1], *x[0]);
    if (l == r) return std::nullopt;
    return show({{"a", x[0]}, {"b", x[1]}, {"ab", &l}, {"ba", &r}});
  }));
  const Element u = ring.one();
  report.results.push_back(run.run("unit", 1, [&](auto x) -> std::optional<std::string> {
    Element r = ring.mul(u, *x[0]);
    if (r == *x[0]) return std::nullopt;
    return show({{"one", &u}, {"a", x[0]}, {"one*a", &r}});
  }));
  report.results.push_back(run.run("distributivity", 3, [&](auto x) -> std::optional<std::string> {
    Element l = ring.mul(*x[0], ring.add(*x[1], *x[2]));
    Element r = ring.add(ring.mul(*x[0], *x[1]), ring.mul(*x[0], *x[2]));
    if (l == r) return std::nullopt;
    return show({{"a", x[0]}, {"b", x[1]}, {"c", x[2]}, {"a(b+c)", &l}, {"ab+ac", &r}});
  }));
  return report;
}

}  // namespace magic
