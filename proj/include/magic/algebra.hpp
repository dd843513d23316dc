#pragma once

// Abelian groups and commutative rings with unit, generic enough that the
// magic-square machinery never needs to know which carrier it runs over.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "magic/error.hpp"
#include "magic/integer.hpp"

namespace magic {

// Describes a finite direct product of factors, each Z (modulus 0) or Z_m.
// A non-empty tag marks a custom structure (e.g. one given by an operation
// table) that is only equal to carriers carrying the same tag.
class Carrier {
 public:
  static std::shared_ptr<const Carrier> integers();
  static std::shared_ptr<const Carrier> residues(const Integer& modulus);
  // Factors with modulus 0 are copies of Z. Throws InvalidStructure on
  // negative moduli or an empty factor list.
  static std::shared_ptr<const Carrier> product(std::vector<Integer> moduli);
  static std::shared_ptr<const Carrier> labeled(std::size_t size,
                                                std::string tag);

  const std::vector<Integer>& moduli() const { return moduli_; }
  std::size_t arity() const { return moduli_.size(); }
  const std::string& tag() const { return tag_; }
  bool finite() const;
  // Number of elements, or nullopt for infinite carriers.
  std::optional<Integer> cardinality() const;
  // "Z", "Z_5", "Z_2 x Z_3", or the tag for custom carriers.
  std::string name() const;

  bool contains(std::span<const Integer> parts) const;

  friend bool operator==(const Carrier&, const Carrier&) = default;

 private:
  Carrier(std::vector<Integer> moduli, std::string tag)
      : moduli_(std::move(moduli)), tag_(std::move(tag)) {}

  std::vector<Integer> moduli_;
  std::string tag_;
};

using CarrierPtr = std::shared_ptr<const Carrier>;

bool same_carrier(const CarrierPtr& a, const CarrierPtr& b);

// Uniform integer in [lo, hi], exact for any width.
Integer random_integer(std::mt19937_64& rng, const Integer& lo,
                       const Integer& hi);

// A value of a declared carrier. Residue parts always lie in [0, m).
class Element {
 public:
  // Throws CarrierMismatch if the parts do not belong to the carrier.
  Element(CarrierPtr carrier, std::vector<Integer> parts);

  // Reduces each residue part into range before constructing.
  static Element reduced(CarrierPtr carrier, std::vector<Integer> parts);
  static Element integer(Integer value);

  const CarrierPtr& carrier() const { return carrier_; }
  std::span<const Integer> parts() const { return parts_; }
  // The single part of a one-factor carrier.
  const Integer& value() const;

  std::string to_string() const;

  friend bool operator==(const Element& a, const Element& b);
  // Lexicographic over parts; only meaningful within one carrier.
  friend bool operator<(const Element& a, const Element& b) {
    return a.parts_ < b.parts_;
  }

 private:
  struct Unchecked {};
  Element(CarrierPtr carrier, std::vector<Integer> parts, Unchecked)
      : carrier_(std::move(carrier)), parts_(std::move(parts)) {}

  CarrierPtr carrier_;
  std::vector<Integer> parts_;
};

class AbelianGroup {
 public:
  virtual ~AbelianGroup() = default;

  virtual const CarrierPtr& carrier() const = 0;
  std::string name() const { return carrier()->name(); }

  virtual Element op(const Element& a, const Element& b) const = 0;
  virtual Element identity() const = 0;
  virtual Element inverse(const Element& a) const = 0;

  // Every element in ascending lexicographic order. Throws BudgetExceeded
  // for infinite carriers or more than `limit` elements.
  virtual std::vector<Element> elements(std::size_t limit = 1u << 20) const = 0;
  // Uniform over finite factors; Z factors draw from [-bound, bound].
  virtual Element sample(std::mt19937_64& rng,
                         const Integer& bound = 1000000) const = 0;

  // Throws CarrierMismatch when e is not an element of this structure.
  void require_member(const Element& e) const;
};

class CommutativeRing : public AbelianGroup {
 public:
  Element add(const Element& a, const Element& b) const { return op(a, b); }
  Element neg(const Element& a) const { return inverse(a); }
  Element zero() const { return identity(); }

  virtual Element mul(const Element& a, const Element& b) const = 0;
  virtual Element one() const = 0;
};

// Z, Z_m and finite direct products of them, with componentwise operations.
class ProductRing final : public CommutativeRing {
 public:
  explicit ProductRing(CarrierPtr carrier);

  static std::shared_ptr<const ProductRing> integers();
  static std::shared_ptr<const ProductRing> residues(const Integer& modulus);
  static std::shared_ptr<const ProductRing> product(std::vector<Integer> moduli);

  const CarrierPtr& carrier() const override { return carrier_; }
  Element op(const Element& a, const Element& b) const override;
  Element identity() const override;
  Element inverse(const Element& a) const override;
  Element mul(const Element& a, const Element& b) const override;
  Element one() const override;
  std::vector<Element> elements(std::size_t limit = 1u << 20) const override;
  Element sample(std::mt19937_64& rng,
                 const Integer& bound = 1000000) const override;

  // Element from plain integers, reduced into the carrier.
  Element make(std::vector<Integer> parts) const;
  Element make(const Integer& value) const { return make(std::vector{value}); }
  Element make(std::initializer_list<long long> parts) const {
    return make(std::vector<Integer>(parts.begin(), parts.end()));
  }

 private:
  CarrierPtr carrier_;
};

// A finite group given by its Cayley table over labels 0..k-1.
class TableGroup final : public AbelianGroup {
 public:
  // Validates every abelian group law exhaustively; throws InvalidStructure
  // naming the first failed law.
  static std::shared_ptr<const TableGroup> create(
      std::vector<std::vector<std::size_t>> table, std::string tag);
  // Only checks that the table is k x k with entries in range. Meant for
  // diagnostics and negative controls of the axiom checker.
  static std::shared_ptr<const TableGroup> unverified(
      std::vector<std::vector<std::size_t>> table, std::string tag);

  const CarrierPtr& carrier() const override { return carrier_; }
  Element op(const Element& a, const Element& b) const override;
  Element identity() const override;
  Element inverse(const Element& a) const override;
  std::vector<Element> elements(std::size_t limit = 1u << 20) const override;
  Element sample(std::mt19937_64& rng,
                 const Integer& bound = 1000000) const override;

  Element label(std::size_t i) const;

 private:
  TableGroup(std::vector<std::vector<std::size_t>> table, std::string tag);
  std::size_t index_of(const Element& e) const;

  std::vector<std::vector<std::size_t>> table_;
  CarrierPtr carrier_;
  std::size_t identity_ = 0;
  std::vector<std::size_t> inverse_;
};

// Outcome of one law over a structure.
struct AxiomResult {
  std::string axiom;
  bool passed = true;
  bool exhaustive = false;
  std::uint64_t cases = 0;
  // Human-readable counterexample; empty when passed.
  std::string witness;
};

struct AxiomReport {
  std::string structure;
  std::vector<AxiomResult> results;

  bool passed() const;
  const AxiomResult* first_failure() const;
};

struct AxiomBudget {
  // Triples are checked exhaustively when |carrier|^3 is at most this.
  std::uint64_t exhaustive_limit = 10'000'000;
  // Otherwise this many seeded random cases per law.
  std::uint64_t samples = 2000;
  std::uint64_t seed = 1;
  Integer sample_bound = 1000000;
};

// Closure, associativity, commutativity, identity and inverse laws.
AxiomReport check_axioms(const AbelianGroup& group,
                         const AxiomBudget& budget = {});
// The group laws for + plus closure, associativity, commutativity and unit
// for multiplication and distributivity.
AxiomReport check_ring_axioms(const CommutativeRing& ring,
                              const AxiomBudget& budget = {});

}  // namespace magic
