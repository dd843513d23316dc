#include "magic/json_io.hpp"

#include <fstream>

namespace magic {

namespace {

bool is_decimal(const std::string& s) {
  std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

Element parse_entry(const Json& v, const CarrierPtr& carrier, bool reduce) {
  std::vector<Integer> parts;
  if (carrier->arity() == 1) {
    parts.push_back(integer_from_json(v));
  } else {
    if (!v.is_array() || v.size() != carrier->arity())
      throw ParseError("product entries must be " +
                       std::to_string(carrier->arity()) + "-tuples");
    for (const auto& p : v) parts.push_back(integer_from_json(p));
  }
  if (reduce) return Element::reduced(carrier, std::move(parts));
  if (!carrier->contains(parts))
    throw ParseError("entry " + v.dump() + " is not an element of " +
                     carrier->name());
  return Element(carrier, std::move(parts));
}

}  // namespace

Json integer_to_json(const Integer& v) {
  if (fits_int64(v)) return Json(static_cast<std::int64_t>(v));
  return Json(v.str());
}

Integer integer_from_json(const Json& v) {
  if (v.is_number_integer()) {
    if (v.is_number_unsigned()) return Integer(v.get<std::uint64_t>());
    return Integer(v.get<std::int64_t>());
  }
  if (v.is_string() && is_decimal(v.get<std::string>()))
    return Integer(v.get<std::string>());
  throw ParseError("expected an integer, got " + v.dump());
}

MatrixDocument parse_matrix(const Json& doc,
                            std::optional<Integer> modulus_override) {
  if (!doc.is_object()) throw ParseError("matrix document must be an object");
  if (!doc.contains("entries") || !doc["entries"].is_array())
    throw ParseError("missing \"entries\" array");

  CarrierPtr carrier;
  if (modulus_override) {
    if (*modulus_override < 1) throw ParseError("modulus must be at least 1");
    carrier = Carrier::residues(*modulus_override);
  } else if (doc.contains("moduli")) {
    const auto& ms = doc["moduli"];
    if (!ms.is_array() || ms.empty())
      throw ParseError("\"moduli\" must be a non-empty array");
    std::vector<Integer> moduli;
    for (const auto& m : ms) {
      Integer v = m.is_null() ? Integer(0) : integer_from_json(m);
      if (!m.is_null() && v < 1) throw ParseError("moduli must be at least 1");
      moduli.push_back(v);
    }
    carrier = Carrier::product(std::move(moduli));
  } else if (!doc.contains("modulus") || doc["modulus"].is_null()) {
    carrier = Carrier::integers();
  } else {
    Integer m = integer_from_json(doc["modulus"]);
    if (m < 1) throw ParseError("modulus must be at least 1");
    carrier = Carrier::residues(m);
  }

  const auto& rows = doc["entries"];
  const std::size_t n = rows.size();
  if (n == 0) throw ParseError("matrix must have at least one row");
  if (doc.contains("order")) {
    const Integer order = integer_from_json(doc["order"]);
    if (order != n)
      throw ParseError("\"order\" is " + order.str() + " but entries have " +
                       std::to_string(n) + " rows");
  }
  std::vector<Element> cells;
  cells.reserve(n * n);
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != n)
      throw ParseError("entries must form a square matrix");
    for (const auto& v : row)
      cells.push_back(parse_entry(v, carrier, modulus_override.has_value()));
  }
  return {std::make_shared<const ProductRing>(carrier),
          ElementMatrix(n, std::move(cells))};
}

MatrixDocument read_matrix(const std::filesystem::path& path,
                           std::optional<Integer> modulus_override) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
  return parse_matrix(doc, std::move(modulus_override));
}

Json matrix_to_json(const Carrier& carrier, const ElementMatrix& entries) {
  Json doc;
  doc["order"] = entries.order();
  if (carrier.arity() == 1) {
    doc["modulus"] = carrier.moduli()[0] == 0 ? Json(nullptr)
                                              : integer_to_json(carrier.moduli()[0]);
  } else {
    Json ms = Json::array();
    for (const auto& m : carrier.moduli())
      ms.push_back(m == 0 ? Json(nullptr) : integer_to_json(m));
    doc["moduli"] = std::move(ms);
  }
  Json rows = Json::array();
  for (std::size_t i = 0; i < entries.order(); ++i) {
    Json row = Json::array();
    for (const auto& e : entries.row(i)) {
      if (carrier.arity() == 1) {
        row.push_back(integer_to_json(e.value()));
      } else {
        Json tuple = Json::array();
        for (const auto& p : e.parts()) tuple.push_back(integer_to_json(p));
        row.push_back(std::move(tuple));
      }
    }
    rows.push_back(std::move(row));
  }
  doc["entries"] = std::move(rows);
  return doc;
}

Json to_json(const PseudoMagicSquare& a) {
  return matrix_to_json(*Carrier::integers(),
                        a.entries().map([](const Integer& v) { return Element::integer(v); }));
}

Json to_json(const GroupMagicSquare& a) {
  return matrix_to_json(*a.group()->carrier(), a.entries());
}

Json to_json(const RingMagicSquare& a) {
  return matrix_to_json(*a.ring()->carrier(), a.entries());
}

IntMatrix integer_entries(const MatrixDocument& doc) {
  if (!same_carrier(doc.ring->carrier(), Carrier::integers()))
    throw ParseError("expected a matrix over Z, got " + doc.ring->name());
  return doc.entries.map([](const Element& e) { return e.value(); });
}

IndependenceSystem parse_system(const Json& doc) {
  if (!doc.is_object() || !doc.contains("labels") || !doc["labels"].is_array() ||
      !doc.contains("independent") || !doc["independent"].is_array())
    throw ParseError("independence system needs \"labels\" and \"independent\"");
  std::vector<std::string> labels;
  for (const auto& l : doc["labels"]) {
    if (!l.is_string()) throw ParseError("labels must be strings");
    labels.push_back(l.get<std::string>());
  }
  std::vector<IndexSet> sets;
  for (const auto& s : doc["independent"]) {
    if (!s.is_array()) throw ParseError("independent sets must be arrays");
    IndexSet set;
    for (const auto& i : s) {
      if (!i.is_number_unsigned() && !(i.is_number_integer() && i.get<std::int64_t>() >= 0))
        throw ParseError("set members must be non-negative indices");
      set.push_back(i.get<std::size_t>());
    }
    sets.push_back(std::move(set));
  }
  try {
    return IndependenceSystem(std::move(labels), std::move(sets));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

Json to_json(const IndependenceSystem& sys) {
  Json doc;
  doc["labels"] = sys.labels();
  Json sets = Json::array();
  for (const auto& s : sys.independent()) sets.push_back(s);
  doc["independent"] = std::move(sets);
  return doc;
}

}  // namespace magic
