#pragma once

// JSON encodings shared by the CLI and tests.
//
// Matrix file:  {"order": 3, "modulus": null, "entries": [[4,9,2],...]}
//   "modulus": null selects Z, "modulus": m selects Z_m. Product carriers
//   use "moduli": [m1, m2, ...] (null for a Z factor) and tuple entries.
//   Integers outside the signed 64-bit range are written as decimal strings
//   and either form is accepted on input.
//
// Independence system: {"labels": ["a","b"], "independent": [[], [0], ...]}

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "magic/algebra.hpp"
#include "magic/error.hpp"
#include "magic/gms.hpp"
#include "magic/matroid.hpp"
#include "magic/pms.hpp"
#include "magic/ring_gms.hpp"

namespace magic {

using Json = nlohmann::ordered_json;

class ParseError : public Error {
 public:
  using Error::Error;
};

struct MatrixDocument {
  std::shared_ptr<const ProductRing> ring;
  ElementMatrix entries;
};

// With `modulus_override` the entries are read as integers and reduced into
// Z_m, whatever the file declares. Throws ParseError.
MatrixDocument parse_matrix(const Json& doc,
                            std::optional<Integer> modulus_override = {});
MatrixDocument read_matrix(const std::filesystem::path& path,
                           std::optional<Integer> modulus_override = {});

Json integer_to_json(const Integer& v);
// Throws ParseError unless `v` is an integer or a decimal string.
Integer integer_from_json(const Json& v);

Json matrix_to_json(const Carrier& carrier, const ElementMatrix& entries);
Json to_json(const PseudoMagicSquare& a);
Json to_json(const GroupMagicSquare& a);
Json to_json(const RingMagicSquare& a);

// Throws ParseError when the document is not over Z.
IntMatrix integer_entries(const MatrixDocument& doc);

IndependenceSystem parse_system(const Json& doc);
Json to_json(const IndependenceSystem& sys);

}  // namespace magic
