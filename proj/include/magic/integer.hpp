#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace magic {

// Entries of squares over Z are unbounded; products and scalar actions
// never overflow.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Integer& v) { return v.str(); }

// True when v is representable as a signed 64-bit value.
inline bool fits_int64(const Integer& v) {
  return v >= std::numeric_limits<std::int64_t>::min() &&
         v <= std::numeric_limits<std::int64_t>::max();
}

// Floor-style residue in [0, m) for m > 0.
inline Integer mod_floor(const Integer& v, const Integer& m) {
  Integer r = v % m;
  if (r < 0) r += m;
  return r;
}

}  // namespace magic
