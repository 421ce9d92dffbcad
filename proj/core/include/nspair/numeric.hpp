#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace nspair {

// Arbitrary-precision integers and exact rationals. All arithmetic in the
// library is exact; no floating point is used anywhere.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline int sign_of(const Int& v) { return v.sign(); }
inline int sign_of(const Rat& v) { return v.sign(); }

inline Int abs_of(const Int& v) { return v < 0 ? Int(-v) : v; }

inline Int numerator(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int denominator(const Rat& r) { return boost::multiprecision::denominator(r); }

inline std::string to_string(const Int& v) { return v.str(); }
inline std::string to_string(const Rat& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace nspair
