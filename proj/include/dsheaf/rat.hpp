#ifndef DSHEAF_RAT_HPP
#define DSHEAF_RAT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

#include "dsheaf/errors.hpp"

namespace dsheaf {

// All invariant arithmetic is exact. cpp_rational keeps values in canonical
// reduced form with a positive denominator, which is exactly the contract
// the integrality assertions rely on.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

// Narrows a rational to an integer; throws invariant_violation when a value
// contracted to be integral is not.
inline Int to_integer(const Rat& r, const char* what) {
  if (!is_integer(r)) {
    throw invariant_violation(std::string(what) + ": expected an integer, got " +
                              r.str());
  }
  return numerator(r);
}

inline Int pow_int(const Int& base, unsigned exp) {
  Int result = 1;
  Int b = base;
  while (exp != 0) {
    if (exp & 1u) result *= b;
    b *= b;
    exp >>= 1u;
  }
  return result;
}

// Renders "a" for integers and "a/b" otherwise.
inline std::string rat_str(const Rat& r) {
  if (is_integer(r)) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

// Fixed 4-decimal rendering (round half away from zero), e.g. 7/8 -> "0.8750".
std::string rat_decimal4(const Rat& r);

// Parses "a" or "a/b"; throws domain_error on malformed input or zero
// denominator.
Rat parse_rat(const std::string& text);

}  // namespace dsheaf

#endif
