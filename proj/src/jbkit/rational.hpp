#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace jbkit {

using Int = boost::multiprecision::cpp_int;

// Exact rational scalar: arbitrary-precision, always in lowest terms with
// positive denominator (the backend canonicalizes after every operation).
// No floating point enters any computation in this library.
using Rat = boost::multiprecision::cpp_rational;

Int binomial(unsigned n, unsigned k);
Int factorial(unsigned n);

// Accepts "p" or "p/q" with optional leading '-'; q must be nonzero.
std::optional<Rat> parse_rat(const std::string& s);

// Inverse of parse_rat: "p" when the denominator is 1, else "p/q".
std::string rat_str(const Rat& r);

}  // namespace jbkit
