// Exact arithmetic aliases and parsing helpers. All coefficient arithmetic in
// the library is over these types; no floating point is used anywhere.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace ntlc {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Formats as "p" or "p/q" with q > 0 and gcd(p, q) = 1.
std::string rational_to_string(const Rational& r);

// Accepts "p" or "p/q"; throws domain_error on malformed input or q = 0.
Rational rational_from_string(const std::string& s);

} // namespace ntlc
