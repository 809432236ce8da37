#ifndef DISCJET_RATIONAL_HPP
#define DISCJET_RATIONAL_HPP

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace discjet
{

// Arbitrary-precision rational, always kept in lowest terms.
using rational = mpq_class;

// "p/q", or "p" when the denominator is one.
std::string to_string(const rational &q);

// Accepts "p", "-p", "p/q". Throws schema_error otherwise or on a zero denominator.
rational parse_rational(std::string_view text);

rational factorial(unsigned n);

} // namespace discjet

#endif
