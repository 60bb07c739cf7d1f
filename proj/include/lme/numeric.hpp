#pragma once

#include <gmpxx.h>

#include <string>

namespace lme {

using BigInt = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const BigInt& v) { return v.get_str(); }

/// "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rational& v) { return v.get_str(); }

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);

}  // namespace lme
