#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace sympair {

// GMP keeps mpq_class results canonical: lowest terms, positive denominator.
using Rational = mpq_class;
using Integer = mpz_class;

/// Canonical "num/den" form; integers keep the "/1" suffix.
std::string to_string(const Rational& q);

/// Accepts "a", "a/b" and a leading sign. Throws DomainError otherwise.
Rational parse_rational(std::string_view text);

}  // namespace sympair
