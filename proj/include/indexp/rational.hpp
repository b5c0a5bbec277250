#ifndef INDEXP_RATIONAL_HPP
#define INDEXP_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace indexp {

// Exact rational coefficients. GMP keeps the canonical form
// (gcd(num, den) = 1, den > 0) that every consumer relies on.
using Rational = mpq_class;
using Integer = mpz_class;

// Canonical "a/b" form, plain "a" when the denominator is 1.
std::string rat_to_string(const Rational& q);

// Parses "a", "-a", "a/b"; validates the denominator.
Rational rat_from_string(const std::string& s);

inline bool rat_is_integer(const Rational& q) { return q.get_den() == 1; }

// Three-way compare usable as a strict weak order on coefficient vectors.
inline int rat_cmp(const Rational& a, const Rational& b) { return cmp(a, b); }

int rat_vec_cmp(const std::vector<Rational>& a, const std::vector<Rational>& b);

} // namespace indexp

#endif
