#ifndef INDEXP_POLYNOMIAL_HPP
#define INDEXP_POLYNOMIAL_HPP

#include "indexp/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace indexp {

// Dense univariate polynomial over Q, coefficients lowest degree first.
// The zero polynomial is the empty coefficient sequence.
class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rational> coeffs);
    static RatPoly constant(const Rational& c);
    static RatPoly monomial(int degree, const Rational& c = Rational(1));
    static RatPoly from_integers(const std::vector<long>& coeffs);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    const std::vector<Rational>& coeffs() const { return c_; }
    const Rational& operator[](int i) const;
    const Rational& leading() const;
    bool is_monic() const;

    RatPoly operator+(const RatPoly& o) const;
    RatPoly operator-(const RatPoly& o) const;
    RatPoly operator*(const RatPoly& o) const;
    RatPoly operator-() const;
    RatPoly scaled(const Rational& c) const;
    bool operator==(const RatPoly& o) const { return c_ == o.c_; }
    bool operator!=(const RatPoly& o) const { return c_ != o.c_; }

    // Euclidean division; the divisor must be nonzero.
    std::pair<RatPoly, RatPoly> divmod(const RatPoly& d) const;
    RatPoly derivative() const;
    Rational eval(const Rational& x) const;
    RatPoly monic() const;
    // Substitute X -> X + a.
    RatPoly shift(const Rational& a) const;

    // Content (rational c with this = c * primitive integer poly, positive lc).
    Rational content() const;
    std::vector<Integer> primitive_integer_coeffs() const;

    std::string to_string(const std::string& var = "X") const;

private:
    std::vector<Rational> c_;
    void trim();
};

// Monic gcd, computed by the Euclidean algorithm over Q.
RatPoly poly_gcd(const RatPoly& a, const RatPoly& b);

// The n-th cyclotomic polynomial, monic with integer coefficients.
RatPoly cyclotomic_poly(int n);

} // namespace indexp

#endif
