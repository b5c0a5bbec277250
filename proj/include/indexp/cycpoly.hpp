#ifndef INDEXP_CYCPOLY_HPP
#define INDEXP_CYCPOLY_HPP

#include "indexp/cyclotomic.hpp"

#include <utility>
#include <vector>

namespace indexp {

// Dense univariate polynomial over Q(zeta_m). All coefficients are stored
// embedded at the shared conductor m; the zero polynomial has no coefficients.
class CycPoly {
public:
    explicit CycPoly(int conductor = 1);
    CycPoly(int conductor, std::vector<CycNumber> coeffs);
    static CycPoly from_ratpoly(const RatPoly& f, int conductor);
    static CycPoly monomial(int conductor, int degree, const CycNumber& c);

    int conductor() const { return m_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<CycNumber>& coeffs() const { return c_; }
    const CycNumber& operator[](int i) const;
    const CycNumber& leading() const;

    CycPoly operator+(const CycPoly& o) const;
    CycPoly operator-(const CycPoly& o) const;
    CycPoly operator*(const CycPoly& o) const;
    CycPoly scaled(const CycNumber& c) const;
    bool operator==(const CycPoly& o) const;

    std::pair<CycPoly, CycPoly> divmod(const CycPoly& d) const;
    CycPoly monic() const;
    CycPoly derivative() const;
    CycNumber eval(const CycNumber& x) const;
    // f(g(X)) by Horner; g at the same conductor.
    CycPoly compose(const CycPoly& g) const;
    // Apply sigma_t to every coefficient.
    CycPoly galois(long t) const;
    // All coefficients rational? If so, the RatPoly image.
    bool is_rational() const;
    RatPoly to_ratpoly() const;

    std::string to_string(const std::string& var = "X") const;

private:
    int m_;
    std::vector<CycNumber> c_;
    void trim();
    CycNumber embed(const CycNumber& z) const;
};

CycPoly cycpoly_gcd(const CycPoly& a, const CycPoly& b); // monic gcd over Q(zeta_m)

} // namespace indexp

#endif
