#include "indexp/cycpoly.hpp"

#include "indexp/errors.hpp"
#include "indexp/numtheory.hpp"

#include <sstream>

namespace indexp {

CycPoly::CycPoly(int conductor) : m_(normalize_conductor(conductor)) {}

CycPoly::CycPoly(int conductor, std::vector<CycNumber> coeffs)
    : m_(normalize_conductor(conductor)), c_(std::move(coeffs)) {
    for (auto& z : c_) z = embed(z);
    trim();
}

CycNumber CycPoly::embed(const CycNumber& z) const {
    check_input(m_ % z.conductor() == 0, "CycPoly: coefficient conductor does not divide poly conductor");
    return cyc_embed(z, m_);
}

void CycPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

CycPoly CycPoly::from_ratpoly(const RatPoly& f, int conductor) {
    std::vector<CycNumber> v;
    v.reserve(f.coeffs().size());
    for (const auto& q : f.coeffs()) v.push_back(CycNumber::rational(q));
    return CycPoly(conductor, std::move(v));
}

CycPoly CycPoly::monomial(int conductor, int degree, const CycNumber& c) {
    std::vector<CycNumber> v(degree + 1);
    v[degree] = c;
    return CycPoly(conductor, std::move(v));
}

const CycNumber& CycPoly::operator[](int i) const {
    static const CycNumber zero;
    if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
    return c_[i];
}

const CycNumber& CycPoly::leading() const {
    check_input(!c_.empty(), "leading coefficient of zero polynomial");
    return c_.back();
}

CycPoly CycPoly::operator+(const CycPoly& o) const {
    int M = static_cast<int>(lcm_long(m_, o.m_));
    std::vector<CycNumber> v(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) {
        const CycNumber& a = (*this)[static_cast<int>(i)];
        const CycNumber& b = o[static_cast<int>(i)];
        v[i] = cyc_add(a, b);
    }
    return CycPoly(M, std::move(v));
}

CycPoly CycPoly::operator-(const CycPoly& o) const {
    int M = static_cast<int>(lcm_long(m_, o.m_));
    std::vector<CycNumber> v(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = cyc_sub((*this)[static_cast<int>(i)], o[static_cast<int>(i)]);
    return CycPoly(M, std::move(v));
}

CycPoly CycPoly::operator*(const CycPoly& o) const {
    int M = static_cast<int>(lcm_long(m_, o.m_));
    if (is_zero() || o.is_zero()) return CycPoly(M);
    std::vector<CycNumber> v(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j].is_zero()) continue;
            v[i + j] = cyc_add(v[i + j], cyc_mul(c_[i], o.c_[j]));
        }
    }
    return CycPoly(M, std::move(v));
}

CycPoly CycPoly::scaled(const CycNumber& c) const {
    int M = static_cast<int>(lcm_long(m_, c.conductor()));
    std::vector<CycNumber> v(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] = cyc_mul(c_[i], c);
    return CycPoly(M, std::move(v));
}

bool CycPoly::operator==(const CycPoly& o) const {
    if (degree() != o.degree()) return false;
    for (int i = 0; i <= degree(); ++i)
        if (!cyc_eq(c_[i], o.c_[i])) return false;
    return true;
}

std::pair<CycPoly, CycPoly> CycPoly::divmod(const CycPoly& d) const {
    check_input(!d.is_zero(), "polynomial division by zero");
    int M = static_cast<int>(lcm_long(m_, d.m_));
    if (degree() < d.degree()) return {CycPoly(M), CycPoly(M, c_)};
    std::vector<CycNumber> rem(c_.begin(), c_.end());
    for (auto& z : rem) z = cyc_embed(z, M);
    int dd = d.degree();
    std::vector<CycNumber> quo(degree() - dd + 1);
    CycNumber lead_inv = cyc_inv(cyc_embed(d.leading(), M));
    for (int i = degree(); i >= dd; --i) {
        if (rem[i].is_zero()) continue;
        CycNumber q = cyc_mul(rem[i], lead_inv);
        quo[i - dd] = q;
        for (int j = 0; j <= dd; ++j)
            rem[i - dd + j] = cyc_sub(rem[i - dd + j], cyc_mul(q, cyc_embed(d[j], M)));
    }
    return {CycPoly(M, std::move(quo)), CycPoly(M, std::move(rem))};
}

CycPoly CycPoly::monic() const {
    check_input(!is_zero(), "monic of zero polynomial");
    return scaled(cyc_inv(leading()));
}

CycPoly CycPoly::derivative() const {
    if (degree() < 1) return CycPoly(m_);
    std::vector<CycNumber> v(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
        v[i - 1] = cyc_mul(c_[i], CycNumber::integer(static_cast<long>(i)));
    return CycPoly(m_, std::move(v));
}

CycNumber CycPoly::eval(const CycNumber& x) const {
    CycNumber r;
    for (int i = degree(); i >= 0; --i) r = cyc_add(cyc_mul(r, x), c_[i]);
    return r;
}

CycPoly CycPoly::compose(const CycPoly& g) const {
    int M = static_cast<int>(lcm_long(m_, g.conductor()));
    CycPoly r(M);
    for (int i = degree(); i >= 0; --i) {
        r = r * g;
        r = r + CycPoly(M, {c_[i]});
    }
    return r;
}

CycPoly CycPoly::galois(long t) const {
    std::vector<CycNumber> v(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] = cyc_galois(c_[i], t);
    return CycPoly(m_, std::move(v));
}

bool CycPoly::is_rational() const {
    for (const auto& z : c_)
        if (!z.is_rational()) return false;
    return true;
}

RatPoly CycPoly::to_ratpoly() const {
    std::vector<Rational> v;
    v.reserve(c_.size());
    for (const auto& z : c_) v.push_back(z.rational_value());
    return RatPoly(std::move(v));
}

std::string CycPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        if (c_[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << c_[i].to_string() << ")";
        if (i > 0) {
            os << "*" << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

CycPoly cycpoly_gcd(const CycPoly& a, const CycPoly& b) {
    CycPoly x = a, y = b;
    while (!y.is_zero()) {
        CycPoly r = x.divmod(y).second;
        x = y;
        y = r;
    }
    if (x.is_zero()) return x;
    return x.monic();
}

} // namespace indexp
