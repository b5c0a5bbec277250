#include "indexp/polynomial.hpp"

#include "indexp/errors.hpp"
#include "indexp/numtheory.hpp"

#include <map>
#include <mutex>

namespace indexp {

RatPoly::RatPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    for (auto& q : c_) q.canonicalize();
    trim();
}

void RatPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

RatPoly RatPoly::constant(const Rational& c) {
    if (c == 0) return RatPoly();
    return RatPoly(std::vector<Rational>{c});
}

RatPoly RatPoly::monomial(int degree, const Rational& c) {
    if (c == 0) return RatPoly();
    std::vector<Rational> v(degree + 1, Rational(0));
    v[degree] = c;
    return RatPoly(std::move(v));
}

RatPoly RatPoly::from_integers(const std::vector<long>& coeffs) {
    std::vector<Rational> v;
    v.reserve(coeffs.size());
    for (long x : coeffs) v.emplace_back(x);
    return RatPoly(std::move(v));
}

const Rational& RatPoly::operator[](int i) const {
    static const Rational zero(0);
    if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
    return c_[i];
}

const Rational& RatPoly::leading() const {
    check_input(!c_.empty(), "leading coefficient of zero polynomial");
    return c_.back();
}

bool RatPoly::is_monic() const { return !c_.empty() && c_.back() == 1; }

RatPoly RatPoly::operator+(const RatPoly& o) const {
    std::vector<Rational> v(std::max(c_.size(), o.c_.size()), Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] = c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
    return RatPoly(std::move(v));
}

RatPoly RatPoly::operator-(const RatPoly& o) const {
    std::vector<Rational> v(std::max(c_.size(), o.c_.size()), Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] = c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] -= o.c_[i];
    return RatPoly(std::move(v));
}

RatPoly RatPoly::operator-() const {
    std::vector<Rational> v = c_;
    for (auto& x : v) x = -x;
    return RatPoly(std::move(v));
}

RatPoly RatPoly::operator*(const RatPoly& o) const {
    if (is_zero() || o.is_zero()) return RatPoly();
    std::vector<Rational> v(c_.size() + o.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j] == 0) continue;
            v[i + j] += c_[i] * o.c_[j];
        }
    }
    return RatPoly(std::move(v));
}

RatPoly RatPoly::scaled(const Rational& c) const {
    if (c == 0) return RatPoly();
    std::vector<Rational> v = c_;
    for (auto& x : v) x *= c;
    return RatPoly(std::move(v));
}

std::pair<RatPoly, RatPoly> RatPoly::divmod(const RatPoly& d) const {
    check_input(!d.is_zero(), "polynomial division by zero");
    std::vector<Rational> rem = c_;
    int dd = d.degree();
    if (degree() < dd) return {RatPoly(), *this};
    std::vector<Rational> quo(degree() - dd + 1, Rational(0));
    const Rational& lead = d.leading();
    for (int i = degree(); i >= dd; --i) {
        Rational q = rem[i] / lead;
        if (q == 0) continue;
        quo[i - dd] = q;
        for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= q * d.c_[j];
    }
    return {RatPoly(std::move(quo)), RatPoly(std::move(rem))};
}

RatPoly RatPoly::derivative() const {
    if (degree() < 1) return RatPoly();
    std::vector<Rational> v(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return RatPoly(std::move(v));
}

Rational RatPoly::eval(const Rational& x) const {
    Rational r(0);
    for (int i = degree(); i >= 0; --i) r = r * x + c_[i];
    return r;
}

RatPoly RatPoly::monic() const {
    check_input(!is_zero(), "monic of zero polynomial");
    return scaled(1 / leading());
}

RatPoly RatPoly::shift(const Rational& a) const {
    // Horner on X + a.
    RatPoly result;
    RatPoly xa(std::vector<Rational>{a, Rational(1)});
    for (int i = degree(); i >= 0; --i) result = result * xa + RatPoly::constant(c_[i]);
    return result;
}

Rational RatPoly::content() const {
    if (is_zero()) return Rational(0);
    Integer num_gcd(0), den_lcm(1);
    for (const auto& q : c_) {
        if (q == 0) continue;
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), q.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den().get_mpz_t());
    }
    Rational c(num_gcd, den_lcm);
    c.canonicalize();
    if (leading() < 0) c = -c;
    return c;
}

std::vector<Integer> RatPoly::primitive_integer_coeffs() const {
    check_input(!is_zero(), "primitive part of zero polynomial");
    Rational c = content();
    std::vector<Integer> v;
    v.reserve(c_.size());
    for (const auto& q : c_) {
        Rational t = q / c;
        check_internal(t.get_den() == 1, "primitive part not integral");
        v.push_back(t.get_num());
    }
    return v;
}

std::string RatPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
        const Rational& q = c_[i];
        if (q == 0) continue;
        bool neg = q < 0;
        Rational a = neg ? Rational(-q) : q;
        if (s.empty())
            s += neg ? "-" : "";
        else
            s += neg ? " - " : " + ";
        bool unit = (a == 1) && i > 0;
        if (!unit) s += rat_to_string(a);
        if (i > 0) {
            if (!unit) s += "*";
            s += var;
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

RatPoly poly_gcd(const RatPoly& a, const RatPoly& b) {
    RatPoly x = a, y = b;
    while (!y.is_zero()) {
        RatPoly r = x.divmod(y).second;
        x = std::move(y);
        y = std::move(r);
    }
    if (x.is_zero()) return x;
    return x.monic();
}

RatPoly cyclotomic_poly(int n) {
    check_input(n >= 1, "cyclotomic_poly: n must be positive");
    static std::map<int, RatPoly> cache;
    static std::mutex mx;
    std::lock_guard<std::mutex> lock(mx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    // (X^n - 1) / prod of Phi_d over proper divisors d.
    std::vector<Rational> xn(n + 1, Rational(0));
    xn[0] = -1;
    xn[n] = 1;
    RatPoly num((std::move(xn)));
    RatPoly den = RatPoly::constant(Rational(1));
    for (int d : divisors(n)) {
        if (d == n) continue;
        auto jt = cache.find(d);
        RatPoly phi_d;
        if (jt != cache.end()) {
            phi_d = jt->second;
        } else {
            // Recurse without re-locking: divisors are ascending, so compute inline.
            std::vector<Rational> xd(d + 1, Rational(0));
            xd[0] = -1;
            xd[d] = 1;
            RatPoly nd((std::move(xd)));
            RatPoly dd = RatPoly::constant(Rational(1));
            for (int e : divisors(d))
                if (e != d) dd = dd * cache.at(e);
            auto qr = nd.divmod(dd);
            check_internal(qr.second.is_zero(), "cyclotomic division not exact");
            phi_d = qr.first;
            cache.emplace(d, phi_d);
        }
        den = den * phi_d;
    }
    auto qr = num.divmod(den);
    check_internal(qr.second.is_zero(), "cyclotomic division not exact");
    cache.emplace(n, qr.first);
    return qr.first;
}

} // namespace indexp
