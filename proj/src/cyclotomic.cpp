#include "indexp/cyclotomic.hpp"

#include "indexp/errors.hpp"
#include "indexp/numtheory.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace indexp {

const ConductorData& conductor_data(int m) {
    check_input(m >= 1 && m % 4 != 2, "conductor_data: conductor not normalized");
    static std::map<int, std::unique_ptr<ConductorData>> cache;
    static std::mutex mx;
    std::lock_guard<std::mutex> lock(mx);
    auto it = cache.find(m);
    if (it != cache.end()) return *it->second;

    auto data = std::make_unique<ConductorData>();
    data->m = m;
    data->phi = euler_phi(m);
    RatPoly phi_poly = cyclotomic_poly(m);
    data->phi_coeffs.reserve(data->phi + 1);
    for (const auto& q : phi_poly.coeffs()) {
        check_internal(q.get_den() == 1, "cyclotomic polynomial not integral");
        data->phi_coeffs.push_back(q.get_num());
    }
    int span = std::max(m, 2 * data->phi - 1);
    data->zeta_pow.resize(span);
    data->zeta_pow[0].assign(data->phi, Integer(0));
    data->zeta_pow[0][0] = 1;
    for (int j = 1; j < span; ++j) {
        const auto& prev = data->zeta_pow[j - 1];
        std::vector<Integer> cur(data->phi, Integer(0));
        for (int i = 0; i + 1 < data->phi; ++i) cur[i + 1] = prev[i];
        const Integer& top = prev[data->phi - 1];
        if (top != 0)
            for (int i = 0; i < data->phi; ++i) cur[i] -= top * data->phi_coeffs[i];
        data->zeta_pow[j] = std::move(cur);
    }
    data->units = units_mod(m);
    auto [pos, ok] = cache.emplace(m, std::move(data));
    check_internal(ok, "conductor cache insert");
    return *pos->second;
}

FieldSpec::FieldSpec(int conductor) : m_(normalize_conductor(conductor)) {}

int FieldSpec::degree() const { return euler_phi(m_); }

std::string FieldSpec::to_string() const {
    if (m_ == 1) return "Q";
    return "Q(zeta_" + std::to_string(m_) + ")";
}

CycNumber::CycNumber() : m_(1), c_{Rational(0)} {}

CycNumber CycNumber::rational(const Rational& q) {
    CycNumber z;
    z.c_[0] = q;
    return z;
}

CycNumber CycNumber::from_exponents(int m, const std::vector<std::pair<long, Rational>>& terms) {
    check_input(m >= 1, "from_exponents: conductor must be positive");
    if (m % 4 == 2) {
        // zeta_m^k = (-1)^k * zeta_{m/2}^{k(m/2+1)/2}; m/2 is odd.
        int half = m / 2;
        std::vector<std::pair<long, Rational>> mapped;
        mapped.reserve(terms.size());
        for (const auto& [k, c] : terms) {
            long kk = k % m;
            if (kk < 0) kk += m;
            Rational cc = (kk % 2 == 1) ? Rational(-c) : c;
            long e = kk % half * ((half + 1) / 2) % half;
            mapped.emplace_back(e, cc);
        }
        return from_exponents(half, mapped);
    }
    const ConductorData& cd = conductor_data(m);
    CycNumber z;
    z.m_ = m;
    z.c_.assign(cd.phi, Rational(0));
    for (const auto& [k, c] : terms) {
        if (c == 0) continue;
        long kk = k % m;
        if (kk < 0) kk += m;
        const auto& row = cd.zeta_pow[kk];
        for (int i = 0; i < cd.phi; ++i)
            if (row[i] != 0) z.c_[i] += c * row[i];
    }
    // GMP only keeps results canonical for canonical operands; inputs may not be.
    for (auto& q : z.c_) q.canonicalize();
    return z;
}

CycNumber CycNumber::zeta(int m, long k) {
    return from_exponents(m, {{k, Rational(1)}});
}

bool CycNumber::is_zero() const {
    for (const auto& q : c_)
        if (q != 0) return false;
    return true;
}

bool CycNumber::is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rational CycNumber::rational_value() const {
    check_input(is_rational(), "rational_value: not rational");
    return c_[0];
}

std::string CycNumber::to_string() const {
    if (is_rational()) return rat_to_string(c_[0]);
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        Rational a = c_[i];
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (i == 0) {
            os << rat_to_string(a);
        } else {
            if (a != 1) os << rat_to_string(a) << "*";
            os << "z" << m_;
            if (i > 1) os << "^" << i;
        }
    }
    if (first) os << "0";
    return os.str();
}

CycNumber cyc_normalize(const std::vector<Rational>& raw_coeffs, int m) {
    check_input(m >= 1, "cyc_normalize: conductor must be positive");
    std::vector<std::pair<long, Rational>> terms;
    terms.reserve(raw_coeffs.size());
    for (std::size_t k = 0; k < raw_coeffs.size(); ++k)
        if (raw_coeffs[k] != 0) terms.emplace_back(static_cast<long>(k), raw_coeffs[k]);
    return cyc_descend_min(CycNumber::from_exponents(m, terms));
}

CycNumber cyc_embed(const CycNumber& z, int M) {
    M = normalize_conductor(M);
    if (z.m_ == M) return z;
    check_input(M % z.m_ == 0, "cyc_embed: target conductor not a multiple");
    long step = M / z.m_;
    std::vector<std::pair<long, Rational>> terms;
    for (std::size_t i = 0; i < z.c_.size(); ++i)
        if (z.c_[i] != 0) terms.emplace_back(static_cast<long>(i) * step, z.c_[i]);
    return CycNumber::from_exponents(M, terms);
}

namespace {

int common_conductor(const CycNumber& a, const CycNumber& b) {
    return static_cast<int>(lcm_long(a.conductor(), b.conductor()));
}

} // namespace

CycNumber cyc_add(const CycNumber& a, const CycNumber& b) {
    int M = common_conductor(a, b);
    CycNumber x = cyc_embed(a, M), y = cyc_embed(b, M);
    for (std::size_t i = 0; i < x.c_.size(); ++i) x.c_[i] += y.c_[i];
    return x;
}

CycNumber cyc_sub(const CycNumber& a, const CycNumber& b) {
    int M = common_conductor(a, b);
    CycNumber x = cyc_embed(a, M), y = cyc_embed(b, M);
    for (std::size_t i = 0; i < x.c_.size(); ++i) x.c_[i] -= y.c_[i];
    return x;
}

CycNumber cyc_neg(const CycNumber& a) {
    return cyc_sub(CycNumber(), a);
}

CycNumber cyc_mul(const CycNumber& a, const CycNumber& b) {
    int M = common_conductor(a, b);
    CycNumber x = cyc_embed(a, M), y = cyc_embed(b, M);
    // Polynomial product in zeta, reduced through the power table.
    std::vector<std::pair<long, Rational>> terms;
    std::size_t n = x.c_.size();
    std::vector<Rational> prod(2 * n - 1, Rational(0));
    bool any = false;
    for (std::size_t i = 0; i < n; ++i) {
        if (x.c_[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (y.c_[j] == 0) continue;
            prod[i + j] += x.c_[i] * y.c_[j];
            any = true;
        }
    }
    if (!any) {
        CycNumber zero;
        return cyc_embed(zero, M);
    }
    terms.reserve(prod.size());
    for (std::size_t k = 0; k < prod.size(); ++k)
        if (prod[k] != 0) terms.emplace_back(static_cast<long>(k), prod[k]);
    return CycNumber::from_exponents(M, terms);
}

namespace {

// Extended Euclid over Q[X]: returns (g, u) with u*a = g mod modulus, g monic gcd.
std::pair<RatPoly, RatPoly> ext_gcd_mod(const RatPoly& a, const RatPoly& modulus) {
    RatPoly r0 = modulus, r1 = a;
    RatPoly u0, u1 = RatPoly::constant(Rational(1)); // coefficients of `a`
    while (!r1.is_zero()) {
        auto [q, r] = r0.divmod(r1);
        RatPoly u2 = u0 - q * u1;
        r0 = std::move(r1);
        r1 = std::move(r);
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    Rational lead = r0.leading();
    return {r0.scaled(1 / lead), u0.scaled(1 / lead)};
}

RatPoly phi_as_ratpoly(const ConductorData& cd) {
    std::vector<Rational> v;
    v.reserve(cd.phi_coeffs.size());
    for (const auto& z : cd.phi_coeffs) v.emplace_back(z);
    return RatPoly(std::move(v));
}

} // namespace

CycNumber cyc_inv(const CycNumber& a) {
    check_input(!a.is_zero(), "division by zero");
    if (a.is_rational()) return CycNumber::rational(1 / a.c_[0]);
    const ConductorData& cd = conductor_data(a.m_);
    RatPoly az(std::vector<Rational>(a.c_));
    auto [g, u] = ext_gcd_mod(az, phi_as_ratpoly(cd));
    check_internal(g.degree() == 0, "cyc_inv: gcd with Phi_m not constant");
    std::vector<std::pair<long, Rational>> terms;
    for (int i = 0; i <= u.degree(); ++i)
        if (u[i] != 0) terms.emplace_back(i, u[i]);
    return CycNumber::from_exponents(a.m_, terms);
}

CycNumber cyc_div(const CycNumber& a, const CycNumber& b) {
    check_input(!b.is_zero(), "division by zero");
    return cyc_mul(a, cyc_inv(b));
}

CycNumber cyc_pow(const CycNumber& a, long e) {
    if (e < 0) return cyc_pow(cyc_inv(a), -e);
    CycNumber r = CycNumber::rational(Rational(1));
    CycNumber base = a;
    while (e > 0) {
        if (e & 1) r = cyc_mul(r, base);
        base = cyc_mul(base, base);
        e >>= 1;
    }
    return r;
}

CycNumber cyc_arith(const CycNumber& a, const CycNumber& b, CycOp op) {
    switch (op) {
    case CycOp::add: return cyc_add(a, b);
    case CycOp::sub: return cyc_sub(a, b);
    case CycOp::mul: return cyc_mul(a, b);
    case CycOp::div: return cyc_div(a, b);
    }
    throw InputError("cyc_arith: unknown op");
}

CycNumber cyc_galois(const CycNumber& z, long t) {
    long m = z.conductor();
    check_input(gcd_long(t, m) == 1, "cyc_galois: gcd(t, conductor) != 1");
    if (m == 1) return z;
    std::vector<std::pair<long, Rational>> terms;
    for (std::size_t i = 0; i < z.coeffs().size(); ++i)
        if (z.coeffs()[i] != 0) terms.emplace_back(static_cast<long>(i) * t % m, z.coeffs()[i]);
    return CycNumber::from_exponents(static_cast<int>(m), terms);
}

bool cyc_membership(const CycNumber& z, const FieldSpec& F) {
    int m = z.conductor();
    if (m == 1) return true;
    int g = static_cast<int>(gcd_long(m, F.conductor()));
    const ConductorData& cd = conductor_data(m);
    for (int t : cd.units) {
        if (t == 1 || t % g != 1 % g) continue;
        if (!cyc_eq(cyc_galois(z, t), z)) return false;
    }
    return true;
}

bool cyc_eq(const CycNumber& a, const CycNumber& b) {
    if (a.conductor() == b.conductor()) return a.coeffs() == b.coeffs();
    int M = static_cast<int>(lcm_long(a.conductor(), b.conductor()));
    return cyc_embed(a, M).coeffs() == cyc_embed(b, M).coeffs();
}

int cyc_cmp(const CycNumber& a, const CycNumber& b) {
    if (a.conductor() != b.conductor()) return a.conductor() < b.conductor() ? -1 : 1;
    return rat_vec_cmp(a.coeffs(), b.coeffs());
}

std::optional<CycNumber> cyc_descend_to(const CycNumber& z, int m_target) {
    int mt = normalize_conductor(m_target);
    if (mt == z.m_) return z;
    check_input(z.m_ % mt == 0, "cyc_descend_to: target does not divide conductor");
    if (mt == 1) {
        if (!z.is_rational()) return std::nullopt;
        return CycNumber::rational(z.c_[0]);
    }
    const ConductorData& cd = conductor_data(z.m_);
    int phi_t = euler_phi(mt);
    // Columns: coordinates of zeta_{mt}^j at conductor m. Solve M d = z.
    std::vector<std::vector<Rational>> mat(cd.phi, std::vector<Rational>(phi_t + 1, Rational(0)));
    for (int j = 0; j < phi_t; ++j) {
        CycNumber col = CycNumber::from_exponents(z.m_, {{static_cast<long>(j) * (z.m_ / mt), Rational(1)}});
        for (int i = 0; i < cd.phi; ++i) mat[i][j] = col.coeffs()[i];
    }
    for (int i = 0; i < cd.phi; ++i) mat[i][phi_t] = z.c_[i];
    // Gaussian elimination on the augmented system.
    int row = 0;
    std::vector<int> pivot_col;
    for (int col = 0; col < phi_t && row < cd.phi; ++col) {
        int pr = -1;
        for (int r = row; r < cd.phi; ++r)
            if (mat[r][col] != 0) {
                pr = r;
                break;
            }
        if (pr < 0) return std::nullopt; // embedded basis is independent; cannot happen
        std::swap(mat[row], mat[pr]);
        Rational inv = 1 / mat[row][col];
        for (int cdx = col; cdx <= phi_t; ++cdx) mat[row][cdx] *= inv;
        for (int r = 0; r < cd.phi; ++r) {
            if (r == row || mat[r][col] == 0) continue;
            Rational f = mat[r][col];
            for (int cdx = col; cdx <= phi_t; ++cdx) mat[r][cdx] -= f * mat[row][cdx];
        }
        pivot_col.push_back(col);
        ++row;
    }
    // Consistency: remaining rows must have zero RHS.
    for (int r = row; r < cd.phi; ++r)
        if (mat[r][phi_t] != 0) return std::nullopt;
    CycNumber out;
    out = CycNumber::from_exponents(mt, {});
    std::vector<Rational> d(phi_t, Rational(0));
    for (int k = 0; k < row; ++k) d[pivot_col[k]] = mat[k][phi_t];
    std::vector<std::pair<long, Rational>> terms;
    for (int j = 0; j < phi_t; ++j)
        if (d[j] != 0) terms.emplace_back(j, d[j]);
    return CycNumber::from_exponents(mt, terms);
}

CycNumber cyc_descend_min(const CycNumber& z) {
    CycNumber cur = z;
    bool changed = true;
    while (changed && cur.conductor() > 1) {
        changed = false;
        for (int q : prime_factors(cur.conductor())) {
            int target = normalize_conductor(cur.conductor() / q);
            if (target == cur.conductor()) continue;
            // Fixedness under Gal(Q(zeta_m)/Q(zeta_target)) before solving.
            if (!cyc_membership(cur, FieldSpec(target))) continue;
            auto down = cyc_descend_to(cur, target);
            check_internal(down.has_value(), "cyc_descend_min: rewrite failed after membership");
            cur = *down;
            changed = true;
            break;
        }
    }
    return cur;
}

bool zeta_p_in_F(int p, const FieldSpec& F) {
    check_input(p >= 2 && is_prime(p), "zeta_p_in_F: p must be prime");
    return p == 2 || F.conductor() % p == 0;
}

} // namespace indexp
