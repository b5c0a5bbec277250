#include "indexp/factor.hpp"

#include "indexp/errors.hpp"
#include "indexp/numtheory.hpp"

#include <algorithm>
#include <map>

namespace indexp {

namespace {

// ---------- arithmetic for polynomials over F_q (q a small odd prime) ----------

using QPoly = std::vector<long>; // coefficients in [0, q), lowest first, trimmed

void qp_trim(QPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

QPoly qp_mul(const QPoly& a, const QPoly& b, long q) {
    if (a.empty() || b.empty()) return {};
    QPoly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = (c[i + j] + a[i] * b[j]) % q;
    }
    qp_trim(c);
    return c;
}

// Remainder of a by monic-normalized b.
QPoly qp_mod(QPoly a, const QPoly& b, long q) {
    long inv_lead = inv_mod(b.back(), q);
    while (a.size() >= b.size()) {
        long c = a.back() * inv_lead % q;
        if (c != 0) {
            std::size_t off = a.size() - b.size();
            for (std::size_t j = 0; j < b.size(); ++j)
                a[off + j] = ((a[off + j] - c * b[j]) % q + q) % q;
        }
        a.pop_back();
        qp_trim(a);
        if (a.size() < b.size()) break;
    }
    return a;
}

QPoly qp_gcd(QPoly a, QPoly b, long q) {
    while (!b.empty()) {
        QPoly r = qp_mod(a, b, q);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        long inv = inv_mod(a.back(), q);
        for (auto& x : a) x = x * inv % q;
    }
    return a;
}

QPoly qp_derivative(const QPoly& f, long q) {
    if (f.size() < 2) return {};
    QPoly d(f.size() - 1);
    for (std::size_t i = 1; i < f.size(); ++i) d[i - 1] = f[i] * (static_cast<long>(i) % q) % q;
    qp_trim(d);
    return d;
}

QPoly qp_monic(QPoly f, long q) {
    if (f.empty()) return f;
    long inv = inv_mod(f.back(), q);
    for (auto& x : f) x = x * inv % q;
    return f;
}

// x^q mod f by square-and-multiply.
QPoly qp_xq_mod(const QPoly& f, long q) {
    QPoly result{1};
    QPoly base{0, 1};
    long e = q;
    while (e > 0) {
        if (e & 1) result = qp_mod(qp_mul(result, base, q), f, q);
        base = qp_mod(qp_mul(base, base, q), f, q);
        e >>= 1;
    }
    return result;
}

// Berlekamp subalgebra basis of F_q[x]/(f) for squarefree monic f.
// Returns the kernel basis of (Frobenius - identity) in RREF order.
std::vector<QPoly> berlekamp_basis(const QPoly& f, long q) {
    int n = static_cast<int>(f.size()) - 1;
    QPoly xq = qp_xq_mod(f, q);
    // Column j: x^{qj} mod f.
    std::vector<QPoly> cols(n);
    cols[0] = {1};
    for (int j = 1; j < n; ++j) cols[j] = qp_mod(qp_mul(cols[j - 1], xq, q), f, q);
    // Matrix M with M[i][j] = coeff_i(cols[j]) - delta_ij; kernel gives the basis.
    std::vector<std::vector<long>> m(n, std::vector<long>(n, 0));
    for (int j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < cols[j].size(); ++i) m[i][j] = cols[j][i];
        m[j][j] = ((m[j][j] - 1) % q + q) % q;
    }
    // RREF
    std::vector<int> pivot_of_col(n, -1);
    int row = 0;
    for (int col = 0; col < n && row < n; ++col) {
        int pr = -1;
        for (int r = row; r < n; ++r)
            if (m[r][col] != 0) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        std::swap(m[row], m[pr]);
        long inv = inv_mod(m[row][col], q);
        for (int c = 0; c < n; ++c) m[row][c] = m[row][c] * inv % q;
        for (int r = 0; r < n; ++r) {
            if (r == row || m[r][col] == 0) continue;
            long factor = m[r][col];
            for (int c = 0; c < n; ++c)
                m[r][c] = ((m[r][c] - factor * m[row][c]) % q + q) % q;
        }
        pivot_of_col[col] = row;
        ++row;
    }
    std::vector<QPoly> basis;
    for (int col = 0; col < n; ++col) {
        if (pivot_of_col[col] >= 0) continue;
        QPoly v(n, 0);
        v[col] = 1;
        for (int c = 0; c < n; ++c)
            if (pivot_of_col[c] >= 0) v[c] = (q - m[pivot_of_col[c]][col]) % q;
        qp_trim(v);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Full Berlekamp splitting of a squarefree monic f mod q.
std::vector<QPoly> berlekamp_factor(const QPoly& f, long q) {
    std::vector<QPoly> basis = berlekamp_basis(f, q);
    std::size_t target = basis.size();
    std::vector<QPoly> factors{qp_monic(f, q)};
    if (target <= 1) return factors;
    for (const QPoly& v : basis) {
        if (factors.size() >= target) break;
        if (v.size() <= 1) continue; // the constants split nothing
        for (long c = 0; c < q && factors.size() < target; ++c) {
            QPoly vc = v;
            if (vc.empty()) vc = {0};
            vc[0] = ((vc[0] - c) % q + q) % q;
            qp_trim(vc);
            std::vector<QPoly> next;
            for (const QPoly& g : factors) {
                if (g.size() <= 2) {
                    next.push_back(g);
                    continue;
                }
                QPoly d = qp_gcd(g, vc, q);
                if (d.size() <= 1 || d.size() == g.size()) {
                    next.push_back(g);
                } else {
                    QPoly rest = g;
                    // g / d exactly
                    QPoly quo;
                    {
                        QPoly num = g;
                        long inv_lead = inv_mod(d.back(), q);
                        quo.assign(num.size() - d.size() + 1, 0);
                        for (int i = static_cast<int>(num.size()) - 1;
                             i >= static_cast<int>(d.size()) - 1; --i) {
                            long cc = num[i] * inv_lead % q;
                            quo[i - d.size() + 1] = cc;
                            if (cc != 0)
                                for (std::size_t j = 0; j < d.size(); ++j)
                                    num[i - d.size() + 1 + j] =
                                        ((num[i - d.size() + 1 + j] - cc * d[j]) % q + q) % q;
                        }
                        qp_trim(quo);
                    }
                    next.push_back(d);
                    next.push_back(qp_monic(quo, q));
                }
            }
            factors = std::move(next);
        }
    }
    check_internal(factors.size() == target, "berlekamp: split count mismatch");
    std::sort(factors.begin(), factors.end());
    return factors;
}

// ---------- arithmetic for integer polynomials modulo M (mpz) ----------

using MPoly = std::vector<Integer>;

void mp_trim(MPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

Integer mod_pos(const Integer& a, const Integer& M) {
    Integer r = a % M;
    if (r < 0) r += M;
    return r;
}

MPoly mp_reduce(MPoly f, const Integer& M) {
    for (auto& x : f) x = mod_pos(x, M);
    mp_trim(f);
    return f;
}

MPoly mp_mul(const MPoly& a, const MPoly& b, const Integer& M) {
    if (a.empty() || b.empty()) return {};
    MPoly c(a.size() + b.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    }
    return mp_reduce(std::move(c), M);
}

MPoly mp_add(const MPoly& a, const MPoly& b, const Integer& M) {
    MPoly c(std::max(a.size(), b.size()), Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) c[i] += b[i];
    return mp_reduce(std::move(c), M);
}

MPoly mp_sub(const MPoly& a, const MPoly& b, const Integer& M) {
    MPoly c(std::max(a.size(), b.size()), Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) c[i] -= b[i];
    return mp_reduce(std::move(c), M);
}

// divmod by a monic divisor.
std::pair<MPoly, MPoly> mp_divmod_monic(MPoly a, const MPoly& b, const Integer& M) {
    check_internal(!b.empty() && b.back() == 1, "mp_divmod_monic: divisor not monic");
    if (a.size() < b.size()) return {{}, std::move(a)};
    MPoly quo(a.size() - b.size() + 1, Integer(0));
    for (int i = static_cast<int>(a.size()) - 1; i >= static_cast<int>(b.size()) - 1; --i) {
        Integer c = mod_pos(a[i], M);
        quo[i - b.size() + 1] = c;
        if (c != 0)
            for (std::size_t j = 0; j < b.size(); ++j)
                a[i - b.size() + 1 + j] -= c * b[j];
    }
    return {mp_reduce(std::move(quo), M), mp_reduce(std::move(a), M)};
}

MPoly mp_from_qpoly(const QPoly& f) {
    MPoly g;
    g.reserve(f.size());
    for (long x : f) g.emplace_back(x);
    return g;
}

// Extended gcd of coprime g, h mod prime q: s*g + t*h = 1.
std::pair<MPoly, MPoly> mp_bezout_mod_q(const MPoly& g, const MPoly& h, long q) {
    auto to_q = [&](const MPoly& f) {
        QPoly r(f.size());
        for (std::size_t i = 0; i < f.size(); ++i) {
            Integer v = mod_pos(f[i], Integer(q));
            r[i] = v.get_si();
        }
        qp_trim(r);
        return r;
    };
    QPoly a = to_q(g), b = to_q(h);
    QPoly r0 = a, r1 = b;
    QPoly s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
        // divide r0 by r1
        QPoly rem = r0;
        long inv_lead = inv_mod(r1.back(), q);
        QPoly quo(rem.size() >= r1.size() ? rem.size() - r1.size() + 1 : 0, 0);
        for (int i = static_cast<int>(rem.size()) - 1;
             i >= static_cast<int>(r1.size()) - 1 && !quo.empty(); --i) {
            long c = rem[i] * inv_lead % q;
            quo[i - r1.size() + 1] = c;
            if (c != 0)
                for (std::size_t j = 0; j < r1.size(); ++j)
                    rem[i - r1.size() + 1 + j] = ((rem[i - r1.size() + 1 + j] - c * r1[j]) % q + q) % q;
        }
        qp_trim(rem);
        auto combine = [&](const QPoly& x0, const QPoly& x1) {
            // x0 - quo * x1
            QPoly p = qp_mul(quo, x1, q);
            QPoly r(std::max(x0.size(), p.size()), 0);
            for (std::size_t i = 0; i < x0.size(); ++i) r[i] = x0[i];
            for (std::size_t i = 0; i < p.size(); ++i) r[i] = ((r[i] - p[i]) % q + q) % q;
            qp_trim(r);
            return r;
        };
        QPoly s2 = combine(s0, s1), t2 = combine(t0, t1);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    check_internal(r0.size() == 1, "hensel: initial factors not coprime mod q");
    long inv = inv_mod(r0[0], q);
    for (auto& x : s0) x = x * inv % q;
    for (auto& x : t0) x = x * inv % q;
    return {mp_from_qpoly(s0), mp_from_qpoly(t0)};
}

// One quadratic Hensel step: from f = g h (mod M), s g + t h = 1 (mod M)
// to the same congruences mod M^2. f, g, h monic.
void hensel_step(const MPoly& f, MPoly& g, MPoly& h, MPoly& s, MPoly& t, const Integer& M) {
    Integer M2 = M * M;
    MPoly e = mp_sub(f, mp_mul(g, h, M2), M2);
    auto [q1, r1] = mp_divmod_monic(mp_mul(s, e, M2), h, M2);
    MPoly g1 = mp_add(mp_add(g, mp_mul(t, e, M2), M2), mp_mul(q1, g, M2), M2);
    MPoly h1 = mp_add(h, r1, M2);
    MPoly b = mp_sub(mp_add(mp_mul(s, g1, M2), mp_mul(t, h1, M2), M2), MPoly{Integer(1)}, M2);
    auto [c1, d1] = mp_divmod_monic(mp_mul(s, b, M2), h1, M2);
    MPoly s1 = mp_sub(s, d1, M2);
    MPoly t1 = mp_sub(mp_sub(t, mp_mul(t, b, M2), M2), mp_mul(c1, g1, M2), M2);
    g = std::move(g1);
    h = std::move(h1);
    s = std::move(s1);
    t = std::move(t1);
}

// Lift the factorization f = prod(parts) (mod q) to modulus >= target, f monic.
// Recursive binary splitting; returns factors modulo the final modulus, which
// is reported through `modulus`.
void hensel_lift_list(const MPoly& f, std::vector<MPoly> parts, long q, const Integer& target,
                      std::vector<MPoly>& out, Integer& modulus) {
    // Final modulus: q^(2^k) >= target, shared by all recursion branches.
    Integer M(q);
    while (M < target) M = M * M;
    modulus = M;

    struct Frame {
        MPoly f;
        std::vector<MPoly> parts;
    };
    std::vector<Frame> stack{{f, std::move(parts)}};
    while (!stack.empty()) {
        Frame fr = std::move(stack.back());
        stack.pop_back();
        if (fr.parts.size() == 1) {
            out.push_back(mp_reduce(std::move(fr.f), M));
            continue;
        }
        std::size_t half = fr.parts.size() / 2;
        MPoly g{Integer(1)}, h{Integer(1)};
        Integer Q(q);
        for (std::size_t i = 0; i < half; ++i) g = mp_mul(g, fr.parts[i], Q);
        for (std::size_t i = half; i < fr.parts.size(); ++i) h = mp_mul(h, fr.parts[i], Q);
        auto [s, t] = mp_bezout_mod_q(g, h, q);
        Integer Mi(q);
        while (Mi < M) {
            hensel_step(fr.f, g, h, s, t, Mi);
            Mi = Mi * Mi;
        }
        g = mp_reduce(std::move(g), M);
        h = mp_reduce(std::move(h), M);
        Frame left{g, {fr.parts.begin(), fr.parts.begin() + half}};
        Frame right{h, {fr.parts.begin() + half, fr.parts.end()}};
        stack.push_back(std::move(left));
        stack.push_back(std::move(right));
    }
}

Integer poly_height(const std::vector<Integer>& f) {
    Integer h(0);
    for (const auto& c : f) {
        Integer a = c >= 0 ? c : Integer(-c);
        if (a > h) h = a;
    }
    return h;
}

RatPoly ratpoly_from_integers(const std::vector<Integer>& v) {
    std::vector<Rational> c;
    c.reserve(v.size());
    for (const auto& z : v) c.emplace_back(z);
    return RatPoly(std::move(c));
}

std::vector<Integer> symmetric_rep(const MPoly& f, const Integer& M) {
    std::vector<Integer> r(f.size());
    Integer half = M / 2;
    for (std::size_t i = 0; i < f.size(); ++i) r[i] = f[i] > half ? Integer(f[i] - M) : f[i];
    return r;
}

int ratpoly_cmp(const RatPoly& a, const RatPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    return rat_vec_cmp(a.coeffs(), b.coeffs());
}

// Factor a squarefree monic integer polynomial, degree >= 1.
std::vector<RatPoly> factor_squarefree_monic(const std::vector<Integer>& P) {
    int n = static_cast<int>(P.size()) - 1;
    if (n == 1) return {ratpoly_from_integers(P)};

    // Pick a prime keeping P squarefree mod q, preferring few modular factors.
    long q = 0;
    std::vector<QPoly> mod_factors;
    long candidate = 2;
    int tried = 0;
    while (true) {
        candidate = next_prime(candidate);
        Integer lead_mod = mod_pos(P.back(), Integer(candidate));
        if (lead_mod == 0) continue;
        QPoly fq(P.size());
        for (std::size_t i = 0; i < P.size(); ++i) fq[i] = mod_pos(P[i], Integer(candidate)).get_si();
        qp_trim(fq);
        QPoly d = qp_gcd(fq, qp_derivative(fq, candidate), candidate);
        if (d.size() != 1) continue;
        std::vector<QPoly> fs = berlekamp_factor(qp_monic(fq, candidate), candidate);
        if (q == 0 || fs.size() < mod_factors.size()) {
            q = candidate;
            mod_factors = std::move(fs);
        }
        ++tried;
        if (mod_factors.size() == 1 || tried >= 3) break;
    }
    if (mod_factors.size() == 1) return {ratpoly_from_integers(P)}; // irreducible

    // Hensel lift beyond the factor-coefficient bound.
    Integer height = poly_height(P);
    Integer bound = height + 1;
    mpz_class sq;
    mpz_sqrt(sq.get_mpz_t(), Integer(n + 1).get_mpz_t());
    bound *= (sq + 1);
    mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), n);
    Integer target = 2 * bound + 1;

    std::vector<MPoly> parts;
    parts.reserve(mod_factors.size());
    for (const auto& g : mod_factors) parts.push_back(mp_from_qpoly(g));
    std::vector<MPoly> lifted;
    Integer M;
    hensel_lift_list(mp_reduce(MPoly(P.begin(), P.end()), [&] {
                         Integer t(q);
                         while (t < target) t = t * t;
                         return t;
                     }()),
                     parts, q, target, lifted, M);
    std::sort(lifted.begin(), lifted.end());

    // Subset recombination with exact trial division.
    std::vector<RatPoly> result;
    RatPoly rest = ratpoly_from_integers(P);
    std::vector<MPoly> pool = std::move(lifted);
    std::size_t d = 1;
    while (2 * d <= pool.size()) {
        bool found = false;
        std::vector<std::size_t> idx(d);
        for (std::size_t i = 0; i < d; ++i) idx[i] = i;
        while (true) {
            MPoly cand{Integer(1)};
            for (std::size_t i : idx) cand = mp_mul(cand, pool[i], M);
            RatPoly candidate = ratpoly_from_integers(symmetric_rep(cand, M));
            auto [quo, rem] = rest.divmod(candidate);
            if (rem.is_zero()) {
                result.push_back(candidate);
                rest = quo;
                std::vector<MPoly> np;
                for (std::size_t i = 0; i < pool.size(); ++i)
                    if (std::find(idx.begin(), idx.end(), i) == idx.end())
                        np.push_back(std::move(pool[i]));
                pool = std::move(np);
                found = true;
                break;
            }
            // next lexicographic combination
            int pos = static_cast<int>(d) - 1;
            while (pos >= 0 && idx[pos] == pool.size() - d + pos) --pos;
            if (pos < 0) break;
            ++idx[pos];
            for (std::size_t i = pos + 1; i < d; ++i) idx[i] = idx[i - 1] + 1;
        }
        if (!found) ++d;
    }
    if (rest.degree() >= 1) result.push_back(rest);
    check_internal(!result.empty(), "factor: empty result");
    return result;
}

// Factor a squarefree primitive integer polynomial (positive lc).
std::vector<RatPoly> factor_squarefree(const std::vector<Integer>& P) {
    int n = static_cast<int>(P.size()) - 1;
    if (n == 1) return {ratpoly_from_integers(P)};
    const Integer& L = P.back();
    if (L == 1) return factor_squarefree_monic(P);
    // Monicize by the substitution Phat(X) = L^(n-1) P(X/L).
    std::vector<Integer> Phat(P.size());
    Phat[n] = 1;
    Integer pw(1);
    for (int i = n - 1; i >= 0; --i) {
        Phat[i] = P[i] * pw;
        pw *= L;
    }
    std::vector<RatPoly> hat_factors = factor_squarefree_monic(Phat);
    std::vector<RatPoly> result;
    for (const auto& g : hat_factors) {
        // Undo: g(L*X), then primitive part.
        std::vector<Rational> c(g.coeffs());
        Rational scale(1);
        for (std::size_t i = 0; i < c.size(); ++i) {
            c[i] *= scale;
            scale *= L;
        }
        RatPoly back((std::vector<Rational>(c)));
        result.push_back(ratpoly_from_integers(back.primitive_integer_coeffs()));
    }
    return result;
}

} // namespace

std::vector<std::pair<RatPoly, int>> squarefree_decomposition(const RatPoly& f) {
    check_input(!f.is_zero(), "squarefree decomposition of zero");
    std::vector<std::pair<RatPoly, int>> parts;
    if (f.degree() < 1) return parts;
    RatPoly a = f.monic();
    // Yun's algorithm.
    RatPoly d = poly_gcd(a, a.derivative());
    RatPoly b = a.divmod(d).first;
    RatPoly c = a.derivative().divmod(d).first;
    int i = 1;
    while (b.degree() >= 1) {
        RatPoly e = c - b.derivative();
        RatPoly part = poly_gcd(b, e);
        if (part.degree() >= 1) parts.emplace_back(part, i);
        b = b.divmod(part).first;
        c = e.divmod(part).first;
        ++i;
    }
    return parts;
}

std::vector<RatPoly> factor_over_Q(const RatPoly& f) {
    check_input(!f.is_zero(), "factor_over_Q: zero polynomial");
    std::vector<RatPoly> result;
    if (f.degree() < 1) return result;
    for (const auto& [part, mult] : squarefree_decomposition(f)) {
        std::vector<RatPoly> fs = factor_squarefree(part.primitive_integer_coeffs());
        for (const auto& g : fs)
            for (int k = 0; k < mult; ++k) result.push_back(g);
    }
    std::sort(result.begin(), result.end(),
              [](const RatPoly& a, const RatPoly& b) { return ratpoly_cmp(a, b) < 0; });
    // The product times content must reproduce f exactly.
    RatPoly prod = RatPoly::constant(Rational(1));
    for (const auto& g : result) prod = prod * g;
    RatPoly scaled = prod.scaled(f.leading() / prod.leading());
    check_internal(scaled == f, "factor_over_Q: product check failed");
    return result;
}

} // namespace indexp
