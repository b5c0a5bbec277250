#ifndef INDEXP_CYCLOTOMIC_HPP
#define INDEXP_CYCLOTOMIC_HPP

#include "indexp/polynomial.hpp"
#include "indexp/rational.hpp"

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace indexp {

// Shared per-conductor tables: Phi_m and the reduction of zeta^j to the
// power basis. Conductors here are always normalized (m = 1 or m != 2 mod 4).
struct ConductorData {
    int m;
    int phi;
    std::vector<Integer> phi_coeffs;              // Phi_m, monic, degree phi
    std::vector<std::vector<Integer>> zeta_pow;   // zeta^j in the power basis, j < max(m, 2*phi-1)
    std::vector<int> units;                       // units mod m ({0} for m = 1)
};

const ConductorData& conductor_data(int m_normalized);

// F = Q(zeta_m), stored with normalized conductor; m = 1 means F = Q.
class FieldSpec {
public:
    FieldSpec() : m_(1) {}
    explicit FieldSpec(int conductor);
    int conductor() const { return m_; }
    int degree() const;
    std::string to_string() const;
    bool operator==(const FieldSpec& o) const { return m_ == o.m_; }

private:
    int m_;
};

// Exact element of Q(zeta_m) in the power basis zeta^0 .. zeta^{phi(m)-1},
// reduced modulo Phi_m. The conductor is normalized but not minimal; use
// descend_min for the canonical minimal-field representative.
class CycNumber {
public:
    CycNumber(); // zero, conductor 1
    static CycNumber rational(const Rational& q);
    static CycNumber integer(long n) { return rational(Rational(n)); }
    // Value sum of c * zeta_m^k over the given (k, c) terms; m arbitrary >= 1.
    static CycNumber from_exponents(int m, const std::vector<std::pair<long, Rational>>& terms);
    static CycNumber zeta(int m, long k = 1);

    int conductor() const { return m_; }
    const std::vector<Rational>& coeffs() const { return c_; }
    bool is_zero() const;
    bool is_rational() const;
    Rational rational_value() const; // requires is_rational()

    std::string to_string() const;

private:
    int m_;                    // normalized conductor
    std::vector<Rational> c_;  // exactly phi(m_) coordinates
    friend CycNumber cyc_embed(const CycNumber&, int);
    friend CycNumber cyc_add(const CycNumber&, const CycNumber&);
    friend CycNumber cyc_sub(const CycNumber&, const CycNumber&);
    friend CycNumber cyc_mul(const CycNumber&, const CycNumber&);
    friend CycNumber cyc_inv(const CycNumber&);
    friend CycNumber cyc_galois(const CycNumber&, long);
    friend std::optional<CycNumber> cyc_descend_to(const CycNumber&, int);
};

// Reduce a raw coefficient vector indexed by zeta_m^0..zeta_m^{m-1} and
// descend the result to its minimal conductor.
CycNumber cyc_normalize(const std::vector<Rational>& raw_coeffs, int m);

CycNumber cyc_add(const CycNumber& a, const CycNumber& b);
CycNumber cyc_sub(const CycNumber& a, const CycNumber& b);
CycNumber cyc_mul(const CycNumber& a, const CycNumber& b);
CycNumber cyc_div(const CycNumber& a, const CycNumber& b); // b must be nonzero
CycNumber cyc_neg(const CycNumber& a);
CycNumber cyc_inv(const CycNumber& a);
CycNumber cyc_pow(const CycNumber& a, long e); // e >= 0, or a invertible

enum class CycOp { add, sub, mul, div };
CycNumber cyc_arith(const CycNumber& a, const CycNumber& b, CycOp op);

inline CycNumber operator+(const CycNumber& a, const CycNumber& b) { return cyc_add(a, b); }
inline CycNumber operator-(const CycNumber& a, const CycNumber& b) { return cyc_sub(a, b); }
inline CycNumber operator*(const CycNumber& a, const CycNumber& b) { return cyc_mul(a, b); }
inline CycNumber operator-(const CycNumber& a) { return cyc_neg(a); }

// sigma_t: zeta_m -> zeta_m^t; requires gcd(t, m) = 1.
CycNumber cyc_galois(const CycNumber& z, long t);

// Is z an element of F? Decided by Galois-fixedness; no embedding blowup.
bool cyc_membership(const CycNumber& z, const FieldSpec& F);

bool cyc_eq(const CycNumber& a, const CycNumber& b);
inline bool operator==(const CycNumber& a, const CycNumber& b) { return cyc_eq(a, b); }
inline bool operator!=(const CycNumber& a, const CycNumber& b) { return !cyc_eq(a, b); }

// Total order on representations (conductor, then coordinates); used only
// for deterministic sorting of same-conductor values.
int cyc_cmp(const CycNumber& a, const CycNumber& b);

// Rewrite at conductor M (m | M after normalization of both).
CycNumber cyc_embed(const CycNumber& z, int M);

// Coordinates at a normalized divisor conductor, if z lies in that subfield.
std::optional<CycNumber> cyc_descend_to(const CycNumber& z, int m_target);

// Canonical representative at the minimal conductor.
CycNumber cyc_descend_min(const CycNumber& z);

// true iff zeta_p lies in Q(zeta_{m_F}): p = 2 or p | m_F.
bool zeta_p_in_F(int p, const FieldSpec& F);

} // namespace indexp

#endif
