#include "indexp/numtheory.hpp"

#include "indexp/errors.hpp"

#include <algorithm>
#include <numeric>

namespace indexp {

long gcd_long(long a, long b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

long lcm_long(long a, long b) {
    if (a == 0 || b == 0) return 0;
    return a / gcd_long(a, b) * b;
}

bool is_prime(long n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (long d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

long next_prime(long n) {
    long c = n + 1;
    if (c <= 2) return 2;
    if (c % 2 == 0) ++c;
    while (!is_prime(c)) c += 2;
    return c;
}

int euler_phi(int n) {
    check_input(n >= 1, "euler_phi: n must be positive");
    int result = n;
    int m = n;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

std::vector<int> prime_factors(int n) {
    std::vector<int> ps;
    int m = n;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            ps.push_back(p);
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) ps.push_back(m);
    return ps;
}

std::vector<int> divisors(int n) {
    std::vector<int> ds;
    for (int d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            ds.push_back(d);
            if (d != n / d) ds.push_back(n / d);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

int normalize_conductor(int m) {
    check_input(m >= 1, "conductor must be positive");
    if (m % 4 == 2) return m / 2;
    return m;
}

std::vector<int> units_mod(int m) {
    if (m == 1) return {0};
    std::vector<int> us;
    for (int t = 1; t < m; ++t)
        if (gcd_long(t, m) == 1) us.push_back(t);
    return us;
}

long pow_mod(long base, long exp, long mod) {
    base %= mod;
    if (base < 0) base += mod;
    long result = 1;
    while (exp > 0) {
        if (exp & 1) result = result * base % mod;
        base = base * base % mod;
        exp >>= 1;
    }
    return result;
}

long inv_mod(long a, long mod) {
    a %= mod;
    if (a < 0) a += mod;
    long t = 0, newt = 1, r = mod, newr = a;
    while (newr != 0) {
        long q = r / newr;
        long tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    check_input(r == 1, "inv_mod: element not invertible");
    return t < 0 ? t + mod : t;
}

long sqrt_mod(long a, long p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) return 0;
    if (p == 2) return a;
    if (pow_mod(a, (p - 1) / 2, p) != 1) return -1;
    if (p % 4 == 3) return pow_mod(a, (p + 1) / 4, p);
    // Tonelli-Shanks
    long q = p - 1, s = 0;
    while (q % 2 == 0) {
        q /= 2;
        ++s;
    }
    long z = 2;
    while (pow_mod(z, (p - 1) / 2, p) == 1) ++z;
    long m = s;
    long c = pow_mod(z, q, p);
    long t = pow_mod(a, q, p);
    long r = pow_mod(a, (q + 1) / 2, p);
    while (t != 1) {
        long i = 0, tt = t;
        while (tt != 1) {
            tt = tt * tt % p;
            ++i;
        }
        long b = pow_mod(c, 1L << (m - i - 1), p);
        m = i;
        c = b * b % p;
        t = t * c % p;
        r = r * b % p;
    }
    return r;
}

long primitive_root(long p) {
    if (p == 2) return 1;
    std::vector<long> qs;
    long n = p - 1;
    for (long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            qs.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) qs.push_back(n);
    for (long g = 2; g < p; ++g) {
        bool ok = true;
        for (long q : qs) {
            if (pow_mod(g, (p - 1) / q, p) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) return g;
    }
    throw InternalError("primitive_root: none found");
}

} // namespace indexp
