#ifndef INDEXP_NUMTHEORY_HPP
#define INDEXP_NUMTHEORY_HPP

#include <cstdint>
#include <vector>

namespace indexp {

long gcd_long(long a, long b);
long lcm_long(long a, long b);

bool is_prime(long n);
long next_prime(long n); // smallest prime > n

int euler_phi(int n);
std::vector<int> prime_factors(int n);   // distinct primes, ascending
std::vector<int> divisors(int n);        // ascending

// Smallest cyclotomic conductor representing Q(zeta_m): m = 1 or m != 2 mod 4.
int normalize_conductor(int m);

// Units of Z/m, ascending; m = 1 gives {0} treated as the trivial unit group {1 mod 1}.
std::vector<int> units_mod(int m);

long pow_mod(long base, long exp, long mod);
long inv_mod(long a, long mod);
// Square root mod an odd prime p; returns -1 if none exists.
long sqrt_mod(long a, long p);
// A generator of (Z/p)^* for prime p.
long primitive_root(long p);

} // namespace indexp

#endif
