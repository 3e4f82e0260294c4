#pragma once

#include <cstdint>
#include <vector>

namespace resdiv {

struct PrimePower {
    std::uint64_t prime = 0;
    int exponent = 0;
    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization of n, primes strictly ascending; empty for n = 1.
struct Factorization {
    std::uint64_t n = 1;
    std::vector<PrimePower> factors;
    friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// A modulus bundled with the arithmetic data the counting routines keep
/// reaching for: factorization, totient, Moebius value, sorted divisors.
struct ArithContext {
    std::uint64_t q = 1;
    Factorization factorization;
    std::uint64_t phi = 1;
    int mu = 1;                           // in {-1, 0, 1}
    std::vector<std::uint64_t> divisors;  // ascending; front() = 1, back() = q
};

/// Deterministic trial division up to sqrt(n). Rejects n = 0.
Factorization factorize(std::uint64_t n);

ArithContext make_arith_context(std::uint64_t q);

std::uint64_t euler_phi(std::uint64_t n);
std::uint64_t euler_phi(const Factorization& f);

/// 0 if n has a squared prime factor, else (-1)^(number of prime factors).
int mobius(std::uint64_t n);
int mobius(const Factorization& f);

/// All divisors of the factored integer, ascending.
std::vector<std::uint64_t> divisors_of(const Factorization& f);

/// Trial-division primality test; fine at desk scale.
bool is_prime(std::uint64_t n);

/// phi(s, K) = #{1 <= k <= K : gcd(k, s) = 1}, by inclusion-exclusion over
/// the squarefree divisors of s:  sum_{d | s} mu(d) * floor(K / d).
std::uint64_t coprime_count(std::uint64_t s, std::uint64_t K);

/// Phi(q, d) = sum_{e | d} e * phi(q / e) for d | q.  Evaluated through both
/// defining forms (totient sum and Moebius double sum), which must agree.
std::uint64_t capital_phi(std::uint64_t q, std::uint64_t d);
std::uint64_t capital_phi_totient_form(std::uint64_t q, std::uint64_t d);
std::uint64_t capital_phi_mobius_form(std::uint64_t q, std::uint64_t d);

/// tau_{M,N}(k) = #{(m, n) : 1 <= m <= M, 1 <= n <= N, m * n = k}.
/// Divisors of k enumerated by trial division up to sqrt(k).
std::uint64_t restricted_tau(std::uint64_t M, std::uint64_t N, std::uint64_t k);

/// y in [1, s-1] with x * y == 1 (mod s). Requires s >= 2, gcd(x, s) = 1.
std::uint64_t mod_inverse(std::int64_t x, std::uint64_t s);

/// (a * b) mod m with a 128-bit intermediate, exact for any m < 2^63.
std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

}  // namespace resdiv
