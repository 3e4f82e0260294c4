#include "resdiv/arith.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace resdiv {

Factorization factorize(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("factorize: n must be positive");
    Factorization f;
    f.n = n;
    auto strip = [&](std::uint64_t p) {
        if (n % p != 0) return;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        f.factors.push_back({p, e});
    };
    strip(2);
    strip(3);
    // remaining prime factors are of the form 6k +/- 1
    for (std::uint64_t p = 5; p <= n / p; p += 6) {
        strip(p);
        strip(p + 2);
    }
    if (n > 1) f.factors.push_back({n, 1});
    return f;
}

std::uint64_t euler_phi(const Factorization& f) {
    std::uint64_t phi = 1;
    for (const auto& [p, e] : f.factors) {
        phi *= p - 1;
        for (int i = 1; i < e; ++i) phi *= p;
    }
    return phi;
}

std::uint64_t euler_phi(std::uint64_t n) { return euler_phi(factorize(n)); }

int mobius(const Factorization& f) {
    for (const auto& pp : f.factors)
        if (pp.exponent >= 2) return 0;
    return f.factors.size() % 2 == 0 ? 1 : -1;
}

int mobius(std::uint64_t n) { return mobius(factorize(n)); }

std::vector<std::uint64_t> divisors_of(const Factorization& f) {
    std::vector<std::uint64_t> divs{1};
    for (const auto& [p, e] : f.factors) {
        const std::size_t base = divs.size();
        std::uint64_t pe = 1;
        for (int i = 0; i < e; ++i) {
            pe *= p;
            for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pe);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

ArithContext make_arith_context(std::uint64_t q) {
    ArithContext ctx;
    ctx.q = q;
    ctx.factorization = factorize(q);
    ctx.phi = euler_phi(ctx.factorization);
    ctx.mu = mobius(ctx.factorization);
    ctx.divisors = divisors_of(ctx.factorization);
    return ctx;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    if (n % 3 == 0) return n == 3;
    for (std::uint64_t p = 5; p <= n / p; p += 6) {
        if (n % p == 0 || n % (p + 2) == 0) return false;
    }
    return true;
}

std::uint64_t coprime_count(std::uint64_t s, std::uint64_t K) {
    if (s == 0) throw std::invalid_argument("coprime_count: s must be positive");
    const auto f = factorize(s);
    const std::size_t w = f.factors.size();  // <= 15 for s < 2^63
    __int128 acc = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << w); ++mask) {
        std::uint64_t d = 1;
        int bits = 0;
        for (std::size_t i = 0; i < w; ++i)
            if (mask >> i & 1) {
                d *= f.factors[i].prime;
                ++bits;
            }
        const __int128 term = K / d;
        acc += (bits % 2 == 0) ? term : -term;
    }
    return static_cast<std::uint64_t>(acc);
}

std::uint64_t capital_phi_totient_form(std::uint64_t q, std::uint64_t d) {
    if (q == 0 || d == 0 || q % d != 0)
        throw std::invalid_argument("capital_phi: d must divide q");
    std::uint64_t total = 0;
    for (std::uint64_t e : divisors_of(factorize(d))) total += e * euler_phi(q / e);
    return total;
}

std::uint64_t capital_phi_mobius_form(std::uint64_t q, std::uint64_t d) {
    if (q == 0 || d == 0 || q % d != 0)
        throw std::invalid_argument("capital_phi: d must divide q");
    std::uint64_t total = 0;
    for (std::uint64_t e : divisors_of(factorize(d))) {
        const std::uint64_t m = q / e;
        std::int64_t inner = 0;
        for (std::uint64_t fdiv : divisors_of(factorize(m)))
            inner += static_cast<std::int64_t>(fdiv) * mobius(m / fdiv);
        total += e * static_cast<std::uint64_t>(inner);
    }
    return total;
}

std::uint64_t capital_phi(std::uint64_t q, std::uint64_t d) {
    const std::uint64_t a = capital_phi_totient_form(q, d);
    const std::uint64_t b = capital_phi_mobius_form(q, d);
    if (a != b) throw std::logic_error("capital_phi: defining forms disagree");
    return a;
}

std::uint64_t restricted_tau(std::uint64_t M, std::uint64_t N, std::uint64_t k) {
    if (M == 0 || N == 0 || k == 0)
        throw std::invalid_argument("restricted_tau: M, N, k must be positive");
    std::uint64_t count = 0;
    for (std::uint64_t m = 1; m <= k / m; ++m) {
        if (k % m != 0) continue;
        const std::uint64_t n = k / m;
        if (m <= M && n <= N) ++count;
        if (m != n && n <= M && m <= N) ++count;
    }
    return count;
}

std::uint64_t mod_inverse(std::int64_t x, std::uint64_t s) {
    if (s < 2) throw std::invalid_argument("mod_inverse: s must be >= 2");
    const std::int64_t sm = static_cast<std::int64_t>(s);
    std::int64_t r = x % sm;
    if (r < 0) r += sm;
    // extended Euclid on (r, s)
    std::int64_t old_r = r, rr = sm;
    std::int64_t old_t = 1, t = 0;
    while (rr != 0) {
        const std::int64_t qq = old_r / rr;
        std::int64_t tmp = old_r - qq * rr;
        old_r = rr;
        rr = tmp;
        tmp = old_t - qq * t;
        old_t = t;
        t = tmp;
    }
    if (old_r != 1) throw std::invalid_argument("mod_inverse: gcd(x, s) != 1");
    if (old_t < 0) old_t += sm;
    return static_cast<std::uint64_t>(old_t);
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    if (m == 1) return 0;
    std::uint64_t result = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

}  // namespace resdiv
