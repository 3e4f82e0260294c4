#include "resdiv/congruences.hpp"

#include "resdiv/arith.hpp"

#include <numeric>
#include <stdexcept>

namespace resdiv {

namespace {

constexpr std::uint64_t kNaiveWorkCap = 100'000'000;

void require_positive(std::uint64_t v, const char* what) {
    if (v == 0) throw std::invalid_argument(std::string(what) + " must be positive");
}

void require_R_inputs(std::uint64_t s, std::uint64_t X, std::uint64_t Y, std::uint64_t Z) {
    if (!is_prime(s)) throw std::invalid_argument("count_R: s must be prime");
    if (X == 0 || Y == 0 || Z == 0 || X >= s || Y >= s || Z >= s)
        throw std::invalid_argument("count_R: ranges must satisfy 1 <= X,Y,Z < s");
}

}  // namespace

ResidueHistogram::ResidueHistogram(std::uint64_t q) : q_(q), counts_(q, 0) {
    require_positive(q, "ResidueHistogram: q");
}

void merge_into(ResidueHistogram& dst, const ResidueHistogram& src) {
    if (dst.modulus() != src.modulus())
        throw std::invalid_argument("merge_into: modulus mismatch");
    for (std::uint64_t r = 0; r < src.modulus(); ++r) dst.add(r, src.raw()[r]);
}

ResidueHistogram count_T_rows(std::uint64_t q, std::uint64_t m_lo, std::uint64_t m_hi,
                              std::uint64_t N) {
    require_positive(q, "count_T: q");
    require_positive(N, "count_T: N");
    ResidueHistogram hist(q);
    for (std::uint64_t m = m_lo; m <= m_hi; ++m) {
        const std::uint64_t mm = m % q;
        const std::uint64_t g = std::gcd(mm, q);  // gcd(0, q) = q
        const std::uint64_t period = q / g;
        // n == n0 (mod period) hits floor((N - n0)/period) + 1 values n <= N
        const std::uint64_t n_top = std::min(period, N);
        for (std::uint64_t n0 = 1; n0 <= n_top; ++n0)
            hist.add(mul_mod(mm, n0, q), (N - n0) / period + 1);
    }
    return hist;
}

ResidueHistogram count_T_all(std::uint64_t q, std::uint64_t M, std::uint64_t N) {
    require_positive(M, "count_T: M");
    return count_T_rows(q, 1, M, N);
}

ResidueHistogram count_T_star_all(std::uint64_t s, std::uint64_t X, std::uint64_t Y) {
    require_positive(s, "count_T_star: s");
    require_positive(X, "count_T_star: X");
    require_positive(Y, "count_T_star: Y");
    ResidueHistogram hist(s);
    for (std::uint64_t x = 1; x <= X; ++x) {
        const std::uint64_t xm = x % s;
        if (std::gcd(xm, s) != 1) continue;
        const std::uint64_t n_top = std::min(s, Y);
        for (std::uint64_t n0 = 1; n0 <= n_top; ++n0)
            hist.add(mul_mod(xm, n0, s), (Y - n0) / s + 1);
    }
    return hist;
}

ResidueHistogram count_R_all(std::uint64_t s, std::uint64_t X, std::uint64_t Y,
                             std::uint64_t Z) {
    require_R_inputs(s, X, Y, Z);
    const ResidueHistogram pairs = count_T_all(s, X, Y);
    ResidueHistogram hist(s);
    for (std::uint64_t a = 1; a < s; ++a) {
        std::uint64_t acc = 0;
        for (std::uint64_t z = 1; z <= Z; ++z) acc += pairs.at(mul_mod(a, z, s));
        hist.add(a, acc);
    }
    return hist;
}

ResidueHistogram naive_count_T(std::uint64_t q, std::uint64_t M, std::uint64_t N) {
    require_positive(q, "naive_count_T: q");
    require_positive(M, "naive_count_T: M");
    require_positive(N, "naive_count_T: N");
    if (static_cast<unsigned __int128>(M) * N > kNaiveWorkCap)
        throw std::invalid_argument("naive_count_T: M*N exceeds the work cap");
    ResidueHistogram hist(q);
    for (std::uint64_t m = 1; m <= M; ++m)
        for (std::uint64_t n = 1; n <= N; ++n) hist.add(mul_mod(m % q, n % q, q), 1);
    return hist;
}

ResidueHistogram naive_count_T_star(std::uint64_t s, std::uint64_t X, std::uint64_t Y) {
    require_positive(s, "naive_count_T_star: s");
    require_positive(X, "naive_count_T_star: X");
    require_positive(Y, "naive_count_T_star: Y");
    if (static_cast<unsigned __int128>(X) * Y > kNaiveWorkCap)
        throw std::invalid_argument("naive_count_T_star: X*Y exceeds the work cap");
    ResidueHistogram hist(s);
    for (std::uint64_t x = 1; x <= X; ++x) {
        if (std::gcd(x % s, s) != 1) continue;
        for (std::uint64_t y = 1; y <= Y; ++y) hist.add(mul_mod(x % s, y % s, s), 1);
    }
    return hist;
}

ResidueHistogram naive_count_R(std::uint64_t s, std::uint64_t X, std::uint64_t Y,
                               std::uint64_t Z) {
    require_R_inputs(s, X, Y, Z);
    if (static_cast<unsigned __int128>(X) * Y * Z > kNaiveWorkCap)
        throw std::invalid_argument("naive_count_R: X*Y*Z exceeds the work cap");
    // x y == a z (mod s)  <=>  a == x y z^{-1}, every z < s is a unit
    std::vector<std::uint64_t> zinv(Z + 1);
    for (std::uint64_t z = 1; z <= Z; ++z)
        zinv[z] = (s == 2) ? 1 : mod_inverse(static_cast<std::int64_t>(z), s);
    ResidueHistogram hist(s);
    for (std::uint64_t x = 1; x <= X; ++x)
        for (std::uint64_t y = 1; y <= Y; ++y) {
            const std::uint64_t xy = mul_mod(x, y, s);
            for (std::uint64_t z = 1; z <= Z; ++z) hist.add(mul_mod(xy, zinv[z], s), 1);
        }
    return hist;
}

}  // namespace resdiv
