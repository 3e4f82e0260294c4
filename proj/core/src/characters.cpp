#include "resdiv/characters.hpp"

#include "resdiv/arith.hpp"

#include <numbers>
#include <stdexcept>

namespace resdiv {

std::uint64_t smallest_primitive_root(std::uint64_t s) {
    if (s < 3 || !is_prime(s))
        throw std::invalid_argument("smallest_primitive_root: s must be an odd prime");
    const auto group = factorize(s - 1);
    for (std::uint64_t g = 2; g < s; ++g) {
        bool primitive = true;
        for (const auto& [p, e] : group.factors) {
            if (pow_mod(g, (s - 1) / p, s) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) return g;
    }
    throw std::logic_error("smallest_primitive_root: none found");  // unreachable for prime s
}

CharacterTable::CharacterTable(std::uint64_t s) : s_(s) {
    if (s < 3 || s > (std::uint64_t{1} << 31) || !is_prime(s))
        throw std::invalid_argument("CharacterTable: s must be prime, 3 <= s <= 2^31");
    g_ = smallest_primitive_root(s);
    ind_.assign(s, 0);
    std::uint64_t x = 1;
    for (std::uint64_t k = 0; k + 1 < s; ++k) {
        ind_[x] = static_cast<std::uint32_t>(k);
        x = mul_mod(x, g_, s);
    }
}

std::uint32_t CharacterTable::index_of(std::uint64_t x) const {
    const std::uint64_t r = x % s_;
    if (r == 0) throw std::invalid_argument("index_of: x divisible by the modulus");
    return ind_[r];
}

std::complex<double> CharacterTable::value(std::uint64_t j, std::int64_t x) const {
    if (j > s_ - 2) throw std::invalid_argument("char_value: character index out of range");
    const std::int64_t sm = static_cast<std::int64_t>(s_);
    std::int64_t r = x % sm;
    if (r < 0) r += sm;
    if (r == 0) return {0.0, 0.0};
    const std::uint64_t n = s_ - 1;
    const std::uint64_t t = j * static_cast<std::uint64_t>(ind_[r]) % n;
    return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(t) /
                               static_cast<double>(n));
}

std::complex<double> char_value(const CharacterTable& table, std::uint64_t j, std::int64_t x) {
    return table.value(j, x);
}

std::complex<double> char_sum_naive(const CharacterTable& table, std::uint64_t j,
                                    std::uint64_t Z) {
    if (Z == 0 || Z > table.modulus())
        throw std::invalid_argument("char_sum_naive: need 1 <= Z <= s");
    std::complex<double> acc{0.0, 0.0};
    for (std::uint64_t z = 1; z <= Z; ++z) acc += table.value(j, static_cast<std::int64_t>(z));
    return acc;
}

CharSumVector all_char_sums(const CharacterTable& table, std::uint64_t Z,
                            std::size_t naive_threshold) {
    const std::uint64_t s = table.modulus();
    if (Z == 0 || Z > s) throw std::invalid_argument("all_char_sums: need 1 <= Z <= s");
    const std::uint64_t n = s - 1;
    // v[k] = #{z <= Z : ind[z] = k}; the z = s term (if any) contributes 0
    std::vector<std::complex<double>> v(n, std::complex<double>{0.0, 0.0});
    const std::uint64_t zmax = std::min(Z, s - 1);
    for (std::uint64_t z = 1; z <= zmax; ++z) v[table.index_of(z)] += 1.0;
    // S_j = sum_k v[k] e(+jk/n) = conj of the forward transform of real v
    auto f = dft_forward(std::move(v), naive_threshold);
    CharSumVector out;
    out.s = s;
    out.Z = Z;
    out.values.resize(n);
    for (std::uint64_t j = 0; j < n; ++j) out.values[j] = std::conj(f[j]);
    return out;
}

double max_nonprincipal_abs(const CharacterTable& table, std::uint64_t Z) {
    const auto sums = all_char_sums(table, Z);
    double best = 0.0;
    for (std::size_t j = 1; j < sums.values.size(); ++j)
        best = std::max(best, std::abs(sums.values[j]));
    return best;
}

double pv_burgess_bound(std::uint64_t s, std::uint64_t Z, int nu, double eps) {
    if (Z > s) throw std::invalid_argument("pv_burgess_bound: need Z <= s");
    if (nu < 1 || nu > 10) throw std::invalid_argument("pv_burgess_bound: need 1 <= nu <= 10");
    const double dn = static_cast<double>(nu);
    return std::pow(static_cast<double>(Z), 1.0 - 1.0 / dn) *
           std::pow(static_cast<double>(s), (dn + 1.0) / (4.0 * dn * dn) + eps);
}

double fourth_moment(const CharacterTable& table, std::uint64_t Z) {
    if (Z == 0 || Z >= table.modulus())
        throw std::invalid_argument("fourth_moment: need 1 <= Z < s");
    const auto sums = all_char_sums(table, Z);
    double acc = 0.0;
    for (std::size_t j = 1; j < sums.values.size(); ++j) {
        const double sq = std::norm(sums.values[j]);
        acc += sq * sq;
    }
    return acc;
}

std::uint64_t quadruple_oracle(std::uint64_t s, std::uint64_t Z) {
    if (!is_prime(s)) throw std::invalid_argument("quadruple_oracle: s must be prime");
    if (Z == 0 || Z >= s) throw std::invalid_argument("quadruple_oracle: need 1 <= Z < s");
    std::vector<std::uint64_t> hits(s, 0);
    for (std::uint64_t z1 = 1; z1 <= Z; ++z1)
        for (std::uint64_t z2 = 1; z2 <= Z; ++z2) ++hits[mul_mod(z1, z2, s)];
    unsigned __int128 acc = 0;
    for (std::uint64_t c : hits) acc += static_cast<unsigned __int128>(c) * c;
    return static_cast<std::uint64_t>(acc);
}

}  // namespace resdiv
