#pragma once

#include "resdiv/dft.hpp"

#include <complex>
#include <cstdint>
#include <vector>

namespace resdiv {

/// Discrete-log table of the unit group mod a prime s.  Character j acts on
/// units by chi_j(x) = exp(2 pi i * j * ind[x] / (s-1)) and vanishes at
/// multiples of s; j = 0 is the principal character, index s-1-j is the
/// conjugate of index j.
class CharacterTable {
public:
    /// Requires s prime, 3 <= s <= 2^31.  g is the smallest primitive root.
    explicit CharacterTable(std::uint64_t s);

    std::uint64_t modulus() const { return s_; }
    std::uint64_t generator() const { return g_; }
    std::uint64_t order() const { return s_ - 1; }

    /// Discrete log base g of x; requires x not divisible by s.
    std::uint32_t index_of(std::uint64_t x) const;

    /// chi_j(x); requires 0 <= j <= s-2.
    std::complex<double> value(std::uint64_t j, std::int64_t x) const;

private:
    std::uint64_t s_;
    std::uint64_t g_;
    std::vector<std::uint32_t> ind_;  // ind_[x] for x in [1, s-1]; ind_[0] unused
};

/// All s-1 incomplete sums S_s(Z; chi_j) = sum_{z <= Z} chi_j(z) at once.
struct CharSumVector {
    std::uint64_t s = 0;
    std::uint64_t Z = 0;
    std::vector<std::complex<double>> values;  // values[j] = S_s(Z; chi_j)
};

std::uint64_t smallest_primitive_root(std::uint64_t s);

std::complex<double> char_value(const CharacterTable& table, std::uint64_t j, std::int64_t x);

/// Literal sum over z = 1..Z; requires 1 <= Z <= s.
std::complex<double> char_sum_naive(const CharacterTable& table, std::uint64_t j,
                                    std::uint64_t Z);

/// Batch route: histogram the discrete logs of 1..Z and transform the
/// length-(s-1) indicator.  Agrees with char_sum_naive entrywise.
CharSumVector all_char_sums(const CharacterTable& table, std::uint64_t Z,
                            std::size_t naive_threshold = kDftNaiveThreshold);

/// max over nonprincipal characters of |S_s(Z; chi)|; requires s >= 3.
double max_nonprincipal_abs(const CharacterTable& table, std::uint64_t Z);

/// Z^(1 - 1/nu) * s^((nu+1)/(4 nu^2) + eps); nu = 1 is the
/// Polya-Vinogradov shape, nu >= 2 the Burgess shape.
double pv_burgess_bound(std::uint64_t s, std::uint64_t Z, int nu, double eps);

/// sum over nonprincipal characters of |S_s(Z; chi)|^4; requires 1 <= Z < s.
double fourth_moment(const CharacterTable& table, std::uint64_t Z);

/// #{(z1,z2,z3,z4) in [1,Z]^4 : z1 z2 == z3 z4 (mod s)}, by hashing the
/// Z^2 products.  Orthogonality ties this to the fourth moment:
/// sum over ALL characters of |S|^4 = (s-1) * quadruple count.
std::uint64_t quadruple_oracle(std::uint64_t s, std::uint64_t Z);

}  // namespace resdiv
