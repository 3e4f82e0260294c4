#pragma once

#include <cstdint>
#include <vector>

namespace resdiv {

/// Exact per-residue solution counts of a congruence family mod q.
/// Residues are addressed a = 1..q with a = q standing for the zero class;
/// at() reduces its argument mod q, so at(a) and at(a mod q) agree.
class ResidueHistogram {
public:
    explicit ResidueHistogram(std::uint64_t q);

    std::uint64_t modulus() const { return q_; }
    std::uint64_t at(std::uint64_t a) const { return counts_[a % q_]; }
    std::uint64_t total() const { return total_; }

    void add(std::uint64_t residue, std::uint64_t count) {
        counts_[residue % q_] += count;
        total_ += count;
    }

    /// Counts indexed by residue 0..q-1 (the a = q class sits at index 0).
    const std::vector<std::uint64_t>& raw() const { return counts_; }

    friend bool operator==(const ResidueHistogram&, const ResidueHistogram&) = default;

private:
    std::uint64_t q_;
    std::vector<std::uint64_t> counts_;
    std::uint64_t total_ = 0;
};

/// Elementwise accumulation; moduli must match.
void merge_into(ResidueHistogram& dst, const ResidueHistogram& src);

/// T_q(M,N;a) = #{(m,n) : m <= M, n <= N, m n == a (mod q)} for every a.
/// Sweeps m and counts each class of n mod q/gcd(m,q) in closed form.
ResidueHistogram count_T_all(std::uint64_t q, std::uint64_t M, std::uint64_t N);

/// Rows m in [m_lo, m_hi] of the same sweep; count_T_all is the [1, M] case
/// and any partition of the rows merges back to it.
ResidueHistogram count_T_rows(std::uint64_t q, std::uint64_t m_lo, std::uint64_t m_hi,
                              std::uint64_t N);

/// T*_s(X,Y;a): as count_T_all but only x with gcd(x,s) = 1 contribute.
ResidueHistogram count_T_star_all(std::uint64_t s, std::uint64_t X, std::uint64_t Y);

/// R_s(X,Y,Z;a) = #{(x,y,z) : x y == a z (mod s)} for a = 1..s-1, prime s,
/// ranges < s; computed as counts[a] = sum_z paircounts[a z mod s].
ResidueHistogram count_R_all(std::uint64_t s, std::uint64_t X, std::uint64_t Y,
                             std::uint64_t Z);

/// Literal O(MN) / O(XY) / O(XYZ) enumerations, bit-identical to the fast
/// routes; inputs capped at 10^8 loop iterations.
ResidueHistogram naive_count_T(std::uint64_t q, std::uint64_t M, std::uint64_t N);
ResidueHistogram naive_count_T_star(std::uint64_t s, std::uint64_t X, std::uint64_t Y);
ResidueHistogram naive_count_R(std::uint64_t s, std::uint64_t X, std::uint64_t Y,
                               std::uint64_t Z);

}  // namespace resdiv
