#pragma once

#include "resdiv/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace resdiv {

struct DeviationParams {
    std::optional<std::uint64_t> q, d, M, N, R, X, Y, Z;
    std::optional<int> nu;
    std::optional<double> delta, eps;
};

/// One computed variance statistic: the exact value, its main term, every
/// applicable upper bound at the chosen slack exponent, and the measured
/// minimal slack (the e with statistic = base * q^e; -inf when statistic
/// vanishes).
struct DeviationReport {
    DeviationParams params;
    Rational statistic;                     // >= 0, exact
    Rational main_term;
    std::optional<Rational> alt_center;     // second natural center, when distinct
    std::optional<Rational> alt_statistic;  // variance about alt_center
    bool lemma_route_used = false;          // cross-check via the R-count identity ran
    std::map<std::string, double> bounds;
    double minimal_slack = 0.0;
};

/// sum over a in [1,q] with gcd(a,q) = d of
///   (T_q(M,N;a) - M N Phi(q,d) / q^2)^2,  exact.
/// Bounds: thm_delta = M N q^eps, truelsen_delta = N^(max{7/2,4-delta}+eps)/q.
DeviationReport delta_sum(std::uint64_t q, std::uint64_t d, std::uint64_t M, std::uint64_t N,
                          double eps = 0.5, double delta = 0.5);

/// sum over a in [1,q-1] of (sum_{r<=R} T_q(M,N; a r mod q) - M N R / q)^2
/// for prime q, exact.  When M,N,R < q the same statistic is recomputed from
/// the three-variable congruence counts and the two routes must agree; the
/// report then also carries the variance about the unit-count center
/// M N R / (q-1).
DeviationReport gamma_sum(std::uint64_t q, std::uint64_t M, std::uint64_t N, std::uint64_t R,
                          int nu = 2, double eps = 0.5, double delta = 0.5);

/// sum over a in [1,s] of (T*_s(X,Y;a) - phi(s) X Y / s^2)^2, exact.
DeviationReport t_star_variance(std::uint64_t s, std::uint64_t X, std::uint64_t Y,
                                double eps = 0.5);

/// sum over a in [1,s-1] of (R_s(X,Y,Z;a) - X Y Z / (s-1))^2, exact, for
/// prime s and ranges < s.  The reported bound is minimized over nu in
/// [nu_min, nu_max].
DeviationReport r_variance(std::uint64_t s, std::uint64_t X, std::uint64_t Y, std::uint64_t Z,
                           int nu_min = 1, int nu_max = 5, double eps = 0.5);

double thm_delta_bound(std::uint64_t q, std::uint64_t M, std::uint64_t N, double eps);
double truelsen_delta_bound(std::uint64_t q, std::uint64_t N, double delta, double eps);
double thm_gamma_bound(std::uint64_t q, std::uint64_t M, std::uint64_t N, std::uint64_t R,
                       int nu, double eps);
double truelsen_gamma_bound(std::uint64_t q, std::uint64_t N, std::uint64_t R, double delta,
                            double eps);
double lemma_t_aver_bound(std::uint64_t s, std::uint64_t X, std::uint64_t Y, double eps);
double lemma_r_aver_bound(std::uint64_t s, std::uint64_t X, std::uint64_t Y, std::uint64_t Z,
                          int nu, double eps);
/// s^(1+eps) * Z^2, the fourth-moment ceiling.
double fourth_moment_bound(std::uint64_t s, std::uint64_t Z, double eps);

/// q-exponent of thm_gamma_bound on power-law inputs M = q^m, N = q^n,
/// R = q^r, in exact rational arithmetic:
///   m + n + r + min(m,n,r) (1 - 2/nu) + (nu+1)/(2 nu^2) + eps.
Rational thm_gamma_bound_exponent(const Rational& m, const Rational& n, const Rational& r,
                                  int nu, const Rational& eps);

/// q-exponent of the dominant term of truelsen_gamma_bound on power-law
/// inputs N = q^n, R = q^r:
///   4n + 2r + max(-2r, n * max(-1/2, -delta)) - 1 + eps.
Rational truelsen_gamma_bound_exponent(const Rational& n, const Rational& r,
                                       const Rational& delta, const Rational& eps);

/// (sum_{r<=R} T_q(M,N; a r mod q)) / (M N R / q), exact; needs gcd(a,q)=1.
Rational conjecture_ratio(std::uint64_t q, std::uint64_t a, std::uint64_t M, std::uint64_t N,
                          std::uint64_t R);

/// log(statistic / base) / log q; requires statistic > 0, base > 0, q >= 2.
double minimal_slack(double statistic, double base, std::uint64_t q);

}  // namespace resdiv
