#include "resdiv/moments.hpp"

#include "resdiv/arith.hpp"
#include "resdiv/congruences.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace resdiv {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

void require_nu(int nu) {
    if (nu < 1 || nu > 10) throw std::invalid_argument("nu must be in [1, 10]");
}

double slack_or_neg_inf(const Rational& statistic, double base, std::uint64_t q) {
    if (statistic == 0 || q < 2) return kNegInf;
    return minimal_slack(rational_to_double(statistic), base, q);
}

}  // namespace

double minimal_slack(double statistic, double base, std::uint64_t q) {
    if (!(statistic > 0.0)) throw std::invalid_argument("minimal_slack: statistic must be > 0");
    if (!(base > 0.0)) throw std::invalid_argument("minimal_slack: base must be > 0");
    if (q < 2) throw std::invalid_argument("minimal_slack: q must be >= 2");
    return std::log(statistic / base) / std::log(static_cast<double>(q));
}

double thm_delta_bound(std::uint64_t q, std::uint64_t M, std::uint64_t N, double eps) {
    return static_cast<double>(M) * static_cast<double>(N) *
           std::pow(static_cast<double>(q), eps);
}

double truelsen_delta_bound(std::uint64_t q, std::uint64_t N, double delta, double eps) {
    if (!(delta > 0.0 && delta <= 2.0))
        throw std::invalid_argument("truelsen_delta_bound: need 0 < delta <= 2");
    const double expo = std::max(3.5, 4.0 - delta) + eps;
    return std::pow(static_cast<double>(N), expo) / static_cast<double>(q);
}

double thm_gamma_bound(std::uint64_t q, std::uint64_t M, std::uint64_t N, std::uint64_t R,
                       int nu, double eps) {
    require_nu(nu);
    const double L = static_cast<double>(std::min({M, N, R}));
    const double dn = static_cast<double>(nu);
    return static_cast<double>(M) * static_cast<double>(N) * static_cast<double>(R) *
           std::pow(L, 1.0 - 2.0 / dn) *
           std::pow(static_cast<double>(q), (dn + 1.0) / (2.0 * dn * dn) + eps);
}

double truelsen_gamma_bound(std::uint64_t q, std::uint64_t N, std::uint64_t R, double delta,
                            double eps) {
    if (!(delta > 0.0)) throw std::invalid_argument("truelsen_gamma_bound: need delta > 0");
    const double dN = static_cast<double>(N);
    const double dR = static_cast<double>(R);
    const double inner = 1.0 / (dR * dR) + std::pow(dN, std::max(-0.5, -delta));
    return std::pow(dN, 4.0) * dR * dR * inner * std::pow(static_cast<double>(q), -1.0 + eps);
}

double lemma_t_aver_bound(std::uint64_t s, std::uint64_t X, std::uint64_t Y, double eps) {
    return static_cast<double>(X) * static_cast<double>(Y) *
           std::pow(static_cast<double>(s), eps);
}

double lemma_r_aver_bound(std::uint64_t s, std::uint64_t X, std::uint64_t Y, std::uint64_t Z,
                          int nu, double eps) {
    require_nu(nu);
    const double U = static_cast<double>(std::min({X, Y, Z}));
    const double dn = static_cast<double>(nu);
    return static_cast<double>(X) * static_cast<double>(Y) * static_cast<double>(Z) *
           std::pow(U, 1.0 - 2.0 / dn) *
           std::pow(static_cast<double>(s), (dn + 1.0) / (2.0 * dn * dn) + eps);
}

double fourth_moment_bound(std::uint64_t s, std::uint64_t Z, double eps) {
    return std::pow(static_cast<double>(s), 1.0 + eps) * static_cast<double>(Z) *
           static_cast<double>(Z);
}

Rational thm_gamma_bound_exponent(const Rational& m, const Rational& n, const Rational& r,
                                  int nu, const Rational& eps) {
    require_nu(nu);
    const Rational lmin = std::min({m, n, r});
    return m + n + r + lmin * (Rational(1) - Rational(2, nu)) +
           Rational(nu + 1, 2 * nu * nu) + eps;
}

Rational truelsen_gamma_bound_exponent(const Rational& n, const Rational& r,
                                       const Rational& delta, const Rational& eps) {
    if (!(delta > 0)) throw std::invalid_argument("truelsen_gamma_bound_exponent: delta > 0");
    const Rational shrink = std::max(Rational(-1, 2), -delta);
    const Rational tail = std::max(Rational(-2) * r, n * shrink);
    return Rational(4) * n + Rational(2) * r + tail - 1 + eps;
}

DeviationReport delta_sum(std::uint64_t q, std::uint64_t d, std::uint64_t M, std::uint64_t N,
                          double eps, double delta) {
    const std::uint64_t phi_qd = capital_phi(q, d);  // validates d | q
    const ResidueHistogram hist = count_T_all(q, M, N);

    const BigInt q2 = BigInt(q) * q;
    const BigInt main_num = BigInt(M) * N * phi_qd;
    BigInt acc = 0;
    for (std::uint64_t a = 1; a <= q; ++a) {
        if (std::gcd(a, q) != d) continue;
        const BigInt dev = BigInt(hist.at(a)) * q2 - main_num;
        acc += dev * dev;
    }

    DeviationReport rep;
    rep.params.q = q;
    rep.params.d = d;
    rep.params.M = M;
    rep.params.N = N;
    rep.params.eps = eps;
    rep.params.delta = delta;
    rep.statistic = Rational(acc, q2 * q2);
    rep.main_term = Rational(main_num, q2);
    rep.bounds["thm_delta"] = thm_delta_bound(q, M, N, eps);
    rep.bounds["truelsen_delta"] = truelsen_delta_bound(q, N, delta, eps);
    rep.minimal_slack =
        slack_or_neg_inf(rep.statistic, static_cast<double>(M) * static_cast<double>(N), q);
    return rep;
}

DeviationReport gamma_sum(std::uint64_t q, std::uint64_t M, std::uint64_t N, std::uint64_t R,
                          int nu, double eps, double delta) {
    if (!is_prime(q)) throw std::invalid_argument("gamma_sum: q must be prime");
    if (M == 0 || N == 0 || R == 0)
        throw std::invalid_argument("gamma_sum: M, N, R must be positive");
    require_nu(nu);
    const ResidueHistogram hist = count_T_all(q, M, N);

    const BigInt main_num = BigInt(M) * N * R;
    BigInt acc = 0;
    for (std::uint64_t a = 1; a < q; ++a) {
        std::uint64_t dilated = 0;
        for (std::uint64_t r = 1; r <= R; ++r) dilated += hist.at(mul_mod(a, r % q, q));
        const BigInt dev = BigInt(dilated) * q - main_num;
        acc += dev * dev;
    }

    DeviationReport rep;
    rep.params.q = q;
    rep.params.M = M;
    rep.params.N = N;
    rep.params.R = R;
    rep.params.nu = nu;
    rep.params.eps = eps;
    rep.params.delta = delta;
    rep.statistic = Rational(acc, BigInt(q) * q);
    rep.main_term = Rational(main_num, BigInt(q));

    if (M < q && N < q && R < q) {
        // same statistic from the three-variable counts R_q(M,N,R;a)
        const ResidueHistogram rhist = count_R_all(q, M, N, R);
        BigInt acc2 = 0;
        BigInt alt_acc = 0;
        for (std::uint64_t a = 1; a < q; ++a) {
            const BigInt dev = BigInt(rhist.at(a)) * q - main_num;
            acc2 += dev * dev;
            const BigInt alt_dev = BigInt(rhist.at(a)) * (q - 1) - main_num;
            alt_acc += alt_dev * alt_dev;
        }
        if (acc2 != acc) throw std::logic_error("gamma_sum: dilated-count and R-count routes disagree");
        rep.lemma_route_used = true;
        rep.alt_center = Rational(main_num, BigInt(q - 1));
        rep.alt_statistic = Rational(alt_acc, BigInt(q - 1) * (q - 1));
    }

    rep.bounds["thm_gamma"] = thm_gamma_bound(q, M, N, R, nu, eps);
    rep.bounds["truelsen_gamma"] = truelsen_gamma_bound(q, N, R, delta, eps);
    rep.minimal_slack = slack_or_neg_inf(rep.statistic, thm_gamma_bound(q, M, N, R, nu, 0.0), q);
    return rep;
}

DeviationReport t_star_variance(std::uint64_t s, std::uint64_t X, std::uint64_t Y, double eps) {
    const ResidueHistogram hist = count_T_star_all(s, X, Y);
    const BigInt s2 = BigInt(s) * s;
    const BigInt main_num = BigInt(euler_phi(s)) * X * Y;
    BigInt acc = 0;
    for (std::uint64_t a = 1; a <= s; ++a) {
        const BigInt dev = BigInt(hist.at(a)) * s2 - main_num;
        acc += dev * dev;
    }

    DeviationReport rep;
    rep.params.q = s;
    rep.params.X = X;
    rep.params.Y = Y;
    rep.params.eps = eps;
    rep.statistic = Rational(acc, s2 * s2);
    rep.main_term = Rational(main_num, s2);
    rep.bounds["lemma_t_aver"] = lemma_t_aver_bound(s, X, Y, eps);
    rep.minimal_slack =
        slack_or_neg_inf(rep.statistic, static_cast<double>(X) * static_cast<double>(Y), s);
    return rep;
}

DeviationReport r_variance(std::uint64_t s, std::uint64_t X, std::uint64_t Y, std::uint64_t Z,
                           int nu_min, int nu_max, double eps) {
    require_nu(nu_min);
    require_nu(nu_max);
    if (nu_min > nu_max) throw std::invalid_argument("r_variance: empty nu range");
    const ResidueHistogram hist = count_R_all(s, X, Y, Z);  // validates s prime, ranges < s
    const BigInt unit_count = s - 1;
    const BigInt main_num = BigInt(X) * Y * Z;
    BigInt acc = 0;
    for (std::uint64_t a = 1; a < s; ++a) {
        const BigInt dev = BigInt(hist.at(a)) * unit_count - main_num;
        acc += dev * dev;
    }

    DeviationReport rep;
    rep.params.q = s;
    rep.params.X = X;
    rep.params.Y = Y;
    rep.params.Z = Z;
    rep.params.eps = eps;
    rep.statistic = Rational(acc, unit_count * unit_count);
    rep.main_term = Rational(main_num, unit_count);

    int best_nu = nu_min;
    double best = lemma_r_aver_bound(s, X, Y, Z, nu_min, eps);
    for (int nu = nu_min + 1; nu <= nu_max; ++nu) {
        const double b = lemma_r_aver_bound(s, X, Y, Z, nu, eps);
        if (b < best) {
            best = b;
            best_nu = nu;
        }
    }
    rep.params.nu = best_nu;
    rep.bounds["lemma_r_aver"] = best;
    rep.bounds["lemma_r_aver_best_nu"] = static_cast<double>(best_nu);
    rep.minimal_slack =
        slack_or_neg_inf(rep.statistic, lemma_r_aver_bound(s, X, Y, Z, best_nu, 0.0), s);
    return rep;
}

Rational conjecture_ratio(std::uint64_t q, std::uint64_t a, std::uint64_t M, std::uint64_t N,
                          std::uint64_t R) {
    if (q == 0 || a == 0 || M == 0 || N == 0 || R == 0)
        throw std::invalid_argument("conjecture_ratio: arguments must be positive");
    if (std::gcd(a, q) != 1) throw std::invalid_argument("conjecture_ratio: need gcd(a, q) = 1");
    const ResidueHistogram hist = count_T_all(q, M, N);
    BigInt left = 0;
    for (std::uint64_t r = 1; r <= R; ++r) left += hist.at(mul_mod(a % q, r % q, q));
    return Rational(left * q, BigInt(M) * N * R);
}

}  // namespace resdiv
