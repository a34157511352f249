#include "trilab/bounds.hpp"

#include <cmath>
#include <stdexcept>

#include "trilab/errors.hpp"

namespace trilab {

namespace {

const long double kLn2 = 0.6931471805599453094L;
const long double kLn3 = 1.0986122886681096914L;

long double log_mpz(const mpz_class& z) {
    if (z <= 0) throw std::domain_error("log of non-positive integer");
    long exp2;
    const double mant = mpz_get_d_2exp(&exp2, z.get_mpz_t());
    return std::log(static_cast<long double>(mant)) + static_cast<long double>(exp2) * kLn2;
}

long double to_ld(const mpq_class& q) {
    return static_cast<long double>(mpq_get_d(q.get_mpq_t()));
}

mpz_class binom(unsigned long n, unsigned long k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

mpz_class pow3(unsigned long e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 3, e);
    return r;
}

mpz_class floor_q(const mpq_class& q) {
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

}  // namespace

mpq_class korner_bound_value(int k, int n) {
    if (k < 3 || n < 1) throw PreconditionError("needs k >= 3, n >= 1");
    mpz_class num, den;
    mpz_ui_pow_ui(num.get_mpz_t(), static_cast<unsigned long>(k),
                  static_cast<unsigned long>(n));
    mpz_ui_pow_ui(den.get_mpz_t(), static_cast<unsigned long>(k - 1),
                  static_cast<unsigned long>(n));
    mpq_class q(mpz_class(num * (k - 1)), den);
    q.canonicalize();
    return q;
}

BoundReport korner_bound(int k, int n) {
    const mpq_class v = korner_bound_value(k, n);
    BoundReport r;
    r.name = "korner";
    r.inputs = {{"k", std::to_string(k)}, {"n", std::to_string(n)}};
    r.lhs_exact = v.get_str();
    r.rhs_exact = "";
    r.holds = true;
    r.lhs_value = to_ld(v);
    return r;
}

long double fk_base(int k) {
    if (k < 3) throw PreconditionError("needs k >= 3");
    unsigned long fact = 1;
    for (int i = 2; i <= k; ++i) fact *= static_cast<unsigned long>(i);
    long double denom = 1;
    for (int i = 0; i < k - 1; ++i) denom *= static_cast<long double>(k);
    return std::exp2(static_cast<long double>(fact) / denom);
}

BoundReport fk_bound(int k, int n) {
    if (k < 3 || n < 1) throw PreconditionError("needs k >= 3, n >= 1");
    unsigned long fact = 1;
    for (int i = 2; i <= k; ++i) fact *= static_cast<unsigned long>(i);
    mpz_class kpow;
    mpz_ui_pow_ui(kpow.get_mpz_t(), static_cast<unsigned long>(k),
                  static_cast<unsigned long>(k - 1));
    mpq_class expo(mpz_class(fact * n), kpow);
    expo.canonicalize();

    BoundReport r;
    r.name = "fredman-komlos";
    r.inputs = {{"k", std::to_string(k)}, {"n", std::to_string(n)}};
    r.lhs_exact = "2^(" + expo.get_str() + ")";
    r.holds = true;
    r.lhs_value = std::exp2(to_ld(expo));
    return r;
}

mpq_class dim_bound_lin(int n) {
    if (n < 1) throw PreconditionError("needs n >= 1");
    mpq_class q(n + 11, 4);
    q.canonicalize();
    return q;
}

long f_lower_bound(int d) {
    if (d < 1) throw PreconditionError("needs d >= 1");
    return 8L * d - 22;
}

mpq_class m_lower_bound_lm(long n, long d) {
    if (d < 3 || n < 2 * d) throw PreconditionError("needs d >= 3 and n >= 2d");
    mpq_class q(n + 4 * d, 3);
    q -= 3;
    q -= mpq_class(n, d);
    q.canonicalize();
    return q;
}

long m_lower_bound_mb(long n2, long d) {
    if (n2 < 2 || n2 % 2 != 0) throw PreconditionError("n2 must be a positive even size");
    const long n = n2 / 2;
    if (d < 1 || n < d) throw PreconditionError("needs n >= d >= 1");
    const mpz_class rhs = pow3(static_cast<unsigned long>(n - d));

    const auto lhs_ok = [&](long m) {
        const long kk = (2 * n - m - 1) / 4;  // floor; nonnegative for m <= 2n-1
        if (kk <= 0) return true;
        mpz_class lhs = binom(static_cast<unsigned long>(n), static_cast<unsigned long>(kk));
        mpz_mul_2exp(lhs.get_mpz_t(), lhs.get_mpz_t(), static_cast<mp_bitcnt_t>(kk));
        return lhs <= rhs;
    };

    // The left side is nonincreasing in m over [0, 2n], so the first m
    // satisfying the inequality is found by binary search.
    long lo = 0, hi = 2 * n;
    if (lhs_ok(lo)) return lo;
    while (lo + 1 < hi) {
        const long mid = lo + (hi - lo) / 2;
        if (lhs_ok(mid)) hi = mid;
        else lo = mid;
    }
    return hi;
}

BoundReport packing_check(long n, long d, long k) {
    if (k < 0 || d < 0 || d > n || k > n) throw PreconditionError("needs 0 <= k, d <= n");
    mpz_class lhs = binom(static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    mpz_mul_2exp(lhs.get_mpz_t(), lhs.get_mpz_t(), static_cast<mp_bitcnt_t>(k));
    const mpz_class rhs = pow3(static_cast<unsigned long>(n - d));

    BoundReport r;
    r.name = "packing";
    r.inputs = {{"n", std::to_string(n)}, {"d", std::to_string(d)}, {"k", std::to_string(k)}};
    r.lhs_exact = lhs.get_str();
    r.rhs_exact = rhs.get_str();
    r.holds = lhs <= rhs;
    r.lhs_value = std::exp(log_mpz(lhs == 0 ? mpz_class(1) : lhs));
    r.rhs_value = std::exp(log_mpz(rhs));
    return r;
}

long double asymptotic_rate(long d) {
    if (d < 3) throw PreconditionError("needs d >= 3");
    const long k = d / 3;
    const mpz_class b = binom(static_cast<unsigned long>(2 * d), static_cast<unsigned long>(k));
    const long double ln_total = log_mpz(b) + static_cast<long double>(k) * kLn2;
    return std::exp(ln_total / static_cast<long double>(d));
}

double mb_vs_lm_crossover(long d) {
    if (d < 3) throw PreconditionError("needs d >= 3");
    // Both formulas at a common parameter n: the averaging formula at
    // size n against the packing formula for n antipodal pairs.  Floor
    // effects make the comparison wobble near the crossing, so scan for
    // the least winning n instead of bisecting.
    for (long n = 2 * d; n <= 8 * d; ++n)
        if (m_lower_bound_lm(n, d) >= mpq_class(m_lower_bound_mb(2 * n, d)))
            return static_cast<double>(n) / static_cast<double>(d);
    throw std::logic_error("no crossover in [2d, 8d]");
}

TechReport tech_gap_analysis(const mpq_class& alpha, long d) {
    if (alpha < 0 || alpha > 1) throw PreconditionError("alpha must lie in [0, 1]");
    if (d < 10) throw PreconditionError("needs d >= 10");

    TechReport rep;
    rep.alpha = alpha;
    rep.d = d;
    rep.gamma_lo = mpq_class(2) * alpha / 3 - mpq_class(5, d);
    rep.gamma_hi = mpq_class(8) * alpha + mpq_class(3, d);
    rep.gamma_lo.canonicalize();
    rep.gamma_hi.canonicalize();

    const mpq_class n = (mpq_class(4) + alpha) * d;

    bool first = true;
    for (const mpq_class& gamma : {rep.gamma_lo, rep.gamma_hi}) {
        const mpq_class m = (mpq_class(4) + gamma) * d;
        const mpq_class k_exact = (2 * n - m) / 12;
        const mpz_class k = k_exact < 0 ? mpz_class(0) : floor_q(k_exact);
        const mpz_class top = floor_q(m / 2);

        long double lhs_ln = 0;
        if (k > 0 && top > 0) {
            const unsigned long ku = std::min(k, top).get_ui();
            lhs_ln = log_mpz(binom(top.get_ui(), ku)) +
                     static_cast<long double>(ku) * kLn2;
        }
        const long double lhs_exp = lhs_ln / static_cast<long double>(d);
        const mpq_class rhs_pow = m / 2 - d;  // 3^{m/2-d}
        const long double rhs_exp = to_ld(rhs_pow) * kLn3 / static_cast<long double>(d);

        if (first || lhs_exp < rep.lhs_exponent) {
            rep.lhs_exponent = lhs_exp;
            rep.n_prime = (m - 1) / 2;
            rep.m_prime = (4 * m - 2 * n) / 3;
            rep.n_prime.canonicalize();
            rep.m_prime.canonicalize();
        }
        if (first || rhs_exp > rep.rhs_exponent) rep.rhs_exponent = rhs_exp;
        first = false;
    }
    return rep;
}

double tech_crossover_alpha(long d, double tol) {
    const auto gap = [&](double a) {
        mpq_class q(a);
        q.canonicalize();
        const TechReport r = tech_gap_analysis(q, d);
        return static_cast<double>(r.lhs_exponent - r.rhs_exponent);
    };
    double lo = 0.0, hi = 1.0;
    if (gap(lo) <= 0) return 0.0;
    if (gap(hi) >= 0) return 1.0;
    while (hi - lo > tol) {
        const double mid = (lo + hi) / 2;
        if (gap(mid) > 0) lo = mid;
        else hi = mid;
    }
    return (lo + hi) / 2;
}

}  // namespace trilab
