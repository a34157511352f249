#pragma once

// Exact evaluators and verdicts for the closed-form inequalities:
// the double-counting and Fredman-Komlos size bounds, the dimension
// bound chain, the two m(n, d) lower bounds, the packing inequality,
// and the asymptotic-rate arithmetic.

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace trilab {

struct BoundReport {
    std::string name;
    std::vector<std::pair<std::string, std::string>> inputs;
    std::string lhs_exact;  // exact rational / big integer / 2^(p/q) form
    std::string rhs_exact;
    bool holds = true;
    long double lhs_value = 0;
    long double rhs_value = 0;
};

/// (k-1) (k/(k-1))^n as an exact rational.
mpq_class korner_bound_value(int k, int n);
BoundReport korner_bound(int k, int n);

/// Per-symbol base 2^{k!/k^{k-1}}.
long double fk_base(int k);
/// (2^{k!/k^{k-1}})^n.
BoundReport fk_bound(int k, int n);

/// (n+11)/4.
mpq_class dim_bound_lin(int n);

/// 8d - 22 (may be negative).
long f_lower_bound(int d);

/// (n+4d)/3 - 3 - n/d; requires d >= 3, n >= 2d.
mpq_class m_lower_bound_lm(long n, long d);

/// Smallest m with binom(n, floor((2n-m-1)/4)) 2^floor(...) <= 3^{n-d},
/// where n2 = 2n; a valid lower bound on m(2n, d).
long m_lower_bound_mb(long n2, long d);

/// binom(n,k) 2^k <= 3^{n-d}, exact big integers.
BoundReport packing_check(long n, long d, long k);

/// (binom(2d, floor(d/3)) 2^{floor(d/3)})^{1/d}.
long double asymptotic_rate(long d);

/// Least n/d at which the averaging-based formula at size n overtakes
/// the packing-based formula for n antipodal pairs, by linear scan of
/// n in [2d, 8d].
double mb_vs_lm_crossover(long d);

struct TechReport {
    mpq_class alpha;
    long d = 0;
    mpq_class gamma_lo, gamma_hi;  // m - 4d window, divided by d
    mpq_class n_prime;             // (m-1)/2 at the reported endpoint
    mpq_class m_prime;             // (4m-2n)/3 at the reported endpoint
    long double lhs_exponent = 0;  // min over window endpoints of ln(lhs)/d
    long double rhs_exponent = 0;  // max over window endpoints of ln(rhs)/d
};

/// Endpoint evaluation of the contradiction inequality: with
/// n = (4+alpha)d and m = (4+gamma)d at both ends of the gamma window,
/// compares binom(floor(m/2), floor((2n-m)/12)) 2^floor((2n-m)/12)
/// against 3^{m/2-d}.  Requires 0 <= alpha <= 1, d >= 10.
TechReport tech_gap_analysis(const mpq_class& alpha, long d);

/// Alpha at which the two exponents cross, by bisection to tol.
double tech_crossover_alpha(long d, double tol = 1e-4);

}  // namespace trilab
