// Acceptance suite: one pass/fail line per criterion, nonzero exit on
// any failure.  All randomized criteria use fixed seeds.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <set>
#include <vector>

#include "test_util.hpp"
#include "trilab/bounds.hpp"
#include "trilab/dualgeom.hpp"
#include "trilab/nullstellensatz.hpp"
#include "trilab/runner.hpp"
#include "trilab/trifference.hpp"

using namespace trilab;
using clock_type = std::chrono::steady_clock;

namespace {

bool all_ok = true;

double seconds_since(clock_type::time_point start) {
    return std::chrono::duration<double>(clock_type::now() - start).count();
}

void report(int id, bool ok, double elapsed) {
    std::printf("criterion %2d: %s  (%.2fs)\n", id, ok ? "PASS" : "FAIL", elapsed);
    if (!ok) all_ok = false;
}

SymmetricSet random_symmetric_set(std::mt19937& rng, int d, int npoints) {
    auto reps = canonical_normals(d);
    std::shuffle(reps.begin(), reps.end(), rng);
    reps.resize(static_cast<std::size_t>(npoints / 2));
    return SymmetricSet(d, reps);
}

bool spans(const SymmetricSet& x) {
    return !x.pairs().empty() && rref(x.pairs()).rank() == x.dimension();
}

SymmetricSet random_spanning_set(std::mt19937& rng, int d, int npoints) {
    for (;;) {
        SymmetricSet x = random_symmetric_set(rng, d, npoints);
        if (spans(x)) return x;
    }
}

// every subset of `points` of size <= max_size admits an avoiding hyperplane
bool avoidable_up_to(const std::vector<F3Vector>& points, int d, int max_size) {
    std::vector<F3Vector> subset;
    std::vector<std::size_t> idx;
    const std::function<bool(std::size_t)> rec = [&](std::size_t next) {
        if (!idx.empty()) {
            subset.clear();
            for (std::size_t i : idx) subset.push_back(points[i]);
            const auto h = find_avoiding_hyperplane(subset, d);
            if (!h) return false;
            for (const auto& p : subset)
                if (h->contains(p)) return false;
        }
        if (static_cast<int>(idx.size()) == max_size) return true;
        for (std::size_t i = next; i < points.size(); ++i) {
            idx.push_back(i);
            if (!rec(i + 1)) return false;
            idx.pop_back();
        }
        return true;
    };
    return rec(0);
}

void criterion_1() {
    const auto start = clock_type::now();
    bool ok = true;

    auto t = clock_type::now();
    ok &= f_oracle(2).value == 8 && seconds_since(t) < 1.0;
    t = clock_type::now();
    ok &= f_oracle(1).value == 0 && seconds_since(t) < 1.0;

    t = clock_type::now();
    const int f3 = f_oracle(3).value;
    ok &= seconds_since(t) < 60.0;
    ok &= f3 >= 2;
    // any rank-3 trifferent code found in the searched range must obey 2n >= f(3)
    for (int n = 1; n <= 6; ++n) {
        const SearchResult r = max_trifferent_dimension(n);
        if (r.best_dimension >= 3) ok &= 2 * n >= f3;
    }
    report(1, ok, seconds_since(start));
}

void criterion_2() {
    const auto start = clock_type::now();
    bool ok = true;

    const SearchResult r4 = max_trifferent_dimension(4);
    ok &= r4.best_dimension >= 2;
    ok &= r4.witness.has_value() && r4.witness->rank() == r4.best_dimension &&
          is_trifferent_linear(*r4.witness).ok;
    ok &= r4.subspaces_examined >= 170;  // 40 rank-1 + 130 rank-2 subspaces
    ok &= seconds_since(start) < 10.0;

    for (int n = 1; n <= 6; ++n)
        ok &= mpq_class(max_trifferent_dimension(n).best_dimension) <= dim_bound_lin(n);
    report(2, ok, seconds_since(start));
}

void criterion_3() {
    const auto start = clock_type::now();
    bool ok = avoidable_up_to(all_vectors(2), 2, 4) && avoidable_up_to(all_vectors(3), 3, 6);
    ok &= seconds_since(start) < 300.0;
    report(3, ok, seconds_since(start));
}

void criterion_4() {
    const auto start = clock_type::now();
    bool ok = true;
    std::mt19937 rng(1004);
    std::uniform_int_distribution<std::size_t> pick;
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t vars = 2 + trial % 3;
        const int forms_count = 1 + trial % std::min<int>(6, 2 * static_cast<int>(vars));
        std::vector<LinearForm> forms;
        for (int i = 0; i < forms_count; ++i)
            forms.push_back({testutil::random_nonzero_vector(rng, vars)});

        // exponent vector with entries <= 2 summing to the product degree
        std::vector<int> degrees(vars, 0);
        int placed = 0;
        while (placed < forms_count) {
            const std::size_t i =
                pick(rng, std::uniform_int_distribution<std::size_t>::param_type(0, vars - 1));
            if (degrees[i] < 2) {
                ++degrees[i];
                ++placed;
            }
        }

        CnQuery q;
        q.degrees = degrees;
        for (int deg : degrees) {
            std::vector<Trit> grid;
            for (Trit c = 0; c <= static_cast<Trit>(deg); ++c) grid.push_back(c);
            q.grids.push_back(grid);
        }
        const Evaluator eval = [&forms](const F3Vector& p) {
            Trit acc = 1;
            for (const auto& f : forms) acc = acc * f.evaluate(p) % 3;
            return acc;
        };
        const std::vector<std::uint8_t> expo(degrees.begin(), degrees.end());
        ok &= cn_coefficient(eval, q) == expand_product(forms).coefficient(expo);
    }
    ok &= seconds_since(start) < 30.0;
    report(4, ok, seconds_since(start));
}

void criterion_5() {
    const auto start = clock_type::now();
    bool ok = true;
    for (int d = 2; d <= 3; ++d) {
        const int n_max = d == 2 ? 8 : 14;
        int prev = 0;
        for (int n = 2; n <= n_max; n += 2) {
            const int m = m_oracle(n, d);
            ok &= m >= prev;
            prev = m;
            if (d >= 3 && n >= 2 * d) ok &= mpq_class(m) >= m_lower_bound_lm(n, d);
            if (n / 2 >= d) ok &= static_cast<long>(m) >= m_lower_bound_mb(n, d);
        }
    }
    ok &= seconds_since(start) < 600.0;
    report(5, ok, seconds_since(start));
}

void criterion_6() {
    const auto start = clock_type::now();
    bool ok = true;
    std::mt19937 rng(1006);
    for (int trial = 0; trial < 200; ++trial) {
        const SymmetricSet x = random_spanning_set(rng, 3, 6 + 2 * (trial % 4));
        const auto rep = heavy_hyperplane_lm(x);
        ok &= mpq_class(rep.intersection_count) >= rep.guaranteed_lower_bound;
        int recount = 0;
        for (const auto& p : x.points()) recount += rep.hyperplane.contains(p);
        ok &= recount == rep.intersection_count;
    }
    const SymmetricSet cross(3, {F3Vector::from_digits("100"), F3Vector::from_digits("010"),
                                 F3Vector::from_digits("001")});
    ok &= heavy_hyperplane_lm(cross).intersection_count == 2;
    ok &= seconds_since(start) < 10.0;
    report(6, ok, seconds_since(start));
}

bool witness_valid(const SymmetricSet& x) {
    const int n = x.size(), d = x.dimension();
    if (best_origin_hyperplane(x).count < n - 4 * d + 4) return true;  // vacuous
    const auto w = aux1_witness(x);
    if (!w) return false;
    if (w->h1.through_origin() || w->h2.through_origin()) return false;
    if (parallel(w->h1, w->h2)) return false;
    for (const auto& p : all_vectors(d))
        if (w->h1.contains(p) && w->h2.contains(p) && x.contains(p)) return false;
    return true;
}

void criterion_7() {
    const auto start = clock_type::now();
    bool ok = true;

    const auto reps2 = canonical_normals(2);
    for (unsigned mask = 0; mask < 16; ++mask) {
        std::vector<F3Vector> members;
        for (std::size_t i = 0; i < reps2.size(); ++i)
            if (mask & (1u << i)) members.push_back(reps2[i]);
        ok &= witness_valid(SymmetricSet(2, members));
    }

    std::mt19937 rng(1007);
    for (int trial = 0; trial < 500; ++trial)
        ok &= witness_valid(random_symmetric_set(rng, 3, 2 * (1 + trial % 13)));
    report(7, ok, seconds_since(start));
}

void criterion_8() {
    const auto start = clock_type::now();
    bool ok = true;

    const SymmetricSet plane(2, canonical_normals(2));
    const GeneratorBasis U = phi_map(plane, plane.pairs());
    ok &= U.rank() == 2 && U.length() == 4 && min_weight(U) == 3;
    ok &= packing_check(4, 2, 1).holds;

    std::mt19937 rng(1008);
    for (int trial = 0; trial < 200; ++trial) {
        const int d = 2 + trial % 2;
        const int npairs = d == 2 ? 3 + trial % 2 : 4 + trial % 3;
        const SymmetricSet x = random_spanning_set(rng, d, 2 * npairs);
        const GeneratorBasis img = phi_map(x, x.pairs());
        const int count = best_origin_hyperplane(x).count;  // m - 1
        for (const auto& u : enumerate_subspace(img))
            if (!u.is_zero()) ok &= 2 * u.weight() >= 2 * npairs - count;
    }
    report(8, ok, seconds_since(start));
}

void criterion_9() {
    const auto start = clock_type::now();
    bool ok = true;
    ok &= std::fabs(fk_base(3) - 1.5874L) < 1e-4L;
    ok &= std::fabs(asymptotic_rate(6000) - 3.10L) < 0.01L;
    const double x = mb_vs_lm_crossover(1000);
    ok &= x >= 5.0 && x <= 6.0;
    ok &= std::fabs(km_size_bound(1) - 1.158L) < 1e-3L;
    report(9, ok, seconds_since(start));
}

void criterion_10() {
    const auto start = clock_type::now();
    bool ok = true;
    const TechReport t = tech_gap_analysis(mpq_class(0), 3000);
    ok &= t.lhs_exponent >= std::log(3.05L);
    ok &= t.rhs_exponent <= std::log(3.04L);
    ok &= tech_crossover_alpha(3000) > 0.0;
    report(10, ok, seconds_since(start));
}

void criterion_11() {
    const auto start = clock_type::now();
    bool ok = true;
    const char* six_points = "100\n010\n001\n110\n";
    for (Format fmt : {Format::csv, Format::json}) {
        ok &= run_f_of_d(3, fmt, 1).output == run_f_of_d(3, fmt, 8).output;
        ok &= run_m_of_nd(3, 2, 14, fmt, 1).output == run_m_of_nd(3, 2, 14, fmt, 8).output;
        ok &= run_m_of_nd(2, 2, 8, fmt, 1).output == run_m_of_nd(2, 2, 8, fmt, 8).output;
        ok &= run_ap1_check(six_points, fmt, 1).output == run_ap1_check(six_points, fmt, 8).output;
    }
    report(11, ok, seconds_since(start));
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11();
    return all_ok ? 0 : 1;
}
