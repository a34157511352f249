#pragma once

// Dual geometry of trifferent linear codes: the code -> centrally
// symmetric set reduction, the two alternate extremal problems with
// exact oracles, the derandomized heavy-hyperplane procedure, the
// witness construction behind f(d) >= n+2, and the phi map into F3^n.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "trilab/f3.hpp"

namespace trilab {

/// A centrally symmetric subset of F3^d \ {0}, stored as the
/// lexicographically smaller member of each antipodal pair {v, -v}.
class SymmetricSet {
public:
    /// Builds from any list of members; each is mapped to its antipodal
    /// representative, deduplicated and sorted.  Zero vectors and
    /// length mismatches are rejected.
    SymmetricSet(int dimension, const std::vector<F3Vector>& members);

    int dimension() const { return dimension_; }
    const std::vector<F3Vector>& pairs() const { return reps_; }
    int size() const { return 2 * static_cast<int>(reps_.size()); }

    bool contains(const F3Vector& point) const;
    /// All members (both signs), sorted lexicographically.
    std::vector<F3Vector> points() const;

    /// Text format: one representative per line in trit digits.
    static SymmetricSet parse(int dimension, std::string_view text);
    std::string to_text() const;

    bool operator==(const SymmetricSet&) const = default;

private:
    int dimension_;
    std::vector<F3Vector> reps_;
};

/// X = {coordinate functionals of V} closed under negation, zeros
/// dropped; the functionals are the columns of the generator matrix.
/// |X| <= 2n always.
SymmetricSet code_to_symmetric_set(const GeneratorBasis& V);

struct Ap1Result {
    bool ok = false;
    std::optional<std::pair<AffineHyperplane, AffineHyperplane>> counterexample;
};

/// Alternate Problem 1 condition: every pair of non-parallel affine
/// hyperplanes avoiding the origin meets X on their intersection.
/// Guarded at d <= 6.  Deterministic for any worker count.
Ap1Result ap1_satisfied(const SymmetricSet& X, int workers = 1);

struct FOracleResult {
    int value;
    SymmetricSet minimizer;
};

/// Exact f(d): minimum size of an X satisfying the AP1 condition,
/// found by scanning symmetric sets in ascending size, lexicographic
/// first.  Guarded at d <= 3.
FOracleResult f_oracle(int d, int workers = 1);

struct OriginHyperplaneBest {
    AffineHyperplane hyperplane;
    int count;
};

/// Maximizes |X ∩ H| over origin hyperplanes, lexicographic-first tie
/// break in canonical-normal order.
OriginHyperplaneBest best_origin_hyperplane(const SymmetricSet& X);

/// Exact m(n, d): the min over all symmetric X of size n of the best
/// origin-hyperplane count.  n must be even and 2 <= n <= 3^d - 1.
int m_oracle(int n, int d, int workers = 1, std::uint64_t budget = 20'000'000);

/// Probability that a uniformly random coordinate pair {i, j} agrees
/// on w: (a(a-1) + b(b-1) + c(c-1)) / (d(d-1)) for the counts a, b, c
/// of entries equal to 2, 0, 1.  Requires length >= 2.
mpq_class p_w(const F3Vector& w);

struct HeavyHyperplaneReport {
    AffineHyperplane hyperplane;  // offset 0
    int intersection_count;
    mpq_class guaranteed_lower_bound;  // (n+4d)/3 - 3 - n/d
};

/// Derandomized heavy-hyperplane procedure: greedily extract a lex
/// basis e_1..e_d from X, scan all C(d,2) hyperplanes {v_i = v_j} in
/// those coordinates, return the heaviest.  Requires d >= 3,
/// |X| >= 2d, X spanning.
HeavyHyperplaneReport heavy_hyperplane_lm(const SymmetricSet& X);

struct Ap1Witness {
    AffineHyperplane h1, h2;  // non-parallel, both avoid 0, X misses h1 ∩ h2
};

/// Witness pair construction behind f(d) >= n+2: take the heaviest
/// origin hyperplane H1 (its count must reach n-4d+4), pigeonhole a
/// light affine translate H1', adjoin the lex-first point of -H1' and
/// the origin, and search a hyperplane avoiding that set.  nullopt
/// means the avoiding-hyperplane scan found no non-parallel candidate
/// (impossible while the avoided set has size <= 2d).
std::optional<Ap1Witness> aux1_witness(const SymmetricSet& X);

/// Linear map xi -> (xi(x_1), ..., xi(x_n)) on the dual space, given
/// one ordered representative per antipodal pair; returns the image as
/// a rank-d basis.  X must span F3^d.
GeneratorBasis phi_map(const SymmetricSet& X, const std::vector<F3Vector>& representatives);

}  // namespace trilab
