#pragma once

// Trifference (perfect 3-hash) predicates and the exhaustive search
// for maximum-dimension trifferent linear codes.

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "trilab/f3.hpp"

namespace trilab {

/// True iff some coordinate takes all three values on {x, y, z}.
/// Inputs must be pairwise distinct and of equal length.
bool is_trifferent_triple(const F3Vector& x, const F3Vector& y, const F3Vector& z);

struct TripleWitness {
    F3Vector x, y, z;
};

struct HashCheck {
    bool ok = false;
    std::optional<TripleWitness> failing;  // lexicographic-first failing triple
};

/// Every 3-subset of the words must be trifferent.  Fewer than three
/// words is vacuously true.  Duplicates / ragged input rejected.
HashCheck is_perfect_3hash_set(const std::vector<F3Vector>& words);

struct PairWitness {
    F3Vector v, w;
};

struct LinearCheck {
    bool ok = false;
    std::optional<PairWitness> failing;
};

/// Linear-code specialization: V is trifferent iff every pair of
/// distinct nonzero codewords (v, w) has a coordinate with
/// v_i != 0, w_i != 0, v_i != w_i.  Agrees with
/// is_perfect_3hash_set(enumerate_subspace(V)) by construction.
LinearCheck is_trifferent_linear(const GeneratorBasis& V);

struct SearchResult {
    int n = 0;
    int best_dimension = 0;
    std::optional<GeneratorBasis> witness;
    std::uint64_t subspaces_examined = 0;
};

/// Visit every d-dimensional subspace of F3^n exactly once via RREF
/// pivot-column profiles, in canonical order (pivot sets lexicographic,
/// then free entries counted row-major with 0 < 1 < 2).  The visitor
/// returns false to stop early.
void for_each_subspace(int n, int d, const std::function<bool(const GeneratorBasis&)>& visit);

/// Exact maximum dimension of a trifferent subspace of F3^n, found by
/// exhausting each dimension in ascending order until one has no
/// trifferent member (subcodes of trifferent codes are trifferent, so
/// the ascent is safe).  Guarded at n <= 8.
SearchResult max_trifferent_dimension(int n);

/// Korner-Marton construction size, (9/5)^(n/4).
long double km_size_bound(int n);

}  // namespace trilab
