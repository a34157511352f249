#include "trilab/trifference.hpp"

#include <algorithm>
#include <cmath>

namespace trilab {

namespace {

// Some coordinate with v_i != 0, w_i != 0, v_i != w_i.  Over F3 this is
// exactly "the triple {0, v, w} is trifferent there".
bool trifferent_pair(const F3Vector& v, const F3Vector& w) {
    const F3Vector diff = v - w;
    for (std::size_t k = 0; k < v.word_count(); ++k) {
        if (v.nonzero_plane(k) & w.nonzero_plane(k) & diff.nonzero_plane(k)) return true;
    }
    return false;
}

bool trifferent_all_pairs(const std::vector<F3Vector>& nonzero_words) {
    for (std::size_t i = 0; i < nonzero_words.size(); ++i)
        for (std::size_t j = i + 1; j < nonzero_words.size(); ++j)
            if (!trifferent_pair(nonzero_words[i], nonzero_words[j])) return false;
    return true;
}

}  // namespace

bool is_trifferent_triple(const F3Vector& x, const F3Vector& y, const F3Vector& z) {
    if (x.size() != y.size() || y.size() != z.size())
        throw DimensionError("triple length mismatch");
    if (x == y || y == z || x == z) throw InvalidTriple("triple entries must be distinct");
    const F3Vector xy = x - y, yz = y - z, xz = x - z;
    for (std::size_t k = 0; k < xy.word_count(); ++k) {
        if (xy.nonzero_plane(k) & yz.nonzero_plane(k) & xz.nonzero_plane(k)) return true;
    }
    return false;
}

HashCheck is_perfect_3hash_set(const std::vector<F3Vector>& words) {
    std::vector<F3Vector> sorted = words;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw InvalidSize("duplicate codewords");
    if (sorted.size() < 3) return HashCheck{true, std::nullopt};

    for (std::size_t i = 0; i < sorted.size(); ++i)
        for (std::size_t j = i + 1; j < sorted.size(); ++j)
            for (std::size_t k = j + 1; k < sorted.size(); ++k)
                if (!is_trifferent_triple(sorted[i], sorted[j], sorted[k]))
                    return HashCheck{false, TripleWitness{sorted[i], sorted[j], sorted[k]}};
    return HashCheck{true, std::nullopt};
}

LinearCheck is_trifferent_linear(const GeneratorBasis& V) {
    std::vector<F3Vector> words = enumerate_subspace(V);
    std::sort(words.begin(), words.end());
    // drop the zero vector (always first after sorting)
    std::vector<F3Vector> nonzero(words.begin() + 1, words.end());
    for (std::size_t i = 0; i < nonzero.size(); ++i)
        for (std::size_t j = i + 1; j < nonzero.size(); ++j)
            if (!trifferent_pair(nonzero[i], nonzero[j]))
                return LinearCheck{false, PairWitness{nonzero[i], nonzero[j]}};
    return LinearCheck{true, std::nullopt};
}

void for_each_subspace(int n, int d,
                       const std::function<bool(const GeneratorBasis&)>& visit) {
    if (d < 1 || d > n) return;

    std::vector<int> pivots(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) pivots[static_cast<std::size_t>(i)] = i;

    const auto advance_pivots = [&]() -> bool {
        int i = d - 1;
        while (i >= 0 && pivots[static_cast<std::size_t>(i)] == n - d + i) --i;
        if (i < 0) return false;
        ++pivots[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < d; ++j)
            pivots[static_cast<std::size_t>(j)] = pivots[static_cast<std::size_t>(j - 1)] + 1;
        return true;
    };

    do {
        std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
        for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;

        // Free cells in row-major order; the first is the most
        // significant digit of the base-3 odometer.
        std::vector<std::pair<int, int>> cells;
        for (int i = 0; i < d; ++i)
            for (int j = pivots[static_cast<std::size_t>(i)] + 1; j < n; ++j)
                if (!is_pivot[static_cast<std::size_t>(j)]) cells.emplace_back(i, j);

        std::vector<F3Vector> rows(static_cast<std::size_t>(d),
                                   F3Vector(static_cast<std::size_t>(n)));
        for (int i = 0; i < d; ++i)
            rows[static_cast<std::size_t>(i)].set(
                static_cast<std::size_t>(pivots[static_cast<std::size_t>(i)]), 1);

        std::vector<Trit> digits(cells.size(), 0);
        for (;;) {
            if (!visit(GeneratorBasis{rows})) return;
            std::size_t k = cells.size();
            while (k > 0 && digits[k - 1] == 2) {
                --k;
                digits[k] = 0;
                rows[static_cast<std::size_t>(cells[k].first)].set(
                    static_cast<std::size_t>(cells[k].second), 0);
            }
            if (k == 0) break;
            --k;
            ++digits[k];
            rows[static_cast<std::size_t>(cells[k].first)].set(
                static_cast<std::size_t>(cells[k].second), digits[k]);
        }
    } while (advance_pivots());
}

SearchResult max_trifferent_dimension(int n) {
    if (n < 1) throw PreconditionError("length must be positive");
    if (n > 8) throw TooLarge("subspace enumeration guard is n <= 8");

    SearchResult result;
    result.n = n;
    for (int d = 1; d <= n; ++d) {
        std::optional<GeneratorBasis> first_at_d;
        for_each_subspace(n, d, [&](const GeneratorBasis& V) {
            ++result.subspaces_examined;
            if (!first_at_d) {
                const auto words = enumerate_subspace(V);
                std::vector<F3Vector> nonzero(words.begin() + 1, words.end());
                if (trifferent_all_pairs(nonzero)) first_at_d = V;
            }
            return true;  // exhaustive per dimension
        });
        if (!first_at_d) break;
        result.best_dimension = d;
        result.witness = std::move(first_at_d);
    }
    return result;
}

long double km_size_bound(int n) {
    if (n < 1) throw PreconditionError("length must be positive");
    return std::pow(1.8L, static_cast<long double>(n) / 4.0L);
}

}  // namespace trilab
