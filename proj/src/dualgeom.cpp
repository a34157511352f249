#include "trilab/dualgeom.hpp"

#include <algorithm>
#include <limits>
#include <thread>

#include "trilab/nullstellensatz.hpp"

namespace trilab {

namespace {

// C(n, k) saturating at uint64 max.
std::uint64_t choose_u64(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        const std::uint64_t f = static_cast<std::uint64_t>(n - k + i);
        if (r > std::numeric_limits<std::uint64_t>::max() / f)
            return std::numeric_limits<std::uint64_t>::max();
        r = r * f / static_cast<std::uint64_t>(i);
    }
    return r;
}

// Lexicographically next k-subset of [0, p); false when exhausted.
bool next_combination(std::vector<int>& c, int p) {
    const int k = static_cast<int>(c.size());
    int i = k - 1;
    while (i >= 0 && c[static_cast<std::size_t>(i)] == p - k + i) --i;
    if (i < 0) return false;
    ++c[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
        c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
    return true;
}

// k-subset of [0, p) at the given lexicographic rank.
std::vector<int> unrank_combination(int p, int k, std::uint64_t rank) {
    std::vector<int> c;
    int low = 0;
    for (int slot = 0; slot < k; ++slot) {
        for (int v = low; v < p; ++v) {
            const std::uint64_t below = choose_u64(p - v - 1, k - slot - 1);
            if (rank < below) {
                c.push_back(v);
                low = v + 1;
                break;
            }
            rank -= below;
        }
    }
    return c;
}

// Deterministic parallel scan over combination ranks.  Each worker
// walks a contiguous rank chunk; results combine in rank order.
void scan_combinations(int p, int k, std::uint64_t total, int workers,
                       const std::function<void(int chunk, std::uint64_t rank,
                                                const std::vector<int>&)>& visit,
                       const std::function<bool(int chunk)>& chunk_done) {
    if (total == 0) return;
    const int nthreads = static_cast<int>(
        std::min<std::uint64_t>(static_cast<std::uint64_t>(std::max(workers, 1)), total));
    if (nthreads == 1) {
        std::vector<int> c(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) c[static_cast<std::size_t>(i)] = i;
        std::uint64_t rank = 0;
        do {
            visit(0, rank, c);
            if (chunk_done(0)) return;
            ++rank;
        } while (next_combination(c, p));
        return;
    }
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t) {
        const std::uint64_t lo = total * static_cast<std::uint64_t>(t) / nthreads;
        const std::uint64_t hi = total * static_cast<std::uint64_t>(t + 1) / nthreads;
        pool.emplace_back([&, t, lo, hi]() {
            if (lo >= hi) return;
            std::vector<int> c = unrank_combination(p, k, lo);
            for (std::uint64_t rank = lo; rank < hi; ++rank) {
                visit(t, rank, c);
                if (chunk_done(t)) return;
                next_combination(c, p);
            }
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace

SymmetricSet::SymmetricSet(int dimension, const std::vector<F3Vector>& members)
    : dimension_(dimension) {
    if (dimension < 1) throw DimensionError("dimension must be positive");
    for (const auto& v : members) {
        if (static_cast<int>(v.size()) != dimension)
            throw DimensionError("member length differs from dimension");
        if (v.is_zero()) throw DegenerateInput("zero vector in a symmetric set");
        reps_.push_back(antipodal_rep(v));
    }
    std::sort(reps_.begin(), reps_.end());
    reps_.erase(std::unique(reps_.begin(), reps_.end()), reps_.end());
}

bool SymmetricSet::contains(const F3Vector& point) const {
    if (static_cast<int>(point.size()) != dimension_ || point.is_zero()) return false;
    return std::binary_search(reps_.begin(), reps_.end(), antipodal_rep(point));
}

std::vector<F3Vector> SymmetricSet::points() const {
    std::vector<F3Vector> pts;
    pts.reserve(reps_.size() * 2);
    for (const auto& r : reps_) {
        pts.push_back(r);
        pts.push_back(r.negated());
    }
    std::sort(pts.begin(), pts.end());
    return pts;
}

SymmetricSet SymmetricSet::parse(int dimension, std::string_view text) {
    return SymmetricSet(dimension, parse_matrix_text(text));
}

std::string SymmetricSet::to_text() const { return format_matrix_text(reps_); }

SymmetricSet code_to_symmetric_set(const GeneratorBasis& V) {
    const int d = V.rank();
    std::vector<F3Vector> columns;
    for (std::size_t i = 0; i < V.length(); ++i) {
        F3Vector col(static_cast<std::size_t>(d));
        for (int k = 0; k < d; ++k)
            col.set(static_cast<std::size_t>(k), V.rows[static_cast<std::size_t>(k)].get(i));
        if (!col.is_zero()) columns.push_back(std::move(col));
    }
    return SymmetricSet(d, columns);
}

Ap1Result ap1_satisfied(const SymmetricSet& X, int workers) {
    const int d = X.dimension();
    if (d > 6) throw TooLarge("AP1 pair enumeration guard is d <= 6");

    const auto hyperplanes = enumerate_hyperplanes(d, false);
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t i = 0; i < hyperplanes.size(); ++i)
        for (std::size_t j = i + 1; j < hyperplanes.size(); ++j)
            if (!parallel(hyperplanes[i], hyperplanes[j]))
                pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));

    const auto pts = X.points();
    const auto pair_met = [&](std::size_t idx) {
        const auto& h1 = hyperplanes[static_cast<std::size_t>(pairs[idx].first)];
        const auto& h2 = hyperplanes[static_cast<std::size_t>(pairs[idx].second)];
        for (const auto& x : pts)
            if (h1.contains(x) && h2.contains(x)) return true;
        return false;
    };

    const int nthreads = std::max(1, workers);
    std::optional<std::size_t> first_fail;
    if (nthreads == 1 || pairs.size() < 256) {
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            if (!pair_met(i)) {
                first_fail = i;
                break;
            }
        }
    } else {
        std::vector<std::size_t> found(static_cast<std::size_t>(nthreads), pairs.size());
        std::vector<std::thread> pool;
        for (int t = 0; t < nthreads; ++t) {
            const std::size_t lo = pairs.size() * static_cast<std::size_t>(t) /
                                   static_cast<std::size_t>(nthreads);
            const std::size_t hi = pairs.size() * static_cast<std::size_t>(t + 1) /
                                   static_cast<std::size_t>(nthreads);
            pool.emplace_back([&, t, lo, hi]() {
                for (std::size_t i = lo; i < hi; ++i) {
                    if (!pair_met(i)) {
                        found[static_cast<std::size_t>(t)] = i;
                        return;
                    }
                }
            });
        }
        for (auto& th : pool) th.join();
        const std::size_t best = *std::min_element(found.begin(), found.end());
        if (best < pairs.size()) first_fail = best;
    }

    if (!first_fail) return Ap1Result{true, std::nullopt};
    const auto& [i, j] = pairs[*first_fail];
    return Ap1Result{false,
                     std::make_pair(hyperplanes[static_cast<std::size_t>(i)],
                                    hyperplanes[static_cast<std::size_t>(j)])};
}

FOracleResult f_oracle(int d, int workers) {
    if (d < 1) throw DimensionError("dimension must be positive");
    if (d > 3) throw TooLarge("f oracle guard is d <= 3");

    const auto reps = canonical_normals(d);  // antipodal pair representatives
    const int p = static_cast<int>(reps.size());

    for (int k = 0; k <= p; ++k) {
        const std::uint64_t total = choose_u64(p, k);
        const int nthreads = std::max(1, workers);
        std::vector<std::uint64_t> hit(static_cast<std::size_t>(nthreads),
                                       std::numeric_limits<std::uint64_t>::max());
        std::vector<std::vector<int>> hit_combo(static_cast<std::size_t>(nthreads));
        scan_combinations(
            p, k, total, nthreads,
            [&](int chunk, std::uint64_t rank, const std::vector<int>& combo) {
                std::vector<F3Vector> members;
                for (int idx : combo) members.push_back(reps[static_cast<std::size_t>(idx)]);
                SymmetricSet candidate(d, members);
                if (ap1_satisfied(candidate).ok) {
                    hit[static_cast<std::size_t>(chunk)] = rank;
                    hit_combo[static_cast<std::size_t>(chunk)] = combo;
                }
            },
            [&](int chunk) {
                return hit[static_cast<std::size_t>(chunk)] !=
                       std::numeric_limits<std::uint64_t>::max();
            });
        // lexicographic-first minimizer: smallest rank across chunks
        int best_chunk = -1;
        std::uint64_t best_rank = std::numeric_limits<std::uint64_t>::max();
        for (int t = 0; t < nthreads; ++t) {
            if (hit[static_cast<std::size_t>(t)] < best_rank) {
                best_rank = hit[static_cast<std::size_t>(t)];
                best_chunk = t;
            }
        }
        if (best_chunk >= 0) {
            std::vector<F3Vector> members;
            for (int idx : hit_combo[static_cast<std::size_t>(best_chunk)])
                members.push_back(reps[static_cast<std::size_t>(idx)]);
            return FOracleResult{2 * k, SymmetricSet(d, members)};
        }
    }
    // The full set of nonzero vectors always satisfies AP1, so the scan
    // cannot fall through.
    throw std::logic_error("f oracle scan exhausted without a satisfying set");
}

OriginHyperplaneBest best_origin_hyperplane(const SymmetricSet& X) {
    const auto hyperplanes = enumerate_hyperplanes(X.dimension(), true);
    int best = -1;
    std::size_t best_idx = 0;
    for (std::size_t i = 0; i < hyperplanes.size(); ++i) {
        int count = 0;
        for (const auto& r : X.pairs())
            if (hyperplanes[i].normal.dot(r) == 0) count += 2;  // r and -r together
        if (count > best) {
            best = count;
            best_idx = i;
        }
    }
    return OriginHyperplaneBest{hyperplanes[best_idx], best};
}

int m_oracle(int n, int d, int workers, std::uint64_t budget) {
    if (d < 1) throw DimensionError("dimension must be positive");
    const auto reps = canonical_normals(d);
    const int p = static_cast<int>(reps.size());
    if (n < 2 || n % 2 != 0 || n / 2 > p) throw InvalidSize("n must be even with 2 <= n <= 3^d - 1");
    const int k = n / 2;
    const std::uint64_t total = choose_u64(p, k);
    if (total > budget) throw TooLarge("symmetric-set count exceeds the configured budget");

    const int nthreads = std::max(1, workers);
    std::vector<int> local_min(static_cast<std::size_t>(nthreads),
                               std::numeric_limits<int>::max());
    scan_combinations(
        p, k, total, nthreads,
        [&](int chunk, std::uint64_t, const std::vector<int>& combo) {
            std::vector<F3Vector> members;
            for (int idx : combo) members.push_back(reps[static_cast<std::size_t>(idx)]);
            const int best = best_origin_hyperplane(SymmetricSet(d, members)).count;
            auto& cur = local_min[static_cast<std::size_t>(chunk)];
            cur = std::min(cur, best);
        },
        [](int) { return false; });
    return *std::min_element(local_min.begin(), local_min.end());
}

mpq_class p_w(const F3Vector& w) {
    const int d = static_cast<int>(w.size());
    if (d < 2) throw DimensionError("p_w needs length >= 2");
    long a = 0, b = 0, c = 0;
    for (int i = 0; i < d; ++i) {
        switch (w.get(static_cast<std::size_t>(i))) {
            case 2: ++a; break;
            case 0: ++b; break;
            default: ++c; break;
        }
    }
    mpq_class q(a * (a - 1) + b * (b - 1) + c * (c - 1),
                static_cast<long>(d) * (d - 1));
    q.canonicalize();
    return q;
}

HeavyHyperplaneReport heavy_hyperplane_lm(const SymmetricSet& X) {
    const int d = X.dimension();
    const int n = X.size();
    if (d < 3) throw PreconditionError("heavy hyperplane procedure needs d >= 3");
    if (n < 2 * d) throw PreconditionError("heavy hyperplane procedure needs |X| >= 2d");

    // Greedy lexicographic extraction of an independent e_1..e_d from X.
    std::vector<F3Vector> basis_echelon;  // reduced residues for the rank test
    std::vector<F3Vector> chosen;
    for (const auto& x : X.points()) {
        F3Vector rem = x;
        for (const auto& row : basis_echelon) {
            const int piv = row.first_nonzero();
            const Trit c = rem.get(static_cast<std::size_t>(piv));
            if (c) {
                const Trit scale = trit_mul(c, trit_inv(row.get(static_cast<std::size_t>(piv))));
                rem = rem - row.scaled(scale);
            }
        }
        if (!rem.is_zero()) {
            chosen.push_back(x);
            basis_echelon.push_back(rem);
            std::sort(basis_echelon.begin(), basis_echelon.end(),
                      [](const F3Vector& u, const F3Vector& v) {
                          return u.first_nonzero() < v.first_nonzero();
                      });
            if (static_cast<int>(chosen.size()) == d) break;
        }
    }
    if (static_cast<int>(chosen.size()) < d)
        throw DegenerateInput("X does not span the space");

    // B has the chosen vectors as columns; rows of B^{-1} express the
    // new coordinates v_k = r_k . x.
    std::vector<F3Vector> b_rows;
    for (int k = 0; k < d; ++k) {
        F3Vector row(static_cast<std::size_t>(d));
        for (int i = 0; i < d; ++i)
            row.set(static_cast<std::size_t>(i),
                    chosen[static_cast<std::size_t>(i)].get(static_cast<std::size_t>(k)));
        b_rows.push_back(std::move(row));
    }
    const auto inv = invert(b_rows);
    if (!inv) throw std::logic_error("greedy basis is singular");

    const auto pts = X.points();
    std::optional<AffineHyperplane> best;
    int best_count = -1;
    for (int i = 0; i < d; ++i) {
        for (int j = i + 1; j < d; ++j) {
            const F3Vector normal =
                (*inv)[static_cast<std::size_t>(i)] - (*inv)[static_cast<std::size_t>(j)];
            const auto h = AffineHyperplane::canonical(normal, 0);
            int count = 0;
            for (const auto& x : pts)
                if (h.contains(x)) ++count;
            if (count > best_count) {
                best_count = count;
                best = h;
            }
        }
    }

    mpq_class bound(n + 4 * d, 3);
    bound -= 3;
    bound -= mpq_class(n, d);
    bound.canonicalize();
    return HeavyHyperplaneReport{*best, best_count, bound};
}

std::optional<Ap1Witness> aux1_witness(const SymmetricSet& X) {
    const int d = X.dimension();
    const int n = X.size();

    const auto best = best_origin_hyperplane(X);
    if (best.count < n - 4 * d + 4)
        throw PreconditionError("no origin hyperplane reaches n - 4d + 4");
    const F3Vector& t = best.hyperplane.normal;

    const auto pts = X.points();
    int count1 = 0, count2 = 0;
    for (const auto& x : pts) {
        const Trit v = t.dot(x);
        if (v == 1) ++count1;
        else if (v == 2) ++count2;
    }
    const Trit offset = (count2 < count1) ? 2 : 1;  // lighter translate, ties at 1
    const AffineHyperplane h1{t, offset};

    std::vector<F3Vector> avoided;  // Y ∪ {0, x}
    for (const auto& x : pts)
        if (h1.contains(x)) avoided.push_back(x);
    avoided.push_back(F3Vector(static_cast<std::size_t>(d)));
    const Trit neg_offset = trit_neg(offset);
    for (const auto& v : all_vectors(d)) {
        if (t.dot(v) == neg_offset) {
            avoided.push_back(v);  // lex-first point of -H1'
            break;
        }
    }

    auto h2 = find_avoiding_hyperplane(avoided, d);
    if (h2 && parallel(*h2, h1)) {
        // Only reachable when Y is empty and the scan lands on H1'
        // itself; continue the same scan past parallels.
        h2.reset();
        for (Trit off : {Trit{0}, Trit{1}, Trit{2}}) {
            for (const auto& normal : canonical_normals(d)) {
                if (normal == t) continue;
                bool hit = false;
                for (const auto& x : avoided)
                    if (normal.dot(x) == off) {
                        hit = true;
                        break;
                    }
                if (!hit) {
                    h2 = AffineHyperplane{normal, off};
                    break;
                }
            }
            if (h2) break;
        }
    }
    if (!h2) return std::nullopt;

    for (const auto& x : pts)
        if (h1.contains(x) && h2->contains(x))
            throw std::logic_error("witness intersects X");
    return Ap1Witness{h1, *h2};
}

GeneratorBasis phi_map(const SymmetricSet& X, const std::vector<F3Vector>& representatives) {
    const int d = X.dimension();
    const std::size_t n = representatives.size();
    if (static_cast<int>(n) * 2 != X.size())
        throw PreconditionError("need exactly one representative per antipodal pair");
    std::vector<F3Vector> reps_canon;
    for (const auto& r : representatives) {
        if (static_cast<int>(r.size()) != d) throw DimensionError("representative length mismatch");
        if (!X.contains(r)) throw PreconditionError("representative not a member of X");
        reps_canon.push_back(antipodal_rep(r));
    }
    std::sort(reps_canon.begin(), reps_canon.end());
    if (std::adjacent_find(reps_canon.begin(), reps_canon.end()) != reps_canon.end())
        throw PreconditionError("representatives repeat an antipodal pair");

    std::vector<F3Vector> rows;
    for (int k = 0; k < d; ++k) {
        F3Vector row(n);
        for (std::size_t i = 0; i < n; ++i)
            row.set(i, representatives[i].get(static_cast<std::size_t>(k)));
        rows.push_back(std::move(row));
    }
    GeneratorBasis image = rref(rows);
    if (image.rank() != d) throw DegenerateInput("X does not span the space");
    return image;
}

}  // namespace trilab
