#include "trilab/nullstellensatz.hpp"

#include <algorithm>
#include <set>

namespace trilab {

Trit DensePolynomial::coefficient(const std::vector<std::uint8_t>& exponents) const {
    const auto it = terms.find(exponents);
    return it == terms.end() ? 0 : it->second;
}

int DensePolynomial::degree() const {
    int deg = 0;
    for (const auto& [e, c] : terms) {
        int total = 0;
        for (std::uint8_t x : e) total += x;
        deg = std::max(deg, total);
    }
    return deg;
}

Trit DensePolynomial::evaluate(const F3Vector& point) const {
    if (static_cast<int>(point.size()) != variable_count)
        throw DimensionError("evaluation point has wrong arity");
    Trit sum = 0;
    for (const auto& [e, c] : terms) {
        Trit term = c;
        for (int j = 0; j < variable_count; ++j) {
            const Trit base = point.get(static_cast<std::size_t>(j));
            for (std::uint8_t k = 0; k < e[static_cast<std::size_t>(j)]; ++k)
                term = trit_mul(term, base);
        }
        sum = trit_add(sum, term);
    }
    return sum;
}

Trit cn_coefficient(const Evaluator& P, const CnQuery& query) {
    const std::size_t n = query.degrees.size();
    if (n == 0 || query.grids.size() != n) throw InvalidQuery("degrees/grids arity mismatch");
    for (std::size_t i = 0; i < n; ++i) {
        if (query.degrees[i] < 0 || query.degrees[i] > 2)
            throw InvalidQuery("degree must be in {0,1,2} over F3");
        const auto& u = query.grids[i];
        if (static_cast<int>(u.size()) != query.degrees[i] + 1)
            throw InvalidQuery("grid size must be degree + 1");
        std::set<Trit> distinct(u.begin(), u.end());
        if (distinct.size() != u.size()) throw InvalidQuery("grid elements must be distinct");
        for (Trit v : u)
            if (v > 2) throw InvalidQuery("grid element outside F3");
    }

    // Inverse denominators D(U_i, α_i) per grid slot.
    std::vector<std::vector<Trit>> inv_denoms(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t a = 0; a < query.grids[i].size(); ++a) {
            Trit denom = 1;
            for (std::size_t b = 0; b < query.grids[i].size(); ++b) {
                if (b == a) continue;
                denom = trit_mul(denom, trit_sub(query.grids[i][a], query.grids[i][b]));
            }
            inv_denoms[i].push_back(trit_inv(denom));  // never zero: grid elements distinct
        }
    }

    Trit sum = 0;
    std::vector<std::size_t> idx(n, 0);
    F3Vector point(n);
    for (std::size_t i = 0; i < n; ++i) point.set(i, query.grids[i][0]);
    for (;;) {
        Trit term = P(point);
        for (std::size_t i = 0; i < n; ++i) term = trit_mul(term, inv_denoms[i][idx[i]]);
        sum = trit_add(sum, term);

        std::size_t k = n;
        while (k > 0 && idx[k - 1] + 1 == query.grids[k - 1].size()) {
            --k;
            idx[k] = 0;
            point.set(k, query.grids[k][0]);
        }
        if (k == 0) break;
        --k;
        ++idx[k];
        point.set(k, query.grids[k][idx[k]]);
    }
    return sum;
}

DensePolynomial expand_product(const std::vector<LinearForm>& forms) {
    if (forms.size() > 12) throw TooLarge("more than 12 forms");
    int vars = 0;
    for (const auto& f : forms) {
        if (f.coefficients.is_zero()) throw DegenerateInput("zero linear form");
        vars = std::max(vars, static_cast<int>(f.coefficients.size()));
    }
    if (vars > 8) throw TooLarge("more than 8 variables");

    DensePolynomial poly;
    poly.variable_count = vars;
    poly.terms[std::vector<std::uint8_t>(static_cast<std::size_t>(vars), 0)] = 1;

    for (const auto& f : forms) {
        std::map<std::vector<std::uint8_t>, Trit> next;
        for (const auto& [e, c] : poly.terms) {
            for (std::size_t j = 0; j < f.coefficients.size(); ++j) {
                const Trit fc = f.coefficients.get(j);
                if (!fc) continue;
                std::vector<std::uint8_t> e2 = e;
                ++e2[j];
                const Trit add = trit_mul(c, fc);
                auto [it, inserted] = next.try_emplace(std::move(e2), add);
                if (!inserted) {
                    it->second = trit_add(it->second, add);
                    if (it->second == 0) next.erase(it);
                }
            }
        }
        poly.terms = std::move(next);
    }
    return poly;
}

std::optional<AffineHyperplane> find_avoiding_hyperplane(const std::vector<F3Vector>& X,
                                                         int d) {
    if (d < 1) throw DimensionError("dimension must be positive");
    if (d > 12) throw TooLarge("hyperplane scan guard is d <= 12");
    for (const auto& x : X)
        if (static_cast<int>(x.size()) != d) throw DimensionError("point dimension mismatch");

    const auto normals = canonical_normals(d);
    for (Trit offset : {Trit{0}, Trit{1}, Trit{2}}) {
        for (const auto& t : normals) {
            bool hit = false;
            for (const auto& x : X) {
                if (t.dot(x) == offset) {
                    hit = true;
                    break;
                }
            }
            if (!hit) return AffineHyperplane{t, offset};
        }
    }
    return std::nullopt;
}

AfProofInstance af_proof_instance(const std::vector<F3Vector>& X) {
    if (X.empty() || X.size() % 2 != 0) throw PreconditionError("|X| must equal 2d");
    const int d = static_cast<int>(X.size()) / 2;
    if (d > 5) throw PreconditionError("instance guard is d <= 5");
    for (const auto& x : X)
        if (static_cast<int>(x.size()) != d)
            throw PreconditionError("points must live in F3^(|X|/2)");

    // P(t_1..t_{d+1}) = Π_{x∈X} (<x, t> - t_{d+1})
    std::vector<LinearForm> forms;
    for (const auto& x : X) {
        F3Vector coeff(static_cast<std::size_t>(d + 1));
        for (int k = 0; k < d; ++k) coeff.set(static_cast<std::size_t>(k), x.get(static_cast<std::size_t>(k)));
        coeff.set(static_cast<std::size_t>(d), 2);  // -1
        forms.push_back(LinearForm{std::move(coeff)});
    }
    const Evaluator eval = [&forms](const F3Vector& t) {
        Trit prod = 1;
        for (const auto& f : forms) prod = trit_mul(prod, f.evaluate(t));
        return prod;
    };

    CnQuery query;
    query.degrees.assign(static_cast<std::size_t>(d), 2);
    query.degrees.push_back(1);
    query.grids.assign(static_cast<std::size_t>(d), {0, 1, 2});
    query.grids.push_back({0, 1});

    // Same grid sum as cn_coefficient, split by whether t vanishes.
    Trit origin = 0, rest = 0;
    {
        std::vector<std::size_t> idx(static_cast<std::size_t>(d + 1), 0);
        F3Vector point(static_cast<std::size_t>(d + 1));
        for (;;) {
            Trit denom_inv = 1;
            for (std::size_t i = 0; i < idx.size(); ++i) {
                Trit denom = 1;
                const auto& u = query.grids[i];
                for (std::size_t b = 0; b < u.size(); ++b)
                    if (b != idx[i]) denom = trit_mul(denom, trit_sub(u[idx[i]], u[b]));
                denom_inv = trit_mul(denom_inv, trit_inv(denom));
            }
            const Trit term = trit_mul(eval(point), denom_inv);
            bool t_zero = true;
            for (int k = 0; k < d; ++k)
                if (point.get(static_cast<std::size_t>(k))) t_zero = false;
            (t_zero ? origin : rest) = trit_add(t_zero ? origin : rest, term);

            std::size_t k = idx.size();
            while (k > 0 && idx[k - 1] + 1 == query.grids[k - 1].size()) {
                --k;
                idx[k] = 0;
                point.set(k, query.grids[k][0]);
            }
            if (k == 0) break;
            --k;
            ++idx[k];
            point.set(k, query.grids[k][idx[k]]);
        }
    }

    AfProofInstance report;
    report.c = cn_coefficient(eval, query);
    report.origin_column_contribution = origin;
    report.nonzero_t_contribution = rest;
    if (report.c != trit_add(origin, rest))
        throw std::logic_error("grid-sum split does not add up");

    std::vector<std::uint8_t> top(static_cast<std::size_t>(d + 1), 2);
    top[static_cast<std::size_t>(d)] = 1;
    report.expansion_coefficient = expand_product(forms).coefficient(top);
    if (report.expansion_coefficient != report.c)
        throw std::logic_error("grid-sum coefficient disagrees with expansion");
    return report;
}

}  // namespace trilab
