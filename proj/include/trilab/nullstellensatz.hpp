#pragma once

// Quantitative Combinatorial Nullstellensatz over F3 (grid-sum top
// coefficient formula), a dense expansion oracle for it, and the
// avoiding-hyperplane search it powers.

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "trilab/f3.hpp"

namespace trilab {

/// A homogeneous linear form sum_j c_j x_j, c not identically zero.
struct LinearForm {
    F3Vector coefficients;

    Trit evaluate(const F3Vector& point) const { return coefficients.dot(point); }
};

/// Formal polynomial over F3: exponents are not reduced by the field's
/// function identities.  Terms map exponent vectors to nonzero
/// coefficients.
struct DensePolynomial {
    int variable_count = 0;
    std::map<std::vector<std::uint8_t>, Trit> terms;

    Trit coefficient(const std::vector<std::uint8_t>& exponents) const;
    int degree() const;
    Trit evaluate(const F3Vector& point) const;
};

struct CnQuery {
    std::vector<int> degrees;              // d_1..d_n
    std::vector<std::vector<Trit>> grids;  // U_i ⊂ F3, |U_i| = d_i + 1
};

using Evaluator = std::function<Trit(const F3Vector&)>;

/// Coefficient of x_1^{d_1}...x_n^{d_n} in a black-box polynomial of
/// degree at most Σd_i, via the grid sum Σ P(α) / Π D(U_i, α_i) with
/// D(U, α) = Π_{c ∈ U \ {α}} (α - c).  All arithmetic in F3.
Trit cn_coefficient(const Evaluator& P, const CnQuery& query);

/// Formal product of linear forms.  Guarded at 12 forms / 8 variables.
DensePolynomial expand_product(const std::vector<LinearForm>& forms);

/// First affine hyperplane (offset-major 0,1,2; normals lexicographic)
/// disjoint from X.  Always succeeds when |X| <= 2d; nullopt otherwise
/// possible.  Guarded at d <= 12.
std::optional<AffineHyperplane> find_avoiding_hyperplane(const std::vector<F3Vector>& X, int d);

struct AfProofInstance {
    Trit c;                            // grid-sum coefficient of t_1^2..t_d^2 t_{d+1}
    Trit origin_column_contribution;   // grid terms with t = 0
    Trit nonzero_t_contribution;       // the rest
    Trit expansion_coefficient;        // the same coefficient from the dense oracle
};

/// Instantiates the polynomial P = Π_{x∈X} (<x,t> - t_{d+1}) for a set
/// of size exactly 2d and splits its top-coefficient grid sum by
/// whether t vanishes.  Requires |X| = 2d, d <= 5.
AfProofInstance af_proof_instance(const std::vector<F3Vector>& X);

}  // namespace trilab
