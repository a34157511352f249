#pragma once

// Exact arithmetic and enumeration primitives over the 3-element field:
// packed trit vectors, reduced-row-echelon bases, affine hyperplanes.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "trilab/errors.hpp"

namespace trilab {

using Trit = unsigned;  // value in {0,1,2}

inline Trit trit_neg(Trit a) { return (3 - a) % 3; }
inline Trit trit_add(Trit a, Trit b) { return (a + b) % 3; }
inline Trit trit_sub(Trit a, Trit b) { return (a + 3 - b) % 3; }
inline Trit trit_mul(Trit a, Trit b) { return (a * b) % 3; }
// 1 and 2 are their own inverses in F3.
inline Trit trit_inv(Trit a) { return a; }

/// A length-n vector over F3, packed 2 bits per entry, 32 trits per
/// 64-bit word.  Entry i lives at bits 2i..2i+1 of word i/32; the bit
/// pattern 11 never occurs.  Immutable use after construction is the
/// normal pattern; all arithmetic returns fresh values.
class F3Vector {
public:
    F3Vector() = default;
    explicit F3Vector(std::size_t n) : len_(n), words_((n + 31) / 32, 0) {}

    /// Parse from contiguous digits '0'/'1'/'2'.  Any other character
    /// is a ParseError.
    static F3Vector from_digits(std::string_view s);

    std::size_t size() const { return len_; }

    Trit get(std::size_t i) const {
        return static_cast<Trit>((words_[i >> 5] >> (2 * (i & 31))) & 3u);
    }

    void set(std::size_t i, Trit v) {
        std::uint64_t& w = words_[i >> 5];
        const unsigned sh = 2 * (i & 31);
        w = (w & ~(std::uint64_t{3} << sh)) | (std::uint64_t{v} << sh);
    }

    bool is_zero() const;
    int weight() const;              // number of nonzero entries
    int first_nonzero() const;       // index, or -1 for the zero vector

    F3Vector operator+(const F3Vector& o) const;
    F3Vector operator-(const F3Vector& o) const;
    F3Vector negated() const;
    F3Vector scaled(Trit c) const;
    Trit dot(const F3Vector& o) const;

    bool operator==(const F3Vector& o) const {
        return len_ == o.len_ && words_ == o.words_;
    }
    bool operator!=(const F3Vector& o) const { return !(*this == o); }
    /// Lexicographic on entries with trit order 0 < 1 < 2.
    bool operator<(const F3Vector& o) const;

    std::string to_digits() const;

    /// Per-word mask with bit 2i set iff entry i is nonzero.
    std::uint64_t nonzero_plane(std::size_t word) const {
        const std::uint64_t w = words_[word];
        return (w | (w >> 1)) & kLoMask;
    }
    std::size_t word_count() const { return words_.size(); }

private:
    static constexpr std::uint64_t kLoMask = 0x5555555555555555ull;

    void check_same_length(const F3Vector& o) const {
        if (len_ != o.len_) throw DimensionError("F3Vector length mismatch");
    }

    std::size_t len_ = 0;
    std::vector<std::uint64_t> words_;
};

inline int weight(const F3Vector& v) { return v.weight(); }

/// Lexicographically smaller of {v, -v}.
F3Vector antipodal_rep(const F3Vector& v);

/// A full-rank generator matrix in reduced row-echelon form.  Only
/// rref() constructs these, so the invariant (strictly increasing unit
/// pivots, cleared pivot columns, no zero rows) always holds.
struct GeneratorBasis {
    std::vector<F3Vector> rows;

    int rank() const { return static_cast<int>(rows.size()); }
    std::size_t length() const { return rows.empty() ? 0 : rows[0].size(); }
    bool operator==(const GeneratorBasis&) const = default;
};

/// Canonical basis of the row span.  Throws EmptySpan if every row is
/// zero, DimensionError on ragged input.
GeneratorBasis rref(const std::vector<F3Vector>& rows);

/// Membership test: reduce v against the RREF rows.
bool span_contains(const GeneratorBasis& basis, const F3Vector& v);

/// All 3^d vectors of the span, ordered lexicographically by
/// coefficient tuple (first basis row's coefficient most significant).
/// The zero vector comes first.  Guarded at rank 20.
std::vector<F3Vector> enumerate_subspace(const GeneratorBasis& basis);

/// {x : <normal, x> = offset}, canonicalized so the first nonzero
/// normal entry is 1 (the scalar pair (t,c) ~ (2t,2c) is stored once).
struct AffineHyperplane {
    F3Vector normal;
    Trit offset = 0;

    static AffineHyperplane canonical(F3Vector normal, Trit offset);

    bool contains(const F3Vector& x) const {
        if (x.size() != normal.size())
            throw DimensionError("hyperplane/point dimension mismatch");
        return normal.dot(x) == offset;
    }
    bool through_origin() const { return offset == 0; }
    bool operator==(const AffineHyperplane&) const = default;
};

inline bool parallel(const AffineHyperplane& a, const AffineHyperplane& b) {
    return a.normal == b.normal;
}

/// All 3^d vectors of F3^d in lexicographic order.  d <= 20.
std::vector<F3Vector> all_vectors(int d);

/// Canonical hyperplane normals: the (3^d-1)/2 nonzero vectors whose
/// first nonzero entry is 1, in lexicographic order.
std::vector<F3Vector> canonical_normals(int d);

/// through_origin=true: the (3^d-1)/2 hyperplanes with offset 0.
/// through_origin=false: the 3^d-1 hyperplanes avoiding the origin,
/// offset-major (all offset 1, then all offset 2), normals
/// lexicographic within each offset.
std::vector<AffineHyperplane> enumerate_hyperplanes(int d, bool through_origin);

/// Minimum weight over the 3^d - 1 nonzero codewords.
int min_weight(const GeneratorBasis& basis);

/// Inverse of a square matrix given as rows; nullopt when singular.
std::optional<std::vector<F3Vector>> invert(const std::vector<F3Vector>& rows);

/// Generator-matrix text format: one row per line of contiguous trit
/// digits; blank lines and '#' comments ignored; anything else rejected.
std::vector<F3Vector> parse_matrix_text(std::string_view text);
std::string format_matrix_text(const std::vector<F3Vector>& rows);

}  // namespace trilab
