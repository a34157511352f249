#include "trilab/f3.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace trilab {

namespace {
constexpr std::uint64_t kLoMask = 0x5555555555555555ull;
}

F3Vector F3Vector::from_digits(std::string_view s) {
    F3Vector v(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        const char c = s[i];
        if (c < '0' || c > '2')
            throw ParseError("invalid trit character '" + std::string(1, c) + "'");
        v.set(i, static_cast<Trit>(c - '0'));
    }
    return v;
}

bool F3Vector::is_zero() const {
    for (std::uint64_t w : words_)
        if (w) return false;
    return true;
}

int F3Vector::weight() const {
    int c = 0;
    for (std::uint64_t w : words_) c += std::popcount((w | (w >> 1)) & kLoMask);
    return c;
}

int F3Vector::first_nonzero() const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
        const std::uint64_t nz = (words_[k] | (words_[k] >> 1)) & kLoMask;
        if (nz) return static_cast<int>(32 * k + std::countr_zero(nz) / 2);
    }
    return -1;
}

F3Vector F3Vector::operator+(const F3Vector& o) const {
    check_same_length(o);
    F3Vector r(len_);
    for (std::size_t k = 0; k < words_.size(); ++k) {
        const std::uint64_t la = words_[k] & kLoMask, ha = (words_[k] >> 1) & kLoMask;
        const std::uint64_t lb = o.words_[k] & kLoMask, hb = (o.words_[k] >> 1) & kLoMask;
        const std::uint64_t t = (la | hb) ^ (ha | lb);
        const std::uint64_t rl = t ^ (ha | hb);
        const std::uint64_t rh = t ^ (la | lb);
        r.words_[k] = rl | (rh << 1);
    }
    return r;
}

F3Vector F3Vector::negated() const {
    F3Vector r(len_);
    for (std::size_t k = 0; k < words_.size(); ++k) {
        const std::uint64_t w = words_[k];
        r.words_[k] = ((w & kLoMask) << 1) | ((w >> 1) & kLoMask);
    }
    return r;
}

F3Vector F3Vector::operator-(const F3Vector& o) const { return *this + o.negated(); }

F3Vector F3Vector::scaled(Trit c) const {
    switch (c % 3) {
        case 0: return F3Vector(len_);
        case 1: return *this;
        default: return negated();
    }
}

Trit F3Vector::dot(const F3Vector& o) const {
    check_same_length(o);
    int ones = 0, twos = 0;
    for (std::size_t k = 0; k < words_.size(); ++k) {
        const std::uint64_t la = words_[k] & kLoMask, ha = (words_[k] >> 1) & kLoMask;
        const std::uint64_t lb = o.words_[k] & kLoMask, hb = (o.words_[k] >> 1) & kLoMask;
        const std::uint64_t pl = (la & lb) | (ha & hb);  // product is 1
        const std::uint64_t ph = (la & hb) | (ha & lb);  // product is 2
        ones += std::popcount(pl);
        twos += std::popcount(ph);
    }
    return static_cast<Trit>((ones + 2 * twos) % 3);
}

bool F3Vector::operator<(const F3Vector& o) const {
    const std::size_t common = std::min(words_.size(), o.words_.size());
    for (std::size_t k = 0; k < common; ++k) {
        const std::uint64_t diff = words_[k] ^ o.words_[k];
        if (diff) {
            const std::size_t i = 32 * k + std::countr_zero(diff) / 2;
            return get(i) < o.get(i);
        }
    }
    return len_ < o.len_;
}

std::string F3Vector::to_digits() const {
    std::string s(len_, '0');
    for (std::size_t i = 0; i < len_; ++i) s[i] = static_cast<char>('0' + get(i));
    return s;
}

F3Vector antipodal_rep(const F3Vector& v) {
    F3Vector n = v.negated();
    return n < v ? n : v;
}

GeneratorBasis rref(const std::vector<F3Vector>& input) {
    if (input.empty()) throw EmptySpan("no rows");
    const std::size_t n = input[0].size();
    for (const auto& r : input)
        if (r.size() != n) throw DimensionError("ragged matrix");

    std::vector<F3Vector> rows = input;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < n && pivot_row < rows.size(); ++col) {
        std::size_t sel = pivot_row;
        while (sel < rows.size() && rows[sel].get(col) == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[pivot_row], rows[sel]);
        if (rows[pivot_row].get(col) == 2) rows[pivot_row] = rows[pivot_row].negated();
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == pivot_row) continue;
            const Trit c = rows[r].get(col);
            if (c) rows[r] = rows[r] - rows[pivot_row].scaled(c);
        }
        ++pivot_row;
    }
    rows.resize(pivot_row);
    if (rows.empty()) throw EmptySpan("all rows are zero");
    return GeneratorBasis{std::move(rows)};
}

bool span_contains(const GeneratorBasis& basis, const F3Vector& v) {
    if (v.size() != basis.length()) throw DimensionError("length mismatch");
    F3Vector rem = v;
    for (const auto& row : basis.rows) {
        const int p = row.first_nonzero();
        const Trit c = rem.get(static_cast<std::size_t>(p));
        if (c) rem = rem - row.scaled(c);
    }
    return rem.is_zero();
}

std::vector<F3Vector> enumerate_subspace(const GeneratorBasis& basis) {
    const int d = basis.rank();
    if (d > 20) throw TooLarge("subspace rank exceeds enumeration guard");
    std::size_t total = 1;
    for (int i = 0; i < d; ++i) total *= 3;

    std::vector<F3Vector> out;
    out.reserve(total);
    std::vector<Trit> digits(static_cast<std::size_t>(d), 0);
    F3Vector cur(basis.length());
    out.push_back(cur);
    for (std::size_t idx = 1; idx < total; ++idx) {
        // Base-3 increment with the last coefficient least significant;
        // adding row k once increments digit k mod 3.
        int k = d - 1;
        while (digits[k] == 2) {
            digits[k] = 0;
            cur = cur + basis.rows[k];
            --k;
        }
        ++digits[k];
        cur = cur + basis.rows[k];
        out.push_back(cur);
    }
    return out;
}

AffineHyperplane AffineHyperplane::canonical(F3Vector normal, Trit offset) {
    const int p = normal.first_nonzero();
    if (p < 0) throw DegenerateInput("hyperplane normal is zero");
    if (normal.get(static_cast<std::size_t>(p)) == 2) {
        normal = normal.negated();
        offset = trit_neg(offset);
    }
    return AffineHyperplane{std::move(normal), offset % 3};
}

std::vector<F3Vector> all_vectors(int d) {
    if (d < 0 || d > 20) throw TooLarge("dimension outside enumeration guard");
    std::size_t total = 1;
    for (int i = 0; i < d; ++i) total *= 3;
    std::vector<F3Vector> out;
    out.reserve(total);
    F3Vector v(static_cast<std::size_t>(d));
    out.push_back(v);
    for (std::size_t idx = 1; idx < total; ++idx) {
        int k = d - 1;
        while (v.get(static_cast<std::size_t>(k)) == 2) {
            v.set(static_cast<std::size_t>(k), 0);
            --k;
        }
        v.set(static_cast<std::size_t>(k), v.get(static_cast<std::size_t>(k)) + 1);
        out.push_back(v);
    }
    return out;
}

std::vector<F3Vector> canonical_normals(int d) {
    if (d < 1) throw DimensionError("dimension must be positive");
    std::vector<F3Vector> out;
    for (const auto& v : all_vectors(d)) {
        const int p = v.first_nonzero();
        if (p >= 0 && v.get(static_cast<std::size_t>(p)) == 1) out.push_back(v);
    }
    return out;
}

std::vector<AffineHyperplane> enumerate_hyperplanes(int d, bool through_origin) {
    const auto normals = canonical_normals(d);
    std::vector<AffineHyperplane> out;
    if (through_origin) {
        for (const auto& t : normals) out.push_back(AffineHyperplane{t, 0});
    } else {
        for (Trit c : {Trit{1}, Trit{2}})
            for (const auto& t : normals) out.push_back(AffineHyperplane{t, c});
    }
    return out;
}

int min_weight(const GeneratorBasis& basis) {
    int best = static_cast<int>(basis.length()) + 1;
    for (const auto& v : enumerate_subspace(basis)) {
        if (v.is_zero()) continue;
        best = std::min(best, v.weight());
    }
    return best;
}

std::optional<std::vector<F3Vector>> invert(const std::vector<F3Vector>& rows) {
    const std::size_t d = rows.size();
    for (const auto& r : rows)
        if (r.size() != d) throw DimensionError("matrix is not square");

    // Augmented [A | I] elimination.
    std::vector<F3Vector> a = rows;
    std::vector<F3Vector> inv;
    inv.reserve(d);
    for (std::size_t i = 0; i < d; ++i) {
        F3Vector e(d);
        e.set(i, 1);
        inv.push_back(e);
    }
    for (std::size_t col = 0; col < d; ++col) {
        std::size_t sel = col;
        while (sel < d && a[sel].get(col) == 0) ++sel;
        if (sel == d) return std::nullopt;
        std::swap(a[col], a[sel]);
        std::swap(inv[col], inv[sel]);
        if (a[col].get(col) == 2) {
            a[col] = a[col].negated();
            inv[col] = inv[col].negated();
        }
        for (std::size_t r = 0; r < d; ++r) {
            if (r == col) continue;
            const Trit c = a[r].get(col);
            if (c) {
                a[r] = a[r] - a[col].scaled(c);
                inv[r] = inv[r] - inv[col].scaled(c);
            }
        }
    }
    return inv;
}

std::vector<F3Vector> parse_matrix_text(std::string_view text) {
    std::vector<F3Vector> rows;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t nl = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
        if (line.empty() || line.front() == '#') continue;
        rows.push_back(F3Vector::from_digits(line));
    }
    return rows;
}

std::string format_matrix_text(const std::vector<F3Vector>& rows) {
    std::ostringstream os;
    for (const auto& r : rows) os << r.to_digits() << '\n';
    return os.str();
}

}  // namespace trilab
