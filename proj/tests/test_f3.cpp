#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "test_util.hpp"
#include "trilab/f3.hpp"

using namespace trilab;
using testutil::random_matrix;
using testutil::random_nonzero_matrix;
using testutil::random_vector;
using testutil::sorted;

TEST_CASE("trit vector basics") {
    const F3Vector v = F3Vector::from_digits("0120");
    CHECK(v.size() == 4);
    CHECK(v.get(0) == 0);
    CHECK(v.get(1) == 1);
    CHECK(v.get(2) == 2);
    CHECK(v.weight() == 2);
    CHECK(v.to_digits() == "0120");
    CHECK(F3Vector(5).weight() == 0);
    CHECK_THROWS_AS(F3Vector::from_digits("013"), ParseError);
}

TEST_CASE("negation is an involution and preserves weight") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const F3Vector v = random_vector(rng, 1 + trial % 70);
        CHECK(v.negated().negated() == v);
        CHECK(v.negated().weight() == v.weight());
    }
}

TEST_CASE("packed arithmetic agrees with entrywise arithmetic") {
    std::mt19937 rng(12);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + trial % 70;
        const F3Vector a = random_vector(rng, n), b = random_vector(rng, n);
        const F3Vector sum = a + b, diff = a - b;
        unsigned expect_dot = 0;
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(sum.get(i) == trit_add(a.get(i), b.get(i)));
            CHECK(diff.get(i) == trit_sub(a.get(i), b.get(i)));
            expect_dot = trit_add(expect_dot, trit_mul(a.get(i), b.get(i)));
        }
        CHECK(a.dot(b) == expect_dot);
        CHECK(weight(a) == static_cast<int>(n) - [&] {
            int zeros = 0;
            for (std::size_t i = 0; i < n; ++i) zeros += a.get(i) == 0;
            return zeros;
        }());
    }
}

TEST_CASE("rref leaves canonical matrices alone") {
    const std::vector<F3Vector> identity = {F3Vector::from_digits("10"),
                                            F3Vector::from_digits("01")};
    CHECK(rref(identity).rows == identity);
}

TEST_CASE("rref collapses dependent rows") {
    const std::vector<F3Vector> rows = {F3Vector::from_digits("11"),
                                        F3Vector::from_digits("22")};
    const GeneratorBasis b = rref(rows);
    REQUIRE(b.rank() == 1);
    CHECK(b.rows[0] == F3Vector::from_digits("11"));
}

TEST_CASE("rref rejects the zero span") {
    CHECK_THROWS_AS(rref({F3Vector(3), F3Vector(3)}), EmptySpan);
    CHECK_THROWS_AS(rref({}), EmptySpan);
}

TEST_CASE("rref is span-invariant and idempotent on random matrices") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t d = 1 + trial % 4, n = d + trial % (9 - d);
        const auto m = random_nonzero_matrix(rng, d, n);
        const GeneratorBasis b = rref(m);
        CHECK(rref(b.rows) == b);
        // span equality oracle: enumerate both spans
        const auto span_b = sorted(enumerate_subspace(b));
        for (const auto& row : m) CHECK(std::binary_search(span_b.begin(), span_b.end(), row));
        for (const auto& v : span_b) CHECK(span_contains(b, v));
    }
}

TEST_CASE("rref output span equals input span by full enumeration") {
    std::mt19937 rng(14);
    for (int trial = 0; trial < 100; ++trial) {
        const auto m = random_nonzero_matrix(rng, 3, 5);
        const GeneratorBasis b = rref(m);
        // brute-force span of the input: all 27 coefficient combinations
        std::set<F3Vector> input_span;
        for (Trit c0 = 0; c0 < 3; ++c0)
            for (Trit c1 = 0; c1 < 3; ++c1)
                for (Trit c2 = 0; c2 < 3; ++c2)
                    input_span.insert(m[0].scaled(c0) + m[1].scaled(c1) + m[2].scaled(c2));
        const auto output_span = sorted(enumerate_subspace(b));
        CHECK(std::vector<F3Vector>(input_span.begin(), input_span.end()) == output_span);
    }
}

TEST_CASE("enumerate_subspace lists scalar multiples of a single row") {
    const GeneratorBasis b = rref({F3Vector::from_digits("102")});
    const auto span = enumerate_subspace(b);
    REQUIRE(span.size() == 3);
    CHECK(span[0] == F3Vector(3));
    CHECK(span[1] == F3Vector::from_digits("102"));
    CHECK(span[2] == F3Vector::from_digits("201"));
}

TEST_CASE("enumerate_subspace covers a random rank-3 code exactly once") {
    std::mt19937 rng(15);
    for (int trial = 0; trial < 20; ++trial) {
        GeneratorBasis b = rref(random_nonzero_matrix(rng, 3, 6));
        if (b.rank() != 3) continue;
        const auto span = enumerate_subspace(b);
        CHECK(span.size() == 27);
        CHECK(span[0].is_zero());
        const auto uniq = sorted(span);
        CHECK(std::adjacent_find(uniq.begin(), uniq.end()) == uniq.end());
        for (const auto& v : span) CHECK(span_contains(b, v));
    }
}

TEST_CASE("hyperplane counts match the closed forms") {
    long pow3 = 3;
    for (int d = 1; d <= 6; ++d) {
        CHECK(enumerate_hyperplanes(d, true).size() == static_cast<std::size_t>((pow3 - 1) / 2));
        CHECK(enumerate_hyperplanes(d, false).size() == static_cast<std::size_t>(pow3 - 1));
        pow3 *= 3;
    }
    CHECK(enumerate_hyperplanes(2, true).size() == 4);
    CHECK(enumerate_hyperplanes(1, true).size() == 1);
    CHECK(enumerate_hyperplanes(3, false).size() == 26);
}

TEST_CASE("hyperplane membership") {
    const AffineHyperplane h{F3Vector::from_digits("11"), 1};
    CHECK(h.contains(F3Vector::from_digits("10")));
    CHECK_FALSE(h.contains(F3Vector::from_digits("11")));
    CHECK_THROWS_AS(h.contains(F3Vector(3)), DimensionError);

    for (const auto& plane : enumerate_hyperplanes(3, false))
        CHECK_FALSE(plane.contains(F3Vector(3)));  // origin excluded when offset != 0
}

TEST_CASE("every hyperplane holds exactly a third of the space") {
    for (int d = 1; d <= 4; ++d) {
        const auto pts = all_vectors(d);
        long expect = 1;
        for (int i = 1; i < d; ++i) expect *= 3;
        for (bool origin : {true, false}) {
            for (const auto& h : enumerate_hyperplanes(d, origin)) {
                long count = 0;
                for (const auto& p : pts) count += h.contains(p);
                CHECK(count == expect);
            }
        }
    }
}

TEST_CASE("canonical hyperplane representative dedups the scalar pair") {
    const auto h = AffineHyperplane::canonical(F3Vector::from_digits("021"), 1);
    CHECK(h.normal == F3Vector::from_digits("012"));
    CHECK(h.offset == 2);
    const auto again = AffineHyperplane::canonical(h.normal, h.offset);
    CHECK(again == h);
}

TEST_CASE("min_weight on small codes") {
    CHECK(min_weight(rref({F3Vector::from_digits("111")})) == 3);
    CHECK(min_weight(rref({F3Vector::from_digits("10"), F3Vector::from_digits("01")})) == 1);
}

TEST_CASE("matrix inverse round-trips") {
    std::mt19937 rng(16);
    int inverted = 0;
    while (inverted < 50) {
        const auto m = random_matrix(rng, 4, 4);
        const auto inv = invert(m);
        if (!inv) continue;
        ++inverted;
        for (std::size_t i = 0; i < 4; ++i) {
            for (std::size_t j = 0; j < 4; ++j) {
                F3Vector col(4);
                for (std::size_t k = 0; k < 4; ++k) col.set(k, m[k].get(j));
                CHECK((*inv)[i].dot(col) == (i == j ? 1u : 0u));
            }
        }
    }
    CHECK(!invert({F3Vector::from_digits("11"), F3Vector::from_digits("22")}));
}

TEST_CASE("generator matrix text format") {
    const auto rows = parse_matrix_text("# tetracode-style example\n1011\n\n0112\r\n");
    REQUIRE(rows.size() == 2);
    CHECK(rows[0] == F3Vector::from_digits("1011"));
    CHECK(rows[1] == F3Vector::from_digits("0112"));
    CHECK(parse_matrix_text(format_matrix_text(rows)) == rows);
    CHECK_THROWS_AS(parse_matrix_text("10x1\n"), ParseError);
}

TEST_CASE("antipodal representative is the lexicographically smaller sign") {
    CHECK(antipodal_rep(F3Vector::from_digits("21")) == F3Vector::from_digits("12"));
    CHECK(antipodal_rep(F3Vector::from_digits("12")) == F3Vector::from_digits("12"));
    std::mt19937 rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        const F3Vector v = testutil::random_nonzero_vector(rng, 5);
        CHECK(antipodal_rep(v) == antipodal_rep(v.negated()));
        CHECK_FALSE(v.negated() < antipodal_rep(v));
    }
}

TEST_CASE("enumeration guards") {
    CHECK_THROWS_AS(all_vectors(21), TooLarge);
}
