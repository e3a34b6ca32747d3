#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "soc/gf2la.hpp"

#include <bit>
#include <random>
#include <vector>

using namespace soc;

namespace {

BitMatrix from_rows(int cols, const std::vector<uint64_t>& rows) {
    BitMatrix m(static_cast<int>(rows.size()), cols);
    for (size_t r = 0; r < rows.size(); ++r)
        for (int c = 0; c < cols; ++c)
            if (rows[r] >> c & 1) m.set(static_cast<int>(r), c, true);
    return m;
}

// Hand-built RM(1,3) generator: evaluations of 1, v1, v2, v3 at the 8
// points of F_2^3 (column j has coordinates = bits of j).
BitMatrix rm13() {
    return from_rows(8, {0xFF, 0xAA, 0xCC, 0xF0});
}

// Hand-built RM(r,5): evaluations of all monomials of degree <= r.
BitMatrix rm_m5(int r) {
    std::vector<uint64_t> rows;
    for (int mask = 0; mask < 32; ++mask) {
        if (std::popcount(static_cast<unsigned>(mask)) > r) continue;
        uint64_t row = 0;
        for (int j = 0; j < 32; ++j)
            if ((j & mask) == mask) row |= 1ull << j;
        rows.push_back(row);
    }
    return from_rows(32, rows);
}

BitMatrix random_matrix(int rows, int cols, std::mt19937_64& rng) {
    BitMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            if (rng() & 1) m.set(r, c, true);
    return m;
}

}  // namespace

TEST_CASE("rref basics") {
    BitMatrix id = BitMatrix::identity(4);
    BitRref r = rref(id);
    CHECK(r.rank == 4);
    CHECK(r.m == id);

    CHECK(rref(rm13()).rank == 4);

    BitMatrix rep = from_rows(4, {0b1010, 0b1010, 0b0110});
    CHECK(rref(rep).rank == 2);

    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 50; ++trial) {
        BitMatrix m = random_matrix(5, 9, rng);
        BitRref once = rref(m);
        BitRref twice = rref(once.m);
        CHECK(once.m == twice.m);
        CHECK(once.rank == twice.rank);
    }
}

TEST_CASE("dual_space") {
    BitMatrix full = BitMatrix::identity(5);
    CHECK(dual_space(full).rows() == 0);

    // RM(1,3) is self-dual: its dual has the same row space.
    BitMatrix g = rm13();
    BitMatrix d = dual_space(g);
    CHECK(d.rows() == 4);
    CHECK(same_row_space(g, d));

    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 100; ++trial) {
        BitMatrix m = random_matrix(4 + static_cast<int>(rng() % 4), 10, rng);
        BitMatrix d2 = dual_space(m);
        CHECK(rref(m).rank + rref(d2).rank == 10);
        // G * D^T = 0.
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < d2.rows(); ++j) {
                uint64_t acc = 0;
                for (int w = 0; w < m.words_per_row(); ++w)
                    acc ^= m.row(i)[w] & d2.row(j)[w];
                CHECK((std::popcount(acc) & 1) == 0);
            }
        // Double dual has the same row space.
        CHECK(same_row_space(dual_space(d2), m));
    }
}

TEST_CASE("is_self_orthogonal") {
    CHECK_FALSE(is_self_orthogonal(from_rows(4, {0b0111})));
    CHECK(is_self_orthogonal(rm13()));

    Field f4(2);
    FqMatrix row11(f4, 1, 2);
    row11.set(0, 0, 1);
    row11.set(0, 1, 1);
    CHECK(is_self_orthogonal(row11));

    // Agreement with the explicit subcode test.
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        BitMatrix m = random_matrix(3, 8, rng);
        CHECK(is_self_orthogonal(m) == row_space_contains(dual_space(m), m));
    }
}

TEST_CASE("min_distance binary") {
    BitMatrix rep = from_rows(7, {0x7F});
    CHECK(min_distance(rep) == 7);

    CHECK(min_distance(rm13()) == 4);
    CHECK(min_distance(rm_m5(2)) == 8);   // RM(2,5)
    CHECK(min_distance(rm_m5(1)) == 16);  // RM(1,5)

    BitMatrix zero(2, 4);
    CHECK_THROWS_AS(min_distance(zero), std::invalid_argument);
    BitMatrix big = BitMatrix::identity(29);
    CHECK_THROWS_AS(min_distance(big), std::invalid_argument);
}

TEST_CASE("weight_distribution binary") {
    BitMatrix c2 = from_rows(2, {0b11});
    std::map<int, uint64_t> expect{{0, 1}, {2, 1}};
    CHECK(weight_distribution(c2) == expect);

    std::map<int, uint64_t> rm = weight_distribution(rm13());
    std::map<int, uint64_t> expect_rm{{0, 1}, {4, 14}, {8, 1}};
    CHECK(rm == expect_rm);

    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 30; ++trial) {
        BitMatrix m = random_matrix(5, 12, rng);
        if (rref(m).rank == 0) continue;
        auto dist = weight_distribution(m);
        uint64_t total = 0;
        for (auto& [w, c] : dist) total += c;
        CHECK(total == (1ull << rref(m).rank));
        int min_w = 0;
        for (auto& [w, c] : dist)
            if (w > 0) {
                min_w = w;
                break;
            }
        CHECK(min_w == min_distance(m));
    }
}

TEST_CASE("deterministic partitioning") {
    BitMatrix g = rm_m5(2);
    int d1 = min_distance(g, 1);
    for (int jobs : {2, 3, 7}) CHECK(min_distance(g, jobs) == d1);
    auto w1 = weight_distribution(g, 1);
    for (int jobs : {2, 5}) CHECK(weight_distribution(g, jobs) == w1);
}

TEST_CASE("Fq rref, dual and containment") {
    Field f4(2);
    FqMatrix m(f4, 2, 3);
    // rows (1, w, w^2), (0, 1, 1)
    m.set(0, 0, 1);
    m.set(0, 1, 2);
    m.set(0, 2, 3);
    m.set(1, 1, 1);
    m.set(1, 2, 1);
    FqRref r = rref(m);
    CHECK(r.rank == 2);
    CHECK(r.pivots == std::vector<int>{0, 1});

    FqMatrix d = dual_space(m);
    CHECK(d.rows() == 1);
    const Field& f = f4;
    for (int i = 0; i < m.rows(); ++i) {
        uint32_t acc = 0;
        for (int c = 0; c < 3; ++c) acc ^= f.mul(m.get(i, c), d.get(0, c));
        CHECK(acc == 0);
    }
    CHECK(row_space_contains(m, m));
    CHECK(same_row_space(m, r.m));
}

TEST_CASE("Fq min distance and weight distribution") {
    Field f4(2);
    // [4,2] evaluation code: rows (1,1,1,1) and (0,1,w,w^2); MDS, d = 3.
    FqMatrix g(f4, 2, 4);
    for (int c = 0; c < 4; ++c) g.set(0, c, 1);
    for (int c = 0; c < 4; ++c) g.set(1, c, static_cast<uint32_t>(c));
    CHECK(min_distance(g) == 3);
    for (int jobs : {2, 3}) CHECK(min_distance(g, jobs) == 3);

    auto dist = weight_distribution(g);
    uint64_t total = 0;
    for (auto& [w, c] : dist) total += c;
    CHECK(total == 16);
    CHECK(dist[0] == 1);

    Field f16(4);
    FqMatrix too_big(f16, 7, 8);
    for (int i = 0; i < 7; ++i) too_big.set(i, i, 1);
    CHECK_THROWS_AS(min_distance(too_big), std::invalid_argument);
}
