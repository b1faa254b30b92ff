#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "sdc/bitmat.hpp"

using namespace sdc;

TEST_CASE("bit_vector basics") {
    bit_vector v = bit_vector::from_string("10110");
    CHECK(v.size() == 5);
    CHECK(v.weight() == 3);
    CHECK(v[0]);
    CHECK_FALSE(v[1]);
    CHECK(v.to_string() == "10110");
    CHECK(v.first_set() == 0);
    CHECK(v.support() == std::vector<std::size_t>{0, 2, 3});

    bit_vector w = bit_vector::from_string("01110");
    CHECK((v ^ w).to_string() == "11000");
    CHECK(v.dot(w) == false);  // overlap {2,3}, even
    CHECK(v.dot(bit_vector::from_string("10000")) == true);

    CHECK_THROWS_AS(v.dot(bit_vector(4)), std::invalid_argument);
    CHECK_THROWS_AS(bit_vector::from_string("01x"), std::invalid_argument);
}

TEST_CASE("bit_vector dot parity across words") {
    // weight spread over several 64-bit words; parity must accumulate, not
    // cancel wordwise
    bit_vector a(200), b(200);
    for (std::size_t i : {3u, 70u, 140u, 199u}) {
        a.set(i, true);
        b.set(i, true);
    }
    CHECK(a.dot(b) == false);
    a.set(100, true);
    b.set(100, true);
    CHECK(a.dot(b) == true);
}

TEST_CASE("lexicographic order") {
    bit_vector a = bit_vector::from_string("0100");
    bit_vector b = bit_vector::from_string("1000");
    CHECK(a.lex_less(b));
    CHECK_FALSE(b.lex_less(a));
    CHECK_FALSE(a.lex_less(a));
    // position 0 dominates even when later bits differ
    CHECK(bit_vector::from_string("0111").lex_less(bit_vector::from_string("1000")));
}

TEST_CASE("reduce_rref examples") {
    SUBCASE("identity is fixed") {
        bit_matrix id = bit_matrix::identity(3);
        rref_result r = reduce_rref(id);
        CHECK(r.mat == id);
        CHECK(r.pivots == std::vector<std::size_t>{0, 1, 2});
    }
    SUBCASE("dependent row removed") {
        bit_matrix m = bit_matrix::from_strings({"110", "011", "101"});
        rref_result r = reduce_rref(m);
        CHECK(r.mat == bit_matrix::from_strings({"101", "011"}));
        CHECK(r.pivots == std::vector<std::size_t>{0, 1});
        // row space unchanged (oracle: full enumeration)
        CHECK(oracle::rowspace(m) == oracle::rowspace(r.mat));
    }
    SUBCASE("zero matrix collapses") {
        bit_matrix z(2, 4);
        rref_result r = reduce_rref(z);
        CHECK(r.mat.rows() == 0);
        CHECK(r.mat.cols() == 4);
        CHECK(r.pivots.empty());
    }
}

TEST_CASE("rank examples") {
    CHECK(rank(bit_matrix::identity(4)) == 4);
    CHECK(rank(bit_matrix::from_strings({"0110", "0110"})) == 1);

    // random 5x8: rank = log2 of the row-space size
    std::mt19937_64 rng(41);
    for (int rep = 0; rep < 20; ++rep) {
        std::vector<bit_vector> rows;
        for (int i = 0; i < 5; ++i) rows.push_back(oracle::random_vector(rng, 8));
        bit_matrix m = bit_matrix::from_rows(rows);
        std::size_t sz = oracle::rowspace(m).size();
        std::size_t lg = 0;
        while ((std::size_t(1) << lg) < sz) ++lg;
        CHECK(rank(m) == lg);
    }
}

TEST_CASE("kernel examples") {
    SUBCASE("1x2 all-ones") {
        bit_matrix m = bit_matrix::from_strings({"11"});
        bit_matrix k = kernel(m);
        REQUIRE(k.rows() == 1);
        CHECK(k.row(0).to_string() == "11");
    }
    SUBCASE("identity has trivial kernel") {
        bit_matrix k = kernel(bit_matrix::identity(5));
        CHECK(k.rows() == 0);
        CHECK(k.cols() == 5);
    }
    SUBCASE("extended Hamming kernel spans the same code") {
        linear_code h8 = construct("extended_hamming_8");
        bit_matrix k = kernel(h8.generator());
        REQUIRE(k.rows() == 4);
        CHECK(oracle::rowspace(k) == oracle::rowspace(h8.generator()));
    }
}

TEST_CASE("contains examples") {
    bit_matrix m = reduce_rref(bit_matrix::from_strings({"1100", "0011"})).mat;
    CHECK(contains(m, bit_vector::from_string("1111")));
    CHECK_FALSE(contains(m, bit_vector::from_string("1000")));
    CHECK(contains(m, bit_vector(4)));
    CHECK_THROWS_AS(contains(m, bit_vector(3)), std::invalid_argument);

    SUBCASE("every Golay codeword is contained") {
        linear_code g = construct("golay_24");
        std::size_t cnt = 0;
        for_each_nonzero_codeword(g, [&](const bit_vector& w) {
            CHECK(g.contains(w));
            ++cnt;
        });
        CHECK(cnt == 4095);
    }
}

TEST_CASE("rank-nullity and rref properties on random matrices") {
    std::mt19937_64 rng(42);
    for (int rep = 0; rep < 60; ++rep) {
        std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 10;
        std::vector<bit_vector> rs;
        for (std::size_t i = 0; i < rows; ++i) rs.push_back(oracle::random_vector(rng, cols));
        bit_matrix m = bit_matrix::from_rows(rs);

        CHECK(rank(m) + kernel(m).rows() == cols);

        rref_result r1 = reduce_rref(m);
        rref_result r2 = reduce_rref(r1.mat);
        CHECK(r1.mat == r2.mat);  // idempotent
        CHECK(r1.pivots == r2.pivots);

        // row space preserved: double inclusion through contains
        for (std::size_t i = 0; i < m.rows(); ++i) CHECK(contains(r1.mat, m.row(i)));
        std::set<std::string> space = oracle::rowspace(m);
        for (std::size_t i = 0; i < r1.mat.rows(); ++i)
            CHECK(space.count(r1.mat.row(i).to_string()) == 1);

        // contains agrees with full row-space enumeration
        for (int probe = 0; probe < 10; ++probe) {
            bit_vector v = oracle::random_vector(rng, cols);
            CHECK(contains(r1.mat, v) == (space.count(v.to_string()) == 1));
        }

        // kernel rows really annihilate
        bit_matrix k = kernel(m);
        for (std::size_t i = 0; i < k.rows(); ++i)
            for (std::size_t j = 0; j < m.rows(); ++j)
                CHECK_FALSE(m.row(j).dot(k.row(i)));
    }
}

TEST_CASE("transpose") {
    bit_matrix m = bit_matrix::from_strings({"110", "001"});
    bit_matrix t = m.transposed();
    CHECK(t.rows() == 3);
    CHECK(t.cols() == 2);
    CHECK(t == bit_matrix::from_strings({"10", "10", "01"}));
    CHECK(t.transposed() == m);
}
