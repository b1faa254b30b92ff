#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "sdc/autsearch.hpp"
#include "sdc/modstruct.hpp"

using namespace sdc;

TEST_CASE("cycle notation and types") {
    permutation p = permutation::from_cycles(8, "(1,2,3,4,5)(6,7)");
    CHECK(p.type() == cycle_type::parse("5,2,1"));
    CHECK(p.type().str() == "5,2,1");
    CHECK(p.order() == 10);
    CHECK(permutation(5).type() == cycle_type::parse("1^5"));
    CHECK(permutation::from_cycles(4, "(1,2)(3,4)").type() == cycle_type::parse("2^2"));

    CHECK(cycle_type::parse("4^9").degree() == 36);
    CHECK(cycle_type::parse("5^7,1").degree() == 36);
    CHECK(cycle_type::parse("5^7,1").str() == "5^7,1");
    CHECK_THROWS_AS(cycle_type::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(cycle_type::parse("4^"), std::invalid_argument);
    CHECK_THROWS_AS(cycle_type::parse("4,"), std::invalid_argument);
    CHECK_THROWS_AS(permutation::from_cycles(4, "(1,2)(2,3)"), std::invalid_argument);
    CHECK_THROWS_AS(permutation::from_cycles(4, "(1,5)"), std::invalid_argument);
}

TEST_CASE("apply follows the inverse-index convention") {
    CHECK(permutation::from_cycles(2, "(1,2)").apply(bit_vector::from_string("10")).to_string() ==
          "01");
    bit_vector v = bit_vector::from_string("1010");
    CHECK(permutation(4).apply(v) == v);
    CHECK(permutation::from_cycles(4, "(1,2)(3,4)").apply(v).to_string() == "0101");

    // weight preserved; composition respected
    std::mt19937_64 rng(47);
    for (int rep = 0; rep < 30; ++rep) {
        std::size_t n = 3 + rng() % 10;
        permutation p = oracle::random_two_power_permutation(rng, n, 4);
        permutation q = oracle::random_two_power_permutation(rng, n, 2);
        bit_vector w = oracle::random_vector(rng, n);
        CHECK(p.apply(w).weight() == w.weight());
        CHECK((p * q).apply(w) == p.apply(q.apply(w)));
        CHECK((p * p.inverse()).is_identity());
    }
}

TEST_CASE("verify_automorphism") {
    linear_code c4 = construct("c4");
    CHECK(verify_automorphism(c4, permutation::from_cycles(4, "(1,2)(3,4)")));
    CHECK_FALSE(verify_automorphism(c4, permutation::from_cycles(4, "(1,2)")));
    CHECK(verify_automorphism(c4, permutation(4)));
    CHECK_THROWS_AS(verify_automorphism(c4, permutation(5)), std::invalid_argument);

    SUBCASE("group closure on Golay automorphisms") {
        linear_code g = construct("golay_24");
        // cyclic shift on F_23 and the doubling map both stabilize the
        // quadratic residue construction
        std::vector<std::uint32_t> shift(24), dbl(24);
        for (std::uint32_t i = 0; i < 23; ++i) shift[i] = (i + 1) % 23;
        shift[23] = 23;
        for (std::uint32_t i = 0; i < 23; ++i) dbl[i] = (2 * i) % 23;
        dbl[23] = 23;
        permutation s = permutation::from_images(shift);
        permutation m = permutation::from_images(dbl);
        REQUIRE(verify_automorphism(g, s));
        REQUIRE(verify_automorphism(g, m));
        CHECK(verify_automorphism(g, s * m));
        CHECK(verify_automorphism(g, m * s));
        CHECK(verify_automorphism(g, s.inverse()));
        CHECK(verify_automorphism(g, (s * m).inverse()));
    }
}

TEST_CASE("orbit_quotient_action") {
    SUBCASE("hand example: induced 4-cycle") {
        permutation h = permutation::from_cycles(8, "(1,2,3,4)(5,6,7,8)");
        permutation g = permutation::from_cycles(8, "(1,5)(2,6)(3,7)(4,8)");
        permutation q = orbit_quotient_action(h, g);
        CHECK(q.size() == 4);
        CHECK(q == permutation::from_cycles(4, "(1,2,3,4)"));
    }
    SUBCASE("h = g induces the identity") {
        permutation g = permutation::from_cycles(6, "(1,4)(2,5)(3,6)");
        CHECK(orbit_quotient_action(g, g).is_identity());
    }
    SUBCASE("non-commuting pair is rejected") {
        permutation h = permutation::from_cycles(4, "(1,2,3)");
        permutation g = permutation::from_cycles(4, "(1,2)(3,4)");
        CHECK_THROWS_AS(orbit_quotient_action(h, g), std::invalid_argument);
    }
    SUBCASE("g must be a fixed-point-free involution") {
        permutation g = permutation::from_cycles(4, "(1,2)");
        CHECK_THROWS_AS(orbit_quotient_action(permutation(4), g), std::invalid_argument);
    }
    SUBCASE("full scale: a free Z4 x Z2 action induces nine 4-cycles on 36 orbits") {
        // h cycles four standard orbits per 8-coordinate block, g is the
        // standard involution on 72 points
        std::vector<std::uint32_t> gi(72), hi(72);
        for (std::size_t i = 0; i < 72; i += 2) {
            gi[i] = std::uint32_t(i + 1);
            gi[i + 1] = std::uint32_t(i);
        }
        for (std::size_t b = 0; b < 72; b += 8)
            for (std::size_t j = 0; j < 8; ++j) hi[b + j] = std::uint32_t(b + (j + 2) % 8);
        permutation g = permutation::from_images(gi);
        permutation h = permutation::from_images(hi);
        REQUIRE(h.order() == 4);
        REQUIRE((h * h).type() == cycle_type::parse("2^36"));  // free action
        permutation q = orbit_quotient_action(h, g);
        CHECK(q.size() == 36);
        CHECK(q.type() == cycle_type::parse("4^9"));
    }
}

TEST_CASE("min_weight_words") {
    SUBCASE("Golay: 759 octads") {
        std::vector<bit_vector> w = min_weight_words(construct("golay_24"));
        CHECK(w.size() == 759);
        for (const bit_vector& v : w) CHECK(v.weight() == 8);
        CHECK(std::is_sorted(w.begin(), w.end(), bit_vector_lex{}));
    }
    SUBCASE("repetition") {
        std::vector<bit_vector> w = min_weight_words(construct("repetition_2"));
        REQUIRE(w.size() == 1);
        CHECK(w[0].to_string() == "11");
    }
    SUBCASE("c4") {
        std::vector<bit_vector> w = min_weight_words(construct("c4"));
        REQUIRE(w.size() == 2);
        CHECK(w[0].to_string() == "0101");
        CHECK(w[1].to_string() == "1010");
    }
}

TEST_CASE("coordinate_signatures") {
    SUBCASE("repetition codes are fully symmetric") {
        std::vector<coordinate_signature> s = coordinate_signatures(construct("repetition_6"));
        for (std::size_t i = 1; i < s.size(); ++i) CHECK(s[i] == s[0]);
    }
    SUBCASE("Golay: transitive, incidence 253 everywhere") {
        std::vector<coordinate_signature> s = coordinate_signatures(construct("golay_24"));
        for (const coordinate_signature& sig : s) CHECK(sig.incidence == 253);
        for (std::size_t i = 1; i < s.size(); ++i) CHECK(s[i] == s[0]);
    }
    SUBCASE("a direct sum separates into blocks") {
        linear_code c = direct_sum(construct("repetition_2"), construct("extended_hamming_8"));
        std::vector<coordinate_signature> s = coordinate_signatures(c);
        // min weight 2, the lone word 11 0...0; block coordinates differ
        CHECK(s[0] == s[1]);
        CHECK(s[2] == s[9]);
        CHECK_FALSE(s[0] == s[2]);
    }
}

TEST_CASE("find_automorphism_with_cycle_type examples") {
    SUBCASE("repetition_4 has a 4-cycle") {
        auto p = find_automorphism_with_cycle_type(construct("repetition_4"),
                                                   cycle_type::parse("4"));
        REQUIRE(p.has_value());
        CHECK(p->type() == cycle_type::parse("4"));
    }
    SUBCASE("extended Hamming has no 8-cycle") {
        autsearch_stats st;
        auto p = find_automorphism_with_cycle_type(construct("extended_hamming_8"),
                                                   cycle_type::parse("8"), &st);
        CHECK_FALSE(p.has_value());
        CHECK(st.anchor_weight == 4);
        CHECK_FALSE(st.fallback_used);
    }
    SUBCASE("Golay has a fixed-point-free involution") {
        auto p = find_automorphism_with_cycle_type(construct("golay_24"),
                                                   cycle_type::parse("2^12"));
        REQUIRE(p.has_value());
        CHECK(p->type() == cycle_type::parse("2^12"));
        CHECK(verify_automorphism(construct("golay_24"), *p));
    }
    SUBCASE("type must partition n") {
        CHECK_THROWS_AS(
            find_automorphism_with_cycle_type(construct("c4"), cycle_type::parse("3")),
            std::invalid_argument);
    }
    SUBCASE("deterministic witness") {
        auto p1 = find_automorphism_with_cycle_type(construct("golay_24"),
                                                    cycle_type::parse("2^12"));
        auto p2 = find_automorphism_with_cycle_type(construct("golay_24"),
                                                    cycle_type::parse("2^12"));
        REQUIRE(p1.has_value());
        REQUIRE(p2.has_value());
        CHECK(*p1 == *p2);
    }
}

TEST_CASE("search completeness against the full S_n sweep") {
    // every fixture with n <= 8, every cycle type of n: existence must
    // match the brute force over all n! permutations
    std::vector<linear_code> fixtures = {
        construct("repetition_4"),
        construct("c4"),
        construct("i2^2"),
        construct("repetition_6"),
        direct_sum(construct("repetition_2"), construct("repetition_4")),
        construct("extended_hamming_8"),
        construct("i2^4"),
        direct_sum(construct("c4"), construct("c4")),
        direct_sum(construct("repetition_2"), construct("repetition_6")),
        linear_code::from_matrix(bit_matrix::from_strings({"110000", "001100", "000011"})),
        linear_code::from_matrix(bit_matrix::from_strings({"10110100", "01011010"})),
    };
    for (const linear_code& c : fixtures) {
        std::set<std::string> brute = oracle::automorphism_types_bruteforce(c);
        for (const cycle_type& t : oracle::all_cycle_types(c.n())) {
            auto p = find_automorphism_with_cycle_type(c, t);
            bool expect = brute.count(t.str()) == 1;
            CHECK_MESSAGE(p.has_value() == expect,
                          "fixture n=", c.n(), " k=", c.k(), " type=", t.str());
            if (p) {
                // soundness: right type, genuine automorphism
                CHECK(p->type() == t);
                CHECK(verify_automorphism(c, *p));
            }
        }
    }
}
