#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "wbound/boundary.hpp"
#include "wbound/word_registry.hpp"

using namespace wbound;

TEST_CASE("Fibonacci boundary sets at small n") {
    InfiniteWord f = fibonacci_word();
    BoundarySet b1 = boundary_set(f, 1, 1, 4000);
    CHECK(b1 == make_boundary_set(1, 1, {{"0", "0"}, {"0", "1"}, {"1", "0"}}));
    BoundarySet b2 = boundary_set(f, 1, 2, 4000);
    CHECK(b2.size() == 4);

    // the five length-4 factors give the first 2-boundary set
    BoundarySet a = boundary_set(f, 2, 2, 4000);
    CHECK(a == make_boundary_set(2, 2, {{"00", "10"}, {"01", "00"}, {"01", "01"},
                                        {"10", "01"}, {"10", "10"}}));
    BoundarySet b = boundary_set(f, 2, 3, 4000);
    CHECK(b == make_boundary_set(2, 2, {{"00", "00"}, {"00", "01"}, {"01", "01"},
                                        {"01", "10"}, {"10", "00"}, {"10", "10"}}));
}

TEST_CASE("Fibonacci 1- and 2-boundary words match the worked example") {
    InfiniteWord f = fibonacci_word();
    BoundaryWord b1 = boundary_word(f, 1, 1, 29);
    CHECK(b1.stabilized);
    CHECK(b1.to_string() == "abbabbbbabbabbbbabbbbabbabbbb");

    BoundaryWord b2 = boundary_word(f, 2, 2, 26);
    CHECK(b2.to_string() == "abcdefbcdbcdefbcdefbcdbcd");
    REQUIRE(b2.alphabet.sets.size() == 6);
    CHECK(b2.alphabet.sets[1] == make_boundary_set(2, 2, {{"00", "00"}, {"00", "01"},
                                                          {"01", "01"}, {"01", "10"},
                                                          {"10", "00"}, {"10", "10"}}));
    CHECK(b2.alphabet.sets[2] == make_boundary_set(2, 2, {{"00", "01"}, {"00", "10"},
                                                          {"01", "00"}, {"01", "10"},
                                                          {"10", "00"}, {"10", "01"}}));
    CHECK(b2.alphabet.sets[3] == make_boundary_set(2, 2, {{"00", "00"}, {"00", "10"},
                                                          {"01", "00"}, {"01", "01"},
                                                          {"10", "01"}, {"10", "10"}}));
    CHECK(b2.alphabet.sets[4] == make_boundary_set(2, 2, {{"00", "01"}, {"01", "01"},
                                                          {"01", "10"}, {"10", "00"},
                                                          {"10", "01"}, {"10", "10"}}));
    CHECK(b2.alphabet.sets[5] == make_boundary_set(2, 2, {{"00", "10"}, {"01", "00"},
                                                          {"01", "01"}, {"01", "10"},
                                                          {"10", "01"}, {"10", "10"}}));
}

TEST_CASE("overlapping borders for n < l appear exactly once (aperiodic words)") {
    InfiniteWord f = fibonacci_word();
    for (size_t l = 2; l <= 4; ++l) {
        for (size_t m = 1; m < l; ++m) {
            BoundarySet bm = boundary_set(f, l, m, 20000);
            // overlap constraint: u_{m+1..l} = v_{1..l-m}
            for (auto& [u, v] : bm.pairs) CHECK(u.substr(m) == v.substr(0, l - m));
            BoundaryWord bw = boundary_word(f, l, m, 2000);
            REQUIRE(bw.alphabet.sets[bw.letters[0]] == bm);
            CHECK(std::count(bw.letters.begin(), bw.letters.end(), bw.letters[0]) == 1);
        }
    }
}

TEST_CASE("eventual periodicity of boundary words of eventually periodic words") {
    std::mt19937 rng(20260810);
    for (int trial = 0; trial < 12; ++trial) {
        size_t ul = rng() % 7, vl = 1 + rng() % 6;
        Word u, v;
        for (size_t i = 0; i < ul; ++i) u.push_back(static_cast<int>(rng() % 2));
        for (size_t i = 0; i < vl; ++i) v.push_back(static_cast<int>(rng() % 2));
        InfiniteWord w = periodic_word(u, v, char_names("01"));
        for (size_t l = 1; l <= 3; ++l) {
            size_t start = std::max(l, u.size());
            for (size_t n = start; n + v.size() <= start + 40; ++n)
                CHECK(boundary_set(w, l, n + v.size(), 6000) == boundary_set(w, l, n, 6000));
        }
    }
}

TEST_CASE("k,l boundary sets") {
    InfiniteWord f = fibonacci_word();
    // degenerate case k = l
    CHECK(boundary_set_kl(f, 2, 2, 5, 4000) == boundary_set(f, 2, 5, 4000));
    // brute force cross-check at k=1, l=2, n=3
    auto p = f.prefix(4000);
    std::set<std::pair<std::string, std::string>> expect;
    for (size_t i = 0; i + 3 + 2 <= p.size(); ++i) {
        auto sym = [&](size_t j) { return std::string(1, static_cast<char>('0' + p[j])); };
        expect.insert({sym(i), sym(i + 3) + sym(i + 4)});
    }
    BoundarySet got = boundary_set_kl(f, 1, 2, 3, 4000);
    std::set<std::pair<std::string, std::string>> gotset(got.pairs.begin(), got.pairs.end());
    CHECK(gotset == expect);
    // periodic (01)^w at k = l = 1 and even n
    InfiniteWord alt = periodic_word({}, {0, 1}, char_names("01"));
    CHECK(boundary_set_kl(alt, 1, 1, 6, 2000) ==
          make_boundary_set(1, 1, {{"0", "0"}, {"1", "1"}}));
}

TEST_CASE("Thue-Morse 2-boundary word and census") {
    InfiniteWord t = thue_morse_word();
    BoundaryWord bw = boundary_word(t, 2, 2, 35);
    CHECK(bw.to_string() == "abcdedfdgdgdgdcdgdgdgdgdgdgdgdfdgd");
    BoundaryWord census_range = boundary_word(t, 2, 2, 2000);
    auto census = alphabet_census(census_range);
    CHECK(census.size() == 7);
    // g is the full square over the length-2 factor set
    const BoundarySet& g = census_range.alphabet.sets[6];
    CHECK(g.size() == 16);
}

TEST_CASE("Tribonacci boundary census: seven sets, first two occur once") {
    InfiniteWord t = tribonacci_word();
    BoundaryWord bw = boundary_word(t, 1, 1, 5000);
    CHECK(bw.stabilized);
    auto census = alphabet_census(bw);
    CHECK(census.size() == 7);
    CHECK(census[0].count == 1);
    CHECK(census[1].count == 1);
    for (size_t i = 2; i < census.size(); ++i) CHECK(census[i].count > 1);
}
