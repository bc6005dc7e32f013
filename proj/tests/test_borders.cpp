#include "fibcorr/borders.hpp"

#include <algorithm>
#include <stdexcept>

#include "doctest.h"
#include "fibcorr/fibonacci.hpp"

using fibcorr::border_intersection;
using fibcorr::border_set_brute;
using fibcorr::border_set_closed;
using fibcorr::border_set_recursive;
using fibcorr::BorderSet;
using fibcorr::min_forbidden;
using fibcorr::Word;

namespace {

std::vector<std::string> as_strings(const std::vector<Word>& words) {
    std::vector<std::string> out;
    for (const Word& w : words) out.push_back(w.str());
    return out;
}

}  // namespace

TEST_CASE("recursive construction hits the worked sets") {
    CHECK(as_strings(border_set_recursive(3).members) == std::vector<std::string>{"1", "11"});
    CHECK(as_strings(border_set_recursive(6).members) ==
          std::vector<std::string>{"0", "00", "00100", "00100100"});
    CHECK(as_strings(border_set_recursive(7).members) ==
          std::vector<std::string>{"1", "101", "10100101", "1010010100101"});
    CHECK_THROWS_AS(border_set_recursive(2), std::domain_error);
    CHECK_THROWS_AS(border_set_recursive(31), std::domain_error);
}

TEST_CASE("closed construction hits the base cases") {
    CHECK(as_strings(border_set_closed(4).members) == std::vector<std::string>{"0", "00", "000"});
    CHECK(as_strings(border_set_closed(5).members) ==
          std::vector<std::string>{"1", "101", "10101"});
    CHECK(border_set_closed(8).members == fibcorr::borders_bruteforce(min_forbidden(8)));
    CHECK_THROWS_AS(border_set_closed(2), std::domain_error);
}

TEST_CASE("member lengths of B_8 are Fibonacci numbers") {
    std::vector<std::size_t> lengths;
    for (const Word& w : border_set_closed(8).members) lengths.push_back(w.size());
    CHECK(lengths == std::vector<std::size_t>{1, 2, 5, 13, 21});
}

TEST_CASE("three constructions agree up to the cap-sized sweep") {
    for (int n = 3; n <= 16; ++n) {
        const BorderSet brute = border_set_brute(n);
        const BorderSet rec = border_set_recursive(n);
        const BorderSet closed = border_set_closed(n);
        CHECK(brute == rec);
        CHECK(rec == closed);

        const std::size_t expected =
            n == 3 ? 2 : static_cast<std::size_t>((n - 2 - (n % 2)) / 2 + 2);
        CHECK(closed.members.size() == expected);
    }
}

TEST_CASE("border set invariants") {
    for (int n = 3; n <= 14; ++n) {
        const BorderSet set = border_set_closed(n);
        const Word m = min_forbidden(n);
        CHECK(set.index == n);
        CHECK(set.members.back() == m);
        std::vector<std::size_t> lengths;
        for (const Word& b : set.members) {
            CHECK(m.prefix(b.size()) == b);
            CHECK(m.suffix(b.size()) == b);
            lengths.push_back(b.size());
        }
        CHECK(std::adjacent_find(lengths.begin(), lengths.end()) == lengths.end());
        CHECK(std::is_sorted(lengths.begin(), lengths.end()));
        // expected lengths: 1 and F_n, plus F_j for j = n-1, n-3, ..., 3
        std::vector<std::size_t> expected = {1};
        for (int j = 3; j <= n - 1; ++j) {
            if ((n - j) % 2 == 1) expected.push_back(static_cast<std::size_t>(fibcorr::fib_number(j)));
        }
        expected.push_back(static_cast<std::size_t>(fibcorr::fib_number(n)));
        CHECK(lengths == expected);
    }
}

TEST_CASE("morphism transport of borders, all four directions") {
    const Word zero = Word::parse("0");
    auto contains = [](const std::vector<Word>& sorted, const Word& w) {
        return std::binary_search(sorted.begin(), sorted.end(), w);
    };
    for (int n = 1; 2 * n + 3 <= 16; ++n) {
        const auto odd = border_set_brute(2 * n + 1).members;
        const auto even = border_set_brute(2 * n + 2).members;
        const auto next_odd = border_set_brute(2 * n + 3).members;
        for (const Word& b : odd) CHECK(contains(even, fibcorr::phi(b) + zero));
        for (const Word& b : even) CHECK(contains(next_odd, fibcorr::left_quotient(fibcorr::phi(b), 0)));
        for (const Word& b : next_odd) CHECK(contains(even, fibcorr::phi_inverse(zero + b)));
        for (const Word& b : even) {
            if (b.size() > 1) {
                CHECK(contains(odd, fibcorr::phi_inverse(fibcorr::right_quotient(b, 0))));
            }
        }
    }
}

TEST_CASE("intersections") {
    CHECK(as_strings(border_intersection(5, 7)) == std::vector<std::string>{"1", "101"});
    CHECK(border_intersection(4, 7).empty());
    CHECK(border_intersection(6, 6) == border_set_closed(6).members);

    for (int n = 3; n <= 14; ++n) {
        for (int m = n + 1; m <= 14; ++m) {
            const auto both = border_intersection(n, m);
            CHECK(both == border_intersection(m, n));
            if (n % 2 != m % 2) {
                CHECK(both.empty());
            } else {
                auto expected = border_set_closed(n).members;
                expected.pop_back();
                CHECK(both == expected);
                // cross-check against brute-force border sets
                const auto a = border_set_brute(n).members;
                const auto b = border_set_brute(m).members;
                std::vector<Word> direct;
                std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                                      std::back_inserter(direct));
                CHECK(both == direct);
            }
        }
    }
}
