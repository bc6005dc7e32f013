#include "fibcorr/word.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "generators.hpp"

using fibcorr::Word;
using fibcorr::testing::all_words;
using fibcorr::testing::random_word;

namespace {

std::vector<std::string> as_strings(const std::vector<Word>& words) {
    std::vector<std::string> out;
    for (const Word& w : words) out.push_back(w.str());
    return out;
}

}  // namespace

TEST_CASE("parse and render round-trip") {
    CHECK(Word::parse("").empty());
    CHECK(Word::parse("0100101").str() == "0100101");
    CHECK(Word::parse("1").size() == 1);
    CHECK_THROWS_AS(Word::parse("012"), std::invalid_argument);
    CHECK_THROWS_AS(Word::parse("eps"), std::invalid_argument);
}

TEST_CASE("reverse") {
    CHECK(fibcorr::reverse(Word::parse("01001010010")) == Word::parse("01001010010"));
    CHECK(fibcorr::reverse(Word()) == Word());
    CHECK(fibcorr::reverse(Word::parse("011")) == Word::parse("110"));
}

TEST_CASE("is_palindrome") {
    CHECK(fibcorr::is_palindrome(Word::parse("010010")));
    CHECK(fibcorr::is_palindrome(Word()));
    CHECK_FALSE(fibcorr::is_palindrome(Word::parse("01")));
}

TEST_CASE("is_factor") {
    CHECK_FALSE(fibcorr::is_factor(Word::parse("11"), Word::parse("0100101")));
    CHECK(fibcorr::is_factor(Word(), Word::parse("010")));
    CHECK(fibcorr::is_factor(Word::parse("010"), Word::parse("01001")));
    CHECK(fibcorr::is_factor(Word::parse("01001"), Word::parse("01001")));
    CHECK_FALSE(fibcorr::is_factor(Word::parse("0100110"), Word::parse("01001")));
}

TEST_CASE("borders of the paper's example words") {
    CHECK(as_strings(fibcorr::borders_bruteforce(Word::parse("01001010010"))) ==
          std::vector<std::string>{"0", "010", "010010", "01001010010"});
    CHECK(as_strings(fibcorr::borders_bruteforce(Word::parse("00100100"))) ==
          std::vector<std::string>{"0", "00", "00100", "00100100"});
    CHECK(as_strings(fibcorr::borders_bruteforce(Word::parse("01"))) ==
          std::vector<std::string>{"01"});
    CHECK_THROWS_AS(fibcorr::borders_bruteforce(Word()), std::domain_error);
    CHECK_THROWS_AS(fibcorr::borders(Word()), std::domain_error);
}

TEST_CASE("border properties, exhaustive to length 10 and random beyond") {
    auto check_word = [](const Word& w) {
        const auto slow = fibcorr::borders_bruteforce(w);
        REQUIRE(!slow.empty());
        CHECK(slow.back() == w);
        CHECK(fibcorr::borders(w) == slow);
        const auto rev = fibcorr::borders_bruteforce(fibcorr::reverse(w));
        for (const Word& b : slow) {
            CHECK(w.prefix(b.size()) == b);
            CHECK(w.suffix(b.size()) == b);
            CHECK(std::binary_search(rev.begin(), rev.end(), fibcorr::reverse(b)));
        }
        CHECK(fibcorr::reverse(fibcorr::reverse(w)) == w);
    };
    for (std::size_t len = 1; len <= 10; ++len) {
        for (const Word& w : all_words(len)) check_word(w);
    }
    std::mt19937 rng(7);
    for (int t = 0; t < 300; ++t) check_word(random_word(rng, 1, 200));
}

TEST_CASE("palindromic words have reverse-closed border sets") {
    std::mt19937 rng(11);
    for (int t = 0; t < 100; ++t) {
        const Word w = fibcorr::testing::random_palindrome(rng, 64);
        const auto bs = fibcorr::borders_bruteforce(w);
        for (const Word& b : bs) {
            CHECK(std::binary_search(bs.begin(), bs.end(), fibcorr::reverse(b)));
        }
    }
}

TEST_CASE("quotients are checked strips") {
    CHECK(fibcorr::left_quotient(Word::parse("01001"), 0) == Word::parse("1001"));
    CHECK(fibcorr::right_quotient(Word::parse("01001"), 1) == Word::parse("0100"));
    CHECK_THROWS_AS(fibcorr::left_quotient(Word::parse("1001"), 0), std::domain_error);
    CHECK_THROWS_AS(fibcorr::right_quotient(Word::parse("1001"), 0), std::domain_error);
    CHECK_THROWS_AS(fibcorr::left_quotient(Word(), 0), std::domain_error);
}

TEST_CASE("shortlex ordering") {
    CHECK(Word::parse("1") < Word::parse("00"));
    CHECK(Word::parse("01") < Word::parse("10"));
    CHECK(Word() < Word::parse("0"));
    std::vector<Word> v = {Word::parse("10"), Word::parse("0"), Word::parse("010")};
    std::sort(v.begin(), v.end());
    CHECK(as_strings(v) == std::vector<std::string>{"0", "10", "010"});
}

TEST_CASE("prefix and suffix bounds") {
    const Word w = Word::parse("0110");
    CHECK(w.prefix(0) == Word());
    CHECK(w.suffix(4) == w);
    CHECK_THROWS_AS(w.prefix(5), std::out_of_range);
    CHECK_THROWS_AS(w.suffix(5), std::out_of_range);
}
