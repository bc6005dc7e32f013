#include "fibcorr/correlation.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "fibcorr/fibonacci.hpp"
#include "generators.hpp"

using fibcorr::correlation;
using fibcorr::correlation_poly;
using fibcorr::min_forbidden;
using fibcorr::Polynomial;
using fibcorr::Word;
using fibcorr::testing::random_palindrome;
using fibcorr::testing::random_word;

namespace {

// The overlap rule stated independently of the correlation loop: the
// length-(|u|-k) suffix of u against the equally long prefix of v.
bool suffix_prefix_match(const Word& u, const Word& v, std::size_t k) {
    const std::size_t len = u.size() - k;
    if (len > v.size()) return false;
    return u.suffix(len) == v.prefix(len);
}

}  // namespace

TEST_CASE("correlation of the worked example") {
    CHECK(correlation(Word::parse("10100101"), Word::parse("10101")).str() == "00000101");
    CHECK(correlation(Word::parse("0"), Word::parse("0")).str() == "1");
    CHECK(correlation(Word::parse("11"), Word::parse("000")).str() == "00");
    CHECK_THROWS_AS(correlation(Word(), Word::parse("0")), std::domain_error);
    CHECK_THROWS_AS(correlation(Word::parse("0"), Word()), std::domain_error);
}

TEST_CASE("correlation polynomial of the worked example") {
    CHECK(correlation_poly(Word::parse("10100101"), Word::parse("10101")).str() == "z^2 + 1");
    CHECK(correlation_poly(Word::parse("000"), Word::parse("000")).str() == "z^2 + z + 1");
    const Polynomial zero = correlation_poly(Word::parse("0"), Word::parse("1"));
    CHECK(zero.is_zero());
    CHECK(zero.str() == "0");
}

TEST_CASE("coefficients line up with the correlation word") {
    std::mt19937 rng(17);
    for (int t = 0; t < 200; ++t) {
        const Word u = random_word(rng, 1, 40);
        const Word v = random_word(rng, 1, 40);
        const Word c = correlation(u, v);
        const Polynomial p = correlation_poly(u, v);
        for (std::size_t k = 0; k < c.size(); ++k) {
            CHECK(p.coefficient(static_cast<std::int64_t>(c.size() - 1 - k)) == c[k]);
        }
    }
}

TEST_CASE("short-over-long overlap rule") {
    auto check_pair = [](const Word& u, const Word& v) {
        const Word c = correlation(u, v);
        for (std::size_t k = 0; k < u.size(); ++k) {
            CHECK((c[k] == 1) == suffix_prefix_match(u, v, k));
        }
    };
    for (int i = 3; i <= 12; ++i) {
        for (int j = i; j <= 12; ++j) check_pair(min_forbidden(i), min_forbidden(j));
    }
    std::mt19937 rng(19);
    for (int t = 0; t < 300; ++t) {
        Word u = random_word(rng, 1, 48);
        Word v = random_word(rng, 1, 48);
        if (u.size() > v.size()) std::swap(u, v);
        check_pair(u, v);
    }
}

TEST_CASE("long-over-short: leading shifts vanish when v is not a factor of u") {
    for (int m = 4; m <= 12; ++m) {
        for (int n = 3; n < m; ++n) {
            const Word u = min_forbidden(m);
            const Word v = min_forbidden(n);
            REQUIRE_FALSE(fibcorr::is_factor(v, u));
            const Word c = correlation(u, v);
            const std::size_t gap = u.size() - v.size();
            for (std::size_t k = 0; k < u.size(); ++k) {
                CHECK((c[k] == 1) == (k > gap && suffix_prefix_match(u, v, k)));
            }
        }
    }
}

TEST_CASE("interior shifts do fire when v is a factor of u") {
    // 010 sits inside 01010 at shift 0 and 2 of the definition's (i, j) grid.
    const Word c = correlation(Word::parse("01010"), Word::parse("010"));
    CHECK(c.str() == "10101");
}

TEST_CASE("palindrome transpose window") {
    auto check_pair = [](const Word& u, const Word& v) {
        REQUIRE(u.size() <= v.size());
        const Word cu = correlation(u, v);
        const Word cv = correlation(v, u);
        CHECK(cu == cv.suffix(u.size()));
    };
    for (int i = 3; i <= 12; ++i) {
        for (int j = i; j <= 12; ++j) check_pair(min_forbidden(i), min_forbidden(j));
    }
    std::mt19937 rng(23);
    for (int t = 0; t < 500; ++t) {
        Word u = random_palindrome(rng, 64);
        Word v = random_palindrome(rng, 64);
        if (u.size() > v.size()) std::swap(u, v);
        check_pair(u, v);
    }
}

TEST_CASE("autocorrelation encodes the border lengths") {
    std::mt19937 rng(29);
    for (int t = 0; t < 300; ++t) {
        const Word w = random_word(rng, 1, 64);
        const Word c = correlation(w, w);
        CHECK(c[0] == 1);
        const auto bs = fibcorr::borders_bruteforce(w);
        for (std::size_t k = 0; k < w.size(); ++k) {
            const bool bordered =
                std::binary_search(bs.begin(), bs.end(), w.prefix(w.size() - k));
            CHECK((c[k] == 1) == bordered);
        }
    }
}

TEST_CASE("shift diagram layout") {
    const Word u = Word::parse("10100101");
    const Word v = Word::parse("10101");
    const std::string diagram = fibcorr::correlation_diagram(u, v);
    std::vector<std::string> lines;
    std::size_t start = 0;
    while (start < diagram.size()) {
        const std::size_t end = diagram.find('\n', start);
        lines.push_back(diagram.substr(start, end - start));
        start = end + 1;
    }
    REQUIRE(lines.size() == 2 + u.size());  // header, u row, one row per shift
    const Word c = correlation(u, v);
    for (std::size_t k = 0; k < u.size(); ++k) {
        const std::string& row = lines[2 + k];
        CHECK(row.back() == static_cast<char>('0' + c[k]));
        CHECK(row.find("k=" + std::to_string(k)) == 0);
    }
}
