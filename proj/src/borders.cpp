#include "fibcorr/borders.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "fibcorr/fibonacci.hpp"

namespace fibcorr {

namespace {

void check_border_index(int n) {
    if (n < 3 || n > kMaxWordIndex) {
        throw std::domain_error("border set index must lie in [3, " +
                                std::to_string(kMaxWordIndex) + "], got " + std::to_string(n));
    }
}

Word decorated(const Word& core, std::uint8_t symbol) {
    Word wrap;
    wrap.append(symbol);
    return wrap + core + wrap;
}

}  // namespace

BorderSet border_set_brute(int n) {
    check_border_index(n);
    return BorderSet{n, borders_bruteforce(min_forbidden(n))};
}

BorderSet border_set_recursive(int n) {
    check_border_index(n);
    std::vector<Word> level = {Word::parse("1"), Word::parse("11")};  // B_3
    for (int idx = 3; idx < n; ++idx) {
        std::vector<Word> next;
        if (idx % 2 == 1) {
            // odd -> even: {0} plus phi(b)0 for every border b
            next.push_back(Word::parse("0"));
            Word zero = Word::parse("0");
            for (const Word& b : level) next.push_back(phi(b) + zero);
        } else {
            // even -> odd: strip the guaranteed leading 0 off each phi image
            for (const Word& b : level) next.push_back(left_quotient(phi(b), 0));
        }
        std::sort(next.begin(), next.end());
        level = std::move(next);
    }
    return BorderSet{n, std::move(level)};
}

BorderSet border_set_closed(int n) {
    check_border_index(n);
    std::vector<Word> members;
    if (n == 3) {
        members = {Word::parse("1"), Word::parse("11")};
    } else {
        const std::uint8_t s = (n % 2 == 1) ? 1 : 0;
        Word single;
        single.append(s);
        members.push_back(single);
        // s p_j s for j = n-1, n-3, ..., 3; lengths F_j
        for (int j = n - 1; j >= 3; j -= 2) {
            members.push_back(decorated(palindromic_prefix(j), s));
        }
        members.push_back(min_forbidden(n));
        std::sort(members.begin(), members.end());
    }
    return BorderSet{n, std::move(members)};
}

std::vector<Word> border_intersection(int n, int m) {
    const BorderSet a = border_set_closed(n);
    const BorderSet b = border_set_closed(m);
    std::vector<Word> out;
    std::set_intersection(a.members.begin(), a.members.end(), b.members.begin(), b.members.end(),
                          std::back_inserter(out));
    return out;
}

}  // namespace fibcorr
