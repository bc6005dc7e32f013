#pragma once

#include <random>

#include "fibcorr/word.hpp"

namespace fibcorr::testing {

inline Word random_word(std::mt19937& rng, std::size_t min_len, std::size_t max_len) {
    std::uniform_int_distribution<std::size_t> len_dist(min_len, max_len);
    std::uniform_int_distribution<int> bit(0, 1);
    const std::size_t len = len_dist(rng);
    Word w;
    for (std::size_t i = 0; i < len; ++i) w.append(static_cast<std::uint8_t>(bit(rng)));
    return w;
}

inline Word random_palindrome(std::mt19937& rng, std::size_t max_len) {
    std::uniform_int_distribution<std::size_t> len_dist(1, max_len);
    std::uniform_int_distribution<int> bit(0, 1);
    const std::size_t len = len_dist(rng);
    std::vector<std::uint8_t> s(len);
    for (std::size_t i = 0; i < (len + 1) / 2; ++i) {
        s[i] = static_cast<std::uint8_t>(bit(rng));
        s[len - 1 - i] = s[i];
    }
    return Word(std::move(s));
}

/// Every word of the given length, for exhaustive small-case sweeps.
inline std::vector<Word> all_words(std::size_t len) {
    std::vector<Word> out;
    out.reserve(std::size_t{1} << len);
    for (std::uint32_t mask = 0; mask < (1u << len); ++mask) {
        Word w;
        for (std::size_t i = 0; i < len; ++i)
            w.append(static_cast<std::uint8_t>((mask >> i) & 1u));
        out.push_back(std::move(w));
    }
    return out;
}

}  // namespace fibcorr::testing
