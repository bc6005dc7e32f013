#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "fibcorr/word.hpp"

namespace fibcorr {

using BigCount = boost::multiprecision::cpp_int;

/// Exhaustive enumeration is limited to this many symbols (2^n words).
inline constexpr int kBruteforceLenCap = 24;

/// Factor-tracking automaton over {0,1}. State 0 is the start; transitions
/// are total; dead states are absorbing, and a word drives the automaton
/// into a dead state iff it contains some pattern as a factor. All dead
/// trie nodes are collapsed into a single sink.
struct PatternAutomaton {
    std::vector<std::array<std::int32_t, 2>> next;
    std::vector<std::uint8_t> dead;

    std::size_t state_count() const noexcept { return next.size(); }
    std::size_t live_state_count() const;

    /// True iff w contains no pattern as a factor.
    bool accepts(const Word& w) const;
};

/// Builds the automaton from the pattern set's prefix trie with failure
/// links. Rejects an empty pattern; an empty pattern set yields the
/// one-state automaton that accepts everything.
PatternAutomaton build_automaton(const std::vector<Word>& patterns);

/// counts[n] = number of length-n binary words containing no pattern as a
/// factor, for n = 0..max_len, by state-population dynamic programming.
std::vector<BigCount> count_avoiding(const std::vector<Word>& patterns, int max_len);

/// Same contract, by exhaustive enumeration of all 2^n words per length.
/// Rejects max_len beyond the enumeration budget.
std::vector<BigCount> count_avoiding_bruteforce(const std::vector<Word>& patterns, int max_len);

/// {M_3, ..., M_K}: the minimal forbidden factors up to family index K.
std::vector<Word> forbidden_family(int max_index);

}  // namespace fibcorr
