#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace fibcorr {

/// A finite word over the alphabet {0,1}. Immutable in spirit: all
/// operations return new values. The empty word is a valid value.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<std::uint8_t> symbols);

    /// Parses a string of '0'/'1' characters; "" gives the empty word.
    static Word parse(std::string_view text);

    std::size_t size() const noexcept { return symbols_.size(); }
    bool empty() const noexcept { return symbols_.empty(); }
    std::uint8_t operator[](std::size_t i) const { return symbols_[i]; }
    const std::vector<std::uint8_t>& symbols() const noexcept { return symbols_; }

    std::string str() const;

    Word prefix(std::size_t len) const;
    Word suffix(std::size_t len) const;

    void append(std::uint8_t symbol);

    friend Word operator+(const Word& a, const Word& b);

    bool operator==(const Word&) const = default;

    /// Shortlex order: by length first, then lexicographically. This is the
    /// canonical order for border sets, whose member lengths are distinct.
    std::strong_ordering operator<=>(const Word& other) const noexcept;

private:
    std::vector<std::uint8_t> symbols_;
};

Word reverse(const Word& w);
bool is_palindrome(const Word& w);

/// True iff u occurs as a contiguous block of w; the empty word is a factor
/// of every word. Linear-time (prefix-function search).
bool is_factor(const Word& u, const Word& w);

/// Border array: pi[i] = length of the longest proper border of w[0..i].
std::vector<std::size_t> prefix_function(const Word& w);

/// All nonempty borders of w in increasing length, by naive prefix/suffix
/// comparison. This is the trusted oracle; borders() is the fast variant.
/// Rejects the empty word.
std::vector<Word> borders_bruteforce(const Word& w);

/// Same contract as borders_bruteforce, via the prefix-function chain.
std::vector<Word> borders(const Word& w);

/// Checked removal of a required leading/trailing symbol; throws
/// std::domain_error when the symbol is absent.
Word left_quotient(const Word& w, std::uint8_t symbol);
Word right_quotient(const Word& w, std::uint8_t symbol);

}  // namespace fibcorr
