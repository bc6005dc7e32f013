#pragma once

#include <cstdint>
#include <stdexcept>

#include "fibcorr/word.hpp"

namespace fibcorr {

/// Largest index for which F_n fits exact signed 64-bit arithmetic.
inline constexpr int kMaxNumberIndex = 92;

/// Materialized-word cap: F_n <= 2^20 holds exactly for n <= 30. Word-valued
/// family operations reject larger indices; the closed-form layer works
/// symbolically beyond this.
inline constexpr int kMaxWordIndex = 30;

/// Thrown when phi_inverse is applied to a word outside the image of phi.
class NotInImageError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// F_1 = F_2 = 1, F_n = F_{n-1} + F_{n-2}. Rejects n < 1 and n > 92.
std::int64_t fib_number(int n);

/// The Fibonacci morphism: 0 -> 01, 1 -> 0, applied letterwise.
Word phi(const Word& w);

/// Unique v with phi(v) = w, when it exists. The code {01, 0} parses
/// deterministically left to right: "01" must be phi(0), a lone "0" must be
/// phi(1), anything else has no preimage.
Word phi_inverse(const Word& w);

/// f_1 = 1, f_2 = 0, f_{n+2} = f_{n+1} f_n. Rejects n < 1 and n > 30.
Word fib_word(int n);

/// p_n: f_n with its last two symbols removed; a palindromic prefix of the
/// infinite Fibonacci word. Rejects n < 3 and n > 30.
Word palindromic_prefix(int n);

/// M_n: the n-th minimal forbidden factor, 1 p_n 1 for odd n and 0 p_n 0 for
/// even n. Rejects n < 3 and n > 30.
Word min_forbidden(int n);

}  // namespace fibcorr
