#pragma once

#include <vector>

#include "fibcorr/word.hpp"

namespace fibcorr {

/// The nonempty borders of the minimal forbidden word M_n, in increasing
/// length. Member lengths are pairwise distinct and M_n itself is a member.
struct BorderSet {
    int index = 0;
    std::vector<Word> members;

    bool operator==(const BorderSet&) const = default;
};

/// Brute-force enumeration on the materialized M_n. Valid for 3 <= n <= 30.
BorderSet border_set_brute(int n);

/// Builds B_n by alternating the two recursion rules upward from
/// B_3 = {1, 11}: an even level is {0} plus the phi(b)0 images of the odd
/// level below it, an odd level is the 0-stripped phi images of the even
/// level below it. Quotient steps are checked strips that fail loudly.
BorderSet border_set_recursive(int n);

/// Assembles B_n directly: the single-symbol border, M_n itself, and the
/// words s p_j s for j = n-1, n-3, ..., 3, where s is the symbol M_n starts
/// with.
BorderSet border_set_closed(int n);

/// Actual set intersection of B_n and B_m, in increasing length.
std::vector<Word> border_intersection(int n, int m);

}  // namespace fibcorr
