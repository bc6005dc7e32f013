#pragma once

#include <string>

#include "fibcorr/polynomial.hpp"
#include "fibcorr/word.hpp"

namespace fibcorr {

/// The correlation of u over v: a word of length |u| whose k-th symbol is 1
/// iff u[i] = v[j] for every index pair with i = j + k. Computed straight
/// from that quantification, not via the suffix/prefix shortcuts (those are
/// theorems checked in the tests). Rejects empty operands.
Word correlation(const Word& u, const Word& v);

/// C_{u,v}(z) = sum over k of C_{u,v}[k] * z^{|u|-1-k}. All-zero correlation
/// words give the zero polynomial.
Polynomial correlation_poly(const Word& u, const Word& v);

/// Multi-line shift diagram of v sliding along u, one row per shift with the
/// correlation symbol in the last column.
std::string correlation_diagram(const Word& u, const Word& v);

}  // namespace fibcorr
