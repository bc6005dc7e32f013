#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace fibcorr {

/// Sparse univariate polynomial in z with exact nonnegative integer
/// coefficients and exponents. Canonical form stores no zero coefficients;
/// the zero polynomial has no terms.
class Polynomial {
public:
    Polynomial() = default;

    void add_term(std::int64_t exponent, std::int64_t coefficient = 1);

    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t term_count() const noexcept { return terms_.size(); }
    std::int64_t coefficient(std::int64_t exponent) const;

    /// exponent -> coefficient, ascending by exponent.
    const std::map<std::int64_t, std::int64_t>& terms() const noexcept { return terms_; }

    /// Descending-exponent rendering: "z^4 + z^2 + 1", "z" for exponent 1,
    /// "1" for exponent 0, "0" for the zero polynomial.
    std::string str() const;

    /// Same layout with braced exponents: "z^{12} + z^{7} + z^{2} + 1".
    std::string latex() const;

    bool operator==(const Polynomial&) const = default;

private:
    std::string render(bool braced) const;

    std::map<std::int64_t, std::int64_t> terms_;
};

}  // namespace fibcorr
