#pragma once

// Periods, exponents and power-freeness of finite words.
//
// All comparisons are exact: exponents are reduced fractions |x| / per(x)
// and thresholds are compared by cross-multiplication.

#include "dyckolab/word.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace dyckolab {

class Exponent {
public:
    Exponent() = default;
    /// Reduces num/den. Both must be positive.
    Exponent(std::uint64_t num, std::uint64_t den = 1);

    static Exponent parse(std::string_view text); // "7/3" or "2"

    std::uint64_t num() const noexcept { return num_; }
    std::uint64_t den() const noexcept { return den_; }
    std::string str() const;

    friend bool operator==(const Exponent&, const Exponent&) = default;
    friend std::strong_ordering operator<=>(const Exponent& a, const Exponent& b) noexcept
    {
        const unsigned __int128 lhs = static_cast<unsigned __int128>(a.num_) * b.den_;
        const unsigned __int128 rhs = static_cast<unsigned __int128>(b.num_) * a.den_;
        return lhs <=> rhs;
    }

private:
    std::uint64_t num_ = 1;
    std::uint64_t den_ = 1;
};

/// strict = true forbids exponents > threshold (alpha+-power-free);
/// strict = false forbids exponents >= threshold (alpha-power-free).
struct PowerBound {
    Exponent threshold;
    bool strict = false;

    /// True if a factor of exponent e is forbidden by this bound.
    bool forbids(const Exponent& e) const { return strict ? e > threshold : e >= threshold; }
};

std::size_t period(const Word& w);
Exponent exponent(const Word& w);

/// Max exponent over all nonempty factors. O(|w|^2); refuses words longer
/// than caps().scan with CapExceeded.
Exponent critical_exponent(const Word& w);

bool is_power_free(const Word& w, const PowerBound& bound);
bool is_overlap_free(const Word& w);
bool is_square_free(const Word& w);
bool is_cube_free(const Word& w);

/// Max exponent over the nonempty factors ending at the last position.
Exponent max_suffix_exponent(const Word& w);

} // namespace dyckolab
