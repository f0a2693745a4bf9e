#include "dyckolab/repetition.hpp"

#include "dyckolab/caps.hpp"
#include "dyckolab/error.hpp"

#include <charconv>
#include <numeric>
#include <span>
#include <vector>

namespace dyckolab {

namespace {

// Failure function of s: border[i] = length of the longest proper border of s[0..i].
template <typename Get>
void failure_function(std::size_t n, Get at, std::vector<std::size_t>& border)
{
    border.assign(n, 0);
    for (std::size_t i = 1; i < n; ++i) {
        std::size_t b = border[i - 1];
        while (b > 0 && at(i) != at(b)) b = border[b - 1];
        if (at(i) == at(b)) ++b;
        border[i] = b;
    }
}

void require_nonempty(const Word& w, const char* op)
{
    if (w.empty()) throw DomainError(std::string(op) + " of the empty word is undefined");
}

void require_scan_cap(const Word& w)
{
    if (w.size() > caps().scan)
        throw CapExceeded("factor-exponent scan refused: |w| = " + std::to_string(w.size()) +
                              " exceeds the scan cap " + std::to_string(caps().scan) +
                              "; use sampled checks or raise DYCKOLAB_CAP",
                          0);
}

// Visits, for every start i, the exponent of each factor w[i..j]; stops early
// when the visitor returns false.
template <typename Visit>
bool scan_factors(std::span<const Symbol> w, Visit visit)
{
    std::vector<std::size_t> border;
    for (std::size_t i = 0; i < w.size(); ++i) {
        const std::size_t n = w.size() - i;
        failure_function(n, [&](std::size_t j) { return w[i + j]; }, border);
        for (std::size_t len = 1; len <= n; ++len) {
            const std::size_t per = len - border[len - 1];
            if (!visit(len, per)) return false;
        }
    }
    return true;
}

} // namespace

Exponent::Exponent(std::uint64_t num, std::uint64_t den)
{
    if (num == 0 || den == 0) throw DomainError("exponent must be a positive fraction");
    const std::uint64_t g = std::gcd(num, den);
    num_ = num / g;
    den_ = den / g;
}

Exponent Exponent::parse(std::string_view text)
{
    auto parse_part = [&](std::string_view part) {
        std::uint64_t v = 0;
        auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
        if (part.empty() || ec != std::errc{} || ptr != part.data() + part.size() || v == 0)
            throw ParseError("bad exponent '" + std::string(text) + "'");
        return v;
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Exponent(parse_part(text));
    return Exponent(parse_part(text.substr(0, slash)), parse_part(text.substr(slash + 1)));
}

std::string Exponent::str() const
{
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
}

std::size_t period(const Word& w)
{
    require_nonempty(w, "period");
    std::vector<std::size_t> border;
    failure_function(w.size(), [&](std::size_t i) { return w[i]; }, border);
    return w.size() - border.back();
}

Exponent exponent(const Word& w)
{
    require_nonempty(w, "exponent");
    return Exponent(w.size(), period(w));
}

Exponent critical_exponent(const Word& w)
{
    require_nonempty(w, "critical_exponent");
    require_scan_cap(w);
    Exponent best(1);
    scan_factors(w.symbols(), [&](std::size_t len, std::size_t per) {
        if (static_cast<unsigned __int128>(len) * best.den() >
            static_cast<unsigned __int128>(best.num()) * per)
            best = Exponent(len, per);
        return true;
    });
    return best;
}

bool is_power_free(const Word& w, const PowerBound& bound)
{
    if (w.empty()) return true;
    require_scan_cap(w);
    const auto p = bound.threshold.num();
    const auto q = bound.threshold.den();
    return scan_factors(w.symbols(), [&](std::size_t len, std::size_t per) {
        const unsigned __int128 lhs = static_cast<unsigned __int128>(len) * q;
        const unsigned __int128 rhs = static_cast<unsigned __int128>(p) * per;
        return bound.strict ? lhs <= rhs : lhs < rhs;
    });
}

bool is_overlap_free(const Word& w) { return is_power_free(w, {Exponent(2), true}); }
bool is_square_free(const Word& w) { return is_power_free(w, {Exponent(2), false}); }
bool is_cube_free(const Word& w) { return is_power_free(w, {Exponent(3), false}); }

Exponent max_suffix_exponent(const Word& w)
{
    require_nonempty(w, "max_suffix_exponent");
    // Suffixes of w are the prefixes of its reversal, with the same periods.
    const std::size_t n = w.size();
    std::vector<std::size_t> border;
    failure_function(n, [&](std::size_t i) { return w[n - 1 - i]; }, border);
    Exponent best(1);
    for (std::size_t len = 1; len <= n; ++len) {
        const std::size_t per = len - border[len - 1];
        if (len > per) best = std::max(best, Exponent(len, per));
    }
    return best;
}

} // namespace dyckolab
