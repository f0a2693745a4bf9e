#pragma once

// Brute-force reference implementations. These work on plain strings and
// share no code with the library, so agreement is meaningful.

#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

inline bool is_dyck(const std::string& w)
{
    long b = 0;
    for (char c : w) {
        b += c == '0' ? 1 : -1;
        if (b < 0) return false;
    }
    return b == 0;
}

inline unsigned nesting(const std::string& w)
{
    long b = 0, peak = 0;
    for (char c : w) {
        b += c == '0' ? 1 : -1;
        peak = std::max(peak, b);
    }
    return static_cast<unsigned>(peak);
}

// Smallest p >= 1 with w[i] = w[i+p] for all valid i.
inline std::size_t period(const std::string& w)
{
    for (std::size_t p = 1; p < w.size(); ++p) {
        bool ok = true;
        for (std::size_t i = 0; i + p < w.size() && ok; ++i) ok = w[i] == w[i + p];
        if (ok) return p;
    }
    return w.size();
}

// Exponent as a reduced fraction.
inline std::pair<std::uint64_t, std::uint64_t> exponent(const std::string& w)
{
    const std::uint64_t n = w.size(), p = period(w), g = std::gcd(n, p);
    return {n / g, p / g};
}

// a/b >= c/d (or > when strict).
inline bool at_least(std::pair<std::uint64_t, std::uint64_t> e, std::uint64_t c, std::uint64_t d, bool strict)
{
    const auto lhs = e.first * d, rhs = c * e.second;
    return strict ? lhs > rhs : lhs >= rhs;
}

inline bool power_free(const std::string& w, std::uint64_t c, std::uint64_t d, bool strict)
{
    for (std::size_t i = 0; i < w.size(); ++i) {
        for (std::size_t len = 1; i + len <= w.size(); ++len) {
            if (at_least(exponent(w.substr(i, len)), c, d, strict)) return false;
        }
    }
    return true;
}

inline std::pair<std::uint64_t, std::uint64_t> critical_exponent(const std::string& w)
{
    std::pair<std::uint64_t, std::uint64_t> best{1, 1};
    for (std::size_t i = 0; i < w.size(); ++i) {
        for (std::size_t len = 1; i + len <= w.size(); ++len) {
            auto e = exponent(w.substr(i, len));
            if (e.first * best.second > best.first * e.second) best = e;
        }
    }
    return best;
}

// Thue-Morse by the block recursion t_{2n} = t_n, t_{2n+1} = 1 - t_n.
inline std::string thue_morse(std::size_t n)
{
    std::string t = "0";
    while (t.size() < n) {
        std::string c;
        for (char x : t) c += x == '0' ? '1' : '0';
        t += c;
    }
    return t.substr(0, n);
}

// Iterates a morphism given as images of '0', '1', ... on a seed until long enough.
inline std::string fixed_point(const std::vector<std::string>& images, std::size_t n)
{
    std::string w = "0";
    while (w.size() < n) {
        std::string next;
        for (char c : w) next += images[static_cast<std::size_t>(c - '0')];
        w = next;
    }
    return w.substr(0, n);
}

inline std::string apply(const std::vector<std::string>& images, const std::string& w)
{
    std::string out;
    for (char c : w) out += images[static_cast<std::size_t>(c - '0')];
    return out;
}

inline std::set<std::string> factors(const std::string& text, std::size_t len)
{
    std::set<std::string> out;
    for (std::size_t i = 0; i + len <= text.size(); ++i) out.insert(text.substr(i, len));
    return out;
}

inline std::set<std::string> dyck_factors(const std::string& text, std::size_t len)
{
    std::set<std::string> out;
    for (const auto& f : factors(text, len)) {
        if (is_dyck(f)) out.insert(f);
    }
    return out;
}

// All words over {0..k-1} of length exactly n, in lexicographic order.
inline std::vector<std::string> all_words(unsigned k, std::size_t n)
{
    std::vector<std::string> out{""};
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::string> next;
        for (const auto& w : out) {
            for (unsigned s = 0; s < k; ++s) next.push_back(w + static_cast<char>('0' + s));
        }
        out = std::move(next);
    }
    return out;
}

inline std::string complement(const std::string& w)
{
    std::string out = w;
    for (char& c : out) c = c == '0' ? '1' : '0';
    return out;
}

} // namespace oracle
