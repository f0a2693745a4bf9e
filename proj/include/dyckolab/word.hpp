#pragma once

// Finite words over small integer alphabets Sigma_k = {0, ..., k-1}.
//
// Binary words read 0 as a left parenthesis and 1 as a right parenthesis.
// Ternary words additionally carry the letter 2, which is treated as an
// already balanced block (see beta()).

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dyckolab {

using Symbol = std::uint8_t;

class Word {
public:
    Word() = default;
    explicit Word(unsigned alphabet_size);
    Word(std::vector<Symbol> symbols, unsigned alphabet_size);
    Word(std::initializer_list<Symbol> symbols, unsigned alphabet_size);

    /// Parses a digit string such as "0120". Every digit must be < k.
    explicit Word(std::string_view digits, unsigned alphabet_size = 2);

    unsigned alphabet_size() const noexcept { return k_; }
    std::size_t size() const noexcept { return symbols_.size(); }
    bool empty() const noexcept { return symbols_.empty(); }

    Symbol operator[](std::size_t i) const { return symbols_[i]; }
    std::span<const Symbol> symbols() const noexcept { return symbols_; }
    const std::vector<Symbol>& vec() const noexcept { return symbols_; }

    auto begin() const noexcept { return symbols_.begin(); }
    auto end() const noexcept { return symbols_.end(); }

    /// Factor w[start .. start+length-1]; clamps nothing, throws on overrun.
    Word factor(std::size_t start, std::size_t length) const;

    Word& append(const Word& other);
    void push_back(Symbol s);
    void pop_back() { symbols_.pop_back(); }

    std::string str() const;

    // Words compare by symbol sequence; the alphabet is a typing annotation.
    friend bool operator==(const Word& a, const Word& b) noexcept { return a.symbols_ == b.symbols_; }
    friend std::strong_ordering operator<=>(const Word& a, const Word& b) noexcept
    {
        return a.symbols_ <=> b.symbols_;
    }

private:
    std::vector<Symbol> symbols_;
    unsigned k_ = 2;
};

Word operator+(Word a, const Word& b);

struct Balance {
    long long value = 0;
    friend bool operator==(Balance, Balance) = default;
};

struct NestingLevel {
    unsigned value = 0;
    friend bool operator==(NestingLevel, NestingLevel) = default;
};

/// |w|_0 - |w|_1. Requires a binary word.
Balance balance(const Word& w);

/// Balanced-parenthesis membership. The empty word is Dyck.
bool is_dyck(const Word& w);

/// Maximum prefix balance of a Dyck word. Throws DomainError otherwise.
NestingLevel nesting_level(const Word& w);

/// Erases every 2 from a ternary word.
Word beta(const Word& w);

bool is_ternary_dyck(const Word& w);

/// Nesting level of beta(w). Throws DomainError if w is not ternary Dyck.
NestingLevel ternary_nesting(const Word& w);

/// Swaps 0 and 1 pointwise.
Word complement(const Word& w);

/// All distinct factors of length `length`. {epsilon} for length 0, empty
/// set when length > |w|.
std::set<Word> distinct_factors(const Word& w, std::size_t length);

} // namespace dyckolab
