#include "dyckolab/word.hpp"

#include "dyckolab/error.hpp"
#include "dyckolab/factor_index.hpp"

#include <algorithm>

namespace dyckolab {

namespace {

void check_symbols(std::span<const Symbol> symbols, unsigned k)
{
    for (Symbol s : symbols) {
        if (s >= k)
            throw AlphabetError("symbol " + std::to_string(s) + " is outside Sigma_" + std::to_string(k));
    }
}

void require_alphabet(const Word& w, unsigned k, const char* op)
{
    if (w.alphabet_size() != k)
        throw AlphabetError(std::string(op) + " expects a word over Sigma_" + std::to_string(k) +
                            ", got Sigma_" + std::to_string(w.alphabet_size()));
}

} // namespace

Word::Word(unsigned alphabet_size) : k_(alphabet_size)
{
    if (alphabet_size == 0 || alphabet_size > 256) throw AlphabetError("alphabet size must be in 1..256");
}

Word::Word(std::vector<Symbol> symbols, unsigned alphabet_size) : Word(alphabet_size)
{
    check_symbols(symbols, alphabet_size);
    symbols_ = std::move(symbols);
}

Word::Word(std::initializer_list<Symbol> symbols, unsigned alphabet_size)
    : Word(std::vector<Symbol>(symbols), alphabet_size)
{
}

Word::Word(std::string_view digits, unsigned alphabet_size) : Word(alphabet_size)
{
    symbols_.reserve(digits.size());
    for (char c : digits) {
        if (c < '0' || c > '9') throw ParseError(std::string("not a digit: '") + c + "'");
        symbols_.push_back(static_cast<Symbol>(c - '0'));
    }
    check_symbols(symbols_, alphabet_size);
}

Word Word::factor(std::size_t start, std::size_t length) const
{
    if (start > size() || length > size() - start) throw DomainError("factor out of range");
    auto first = symbols_.begin() + static_cast<std::ptrdiff_t>(start);
    Word out(k_);
    out.symbols_.assign(first, first + static_cast<std::ptrdiff_t>(length));
    return out;
}

Word& Word::append(const Word& other)
{
    check_symbols(other.symbols_, k_);
    symbols_.insert(symbols_.end(), other.symbols_.begin(), other.symbols_.end());
    return *this;
}

void Word::push_back(Symbol s)
{
    if (s >= k_) throw AlphabetError("symbol " + std::to_string(s) + " is outside Sigma_" + std::to_string(k_));
    symbols_.push_back(s);
}

std::string Word::str() const
{
    std::string out;
    out.reserve(symbols_.size());
    for (Symbol s : symbols_) {
        // Symbols >= 10 have no single-digit form; print them as letters a, b, ...
        out.push_back(s < 10 ? static_cast<char>('0' + s) : static_cast<char>('a' + (s - 10)));
    }
    return out;
}

Word operator+(Word a, const Word& b)
{
    a.append(b);
    return a;
}

Balance balance(const Word& w)
{
    require_alphabet(w, 2, "balance");
    long long b = 0;
    for (Symbol s : w) b += s == 0 ? 1 : -1;
    return {b};
}

bool is_dyck(const Word& w)
{
    require_alphabet(w, 2, "is_dyck");
    long long b = 0;
    for (Symbol s : w) {
        b += s == 0 ? 1 : -1;
        if (b < 0) return false;
    }
    return b == 0;
}

NestingLevel nesting_level(const Word& w)
{
    if (!is_dyck(w)) throw DomainError("nesting_level: '" + w.str() + "' is not a Dyck word");
    long long b = 0, best = 0;
    for (Symbol s : w) {
        b += s == 0 ? 1 : -1;
        best = std::max(best, b);
    }
    return {static_cast<unsigned>(best)};
}

Word beta(const Word& w)
{
    require_alphabet(w, 3, "beta");
    std::vector<Symbol> out;
    out.reserve(w.size());
    for (Symbol s : w) {
        if (s != 2) out.push_back(s);
    }
    return Word(std::move(out), 2);
}

bool is_ternary_dyck(const Word& w) { return is_dyck(beta(w)); }

NestingLevel ternary_nesting(const Word& w)
{
    const Word b = beta(w);
    if (!is_dyck(b)) throw DomainError("ternary_nesting: '" + w.str() + "' is not a ternary Dyck word");
    return nesting_level(b);
}

Word complement(const Word& w)
{
    require_alphabet(w, 2, "complement");
    std::vector<Symbol> out(w.begin(), w.end());
    for (Symbol& s : out) s ^= 1;
    return Word(std::move(out), 2);
}

std::set<Word> distinct_factors(const Word& w, std::size_t length)
{
    if (length == 0) return {Word(w.alphabet_size())};
    if (length > w.size()) return {};
    FactorIndex index(w.symbols());
    for (std::size_t i = 0; i + length <= w.size(); ++i) index.insert(i, length);
    return index.words(w.alphabet_size());
}

} // namespace dyckolab
