#pragma once

// Infinite sequences as lazily extended, memoized prefixes.

#include "dyckolab/dfao.hpp"
#include "dyckolab/morphism.hpp"
#include "dyckolab/word.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace dyckolab {

/// An immutable materialized prefix. ones[n] = number of 1s among indices 0..n-1.
struct Prefix {
    std::vector<Symbol> symbols;
    std::vector<std::uint32_t> ones;

    std::size_t size() const noexcept { return symbols.size(); }
    std::span<const Symbol> span(std::size_t length) const { return std::span(symbols).first(length); }
};

// Handles are cheap to copy and share one memo. materialize() returns a
// snapshot that stays valid after later extensions; extension is exclusive,
// reads of an existing snapshot need no lock.
class SequenceHandle {
public:
    enum class Kind { morphic, arithmetic, dfao };

    /// Appends symbols [begin, end) of the sequence to `out`.
    using Generator = std::function<void(std::size_t begin, std::size_t end, std::vector<Symbol>& out)>;

    SequenceHandle(std::string name, Kind kind, unsigned alphabet_size, Generator gen);

    const std::string& name() const noexcept;
    Kind kind() const noexcept;
    unsigned alphabet_size() const noexcept;

    /// Snapshot holding at least `length` symbols. Grows geometrically.
    std::shared_ptr<const Prefix> materialize(std::size_t length) const;

    Symbol at(std::size_t i) const;
    Word prefix(std::size_t length) const;
    Word factor(std::size_t start, std::size_t length) const;
    /// Number of 1s among indices 0..n-1.
    std::uint64_t ones_before(std::size_t n) const;

private:
    struct Impl;
    std::shared_ptr<Impl> impl_;
};

SequenceHandle thue_morse();          // parity of the 1-bits of i
SequenceHandle thue_morse_morphic();  // fixed point of mu_tm
SequenceHandle rudin_shapiro();       // parity of the occurrences of 11 in binary i
SequenceHandle period_doubling();     // fixed point of pd_morph
SequenceHandle fibonacci_word();      // fixed point of fib_theta
SequenceHandle tern_s_seq();          // fixed point of tern_s (ternary)
/// Regular paperfolding: with i+1 = 2^a m, m odd, p(i) = 0 iff m = 1 (mod 4).
/// `complemented` swaps the roles of 0 and 1.
SequenceHandle paperfolding(bool complemented = false);

SequenceHandle from_morphism(std::string name, const Morphism& m, Symbol seed, const Morphism* coding = nullptr);
SequenceHandle from_dfao(std::string name, const Dfao& d, unsigned alphabet_size);

/// Looks up one of: tm, tm-morphic, rs, pd, fib, s, pf, pf-complement.
SequenceHandle sequence_by_name(const std::string& name);
std::vector<std::string> sequence_names();

/// DFAO of Thue-Morse (2 states) and of q (4 states, from aa_q and b_coding).
const Dfao& thue_morse_dfao();
const Dfao& q_dfao();

/// q(n): b_coding applied to the fixed point of aa_q.
int q(std::uint64_t n);

std::uint64_t running_sum_tm(std::uint64_t n);
/// n/2 for even n, (n-1)/2 + T(n-1) for odd n.
std::uint64_t running_sum_tm_closed_form(std::uint64_t n);

/// sum_{0 <= i <= n} (-1)^{r(i)} for the Rudin-Shapiro sequence r.
std::int64_t rs_partial_sum(std::uint64_t n);

unsigned thue_morse_at(std::uint64_t i);
unsigned rudin_shapiro_at(std::uint64_t i);

} // namespace dyckolab
