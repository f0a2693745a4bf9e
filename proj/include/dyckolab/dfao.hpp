#pragma once

#include "dyckolab/morphism.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dyckolab {

// Deterministic finite automaton with output, reading base-k digits most
// significant first. State 0 is the initial state and must loop on digit 0,
// so the output of n does not depend on leading zeros.
//
// Text form:
//
//     base 2
//     0 0: 0->0 1->1
//     1 1: 0->1 1->0
//
// one line per state, in state order: "<state> <output>: d->target ...".
class Dfao {
public:
    Dfao(unsigned base, std::vector<std::vector<unsigned>> transitions, std::vector<std::int64_t> outputs);

    /// DFAO of a k-uniform morphism's fixed point m^omega(seed), followed by
    /// an optional coding. States are the letters, relabelled so that seed
    /// becomes state 0.
    static Dfao from_uniform_morphism(const Morphism& m, Symbol seed, const Morphism* coding = nullptr);

    static Dfao parse(std::string_view text);
    std::string str() const;

    unsigned base() const noexcept { return base_; }
    std::size_t num_states() const noexcept { return outputs_.size(); }
    unsigned next(unsigned state, unsigned digit) const { return delta_[state][digit]; }
    std::int64_t output(unsigned state) const { return outputs_[state]; }

    /// Output on the base-k digits of n; n = 0 reads the single digit 0.
    std::int64_t eval(std::uint64_t n) const;
    std::int64_t eval_digits(std::span<const unsigned> msd_first) const;

    friend bool operator==(const Dfao&, const Dfao&) = default;

private:
    unsigned base_;
    std::vector<std::vector<unsigned>> delta_;
    std::vector<std::int64_t> outputs_;
};

/// Most-significant-first base-k digits of n; {0} for n = 0.
std::vector<unsigned> digits_msd(std::uint64_t n, unsigned base);

} // namespace dyckolab
