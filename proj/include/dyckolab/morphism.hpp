#pragma once

#include "dyckolab/word.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace dyckolab {

/// A morphism Sigma_k* -> Sigma_m*, given by one image per domain symbol.
class Morphism {
public:
    Morphism(std::vector<Word> images, unsigned target_size);

    /// Parses whitespace-separated rules "0->01 1->0011". Every domain symbol
    /// 0..k-1 must have exactly one rule; images may be empty ("2->").
    /// The target alphabet is one more than the largest image symbol, or
    /// `min_target` when that is larger.
    static Morphism parse(std::string_view rules, unsigned min_target = 1);

    /// Inverse of parse: "0->01 1->0011".
    std::string str() const;

    unsigned domain_size() const noexcept { return static_cast<unsigned>(images_.size()); }
    unsigned target_size() const noexcept { return target_; }
    const Word& image(Symbol s) const;

    bool is_uniform() const noexcept { return width_ != 0; }
    /// Common image length of a uniform morphism, 0 otherwise.
    std::size_t width() const noexcept { return width_; }

    Word apply(const Word& w) const;
    Word iterate(const Word& w, unsigned times) const;

    /// First `length` symbols of the fixed point m^omega(seed). Throws
    /// DomainError unless m(seed) starts with seed and has length >= 2.
    Word fixed_point_prefix(Symbol seed, std::size_t length) const;

    friend bool operator==(const Morphism&, const Morphism&) = default;

private:
    std::vector<Word> images_;
    unsigned target_;
    std::size_t width_ = 0;
};

// Named morphisms. The same letters f and g denote different maps in
// different constructions, so each one carries a distinct name here.
namespace catalog {

const Morphism& h_dyck();     // 0->01 1->0011 2->001011
const Morphism& g6();         // 6-uniform ternary morphism
const Morphism& f38();        // 38-uniform, ternary -> binary
const Morphism& tern_s();     // 0->012 1->02 2->1, fixed point s
const Morphism& g_s_to_t();   // 0->011 1->01 2->0, maps s onto Thue-Morse
const Morphism& mu_tm();      // 0->01 1->10
const Morphism& fib_theta();  // 0->01 1->0
const Morphism& pd_morph();   // 0->01 1->00
const Morphism& cf_doubler(); // 0->001 1->011
const Morphism& aa_q();       // 0->01 1->23 2->22 3->33
const Morphism& b_coding();   // 0->0 1->1 2->2 3->1

} // namespace catalog

} // namespace dyckolab
