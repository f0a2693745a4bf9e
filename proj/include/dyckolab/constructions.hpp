#pragma once

// Exhaustive power-free enumerations and the explicit Dyck word families.

#include "dyckolab/repetition.hpp"
#include "dyckolab/word.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace dyckolab {

struct EnumerationSpec {
    unsigned alphabet_size = 2;
    PowerBound bound{Exponent(2), true};
    bool dyck_only = false;
    std::vector<Word> forbidden; // forbidden factors, on top of the power bound
    std::optional<Word> prefix;  // required prefix of every reported word
    std::optional<Word> suffix;  // required suffix of every reported word
    std::optional<unsigned> exact_nesting; // Dyck words only
    std::size_t min_len = 1;
    std::size_t max_len = 0;
};

/// Calls visit for every word satisfying the spec, in lexicographic order.
/// Returns the number of words reported. CapExceeded when max_len is above
/// caps().enum_len or the search visits more than caps().enum_nodes nodes.
std::uint64_t for_each_power_free(const EnumerationSpec& spec, const std::function<void(const Word&)>& visit);

std::vector<Word> enumerate_power_free(const EnumerationSpec& spec);

/// Same result as enumerate_power_free, by filtering all k^n words. Small n only.
std::vector<Word> enumerate_naive(const EnumerationSpec& spec);

struct NestingBoundReport {
    bool holds = false;
    std::uint64_t words_checked = 0;
    unsigned max_nesting = 0;
    std::optional<Word> witness; // first word above the bound
    nlohmann::json to_json() const;
};

/// Every 7/3-power-free Dyck word of length <= max_len has nesting <= bound.
NestingBoundReport check_nesting_bound_73(std::size_t max_len, unsigned bound = 3);

struct EquivalenceReport {
    bool holds = false;
    std::size_t brute_force = 0;  // |A|
    std::size_t generated = 0;    // |B|
    std::vector<Word> only_brute_force; // A \ B
    std::vector<Word> only_generated;   // B \ A
    nlohmann::json to_json() const;
};

/// Overlap-free Dyck words of length <= max_len found by brute force.
std::set<Word> overlap_free_dyck_words(std::size_t max_len);

/// Which ternary words x qualify in the characterization.
///   square_free:    x is square-free.
///   proper_factors: no proper factor of x is a square; x itself may be one
///                   (h(00) = 0101 is an overlap-free Dyck word).
enum class CharacterizationReading { square_free, proper_factors };

/// {h(x)} and {0h(x)1 : x begins 01 and ends 10}, for nonempty ternary x
/// avoiding 212 and 20102 under the given reading, truncated to length <= max_len.
std::set<Word> overlap_free_dyck_characterization(std::size_t max_len,
                                                  CharacterizationReading reading = CharacterizationReading::square_free);

/// Compares the two sets above. DomainError for odd max_len.
EquivalenceReport overlap_free_dyck_equivalence(std::size_t max_len,
                                                CharacterizationReading reading = CharacterizationReading::square_free);

struct PowerCheck {
    std::string bound; // e.g. "3" or "7/3+"
    std::size_t verified_up_to_length = 0;
    bool passed = false;
};

struct FamilyWitness {
    std::string family;
    unsigned t = 0;
    Word word;
    bool dyck = false;
    unsigned nesting = 0;
    unsigned expected_nesting = 0;
    std::optional<PowerCheck> power_check;
    std::optional<bool> recursion; // rs blocks only
    double seconds = 0;

    bool passed() const;
    nlohmann::json to_json(bool include_word = false) const;
};

/// cf_doubler^t(01): Dyck, nesting t+1, cube-free.
FamilyWitness cubefree_family(unsigned t);

/// f38(g6^t(2)): Dyck, nesting 2t+2, no factor of exponent > 7/3.
/// CapExceeded above caps().seventhirds_t unless opt_in raises the limit
/// to caps().seventhirds_t_optin.
FamilyWitness seventhirds_family(unsigned t, bool opt_in = false);

/// The Rudin-Shapiro window r[2*4^n .. 4^(n+1)-1]: Dyck, nesting 2^(n+1)-1,
/// and x_(n+1) = y_n x_n complement(y_n) x_n with y_n = r[0 .. 2*4^n-1].
FamilyWitness rs_dyck_block(unsigned n);

struct PaperfoldingOrientation {
    std::string sequence;
    std::set<std::size_t> observed;
    std::set<std::size_t> missing_from_predicted; // observed \ predicted
    std::set<std::size_t> not_observed_even;      // even predicted \ observed
    bool matches_even = false;
    bool stable = false;
    std::size_t prefix_length_used = 0;
};

struct PaperfoldingScan {
    std::size_t max_len = 0;
    std::set<std::size_t> predicted;      // 2^k - 2^i <= max_len, 0 <= i < k
    std::set<std::size_t> predicted_even; // the same with i >= 1
    std::vector<PaperfoldingOrientation> orientations; // pf, pf-complement
    bool stable() const;
    nlohmann::json to_json() const;
};

std::set<std::size_t> paperfolding_predicted(std::size_t max_len);
PaperfoldingScan paperfolding_scan(std::size_t max_len);

} // namespace dyckolab
