#pragma once

// Window predicates over infinite sequences and Dyck-factor censuses.
//
// Every predicate is evaluated on a finite prefix of the sequence through
// its running count of 1s: a window s[i..i+n-1] holds v(i+n) - v(i) ones.
// Censuses and set-valued scans are repeated on a doubled prefix and are
// only marked stable when both prefixes agree.

#include "dyckolab/sequences.hpp"
#include "dyckolab/word.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace dyckolab {

struct WindowQuery {
    SequenceHandle sequence;
    std::size_t start = 0;
    std::size_t length = 0;
};

std::uint64_t count1_window(const WindowQuery& q);
std::uint64_t count0_window(const WindowQuery& q);
bool dyck_window(const WindowQuery& q);
/// max(0, |x|_0 - |x|_1) of the window x.
std::uint64_t bal_window(const WindowQuery& q);
/// Nesting level of a Dyck window; DomainError otherwise.
unsigned nest_window(const WindowQuery& q);

struct CensusPolicy {
    std::size_t min_prefix = 1024;
    std::size_t length_multiple = 12; // initial prefix >= length_multiple * factor length
    std::size_t max_prefix = 0;       // 0: use caps().census_prefix
};

struct CensusResult {
    std::size_t n = 0;            // half-length: factors have length 2n
    std::uint64_t count = 0;      // f(n)
    std::size_t prefix_length_used = 0;
    bool stable = false;
};

/// Number of distinct Dyck factors of length 2n. f(0) = 1 (the empty word).
CensusResult dyck_census(const SequenceHandle& seq, std::size_t n, const CensusPolicy& policy = {});

/// dyck_census for n = 0..n_max, optionally spread over worker threads.
std::vector<CensusResult> dyck_census_range(const SequenceHandle& seq, std::size_t n_max,
                                            const CensusPolicy& policy = {}, unsigned threads = 1);

std::string census_csv(const std::vector<CensusResult>& rows);
nlohmann::json census_json(const std::vector<CensusResult>& rows);

struct FactorSetResult {
    std::set<Word> words;
    std::size_t prefix_length_used = 0;
    bool stable = false;
};

/// Distinct nonempty Dyck factors of length <= max_len.
FactorSetResult dyck_factor_set(const SequenceHandle& seq, std::size_t max_len, const CensusPolicy& policy = {});

/// Distinct factors of exactly `length`.
FactorSetResult factor_set(const SequenceHandle& seq, std::size_t length, const CensusPolicy& policy = {});

struct LengthSetResult {
    std::set<std::size_t> lengths;
    std::size_t prefix_length_used = 0;
    bool stable = false;
};

/// Lengths 1..max_len at which some window of the sequence is Dyck.
LengthSetResult dyck_length_set(const SequenceHandle& seq, std::size_t max_len, const CensusPolicy& policy = {});

struct CharacterizationReport {
    bool holds = false;
    bool stable = false;
    std::size_t dyck_factors = 0;       // nonempty Dyck factors of Thue-Morse, length <= max_len
    std::size_t images = 0;             // distinct h(x), x a factor of s, |h(x)| <= max_len
    std::optional<std::size_t> first_mismatch_length;
    std::vector<Word> only_dyck_factors; // Dyck factors that are not images
    std::vector<Word> only_images;       // images that are not factors
};

/// The Dyck factors of Thue-Morse of length <= max_len are exactly the
/// words h(x) with x a factor of s. Throws DomainError for odd max_len.
CharacterizationReport tm_dyck_characterization_check(std::size_t max_len);

/// Thue-Morse begins with 011 followed by a concatenation of the return
/// words 0011, 010011, 001011, 01001011 (checked on `prefix_len` symbols).
bool tm_return_word_decomposition(std::size_t prefix_len);

struct ScanReport {
    bool holds = false;
    std::optional<std::uint64_t> witness; // first failing length or index
    std::size_t prefix_length_used = 0;
};

/// Every even length 2..max_len occurs as the length of a Dyck factor.
ScanReport dyck_exists_every_even_length(const SequenceHandle& seq, std::size_t max_len);

/// Every i <= max_i with s[i] = 0 starts a nonempty Dyck factor of length <= cutoff.
ScanReport dyck_starts_where_zero(const SequenceHandle& seq, std::size_t max_i, std::size_t cutoff);

struct NestingReport {
    bool holds = false;
    bool stable = false;
    unsigned max_nesting = 0;
    std::optional<WindowQuery> witness; // first Dyck window above the bound
    std::size_t prefix_length_used = 0;
};

/// Every Dyck factor of length <= max_len has nesting level <= bound.
NestingReport nesting_bounded_check(const SequenceHandle& seq, std::size_t max_len, unsigned bound);

} // namespace dyckolab
