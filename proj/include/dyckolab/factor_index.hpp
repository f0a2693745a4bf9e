#pragma once

#include "dyckolab/word.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

namespace dyckolab {

// Deduplicates factors of one text by content hash.
//
// Each factor is keyed by two polynomial hashes modulo 2^61 - 1 plus its
// length; a hash match is only accepted after comparing the symbols, so
// collisions cost time but never correctness. Only start offsets are
// stored, never copies of the factors.
class FactorIndex {
public:
    explicit FactorIndex(std::span<const Symbol> text);

    /// Inserts text[start .. start+length-1]; true if it was not seen before.
    bool insert(std::size_t start, std::size_t length);

    std::size_t size() const noexcept { return distinct_; }

    struct Occurrence {
        std::size_t start;
        std::size_t length;
    };

    /// First occurrence of every distinct factor, in insertion order.
    const std::vector<Occurrence>& representatives() const noexcept { return reps_; }

    /// Materializes the distinct factors as words over `alphabet_size`.
    std::set<Word> words(unsigned alphabet_size) const;

private:
    struct Key {
        std::uint64_t h1;
        std::uint64_t h2;
        std::size_t length;
        bool operator==(const Key&) const = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const noexcept
        {
            return static_cast<std::size_t>(k.h1 ^ (k.h2 * 0x9E3779B97F4A7C15ull) ^ k.length);
        }
    };

    Key key(std::size_t start, std::size_t length);
    void ensure_powers(std::size_t length);

    std::span<const Symbol> text_;
    std::vector<std::uint64_t> prefix1_, prefix2_;
    std::vector<std::uint64_t> pow1_, pow2_;
    std::unordered_map<Key, std::vector<std::size_t>, KeyHash> buckets_;
    std::vector<Occurrence> reps_;
    std::size_t distinct_ = 0;
};

} // namespace dyckolab
