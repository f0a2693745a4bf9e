#include "dyckolab/factor_index.hpp"

#include <algorithm>
#include <cstring>

namespace dyckolab {

namespace {

constexpr std::uint64_t kMod = (std::uint64_t{1} << 61) - 1;
constexpr std::uint64_t kBase1 = 1'000'003;
constexpr std::uint64_t kBase2 = 998'244'353;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b)
{
    const unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
    std::uint64_t r = static_cast<std::uint64_t>(p & kMod) + static_cast<std::uint64_t>(p >> 61);
    if (r >= kMod) r -= kMod;
    return r;
}

std::uint64_t add_mod(std::uint64_t a, std::uint64_t b)
{
    std::uint64_t r = a + b;
    if (r >= kMod) r -= kMod;
    return r;
}

std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b) { return a >= b ? a - b : a + kMod - b; }

} // namespace

FactorIndex::FactorIndex(std::span<const Symbol> text)
    : text_(text), prefix1_(text.size() + 1, 0), prefix2_(text.size() + 1, 0), pow1_{1}, pow2_{1}
{
    for (std::size_t i = 0; i < text.size(); ++i) {
        const std::uint64_t c = std::uint64_t{text[i]} + 1;
        prefix1_[i + 1] = add_mod(mul_mod(prefix1_[i], kBase1), c);
        prefix2_[i + 1] = add_mod(mul_mod(prefix2_[i], kBase2), c);
    }
}

void FactorIndex::ensure_powers(std::size_t length)
{
    while (pow1_.size() <= length) {
        pow1_.push_back(mul_mod(pow1_.back(), kBase1));
        pow2_.push_back(mul_mod(pow2_.back(), kBase2));
    }
}

FactorIndex::Key FactorIndex::key(std::size_t start, std::size_t length)
{
    ensure_powers(length);
    const std::size_t end = start + length;
    return Key{sub_mod(prefix1_[end], mul_mod(prefix1_[start], pow1_[length])),
               sub_mod(prefix2_[end], mul_mod(prefix2_[start], pow2_[length])), length};
}

bool FactorIndex::insert(std::size_t start, std::size_t length)
{
    auto& bucket = buckets_[key(start, length)];
    const Symbol* candidate = text_.data() + start;
    for (std::size_t other : bucket) {
        if (std::memcmp(text_.data() + other, candidate, length) == 0) return false;
    }
    bucket.push_back(start);
    reps_.push_back({start, length});
    ++distinct_;
    return true;
}

std::set<Word> FactorIndex::words(unsigned alphabet_size) const
{
    std::set<Word> out;
    for (const auto& occ : reps_) {
        auto first = text_.begin() + static_cast<std::ptrdiff_t>(occ.start);
        out.emplace(std::vector<Symbol>(first, first + static_cast<std::ptrdiff_t>(occ.length)),
                    alphabet_size);
    }
    return out;
}

} // namespace dyckolab
