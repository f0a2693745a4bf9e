#include "dyckolab/morphism.hpp"

#include "dyckolab/error.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace dyckolab {

Morphism::Morphism(std::vector<Word> images, unsigned target_size)
    : images_(std::move(images)), target_(target_size)
{
    if (images_.empty()) throw DomainError("a morphism needs at least one domain symbol");
    for (auto& img : images_) {
        for (Symbol s : img) {
            if (s >= target_) throw AlphabetError("image symbol outside the target alphabet");
        }
        img = Word(img.vec(), target_);
    }
    const std::size_t w = images_.front().size();
    const bool uniform = std::all_of(images_.begin(), images_.end(), [&](const Word& img) { return img.size() == w; });
    width_ = uniform ? w : 0;
}

Morphism Morphism::parse(std::string_view rules, unsigned min_target)
{
    std::istringstream in{std::string(rules)};
    std::vector<std::optional<std::vector<Symbol>>> images;
    unsigned target = std::max(1u, min_target);
    std::string token;
    while (in >> token) {
        const auto arrow = token.find("->");
        if (arrow == std::string::npos || arrow == 0)
            throw ParseError("morphism rule '" + token + "' is not of the form a->w");
        const std::string lhs = token.substr(0, arrow);
        if (lhs.size() != 1 || lhs[0] < '0' || lhs[0] > '9')
            throw ParseError("morphism rule '" + token + "' has a bad domain symbol");
        const auto a = static_cast<std::size_t>(lhs[0] - '0');
        if (images.size() <= a) images.resize(a + 1);
        if (images[a]) throw ParseError("duplicate rule for symbol " + lhs);
        std::vector<Symbol> img;
        for (char c : token.substr(arrow + 2)) {
            if (c < '0' || c > '9') throw ParseError("morphism rule '" + token + "' has a bad image symbol");
            img.push_back(static_cast<Symbol>(c - '0'));
            target = std::max(target, static_cast<unsigned>(c - '0') + 1);
        }
        images[a] = std::move(img);
    }
    if (images.empty()) throw ParseError("empty morphism");
    std::vector<Word> words;
    for (std::size_t a = 0; a < images.size(); ++a) {
        if (!images[a]) throw ParseError("missing rule for symbol " + std::to_string(a));
        words.emplace_back(std::move(*images[a]), target);
    }
    return Morphism(std::move(words), target);
}

std::string Morphism::str() const
{
    std::string out;
    for (std::size_t a = 0; a < images_.size(); ++a) {
        if (a > 0) out += ' ';
        out += std::to_string(a) + "->" + images_[a].str();
    }
    return out;
}

const Word& Morphism::image(Symbol s) const
{
    if (s >= images_.size()) throw AlphabetError("symbol " + std::to_string(s) + " is outside the morphism domain");
    return images_[s];
}

Word Morphism::apply(const Word& w) const
{
    std::vector<Symbol> out;
    if (is_uniform()) out.reserve(w.size() * width_);
    for (Symbol s : w) {
        const Word& img = image(s);
        out.insert(out.end(), img.begin(), img.end());
    }
    return Word(std::move(out), target_);
}

Word Morphism::iterate(const Word& w, unsigned times) const
{
    if (times > 0 && target_ > domain_size())
        throw AlphabetError("cannot iterate a morphism whose target alphabet exceeds its domain");
    Word cur = w;
    for (unsigned i = 0; i < times; ++i) cur = apply(cur);
    return cur;
}

Word Morphism::fixed_point_prefix(Symbol seed, std::size_t length) const
{
    const Word& first = image(seed);
    if (first.size() < 2 || first[0] != seed)
        throw DomainError("morphism is not prolongable on " + std::to_string(seed));
    if (target_ > domain_size()) throw AlphabetError("fixed point needs target alphabet within the domain");

    // x = m(x_0) m(x_1) ...; m(x_0) is already the head of x.
    std::vector<Symbol> out(first.begin(), first.end());
    out.reserve(std::max(length, out.size()));
    for (std::size_t i = 1; out.size() < length; ++i) {
        if (i >= out.size()) throw DomainError("fixed point is finite");
        const Word& img = images_[out[i]];
        out.insert(out.end(), img.begin(), img.end());
    }
    out.resize(length);
    return Word(std::move(out), target_);
}

namespace catalog {

const Morphism& h_dyck()
{
    static const Morphism m = Morphism::parse("0->01 1->0011 2->001011");
    return m;
}

const Morphism& g6()
{
    static const Morphism m = Morphism::parse("0->022012 1->022112 2->202101");
    return m;
}

const Morphism& f38()
{
    static const Morphism m = Morphism::parse("0->00100110100110010110010011001011001101 "
                                              "1->00101100110100110110011010010110011011 "
                                              "2->00101101001101001011001101001011010011");
    return m;
}

const Morphism& tern_s()
{
    static const Morphism m = Morphism::parse("0->012 1->02 2->1");
    return m;
}

const Morphism& g_s_to_t()
{
    static const Morphism m = Morphism::parse("0->011 1->01 2->0");
    return m;
}

const Morphism& mu_tm()
{
    static const Morphism m = Morphism::parse("0->01 1->10");
    return m;
}

const Morphism& fib_theta()
{
    static const Morphism m = Morphism::parse("0->01 1->0");
    return m;
}

const Morphism& pd_morph()
{
    static const Morphism m = Morphism::parse("0->01 1->00");
    return m;
}

const Morphism& cf_doubler()
{
    static const Morphism m = Morphism::parse("0->001 1->011");
    return m;
}

const Morphism& aa_q()
{
    static const Morphism m = Morphism::parse("0->01 1->23 2->22 3->33");
    return m;
}

const Morphism& b_coding()
{
    static const Morphism m = Morphism::parse("0->0 1->1 2->2 3->1");
    return m;
}

} // namespace catalog

} // namespace dyckolab
