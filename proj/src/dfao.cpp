#include "dyckolab/dfao.hpp"

#include "dyckolab/error.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace dyckolab {

std::vector<unsigned> digits_msd(std::uint64_t n, unsigned base)
{
    if (base < 2) throw DomainError("base must be at least 2");
    std::vector<unsigned> out;
    do {
        out.push_back(static_cast<unsigned>(n % base));
        n /= base;
    } while (n > 0);
    std::reverse(out.begin(), out.end());
    return out;
}

Dfao::Dfao(unsigned base, std::vector<std::vector<unsigned>> transitions, std::vector<std::int64_t> outputs)
    : base_(base), delta_(std::move(transitions)), outputs_(std::move(outputs))
{
    if (base_ < 2) throw DomainError("DFAO base must be at least 2");
    if (outputs_.empty() || delta_.size() != outputs_.size())
        throw DomainError("DFAO needs one transition row and one output per state");
    for (const auto& row : delta_) {
        if (row.size() != base_) throw DomainError("DFAO transitions must be total");
        for (unsigned t : row) {
            if (t >= outputs_.size()) throw DomainError("DFAO transition to unknown state");
        }
    }
    if (delta_[0][0] != 0) throw DomainError("DFAO initial state must loop on digit 0 (leading-zero invariance)");
}

Dfao Dfao::from_uniform_morphism(const Morphism& m, Symbol seed, const Morphism* coding)
{
    if (!m.is_uniform() || m.width() < 2) throw DomainError("DFAO construction needs a k-uniform morphism, k >= 2");
    if (m.target_size() > m.domain_size()) throw AlphabetError("morphism must map its alphabet into itself");
    const unsigned k = static_cast<unsigned>(m.width());
    const unsigned states = m.domain_size();
    if (m.image(seed)[0] != seed) throw DomainError("morphism is not prolongable on the seed");

    // Swap labels seed <-> 0 so the initial state is 0.
    auto relabel = [&](unsigned a) -> unsigned { return a == seed ? 0u : (a == 0 ? seed : a); };
    std::vector<std::vector<unsigned>> delta(states, std::vector<unsigned>(k));
    std::vector<std::int64_t> out(states);
    for (unsigned a = 0; a < states; ++a) {
        const Word& img = m.image(static_cast<Symbol>(a));
        for (unsigned d = 0; d < k; ++d) delta[relabel(a)][d] = relabel(img[d]);
        std::int64_t value = a;
        if (coding != nullptr) {
            const Word& c = coding->image(static_cast<Symbol>(a));
            if (c.size() != 1) throw DomainError("coding must map letters to letters");
            value = c[0];
        }
        out[relabel(a)] = value;
    }
    return Dfao(k, std::move(delta), std::move(out));
}

std::int64_t Dfao::eval_digits(std::span<const unsigned> msd_first) const
{
    unsigned state = 0;
    for (unsigned d : msd_first) {
        if (d >= base_) throw AlphabetError("digit outside the DFAO base");
        state = delta_[state][d];
    }
    return outputs_[state];
}

std::int64_t Dfao::eval(std::uint64_t n) const
{
    unsigned state = 0;
    for (unsigned d : digits_msd(n, base_)) state = delta_[state][d];
    return outputs_[state];
}

std::string Dfao::str() const
{
    std::ostringstream out;
    out << "base " << base_ << '\n';
    for (std::size_t s = 0; s < outputs_.size(); ++s) {
        out << s << ' ' << outputs_[s] << ':';
        for (unsigned d = 0; d < base_; ++d) out << ' ' << d << "->" << delta_[s][d];
        out << '\n';
    }
    return out.str();
}

namespace {

template <typename T>
T parse_int(std::string_view text, const std::string& line)
{
    T value{};
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size())
        throw ParseError("DFAO: bad number '" + std::string(text) + "' in line '" + line + "'");
    return value;
}

} // namespace

Dfao Dfao::parse(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::string line;
    if (!std::getline(in, line)) throw ParseError("DFAO: empty input");
    std::istringstream head(line);
    std::string keyword, base_text;
    if (!(head >> keyword >> base_text) || keyword != "base") throw ParseError("DFAO: first line must be 'base k'");
    const auto base = parse_int<unsigned>(base_text, line);

    std::vector<std::vector<unsigned>> delta;
    std::vector<std::int64_t> outputs;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        const auto colon = line.find(':');
        if (colon == std::string::npos) throw ParseError("DFAO: missing ':' in line '" + line + "'");
        std::istringstream lhs(line.substr(0, colon));
        std::string state_text, output_text;
        if (!(lhs >> state_text >> output_text)) throw ParseError("DFAO: expected '<state> <output>:' in '" + line + "'");
        if (parse_int<std::size_t>(state_text, line) != outputs.size())
            throw ParseError("DFAO: states must be listed in order 0, 1, ...");
        outputs.push_back(parse_int<std::int64_t>(output_text, line));

        std::vector<unsigned> row(base, ~0u);
        std::istringstream rules(line.substr(colon + 1));
        std::string rule;
        while (rules >> rule) {
            // Accept both "->" and the UTF-8 arrow.
            std::size_t arrow = rule.find("->");
            std::size_t skip = 2;
            if (arrow == std::string::npos) {
                arrow = rule.find("\xE2\x86\x92");
                skip = 3;
            }
            if (arrow == std::string::npos) throw ParseError("DFAO: bad transition '" + rule + "'");
            const auto d = parse_int<unsigned>(std::string_view(rule).substr(0, arrow), line);
            const auto t = parse_int<unsigned>(std::string_view(rule).substr(arrow + skip), line);
            if (d >= base || row[d] != ~0u) throw ParseError("DFAO: bad or duplicate digit in '" + line + "'");
            row[d] = t;
        }
        if (std::find(row.begin(), row.end(), ~0u) != row.end())
            throw ParseError("DFAO: transitions must be total in line '" + line + "'");
        delta.push_back(std::move(row));
    }
    try {
        return Dfao(base, std::move(delta), std::move(outputs));
    } catch (const DomainError& e) {
        throw ParseError(std::string("DFAO: ") + e.what());
    }
}

} // namespace dyckolab
