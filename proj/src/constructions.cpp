#include "dyckolab/constructions.hpp"

#include "dyckolab/caps.hpp"
#include "dyckolab/dyck_analysis.hpp"
#include "dyckolab/error.hpp"
#include "dyckolab/morphism.hpp"
#include "dyckolab/sequences.hpp"

#include <algorithm>
#include <chrono>

namespace dyckolab {

namespace {

// Largest exponent among the suffixes of buf, tested against the bound.
bool suffix_forbidden(const std::vector<Symbol>& buf, const PowerBound& bound, std::vector<std::size_t>& border)
{
    const std::size_t n = buf.size();
    border.assign(n, 0);
    for (std::size_t i = 1; i < n; ++i) {
        std::size_t k = border[i - 1];
        while (k > 0 && buf[n - 1 - i] != buf[n - 1 - k]) k = border[k - 1];
        if (buf[n - 1 - i] == buf[n - 1 - k]) ++k;
        border[i] = k;
    }
    for (std::size_t len = 1; len <= n; ++len) {
        const std::size_t per = len - border[len - 1];
        if (bound.forbids(Exponent(len, per))) return true;
    }
    return false;
}

bool ends_with(const std::vector<Symbol>& buf, const Word& w)
{
    if (w.size() > buf.size()) return false;
    return std::equal(w.begin(), w.end(), buf.end() - static_cast<std::ptrdiff_t>(w.size()));
}

void validate(const EnumerationSpec& spec)
{
    if (spec.alphabet_size < 1) throw DomainError("enumeration needs a nonempty alphabet");
    if (spec.dyck_only && spec.alphabet_size != 2) throw AlphabetError("Dyck enumeration needs a binary alphabet");
    if (spec.exact_nesting && !spec.dyck_only) throw DomainError("exact_nesting requires dyck_only");
    if (spec.max_len > caps().enum_len)
        throw CapExceeded("enumeration max_len " + std::to_string(spec.max_len) + " above the cap " +
                              std::to_string(caps().enum_len),
                          0);
}

bool accepts(const EnumerationSpec& spec, const Word& w)
{
    if (w.size() < spec.min_len || w.size() > spec.max_len) return false;
    for (Symbol s : w) {
        if (s >= spec.alphabet_size) return false;
    }
    if (spec.dyck_only && !is_dyck(w)) return false;
    if (spec.exact_nesting && nesting_level(w).value != *spec.exact_nesting) return false;
    if (spec.prefix && (w.size() < spec.prefix->size() || w.factor(0, spec.prefix->size()) != *spec.prefix)) return false;
    if (spec.suffix && !ends_with(w.vec(), *spec.suffix)) return false;
    for (const auto& f : spec.forbidden) {
        if (f.size() > w.size()) continue;
        for (std::size_t i = 0; i + f.size() <= w.size(); ++i) {
            if (w.factor(i, f.size()) == f) return false;
        }
    }
    return w.empty() || is_power_free(w, spec.bound);
}

} // namespace

std::uint64_t for_each_power_free(const EnumerationSpec& spec, const std::function<void(const Word&)>& visit)
{
    validate(spec);
    const std::uint64_t node_cap = caps().enum_nodes;
    std::vector<Symbol> buf;
    std::vector<std::size_t> border;
    std::uint64_t nodes = 0, reported = 0;

    auto dfs = [&](auto&& self, long long balance, unsigned peak) -> void {
        for (Symbol s = 0; s < spec.alphabet_size; ++s) {
            if (++nodes > node_cap)
                throw CapExceeded("enumeration visited more than " + std::to_string(node_cap) + " nodes", reported);
            const std::size_t len = buf.size() + 1;
            if (spec.prefix && len <= spec.prefix->size() && (*spec.prefix)[len - 1] != s) continue;
            long long b = balance;
            unsigned pk = peak;
            if (spec.dyck_only) {
                b += s == 0 ? 1 : -1;
                if (b < 0 || static_cast<std::size_t>(b) > spec.max_len - len) continue;
                pk = std::max(pk, static_cast<unsigned>(b));
                if (spec.exact_nesting && pk > *spec.exact_nesting) continue;
            }
            buf.push_back(s);
            bool ok = !suffix_forbidden(buf, spec.bound, border);
            for (const auto& f : spec.forbidden) {
                if (ok && !f.empty() && ends_with(buf, f)) ok = false;
            }
            if (ok) {
                const bool report = len >= spec.min_len && (!spec.dyck_only || b == 0) &&
                                    (!spec.exact_nesting || pk == *spec.exact_nesting) &&
                                    (!spec.suffix || ends_with(buf, *spec.suffix)) &&
                                    (!spec.prefix || len >= spec.prefix->size());
                if (report) {
                    ++reported;
                    visit(Word(buf, spec.alphabet_size));
                }
                if (len < spec.max_len) self(self, b, pk);
            }
            buf.pop_back();
        }
    };
    if (spec.max_len > 0) dfs(dfs, 0, 0);
    return reported;
}

std::vector<Word> enumerate_power_free(const EnumerationSpec& spec)
{
    std::vector<Word> out;
    for_each_power_free(spec, [&](const Word& w) { out.push_back(w); });
    return out;
}

std::vector<Word> enumerate_naive(const EnumerationSpec& spec)
{
    validate(spec);
    std::vector<Word> out;
    const unsigned k = spec.alphabet_size;
    for (std::size_t n = std::max<std::size_t>(spec.min_len, 1); n <= spec.max_len; ++n) {
        std::vector<Symbol> digits(n, 0);
        for (;;) {
            Word w(digits, k);
            if (accepts(spec, w)) out.push_back(std::move(w));
            std::size_t i = n;
            while (i > 0 && digits[i - 1] == k - 1) digits[--i] = 0;
            if (i == 0) break;
            ++digits[i - 1];
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

nlohmann::json NestingBoundReport::to_json() const
{
    return {{"holds", holds},
            {"words_checked", words_checked},
            {"max_nesting", max_nesting},
            {"witness", witness ? nlohmann::json(witness->str()) : nlohmann::json(nullptr)}};
}

NestingBoundReport check_nesting_bound_73(std::size_t max_len, unsigned bound)
{
    EnumerationSpec spec;
    spec.bound = {Exponent(7, 3), false};
    spec.dyck_only = true;
    spec.max_len = max_len;
    NestingBoundReport r;
    for_each_power_free(spec, [&](const Word& w) {
        ++r.words_checked;
        const unsigned level = nesting_level(w).value;
        r.max_nesting = std::max(r.max_nesting, level);
        if (level > bound && !r.witness) r.witness = w;
    });
    r.holds = !r.witness;
    return r;
}

nlohmann::json EquivalenceReport::to_json() const
{
    auto list = [](const std::vector<Word>& ws) {
        auto arr = nlohmann::json::array();
        for (const auto& w : ws) arr.push_back(w.str());
        return arr;
    };
    return {{"holds", holds},
            {"brute_force", brute_force},
            {"generated", generated},
            {"only_brute_force", list(only_brute_force)},
            {"only_generated", list(only_generated)}};
}

std::set<Word> overlap_free_dyck_words(std::size_t max_len)
{
    EnumerationSpec spec;
    spec.bound = {Exponent(2), true};
    spec.dyck_only = true;
    spec.max_len = max_len;
    std::set<Word> out;
    for_each_power_free(spec, [&](const Word& w) { out.insert(w); });
    return out;
}

std::set<Word> overlap_free_dyck_characterization(std::size_t max_len, CharacterizationReading reading)
{
    const Morphism& h = catalog::h_dyck();
    EnumerationSpec spec;
    spec.alphabet_size = 3;
    spec.bound = {Exponent(2), false};
    spec.forbidden = {Word("212", 3), Word("20102", 3)};
    spec.max_len = max_len / 2; // |h(a)| >= 2
    const Word begin("01", 3), end("10", 3);
    std::set<Word> out;
    auto add = [&](const Word& x) {
        const Word hx = h.apply(x);
        if (hx.size() <= max_len) out.insert(hx);
        if (hx.size() + 2 <= max_len && x.size() >= 2 && x.factor(0, 2) == begin &&
            x.factor(x.size() - 2, 2) == end) {
            out.insert(Word("0") + hx + Word("1"));
        }
    };
    for_each_power_free(spec, [&](const Word& u) {
        add(u);
        if (reading != CharacterizationReading::proper_factors) return;
        // x = ua is a square whose proper factors are all square-free.
        for (Symbol a = 0; a < 3; ++a) {
            Word x = u;
            x.push_back(a);
            const std::size_t half = x.size() / 2;
            if (x.size() % 2 != 0 || x.factor(0, half) != x.factor(half, half)) continue;
            if (!is_square_free(x.factor(1, x.size() - 1))) continue;
            if (std::any_of(spec.forbidden.begin(), spec.forbidden.end(),
                            [&](const Word& f) { return ends_with(x.vec(), f); }))
                continue;
            add(x);
        }
    });
    return out;
}

EquivalenceReport overlap_free_dyck_equivalence(std::size_t max_len, CharacterizationReading reading)
{
    if (max_len % 2 != 0) throw DomainError("overlap_free_dyck_equivalence needs an even max_len");
    const auto a = overlap_free_dyck_words(max_len);
    const auto b = overlap_free_dyck_characterization(max_len, reading);
    EquivalenceReport r;
    r.brute_force = a.size();
    r.generated = b.size();
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r.only_brute_force));
    std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(r.only_generated));
    r.holds = r.only_brute_force.empty() && r.only_generated.empty();
    return r;
}

bool FamilyWitness::passed() const
{
    return dyck && nesting == expected_nesting && (!power_check || power_check->passed) && recursion.value_or(true);
}

nlohmann::json FamilyWitness::to_json(bool include_word) const
{
    nlohmann::json j;
    j["family"] = family;
    j["t"] = t;
    j["length"] = word.size();
    j["dyck"] = dyck;
    j["nesting"] = nesting;
    j["expected_nesting"] = expected_nesting;
    if (power_check) {
        j["power_check"] = {{"bound", power_check->bound},
                            {"verified_up_to_length", power_check->verified_up_to_length},
                            {"passed", power_check->passed}};
    } else {
        j["power_check"] = nullptr;
    }
    j["recursion"] = recursion ? nlohmann::json(*recursion) : nlohmann::json(nullptr);
    j["passed"] = passed();
    j["seconds"] = seconds;
    if (include_word) j["word"] = word.str();
    return j;
}

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point start) { return std::chrono::duration<double>(Clock::now() - start).count(); }

void fill_dyck(FamilyWitness& fw)
{
    fw.dyck = is_dyck(fw.word);
    fw.nesting = fw.dyck ? nesting_level(fw.word).value : 0;
}

} // namespace

FamilyWitness cubefree_family(unsigned t)
{
    if (t > caps().cubefree_t)
        throw CapExceeded("cubefree_family t=" + std::to_string(t) + " above the cap " + std::to_string(caps().cubefree_t),
                          0);
    const auto start = Clock::now();
    FamilyWitness fw;
    fw.family = "cubefree";
    fw.t = t;
    fw.word = catalog::cf_doubler().iterate(Word("01"), t);
    fill_dyck(fw);
    fw.expected_nesting = t + 1;
    fw.power_check = PowerCheck{"3", fw.word.size(), is_cube_free(fw.word)};
    fw.seconds = since(start);
    return fw;
}

FamilyWitness seventhirds_family(unsigned t, bool opt_in)
{
    const unsigned limit = opt_in ? caps().seventhirds_t_optin : caps().seventhirds_t;
    if (t > limit)
        throw CapExceeded("seventhirds_family t=" + std::to_string(t) + " above the cap " + std::to_string(limit), 0);
    const auto start = Clock::now();
    FamilyWitness fw;
    fw.family = "seventhirds";
    fw.t = t;
    fw.word = catalog::f38().apply(catalog::g6().iterate(Word("2", 3), t));
    fill_dyck(fw);
    fw.expected_nesting = 2 * t + 2;
    fw.power_check = PowerCheck{"7/3+", fw.word.size(), is_power_free(fw.word, {Exponent(7, 3), true})};
    fw.seconds = since(start);
    return fw;
}

FamilyWitness rs_dyck_block(unsigned n)
{
    if (n > caps().rs_n)
        throw CapExceeded("rs_dyck_block n=" + std::to_string(n) + " above the cap " + std::to_string(caps().rs_n), 0);
    const auto start = Clock::now();
    const SequenceHandle r = rudin_shapiro();
    const std::size_t len = std::size_t{2} << (2 * n); // 2*4^n
    FamilyWitness fw;
    fw.family = "rs";
    fw.t = n;
    fw.word = r.factor(len, len);
    fill_dyck(fw);
    fw.expected_nesting = (2u << n) - 1;
    const Word y = r.factor(0, len);
    const Word next = r.factor(4 * len, 4 * len);
    fw.recursion = next == y + fw.word + complement(y) + fw.word;
    fw.seconds = since(start);
    return fw;
}

std::set<std::size_t> paperfolding_predicted(std::size_t max_len)
{
    std::set<std::size_t> out;
    for (unsigned k = 1; k < 63; ++k) {
        for (unsigned i = 0; i < k; ++i) {
            const std::uint64_t v = (std::uint64_t{1} << k) - (std::uint64_t{1} << i);
            if (v <= max_len) out.insert(v);
        }
        if ((std::uint64_t{1} << (k - 1)) > max_len) break;
    }
    return out;
}

bool PaperfoldingScan::stable() const
{
    return std::all_of(orientations.begin(), orientations.end(), [](const auto& o) { return o.stable; });
}

nlohmann::json PaperfoldingScan::to_json() const
{
    nlohmann::json j;
    j["max_len"] = max_len;
    j["predicted"] = predicted;
    j["predicted_even"] = predicted_even;
    auto arr = nlohmann::json::array();
    for (const auto& o : orientations) {
        arr.push_back({{"sequence", o.sequence},
                       {"observed", o.observed},
                       {"observed_not_predicted", o.missing_from_predicted},
                       {"predicted_even_not_observed", o.not_observed_even},
                       {"matches_even", o.matches_even},
                       {"stable", o.stable},
                       {"prefix_used", o.prefix_length_used}});
    }
    j["orientations"] = std::move(arr);
    j["stable"] = stable();
    return j;
}

PaperfoldingScan paperfolding_scan(std::size_t max_len)
{
    PaperfoldingScan scan;
    scan.max_len = max_len;
    scan.predicted = paperfolding_predicted(max_len);
    for (auto v : scan.predicted) {
        if (v % 2 == 0) scan.predicted_even.insert(v);
    }
    for (bool flipped : {false, true}) {
        const SequenceHandle seq = paperfolding(flipped);
        const LengthSetResult found = dyck_length_set(seq, max_len);
        PaperfoldingOrientation o;
        o.sequence = seq.name();
        o.observed = found.lengths;
        o.stable = found.stable;
        o.prefix_length_used = found.prefix_length_used;
        std::set_difference(o.observed.begin(), o.observed.end(), scan.predicted.begin(), scan.predicted.end(),
                            std::inserter(o.missing_from_predicted, o.missing_from_predicted.end()));
        std::set_difference(scan.predicted_even.begin(), scan.predicted_even.end(), o.observed.begin(),
                            o.observed.end(), std::inserter(o.not_observed_even, o.not_observed_even.end()));
        o.matches_even = o.observed == scan.predicted_even;
        scan.orientations.push_back(std::move(o));
    }
    return scan;
}

} // namespace dyckolab
