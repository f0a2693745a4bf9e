#include "dyckolab/dyck_analysis.hpp"

#include "dyckolab/caps.hpp"
#include "dyckolab/error.hpp"
#include "dyckolab/factor_index.hpp"
#include "dyckolab/morphism.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <map>
#include <sstream>
#include <thread>

namespace dyckolab {

namespace {

// Balance |x|_0 - |x|_1 of the prefix of length j, from the ones table.
inline long long prefix_balance(const Prefix& p, std::size_t j)
{
    return static_cast<long long>(j) - 2 * static_cast<long long>(p.ones[j]);
}

std::size_t prefix_cap(const CensusPolicy& policy)
{
    return policy.max_prefix != 0 ? policy.max_prefix : caps().census_prefix;
}

std::size_t initial_prefix(const CensusPolicy& policy, std::size_t factor_length)
{
    return std::max(policy.min_prefix, policy.length_multiple * factor_length);
}

void require_binary(const SequenceHandle& seq, const char* op)
{
    if (seq.alphabet_size() != 2) throw AlphabetError(std::string(op) + " needs a binary sequence");
}

// Distinct Dyck factors of length L among the windows of p[0..P-1].
std::uint64_t count_dyck_factors(const Prefix& p, std::size_t P, std::size_t L)
{
    if (L > P) return 0;
    FactorIndex index(p.span(P));
    // Sliding minimum of the balance over positions i..i+L.
    std::deque<std::size_t> minq;
    auto push = [&](std::size_t j) {
        const long long b = prefix_balance(p, j);
        while (!minq.empty() && prefix_balance(p, minq.back()) >= b) minq.pop_back();
        minq.push_back(j);
    };
    for (std::size_t j = 0; j <= L; ++j) push(j);
    for (std::size_t i = 0;; ++i) {
        while (minq.front() < i) minq.pop_front();
        const long long start = prefix_balance(p, i);
        if (prefix_balance(p, i + L) == start && prefix_balance(p, minq.front()) >= start) index.insert(i, L);
        if (i + L == P) break;
        push(i + L + 1);
    }
    return index.size();
}

// Calls visit(i, len, nesting) for every Dyck window of p[0..P-1] with
// 0 < len <= max_len. visit returns false to stop.
template <typename Visit>
void walk_dyck_windows(const Prefix& p, std::size_t P, std::size_t max_len, Visit visit)
{
    for (std::size_t i = 0; i < P; ++i) {
        if (p.symbols[i] != 0) continue;
        long long b = 0, peak = 0;
        const std::size_t limit = std::min(max_len, P - i);
        for (std::size_t len = 1; len <= limit; ++len) {
            b += p.symbols[i + len - 1] == 0 ? 1 : -1;
            if (b < 0) break;
            peak = std::max(peak, b);
            if (b == 0 && !visit(i, len, static_cast<unsigned>(peak))) return;
        }
    }
}

std::set<Word> collect_dyck(const Prefix& p, std::size_t P, std::size_t max_len)
{
    FactorIndex index(p.span(P));
    walk_dyck_windows(p, P, max_len, [&](std::size_t i, std::size_t len, unsigned) {
        index.insert(i, len);
        return true;
    });
    return index.words(2);
}

} // namespace

std::uint64_t count1_window(const WindowQuery& q)
{
    auto p = q.sequence.materialize(q.start + q.length);
    return p->ones[q.start + q.length] - p->ones[q.start];
}

std::uint64_t count0_window(const WindowQuery& q) { return q.length - count1_window(q); }

bool dyck_window(const WindowQuery& q)
{
    require_binary(q.sequence, "dyck_window");
    if (q.length == 0) return true;
    auto p = q.sequence.materialize(q.start + q.length);
    const long long start = prefix_balance(*p, q.start);
    if (prefix_balance(*p, q.start + q.length) != start) return false;
    for (std::size_t j = q.start + 1; j < q.start + q.length; ++j) {
        if (prefix_balance(*p, j) < start) return false;
    }
    return true;
}

std::uint64_t bal_window(const WindowQuery& q)
{
    const auto ones = count1_window(q);
    const auto zeros = q.length - ones;
    return zeros > ones ? zeros - ones : 0;
}

unsigned nest_window(const WindowQuery& q)
{
    if (!dyck_window(q)) throw DomainError("nest_window: window is not Dyck");
    auto p = q.sequence.materialize(q.start + q.length);
    const long long start = prefix_balance(*p, q.start);
    long long best = 0;
    for (std::size_t m = 0; m < q.length; ++m) best = std::max(best, prefix_balance(*p, q.start + m) - start);
    return static_cast<unsigned>(best);
}

CensusResult dyck_census(const SequenceHandle& seq, std::size_t n, const CensusPolicy& policy)
{
    require_binary(seq, "dyck_census");
    if (n == 0) return {0, 1, 0, true};
    const std::size_t L = 2 * n;
    const std::size_t cap = prefix_cap(policy);
    std::size_t P = initial_prefix(policy, L);
    if (P > cap) return {n, 0, 0, false};

    auto snap = seq.materialize(P);
    std::uint64_t previous = count_dyck_factors(*snap, P, L);
    while (2 * P <= cap) {
        P *= 2;
        snap = seq.materialize(P);
        const std::uint64_t current = count_dyck_factors(*snap, P, L);
        // The factor set of a prefix is contained in that of any extension,
        // so equal counts mean equal sets.
        if (current == previous) return {n, current, P, true};
        previous = current;
    }
    return {n, previous, P, false};
}

std::vector<CensusResult> dyck_census_range(const SequenceHandle& seq, std::size_t n_max, const CensusPolicy& policy,
                                            unsigned threads)
{
    std::vector<CensusResult> out(n_max + 1);
    threads = std::max(1u, threads);
    if (threads == 1) {
        for (std::size_t n = 0; n <= n_max; ++n) out[n] = dyck_census(seq, n, policy);
        return out;
    }
    // Materialize the largest prefix up front so workers only read snapshots.
    seq.materialize(2 * initial_prefix(policy, 2 * n_max));
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
            for (std::size_t n = next++; n <= n_max; n = next++) out[n] = dyck_census(seq, n, policy);
        });
    }
    pool.clear();
    return out;
}

std::string census_csv(const std::vector<CensusResult>& rows)
{
    std::ostringstream out;
    out << "n,f,prefix_used,stable\n";
    for (const auto& r : rows)
        out << r.n << ',' << r.count << ',' << r.prefix_length_used << ',' << (r.stable ? "true" : "false") << '\n';
    return out.str();
}

nlohmann::json census_json(const std::vector<CensusResult>& rows)
{
    auto arr = nlohmann::json::array();
    for (const auto& r : rows)
        arr.push_back({{"n", r.n}, {"f", r.count}, {"prefix_used", r.prefix_length_used}, {"stable", r.stable}});
    return arr;
}

FactorSetResult dyck_factor_set(const SequenceHandle& seq, std::size_t max_len, const CensusPolicy& policy)
{
    require_binary(seq, "dyck_factor_set");
    const std::size_t cap = prefix_cap(policy);
    std::size_t P = initial_prefix(policy, max_len);
    auto words = collect_dyck(*seq.materialize(P), P, max_len);
    while (2 * P <= cap) {
        P *= 2;
        auto next = collect_dyck(*seq.materialize(P), P, max_len);
        if (next.size() == words.size()) return {std::move(next), P, true};
        words = std::move(next);
    }
    return {std::move(words), P, false};
}

FactorSetResult factor_set(const SequenceHandle& seq, std::size_t length, const CensusPolicy& policy)
{
    auto collect = [&](std::size_t P) {
        auto snap = seq.materialize(P);
        FactorIndex index(snap->span(P));
        for (std::size_t i = 0; i + length <= P; ++i) index.insert(i, length);
        return index.words(seq.alphabet_size());
    };
    const std::size_t cap = prefix_cap(policy);
    std::size_t P = initial_prefix(policy, length);
    auto words = collect(P);
    while (2 * P <= cap) {
        P *= 2;
        auto next = collect(P);
        if (next.size() == words.size()) return {std::move(next), P, true};
        words = std::move(next);
    }
    return {std::move(words), P, false};
}

CharacterizationReport tm_dyck_characterization_check(std::size_t max_len)
{
    if (max_len % 2 != 0) throw DomainError("tm_dyck_characterization_check: max_len must be even");
    CharacterizationReport report;
    const auto lhs = dyck_factor_set(thue_morse(), max_len);
    report.stable = lhs.stable;

    std::set<Word> rhs;
    const Morphism& h = catalog::h_dyck();
    for (std::size_t m = 1; 2 * m <= max_len; ++m) {
        const auto factors = factor_set(tern_s_seq(), m);
        report.stable = report.stable && factors.stable;
        for (const Word& x : factors.words) {
            Word image = h.apply(x);
            if (image.size() <= max_len) rhs.insert(std::move(image));
        }
    }
    report.dyck_factors = lhs.words.size();
    report.images = rhs.size();
    report.holds = lhs.words == rhs;
    std::set_difference(lhs.words.begin(), lhs.words.end(), rhs.begin(), rhs.end(),
                        std::back_inserter(report.only_dyck_factors));
    std::set_difference(rhs.begin(), rhs.end(), lhs.words.begin(), lhs.words.end(),
                        std::back_inserter(report.only_images));
    if (!report.holds) {
        std::map<std::size_t, std::pair<std::set<Word>, std::set<Word>>> by_length;
        for (const Word& w : lhs.words) by_length[w.size()].first.insert(w);
        for (const Word& w : rhs) by_length[w.size()].second.insert(w);
        for (const auto& [len, sides] : by_length) {
            if (sides.first != sides.second) {
                report.first_mismatch_length = len;
                break;
            }
        }
    }
    return report;
}

bool tm_return_word_decomposition(std::size_t prefix_len)
{
    static const std::vector<Word> pieces{Word("0011"), Word("010011"), Word("001011"), Word("01001011")};
    const Word t = thue_morse().prefix(prefix_len);
    if (prefix_len < 3) return t == Word("011").factor(0, prefix_len);
    if (t.factor(0, 3) != Word("011")) return false;
    std::size_t pos = 3;
    while (pos < prefix_len) {
        bool matched = false;
        for (const Word& piece : pieces) {
            const std::size_t avail = std::min(piece.size(), prefix_len - pos);
            if (std::equal(piece.begin(), piece.begin() + static_cast<std::ptrdiff_t>(avail),
                           t.begin() + static_cast<std::ptrdiff_t>(pos))) {
                // The pieces form a prefix code, so the first full match is the parse.
                if (avail == piece.size() || pos + avail == prefix_len) {
                    pos += avail;
                    matched = true;
                    break;
                }
            }
        }
        if (!matched) return false;
    }
    return true;
}

LengthSetResult dyck_length_set(const SequenceHandle& seq, std::size_t max_len, const CensusPolicy& policy)
{
    require_binary(seq, "dyck_length_set");
    const std::size_t cap = prefix_cap(policy);
    auto scan = [&](std::size_t P) {
        std::set<std::size_t> lengths;
        walk_dyck_windows(*seq.materialize(P), P, max_len, [&](std::size_t, std::size_t len, unsigned) {
            lengths.insert(len);
            return true;
        });
        return lengths;
    };
    std::size_t P = std::min(initial_prefix(policy, max_len), cap);
    auto lengths = scan(P);
    while (2 * P <= cap) {
        auto next = scan(2 * P);
        P *= 2;
        if (next == lengths) return {std::move(next), P, true};
        lengths = std::move(next);
    }
    return {std::move(lengths), P, false};
}

ScanReport dyck_exists_every_even_length(const SequenceHandle& seq, std::size_t max_len)
{
    require_binary(seq, "dyck_exists_every_even_length");
    if (max_len < 2) return {true, std::nullopt, 0};
    const std::size_t cap = caps().census_prefix;
    std::size_t P = std::max<std::size_t>(1024, 12 * max_len);
    for (;;) {
        std::vector<bool> seen(max_len + 1, false);
        walk_dyck_windows(*seq.materialize(P), P, max_len, [&](std::size_t, std::size_t len, unsigned) {
            seen[len] = true;
            return true;
        });
        std::optional<std::uint64_t> missing;
        for (std::size_t len = 2; len <= max_len; len += 2) {
            if (!seen[len]) {
                missing = len;
                break;
            }
        }
        if (!missing) return {true, std::nullopt, P};
        if (2 * P > cap) return {false, missing, P};
        P *= 2;
    }
}

ScanReport dyck_starts_where_zero(const SequenceHandle& seq, std::size_t max_i, std::size_t cutoff)
{
    require_binary(seq, "dyck_starts_where_zero");
    const std::size_t P = max_i + cutoff + 1;
    auto p = seq.materialize(P);
    for (std::size_t i = 0; i <= max_i; ++i) {
        if (p->symbols[i] != 0) continue;
        long long b = 0;
        bool found = false;
        for (std::size_t len = 1; len <= cutoff; ++len) {
            b += p->symbols[i + len - 1] == 0 ? 1 : -1;
            if (b <= 0) {
                found = b == 0;
                break;
            }
        }
        if (!found) return {false, i, P};
    }
    return {true, std::nullopt, P};
}

NestingReport nesting_bounded_check(const SequenceHandle& seq, std::size_t max_len, unsigned bound)
{
    require_binary(seq, "nesting_bounded_check");
    auto scan = [&](std::size_t P, NestingReport& r) {
        r = NestingReport{};
        r.prefix_length_used = P;
        walk_dyck_windows(*seq.materialize(P), P, max_len, [&](std::size_t i, std::size_t len, unsigned nest) {
            r.max_nesting = std::max(r.max_nesting, nest);
            if (nest > bound && !r.witness) r.witness = WindowQuery{seq, i, len};
            return true;
        });
        r.holds = !r.witness.has_value();
    };
    const std::size_t cap = caps().census_prefix;
    std::size_t P = std::max<std::size_t>(1024, 12 * max_len);
    NestingReport first, second;
    scan(P, first);
    while (2 * P <= cap) {
        P *= 2;
        scan(P, second);
        if (second.max_nesting == first.max_nesting) {
            second.stable = true;
            return second;
        }
        first = second;
    }
    return first;
}

} // namespace dyckolab
