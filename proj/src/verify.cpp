#include "dyckolab/verify.hpp"

#include "dyckolab/constructions.hpp"
#include "dyckolab/dyck_analysis.hpp"
#include "dyckolab/error.hpp"
#include "dyckolab/identities.hpp"
#include "dyckolab/linrep.hpp"
#include "dyckolab/morphism.hpp"
#include "dyckolab/repetition.hpp"
#include "dyckolab/sequences.hpp"

#include <atomic>
#include <chrono>
#include <functional>
#include <thread>

namespace dyckolab {

std::string status_name(TaskStatus s)
{
    switch (s) {
    case TaskStatus::pass: return "pass";
    case TaskStatus::fail: return "fail";
    case TaskStatus::unstable: return "unstable";
    }
    return "?";
}

nlohmann::json TaskResult::to_json() const
{
    return {{"id", id}, {"status", status_name(status)}, {"parameters", parameters}, {"result", result}, {"seconds", seconds}};
}

namespace {

using json = nlohmann::json;

struct Outcome {
    TaskStatus status;
    json parameters;
    json result;
};

TaskStatus verdict(bool holds, bool stable = true)
{
    if (!stable) return TaskStatus::unstable;
    return holds ? TaskStatus::pass : TaskStatus::fail;
}

json opt_json(const std::optional<std::uint64_t>& x) { return x ? json(*x) : json(nullptr); }

json words_json(const std::vector<Word>& ws)
{
    json arr = json::array();
    for (const auto& w : ws) arr.push_back(w.str());
    return arr;
}

const std::vector<std::uint64_t>& census20_values()
{
    static const std::vector<std::uint64_t> v{1, 1, 2, 3, 2, 4, 6, 6, 4, 8, 8, 8, 12, 9, 12, 13, 8, 14, 16, 14, 16};
    return v;
}

std::vector<Word> all_words(unsigned k, std::size_t max_len)
{
    std::vector<Word> out;
    std::vector<Word> layer{Word(k)};
    for (std::size_t n = 1; n <= max_len; ++n) {
        std::vector<Word> next;
        for (const auto& w : layer) {
            for (Symbol s = 0; s < k; ++s) {
                Word x = w;
                x.push_back(s);
                next.push_back(std::move(x));
            }
        }
        out.insert(out.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    return out;
}

Outcome task_census20(bool)
{
    const auto rows = dyck_census_range(thue_morse(), 20);
    bool holds = true, stable = true;
    json values = json::array();
    for (std::size_t n = 0; n < rows.size(); ++n) {
        values.push_back(rows[n].count);
        holds = holds && rows[n].count == census20_values()[n];
        stable = stable && rows[n].stable;
    }
    return {verdict(holds, stable), {{"n_max", 20}}, {{"values", values}}};
}

Outcome task_linrep_oracle(bool desk)
{
    const std::size_t n_max = desk ? 2000 : 200;
    const LinRep& f = builtin_f();
    std::optional<std::uint64_t> mismatch;
    bool stable = true;
    for (std::size_t n = 0; n <= n_max && !mismatch; ++n) {
        const auto c = dyck_census(thue_morse(), n);
        stable = stable && c.stable;
        if (Rational(static_cast<unsigned long>(c.count)) != f.eval(n)) mismatch = n;
    }
    return {verdict(!mismatch, stable), {{"n_max", n_max}}, {{"first_mismatch", opt_json(mismatch)}}};
}

Outcome task_nesting_73(bool desk)
{
    const std::size_t len = desk ? 30 : 20;
    const auto r = check_nesting_bound_73(len, 3);
    return {verdict(r.holds), {{"max_len", len}, {"bound", 3}}, r.to_json()};
}

Outcome task_overlapfree_char(bool desk)
{
    const std::size_t len = desk ? 60 : 30;
    const auto literal = overlap_free_dyck_equivalence(len, CharacterizationReading::square_free);
    const auto proper = overlap_free_dyck_equivalence(len, CharacterizationReading::proper_factors);
    return {verdict(literal.holds),
            {{"max_len", len}},
            {{"square_free_reading", literal.to_json()}, {"proper_factor_reading", proper.to_json()}}};
}

Outcome task_overlapfree_nesting(bool desk)
{
    const std::size_t max_x = desk ? 200 : 60;
    const Word s = tern_s_seq().prefix(max_x);
    const Morphism& h = catalog::h_dyck();
    bool holds = true;
    std::size_t checked = 0;
    json witness = nullptr;
    for (std::size_t n = 2; n <= max_x && holds; ++n) {
        if (s[n - 2] != 1 || s[n - 1] != 0) continue;
        const Word x = s.factor(0, n);
        const Word hx = h.apply(x);
        const Word wrapped = Word("0") + hx + Word("1");
        ++checked;
        const bool ok = is_dyck(hx) && is_overlap_free(hx) && nesting_level(hx).value == 2 && is_dyck(wrapped) &&
                        is_overlap_free(wrapped) && nesting_level(wrapped).value == 3;
        if (!ok) {
            holds = false;
            witness = x.str();
        }
    }
    return {verdict(holds), {{"max_prefix", max_x}}, {{"prefixes_checked", checked}, {"witness", witness}}};
}

Outcome task_morphism_trick(bool desk)
{
    const std::size_t len = desk ? 16 : 12;
    EnumerationSpec spec;
    spec.bound = {Exponent(len + 1), false};
    spec.dyck_only = true;
    spec.max_len = len;
    const Morphism& m = catalog::cf_doubler();
    bool holds = true;
    std::uint64_t checked = 0;
    json witness = nullptr;
    for_each_power_free(spec, [&](const Word& w) {
        ++checked;
        const Word img = m.apply(w);
        if (holds && !(is_dyck(img) && nesting_level(img).value == nesting_level(w).value + 1)) {
            holds = false;
            witness = w.str();
        }
    });
    return {verdict(holds), {{"max_len", len}}, {{"words_checked", checked}, {"witness", witness}}};
}

Outcome ternary_nesting(bool desk, bool use_g)
{
    const std::size_t len = use_g ? (desk ? 8 : 6) : (desk ? 7 : 5);
    bool holds = true;
    std::uint64_t checked = 0;
    json witness = nullptr;
    for (const auto& w : all_words(3, len)) {
        if (!is_ternary_dyck(w)) continue;
        ++checked;
        const unsigned level = ternary_nesting(w).value;
        bool ok;
        if (use_g) {
            const Word img = catalog::g6().apply(w);
            ok = is_ternary_dyck(img) && ternary_nesting(img).value == level + 1;
        } else {
            const Word img = catalog::f38().apply(w);
            ok = is_dyck(img) && nesting_level(img).value == 2 * level + 2;
        }
        if (!ok && holds) {
            holds = false;
            witness = w.str();
        }
    }
    return {verdict(holds), {{"max_len", len}}, {{"words_checked", checked}, {"witness", witness}}};
}

Outcome task_fam_cubefree(bool desk)
{
    const unsigned t_max = desk ? 8 : 6;
    bool holds = true;
    json members = json::array();
    Word previous;
    for (unsigned t = 0; t <= t_max; ++t) {
        const auto fw = cubefree_family(t);
        holds = holds && fw.passed() && (t == 0 || fw.word == catalog::cf_doubler().apply(previous));
        members.push_back(fw.to_json());
        previous = fw.word;
    }
    return {verdict(holds), {{"t_max", t_max}}, {{"members", members}}};
}

Outcome task_fam_seventhirds(bool desk)
{
    const unsigned t_max = desk ? 3 : 2;
    bool holds = true;
    json members = json::array();
    for (unsigned t = 0; t <= t_max; ++t) {
        const auto fw = seventhirds_family(t);
        const Word pre = catalog::g6().iterate(Word("2", 3), t);
        const bool transport = is_ternary_dyck(pre) && ternary_nesting(pre).value == t;
        std::size_t expected_len = 38;
        for (unsigned i = 0; i < t; ++i) expected_len *= 6;
        holds = holds && fw.passed() && transport && fw.word.size() == expected_len;
        auto j = fw.to_json();
        j["preimage_ternary_nesting_ok"] = transport;
        members.push_back(std::move(j));
    }
    return {verdict(holds), {{"t_max", t_max}}, {{"members", members}}};
}

Outcome task_tm_char(bool desk)
{
    const std::size_t len = desk ? 40 : 20;
    const auto r = tm_dyck_characterization_check(len);
    return {verdict(r.holds, r.stable),
            {{"max_len", len}},
            {{"holds", r.holds},
             {"stable", r.stable},
             {"dyck_factors", r.dyck_factors},
             {"images", r.images},
             {"first_mismatch_length", r.first_mismatch_length ? json(*r.first_mismatch_length) : json(nullptr)},
             {"only_dyck_factors", words_json(r.only_dyck_factors)},
             {"only_images", words_json(r.only_images)}}};
}

Outcome task_return_words(bool desk)
{
    const std::size_t len = desk ? 100000 : 10000;
    const bool holds = tm_return_word_decomposition(len);
    return {verdict(holds), {{"prefix_len", len}}, {{"holds", holds}}};
}

Outcome task_tm_examples(bool desk)
{
    const std::size_t even_max = desk ? 500 : 200;
    const std::size_t start_max = desk ? 10000 : 2000;
    const std::size_t nest_len = desk ? 200 : 100;
    const auto every = dyck_exists_every_even_length(thue_morse(), even_max);
    const auto starts = dyck_starts_where_zero(thue_morse(), start_max, 64);
    const auto nest = nesting_bounded_check(thue_morse(), nest_len, 2);
    const bool holds = every.holds && starts.holds && nest.holds;
    return {verdict(holds, nest.stable),
            {{"even_max", even_max}, {"start_max", start_max}, {"cutoff", 64}, {"nesting_max_len", nest_len}},
            {{"every_even_length", every.holds},
             {"every_even_length_witness", opt_json(every.witness)},
             {"zero_starts_dyck", starts.holds},
             {"zero_starts_witness", opt_json(starts.witness)},
             {"nesting_at_most_2", nest.holds},
             {"max_nesting", nest.max_nesting}}};
}

Outcome task_recurrence(Identity id, bool desk)
{
    const std::uint64_t n_max = desk ? 5000 : 1000;
    const auto symbolic = check_identity(id, IdentityMode::symbolic);
    const auto numeric = check_identity(id, IdentityMode::numeric, n_max);
    return {verdict(symbolic.holds && numeric.holds),
            {{"identity", identity_name(id)}, {"numeric_n_max", n_max}},
            {{"symbolic", symbolic.to_json()}, {"numeric", numeric.to_json()}}};
}

Outcome task_bound_upper(bool desk)
{
    const std::uint64_t n_max = desk ? 5000 : 1000;
    const LinRep& f = builtin_f();
    std::optional<std::uint64_t> witness, strong_witness, tight_witness;
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        const Rational v = f.eval(n);
        if (!witness && v > Rational(static_cast<unsigned long>(n))) witness = n;
        if (!strong_witness && v > Rational(static_cast<unsigned long>(n - n % 2))) strong_witness = n;
    }
    for (unsigned i = 0; i <= 10 && !tight_witness; ++i) {
        const std::uint64_t n = 3ull << i;
        if (f.eval(n) != Rational(static_cast<unsigned long>(n))) tight_witness = i;
    }
    return {verdict(!witness && !tight_witness),
            {{"n_max", n_max}, {"tight_i_max", 10}},
            {{"upper_witness", opt_json(witness)},
             {"tight_witness_i", opt_json(tight_witness)},
             {"odd_reduced_bound_witness", opt_json(strong_witness)}}};
}

Outcome task_bound_lower(bool desk)
{
    const std::uint64_t n_max = desk ? 5000 : 1000;
    const LinRep& f = builtin_f();
    std::optional<std::uint64_t> half_witness, odd_witness, tight_witness, odd_witness_from3;
    for (std::uint64_t n = 0; n <= n_max; ++n) {
        const Rational v = f.eval(n);
        if (!half_witness && 2 * v < Rational(static_cast<unsigned long>(n))) half_witness = n;
        if (n % 2 == 1 && 2 * v < Rational(static_cast<unsigned long>(n + 3))) {
            if (!odd_witness) odd_witness = n;
            if (n >= 3 && !odd_witness_from3) odd_witness_from3 = n;
        }
    }
    for (unsigned i = 2; i <= 12 && !tight_witness; ++i) {
        if (f.eval(1ull << i) != Rational(static_cast<unsigned long>(1ull << (i - 1)))) tight_witness = i;
    }
    return {verdict(!half_witness && !odd_witness && !tight_witness),
            {{"n_max", n_max}, {"tight_i_range", {2, 12}}},
            {{"half_witness", opt_json(half_witness)},
             {"odd_witness", opt_json(odd_witness)},
             {"odd_bound_holds_from_3", !odd_witness_from3},
             {"tight_witness_i", opt_json(tight_witness)}}};
}

Outcome task_sum_formula(bool desk)
{
    const unsigned direct_max = desk ? 12 : 10;
    const LinRep& f = builtin_f();
    std::optional<std::uint64_t> direct_witness;
    Rational running = 0;
    std::uint64_t next = 0;
    for (unsigned n = 2; n <= direct_max && !direct_witness; ++n) {
        for (; next < (1ull << n); ++next) running += f.eval(next);
        if (running != sum_formula(n)) direct_witness = n;
    }
    const auto closed = closed_form_checks(20);
    return {verdict(!direct_witness && closed.holds()),
            {{"direct_n_max", direct_max}, {"matrix_power_n_max", 20}},
            {{"direct_witness", opt_json(direct_witness)}, {"closed_forms", closed.to_json()}}};
}

Outcome factor_set_task(const SequenceHandle& seq, const std::set<Word>& expected, bool desk)
{
    const std::size_t len = desk ? 200 : 100;
    const auto r = dyck_factor_set(seq, len);
    json found = json::array();
    for (const auto& w : r.words) found.push_back(w.str());
    return {verdict(r.words == expected, r.stable),
            {{"sequence", seq.name()}, {"max_len", len}},
            {{"factors", found}, {"stable", r.stable}, {"prefix_used", r.prefix_length_used}}};
}

Outcome task_rs(bool desk)
{
    const unsigned n_max = desk ? 6 : 4;
    const std::uint64_t sum_max = std::uint64_t{1} << (2 * (desk ? 7 : 5));
    bool holds = true;
    json blocks = json::array();
    for (unsigned n = 0; n <= n_max; ++n) {
        const auto fw = rs_dyck_block(n);
        holds = holds && fw.passed();
        blocks.push_back(fw.to_json());
    }
    std::optional<std::uint64_t> positive_witness, peak_witness;
    for (std::uint64_t i = 0; i < sum_max && !positive_witness; ++i) {
        if (rs_partial_sum(i) <= 0) positive_witness = i;
    }
    for (unsigned n = 0; n <= n_max && !peak_witness; ++n) {
        const std::uint64_t end = (std::uint64_t{2} << (2 * n)) - 1;
        const std::int64_t peak = std::int64_t{2} << n;
        if (rs_partial_sum(end) != peak) peak_witness = n;
        for (std::uint64_t i = 0; i <= end && !peak_witness; ++i) {
            const auto s = rs_partial_sum(i);
            if (s <= 0 || s > peak) peak_witness = n;
        }
    }
    holds = holds && !positive_witness && !peak_witness;
    return {verdict(holds),
            {{"n_max", n_max}, {"partial_sum_below", sum_max}},
            {{"blocks", blocks}, {"positive_witness", opt_json(positive_witness)}, {"peak_witness_n", opt_json(peak_witness)}}};
}

Outcome task_pf(bool desk)
{
    const std::size_t len = desk ? 1024 : 256;
    const auto scan = paperfolding_scan(len);
    return {scan.stable() ? TaskStatus::pass : TaskStatus::unstable, {{"max_len", len}}, scan.to_json()};
}

struct Entry {
    TaskInfo info;
    std::function<Outcome(bool)> run;
};

const std::vector<Entry>& registry()
{
    static const std::vector<Entry> entries = [] {
        std::vector<Entry> e;
        auto add = [&](std::string id, std::string claim, std::function<Outcome(bool)> fn) {
            e.push_back({{std::move(id), std::move(claim)}, std::move(fn)});
        };
        add("census-20", "f(0..20) on Thue-Morse equals 1,1,2,3,2,4,6,6,4,8,8,8,12,9,12,13,8,14,16,14,16", task_census20);
        add("linrep-oracle", "the rank-7 representation agrees with the census", task_linrep_oracle);
        add("thm-nesting-73", "7/3-power-free Dyck words have nesting level at most 3", task_nesting_73);
        add("thm-overlapfree-char", "overlap-free Dyck words are h(x) or 0h(x)1 for suitable ternary x",
            task_overlapfree_char);
        add("overlapfree-nesting", "h(x) and 0h(x)1 have nesting 2 and 3 for prefixes x of s ending in 10",
            task_overlapfree_nesting);
        add("doubler-nesting", "0->001, 1->011 maps Dyck words to Dyck words with nesting plus one",
            task_morphism_trick);
        add("fam-cubefree", "cube-free Dyck words of every nesting level", task_fam_cubefree);
        add("g6-nesting", "g maps ternary Dyck words to ternary Dyck words with nesting plus one",
            [](bool d) { return ternary_nesting(d, true); });
        add("f38-nesting", "f maps ternary Dyck words of nesting N to Dyck words of nesting 2N+2",
            [](bool d) { return ternary_nesting(d, false); });
        add("fam-seventhirds", "7/3+-power-free Dyck words of every nesting level", task_fam_seventhirds);
        add("tm-dyck-char", "Thue-Morse Dyck factors are exactly h(x) with x a factor of s", task_tm_char);
        add("tm-return-words", "Thue-Morse is 011 followed by the four return words", task_return_words);
        add("tm-examples", "Thue-Morse Dyck factors: every even length, every zero starts one, nesting at most 2",
            task_tm_examples);
        add("rec-a1", "f(2n) = 2f(n)", [](bool d) { return task_recurrence(Identity::a1, d); });
        add("rec-a2", "f(4n+3) = 2f(n) + f(2n+1) + q(n)", [](bool d) { return task_recurrence(Identity::a2, d); });
        add("rec-a3", "f(8n+1) = 2f(2n+1) + f(4n+1) - q(n)", [](bool d) { return task_recurrence(Identity::a3, d); });
        add("rec-a4", "f(8n+5) = 2f(n) + f(2n+1) + 2f(2n+2)",
            [](bool d) { return task_recurrence(Identity::a4, d); });
        add("bound-upper", "f(n) <= n, with equality at 3*2^i", task_bound_upper);
        add("bound-lower", "f(n) >= n/2 with equality at 2^i; f(n) >= (n+3)/2 for odd n >= 1", task_bound_lower);
        add("sum-formula", "sum of f(i) for i < 2^n is 19*4^n/48 - 2^n/4 + 5/3", task_sum_formula);
        add("fib-dyck", "the Fibonacci word has Dyck factors 01 and 0101 only", [](bool d) {
            return factor_set_task(fibonacci_word(), {Word("01"), Word("0101")}, d);
        });
        add("pd-dyck", "period-doubling has Dyck factors 01, 0101 and 010101 only", [](bool d) {
            return factor_set_task(period_doubling(), {Word("01"), Word("0101"), Word("010101")}, d);
        });
        add("rs-nesting", "Rudin-Shapiro has Dyck factors of nesting 2^(n+1)-1", task_rs);
        add("pf-conjecture", "paperfolding Dyck lengths against 2^k - 2^i (reported, not asserted)", task_pf);
        return e;
    }();
    return entries;
}

} // namespace

const std::vector<TaskInfo>& verification_tasks()
{
    static const std::vector<TaskInfo> infos = [] {
        std::vector<TaskInfo> out;
        for (const auto& e : registry()) out.push_back(e.info);
        return out;
    }();
    return infos;
}

bool has_task(const std::string& id)
{
    for (const auto& e : registry()) {
        if (e.info.id == id) return true;
    }
    return false;
}

TaskResult run_task(const std::string& id, bool desk_scale)
{
    for (const auto& e : registry()) {
        if (e.info.id != id) continue;
        TaskResult r;
        r.id = id;
        const auto start = std::chrono::steady_clock::now();
        try {
            Outcome o = e.run(desk_scale);
            r.status = o.status;
            r.parameters = std::move(o.parameters);
            r.result = std::move(o.result);
        } catch (const CapExceeded& ex) {
            r.status = TaskStatus::unstable;
            r.result = {{"cap_exceeded", ex.what()}, {"progress", ex.progress()}};
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return r;
    }
    throw DomainError("unknown verification task '" + id + "'");
}

std::vector<TaskResult> run_tasks(const std::vector<std::string>& ids, bool desk_scale, unsigned threads)
{
    for (const auto& id : ids) {
        if (!has_task(id)) throw DomainError("unknown verification task '" + id + "'");
    }
    std::vector<TaskResult> out(ids.size());
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(ids.size())));
    if (threads <= 1) {
        for (std::size_t i = 0; i < ids.size(); ++i) out[i] = run_task(ids[i], desk_scale);
        return out;
    }
    std::atomic<std::size_t> next{0};
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < ids.size(); i = next++) out[i] = run_task(ids[i], desk_scale);
            });
        }
    }
    return out;
}

} // namespace dyckolab
