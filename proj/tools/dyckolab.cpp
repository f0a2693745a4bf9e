// dyckolab command-line front end. Every command prints JSON (or CSV for
// `census --csv`) on stdout.
//
// Exit codes: 0 all checks pass, 1 a check failed (the JSON carries the
// witness), 2 usage or input error, 3 unstable result or safety cap hit.

#include "dyckolab/caps.hpp"
#include "dyckolab/constructions.hpp"
#include "dyckolab/dfao.hpp"
#include "dyckolab/dyck_analysis.hpp"
#include "dyckolab/error.hpp"
#include "dyckolab/identities.hpp"
#include "dyckolab/linrep.hpp"
#include "dyckolab/repetition.hpp"
#include "dyckolab/sequences.hpp"
#include "dyckolab/verify.hpp"
#include "dyckolab/word.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace dyckolab;
using json = nlohmann::json;

namespace {

enum Exit { ok = 0, failed = 1, usage = 2, unstable = 3 };

int emit(const json& j, int code)
{
    std::cout << j.dump(2) << "\n";
    return code;
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

LinRep load_rep(const std::string& source)
{
    if (source == "builtin:f") return builtin_f();
    if (source == "builtin:q") return from_dfao(q_dfao());
    if (source == "builtin:tm") return from_dfao(thue_morse_dfao());
    if (source.starts_with("dfao:")) return from_dfao(Dfao::parse(read_file(source.substr(5))));
    return LinRep::parse(read_file(source));
}

PowerBound parse_bound(const std::string& text, bool strict) { return {Exponent::parse(text), strict}; }

struct Options {
    // seq
    std::string seq_name;
    std::size_t prefix = 64;
    // dyck, exponent, powerfree
    std::string word;
    std::string bound = "2";
    bool strict = false;
    // census
    std::size_t n_max = 20;
    bool csv = false;
    unsigned threads = 1;
    // linrep
    std::string rep_source;
    std::vector<std::uint64_t> eval_n;
    std::uint64_t eval_from = 0, eval_to = 0;
    bool eval_range = false;
    std::string identity = "all";
    bool numeric = false;
    std::uint64_t numeric_max = 10000;
    // enumerate
    bool dyck = false;
    std::size_t max_len = 0;
    std::size_t min_len = 1;
    unsigned alphabet = 2;
    int nesting = -1;
    std::vector<std::string> avoid;
    bool count_only = false;
    // family
    unsigned t = 0;
    bool opt_in = false;
    bool show_word = false;
    // verify
    std::string task = "all";
    bool desk_scale = false;
    bool list = false;
    // scan
    std::size_t scan_len = 1024;
};

int run_seq(const Options& o)
{
    const SequenceHandle seq = sequence_by_name(o.seq_name);
    return emit({{"sequence", seq.name()}, {"length", o.prefix}, {"prefix", seq.prefix(o.prefix).str()}}, ok);
}

int run_dyck_check(const Options& o)
{
    const Word w(o.word);
    return emit({{"word", w.str()}, {"dyck", is_dyck(w)}, {"balance", balance(w).value}}, ok);
}

int run_dyck_nesting(const Options& o)
{
    const Word w(o.word);
    if (!is_dyck(w)) return emit({{"word", w.str()}, {"dyck", false}, {"error", "not a Dyck word"}}, failed);
    return emit({{"word", w.str()}, {"dyck", true}, {"nesting", nesting_level(w).value}}, ok);
}

unsigned guess_alphabet(const std::string& digits)
{
    char top = '1';
    for (char c : digits) top = std::max(top, c);
    return static_cast<unsigned>(top - '0') + 1;
}

int run_exponent(const Options& o)
{
    const Word w(o.word, guess_alphabet(o.word));
    return emit({{"word", w.str()},
                 {"period", period(w)},
                 {"exponent", exponent(w).str()},
                 {"critical_exponent", critical_exponent(w).str()}},
                ok);
}

int run_powerfree(const Options& o)
{
    const Word w(o.word, guess_alphabet(o.word));
    const PowerBound b = parse_bound(o.bound, o.strict);
    return emit({{"word", w.str()},
                 {"bound", b.threshold.str() + (b.strict ? "+" : "")},
                 {"power_free", is_power_free(w, b)}},
                ok);
}

int run_census(const Options& o)
{
    const auto rows = dyck_census_range(sequence_by_name(o.seq_name), o.n_max, {}, o.threads);
    const bool stable = std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.stable; });
    if (o.csv) {
        std::cout << census_csv(rows);
    } else {
        std::cout << json{{"sequence", o.seq_name}, {"rows", census_json(rows)}, {"stable", stable}}.dump(2) << "\n";
    }
    return stable ? ok : unstable;
}

int run_linrep_eval(const Options& o)
{
    const LinRep rep = load_rep(o.rep_source);
    std::vector<std::uint64_t> ns = o.eval_n;
    if (o.eval_range) {
        if (o.eval_to < o.eval_from) throw DomainError("--to must not be smaller than --from");
        for (std::uint64_t n = o.eval_from; n <= o.eval_to; ++n) ns.push_back(n);
    }
    json values = json::array();
    for (auto n : ns) values.push_back({{"n", n}, {"value", to_string(rep.eval(n))}});
    return emit({{"source", o.rep_source}, {"rank", rep.rank()}, {"values", values}}, ok);
}

int run_linrep_minimize(const Options& o)
{
    const LinRep rep = load_rep(o.rep_source);
    const LinRep m = minimize(rep);
    std::cout << m.str();
    return ok;
}

int run_linrep_show(const Options& o)
{
    std::cout << load_rep(o.rep_source).str();
    return ok;
}

int run_linrep_identity(const Options& o)
{
    std::vector<Identity> ids;
    if (o.identity == "all") {
        ids = {Identity::a1, Identity::a2, Identity::a3, Identity::a4};
    } else {
        ids = {parse_identity(o.identity)};
    }
    json out = json::array();
    bool all = true;
    for (auto id : ids) {
        const auto r = check_identity(id, o.numeric ? IdentityMode::numeric : IdentityMode::symbolic, o.numeric_max);
        auto j = r.to_json();
        j["identity"] = identity_name(id);
        out.push_back(std::move(j));
        all = all && r.holds;
    }
    return emit(out, all ? ok : failed);
}

int run_enumerate(const Options& o)
{
    EnumerationSpec spec;
    spec.alphabet_size = o.alphabet;
    spec.bound = parse_bound(o.bound, o.strict);
    spec.dyck_only = o.dyck;
    spec.min_len = o.min_len;
    spec.max_len = o.max_len;
    if (o.nesting >= 0) spec.exact_nesting = static_cast<unsigned>(o.nesting);
    for (const auto& f : o.avoid) spec.forbidden.emplace_back(f, o.alphabet);
    json words = json::array();
    const auto count = for_each_power_free(spec, [&](const Word& w) {
        if (!o.count_only) words.push_back(w.str());
    });
    json j{{"bound", spec.bound.threshold.str() + (spec.bound.strict ? "+" : "")},
           {"alphabet", o.alphabet},
           {"dyck", o.dyck},
           {"max_len", o.max_len},
           {"count", count}};
    if (!o.count_only) j["words"] = std::move(words);
    return emit(j, ok);
}

int run_family(const std::string& which, const Options& o)
{
    FamilyWitness fw;
    if (which == "cubefree") {
        fw = cubefree_family(o.t);
    } else if (which == "seventhirds" || which == "sevensthirds") {
        fw = seventhirds_family(o.t, o.opt_in);
    } else {
        fw = rs_dyck_block(o.t);
    }
    return emit(fw.to_json(o.show_word), fw.passed() ? ok : failed);
}

int run_verify(const Options& o)
{
    if (o.list) {
        json arr = json::array();
        for (const auto& t : verification_tasks()) arr.push_back({{"id", t.id}, {"claim", t.claim}});
        return emit(arr, ok);
    }
    std::vector<std::string> ids;
    if (o.task == "all") {
        for (const auto& t : verification_tasks()) ids.push_back(t.id);
    } else {
        if (!has_task(o.task)) {
            std::cerr << "unknown task '" << o.task << "'; run `verify --list` for the task ids\n";
            return usage;
        }
        ids.push_back(o.task);
    }
    const auto results = run_tasks(ids, o.desk_scale, o.threads);
    json arr = json::array();
    bool any_fail = false, any_unstable = false;
    for (const auto& r : results) {
        arr.push_back(r.to_json());
        any_fail = any_fail || r.status == TaskStatus::fail;
        any_unstable = any_unstable || r.status == TaskStatus::unstable;
    }
    return emit(arr, any_fail ? failed : any_unstable ? unstable : ok);
}

int run_scan(const Options& o)
{
    const auto scan = paperfolding_scan(o.scan_len);
    return emit(scan.to_json(), scan.stable() ? ok : unstable);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"dyckolab: Dyck words, power-freeness and k-regular sequences"};
    app.require_subcommand(1);
    Options o;
    std::function<int()> action;

    auto* seq = app.add_subcommand("seq", "print a prefix of a named sequence");
    seq->add_option("name", o.seq_name, "tm, tm-morphic, rs, pd, fib, s, pf, pf-complement")->required();
    seq->add_option("--prefix", o.prefix, "prefix length");
    seq->callback([&] { action = [&] { return run_seq(o); }; });

    auto* dyck = app.add_subcommand("dyck", "Dyck predicates on a binary word");
    dyck->require_subcommand(1);
    auto* dcheck = dyck->add_subcommand("check", "is the word Dyck");
    dcheck->add_option("word", o.word)->required();
    dcheck->callback([&] { action = [&] { return run_dyck_check(o); }; });
    auto* dnest = dyck->add_subcommand("nesting", "nesting level of a Dyck word");
    dnest->add_option("word", o.word)->required();
    dnest->callback([&] { action = [&] { return run_dyck_nesting(o); }; });

    auto* expo = app.add_subcommand("exponent", "period, exponent and critical exponent");
    expo->add_option("word", o.word)->required();
    expo->callback([&] { action = [&] { return run_exponent(o); }; });

    auto* pf = app.add_subcommand("powerfree", "test a word against a power bound");
    pf->add_option("word", o.word)->required();
    pf->add_option("--bound", o.bound, "exponent p/q")->required();
    pf->add_flag("--strict", o.strict, "forbid only exponents above the bound");
    pf->callback([&] { action = [&] { return run_powerfree(o); }; });

    auto* census = app.add_subcommand("census", "number of Dyck factors of length 2n");
    census->add_option("seq", o.seq_name)->required();
    census->add_option("--n-max", o.n_max)->required();
    census->add_flag("--csv", o.csv, "CSV instead of JSON");
    census->add_option("--threads", o.threads);
    census->callback([&] { action = [&] { return run_census(o); }; });

    auto* linrep = app.add_subcommand("linrep", "linear representations");
    linrep->require_subcommand(1);
    const std::string source_help = "JSON file, dfao:<file>, builtin:f, builtin:q or builtin:tm";
    auto* leval = linrep->add_subcommand("eval", "evaluate at n");
    leval->add_option("source", o.rep_source, source_help)->required();
    leval->add_option("--n", o.eval_n, "indices (repeatable)");
    auto* from_opt = leval->add_option("--from", o.eval_from);
    leval->add_option("--to", o.eval_to)->needs(from_opt);
    leval->callback([&] {
        o.eval_range = leval->count("--from") > 0;
        if (o.eval_range && leval->count("--to") == 0) o.eval_to = o.eval_from;
        action = [&] { return run_linrep_eval(o); };
    });
    auto* lmin = linrep->add_subcommand("minimize", "print a minimal equivalent representation");
    lmin->add_option("source", o.rep_source, source_help)->required();
    lmin->callback([&] { action = [&] { return run_linrep_minimize(o); }; });
    auto* lshow = linrep->add_subcommand("show", "print a representation as JSON");
    lshow->add_option("source", o.rep_source, source_help)->required();
    lshow->callback([&] { action = [&] { return run_linrep_show(o); }; });
    auto* lid = linrep->add_subcommand("identity", "check the recurrences a1..a4 for f");
    lid->add_option("source", o.rep_source, "builtin:f")->check(CLI::IsMember({"builtin:f"}));
    lid->add_option("--which", o.identity, "a1, a2, a3, a4 or all")
        ->check(CLI::IsMember({"a1", "a2", "a3", "a4", "all"}));
    lid->add_flag("--numeric", o.numeric, "evaluate instead of minimizing");
    lid->add_option("--n-max", o.numeric_max, "numeric range end");
    lid->callback([&] { action = [&] { return run_linrep_identity(o); }; });

    auto* en = app.add_subcommand("enumerate", "power-free words by depth-first search");
    en->add_option("--bound", o.bound, "exponent p/q")->required();
    en->add_flag("--strict", o.strict);
    en->add_flag("--dyck", o.dyck, "Dyck words only");
    en->add_option("--max-len", o.max_len)->required();
    en->add_option("--min-len", o.min_len);
    en->add_option("--alphabet", o.alphabet);
    en->add_option("--nesting", o.nesting, "exact nesting level (with --dyck)");
    en->add_option("--avoid", o.avoid, "forbidden factors")->delimiter(',');
    en->add_flag("--count", o.count_only, "print only the count");
    en->callback([&] { action = [&] { return run_enumerate(o); }; });

    auto* fam = app.add_subcommand("family", "explicit Dyck word families");
    fam->require_subcommand(1);
    for (const char* name : {"cubefree", "seventhirds", "sevensthirds", "rs"}) {
        auto* sub = fam->add_subcommand(name, std::string(name) + " family member");
        sub->add_option("--t", o.t, "iteration count (block index for rs)")->required();
        sub->add_flag("--opt-in", o.opt_in, "allow the larger seventhirds cap");
        sub->add_flag("--word", o.show_word, "include the word itself");
        const std::string which = name;
        sub->callback([&, which] { action = [&, which] { return run_family(which, o); }; });
    }

    auto* ver = app.add_subcommand("verify", "run verification tasks");
    ver->add_option("task", o.task, "task id or all");
    ver->add_flag("--desk-scale", o.desk_scale, "full acceptance-scale parameters");
    ver->add_flag("--list", o.list, "list task ids");
    ver->add_option("--threads", o.threads);
    ver->callback([&] { action = [&] { return run_verify(o); }; });

    auto* scan = app.add_subcommand("scan", "conjecture scans");
    scan->require_subcommand(1);
    auto* spf = scan->add_subcommand("paperfolding", "paperfolding Dyck lengths");
    spf->add_option("--max-len", o.scan_len);
    spf->callback([&] { action = [&] { return run_scan(o); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? ok : usage;
    }

    try {
        return action();
    } catch (const CapExceeded& e) {
        return emit({{"error", e.what()}, {"progress", e.progress()}}, unstable);
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return usage;
    } catch (const AlphabetError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return usage;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return usage;
    }
}
