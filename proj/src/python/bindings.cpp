#include "dyckolab/caps.hpp"
#include "dyckolab/constructions.hpp"
#include "dyckolab/dyck_analysis.hpp"
#include "dyckolab/error.hpp"
#include "dyckolab/identities.hpp"
#include "dyckolab/linrep.hpp"
#include "dyckolab/repetition.hpp"
#include "dyckolab/sequences.hpp"
#include "dyckolab/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace dyckolab;

namespace {

// Rationals cross the boundary as "p/q" strings; the Python side turns them
// into fractions.Fraction.
std::string rational_text(const Rational& r) { return to_string(r); }

LinRep rep_from_source(const std::string& source)
{
    if (source == "builtin:f") return builtin_f();
    if (source == "builtin:q") return from_dfao(q_dfao());
    if (source == "builtin:tm") return from_dfao(thue_morse_dfao());
    return LinRep::parse(source);
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Dyck factors of automatic sequences: core bindings";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<AlphabetError>(m, "AlphabetError", PyExc_ValueError);
    py::register_exception<CapExceeded>(m, "CapExceeded", PyExc_RuntimeError);

    m.def("is_dyck", [](const std::string& w) { return is_dyck(Word(w)); });
    m.def("nesting", [](const std::string& w) { return nesting_level(Word(w)).value; });
    m.def("period", [](const std::string& w, unsigned k) { return period(Word(w, k)); }, py::arg("word"),
          py::arg("alphabet_size") = 2);
    m.def("exponent", [](const std::string& w, unsigned k) { return exponent(Word(w, k)).str(); }, py::arg("word"),
          py::arg("alphabet_size") = 2);
    m.def("critical_exponent", [](const std::string& w, unsigned k) { return critical_exponent(Word(w, k)).str(); },
          py::arg("word"), py::arg("alphabet_size") = 2);
    m.def(
        "is_power_free",
        [](const std::string& w, const std::string& bound, bool strict, unsigned k) {
            return is_power_free(Word(w, k), PowerBound{Exponent::parse(bound), strict});
        },
        py::arg("word"), py::arg("bound"), py::arg("strict") = false, py::arg("alphabet_size") = 2);

    m.def("sequence_names", &sequence_names);
    m.def("sequence_prefix", [](const std::string& name, std::size_t n) { return sequence_by_name(name).prefix(n).str(); });
    m.def("q", [](std::uint64_t n) { return dyckolab::q(n); });

    m.def(
        "census",
        [](const std::string& name, std::size_t n_max, unsigned threads) {
            return census_json(dyck_census_range(sequence_by_name(name), n_max, {}, threads)).dump();
        },
        py::arg("sequence"), py::arg("n_max"), py::arg("threads") = 1);
    m.def("dyck_factors", [](const std::string& name, std::size_t max_len) {
        std::vector<std::string> out;
        for (const Word& w : dyck_factor_set(sequence_by_name(name), max_len).words) out.push_back(w.str());
        return out;
    });

    m.def("linrep_show", [](const std::string& source) { return rep_from_source(source).str(); });
    m.def("linrep_eval", [](const std::string& source, std::uint64_t n) { return rational_text(rep_from_source(source).eval(n)); });
    m.def("linrep_minimize", [](const std::string& source) { return minimize(rep_from_source(source)).str(); });
    m.def("linrep_affine", [](const std::string& source, std::uint64_t a, std::uint64_t b) {
        return affine_subseq(rep_from_source(source), a, b).str();
    });
    m.def(
        "check_identity",
        [](const std::string& name, bool numeric, std::uint64_t n_max) {
            return check_identity(parse_identity(name), numeric ? IdentityMode::numeric : IdentityMode::symbolic, n_max)
                .to_json()
                .dump();
        },
        py::arg("name"), py::arg("numeric") = false, py::arg("n_max") = 10000);

    m.def(
        "enumerate",
        [](const std::string& bound, bool strict, std::size_t max_len, unsigned k, bool dyck) {
            EnumerationSpec s;
            s.alphabet_size = k;
            s.bound = {Exponent::parse(bound), strict};
            s.dyck_only = dyck;
            s.max_len = max_len;
            std::vector<std::string> out;
            for (const Word& w : enumerate_power_free(s)) out.push_back(w.str());
            return out;
        },
        py::arg("bound"), py::arg("strict"), py::arg("max_len"), py::arg("alphabet_size") = 2, py::arg("dyck") = false);
    m.def(
        "family",
        [](const std::string& name, unsigned t, bool opt_in, bool include_word) {
            FamilyWitness w;
            if (name == "cubefree")
                w = cubefree_family(t);
            else if (name == "seventhirds")
                w = seventhirds_family(t, opt_in);
            else if (name == "rs")
                w = rs_dyck_block(t);
            else
                throw DomainError("unknown family: " + name);
            return w.to_json(include_word).dump();
        },
        py::arg("name"), py::arg("t"), py::arg("opt_in") = false, py::arg("include_word") = false);

    m.def("verification_tasks", [] {
        std::vector<std::pair<std::string, std::string>> out;
        for (const auto& t : verification_tasks()) out.emplace_back(t.id, t.claim);
        return out;
    });
    m.def(
        "verify",
        [](const std::string& id, bool desk_scale) {
            py::gil_scoped_release release;
            return run_task(id, desk_scale).to_json().dump();
        },
        py::arg("task"), py::arg("desk_scale") = false);
}
