#include "dyckolab/identities.hpp"

#include "dyckolab/error.hpp"
#include "dyckolab/sequences.hpp"

namespace dyckolab {

std::string identity_name(Identity id)
{
    switch (id) {
    case Identity::a1: return "a1";
    case Identity::a2: return "a2";
    case Identity::a3: return "a3";
    case Identity::a4: return "a4";
    }
    return "?";
}

Identity parse_identity(const std::string& name)
{
    for (Identity id : {Identity::a1, Identity::a2, Identity::a3, Identity::a4}) {
        if (identity_name(id) == name) return id;
    }
    throw DomainError("unknown identity '" + name + "'");
}

std::vector<AffineTerm> identity_terms(Identity id)
{
    using S = AffineTerm::Source;
    // n = m + 3 throughout.
    switch (id) {
    case Identity::a1: // f(2n) = 2f(n)
        return {{1, S::f, 2, 6}, {-2, S::f, 1, 3}};
    case Identity::a2: // f(4n+3) = 2f(n) + f(2n+1) + q(n)
        return {{1, S::f, 4, 15}, {-2, S::f, 1, 3}, {-1, S::f, 2, 7}, {-1, S::q, 1, 3}};
    case Identity::a3: // f(8n+1) = 2f(2n+1) + f(4n+1) - q(n)
        return {{1, S::f, 8, 25}, {-2, S::f, 2, 7}, {-1, S::f, 4, 13}, {1, S::q, 1, 3}};
    case Identity::a4: // f(8n+5) = 2f(n) + f(2n+1) + 2f(2n+2)
        return {{1, S::f, 8, 29}, {-2, S::f, 1, 3}, {-1, S::f, 2, 7}, {-2, S::f, 2, 8}};
    }
    throw DomainError("unknown identity");
}

nlohmann::json IdentityReport::to_json() const
{
    nlohmann::json j;
    j["holds"] = holds;
    j["mode"] = mode == IdentityMode::symbolic ? "symbolic" : "numeric";
    if (mode == IdentityMode::symbolic) {
        j["combined_rank"] = combined_rank;
        j["minimized_rank"] = minimized_rank;
    } else {
        j["checked_to"] = checked_to;
        j["witness"] = witness ? nlohmann::json(*witness) : nlohmann::json(nullptr);
    }
    return j;
}

namespace {

const LinRep& q_rep()
{
    static const LinRep rep = from_dfao(q_dfao());
    return rep;
}

} // namespace

LinRep terms_rep(const std::vector<AffineTerm>& terms)
{
    std::vector<Term> parts;
    parts.reserve(terms.size());
    for (const auto& t : terms) {
        const LinRep& base = t.source == AffineTerm::Source::f ? builtin_f() : q_rep();
        parts.push_back({t.coefficient, affine_subseq(base, t.a, t.b)});
    }
    return combine(parts);
}

IdentityReport check_terms(const std::vector<AffineTerm>& terms, IdentityMode mode, std::uint64_t numeric_max)
{
    IdentityReport r;
    r.mode = mode;
    if (mode == IdentityMode::symbolic) {
        const LinRep combined = terms_rep(terms);
        r.combined_rank = combined.rank();
        r.minimized_rank = minimize(combined).rank();
        r.holds = r.minimized_rank == 0;
        return r;
    }
    const LinRep& f = builtin_f();
    r.holds = true;
    for (std::uint64_t n = 3; n <= numeric_max; ++n) {
        const std::uint64_t m = n - 3;
        Rational total = 0;
        for (const auto& t : terms) {
            const std::uint64_t at = t.a * m + t.b;
            const Rational value = t.source == AffineTerm::Source::f ? f.eval(at) : Rational(q(at));
            total += t.coefficient * value;
        }
        r.checked_to = n;
        if (sgn(total) != 0) {
            r.holds = false;
            r.witness = n;
            break;
        }
    }
    return r;
}

IdentityReport check_identity(Identity id, IdentityMode mode, std::uint64_t numeric_max)
{
    return check_terms(identity_terms(id), mode, numeric_max);
}

Rational sum_formula(unsigned n)
{
    mpz_class four, two;
    mpz_ui_pow_ui(four.get_mpz_t(), 4, n);
    mpz_ui_pow_ui(two.get_mpz_t(), 2, n);
    Rational r = Rational(19 * four, 48) - Rational(two, 4) + Rational(5, 3);
    r.canonicalize();
    return r;
}

nlohmann::json ClosedFormReport::to_json() const
{
    auto opt = [](const std::optional<unsigned>& x) { return x ? nlohmann::json(*x) : nlohmann::json(nullptr); };
    return {{"holds", holds()},
            {"three_pow", three_pow},
            {"two_pow", two_pow},
            {"sum_formula", sum_formula},
            {"three_pow_witness", opt(three_pow_witness)},
            {"two_pow_witness", opt(two_pow_witness)},
            {"sum_witness", opt(sum_witness)}};
}

ClosedFormReport closed_form_checks(unsigned max_exponent)
{
    const LinRep& f = builtin_f();
    ClosedFormReport r;
    r.three_pow = r.two_pow = r.sum_formula = true;
    for (unsigned i = 0; i <= max_exponent; ++i) {
        const std::uint64_t n = 3ull << i;
        if (f.eval(n) != Rational(static_cast<unsigned long>(n))) {
            r.three_pow = false;
            r.three_pow_witness = i;
            break;
        }
    }
    for (unsigned i = 2; i <= max_exponent; ++i) {
        if (f.eval(1ull << i) != Rational(static_cast<unsigned long>(1ull << (i - 1)))) {
            r.two_pow = false;
            r.two_pow_witness = i;
            break;
        }
    }
    for (unsigned n = 2; n <= max_exponent; ++n) {
        if (digit_sum_power(f, n) != sum_formula(n)) {
            r.sum_formula = false;
            r.sum_witness = n;
            break;
        }
    }
    return r;
}

} // namespace dyckolab
