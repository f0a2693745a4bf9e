#include "dyckolab/dfao.hpp"
#include "dyckolab/dyck_analysis.hpp"
#include "dyckolab/error.hpp"
#include "dyckolab/identities.hpp"
#include "dyckolab/linrep.hpp"
#include "dyckolab/sequences.hpp"

#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

using namespace dyckolab;

namespace {

Rational R(const char* s) { return parse_rational(s); }

LinRep constant_zero() { return from_dfao(Dfao(2, {{0, 0}}, {0})); }

// Binary digit sum, a rank-2 representation.
LinRep digit_sum()
{
    Matrix g0(2, 2), g1(2, 2);
    g0(0, 0) = 1;
    g0(1, 1) = 1;
    g1(0, 0) = 1;
    g1(0, 1) = 1;
    g1(1, 1) = 1;
    return LinRep(2, {1, 0}, {g0, g1}, {0, 1});
}

// Every representation the tests build, for the shared minimization properties.
std::vector<std::pair<std::string, LinRep>> constructed()
{
    std::vector<std::pair<std::string, LinRep>> reps;
    reps.emplace_back("f", builtin_f());
    reps.emplace_back("q", from_dfao(q_dfao()));
    reps.emplace_back("tm", from_dfao(thue_morse_dfao()));
    reps.emplace_back("digit_sum", digit_sum());
    reps.emplace_back("f(2n)", affine_subseq(builtin_f(), 2, 0));
    reps.emplace_back("f(4n+3)", affine_subseq(builtin_f(), 4, 3));
    reps.emplace_back("q(3n+5)", affine_subseq(from_dfao(q_dfao()), 3, 5));
    const std::vector<Term> mix{{R("1/2"), builtin_f()}, {R("-3"), digit_sum()}};
    reps.emplace_back("f/2 - 3 digit_sum", combine(mix));
    reps.emplace_back("a1 - 1", terms_rep([] {
                          auto t = identity_terms(Identity::a1);
                          t[1].coefficient = -3;
                          return t;
                      }()));
    return reps;
}

} // namespace

TEST_CASE("rationals")
{
    CHECK(to_string(R("6/4")) == "3/2");
    CHECK(to_string(R("-7/2")) == "-7/2");
    CHECK(to_string(R("4/2")) == "2");
    CHECK_THROWS_AS(R("1/0"), ParseError);
    CHECK_THROWS_AS(R("1.5"), ParseError);
    CHECK_THROWS_AS(R("1/-2"), ParseError);
}

TEST_CASE("builtin f entries")
{
    const LinRep& f = builtin_f();
    CHECK(f.rank() == 7);
    CHECK(f.base() == 2);
    CHECK(f.gamma(1)(3, 4) == R("11/8"));
    CHECK(f.gamma(1)(6, 4) == R("19/4"));
    CHECK(f.gamma(1)(6, 3) == R("-7/2"));
    CHECK(f.gamma(0)(6, 3) == R("1/2"));
    CHECK(f.gamma(0)(6, 4) == R("5/4"));
    CHECK(f.gamma(0)(6, 5) == R("-5/2"));
    CHECK(f.v() * f.gamma(0) == f.v());
}

TEST_CASE("builtin f evaluation")
{
    const LinRep& f = builtin_f();
    CHECK(f.eval(3) == 3);
    CHECK(f.eval(0) == 1);
    CHECK(f.eval(13) == 9);
    const std::vector<int> table{1, 1, 2, 3, 2, 4, 6, 6, 4, 8, 8, 8, 12, 9, 12, 13, 8, 14, 16, 14, 16};
    for (std::size_t n = 0; n < table.size(); ++n) CHECK(f.eval(n) == table[n]);
    const unsigned digits[] = {1, 1};
    const unsigned padded[] = {0, 0, 1, 1};
    CHECK(f.eval_digits(digits) == f.eval_digits(padded));
}

TEST_CASE("builtin f agrees with the census")
{
    for (std::size_t n = 0; n <= 400; ++n) {
        REQUIRE(builtin_f().eval(n) == Rational(static_cast<unsigned long>(dyck_census(thue_morse(), n).count)));
    }
}

TEST_CASE("builtin f matches the shipped data file")
{
    std::ifstream in(DYCKOLAB_DATA_DIR "/f_rank7.json");
    REQUIRE(in);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str() == builtin_f_json());
    CHECK(LinRep::parse(ss.str()) == builtin_f());
}

TEST_CASE("JSON round trip")
{
    for (const auto& [name, rep] : constructed()) {
        CAPTURE(name);
        const std::string text = rep.str();
        const LinRep back = LinRep::parse(text);
        CHECK(back == rep);
        CHECK(back.str() == text);
    }
    CHECK_THROWS_AS(LinRep::parse("{\"base\":2}"), ParseError);
    CHECK_THROWS_AS(LinRep::parse("not json"), ParseError);
}

TEST_CASE("construction checks")
{
    Matrix g(1, 1);
    g(0, 0) = 2;
    CHECK_THROWS_AS(LinRep(2, {1}, {g, g}, {1}), DomainError); // v gamma(0) != v
    CHECK_THROWS_AS(LinRep(2, {1, 0}, {g, g}, {1}), DomainError);
    CHECK_THROWS_AS(LinRep(2, {1}, {g}, {1}), DomainError);
    CHECK_NOTHROW(LinRep(2, {}, {Matrix(0, 0), Matrix(0, 0)}, {}));
}

TEST_CASE("from_dfao")
{
    const LinRep q = from_dfao(q_dfao());
    CHECK(q.rank() == 4);
    CHECK(q.eval(5) == 2);
    CHECK(q.eval(0) == 0);
    for (std::uint64_t n = 0; n < 3000; ++n) REQUIRE(q.eval(n) == dyckolab::q(n));
    const LinRep zero = constant_zero();
    for (std::uint64_t n = 0; n < 50; ++n) CHECK(zero.eval(n) == 0);
}

TEST_CASE("combine")
{
    const LinRep& f = builtin_f();
    const std::vector<Term> cancel{{2, f}, {-2, f}};
    const LinRep c = combine(cancel);
    CHECK(c.rank() == 14);
    for (std::uint64_t n = 0; n < 200; ++n) CHECK(c.eval(n) == 0);
    const std::vector<Term> single{{1, f}};
    for (std::uint64_t n = 0; n < 200; ++n) CHECK(combine(single).eval(n) == f.eval(n));
    const LinRep base3 = from_dfao(Dfao(3, {{0, 0, 0}}, {1}));
    const std::vector<Term> mixed{{1, f}, {1, base3}};
    CHECK_THROWS_AS(combine(mixed), DomainError);
}

TEST_CASE("affine subsequences agree with direct evaluation")
{
    const LinRep& f = builtin_f();
    const LinRep two_n = affine_subseq(f, 2, 0);
    for (std::uint64_t n = 3; n <= 100; ++n) CHECK(two_n.eval(n) == 2 * f.eval(n));
    const LinRep four_n3 = affine_subseq(f, 4, 3);
    for (std::uint64_t n = 3; n <= 100; ++n) CHECK(four_n3.eval(n) == 2 * f.eval(n) + f.eval(2 * n + 1) + q(n));
    const LinRep same = affine_subseq(f, 1, 0);
    for (std::uint64_t n = 0; n <= 300; ++n) CHECK(same.eval(n) == f.eval(n));
    CHECK(is_zero(combine(std::vector<Term>{{1, same}, {-1, f}})));

    const LinRep qrep = from_dfao(q_dfao());
    for (auto [a, b] : {std::pair{1, 7}, std::pair{3, 5}, std::pair{5, 0}, std::pair{8, 29}, std::pair{7, 11}}) {
        const LinRep fa = affine_subseq(f, a, b);
        const LinRep qa = affine_subseq(qrep, a, b);
        for (std::uint64_t n = 0; n <= 300; ++n) {
            REQUIRE(fa.eval(n) == f.eval(a * n + b));
            REQUIRE(qa.eval(n) == q(a * n + b));
        }
    }
    CHECK_THROWS_AS(affine_subseq(f, 0, 1), DomainError);
}

TEST_CASE("minimize")
{
    CHECK(minimize(builtin_f()).rank() == 7);
    const LinRep dead(2, {0, 0}, {Matrix(2, 2), Matrix(2, 2)}, {1, 1});
    CHECK(minimize(dead).rank() == 0);
    CHECK(is_zero(dead));
    const std::vector<Term> cancel{{1, builtin_f()}, {-1, builtin_f()}};
    CHECK(minimize(combine(cancel)).rank() == 0);
    CHECK_FALSE(is_zero(builtin_f()));
    CHECK(minimize(digit_sum()).rank() == 2);
    CHECK(minimize(from_dfao(thue_morse_dfao())).rank() == 2);
}

TEST_CASE("minimize preserves values and is idempotent on every constructed representation")
{
    std::mt19937_64 rng(99);
    for (const auto& [name, rep] : constructed()) {
        CAPTURE(name);
        const LinRep m = minimize(rep);
        CHECK(m.rank() <= rep.rank());
        CHECK(minimize(m).rank() == m.rank());
        for (std::uint64_t n = 0; n <= 1000; ++n) REQUIRE(m.eval(n) == rep.eval(n));
        for (int i = 0; i < 10000; ++i) {
            const std::uint64_t n = rng() % 1000000;
            REQUIRE(m.eval(n) == rep.eval(n));
        }
    }
}

TEST_CASE("digit_sum_power is the sum over all n below k^e")
{
    for (unsigned e = 0; e <= 10; ++e) {
        Rational direct = 0;
        for (std::uint64_t n = 0; n < (1u << e); ++n) direct += builtin_f().eval(n);
        CHECK(digit_sum_power(builtin_f(), e) == direct);
    }
}

TEST_CASE("identities minimize to zero")
{
    for (Identity id : {Identity::a1, Identity::a2, Identity::a3, Identity::a4}) {
        CAPTURE(identity_name(id));
        const auto r = check_identity(id);
        CHECK(r.holds);
        CHECK(r.mode == IdentityMode::symbolic);
        CHECK(r.combined_rank > 0);
        CHECK(r.minimized_rank == 0);
        const auto numeric = check_identity(id, IdentityMode::numeric, 2000);
        CHECK(numeric.holds);
        CHECK(numeric.mode == IdentityMode::numeric);
        CHECK(numeric.checked_to == 2000);
    }
}

TEST_CASE("perturbed identity fails in both modes")
{
    auto terms = identity_terms(Identity::a1);
    terms[1].coefficient = -3;
    CHECK_FALSE(check_terms(terms).holds);
    CHECK(check_terms(terms).minimized_rank > 0);
    const auto numeric = check_terms(terms, IdentityMode::numeric);
    CHECK_FALSE(numeric.holds);
    CHECK(numeric.witness == 3u);
}

TEST_CASE("identity terms evaluate like the recurrences")
{
    const LinRep& f = builtin_f();
    for (std::uint64_t n = 3; n <= 200; ++n) {
        CHECK(f.eval(2 * n) == 2 * f.eval(n));
        CHECK(f.eval(4 * n + 3) == 2 * f.eval(n) + f.eval(2 * n + 1) + q(n));
        CHECK(f.eval(8 * n + 1) == 2 * f.eval(2 * n + 1) + f.eval(4 * n + 1) - q(n));
        CHECK(f.eval(8 * n + 5) == 2 * f.eval(n) + f.eval(2 * n + 1) + 2 * f.eval(2 * n + 2));
    }
    CHECK(parse_identity("a3") == Identity::a3);
    CHECK_THROWS_AS(parse_identity("a5"), DomainError);
}

TEST_CASE("closed forms")
{
    CHECK(builtin_f().eval(12) == 12);
    CHECK(builtin_f().eval(16) == 8);
    CHECK(sum_formula(2) == 7);
    CHECK(digit_sum_power(builtin_f(), 2) == 7);
    const auto r = closed_form_checks();
    CHECK(r.holds());
    CHECK(r.three_pow);
    CHECK(r.two_pow);
    CHECK(r.sum_formula);
}
