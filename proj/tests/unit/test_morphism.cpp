#include "dyckolab/dfao.hpp"
#include "dyckolab/error.hpp"
#include "dyckolab/morphism.hpp"
#include "dyckolab/repetition.hpp"
#include "dyckolab/sequences.hpp"

#include "../support/oracles.hpp"

#include <doctest.h>

using namespace dyckolab;
namespace cat = dyckolab::catalog;

TEST_CASE("morphism text rules round-trip")
{
    const Morphism m = Morphism::parse("0->01 1->0011 2->001011");
    CHECK(m.domain_size() == 3);
    CHECK(m.target_size() == 2);
    CHECK(Morphism::parse(m.str()) == m);
    CHECK_FALSE(m.is_uniform());
    CHECK(cat::g6().is_uniform());
    CHECK(cat::g6().width() == 6);
    CHECK(cat::f38().width() == 38);
    CHECK_THROWS_AS(Morphism::parse("0->01 0->1"), ParseError);
    CHECK_THROWS_AS(Morphism::parse("1->01"), ParseError);
    CHECK_THROWS_AS(Morphism::parse("0=01"), ParseError);
    CHECK(Morphism::parse("0-> 1->1").image(0).empty());
}

TEST_CASE("apply")
{
    CHECK(cat::h_dyck().apply(Word("01", 3)).str() == "010011");
    CHECK(cat::g6().apply(Word("2", 3)).str() == "202101");
    CHECK(cat::h_dyck().apply(Word(3)).empty());
    CHECK_THROWS_AS(cat::mu_tm().apply(Word("2", 3)), AlphabetError);
}

TEST_CASE("iterate")
{
    CHECK(cat::g6().iterate(Word("2", 3), 1).str() == "202101");
    CHECK(cat::cf_doubler().iterate(Word("01"), 1).str() == "001011");
    CHECK(cat::cf_doubler().iterate(Word("0110"), 0).str() == "0110");
    CHECK(cat::h_dyck().iterate(Word("0", 3), 2).str() == "010011");
    CHECK_THROWS_AS(Morphism({Word("2", 3), Word("01", 3)}, 3).iterate(Word("0"), 2), AlphabetError);
}

TEST_CASE("fixed_point_prefix")
{
    CHECK(cat::tern_s().fixed_point_prefix(0, 9).str() == "012021012");
    CHECK(cat::mu_tm().fixed_point_prefix(0, 8).str() == "01101001");
    CHECK(cat::aa_q().fixed_point_prefix(0, 8).str() == "01232233");
    CHECK(cat::mu_tm().fixed_point_prefix(1, 4).str() == "1001");
    CHECK_THROWS_AS(cat::pd_morph().fixed_point_prefix(1, 4), DomainError);
    CHECK_THROWS_AS(cat::tern_s().fixed_point_prefix(2, 4), DomainError);
    CHECK(cat::fib_theta().fixed_point_prefix(0, 1000).str() ==
          oracle::fixed_point({"01", "0"}, 1000));
}

TEST_CASE("g maps ternary Dyck words to ternary Dyck words with nesting plus one")
{
    // beta(g(0)) = 001, beta(g(1)) = 011, beta(g(2)) = 0101.
    CHECK(beta(cat::g6().image(0)).str() == "001");
    CHECK(beta(cat::g6().image(1)).str() == "011");
    CHECK(beta(cat::g6().image(2)).str() == "0101");
    for (std::size_t n = 1; n <= 7; ++n) {
        for (const auto& s : oracle::all_words(3, n)) {
            const Word w(s, 3);
            if (!is_ternary_dyck(w)) continue;
            const Word img = cat::g6().apply(w);
            REQUIRE(is_ternary_dyck(img));
            REQUIRE(ternary_nesting(img).value == ternary_nesting(w).value + 1);
        }
    }
}

TEST_CASE("f maps ternary Dyck words of nesting N to Dyck words of nesting 2N+2")
{
    CHECK(is_dyck(cat::f38().image(2)));
    CHECK(nesting_level(cat::f38().image(2)).value == 2);
    for (std::size_t n = 1; n <= 6; ++n) {
        for (const auto& s : oracle::all_words(3, n)) {
            const Word w(s, 3);
            if (!is_ternary_dyck(w)) continue;
            const Word img = cat::f38().apply(w);
            REQUIRE(oracle::is_dyck(img.str()));
            REQUIRE(oracle::nesting(img.str()) == 2 * ternary_nesting(w).value + 2);
        }
    }
}

TEST_CASE("0->001 1->011 adds one to the nesting level of every Dyck word")
{
    for (std::size_t n = 2; n <= 14; n += 2) {
        for (const auto& s : oracle::all_words(2, n)) {
            if (!oracle::is_dyck(s)) continue;
            const std::string img = oracle::apply({"001", "011"}, s);
            REQUIRE(cat::cf_doubler().apply(Word(s)).str() == img);
            REQUIRE(oracle::is_dyck(img));
            REQUIRE(oracle::nesting(img) == oracle::nesting(s) + 1);
        }
    }
}

TEST_CASE("cube-free images of all binary words of length at most 4")
{
    // Keranen's criterion for uniform binary morphisms.
    for (std::size_t n = 1; n <= 4; ++n) {
        for (const auto& s : oracle::all_words(2, n)) {
            if (!oracle::power_free(s, 3, 1, false)) continue;
            REQUIRE(is_cube_free(cat::cf_doubler().apply(Word(s))));
        }
    }
}

TEST_CASE("g maps s onto Thue-Morse")
{
    const Word s = cat::tern_s().fixed_point_prefix(0, 2000);
    const Word image = cat::g_s_to_t().apply(s);
    CHECK(image.str() == oracle::thue_morse(image.size()));
}

TEST_CASE("h(s) is Thue-Morse without its first three symbols")
{
    const Word s = cat::tern_s().fixed_point_prefix(0, 2000);
    const Word image = cat::h_dyck().apply(s);
    CHECK(image.str() == oracle::thue_morse(image.size() + 3).substr(3));
}

TEST_CASE("dfao evaluation")
{
    const Dfao& tm = thue_morse_dfao();
    CHECK(tm.eval(3) == 0);
    CHECK(tm.eval(4) == 1);
    CHECK(tm.eval(0) == tm.output(tm.next(0, 0)));
    for (std::uint64_t n = 0; n < 4096; ++n) REQUIRE(tm.eval(n) == thue_morse_at(n));

    const std::vector<int> expected_q{0, 1, 2, 1, 2, 2, 1, 1};
    for (std::uint64_t n = 0; n < expected_q.size(); ++n) CHECK(q(n) == expected_q[n]);
}

TEST_CASE("dfao output is independent of leading zeros")
{
    const Dfao& d = q_dfao();
    for (std::uint64_t n = 0; n < 2000; ++n) {
        auto digits = digits_msd(n, 2);
        const auto value = d.eval_digits(digits);
        for (int pad = 0; pad < 3; ++pad) {
            digits.insert(digits.begin(), 0u);
            REQUIRE(d.eval_digits(digits) == value);
        }
    }
}

TEST_CASE("dfao text format round-trips")
{
    const Dfao& d = q_dfao();
    const std::string text = d.str();
    CHECK(Dfao::parse(text).str() == text);
    CHECK(Dfao::parse("base 2\n0 0: 0->0 1->1\n1 1: 0\xE2\x86\x92" "1 1->0\n").str() == thue_morse_dfao().str());
    CHECK_THROWS_AS(Dfao::parse("base 2\n0 0: 0->1 1->1\n1 1: 0->1 1->0\n"), ParseError);
    CHECK_THROWS_AS(Dfao::parse("base 2\n0 0: 0->0\n"), ParseError);
}
