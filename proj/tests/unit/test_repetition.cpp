#include "dyckolab/caps.hpp"
#include "dyckolab/error.hpp"
#include "dyckolab/repetition.hpp"

#include "../support/oracles.hpp"

#include <doctest.h>

#include <random>

using namespace dyckolab;

namespace {

Word ternary(const char* s) { return Word(s, 3); }

} // namespace

TEST_CASE("Exponent")
{
    CHECK(Exponent(14, 6) == Exponent(7, 3));
    CHECK(Exponent(7, 3).str() == "7/3");
    CHECK(Exponent(2).str() == "2");
    CHECK(Exponent::parse("7/3") == Exponent(7, 3));
    CHECK(Exponent::parse("3") == Exponent(3));
    CHECK(Exponent(7, 3) > Exponent(2));
    CHECK(Exponent(7, 3) < Exponent(5, 2));
    CHECK_THROWS(Exponent::parse("7/0"));
    CHECK_THROWS(Exponent::parse("x"));
}

TEST_CASE("period")
{
    CHECK(period(ternary("0120120")) == 3);
    CHECK(period(Word("0000")) == 1);
    CHECK(period(Word("01")) == 2);
    CHECK_THROWS_AS(period(Word("")), DomainError);
}

TEST_CASE("exponent")
{
    CHECK(exponent(ternary("0120120")) == Exponent(7, 3));
    CHECK(exponent(Word("0101")) == Exponent(2));
    CHECK(exponent(Word("0")) == Exponent(1));
    CHECK_THROWS_AS(exponent(Word("")), DomainError);
}

TEST_CASE("critical_exponent")
{
    CHECK(critical_exponent(Word("01101")) == Exponent(2));
    CHECK(critical_exponent(Word("000")) == Exponent(3));
    CHECK(critical_exponent(Word("01")) == Exponent(1));
    CHECK_THROWS_AS(critical_exponent(Word("")), DomainError);
}

TEST_CASE("is_power_free")
{
    CHECK(is_power_free(Word("0110100110010110"), {Exponent(2), true}));
    CHECK_FALSE(is_power_free(ternary("0120120"), {Exponent(7, 3), false}));
    CHECK(is_power_free(ternary("0120120"), {Exponent(7, 3), true}));
    CHECK_FALSE(is_overlap_free(Word("0110110")));
    CHECK(is_square_free(ternary("012021")));
    CHECK(is_cube_free(Word("001001")));
    CHECK_FALSE(is_cube_free(Word("000")));
}

TEST_CASE("max_suffix_exponent")
{
    CHECK(max_suffix_exponent(Word("00")) == Exponent(2));
    CHECK(max_suffix_exponent(ternary("010")) == Exponent(3, 2));
    CHECK(max_suffix_exponent(Word("01")) == Exponent(1));
    CHECK_THROWS_AS(max_suffix_exponent(Word("")), DomainError);
}

TEST_CASE("failure-function scans agree with brute force on every binary word up to length 14")
{
    for (std::size_t n = 1; n <= 14; ++n) {
        for (const auto& s : oracle::all_words(2, n)) {
            const Word w(s);
            REQUIRE(period(w) == oracle::period(s));
            const auto e = oracle::exponent(s);
            REQUIRE(exponent(w) == Exponent(e.first, e.second));
        }
    }
}

TEST_CASE("critical exponent and power-freeness agree with brute force on sampled words")
{
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 400; ++trial) {
        const unsigned k = 2 + trial % 2;
        const std::size_t n = 1 + rng() % 24;
        std::string s;
        for (std::size_t i = 0; i < n; ++i) s += static_cast<char>('0' + rng() % k);
        const Word w(s, k);
        const auto ce = oracle::critical_exponent(s);
        REQUIRE(critical_exponent(w) == Exponent(ce.first, ce.second));
        for (auto [c, d] : {std::pair{2, 1}, std::pair{7, 3}, std::pair{3, 1}, std::pair{5, 2}}) {
            for (bool strict : {false, true}) {
                REQUIRE(is_power_free(w, {Exponent(c, d), strict}) == oracle::power_free(s, c, d, strict));
            }
        }
    }
}

TEST_CASE("scans refuse words above the cap")
{
    const Caps saved = caps();
    Caps small = saved;
    small.scan = 10;
    set_caps(small);
    CHECK_THROWS_AS(critical_exponent(Word("010011010011")), CapExceeded);
    set_caps(saved);
    CHECK(critical_exponent(Word("010011010011")) == Exponent(2));
}
