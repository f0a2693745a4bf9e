#include "dyckolab/error.hpp"
#include "dyckolab/sequences.hpp"
#include "dyckolab/word.hpp"

#include "../support/oracles.hpp"

#include <doctest.h>

using namespace dyckolab;

TEST_CASE("balance")
{
    CHECK(balance(Word("010011")).value == 0);
    CHECK(balance(Word("0110")).value == 0);
    CHECK(balance(Word("001")).value == 1);
    CHECK(balance(Word("")).value == 0);
    CHECK_THROWS_AS(balance(Word("012", 3)), AlphabetError);
}

TEST_CASE("is_dyck")
{
    CHECK(is_dyck(Word("010011")));
    CHECK_FALSE(is_dyck(Word("0110")));
    CHECK(is_dyck(Word("")));
    CHECK_FALSE(is_dyck(Word("10")));
    CHECK_FALSE(is_dyck(Word("001")));
    CHECK_THROWS_AS(is_dyck(Word("02", 3)), AlphabetError);
}

TEST_CASE("nesting_level")
{
    CHECK(nesting_level(Word("01")).value == 1);
    CHECK(nesting_level(Word("010011")).value == 2);
    CHECK(nesting_level(Word("001011")).value == 2);
    CHECK(nesting_level(Word("")).value == 0);
    CHECK_THROWS_AS(nesting_level(Word("0110")), DomainError);
}

TEST_CASE("beta and ternary Dyck words")
{
    CHECK(beta(Word("202101", 3)).str() == "0101");
    CHECK(beta(Word("222", 3)).empty());
    CHECK(beta(Word("01", 3)).str() == "01");
    CHECK(beta(Word("01", 3)).alphabet_size() == 2);

    CHECK(is_ternary_dyck(Word("2", 3)));
    CHECK(ternary_nesting(Word("2", 3)).value == 0);
    CHECK(is_ternary_dyck(Word("20212", 3)));
    CHECK(ternary_nesting(Word("20212", 3)).value == 1);
    CHECK_FALSE(is_ternary_dyck(Word("12", 3)));
    CHECK_THROWS_AS(ternary_nesting(Word("12", 3)), DomainError);
    CHECK_THROWS_AS(beta(Word("01")), AlphabetError);
}

TEST_CASE("complement")
{
    CHECK(complement(Word("01")).str() == "10");
    CHECK(complement(Word("")).str().empty());
    CHECK(complement(Word("0011")).str() == "1100");
}

TEST_CASE("distinct_factors")
{
    auto f = distinct_factors(Word("0110"), 2);
    CHECK(f == std::set<Word>{Word("01"), Word("11"), Word("10")});
    CHECK(distinct_factors(Word("0000"), 1) == std::set<Word>{Word("0")});
    CHECK(distinct_factors(Word("01"), 3).empty());
    CHECK(distinct_factors(Word("01"), 0) == std::set<Word>{Word("")});

    const Word tm = thue_morse().prefix(64);
    CHECK(distinct_factors(tm, 4).size() == 10);
    CHECK(oracle::factors(oracle::thue_morse(64), 4).size() == 10);
    CHECK(oracle::factors(oracle::thue_morse(4096), 4).size() == 10);
}

TEST_CASE("distinct_factors agrees with a string scan")
{
    const std::string t = oracle::thue_morse(500);
    const Word w(t);
    for (std::size_t len = 1; len <= 30; ++len) {
        std::set<std::string> got;
        for (const auto& x : distinct_factors(w, len)) got.insert(x.str());
        CHECK(got == oracle::factors(t, len));
    }
}

TEST_CASE("Dyck predicates agree with the oracle on all short words")
{
    for (std::size_t n = 0; n <= 12; ++n) {
        for (const auto& s : oracle::all_words(2, n)) {
            const Word w(s);
            REQUIRE(is_dyck(w) == oracle::is_dyck(s));
            if (oracle::is_dyck(s)) REQUIRE(nesting_level(w).value == oracle::nesting(s));
        }
    }
}

TEST_CASE("word construction and ordering")
{
    CHECK_THROWS_AS(Word("012"), AlphabetError);
    CHECK_THROWS_AS(Word("0a"), ParseError);
    CHECK(Word("0") < Word("00"));
    CHECK(Word("00") < Word("01"));
    CHECK((Word("01") + Word("10")).str() == "0110");
    CHECK(Word("0110").factor(1, 2).str() == "11");
    CHECK_THROWS_AS(Word("01").factor(1, 2), DomainError);
}
