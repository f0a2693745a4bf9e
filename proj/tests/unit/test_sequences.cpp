#include "dyckolab/error.hpp"
#include "dyckolab/sequences.hpp"

#include "../support/oracles.hpp"

#include <doctest.h>

#include <thread>

using namespace dyckolab;

TEST_CASE("named sequences")
{
    CHECK(thue_morse().prefix(8).str() == "01101001");
    CHECK(fibonacci_word().prefix(8).str() == "01001010");
    CHECK(period_doubling().prefix(8).str() == "01000101");
    CHECK(tern_s_seq().prefix(9).str() == "012021012");
    const std::vector<int> rs{0, 0, 0, 1, 0, 0, 1, 0};
    for (std::size_t i = 0; i < rs.size(); ++i) CHECK(rudin_shapiro().at(i) == rs[i]);
    for (const auto& name : sequence_names()) CHECK(sequence_by_name(name).name() == name);
    CHECK_THROWS_AS(sequence_by_name("nope"), DomainError);
}

TEST_CASE("paperfolding follows the odd part of i+1")
{
    CHECK(paperfolding(false).prefix(16).str() == "0010011000110110");
    CHECK(paperfolding(true).prefix(16).str() == oracle::complement("0010011000110110"));
}

TEST_CASE("morphic and arithmetic Thue-Morse agree on the first million symbols")
{
    const Word a = thue_morse().prefix(1'000'000);
    const Word b = thue_morse_morphic().prefix(1'000'000);
    CHECK(a == b);
    CHECK(a.str().substr(0, 4096) == oracle::thue_morse(4096));
}

TEST_CASE("Rudin-Shapiro counts 11 blocks in the binary expansion")
{
    for (std::uint64_t i = 0; i < 5000; ++i) {
        unsigned blocks = 0;
        for (std::uint64_t x = i; x; x >>= 1) blocks += (x & 3) == 3;
        REQUIRE(rudin_shapiro().at(i) == blocks % 2);
    }
}

TEST_CASE("running sums")
{
    CHECK(running_sum_tm(4) == 2);
    CHECK(running_sum_tm(0) == 0);
    CHECK(running_sum_tm(7) == 3);
    CHECK(running_sum_tm_closed_form(7) == 3);
    for (std::uint64_t n = 0; n < 10000; ++n) {
        REQUIRE(running_sum_tm(n) == running_sum_tm_closed_form(n));
        REQUIRE(running_sum_tm(n + 1) - running_sum_tm(n) == thue_morse_at(n));
    }
}

TEST_CASE("q from the morphic route")
{
    const Word fp = catalog::aa_q().fixed_point_prefix(0, 20000);
    for (std::uint64_t n = 0; n < 20000; ++n) {
        const int expected = catalog::b_coding().image(fp[n])[0];
        REQUIRE(q(n) == expected);
        if (n >= 1 && n <= 10000) REQUIRE((q(n) >= 1 && q(n) <= 2));
    }
    // f(15) = 2 f(3) + f(7) + q(3) = 6 + 6 + 1.
    CHECK(q(3) == 1);
}

TEST_CASE("Rudin-Shapiro partial sums")
{
    CHECK(rs_partial_sum(0) == 1);
    CHECK(rs_partial_sum(1) == 2);
    CHECK(rs_partial_sum(31) == 8);
    long long s = 0;
    for (std::uint64_t i = 0; i < (1u << 14); ++i) {
        s += rudin_shapiro_at(i) == 0 ? 1 : -1;
        REQUIRE(rs_partial_sum(i) == s);
        REQUIRE(s > 0);
    }
}

TEST_CASE("prefixes only grow and stay consistent under concurrent readers")
{
    const SequenceHandle h = sequence_by_name("fib");
    const auto early = h.materialize(100);
    std::vector<std::jthread> readers;
    std::vector<Word> seen(4);
    for (int t = 0; t < 4; ++t) {
        readers.emplace_back([&, t] { seen[t] = h.prefix(1000 * (t + 1)); });
    }
    readers.clear();
    for (int t = 0; t < 4; ++t) CHECK(seen[t] == seen[3].factor(0, 1000 * (t + 1)));
    CHECK(early->size() >= 100);
    CHECK(h.materialize(10)->size() >= 4000);
    CHECK(h.ones_before(4000) == static_cast<std::uint64_t>(std::count(seen[3].begin(), seen[3].end(), 1)));
}
