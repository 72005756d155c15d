#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <vector>

#include <ratsum/cycle.hpp>
#include <ratsum/errors.hpp>

using ratsum::CycleTuple;
using ratsum::Rat;

namespace {

// independent oracle over the same box, same canonicalization
std::vector<std::vector<long long>> naive_four_cycles(long long n, long long b1_max,
                                                      long long b_max) {
    std::vector<std::vector<long long>> out;
    for (long long b1 = 1; b1 <= b1_max; ++b1)
        for (long long b2 = 1; b2 <= b_max; ++b2)
            for (long long b3 = 1; b3 <= b_max; ++b3)
                for (long long b4 = 1; b4 <= b_max; ++b4) {
                    const CycleTuple t{4, n, {b1, b2, b3, b4}};
                    if (!ratsum::cycle_identity_holds(t)) continue;
                    if (!ratsum::is_primitive_tuple(t.b)) continue;
                    out.push_back(ratsum::canonical_rotation(t.b));
                }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

TEST_CASE("cycle identity and witness") {
    const CycleTuple five{5, 9, {1, 2, 4, 18, 3}};
    REQUIRE(ratsum::cycle_identity_holds(five));
    const auto w = ratsum::cycle_to_witness(five);
    CHECK(w.n == 5);
    CHECK(w.m == Rat(9));
    CHECK(w.values ==
          std::vector<Rat>{Rat(2), Rat(2), Rat(9, 2), Rat(1, 6), Rat(1, 3)});
    CHECK(ratsum::verify_witness(w).ok);

    const CycleTuple four{4, 5, {1, 2, 1, 2}};
    REQUIRE(ratsum::cycle_identity_holds(four));
    CHECK(ratsum::cycle_to_witness(four).values ==
          std::vector<Rat>{Rat(2), Rat(1, 2), Rat(2), Rat(1, 2)});

    const CycleTuple trivial{3, 3, {1, 1, 1}};
    REQUIRE(ratsum::cycle_identity_holds(trivial));
    CHECK(ratsum::cycle_to_witness(trivial).values == std::vector<Rat>{Rat(1), Rat(1), Rat(1)});

    const CycleTuple mutated{5, 9, {1, 2, 4, 18, 4}};
    CHECK_FALSE(ratsum::cycle_identity_holds(mutated));
    CHECK_THROWS_AS(ratsum::cycle_to_witness(mutated), std::invalid_argument);

    CHECK_FALSE(ratsum::cycle_identity_holds(CycleTuple{4, 5, {1, 2, 1}}));
    CHECK_FALSE(ratsum::cycle_identity_holds(CycleTuple{4, 5, {1, 2, 1, 0}}));
}

TEST_CASE("canonical rotation and primitivity") {
    CHECK(ratsum::canonical_rotation({2, 1, 3}) == std::vector<long long>{1, 3, 2});
    CHECK(ratsum::canonical_rotation({1, 1, 1}) == std::vector<long long>{1, 1, 1});
    CHECK(ratsum::canonical_rotation({3, 1, 1, 2}) == std::vector<long long>{1, 1, 2, 3});
    CHECK(ratsum::canonical_rotation({1, 2, 1, 2}) == std::vector<long long>{1, 2, 1, 2});

    CHECK(ratsum::is_primitive_tuple({1, 2, 4}));
    CHECK_FALSE(ratsum::is_primitive_tuple({2, 4, 6}));
    CHECK(ratsum::is_primitive_tuple({3, 5}));
    CHECK_FALSE(ratsum::is_primitive_tuple({2, 2}));
}

TEST_CASE("four-cycle search pins") {
    const auto r4 = ratsum::search_four_cycle(4, 3, 3);
    REQUIRE_FALSE(r4.solutions.empty());
    CHECK(r4.solutions.front().b == std::vector<long long>{1, 1, 1, 1});
    CHECK(r4.scanned > 0);
    CHECK_FALSE(r4.resumed);

    const auto r5 = ratsum::search_five_cycle(5, 2, 2);
    REQUIRE_FALSE(r5.solutions.empty());
    CHECK(r5.solutions.front().b == std::vector<long long>{1, 1, 1, 1, 1});

    const auto r54 = ratsum::search_four_cycle(5, 2, 2);
    const bool has_1212 = std::any_of(
        r54.solutions.begin(), r54.solutions.end(),
        [](const CycleTuple& t) { return t.b == std::vector<long long>{1, 2, 1, 2}; });
    CHECK(has_1212);

    const auto r9 = ratsum::search_five_cycle(9, 1, 20);
    const bool has_table_row = std::any_of(
        r9.solutions.begin(), r9.solutions.end(),
        [](const CycleTuple& t) { return t.b == std::vector<long long>{1, 2, 4, 18, 3}; });
    CHECK(has_table_row);
}

TEST_CASE("four-cycle search agrees with the naive oracle") {
    for (long long n = 4; n <= 8; ++n) {
        const auto fast = ratsum::search_four_cycle(n, 6, 12);
        const auto slow = naive_four_cycles(n, 6, 12);
        INFO("n = " << n);
        REQUIRE(fast.solutions.size() == slow.size());
        for (std::size_t i = 0; i < slow.size(); ++i) CHECK(fast.solutions[i].b == slow[i]);
    }
}

TEST_CASE("scan is deterministic across worker counts") {
    ratsum::ScanOptions serial;
    serial.workers = 1;
    ratsum::ScanOptions striped;
    striped.workers = 3;
    const auto a = ratsum::search_five_cycle(9, 2, 20, serial);
    const auto b = ratsum::search_five_cycle(9, 2, 20, striped);
    CHECK(a.scanned == b.scanned);
    REQUIRE(a.solutions.size() == b.solutions.size());
    for (std::size_t i = 0; i < a.solutions.size(); ++i)
        CHECK(a.solutions[i].b == b.solutions[i].b);
}

TEST_CASE("scan argument validation") {
    CHECK_THROWS_AS(ratsum::search_four_cycle(0, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(ratsum::search_four_cycle(5, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(ratsum::search_four_cycle(5, 4, 2), std::invalid_argument);
    CHECK_THROWS_AS(ratsum::search_four_cycle(5, 1, 2000000000LL), std::invalid_argument);
}

TEST_CASE("checkpoint resume reproduces a fresh scan") {
    const std::string path = "resume_test.ckpt";
    std::remove(path.c_str());

    const long long n = 5, b1_max = 3, b_max = 8;
    const auto fresh = ratsum::search_four_cycle(n, b1_max, b_max);

    // fabricate the state an interrupted scan would leave after finishing b1 = 1
    ratsum::detail::StripeOut first;
    ratsum::detail::stripe4(n, 1, 1, 1, b_max, true, first);
    ratsum::detail::Checkpoint partial;
    partial.k = 4;
    partial.n = n;
    partial.b1_max = b1_max;
    partial.b_max = b_max;
    partial.next_b1 = 2;
    partial.scanned = first.scanned;
    for (const auto& t : first.tuples4) partial.raw.emplace_back(t.begin(), t.end());
    std::sort(partial.raw.begin(), partial.raw.end());
    ratsum::detail::write_checkpoint(path, partial);

    ratsum::ScanOptions opts;
    opts.checkpoint_path = path;
    const auto resumed = ratsum::search_four_cycle(n, b1_max, b_max, opts);
    CHECK(resumed.resumed);
    CHECK(resumed.scanned == fresh.scanned);
    REQUIRE(resumed.solutions.size() == fresh.solutions.size());
    for (std::size_t i = 0; i < fresh.solutions.size(); ++i)
        CHECK(resumed.solutions[i].b == fresh.solutions[i].b);

    // resuming a finished scan replays the stored solutions
    const auto replay = ratsum::search_four_cycle(n, b1_max, b_max, opts);
    CHECK(replay.resumed);
    CHECK(replay.scanned == fresh.scanned);
    CHECK(replay.solutions.size() == fresh.solutions.size());
    std::remove(path.c_str());
}

TEST_CASE("checkpoint rejects corrupt or mismatched files") {
    const std::string path = "bad_test.ckpt";
    ratsum::ScanOptions opts;
    opts.checkpoint_path = path;

    {
        std::ofstream f(path, std::ios::trunc);
        f << "not a checkpoint\n";
    }
    CHECK_THROWS_AS(ratsum::search_four_cycle(5, 2, 4, opts), ratsum::parse_error);

    {
        std::ofstream f(path, std::ios::trunc);
        f << "ratsum-cycle-checkpoint v1\nk 4\nwrong 5\n";
    }
    CHECK_THROWS_AS(ratsum::search_four_cycle(5, 2, 4, opts), ratsum::schema_error);

    // truncated solution list
    {
        std::ofstream f(path, std::ios::trunc);
        f << "ratsum-cycle-checkpoint v1\nk 4\nn 5\nb1max 2\nbmax 4\n"
          << "next_b1 2\nscanned 7\nsolutions 2\n1 2 1 2\n";
    }
    CHECK_THROWS_AS(ratsum::search_four_cycle(5, 2, 4, opts), ratsum::schema_error);

    // k mismatch: written by a 5-cycle scan, resumed as a 4-cycle scan
    std::remove(path.c_str());
    const auto r5 = ratsum::search_five_cycle(5, 2, 4, opts);
    CHECK_FALSE(r5.resumed);
    CHECK_THROWS_AS(ratsum::search_four_cycle(5, 2, 4, opts), ratsum::verification_error);

    // parameter mismatch: same k, different box
    CHECK_THROWS_AS(ratsum::search_five_cycle(5, 2, 5, opts), ratsum::verification_error);
    std::remove(path.c_str());
}

TEST_CASE("find_four_cycle returns the first root in scan order") {
    const auto hit = ratsum::find_four_cycle(5, 10);
    REQUIRE(hit.has_value());
    CHECK(hit->b == std::vector<long long>{1, 2, 1, 2});

    const auto four = ratsum::find_four_cycle(4, 10);
    REQUIRE(four.has_value());
    CHECK(four->b == std::vector<long long>{1, 1, 1, 1});

    // the last entry is an exact quadratic root, not bounded by the prefix box
    const auto big = ratsum::find_four_cycle(93, 500);
    REQUIRE(big.has_value());
    CHECK(ratsum::cycle_identity_holds(*big));
    CHECK(big->b[3] > 500);

    CHECK_FALSE(ratsum::find_four_cycle(8, 60).has_value());

    CHECK_THROWS_AS(ratsum::find_four_cycle(0, 5), std::invalid_argument);
    CHECK_THROWS_AS(ratsum::find_four_cycle(5, 0), std::invalid_argument);
}
