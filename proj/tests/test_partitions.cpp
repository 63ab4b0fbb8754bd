#include <set>

#include "doctest.h"

#include "vertexeum/oracles.hpp"
#include "vertexeum/partitions.hpp"

using namespace vertexeum;

TEST_CASE("finite enumeration counts")
{
    CHECK(enumerate_finite(0).size() == 1);
    CHECK(enumerate_finite(0).front().size() == 0);
    CHECK(enumerate_finite(2).size() == 3);
    auto expected = oracle::macmahon_counts(7);
    for (int n = 0; n <= 7; ++n) {
        CAPTURE(n);
        CHECK(Integer(static_cast<long>(enumerate_finite(n).size())) == expected[static_cast<std::size_t>(n)]);
    }
    for (int n = 0; n <= 5; ++n) {
        CAPTURE(n);
        CHECK(enumerate_finite(n).size() == oracle::brute_force_plane_partitions(n));
    }
}

TEST_CASE("finite enumeration yields distinct order ideals closed under permutation")
{
    for (int n = 0; n <= 5; ++n) {
        auto all = enumerate_finite(n);
        std::set<Partition3D> seen(all.begin(), all.end());
        CHECK(seen.size() == all.size());
        CHECK(std::is_sorted(all.begin(), all.end()));
        for (const auto& pi : all) {
            CHECK(pi.size() == n);
            CHECK(is_order_ideal(pi.boxes(), [&](const Box& b) { return pi.contains(b); }));
            for (const auto& perm : {std::array<int, 3>{1, 0, 2}, std::array<int, 3>{1, 2, 0}}) {
                CHECK(seen.count(pi.permuted(perm)) == 1);
            }
        }
    }
}

TEST_CASE("partition parsing")
{
    CHECK(Partition2D::parse("2.1") == Partition2D({2, 1}));
    CHECK(Partition2D::parse("(2,1)") == Partition2D({2, 1}));
    CHECK(Partition2D::parse("2 1") == Partition2D({2, 1}));
    CHECK(Partition2D::parse("").empty());
    CHECK(Partition2D::parse("()").empty());
    CHECK(Partition2D({3, 1, 1}).to_string() == "(3,1,1)");
    CHECK_THROWS_AS(Partition2D({1, 2}), InvalidArgument);
    CHECK_THROWS_AS(Partition2D::parse("1.x"), InvalidArgument);

    Legs legs = parse_legs("2.1,,1");
    CHECK(legs[0] == Partition2D({2, 1}));
    CHECK(legs[1].empty());
    CHECK(legs[2] == Partition2D({1}));
    CHECK(parse_legs(legs_to_string(legs)) == legs);
    CHECK(legs_empty(parse_legs(",,")));
    CHECK(legs_empty(parse_legs("")));

    for (const auto& pi : enumerate_finite(4)) CHECK(Partition3D::parse_text(pi.to_text()) == pi);
    CHECK(Partition3D::parse_text("0,0,0;1,0,0").size() == 2);
    CHECK_THROWS_AS(Partition3D::parse_text("1,0,0"), InvalidArgument);
    CHECK_THROWS_AS(Partition3D::from_boxes({{0, 0, 0}, {0, 0, 0}}), InvalidArgument);
}

TEST_CASE("legged partitions")
{
    Legs one = parse_legs("1,,");
    auto zero = enumerate_with_legs(one, 0);
    REQUIRE(zero.size() == 1);
    CHECK(zero.front() == LegPartition3D::minimal(one, 4));
    CHECK(zero.front().renormalized_volume() == 0);
    CHECK(zero.front().extra_boxes().empty());

    CHECK(enumerate_with_legs(Legs{}, 3).size() == enumerate_finite(3).size());

    // The one-leg vertex has 1, 2, 5, 11, 24 partitions by added boxes.
    const std::size_t expected[] = {1, 2, 5, 11, 24};
    auto levels = enumerate_leg_levels(one, 4);
    for (int n = 0; n <= 4; ++n) {
        CAPTURE(n);
        CHECK(levels[static_cast<std::size_t>(n)].size() == expected[n]);
        CHECK(enumerate_with_legs(one, n).size() == expected[n]);
    }
    for (int n = 0; n <= 3; ++n) CHECK(oracle::brute_force_leg_count(one, n, n + 2) == expected[n]);

    for (const auto& legs : {parse_legs("2.1,,"), parse_legs("1,1,"), parse_legs("1,1,1")}) {
        CAPTURE(legs_to_string(legs));
        auto levels2 = enumerate_leg_levels(legs, 2);
        for (int n = 0; n <= 2; ++n) {
            CHECK(levels2[static_cast<std::size_t>(n)].size() == oracle::brute_force_leg_count(legs, n, n + 4));
        }
    }
}

TEST_CASE("renormalized volume is independent of the box size")
{
    Legs legs = parse_legs("2.1,1,");
    auto minimal = LegPartition3D::minimal(legs, 6);
    long v0 = minimal.renormalized_volume(6);
    CHECK(minimal.renormalized_volume(7) == v0);
    CHECK(minimal.renormalized_volume(9) == v0);

    auto extra = LegPartition3D::with_extra_boxes(legs, 6, {{0, 0, 2}});
    CHECK(extra.renormalized_volume() == v0 + 1);
    CHECK(extra.renormalized_volume(8) == v0 + 1);

    for (const auto& pi : enumerate_with_legs(parse_legs("1,,1"), 2)) {
        CHECK(pi.renormalized_volume(pi.window()) == pi.renormalized_volume(pi.window() + 3));
    }
}

TEST_CASE("window too small is reported")
{
    CHECK_THROWS_AS(enumerate_with_legs(parse_legs("1,,"), 3, 2), WindowTooSmall);
    CHECK_NOTHROW(enumerate_with_legs(parse_legs("1,,"), 3, default_window(parse_legs("1,,"), 3)));
}

TEST_CASE("content table")
{
    auto pi = Partition3D::from_boxes({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    ContentTable a = content_table(pi);
    CHECK(a.at({0, 0}) == 1);
    CHECK(a.at({1, 0}) == 1);
    CHECK(a.at({-1, 0}) == 1);
    CHECK(a.at({0, 1}) == 1);
    for (int n = 0; n <= 5; ++n) {
        for (const auto& p : enumerate_finite(n)) {
            int total = 0;
            for (const auto& [key, count] : content_table(p)) total += count;
            CHECK(total == n);
        }
    }
}
