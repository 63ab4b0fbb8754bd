#include "doctest.h"

#include "vertexeum/hilb.hpp"
#include "vertexeum/oracles.hpp"

using namespace vertexeum;

namespace {

using WP = WeightedPartition;

LabelTable point_and_unit() { return LabelTable({{"1", 0, 1}, {"pt", 4, 0}}); }

} // namespace

TEST_CASE("label tables")
{
    CHECK(LabelTable::self_dual(3).size() == 3);
    CHECK(point_and_unit().dual(0) == 1);
    CHECK_THROWS_AS(LabelTable({{"a", 1, 0}}), InvalidArgument);
    CHECK_THROWS_AS(LabelTable({{"a", 2, 3}}), InvalidArgument);
    CHECK_THROWS_AS(LabelTable({{"a", 2, 1}, {"b", 2, 1}}), InvalidArgument);
    CHECK_THROWS_AS(LabelTable({{"a", 0, 0}}), InvalidArgument);
    CHECK_THROWS_AS(LabelTable({{"a", 6, 0}}), InvalidArgument);
}

TEST_CASE("weighted partitions")
{
    WP eta({{1, 0}, {2, 0}, {1, 1}});
    CHECK(eta.pairs() == std::vector<WP::Pair>{{2, 0}, {1, 1}, {1, 0}});
    CHECK(eta.size() == 4);
    CHECK(eta.length() == 3);
    CHECK(eta.to_string() == "[[2,0],[1,1],[1,0]]");
    CHECK(WP({{2, 0}, {1, 1}}).dual(point_and_unit()) == WP({{2, 1}, {1, 0}}));
    CHECK_THROWS_AS(WP({{0, 0}}), InvalidArgument);

    CHECK(WP({{2, 0}, {1, 1}}).zeta() == 2);
    CHECK(WP({{1, 0}, {1, 0}}).zeta() == 2);
    CHECK(WP({{2, 0}, {2, 0}, {1, 0}}).zeta() == 8);
    CHECK(WP({{3, 1}, {3, 1}, {3, 1}}).zeta() == 162);
    CHECK(WP().zeta() == 1);

    LabelTable two = LabelTable::self_dual(2);
    const std::size_t expected[] = {1, 2, 5, 10, 20};
    for (int k = 0; k <= 4; ++k) {
        auto all = weighted_partitions(k, two);
        CHECK(all.size() == expected[k]);
        CHECK(std::is_sorted(all.rbegin(), all.rend()));
        for (const auto& e : all) {
            Integer parts = 1;
            for (const auto& [a, i] : e.pairs()) parts *= a;
            CHECK(e.zeta() == parts * oracle::automorphism_count(e));
        }
    }
    const std::size_t single[] = {1, 1, 2, 3, 5, 7};
    for (int k = 0; k <= 5; ++k) CHECK(weighted_partitions(k, LabelTable::self_dual(1)).size() == single[k]);
}

TEST_CASE("Nakajima pairing")
{
    LabelTable two = LabelTable::self_dual(2);
    CHECK(pairing(WP({{1, 0}, {1, 1}}), WP({{1, 0}, {1, 1}}), 2, two) == 1);
    CHECK(pairing(WP({{2, 0}}), WP({{2, 0}}), 2, two) == Rational(-1, 2));
    CHECK(pairing(WP({{2, 0}}), WP({{2, 1}}), 2, two) == 0);
    CHECK(pairing(WP({{1, 0}, {1, 0}}), WP({{1, 0}, {1, 0}}), 2, two) == Rational(1, 2));
    CHECK_THROWS_AS(pairing(WP({{2, 0}}), WP({{1, 0}}), 2, two), InvalidArgument);

    LabelTable pu = point_and_unit();
    CHECK(pairing(WP({{1, 0}}), WP({{1, 1}}), 1, pu) == 1);
    CHECK(pairing(WP({{1, 0}}), WP({{1, 0}}), 1, pu) == 0);
}

TEST_CASE("diagonal splitting")
{
    for (const LabelTable& t : {LabelTable::self_dual(2), point_and_unit()}) {
        for (int k = 0; k <= 4; ++k) {
            auto terms = diagonal_splitting(k, t);
            CHECK(terms.size() == weighted_partitions(k, t).size());
            Rational trace = 0;
            for (const auto& term : terms) {
                CHECK(term.eta_dual == term.eta.dual(t));
                Rational sign = (k - term.eta.length()) % 2 == 0 ? 1 : -1;
                CHECK(term.coefficient == sign * Rational(term.eta.zeta()));
                trace += term.coefficient * pairing(term.eta, term.eta_dual, k, t);
            }
            CHECK(trace == Rational(static_cast<long>(terms.size())));
        }
    }
}

TEST_CASE("degeneration gluing factors")
{
    WP eta({{2, 0}, {1, 1}});
    GluingMonomial dt = dt_gluing(eta).normalized();
    CHECK(dt.coefficient == -2);
    CHECK(dt.q_power == -3);
    CHECK(dt.u_power == 0);
    CHECK(dt.i_power == 0);

    LabelTable two = LabelTable::self_dual(2);
    for (int k = 1; k <= 3; ++k) {
        for (const auto& e : weighted_partitions(k, two)) {
            for (int d1 = -2; d1 <= 4; ++d1) {
                for (int d2 = -2; d2 <= 4; ++d2) {
                    CHECK(degeneration_consistency(d1, d2, e));
                    CHECK_FALSE(degeneration_consistency(d1, d2, e, 1));
                    CHECK(transported_gw_gluing(d1, d2, e).normalized() == dt_gluing(e).normalized());
                }
            }
        }
    }

    GluingMonomial a{Rational(3), 1, 2, 1, 0};
    GluingMonomial b{Rational(1, 3), 1, -2, 1, 1};
    a *= b;
    GluingMonomial n = a.normalized();
    // i^2 = -1 and ((-q)^{1/2})^2 = -q
    CHECK(n.coefficient == 1);
    CHECK(n.i_power == 0);
    CHECK(n.neg_q_half_power == 0);
    CHECK(n.q_power == 2);
    CHECK(n.u_power == 0);
}
