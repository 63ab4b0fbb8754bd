#include "doctest.h"

#include "vertexeum/oracles.hpp"
#include "vertexeum/vertex.hpp"

using namespace vertexeum;

namespace {

RatFunc s(int i) { return RatFunc::variable(i - 1); }

LaurentCharacter from_map(const std::map<std::array<int, 3>, long>& m)
{
    LaurentCharacter v;
    for (const auto& [k, c] : m) v.add_term({k[0], k[1], k[2]}, c);
    return v;
}

} // namespace

TEST_CASE("Q of small partitions")
{
    CHECK(char_poly(Partition3D()).as_laurent().is_zero());
    auto box = Partition3D::from_boxes({{0, 0, 0}});
    CHECK(char_poly(box).as_laurent() == LaurentCharacter::constant(1));

    auto cyl = LegPartition3D::minimal(parse_legs("1,,"), 3);
    CHECK(char_poly(cyl) == LocalizedCharacter(LaurentCharacter::constant(1), {1, 0, 0}));
}

TEST_CASE("vertex character of one box")
{
    LaurentCharacter v = vertex_character(Partition3D::from_boxes({{0, 0, 0}}));
    CHECK(v.terms().size() == 6);
    CHECK(v.coefficient({-1, 0, 0}) == 1);
    CHECK(v.coefficient({0, 0, -1}) == 1);
    CHECK(v.coefficient({-1, -1, 0}) == -1);
    CHECK(v.coefficient({0, -1, -1}) == -1);
    CHECK(v.constant_term() == 0);
    CHECK(vertex_character(Partition3D()).is_zero());
}

TEST_CASE("vertex character matches the pairwise expansion")
{
    for (int n = 0; n <= 5; ++n) {
        for (const auto& pi : enumerate_finite(n)) {
            CAPTURE(pi.to_text());
            LaurentCharacter v = vertex_character(pi);
            CHECK(v == from_map(oracle::vertex_character_expansion(pi)));
            CHECK(v.coefficient_sum() == 0);
            CHECK(v.constant_term() == 0);
            // Serre duality: V = -Vbar / (t1 t2 t3)
            CHECK(v == -v.bar().shifted({-1, -1, -1}));
        }
    }
}

TEST_CASE("vertex measure")
{
    CHECK(vertex_measure(Partition3D()).to_ratfunc() == RatFunc(1));
    CHECK(vertex_measure(Partition3D::from_boxes({{0, 0, 0}})).to_ratfunc() == cubic_ratio());
    CHECK(cubic_ratio() == (s(1) + s(2)) * (s(1) + s(3)) * (s(2) + s(3)) / (s(1) * s(2) * s(3)));

    // two boxes in a row along x
    auto row = Partition3D::from_boxes({{0, 0, 0}, {1, 0, 0}});
    RatFunc w = vertex_measure(row).to_ratfunc();
    CHECK(w.degree() == 0);
    CHECK(vertex_measure(row.permuted({1, 0, 2})) == vertex_measure(row).permuted({1, 0, 2}));
}

TEST_CASE("measure degree vanishes and the CY value is a sign")
{
    std::map<int, RatFunc> cy{{2, -s(1) - s(2)}};
    for (int n = 0; n <= 5; ++n) {
        for (const auto& pi : enumerate_finite(n)) {
            CHECK(vertex_measure(pi).total_degree() == 0);
            CHECK(vertex_measure(pi).to_ratfunc().specialize(cy) == RatFunc(n % 2 == 0 ? 1 : -1));
        }
    }
}

TEST_CASE("constant term and cubic multiplicity")
{
    auto box = Partition3D::from_boxes({{0, 0, 0}});
    CHECK(cubic_multiplicity(box) == std::array<int, 3>{1, 1, 1});
    CHECK(cubic_multiplicity(Partition3D()) == std::array<int, 3>{0, 0, 0});
    ConstantTerm ct = constant_term_check(box);
    CHECK(ct.lhs == ct.rhs);
    CHECK(ct.lhs == -1);

    for (int n = 1; n <= 5; ++n) {
        for (const auto& pi : enumerate_finite(n)) {
            CAPTURE(pi.to_text());
            ConstantTerm c = constant_term_check(pi);
            CHECK(c.lhs == c.rhs);
            auto m = cubic_multiplicity(pi);
            CHECK(c.lhs < 0);
            CHECK(m[0] >= 1);
            CHECK(m[1] >= 1);
            CHECK(m[2] >= 1);
        }
    }
}

TEST_CASE("vertex series against closed forms")
{
    VertexSeries w = vertex_series(Legs{}, 4);
    CHECK(w.coefficients[0] == RatFunc(1));
    CHECK(w.coefficients[1] == cubic_ratio());
    CHECK(w.series() == oracle::macmahon_power(4, -cubic_ratio()));
    CHECK(w.counts == std::vector<std::size_t>{1, 1, 3, 6, 13});

    VertexSeries one = vertex_series(parse_legs("1,,"), 3);
    CHECK(one.counts == std::vector<std::size_t>{1, 2, 5, 11});
    QSeries expected = oracle::one_plus_q_power(3, (s(2) + s(3)) / s(1)) * oracle::macmahon_power(3, -cubic_ratio());
    CHECK(one.series() == expected);
}

TEST_CASE("vertex series is independent of the worker count")
{
    VertexSeries a = vertex_series(Legs{}, 4, 1);
    VertexSeries b = vertex_series(Legs{}, 4, 4);
    CHECK(a.series().coefficient_strings() == b.series().coefficient_strings());
    VertexSeries c = vertex_series(parse_legs("1,1,"), 2, 1);
    VertexSeries d = vertex_series(parse_legs("1,1,"), 2, 3);
    CHECK(c.series() == d.series());
}

TEST_CASE("leg character difference")
{
    Legs legs = parse_legs("1,,");
    auto minimal = LegPartition3D::minimal(legs, 4);
    CHECK(leg_character_delta(minimal, minimal).is_zero());
    for (const auto& pi : enumerate_with_legs(legs, 2)) {
        LaurentCharacter delta = leg_character_delta(pi, minimal);
        CHECK(delta.constant_term() == 0);
        CHECK(measure_from_character(delta).total_degree() == 0);
    }
    auto other = LegPartition3D::minimal(parse_legs(",1,"), 4);
    CHECK_THROWS(leg_character_delta(other, minimal));
}
