#include "doctest.h"

#include "vertexeum/correspondence.hpp"
#include "vertexeum/hilb.hpp"
#include "vertexeum/oracles.hpp"

using namespace vertexeum;

TEST_CASE("Gaussian rationals")
{
    GaussRat i = GaussRat::i();
    CHECK(i * i == GaussRat(-1));
    CHECK(i.pow(4) == GaussRat(1));
    CHECK(i.pow(-1) == -i);
    CHECK(GaussRat(1, 1) / GaussRat(1, -1) == i);
    CHECK(GaussRat(Rational(1, 2), 3).conj() == GaussRat(Rational(1, 2), -3));
    CHECK_THROWS_AS(GaussRat(1) / GaussRat(), MathError);
}

TEST_CASE("polynomials over Q(i)")
{
    GPoly a({GaussRat(-1), GaussRat(0), GaussRat(1)});  // y^2 - 1
    GPoly b({GaussRat(1), GaussRat(1)});                // y + 1
    auto [q, r] = GPoly::divmod(a, b);
    CHECK(q == GPoly({GaussRat(-1), GaussRat(1)}));
    CHECK(r.is_zero());
    CHECK(GPoly::gcd(a, GPoly({GaussRat(2), GaussRat(2)})) == b);
    CHECK(a.shifted_up(2).valuation() == 2);
    CHECK(a.shifted_up(2).shifted_down(2) == a);
    CHECK(a.shifted_up(0) == a);

    YRational f(0, a, GPoly({GaussRat(-1), GaussRat(1)}));
    CHECK(f == YRational(0, b, GPoly::monomial(0, 1)));
    CHECK(f * f.inverse() == YRational());
    CHECK(YRational::y_power(3).pow(-1) == YRational::y_power(-3));
}

TEST_CASE("trigonometric expressions")
{
    TrigExpr s = TrigExpr::sin_half();
    TrigExpr c = TrigExpr::cos_half();
    // sin(u/2)^2 + cos(u/2)^2 = 1 and 2 sin cos = sin(u) = (y^2 - y^-2)/(2i)
    YRational sum = s.pow(2).scalar() * s.pow(2).y_expr() + c.pow(2).scalar() * c.pow(2).y_expr();
    CHECK(sum == YRational());
    TrigExpr sin_u = TrigExpr::constant(2) * s * c;
    YRational y2_minus_y2inv = YRational::y_power(2) + YRational(GaussRat(-1)) * YRational::y_power(-2);
    CHECK(sin_u.scalar() * sin_u.y_expr() == YRational(GaussRat(Rational(1), 0) / GaussRat(0, 2)) * y2_minus_y2inv);

    CHECK(gw_local_curve(1, 0) == TrigExpr::constant(1));
    CHECK(gw_local_curve(0, 2) == TrigExpr::u(-2));
    // (sin(u/2)/(u/2))^{-1} u^{-2} = u^{-1} / (2 sin(u/2))
    CHECK(gw_local_curve(0, 1) == TrigExpr::u(-1) * TrigExpr::constant(Rational(1, 2)) * s.pow(-1));
    CHECK(s.pow(3) * s.pow(-3) == TrigExpr::constant(1));
}

TEST_CASE("change of variables")
{
    CHECK(gw_to_dt(TrigExpr::constant(3), 0, 0) == DTRational(0, {Rational(3)}, {Rational(1)}));
    CHECK(dt_local_curve(1, 0) == DTRational(0, {Rational(1)}, {Rational(1)}));
    CHECK(dt_local_curve(0, 1) == DTRational(1, {Rational(1)}, {Rational(1), Rational(1)}));
    CHECK(dt_local_curve(0, 1).to_string() == "(q)/(1 + q)");
    CHECK(dt_local_curve(0, 1).lowest_power() == 1);
    CHECK(dt_local_curve(0, 1).series_coefficient(3) == 1);
    CHECK(dt_local_curve(0, 1).series_coefficient(4) == -1);

    for (int g = 0; g <= 3; ++g) {
        for (int d = 0; d <= 5; ++d) {
            CAPTURE(g);
            CAPTURE(d);
            DTRational dt = dt_local_curve(g, d);
            CHECK(dt == oracle::local_curve_closed_form(g, d));
            CHECK(dt.lowest_power() == 1 - g);
        }
    }

    CHECK_THROWS_AS(gw_to_dt(TrigExpr::u(-2), 0, 0), MathError);
    CHECK_THROWS_AS(gw_to_dt(TrigExpr(0, 1, YRational::y_power(1)), 0, 0), MathError);
    CHECK_THROWS_AS(gw_to_dt(TrigExpr::constant(GaussRat::i()), 0, 0), MathError);
    CHECK_THROWS_AS(gw_to_dt(gw_local_curve(0, 1), 2, 0), MathError);
}

TEST_CASE("line class series on P3")
{
    DTRational p = p3_example();
    CHECK(p.to_string() == "1/2*q - 1/2*q^3");
    const Rational expected[] = {0, Rational(1, 2), 0, Rational(-1, 2), 0, 0};
    for (int n = 0; n <= 5; ++n) CHECK(p.series_coefficient(n) == expected[n]);
    CHECK(gw_to_dt(p3_line_gw(), 4, 1) == p);
}

TEST_CASE("relative series between dual conditions")
{
    using WP = WeightedPartition;
    CHECK(relative_example(1, WP({{1, 0}})) == DTRational(1, {Rational(1)}, {Rational(1)}));
    CHECK(relative_example(2, WP({{2, 0}})) == DTRational(2, {Rational(-1, 2)}, {Rational(1)}));
    CHECK(relative_example(2, WP({{1, 0}, {1, 1}})) == DTRational(2, {Rational(1)}, {Rational(1)}));
    CHECK(relative_example(2, WP({{1, 0}, {1, 0}})) == DTRational(2, {Rational(1, 2)}, {Rational(1)}));

    LabelTable t = LabelTable::self_dual(2);
    for (int m = 1; m <= 3; ++m) {
        for (const auto& eta : weighted_partitions(m, t)) {
            CHECK(relative_example(m, eta).series_coefficient(m) == pairing(eta, eta.dual(t), m, t));
        }
    }
}
