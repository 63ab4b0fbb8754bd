#include "doctest.h"

#include "vertexeum/oracles.hpp"
#include "vertexeum/qseries.hpp"
#include "vertexeum/vertex.hpp"

using namespace vertexeum;

namespace {

RatFunc s(int i) { return RatFunc::variable(i - 1); }

} // namespace

TEST_CASE("MacMahon function")
{
    QSeries m = macmahon(6);
    auto counts = oracle::macmahon_counts(6);
    for (int n = 0; n <= 6; ++n) CHECK(m[n] == RatFunc(Rational(counts[static_cast<std::size_t>(n)])));

    QSeries neg = macmahon(3, true);
    CHECK(neg.coefficient_strings() == std::vector<std::string>{"1", "-1", "3", "-6"});
    CHECK(macmahon(0).coefficient_strings() == std::vector<std::string>{"1"});
}

TEST_CASE("log and exp")
{
    CHECK(series_log(QSeries::one(4)) == QSeries(4));
    QSeries l = series_log(macmahon(5, true));
    CHECK(l[0] == RatFunc(0));
    CHECK(l[1] == RatFunc(-1));
    CHECK(l[2] == RatFunc(Rational(5, 2)));
    CHECK(series_exp(l) == macmahon(5, true));

    QSeries a = QSeries::one(4);
    a[1] = s(1);
    a[3] = RatFunc(Rational(2, 3)) * s(2) / s(3);
    CHECK(series_exp(series_log(a)) == a);
    CHECK(series_log(a * macmahon(4)) == series_log(a) + series_log(macmahon(4)));

    QSeries bad = QSeries::one(2);
    bad[0] = RatFunc(2);
    CHECK_THROWS_AS(series_log(bad), MathError);
    CHECK_THROWS_AS(series_exp(QSeries::one(2)), MathError);
}

TEST_CASE("symbolic powers")
{
    QSeries one_plus_q = QSeries::one(4);
    one_plus_q[1] = RatFunc(1);
    RatFunc f = s(1);
    QSeries p = pow_exponent(one_plus_q, f);
    CHECK(p == oracle::one_plus_q_power(4, f));
    CHECK(p[1] == f);
    CHECK(p[2] == f * (f - RatFunc(1)) / RatFunc(2));
    CHECK(pow_exponent(one_plus_q, RatFunc(0)) == QSeries::one(4));
    CHECK(pow_exponent(one_plus_q, RatFunc(3)) == one_plus_q * one_plus_q * one_plus_q);

    RatFunc c = cubic_ratio();
    QSeries w = pow_exponent(macmahon(4, true), -c);
    CHECK(w[1] == c);
    CHECK(w[2] == c * (c - RatFunc(5)) / RatFunc(2));
    CHECK(w == oracle::macmahon_power(4, -c));

    RatFunc g = (s(2) + s(3)) / s(1);
    CHECK(pow_exponent(macmahon(4, true), c + g) ==
          pow_exponent(macmahon(4, true), c) * pow_exponent(macmahon(4, true), g));
}

TEST_CASE("series arithmetic and specialization")
{
    QSeries a(2), b(2);
    a[0] = RatFunc(1);
    a[1] = s(1);
    b[0] = RatFunc(1);
    b[2] = s(2);
    QSeries ab = a * b;
    CHECK(ab[2] == s(2));
    CHECK(ab[1] == s(1));
    CHECK((a + b)[0] == RatFunc(2));
    CHECK((a - a) == QSeries(2));
    CHECK(ab.truncated(1).order() == 1);

    QSeries w = pow_exponent(macmahon(3, true), -cubic_ratio());
    CHECK(w.specialize({{2, -s(1) - s(2)}}) == macmahon(3, true));
}
