#include <random>

#include "doctest.h"

#include "vertexeum/character.hpp"
#include "vertexeum/measure.hpp"
#include "vertexeum/rat_func.hpp"

using namespace vertexeum;

namespace {

RatFunc s(int i) { return RatFunc::variable(i - 1); }

RatFunc cubic()
{
    return (s(1) + s(2)) * (s(1) + s(3)) * (s(2) + s(3)) / (s(1) * s(2) * s(3));
}

LaurentCharacter one_box_character()
{
    LaurentCharacter v;
    v.add_term({-1, 0, 0}, 1);
    v.add_term({0, -1, 0}, 1);
    v.add_term({0, 0, -1}, 1);
    v.add_term({0, -1, -1}, -1);
    v.add_term({-1, 0, -1}, -1);
    v.add_term({-1, -1, 0}, -1);
    return v;
}

// Random homogeneous-denominator rational functions built from small forms.
RatFunc random_ratfunc(std::mt19937& rng)
{
    std::uniform_int_distribution<int> coef(-3, 3), expo(0, 2), pick(0, 5);
    MultiPoly num;
    for (int t = 0; t < 3; ++t) {
        num += MultiPoly::monomial({expo(rng), expo(rng), expo(rng)}, Rational(coef(rng)));
    }
    static const LinearForm forms[] = {LinearForm(1, 0, 0), LinearForm(0, 1, 0), LinearForm(0, 0, 1),
                                       LinearForm(1, 1, 0), LinearForm(1, -1, 0), LinearForm(0, 1, 1)};
    std::map<LinearForm, int> den;
    for (int t = 0; t < 2; ++t) den[forms[pick(rng)]] += 1;
    return RatFunc(num, Rational(coef(rng) == 0 ? 1 : 2), den);
}

} // namespace

TEST_CASE("linear forms canonicalize to primitive with positive lead")
{
    auto [c, f] = LinearForm::canonicalize({0, -4, 6});
    CHECK(c == -2);
    CHECK(f == LinearForm(0, 2, -3));
    CHECK(f.is_canonical());
    CHECK(f.to_string() == "2*s2-3*s3");
    CHECK(LinearForm(1, 1, 0).to_string() == "s1+s2");
    CHECK(LinearForm::coordinate(0) < LinearForm(1, 1, 0));
}

TEST_CASE("rational function arithmetic")
{
    CHECK(s(1).pow(-1) + s(2).pow(-1) == (s(1) + s(2)) / (s(1) * s(2)));
    RatFunc x = cubic();
    CHECK(x * RatFunc(1) == x);
    RatFunc r = (s(1) + s(2)) / s(1);
    CHECK(r / r == RatFunc(1));
    CHECK_THROWS_AS(r / RatFunc(), MathError);
    CHECK((s(1) * s(1) - s(2) * s(2)) / (s(1) - s(2)) == s(1) + s(2));
    CHECK(RatFunc(1) / (s(1) - s(2)).pow(3) * (s(1) - s(2)).pow(2) == RatFunc(1) / (s(1) - s(2)));
    CHECK_THROWS_AS(RatFunc(1) / (s(1) * s(1) + s(2) * s(2)), MathError);
    CHECK(RatFunc(Rational(1, 2)) * s(1) / (RatFunc(2) * s(1)) == RatFunc(Rational(1, 4)));
}

TEST_CASE("specialization")
{
    std::map<int, RatFunc> cy{{2, -s(1) - s(2)}};
    CHECK(cubic().specialize(cy) == RatFunc(-1));
    CHECK(s(1).specialize({{0, s(1)}}) == s(1));
    RatFunc pole = RatFunc(1) / (s(1) + s(2) + s(3));
    CHECK_THROWS_AS(pole.specialize(cy), MathError);
    // s -> -s flips the sign of every odd-degree part
    std::map<int, RatFunc> neg{{0, -s(1)}, {1, -s(2)}, {2, -s(3)}};
    CHECK(cubic().specialize(neg) == cubic());
    CHECK((s(1) / (s(2) * s(3))).specialize(neg) == -(s(1) / (s(2) * s(3))));
}

TEST_CASE("canonical text round trip")
{
    std::mt19937 rng(7);
    for (int i = 0; i < 50; ++i) {
        RatFunc f = random_ratfunc(rng);
        CHECK(RatFunc::parse(f.to_string()) == f);
    }
    CHECK(RatFunc::parse("(s2+s3)/(s1)") == (s(2) + s(3)) / s(1));
    CHECK(RatFunc::parse("-1/2*s1^2 + 3") == RatFunc(Rational(-1, 2)) * s(1) * s(1) + RatFunc(3));
    CHECK_THROWS_AS(RatFunc::parse("s4"), InvalidArgument);
}

TEST_CASE("cross-multiplication agrees with normal-form equality")
{
    std::mt19937 rng(11);
    for (int i = 0; i < 100; ++i) {
        RatFunc a = random_ratfunc(rng);
        RatFunc b = random_ratfunc(rng);
        CHECK(equal_by_cross_multiplication(a, b) == (a == b));
        RatFunc l = RatFunc::form(LinearForm(1, -2, 3)) * s(2) * s(2);
        RatFunc c = a * l / l;
        CHECK(equal_by_cross_multiplication(a, c));
        CHECK(a == c);
        CHECK((a + b) - b == a);
    }
}

TEST_CASE("character conjugation and reduction")
{
    LaurentCharacter q = LaurentCharacter::monomial({1, 0, 0}) + LaurentCharacter::monomial({0, -1, 1}, 2);
    CHECK(q.bar().bar() == q);
    LaurentCharacter t12 = LaurentCharacter::monomial({1, 0, 0}) + LaurentCharacter::monomial({0, 1, 0});
    CHECK(t12.bar() == LaurentCharacter::monomial({-1, 0, 0}) + LaurentCharacter::monomial({0, -1, 0}));

    LocalizedCharacter geometric(LaurentCharacter::constant(1), {1, 0, 0});
    LocalizedCharacter product = LocalizedCharacter(LaurentCharacter::one_minus(0)) * geometric;
    CHECK(product.reduced().as_laurent() == LaurentCharacter::constant(1));
    CHECK_FALSE(product.reduced().has_denominator());

    LocalizedCharacter loc(q, {1, 2, 0});
    CHECK(loc.bar().bar() == loc);
    CHECK(loc.reduced().reduced() == loc.reduced());
    // 1/(1-t1) conjugates to -t1/(1-t1)
    CHECK(geometric.bar() == LocalizedCharacter(LaurentCharacter::monomial({1, 0, 0}, -1), {1, 0, 0}));
}

TEST_CASE("measure from character")
{
    CHECK(measure_from_character(one_box_character()).to_ratfunc() == cubic());
    CHECK(measure_from_character(LaurentCharacter()).to_ratfunc() == RatFunc(1));
    CHECK_THROWS_AS(measure_from_character(LaurentCharacter::constant(1)), MathError);

    LaurentCharacter a = one_box_character();
    LaurentCharacter b = LaurentCharacter::monomial({2, -1, 0}, 3) + LaurentCharacter::monomial({0, 0, 1}, -1);
    FactoredMeasure ma = measure_from_character(a), mb = measure_from_character(b);
    CHECK(measure_from_character(a + b) == ma * mb);
    CHECK(mb.total_degree() == -b.coefficient_sum());
    CHECK(mb.to_ratfunc() == s(3) / (RatFunc(2) * s(1) - s(2)).pow(3));
    CHECK(ma.exponent_of(LinearForm(1, 1, 0)) == 1);
    CHECK(ma.exponent_of(LinearForm(1, 0, 0)) == -1);
}
