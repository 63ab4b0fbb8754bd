#include <cstdio>
#include <filesystem>
#include <fstream>

#include "doctest.h"

#include "vertexeum/oracles.hpp"
#include "vertexeum/toric.hpp"
#include "vertexeum/vertex.hpp"

using namespace vertexeum;

namespace {

RatFunc s(int i) { return RatFunc::variable(i - 1); }

} // namespace

TEST_CASE("Bott exponents of the built-in geometries")
{
    CHECK(bott_exponent(builtin_geometry("affine3")) == -cubic_ratio());
    CHECK(bott_exponent(builtin_geometry("p3")) == RatFunc(-20));
    CHECK(bott_exponent(builtin_geometry("p3")) == RatFunc(Rational(oracle::p3_twisted_c3())));
    CHECK(bott_exponent(builtin_geometry("p1xp1xp1")) == RatFunc(-16));
    CHECK(bott_exponent(builtin_geometry("p1xp1xp1")) == RatFunc(Rational(oracle::p1cubed_twisted_c3())));
    CHECK(bott_exponent(builtin_geometry("p1xc2-rel")) == -cubic_ratio() + (s(2) + s(3)) / s(1));
    CHECK(bott_exponent(builtin_geometry("p3"), 1) == bott_exponent(builtin_geometry("p3"), 4));
    CHECK_THROWS_AS(builtin_geometry("p4"), InvalidArgument);
}

TEST_CASE("degree 0 partition functions")
{
    ToricGeometry empty{"empty", {}, {}, true};
    CHECK(bott_exponent(empty) == RatFunc(0));
    CHECK(degree0_partition_function(empty, 3) == QSeries::one(3));

    QSeries z = degree0_partition_function(builtin_geometry("p3"), 3);
    CHECK(z[1] == RatFunc(20));
    CHECK(z == oracle::macmahon_power(3, RatFunc(-20)));

    QSeries winf = winfty_series(3);
    CHECK(winf[0] == RatFunc(1));
    CHECK(winf[1] == -(s(2) + s(3)) / s(1));
    CHECK(winf == oracle::macmahon_power(3, (s(2) + s(3)) / s(1)));
}

TEST_CASE("local products agree with the global exponent")
{
    QSeries w = vertex_series(Legs{}, 3).series();
    for (const char* name : {"p1xc2-rel", "p3"}) {
        CAPTURE(name);
        ToricGeometry g = builtin_geometry(name);
        CHECK(degree0_local_product(g, w, 3) == degree0_partition_function(g, 3));
    }
}

TEST_CASE("polar part in s1")
{
    CHECK(s1_polar_part(cubic_ratio()) == (s(2) + s(3)) / s(1));
    CHECK(s1_polar_part(s(1) + s(2)) == RatFunc(0));
    // 1/(s1^2 (s1+s2)) = 1/(s1^2 s2) - 1/(s1 s2^2) + regular
    RatFunc f = RatFunc(1) / (s(1) * s(1) * (s(1) + s(2)));
    CHECK(s1_polar_part(f) == RatFunc(1) / (s(1) * s(1) * s(2)) - RatFunc(1) / (s(1) * s(2) * s(2)));
    CHECK(s1_polar_part(f - s1_polar_part(f)) == RatFunc(0));
}

TEST_CASE("geometry documents")
{
    for (const auto& name : builtin_geometry_names()) {
        CAPTURE(name);
        ToricGeometry g = builtin_geometry(name);
        CHECK(parse_geometry(serialize_geometry(g)) == g);
        CHECK(load_geometry(name) == g);
    }

    const char* zero = R"({"name":"bad","compact":false,"interior":[{"weights":[[1,0,0],[0,0,0],[0,0,1]]}],"divisor":[]})";
    CHECK_THROWS_AS(parse_geometry(zero), InvalidArgument);
    const char* dup = R"({"name":"dup","compact":false,"interior":[
        {"label":"a","weights":[[1,0,0],[0,1,0],[0,0,1]]},
        {"label":"a","weights":[[-1,0,0],[0,1,0],[0,0,1]]}],"divisor":[]})";
    CHECK_THROWS_AS(parse_geometry(dup), InvalidArgument);
    CHECK_THROWS_AS(parse_geometry("{"), InvalidArgument);
    CHECK_THROWS_AS(parse_geometry(R"({"name":"x","interior":[],"bogus":1})"), InvalidArgument);

    auto path = std::filesystem::temp_directory_path() / "vertexeum_test_geometry.json";
    {
        std::ofstream out(path);
        out << serialize_geometry(builtin_geometry("p1xp1xp1"));
    }
    ToricGeometry loaded = load_geometry(path.string());
    CHECK(loaded == builtin_geometry("p1xp1xp1"));
    CHECK(bott_exponent(loaded) == RatFunc(-16));
    std::filesystem::remove(path);
    CHECK_THROWS_AS(load_geometry(path.string()), InvalidArgument);
}
