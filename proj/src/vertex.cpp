#include "vertexeum/vertex.hpp"

#include <algorithm>

#include "vertexeum/parallel.hpp"

namespace vertexeum {

namespace {

Weight box_weight(const Box& b) { return {b[0], b[1], b[2]}; }

const LocalizedCharacter& inverse_t123()
{
    static const LocalizedCharacter m(LaurentCharacter::monomial({-1, -1, -1}));
    return m;
}

const LocalizedCharacter& one_minus_t123()
{
    static const LocalizedCharacter p(LaurentCharacter::one_minus(0) * LaurentCharacter::one_minus(1) *
                                      LaurentCharacter::one_minus(2));
    return p;
}

// Cell (row, col) of leg `leg` placed at position `t` along the leg axis.
Box leg_box(int leg, int row, int col, int t)
{
    switch (leg) {
    case 0: return {t, row, col};
    case 1: return {row, t, col};
    default: return {row, col, t};
    }
}

} // namespace

LocalizedCharacter char_poly(const Partition3D& pi)
{
    LaurentCharacter q;
    for (const auto& b : pi.boxes()) q.add_term(box_weight(b), 1);
    return LocalizedCharacter(std::move(q));
}

LocalizedCharacter char_poly(const LegPartition3D& pi)
{
    const Legs& legs = pi.legs();
    LocalizedCharacter total;
    int extent = 1;
    for (int leg = 0; leg < 3; ++leg) {
        const auto& lam = legs[static_cast<std::size_t>(leg)];
        LaurentCharacter cells;
        for (int row = 0; row < static_cast<int>(lam.parts().size()); ++row) {
            for (int col = 0; col < lam.parts()[static_cast<std::size_t>(row)]; ++col) {
                cells.add_term(box_weight(leg_box(leg, row, col, 0)), 1);
            }
            extent = std::max({extent, row + 1, lam.parts()[static_cast<std::size_t>(row)]});
        }
        std::array<int, 3> den{0, 0, 0};
        den[static_cast<std::size_t>(leg)] = 1;
        total = total + LocalizedCharacter(std::move(cells), den);
    }
    // Boxes lying in k >= 2 cylinders were counted k times; they sit in [0, extent)^3.
    LaurentCharacter correction;
    for (int x = 0; x < extent; ++x) {
        for (int y = 0; y < extent; ++y) {
            for (int z = 0; z < extent; ++z) {
                Box b{x, y, z};
                int k = in_leg(legs, 0, b) + in_leg(legs, 1, b) + in_leg(legs, 2, b);
                if (k >= 2) correction.add_term(box_weight(b), k - 1);
            }
        }
    }
    for (const auto& b : pi.extra_boxes()) correction.add_term(box_weight(b), -1);
    return (total - LocalizedCharacter(std::move(correction))).reduced();
}

LocalizedCharacter tangent_character(const LocalizedCharacter& q)
{
    LocalizedCharacter qbar = q.bar();
    LocalizedCharacter v = q - qbar * inverse_t123() + q * qbar * one_minus_t123() * inverse_t123();
    return v.reduced();
}

LaurentCharacter vertex_character(const Partition3D& pi)
{
    LocalizedCharacter v = tangent_character(char_poly(pi));
    if (v.has_denominator()) throw MathError("finite partition produced a non-Laurent vertex character");
    return v.numerator();
}

FactoredMeasure vertex_measure(const Partition3D& pi) { return measure_from_character(vertex_character(pi)); }

LaurentCharacter leg_character_delta(const LegPartition3D& pi, const LegPartition3D& pi_min)
{
    if (!(pi.legs() == pi_min.legs())) throw InvalidArgument("leg_character_delta needs identical legs");
    if (!pi_min.extra_boxes().empty()) throw InvalidArgument("reference partition is not the minimal configuration");
    LocalizedCharacter diff = (tangent_character(char_poly(pi)) - tangent_character(char_poly(pi_min))).reduced();
    if (diff.has_denominator()) {
        throw MathError("vertex character difference keeps a (1-t_i) denominator; legs do not match");
    }
    return diff.numerator();
}

VertexSeries vertex_series(const Legs& legs, int order, unsigned threads)
{
    if (order < 0) throw InvalidArgument("series order must be nonnegative");
    VertexSeries out;
    out.legs = legs;
    out.order = order;

    auto sum_level = [threads](std::size_t count, auto&& measure_of) {
        std::vector<RatFunc> terms(count);
        parallel_for(count, threads, [&](std::size_t i) { terms[i] = measure_of(i).to_ratfunc(); });
        return RatFunc::sum(terms);
    };

    if (legs_empty(legs)) {
        for (int n = 0; n <= order; ++n) {
            auto parts = enumerate_finite(n);
            out.counts.push_back(parts.size());
            out.coefficients.push_back(
                sum_level(parts.size(), [&](std::size_t i) { return vertex_measure(parts[i]); }));
        }
        return out;
    }

    auto levels = enumerate_leg_levels(legs, order);
    const LegPartition3D& minimal = levels.at(0).at(0);
    LocalizedCharacter base = tangent_character(char_poly(minimal));
    for (const auto& level : levels) {
        out.counts.push_back(level.size());
        out.coefficients.push_back(sum_level(level.size(), [&](std::size_t i) {
            LocalizedCharacter diff = (tangent_character(char_poly(level[i])) - base).reduced();
            return measure_from_character(diff.as_laurent());
        }));
    }
    return out;
}

ConstantTerm constant_term_check(const Partition3D& pi)
{
    ConstantTerm out;
    for (const auto& [k, c] : vertex_character(pi).terms()) {
        if (k[0] == k[1] && k[2] == 0) out.lhs += c;
    }
    if (pi.size() == 0) return out;

    ContentTable a = content_table(pi);
    auto at = [&](int i, int j) {
        auto it = a.find({i, j});
        return it == a.end() ? 0L : static_cast<long>(it->second);
    };
    int imin = 0, imax = 0, jmax = 0;
    for (const auto& [key, count] : a) {
        imin = std::min(imin, key.first);
        imax = std::max(imax, key.first);
        jmax = std::max(jmax, key.second);
    }
    long twice = 0;
    for (int j = 0; j <= jmax; ++j) {
        for (int i = imin - 1; i <= imax; ++i) {
            long d = (at(i, j) - at(i + 1, j)) - (at(i, j + 1) - at(i + 1, j + 1));
            twice += d * d;
        }
    }
    if (twice % 2 != 0) throw MathError("content sum of squares is odd");
    out.rhs = -twice / 2;
    return out;
}

std::array<int, 3> cubic_multiplicity(const Partition3D& pi)
{
    FactoredMeasure w = vertex_measure(pi);
    return {w.exponent_of(LinearForm(1, 1, 0)), w.exponent_of(LinearForm(1, 0, 1)), w.exponent_of(LinearForm(0, 1, 1))};
}

RatFunc cubic_ratio()
{
    return FactoredMeasure(1, {{LinearForm(1, 1, 0), 1},
                               {LinearForm(1, 0, 1), 1},
                               {LinearForm(0, 1, 1), 1},
                               {LinearForm(1, 0, 0), -1},
                               {LinearForm(0, 1, 0), -1},
                               {LinearForm(0, 0, 1), -1}})
        .to_ratfunc();
}

} // namespace vertexeum
