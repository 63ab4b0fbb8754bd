#ifndef VERTEXEUM_VERTEX_HPP
#define VERTEXEUM_VERTEX_HPP

#include <array>
#include <vector>

#include "vertexeum/character.hpp"
#include "vertexeum/measure.hpp"
#include "vertexeum/partitions.hpp"
#include "vertexeum/qseries.hpp"

namespace vertexeum {

/// Q_pi = sum over boxes of t^box.
LocalizedCharacter char_poly(const Partition3D& pi);
/// For legged partitions the cylinder tails are summed in closed form with
/// (1 - t_i)^{-1} denominators.
LocalizedCharacter char_poly(const LegPartition3D& pi);

/// Q - Qbar/(t1 t2 t3) + Q Qbar (1-t1)(1-t2)(1-t3)/(t1 t2 t3), fully reduced.
LocalizedCharacter tangent_character(const LocalizedCharacter& q);

/// V_pi for a finite partition.
LaurentCharacter vertex_character(const Partition3D& pi);
/// w(pi) = prod (s,k)^{-v_k}.
FactoredMeasure vertex_measure(const Partition3D& pi);

/// V(pi) - V(pi_min) for partitions sharing legs; pi_min must be the minimal
/// configuration. Throws MathError when the (1 - t_i) denominators do not cancel.
LaurentCharacter leg_character_delta(const LegPartition3D& pi, const LegPartition3D& pi_min);

/// Sum of w(pi) q^{|pi|}; with legs the series is normalized so that the
/// minimal configuration contributes 1*q^0 and q counts boxes beyond it.
struct VertexSeries {
    Legs legs;
    int order = 0;
    std::vector<RatFunc> coefficients;
    /// Number of partitions contributing to each coefficient.
    std::vector<std::size_t> counts;

    QSeries series() const { return QSeries(coefficients); }
};

VertexSeries vertex_series(const Legs& legs, int order, unsigned threads = 0);

struct ConstantTerm {
    long lhs = 0;  ///< coefficient of x^0 t3^0 in V_pi(x, 1/x, t3)
    long rhs = 0;  ///< -1/2 sum ((a_{i,j} - a_{i+1,j}) - (a_{i,j+1} - a_{i+1,j+1}))^2
};
ConstantTerm constant_term_check(const Partition3D& pi);

/// Exponents of s1+s2, s1+s3, s2+s3 in w(pi).
std::array<int, 3> cubic_multiplicity(const Partition3D& pi);

/// (s1+s2)(s1+s3)(s2+s3)/(s1 s2 s3), the one-box measure.
RatFunc cubic_ratio();

} // namespace vertexeum

#endif
