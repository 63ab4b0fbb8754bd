#ifndef VERTEXEUM_ORACLES_HPP
#define VERTEXEUM_ORACLES_HPP

// Independent reference computations. None of these reuse the code paths they
// are compared against: they use plain containers and direct expansions.

#include <array>
#include <map>
#include <vector>

#include "vertexeum/correspondence.hpp"
#include "vertexeum/hilb.hpp"
#include "vertexeum/partitions.hpp"
#include "vertexeum/qseries.hpp"
#include "vertexeum/rat_func.hpp"

namespace vertexeum::oracle {

/// Coefficients of prod_{k>=1} (1 - q^k)^{-k} through q^order, by repeated
/// multiplication with geometric series.
std::vector<Integer> macmahon_counts(int order);

/// prod_{n>=1} (1 - (-q)^n)^{-n f} through q^order, each factor expanded by
/// the generalized binomial theorem.
QSeries macmahon_power(int order, const RatFunc& f);

/// (1 + q)^f by the generalized binomial theorem.
QSeries one_plus_q_power(int order, const RatFunc& f);

/// Order ideals with n boxes, found by filtering all n-subsets of the boxes
/// with x + y + z < n.
std::size_t brute_force_plane_partitions(int n);

/// Number of order ideals equal to the leg cylinders plus n extra boxes, by
/// filtering n-subsets of the off-cylinder boxes in [0, window)^3.
std::size_t brute_force_leg_count(const Legs& legs, int n, int window);

/// V = Q - Qbar/(t1 t2 t3) + Q Qbar (1-t1)(1-t2)(1-t3)/(t1 t2 t3) expanded
/// term by term over pairs of boxes.
std::map<std::array<int, 3>, long> vertex_character_expansion(const Partition3D& pi);

/// int_{P^3} c_3(T (x) K) from c(T) = (1+H)^4, c_1(K) = -4H in Z[H]/(H^4).
Integer p3_twisted_c3();

/// int c_3(T (x) K) on P^1 x P^1 x P^1 with Chern roots 2a, 2b, 2c and
/// c_1(K) = -2(a+b+c) in Z[a,b,c]/(a^2, b^2, c^2).
Integer p1cubed_twisted_c3();

/// |Aut(eta)| by counting permutations of the pair list that fix it.
Integer automorphism_count(const WeightedPartition& eta);

/// q^{1-g} (1+q)^{2g-2+d} built from binomial coefficients.
DTRational local_curve_closed_form(int g, int d);

} // namespace vertexeum::oracle

#endif
