#ifndef VERTEXEUM_HILB_HPP
#define VERTEXEUM_HILB_HPP

#include <string>
#include <utility>
#include <vector>

#include "vertexeum/rational.hpp"

namespace vertexeum {

/// Abstract cohomology classes of a surface: each label has an even degree and
/// a Poincare dual label of complementary degree (deg + deg dual = 4).
class LabelTable {
public:
    struct Label {
        std::string name;
        int degree = 0;
        int dual = 0;
    };

    explicit LabelTable(std::vector<Label> labels);
    /// n labels of degree 2, each its own dual.
    static LabelTable self_dual(int n);

    int size() const { return static_cast<int>(labels_.size()); }
    const Label& operator[](int i) const { return labels_.at(static_cast<std::size_t>(i)); }
    int dual(int i) const { return (*this)[i].dual; }

private:
    std::vector<Label> labels_;
};

/// Unordered multiset of (part, label) pairs, stored in standard order:
/// (a, i) precedes (b, j) when a > b, or a == b and i > j.
class WeightedPartition {
public:
    using Pair = std::pair<int, int>;

    WeightedPartition() = default;
    explicit WeightedPartition(std::vector<Pair> pairs);

    const std::vector<Pair>& pairs() const { return pairs_; }
    int size() const;
    int length() const { return static_cast<int>(pairs_.size()); }
    /// Product of parts times |Aut|.
    Integer zeta() const;
    WeightedPartition dual(const LabelTable& t) const;

    /// "[[2,1],[1,0]]".
    std::string to_string() const;

    auto operator<=>(const WeightedPartition&) const = default;

private:
    std::vector<Pair> pairs_;
};

/// Every weighted partition of size k over the labels of t, in descending standard order.
std::vector<WeightedPartition> weighted_partitions(int k, const LabelTable& t);

/// Integral of C_eta . C_nu over Hilb(S, k): (-1)^{k - l(eta)} / z(eta) if nu = eta dual, else 0.
Rational pairing(const WeightedPartition& eta, const WeightedPartition& nu, int k, const LabelTable& t);

struct SplittingTerm {
    WeightedPartition eta;
    WeightedPartition eta_dual;
    Rational coefficient;  ///< (-1)^{k - l(eta)} z(eta)
};

/// Class of the diagonal of Hilb(S, k) in the basis C_eta (x) C_{eta dual}.
std::vector<SplittingTerm> diagonal_splitting(int k, const LabelTable& t);

/// Product of +-1, a power of i, u, (-q)^{1/2} and q with a rational coefficient.
struct GluingMonomial {
    Rational coefficient = 1;
    int i_power = 0;
    int u_power = 0;
    int neg_q_half_power = 0;  ///< exponent of (-q)^{1/2}
    int q_power = 0;

    GluingMonomial& operator*=(const GluingMonomial& o);
    /// Absorbs even powers of i and of (-q)^{1/2} into the coefficient and q.
    GluingMonomial normalized() const;
    bool operator==(const GluingMonomial&) const = default;
    std::string to_string() const;
};

/// The gluing factor z(eta) u^{2 l(eta)} of the Gromov-Witten degeneration
/// formula carried through the relative and absolute change-of-variable
/// prefactors, with total degree d = (d1 - |eta|) + (d2 - |eta|).
GluingMonomial transported_gw_gluing(int d1, int d2, const WeightedPartition& eta);

/// (-1)^{|eta| - l(eta) + sign_shift} z(eta) / q^{|eta|}.
GluingMonomial dt_gluing(const WeightedPartition& eta, int sign_shift = 0);

/// True when the transported GW gluing factor equals the DT gluing factor.
/// A nonzero sign_shift perturbs the DT sign (used to confirm the check can fail).
bool degeneration_consistency(int d1, int d2, const WeightedPartition& eta, int sign_shift = 0);

} // namespace vertexeum

#endif
