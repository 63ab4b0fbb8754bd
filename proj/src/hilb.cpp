#include "vertexeum/hilb.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace vertexeum {

namespace {

int mod(int a, int m) { return ((a % m) + m) % m; }

Rational sign(int e) { return mod(e, 2) == 0 ? Rational(1) : Rational(-1); }

// (-i u)^e
GluingMonomial minus_iu(int e)
{
    GluingMonomial m;
    m.coefficient = sign(e);
    m.i_power = e;
    m.u_power = e;
    return m;
}

// (-q)^{h/2}
GluingMonomial minus_q_half(int h)
{
    GluingMonomial m;
    m.neg_q_half_power = h;
    return m;
}

} // namespace

LabelTable::LabelTable(std::vector<Label> labels) : labels_(std::move(labels))
{
    const int n = size();
    for (int i = 0; i < n; ++i) {
        const Label& l = labels_[static_cast<std::size_t>(i)];
        if (l.degree % 2 != 0 || l.degree < 0 || l.degree > 4) {
            throw InvalidArgument("label '" + l.name + "' must have even degree in [0, 4]");
        }
        if (l.dual < 0 || l.dual >= n) throw InvalidArgument("label '" + l.name + "' has an out-of-range dual");
        const Label& d = labels_[static_cast<std::size_t>(l.dual)];
        if (d.dual != i) throw InvalidArgument("dual map is not an involution at label '" + l.name + "'");
        if (l.degree + d.degree != 4) {
            throw InvalidArgument("label '" + l.name + "' and its dual do not have complementary degrees");
        }
    }
}

LabelTable LabelTable::self_dual(int n)
{
    std::vector<Label> labels;
    for (int i = 0; i < n; ++i) labels.push_back({"d" + std::to_string(i), 2, i});
    return LabelTable(std::move(labels));
}

WeightedPartition::WeightedPartition(std::vector<Pair> pairs) : pairs_(std::move(pairs))
{
    for (const auto& [part, label] : pairs_) {
        if (part <= 0) throw InvalidArgument("weighted partition parts must be positive");
        if (label < 0) throw InvalidArgument("weighted partition labels must be nonnegative");
    }
    std::sort(pairs_.begin(), pairs_.end(), std::greater<>());
}

int WeightedPartition::size() const
{
    int s = 0;
    for (const auto& p : pairs_) s += p.first;
    return s;
}

Integer WeightedPartition::zeta() const
{
    Integer z = 1;
    std::map<Pair, int> mult;
    for (const auto& p : pairs_) {
        z *= p.first;
        ++mult[p];
    }
    for (const auto& [p, m] : mult) {
        Integer f;
        mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(m));
        z *= f;
    }
    return z;
}

WeightedPartition WeightedPartition::dual(const LabelTable& t) const
{
    std::vector<Pair> out;
    for (const auto& [part, label] : pairs_) {
        if (label >= t.size()) throw InvalidArgument("label " + std::to_string(label) + " is not in the table");
        out.emplace_back(part, t.dual(label));
    }
    return WeightedPartition(std::move(out));
}

std::string WeightedPartition::to_string() const
{
    std::string s = "[";
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
        if (i) s += ",";
        s += "[" + std::to_string(pairs_[i].first) + "," + std::to_string(pairs_[i].second) + "]";
    }
    return s + "]";
}

std::vector<WeightedPartition> weighted_partitions(int k, const LabelTable& t)
{
    if (k < 0) throw InvalidArgument("weighted partition size must be nonnegative");
    std::vector<WeightedPartition> out;
    std::vector<WeightedPartition::Pair> current;
    const int labels = t.size();
    std::function<void(int, WeightedPartition::Pair)> rec = [&](int rest, WeightedPartition::Pair bound) {
        if (rest == 0) {
            out.emplace_back(current);
            return;
        }
        for (int part = std::min(rest, bound.first); part >= 1; --part) {
            int top = part == bound.first ? bound.second : labels - 1;
            for (int label = top; label >= 0; --label) {
                current.emplace_back(part, label);
                rec(rest - part, {part, label});
                current.pop_back();
            }
        }
    };
    if (labels > 0 || k == 0) rec(k, {k, labels - 1});
    return out;
}

Rational pairing(const WeightedPartition& eta, const WeightedPartition& nu, int k, const LabelTable& t)
{
    if (eta.size() != k || nu.size() != k) throw InvalidArgument("pairing needs two weighted partitions of size k");
    if (nu != eta.dual(t)) return 0;
    return sign(k - eta.length()) / Rational(eta.zeta());
}

std::vector<SplittingTerm> diagonal_splitting(int k, const LabelTable& t)
{
    std::vector<SplittingTerm> out;
    for (auto& eta : weighted_partitions(k, t)) {
        Rational c = sign(k - eta.length()) * Rational(eta.zeta());
        WeightedPartition d = eta.dual(t);
        out.push_back({std::move(eta), std::move(d), c});
    }
    return out;
}

GluingMonomial& GluingMonomial::operator*=(const GluingMonomial& o)
{
    coefficient *= o.coefficient;
    i_power += o.i_power;
    u_power += o.u_power;
    neg_q_half_power += o.neg_q_half_power;
    q_power += o.q_power;
    return *this;
}

GluingMonomial GluingMonomial::normalized() const
{
    GluingMonomial m = *this;
    int ip = mod(m.i_power, 4);
    if (ip % 2 == 0) {
        if (ip == 2) m.coefficient = -m.coefficient;
        ip = 0;
    }
    m.i_power = ip;
    if (m.neg_q_half_power % 2 == 0) {
        int h = m.neg_q_half_power / 2;
        m.coefficient *= sign(h);
        m.q_power += h;
        m.neg_q_half_power = 0;
    }
    return m;
}

std::string GluingMonomial::to_string() const
{
    std::string s = vertexeum::to_string(coefficient);
    if (i_power) s += "*i^" + std::to_string(i_power);
    if (u_power) s += "*u^" + std::to_string(u_power);
    if (neg_q_half_power) s += "*(-q)^(" + std::to_string(neg_q_half_power) + "/2)";
    if (q_power) s += "*q^" + std::to_string(q_power);
    return s;
}

GluingMonomial transported_gw_gluing(int d1, int d2, const WeightedPartition& eta)
{
    const int k = eta.size();
    const int l = eta.length();
    const int d = (d1 - k) + (d2 - k);

    // (-iu)^{d_i + l - k} Z_GW(X_i/S) = (-q)^{-d_i/2} Z_DT(X_i/S)
    // (-iu)^{d} Z_GW(X) = (-q)^{-d/2} Z_DT(X)
    GluingMonomial m;
    m.coefficient = Rational(eta.zeta());
    m.u_power = 2 * l;
    m *= minus_q_half(d);
    m *= minus_iu(d);
    m *= minus_iu(-(d1 + l - k));
    m *= minus_q_half(-d1);
    m *= minus_iu(-(d2 + l - k));
    m *= minus_q_half(-d2);
    return m.normalized();
}

GluingMonomial dt_gluing(const WeightedPartition& eta, int sign_shift)
{
    GluingMonomial m;
    m.coefficient = sign(eta.size() - eta.length() + sign_shift) * Rational(eta.zeta());
    m.q_power = -eta.size();
    return m;
}

bool degeneration_consistency(int d1, int d2, const WeightedPartition& eta, int sign_shift)
{
    return transported_gw_gluing(d1, d2, eta) == dt_gluing(eta, sign_shift).normalized();
}

} // namespace vertexeum
