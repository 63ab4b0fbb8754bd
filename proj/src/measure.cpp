#include "vertexeum/measure.hpp"

namespace vertexeum {

FactoredMeasure::FactoredMeasure(Rational scalar, std::map<LinearForm, int> factors)
    : scalar_(std::move(scalar))
{
    if (scalar_ == 0) throw InvalidArgument("factored measure with zero scalar");
    for (const auto& [f, e] : factors) {
        if (e == 0) continue;
        auto [c, canon] = LinearForm::canonicalize(f.coeffs());
        scalar_ *= pow(Rational(static_cast<long>(c)), e);
        factors_[canon] += e;
    }
    std::erase_if(factors_, [](const auto& kv) { return kv.second == 0; });
}

int FactoredMeasure::exponent_of(const LinearForm& f) const
{
    auto it = factors_.find(f);
    return it == factors_.end() ? 0 : it->second;
}

int FactoredMeasure::total_degree() const
{
    int d = 0;
    for (const auto& [f, e] : factors_) d += e;
    return d;
}

FactoredMeasure operator*(const FactoredMeasure& a, const FactoredMeasure& b)
{
    FactoredMeasure out;
    out.scalar_ = a.scalar_ * b.scalar_;
    out.factors_ = a.factors_;
    for (const auto& [f, e] : b.factors_) out.factors_[f] += e;
    std::erase_if(out.factors_, [](const auto& kv) { return kv.second == 0; });
    return out;
}

FactoredMeasure FactoredMeasure::permuted(const std::array<int, 3>& perm) const
{
    std::map<LinearForm, int> moved;
    for (const auto& [f, e] : factors_) {
        Weight w{};
        for (std::size_t i = 0; i < 3; ++i) w[static_cast<std::size_t>(perm[i])] = f[i];
        moved[LinearForm(w)] += e;
    }
    return FactoredMeasure(scalar_, moved);
}

RatFunc FactoredMeasure::to_ratfunc() const
{
    MultiPoly num(scalar_);
    FormPowers den;
    for (const auto& [f, e] : factors_) {
        if (e > 0) {
            for (int k = 0; k < e; ++k) num = num.times(f);
        } else {
            den[f] = -e;
        }
    }
    // Distinct canonical forms are pairwise coprime, so this is already normal.
    return RatFunc::from_normalized(std::move(num), std::move(den));
}

std::string FactoredMeasure::to_string() const
{
    std::string out;
    if (scalar_ != 1 || factors_.empty()) out = scalar_.get_str();
    for (const auto& [f, e] : factors_) {
        if (!out.empty()) out += "*";
        bool single = (f[0] != 0) + (f[1] != 0) + (f[2] != 0) == 1;
        out += single ? f.to_string() : "(" + f.to_string() + ")";
        if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
}

FactoredMeasure measure_from_character(const LaurentCharacter& v)
{
    if (v.constant_term() != 0) {
        throw MathError("character has a nonzero constant term; (s,0)^{-v_0} is undefined");
    }
    Rational scalar = 1;
    std::map<LinearForm, int> factors;
    for (const auto& [k, c] : v.terms()) {
        auto [s, form] = LinearForm::canonicalize(k);
        if (c > static_cast<std::int64_t>(INT32_MAX) || c < -static_cast<std::int64_t>(INT32_MAX)) {
            throw MathError("character coefficient too large for a measure exponent");
        }
        int e = -static_cast<int>(c);
        scalar *= pow(Rational(static_cast<long>(s)), e);
        factors[form] += e;
    }
    std::erase_if(factors, [](const auto& kv) { return kv.second == 0; });
    return FactoredMeasure(scalar, factors);
}

} // namespace vertexeum
