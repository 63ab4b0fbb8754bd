#ifndef VERTEXEUM_MEASURE_HPP
#define VERTEXEUM_MEASURE_HPP

#include <array>
#include <map>
#include <string>

#include "vertexeum/character.hpp"
#include "vertexeum/linear_form.hpp"
#include "vertexeum/rat_func.hpp"
#include "vertexeum/rational.hpp"

namespace vertexeum {

/// scalar * prod form^exponent over canonical linear forms, exponents nonzero.
class FactoredMeasure {
public:
    FactoredMeasure() = default;
    FactoredMeasure(Rational scalar, std::map<LinearForm, int> factors);

    const Rational& scalar() const { return scalar_; }
    const std::map<LinearForm, int>& factors() const { return factors_; }
    int exponent_of(const LinearForm& f) const;
    /// Sum of all exponents, i.e. the homogeneous degree in s.
    int total_degree() const;

    friend FactoredMeasure operator*(const FactoredMeasure& a, const FactoredMeasure& b);
    bool operator==(const FactoredMeasure&) const = default;

    /// Permutes s-variables: s_i is replaced by s_{perm[i]}.
    FactoredMeasure permuted(const std::array<int, 3>& perm) const;

    RatFunc to_ratfunc() const;
    /// e.g. "(s1+s2)*(s1+s3)*(s2+s3)*s1^-1*s2^-1*s3^-1".
    std::string to_string() const;

private:
    Rational scalar_ = 1;
    std::map<LinearForm, int> factors_;
};

/// prod_k (s,k)^{-v_k}. Throws MathError if the constant term v_0 is nonzero.
FactoredMeasure measure_from_character(const LaurentCharacter& v);

} // namespace vertexeum

#endif
