#ifndef VERTEXEUM_RAT_FUNC_HPP
#define VERTEXEUM_RAT_FUNC_HPP

#include <map>
#include <span>
#include <string>

#include "vertexeum/linear_form.hpp"
#include "vertexeum/multi_poly.hpp"
#include "vertexeum/rational.hpp"

namespace vertexeum {

/// Product of canonical linear forms raised to positive powers.
using FormPowers = std::map<LinearForm, int>;

/// Rational function in s1, s2, s3 whose denominator is a product of linear forms.
///
/// Normal form: the denominator scalar is folded into the numerator, every
/// denominator form is canonical with a positive exponent, and no denominator
/// form divides the numerator. The normal form is unique, so equality is
/// structural.
class RatFunc {
public:
    RatFunc() = default;
    RatFunc(const Rational& c) : num_(c) {}    // NOLINT: implicit constant
    RatFunc(int c) : num_(Rational(c)) {}       // NOLINT
    RatFunc(MultiPoly num) : num_(std::move(num)) {}  // NOLINT

    /// num / (scalar * prod forms^exp); forms need not be canonical.
    RatFunc(MultiPoly num, const Rational& den_scalar, const std::map<LinearForm, int>& den);

    static RatFunc variable(int i) { return RatFunc(MultiPoly::variable(i)); }
    static RatFunc form(const LinearForm& f) { return RatFunc(MultiPoly(f)); }
    /// Builds from parts already known to be in normal form (no trial division).
    static RatFunc from_normalized(MultiPoly num, FormPowers den);

    const MultiPoly& numerator() const { return num_; }
    const FormPowers& denominator() const { return den_; }
    MultiPoly denominator_poly() const;

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return den_.empty() && num_.is_constant(); }
    /// Total degree of numerator minus denominator; requires homogeneity to be meaningful.
    int degree() const;

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }

    RatFunc pow(int n) const;

    /// Exact sum of many terms over a single common denominator.
    static RatFunc sum(std::span<const RatFunc> terms);

    /// Substitutes variables (index 0..2 for s1..s3). Throws MathError when a
    /// denominator form vanishes identically under the substitution.
    RatFunc specialize(const std::map<int, RatFunc>& subst) const;

    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }

    /// Canonical text: "N" or "(N)/(F1^e1*F2*...)" with forms in display order.
    std::string to_string() const;
    /// Inverse of to_string.
    static RatFunc parse(const std::string& text);

private:
    void normalize();

    MultiPoly num_;
    FormPowers den_;
};

/// Equality decided by cross-multiplication a.num * b.den == b.num * a.den.
bool equal_by_cross_multiplication(const RatFunc& a, const RatFunc& b);

} // namespace vertexeum

#endif
