#ifndef VERTEXEUM_MULTI_POLY_HPP
#define VERTEXEUM_MULTI_POLY_HPP

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>

#include "vertexeum/linear_form.hpp"
#include "vertexeum/rational.hpp"

namespace vertexeum {

/// Exponents of s1, s2, s3 in a monomial.
using Exponents = std::array<int, 3>;

/// Sparse polynomial in s1, s2, s3 with exact rational coefficients.
///
/// Terms are kept in lexicographically descending exponent order
/// (s1 > s2 > s3), which is also the order used for exact division.
class MultiPoly {
public:
    using TermMap = std::map<Exponents, Rational, std::greater<Exponents>>;

    MultiPoly() = default;
    MultiPoly(const Rational& c);                    // NOLINT: implicit constant
    MultiPoly(int c) : MultiPoly(Rational(c)) {}     // NOLINT
    explicit MultiPoly(const LinearForm& f);

    static MultiPoly variable(int i);
    static MultiPoly monomial(const Exponents& e, const Rational& c);

    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Coefficient of the constant monomial.
    Rational constant() const;
    Rational coefficient(const Exponents& e) const;
    int total_degree() const;
    int degree_in(int var) const;
    /// True when every term has the same total degree.
    bool is_homogeneous() const;

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const Rational& c);
    /// Adds c * m * o where m is the monomial with exponents e.
    void add_scaled(const MultiPoly& o, const Rational& c, const Exponents& e);

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator-(MultiPoly a) { return a *= Rational(-1); }
    friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);

    /// Multiplies by an integer linear form (fast path used when clearing denominators).
    MultiPoly times(const LinearForm& f) const;
    MultiPoly pow(int n) const;

    /// Exact division; empty when d does not divide *this.
    std::optional<MultiPoly> divide_exact(const MultiPoly& d) const;
    std::optional<MultiPoly> divide_exact(const LinearForm& f) const;

    /// If this is a nonzero homogeneous linear polynomial, returns (scalar, canonical form).
    std::optional<std::pair<Rational, LinearForm>> as_linear_form() const;

    bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }

    /// Expanded form, highest lex term first: "2*s1^2*s3 - 1/3*s2 + 5".
    std::string to_string() const;

private:
    TermMap terms_;
};

} // namespace vertexeum

#endif
