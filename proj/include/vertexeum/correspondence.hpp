#ifndef VERTEXEUM_CORRESPONDENCE_HPP
#define VERTEXEUM_CORRESPONDENCE_HPP

#include <string>
#include <vector>

#include "vertexeum/hilb.hpp"
#include "vertexeum/rational.hpp"

namespace vertexeum {

/// a + b i with rational a, b.
struct GaussRat {
    Rational re = 0;
    Rational im = 0;

    GaussRat() = default;
    GaussRat(const Rational& r) : re(r) {}  // NOLINT: implicit real
    GaussRat(int r) : re(r) {}              // NOLINT
    GaussRat(const Rational& r, const Rational& i) : re(r), im(i) {}
    static GaussRat i() { return {0, 1}; }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }
    GaussRat conj() const { return {re, -im}; }

    friend GaussRat operator+(const GaussRat& a, const GaussRat& b) { return {a.re + b.re, a.im + b.im}; }
    friend GaussRat operator-(const GaussRat& a, const GaussRat& b) { return {a.re - b.re, a.im - b.im}; }
    friend GaussRat operator-(const GaussRat& a) { return {-a.re, -a.im}; }
    friend GaussRat operator*(const GaussRat& a, const GaussRat& b)
    {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussRat operator/(const GaussRat& a, const GaussRat& b);
    GaussRat pow(int n) const;
    bool operator==(const GaussRat& o) const { return re == o.re && im == o.im; }

    std::string to_string() const;
};

/// Dense univariate polynomial over Q(i), coefficients in ascending degree, no trailing zeros.
class GPoly {
public:
    GPoly() = default;
    explicit GPoly(std::vector<GaussRat> coeffs);
    static GPoly monomial(int degree, const GaussRat& c);

    const std::vector<GaussRat>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const GaussRat& leading() const { return c_.back(); }
    /// Smallest exponent with a nonzero coefficient.
    int valuation() const;
    GaussRat coefficient(int k) const;

    friend GPoly operator+(const GPoly& a, const GPoly& b);
    friend GPoly operator-(const GPoly& a, const GPoly& b);
    friend GPoly operator*(const GPoly& a, const GPoly& b);
    friend GPoly operator*(const GaussRat& s, const GPoly& p);
    /// Quotient and remainder.
    static std::pair<GPoly, GPoly> divmod(const GPoly& a, const GPoly& b);
    /// Monic gcd (zero only if both are zero).
    static GPoly gcd(GPoly a, GPoly b);
    GPoly shifted_down(int k) const;
    GPoly shifted_up(int k) const;
    bool operator==(const GPoly&) const = default;

    std::string to_string(const std::string& var) const;

private:
    void trim();
    std::vector<GaussRat> c_;
};

/// y^shift * num(y) / den(y) in lowest terms: num(0), den(0) nonzero, den monic.
class YRational {
public:
    YRational() : YRational(GaussRat(1)) {}
    YRational(const GaussRat& c);  // NOLINT: implicit constant
    YRational(int shift, GPoly num, GPoly den);
    static YRational y_power(int k) { return YRational(k, GPoly::monomial(0, 1), GPoly::monomial(0, 1)); }

    int shift() const { return shift_; }
    const GPoly& num() const { return num_; }
    const GPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    friend YRational operator+(const YRational& a, const YRational& b);
    friend YRational operator*(const YRational& a, const YRational& b);
    YRational inverse() const;
    YRational pow(int n) const;
    bool operator==(const YRational&) const = default;

    std::string to_string() const;

private:
    int shift_ = 0;
    GPoly num_;
    GPoly den_;
};

/// scalar * u^u_power * f(y) with y = e^{iu/2}. In normal form f has monic
/// numerator and denominator, and the leading coefficient lives in `scalar`.
class TrigExpr {
public:
    TrigExpr() = default;
    TrigExpr(int u_power, GaussRat scalar, YRational y);

    static TrigExpr constant(const GaussRat& c) { return TrigExpr(0, c, YRational()); }
    static TrigExpr u(int n) { return TrigExpr(n, 1, YRational()); }
    /// sin(u/2) = (y - 1/y) / (2i).
    static TrigExpr sin_half();
    /// cos(u/2) = (y + 1/y) / 2.
    static TrigExpr cos_half();

    int u_power() const { return u_power_; }
    const GaussRat& scalar() const { return scalar_; }
    const YRational& y_expr() const { return y_; }

    friend TrigExpr operator*(const TrigExpr& a, const TrigExpr& b);
    TrigExpr pow(int n) const;
    bool operator==(const TrigExpr&) const = default;

    std::string to_string() const;

private:
    int u_power_ = 0;
    GaussRat scalar_ = 1;
    YRational y_;
};

/// q^shift * num(q) / den(q) over Q in lowest terms: num(0), den(0) nonzero, den monic.
class DTRational {
public:
    DTRational() : DTRational(0, {Rational(0)}, {Rational(1)}) {}
    DTRational(int shift, std::vector<Rational> num, std::vector<Rational> den);

    int shift() const { return shift_; }
    const std::vector<Rational>& num() const { return num_; }
    const std::vector<Rational>& den() const { return den_; }
    bool is_zero() const { return num_.empty(); }
    /// Lowest power of q in the Laurent expansion at q = 0.
    int lowest_power() const { return shift_; }
    /// Coefficient of q^n in the expansion at q = 0.
    Rational series_coefficient(int n) const;

    bool operator==(const DTRational&) const = default;
    /// e.g. "(q)/(1 + q)" or "1/2*q - 1/2*q^3".
    std::string to_string() const;

private:
    int shift_ = 0;
    std::vector<Rational> num_;
    std::vector<Rational> den_;
};

/// Multiplies by (-iu)^{d - sum_k} and (-q)^{d/2} = y^d, then substitutes
/// y^2 = -q. Throws MathError if a power of u survives, an odd power of y
/// survives, or the result is not real.
DTRational gw_to_dt(const TrigExpr& e, int d, int sum_k);

/// (sin(u/2) / (u/2))^{2g-2+d} u^{2g-2}.
TrigExpr gw_local_curve(int g, int d);

/// The predicted local DT series: gw_to_dt(gw_local_curve(g, d), d, 0).
DTRational dt_local_curve(int g, int d);

/// (sin(u/2) / (u/2)) cos(u/2) u^{-2}, the line class series on P^3 with
/// insertions tau_0(L) tau_1(P); d = 4, sum_k = 1.
TrigExpr p3_line_gw();
DTRational p3_example();

/// The relative series z(eta)^{-1} u^{-2 l(eta)} between dual boundary
/// conditions, transformed with d = 2m.
DTRational relative_example(int m, const WeightedPartition& eta);

} // namespace vertexeum

#endif
