#include "vertexeum/correspondence.hpp"

#include <algorithm>

namespace vertexeum {

GaussRat operator/(const GaussRat& a, const GaussRat& b)
{
    if (b.is_zero()) throw MathError("division by zero in Q(i)");
    Rational n = b.re * b.re + b.im * b.im;
    GaussRat p = a * b.conj();
    return {p.re / n, p.im / n};
}

GaussRat GaussRat::pow(int n) const
{
    if (n < 0) return GaussRat(1) / pow(-n);
    GaussRat out(1);
    for (int k = 0; k < n; ++k) out = out * *this;
    return out;
}

std::string GaussRat::to_string() const
{
    auto imag = [](const Rational& b) {
        if (b == 1) return std::string("i");
        if (b == -1) return std::string("-i");
        return vertexeum::to_string(b) + "*i";
    };
    if (im == 0) return vertexeum::to_string(re);
    if (re == 0) return imag(im);
    std::string s = vertexeum::to_string(re);
    return "(" + s + (im > 0 ? "+" : "") + imag(im) + ")";
}

// GPoly -----------------------------------------------------------------------

GPoly::GPoly(std::vector<GaussRat> coeffs) : c_(std::move(coeffs)) { trim(); }

GPoly GPoly::monomial(int degree, const GaussRat& c)
{
    std::vector<GaussRat> v(static_cast<std::size_t>(degree) + 1);
    v.back() = c;
    return GPoly(std::move(v));
}

void GPoly::trim()
{
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

int GPoly::valuation() const
{
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (!c_[k].is_zero()) return static_cast<int>(k);
    }
    return 0;
}

GaussRat GPoly::coefficient(int k) const
{
    if (k < 0 || k >= static_cast<int>(c_.size())) return {};
    return c_[static_cast<std::size_t>(k)];
}

GPoly operator+(const GPoly& a, const GPoly& b)
{
    std::vector<GaussRat> v(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < a.c_.size(); ++k) v[k] = v[k] + a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k) v[k] = v[k] + b.c_[k];
    return GPoly(std::move(v));
}

GPoly operator-(const GPoly& a, const GPoly& b) { return a + GaussRat(-1) * b; }

GPoly operator*(const GPoly& a, const GPoly& b)
{
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<GaussRat> v(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] = v[i + j] + a.c_[i] * b.c_[j];
    }
    return GPoly(std::move(v));
}

GPoly operator*(const GaussRat& s, const GPoly& p)
{
    std::vector<GaussRat> v = p.c_;
    for (auto& c : v) c = s * c;
    return GPoly(std::move(v));
}

std::pair<GPoly, GPoly> GPoly::divmod(const GPoly& a, const GPoly& b)
{
    if (b.is_zero()) throw MathError("polynomial division by zero");
    GPoly r = a;
    std::vector<GaussRat> q(static_cast<std::size_t>(std::max(0, a.degree() - b.degree() + 1)));
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int shift = r.degree() - b.degree();
        GaussRat c = r.leading() / b.leading();
        q[static_cast<std::size_t>(shift)] = c;
        r = r - GPoly::monomial(shift, c) * b;
    }
    return {GPoly(std::move(q)), r};
}

GPoly GPoly::gcd(GPoly a, GPoly b)
{
    while (!b.is_zero()) {
        GPoly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return (GaussRat(1) / a.leading()) * a;
}

GPoly GPoly::shifted_down(int k) const
{
    if (k < 0) return shifted_up(-k);
    if (k == 0) return *this;
    if (k > static_cast<int>(c_.size())) return {};
    return GPoly(std::vector<GaussRat>(c_.begin() + k, c_.end()));
}

GPoly GPoly::shifted_up(int k) const
{
    if (k < 0) return shifted_down(-k);
    if (k == 0 || is_zero()) return *this;
    std::vector<GaussRat> v(static_cast<std::size_t>(k));
    v.insert(v.end(), c_.begin(), c_.end());
    return GPoly(std::move(v));
}

std::string GPoly::to_string(const std::string& var) const
{
    if (c_.empty()) return "0";
    std::string s;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        const GaussRat& c = c_[k];
        if (c.is_zero()) continue;
        std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
        bool negative = c.is_real() && c.re < 0;
        GaussRat mag = negative ? -c : c;
        std::string coef;
        if (mono.empty()) {
            coef = mag.to_string();
        } else if (mag == GaussRat(1)) {
            coef = mono;
        } else {
            coef = mag.to_string() + "*" + mono;
        }
        if (s.empty()) {
            s = negative ? "-" + coef : coef;
        } else {
            s += negative ? " - " : " + ";
            s += coef;
        }
    }
    return s;
}

// YRational -------------------------------------------------------------------

YRational::YRational(const GaussRat& c) : YRational(0, GPoly::monomial(0, c), GPoly::monomial(0, 1)) {}

YRational::YRational(int shift, GPoly num, GPoly den) : shift_(shift), num_(std::move(num)), den_(std::move(den))
{
    if (den_.is_zero()) throw MathError("rational function in y with zero denominator");
    if (num_.is_zero()) {
        shift_ = 0;
        den_ = GPoly::monomial(0, 1);
        return;
    }
    int vn = num_.valuation();
    int vd = den_.valuation();
    num_ = num_.shifted_down(vn);
    den_ = den_.shifted_down(vd);
    shift_ += vn - vd;
    GPoly g = GPoly::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = GPoly::divmod(num_, g).first;
        den_ = GPoly::divmod(den_, g).first;
    }
    GaussRat lc = GaussRat(1) / den_.leading();
    num_ = lc * num_;
    den_ = lc * den_;
}

YRational operator+(const YRational& a, const YRational& b)
{
    int s = std::min(a.shift_, b.shift_);
    GPoly num = a.num_.shifted_up(a.shift_ - s) * b.den_ + b.num_.shifted_up(b.shift_ - s) * a.den_;
    return YRational(s, std::move(num), a.den_ * b.den_);
}

YRational operator*(const YRational& a, const YRational& b)
{
    return YRational(a.shift_ + b.shift_, a.num_ * b.num_, a.den_ * b.den_);
}

YRational YRational::inverse() const
{
    if (is_zero()) throw MathError("inverse of zero in Q(i)(y)");
    return YRational(-shift_, den_, num_);
}

YRational YRational::pow(int n) const
{
    if (n < 0) return inverse().pow(-n);
    YRational out;
    for (int k = 0; k < n; ++k) out = out * *this;
    return out;
}

std::string YRational::to_string() const
{
    std::string n = num_.to_string("y");
    if (shift_ != 0) {
        std::string y = shift_ == 1 ? "y" : "y^" + std::to_string(shift_);
        n = num_ == GPoly::monomial(0, 1) ? y : y + "*(" + n + ")";
    }
    if (den_ == GPoly::monomial(0, 1)) return n;
    return "(" + n + ")/(" + den_.to_string("y") + ")";
}

// TrigExpr --------------------------------------------------------------------

TrigExpr::TrigExpr(int u_power, GaussRat scalar, YRational y)
    : u_power_(u_power), scalar_(std::move(scalar)), y_(std::move(y))
{
    if (scalar_.is_zero() || y_.is_zero()) {
        *this = TrigExpr();
        scalar_ = 0;
        return;
    }
    GaussRat lead = y_.num().leading();
    scalar_ = scalar_ * lead;
    y_ = y_ * YRational(GaussRat(1) / lead);
}

TrigExpr TrigExpr::sin_half()
{
    return TrigExpr(0, GaussRat(1) / GaussRat(0, 2), YRational(-1, GPoly({-1, 0, 1}), GPoly({1})));
}

TrigExpr TrigExpr::cos_half()
{
    return TrigExpr(0, GaussRat(Rational(1, 2)), YRational(-1, GPoly({1, 0, 1}), GPoly({1})));
}

TrigExpr operator*(const TrigExpr& a, const TrigExpr& b)
{
    return TrigExpr(a.u_power_ + b.u_power_, a.scalar_ * b.scalar_, a.y_ * b.y_);
}

TrigExpr TrigExpr::pow(int n) const
{
    if (n < 0) {
        if (scalar_.is_zero()) throw MathError("inverse of zero expression");
        return TrigExpr(-u_power_, GaussRat(1) / scalar_, y_.inverse()).pow(-n);
    }
    TrigExpr out = constant(1);
    for (int k = 0; k < n; ++k) out = out * *this;
    return out;
}

std::string TrigExpr::to_string() const
{
    std::string s = scalar_.to_string();
    if (u_power_ != 0) s += "*u^" + std::to_string(u_power_);
    if (!(y_ == YRational())) s += "*" + y_.to_string();
    return s;
}

// DTRational ------------------------------------------------------------------

namespace {

GPoly real_poly(const std::vector<Rational>& c)
{
    std::vector<GaussRat> v;
    for (const auto& r : c) v.emplace_back(r);
    return GPoly(std::move(v));
}

std::vector<Rational> real_parts(const GPoly& p)
{
    std::vector<Rational> out;
    for (const auto& c : p.coeffs()) {
        if (!c.is_real()) throw MathError("DT series has a nonzero imaginary part");
        out.push_back(c.re);
    }
    return out;
}

// Replaces y^2 by -q in a polynomial with only even powers of y.
GPoly y_squared_to_minus_q(const GPoly& p)
{
    std::vector<GaussRat> v;
    for (int k = 0; k <= p.degree(); ++k) {
        const GaussRat c = p.coefficient(k);
        if (k % 2 != 0) {
            if (!c.is_zero()) throw MathError("odd power of y survives; the result is not a function of q");
            continue;
        }
        v.push_back((k / 2) % 2 == 0 ? c : -c);
    }
    return GPoly(std::move(v));
}

} // namespace

DTRational::DTRational(int shift, std::vector<Rational> num, std::vector<Rational> den)
{
    YRational r(shift, real_poly(num), real_poly(den));
    shift_ = r.shift();
    num_ = real_parts(r.num());
    den_ = real_parts(r.den());
}

Rational DTRational::series_coefficient(int n) const
{
    int m = n - shift_;
    if (m < 0 || num_.empty()) return 0;
    // num = den * f, solved term by term.
    std::vector<Rational> f(static_cast<std::size_t>(m) + 1);
    for (int k = 0; k <= m; ++k) {
        Rational acc = k < static_cast<int>(num_.size()) ? num_[static_cast<std::size_t>(k)] : Rational(0);
        for (int j = 1; j <= k && j < static_cast<int>(den_.size()); ++j) {
            acc -= den_[static_cast<std::size_t>(j)] * f[static_cast<std::size_t>(k - j)];
        }
        f[static_cast<std::size_t>(k)] = acc / den_[0];
    }
    return f.back();
}

std::string DTRational::to_string() const
{
    if (num_.empty()) return "0";
    GPoly n = real_poly(num_).shifted_up(std::max(shift_, 0));
    GPoly d = real_poly(den_).shifted_up(std::max(-shift_, 0));
    if (d == GPoly::monomial(0, 1)) return n.to_string("q");
    return "(" + n.to_string("q") + ")/(" + d.to_string("q") + ")";
}

// Transforms ------------------------------------------------------------------

DTRational gw_to_dt(const TrigExpr& e, int d, int sum_k)
{
    const int n = d - sum_k;
    if (e.scalar().is_zero()) return DTRational();
    if (e.u_power() + n != 0) {
        throw MathError("a power u^" + std::to_string(e.u_power() + n) +
                        " survives the prefactor; only pure y-expressions can be converted");
    }
    GaussRat scalar = e.scalar() * GaussRat(0, -1).pow(n);
    YRational f = e.y_expr() * YRational::y_power(d);
    if (f.shift() % 2 != 0) throw MathError("odd power of y survives; the result is not a function of q");
    GPoly num = scalar * y_squared_to_minus_q(f.num());
    GPoly den = y_squared_to_minus_q(f.den());
    int q_shift = f.shift() / 2;
    if (q_shift % 2 != 0) num = GaussRat(-1) * num;
    YRational in_q(q_shift, num, den);
    return DTRational(in_q.shift(), real_parts(in_q.num()), real_parts(in_q.den()));
}

TrigExpr gw_local_curve(int g, int d)
{
    TrigExpr sinc = TrigExpr::sin_half() * TrigExpr::constant(2) * TrigExpr::u(-1);
    return sinc.pow(2 * g - 2 + d) * TrigExpr::u(2 * g - 2);
}

DTRational dt_local_curve(int g, int d) { return gw_to_dt(gw_local_curve(g, d), d, 0); }

TrigExpr p3_line_gw()
{
    TrigExpr sinc = TrigExpr::sin_half() * TrigExpr::constant(2) * TrigExpr::u(-1);
    return sinc * TrigExpr::cos_half() * TrigExpr::u(-2);
}

DTRational p3_example() { return gw_to_dt(p3_line_gw(), 4, 1); }

DTRational relative_example(int m, const WeightedPartition& eta)
{
    if (eta.size() != m) throw InvalidArgument("relative_example needs |eta| = m");
    const int l = eta.length();
    TrigExpr gw = TrigExpr::constant(Rational(Rational(1) / Rational(eta.zeta()))) * TrigExpr::u(-2 * l);
    // (-iu)^{d - 2m + l(eta) + l(eta dual)} with d = 2m and l(eta dual) = l(eta).
    return gw_to_dt(gw, 2 * m, 2 * m - 2 * l);
}

} // namespace vertexeum
