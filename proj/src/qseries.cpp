#include "vertexeum/qseries.hpp"

#include <algorithm>

namespace vertexeum {

QSeries::QSeries(int order)
{
    if (order < 0) throw InvalidArgument("series order must be nonnegative");
    coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

QSeries::QSeries(std::vector<RatFunc> coefficients) : coeffs_(std::move(coefficients))
{
    if (coeffs_.empty()) throw InvalidArgument("series needs at least the constant coefficient");
}

QSeries QSeries::one(int order)
{
    QSeries s(order);
    s.coeffs_[0] = RatFunc(1);
    return s;
}

QSeries QSeries::truncated(int order) const
{
    if (order > this->order()) throw InvalidArgument("cannot extend a truncated series");
    return QSeries(std::vector<RatFunc>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

QSeries operator+(const QSeries& a, const QSeries& b)
{
    QSeries out(std::min(a.order(), b.order()));
    for (int n = 0; n <= out.order(); ++n) out[n] = a[n] + b[n];
    return out;
}

QSeries operator-(const QSeries& a, const QSeries& b)
{
    QSeries out(std::min(a.order(), b.order()));
    for (int n = 0; n <= out.order(); ++n) out[n] = a[n] - b[n];
    return out;
}

QSeries operator*(const QSeries& a, const QSeries& b)
{
    QSeries out(std::min(a.order(), b.order()));
    std::vector<RatFunc> terms;
    for (int n = 0; n <= out.order(); ++n) {
        terms.clear();
        for (int k = 0; k <= n; ++k) {
            if (a[k].is_zero() || b[n - k].is_zero()) continue;
            terms.push_back(a[k] * b[n - k]);
        }
        out[n] = RatFunc::sum(terms);
    }
    return out;
}

QSeries operator*(const RatFunc& f, const QSeries& s)
{
    QSeries out(s.order());
    for (int n = 0; n <= s.order(); ++n) out[n] = f * s[n];
    return out;
}

QSeries QSeries::specialize(const std::map<int, RatFunc>& subst) const
{
    QSeries out(order());
    for (int n = 0; n <= order(); ++n) out[n] = coeffs_[static_cast<std::size_t>(n)].specialize(subst);
    return out;
}

std::vector<std::string> QSeries::coefficient_strings() const
{
    std::vector<std::string> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(c.to_string());
    return out;
}

std::string QSeries::to_string() const
{
    std::string out;
    for (int n = 0; n <= order(); ++n) {
        const auto& c = coeffs_[static_cast<std::size_t>(n)];
        if (c.is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += "[" + c.to_string() + "]";
        if (n > 0) out += n == 1 ? "*q" : "*q^" + std::to_string(n);
    }
    if (out.empty()) out = "0";
    return out + " + O(q^" + std::to_string(order() + 1) + ")";
}

QSeries macmahon(int order, bool negate_arg)
{
    if (order < 0) throw InvalidArgument("series order must be nonnegative");
    std::vector<Integer> c(static_cast<std::size_t>(order) + 1, 0);
    c[0] = 1;
    // Multiply by 1/(1 - q^n), n times, for each n.
    for (int n = 1; n <= order; ++n) {
        for (int rep = 0; rep < n; ++rep) {
            for (int k = n; k <= order; ++k) c[static_cast<std::size_t>(k)] += c[static_cast<std::size_t>(k - n)];
        }
    }
    QSeries out(order);
    for (int k = 0; k <= order; ++k) {
        Integer v = c[static_cast<std::size_t>(k)];
        if (negate_arg && k % 2 == 1) v = -v;
        out[k] = RatFunc(Rational(v));
    }
    return out;
}

QSeries series_log(const QSeries& s)
{
    if (!(s[0] == RatFunc(1))) throw MathError("series logarithm needs constant term 1");
    QSeries log(s.order());
    std::vector<RatFunc> terms;
    for (int n = 1; n <= s.order(); ++n) {
        // n L_n = n S_n - sum_{k=1}^{n-1} k L_k S_{n-k}
        terms.clear();
        terms.push_back(RatFunc(n) * s[n]);
        for (int k = 1; k < n; ++k) {
            if (log[k].is_zero() || s[n - k].is_zero()) continue;
            terms.push_back(RatFunc(-k) * log[k] * s[n - k]);
        }
        log[n] = RatFunc(Rational(1, n)) * RatFunc::sum(terms);
    }
    return log;
}

QSeries series_exp(const QSeries& s)
{
    if (!s[0].is_zero()) throw MathError("series exponential needs constant term 0");
    QSeries e = QSeries::one(s.order());
    std::vector<RatFunc> terms;
    for (int n = 1; n <= s.order(); ++n) {
        // n E_n = sum_{k=1}^{n} k S_k E_{n-k}
        terms.clear();
        for (int k = 1; k <= n; ++k) {
            if (s[k].is_zero() || e[n - k].is_zero()) continue;
            terms.push_back(RatFunc(k) * s[k] * e[n - k]);
        }
        e[n] = RatFunc(Rational(1, n)) * RatFunc::sum(terms);
    }
    return e;
}

QSeries pow_exponent(const QSeries& s, const RatFunc& f)
{
    if (!(s[0] == RatFunc(1))) throw MathError("series power needs constant term 1");
    return series_exp(f * series_log(s));
}

} // namespace vertexeum
