#ifndef VERTEXEUM_QSERIES_HPP
#define VERTEXEUM_QSERIES_HPP

#include <map>
#include <string>
#include <vector>

#include "vertexeum/rat_func.hpp"

namespace vertexeum {

inline constexpr int kDefaultOrder = 6;

/// Power series in q truncated after q^order, with rational-function coefficients.
class QSeries {
public:
    /// The zero series of the given order.
    explicit QSeries(int order = kDefaultOrder);
    explicit QSeries(std::vector<RatFunc> coefficients);
    static QSeries one(int order);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<RatFunc>& coefficients() const { return coeffs_; }
    const RatFunc& operator[](int n) const { return coeffs_.at(static_cast<std::size_t>(n)); }
    RatFunc& operator[](int n) { return coeffs_.at(static_cast<std::size_t>(n)); }

    QSeries truncated(int order) const;

    friend QSeries operator+(const QSeries& a, const QSeries& b);
    friend QSeries operator-(const QSeries& a, const QSeries& b);
    friend QSeries operator*(const QSeries& a, const QSeries& b);
    friend QSeries operator*(const RatFunc& f, const QSeries& s);

    QSeries specialize(const std::map<int, RatFunc>& subst) const;

    bool operator==(const QSeries& o) const { return coeffs_ == o.coeffs_; }

    /// One canonical string per coefficient.
    std::vector<std::string> coefficient_strings() const;
    std::string to_string() const;

private:
    std::vector<RatFunc> coeffs_;
};

/// prod_{n>=1} (1 - q^n)^{-n} to the given order; with negate_arg, q is replaced by -q.
QSeries macmahon(int order, bool negate_arg = false);

/// Requires constant term 1.
QSeries series_log(const QSeries& s);
/// Requires constant term 0.
QSeries series_exp(const QSeries& s);
/// exp(f * log s); requires constant term 1.
QSeries pow_exponent(const QSeries& s, const RatFunc& f);

} // namespace vertexeum

#endif
