#ifndef VERTEXEUM_LINEAR_FORM_HPP
#define VERTEXEUM_LINEAR_FORM_HPP

#include <array>
#include <cstdint>
#include <string>
#include <utility>

namespace vertexeum {

/// Integer exponent / weight vector in Z^3.
using Weight = std::array<std::int64_t, 3>;

/// A homogeneous integer linear form a1*s1 + a2*s2 + a3*s3.
///
/// Canonical forms are primitive (gcd of the coefficients is 1) with the first
/// nonzero coefficient positive. Any nonzero weight factors uniquely as
/// scalar * canonical form; `canonicalize` performs that split.
class LinearForm {
public:
    constexpr LinearForm() = default;
    constexpr LinearForm(std::int64_t a1, std::int64_t a2, std::int64_t a3) : coeffs_{a1, a2, a3} {}
    explicit constexpr LinearForm(const Weight& w) : coeffs_(w) {}

    /// Splits a nonzero weight into (scalar, canonical form).
    static std::pair<std::int64_t, LinearForm> canonicalize(const Weight& w);

    static constexpr LinearForm coordinate(int i)
    {
        LinearForm f;
        f.coeffs_[static_cast<std::size_t>(i)] = 1;
        return f;
    }

    const Weight& coeffs() const { return coeffs_; }
    std::int64_t operator[](std::size_t i) const { return coeffs_[i]; }

    bool is_zero() const { return coeffs_[0] == 0 && coeffs_[1] == 0 && coeffs_[2] == 0; }
    bool is_canonical() const;

    /// Renders as e.g. "s1+s2", "2*s1-s3".
    std::string to_string() const;

    bool operator==(const LinearForm&) const = default;

private:
    Weight coeffs_{};
};

/// Display order: by coefficient l1-norm, then lexicographically descending,
/// so s1 < s2 < s3 < s1+s2 < s1+s3 < ...
bool operator<(const LinearForm& a, const LinearForm& b);

} // namespace vertexeum

#endif
