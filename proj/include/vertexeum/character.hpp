#ifndef VERTEXEUM_CHARACTER_HPP
#define VERTEXEUM_CHARACTER_HPP

#include <array>
#include <cstdint>
#include <map>
#include <string>

#include "vertexeum/linear_form.hpp"

namespace vertexeum {

/// Laurent polynomial in t1, t2, t3 with integer coefficients.
class LaurentCharacter {
public:
    using TermMap = std::map<Weight, std::int64_t>;

    LaurentCharacter() = default;
    static LaurentCharacter monomial(const Weight& k, std::int64_t c = 1);
    static LaurentCharacter constant(std::int64_t c) { return monomial({0, 0, 0}, c); }
    /// 1 - t_i
    static LaurentCharacter one_minus(int i);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::int64_t coefficient(const Weight& k) const;
    std::int64_t constant_term() const { return coefficient({0, 0, 0}); }
    std::int64_t coefficient_sum() const;

    void add_term(const Weight& k, std::int64_t c);
    LaurentCharacter& operator+=(const LaurentCharacter& o);
    LaurentCharacter& operator-=(const LaurentCharacter& o);
    friend LaurentCharacter operator+(LaurentCharacter a, const LaurentCharacter& b) { return a += b; }
    friend LaurentCharacter operator-(LaurentCharacter a, const LaurentCharacter& b) { return a -= b; }
    friend LaurentCharacter operator-(const LaurentCharacter& a);
    friend LaurentCharacter operator*(const LaurentCharacter& a, const LaurentCharacter& b);

    /// Multiplies by the monomial t^k.
    LaurentCharacter shifted(const Weight& k) const;
    /// Conjugation t_i -> t_i^{-1}.
    LaurentCharacter bar() const;
    /// Permutes the variables: new exponent at position perm[i] is the old exponent at i.
    LaurentCharacter permuted(const std::array<int, 3>& perm) const;

    /// Exact quotient by (1 - t_i), or false when (1 - t_i) does not divide.
    bool divide_one_minus(int i, LaurentCharacter& quotient) const;

    bool operator==(const LaurentCharacter&) const = default;
    std::string to_string() const;

private:
    TermMap terms_;
};

/// numerator / ((1-t1)^e1 (1-t2)^e2 (1-t3)^e3), the localized character ring.
class LocalizedCharacter {
public:
    LocalizedCharacter() = default;
    LocalizedCharacter(LaurentCharacter num) : num_(std::move(num)) {}  // NOLINT
    LocalizedCharacter(LaurentCharacter num, std::array<int, 3> denominator);

    const LaurentCharacter& numerator() const { return num_; }
    const std::array<int, 3>& denominator() const { return den_; }
    bool has_denominator() const { return den_[0] != 0 || den_[1] != 0 || den_[2] != 0; }

    friend LocalizedCharacter operator+(const LocalizedCharacter& a, const LocalizedCharacter& b);
    friend LocalizedCharacter operator-(const LocalizedCharacter& a, const LocalizedCharacter& b);
    friend LocalizedCharacter operator*(const LocalizedCharacter& a, const LocalizedCharacter& b);

    /// Conjugation; (1 - t_i^{-1})^{-1} is rewritten as -t_i (1 - t_i)^{-1}.
    LocalizedCharacter bar() const;
    /// Cancels every (1 - t_i) factor that exactly divides the numerator.
    LocalizedCharacter reduced() const;
    /// The numerator, provided no denominator is left; throws MathError otherwise.
    const LaurentCharacter& as_laurent() const;

    /// Equality of the reduced representatives.
    bool operator==(const LocalizedCharacter& o) const;

private:
    LaurentCharacter num_;
    std::array<int, 3> den_{0, 0, 0};
};

} // namespace vertexeum

#endif
