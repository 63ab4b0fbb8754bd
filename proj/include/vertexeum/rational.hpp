#ifndef VERTEXEUM_RATIONAL_HPP
#define VERTEXEUM_RATIONAL_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace vertexeum {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised when an argument violates an operation's precondition.
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when an exact computation cannot produce a representable result
/// (a pole is hit, a denominator fails to cancel, a parity check fails).
class MathError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline Rational rational_from_string(const std::string& s)
{
    Rational r;
    if (r.set_str(s, 10) != 0) {
        throw InvalidArgument("not a rational number: '" + s + "'");
    }
    r.canonicalize();
    return r;
}

inline Rational pow(const Rational& base, int exponent)
{
    if (exponent < 0) {
        if (base == 0) throw MathError("zero raised to a negative power");
        Rational inv = 1 / base;
        return pow(inv, -exponent);
    }
    Rational out;
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    out.canonicalize();
    return out;
}

} // namespace vertexeum

#endif
