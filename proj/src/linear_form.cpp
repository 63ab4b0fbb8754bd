#include "vertexeum/linear_form.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace vertexeum {

std::pair<std::int64_t, LinearForm> LinearForm::canonicalize(const Weight& w)
{
    std::int64_t g = 0;
    for (auto c : w) g = std::gcd(g, c);
    if (g == 0) throw std::invalid_argument("cannot canonicalize the zero linear form");
    std::int64_t lead = w[0] != 0 ? w[0] : (w[1] != 0 ? w[1] : w[2]);
    if (lead < 0) g = -g;
    return {g, LinearForm(w[0] / g, w[1] / g, w[2] / g)};
}

bool LinearForm::is_canonical() const
{
    if (is_zero()) return false;
    auto [scalar, form] = canonicalize(coeffs_);
    return scalar == 1 && form == *this;
}

std::string LinearForm::to_string() const
{
    std::string out;
    for (std::size_t i = 0; i < 3; ++i) {
        auto c = coeffs_[i];
        if (c == 0) continue;
        if (c < 0) {
            out += '-';
        } else if (!out.empty()) {
            out += '+';
        }
        if (std::llabs(c) != 1) out += std::to_string(std::llabs(c)) + "*";
        out += "s" + std::to_string(i + 1);
    }
    return out.empty() ? "0" : out;
}

bool operator<(const LinearForm& a, const LinearForm& b)
{
    auto norm = [](const LinearForm& f) {
        return std::llabs(f[0]) + std::llabs(f[1]) + std::llabs(f[2]);
    };
    auto na = norm(a), nb = norm(b);
    if (na != nb) return na < nb;
    return a.coeffs() > b.coeffs();
}

} // namespace vertexeum
