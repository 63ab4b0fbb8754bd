#include "vertexeum/multi_poly.hpp"

#include <algorithm>

namespace vertexeum {

namespace {

Exponents add_exp(const Exponents& a, const Exponents& b)
{
    return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}

void accumulate(MultiPoly::TermMap& terms, const Exponents& e, const Rational& c)
{
    if (c == 0) return;
    auto [it, inserted] = terms.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

} // namespace

MultiPoly::MultiPoly(const Rational& c)
{
    if (c != 0) terms_.emplace(Exponents{0, 0, 0}, c);
}

MultiPoly::MultiPoly(const LinearForm& f)
{
    for (int i = 0; i < 3; ++i) {
        if (f[static_cast<std::size_t>(i)] == 0) continue;
        Exponents e{0, 0, 0};
        e[static_cast<std::size_t>(i)] = 1;
        terms_.emplace(e, Rational(static_cast<long>(f[static_cast<std::size_t>(i)])));
    }
}

MultiPoly MultiPoly::variable(int i)
{
    Exponents e{0, 0, 0};
    e.at(static_cast<std::size_t>(i)) = 1;
    return monomial(e, 1);
}

MultiPoly MultiPoly::monomial(const Exponents& e, const Rational& c)
{
    MultiPoly p;
    if (c != 0) p.terms_.emplace(e, c);
    return p;
}

bool MultiPoly::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents{0, 0, 0});
}

Rational MultiPoly::constant() const { return coefficient({0, 0, 0}); }

Rational MultiPoly::coefficient(const Exponents& e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

int MultiPoly::total_degree() const
{
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[0] + e[1] + e[2]);
    return d;
}

int MultiPoly::degree_in(int var) const
{
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.at(static_cast<std::size_t>(var)));
    return d;
}

bool MultiPoly::is_homogeneous() const
{
    if (terms_.empty()) return true;
    const auto& first = terms_.begin()->first;
    int d = first[0] + first[1] + first[2];
    return std::all_of(terms_.begin(), terms_.end(),
                       [d](const auto& t) { return t.first[0] + t.first[1] + t.first[2] == d; });
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o)
{
    for (const auto& [e, c] : o.terms_) accumulate(terms_, e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o)
{
    for (const auto& [e, c] : o.terms_) accumulate(terms_, e, -c);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

void MultiPoly::add_scaled(const MultiPoly& o, const Rational& c, const Exponents& e)
{
    if (c == 0) return;
    Rational tmp;
    for (const auto& [oe, oc] : o.terms_) {
        tmp = oc * c;
        accumulate(terms_, add_exp(oe, e), tmp);
    }
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b)
{
    const MultiPoly& small = a.size() <= b.size() ? a : b;
    const MultiPoly& large = a.size() <= b.size() ? b : a;
    MultiPoly out;
    for (const auto& [e, c] : small.terms_) out.add_scaled(large, c, e);
    return out;
}

MultiPoly MultiPoly::times(const LinearForm& f) const
{
    MultiPoly out;
    Rational tmp;
    for (std::size_t i = 0; i < 3; ++i) {
        if (f[i] == 0) continue;
        Rational a(static_cast<long>(f[i]));
        for (const auto& [e, c] : terms_) {
            Exponents ne = e;
            ++ne[i];
            tmp = c * a;
            accumulate(out.terms_, ne, tmp);
        }
    }
    return out;
}

MultiPoly MultiPoly::pow(int n) const
{
    if (n < 0) throw InvalidArgument("negative polynomial power");
    MultiPoly result(1);
    MultiPoly base = *this;
    while (n > 0) {
        if (n & 1) result = result * base;
        n >>= 1;
        if (n > 0) base = base * base;
    }
    return result;
}

std::optional<MultiPoly> MultiPoly::divide_exact(const MultiPoly& d) const
{
    if (d.is_zero()) throw MathError("polynomial division by zero");
    const auto& [lead_e, lead_c] = *d.terms_.begin();
    MultiPoly rem = *this;
    MultiPoly quot;
    while (!rem.is_zero()) {
        const auto& [re, rc] = *rem.terms_.begin();
        Exponents m{re[0] - lead_e[0], re[1] - lead_e[1], re[2] - lead_e[2]};
        if (m[0] < 0 || m[1] < 0 || m[2] < 0) return std::nullopt;
        Rational c = rc / lead_c;
        quot.terms_.emplace_hint(quot.terms_.end(), m, c);
        rem.add_scaled(d, -c, m);
    }
    return quot;
}

std::optional<MultiPoly> MultiPoly::divide_exact(const LinearForm& f) const
{
    if (f.is_zero()) throw MathError("polynomial division by the zero form");
    return divide_exact(MultiPoly(f));
}

std::optional<std::pair<Rational, LinearForm>> MultiPoly::as_linear_form() const
{
    if (is_zero() || total_degree() != 1 || !is_homogeneous()) return std::nullopt;
    // Clear denominators, then split off the integer content and sign.
    Integer lcm = 1;
    for (const auto& [e, c] : terms_) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
    Weight w{0, 0, 0};
    for (const auto& [e, c] : terms_) {
        Rational scaled = c * lcm;
        const Integer& num = scaled.get_num();
        if (!num.fits_slong_p()) throw MathError("linear form coefficient overflows 64 bits");
        for (std::size_t i = 0; i < 3; ++i) {
            if (e[i] == 1) w[i] = num.get_si();
        }
    }
    auto [scalar, form] = LinearForm::canonicalize(w);
    return std::make_pair(Rational(static_cast<long>(scalar)) / Rational(lcm), form);
}

std::string MultiPoly::to_string() const
{
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational mag = abs(c);
        bool neg = c < 0;
        if (first) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        first = false;
        std::string mono;
        for (std::size_t i = 0; i < 3; ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "s" + std::to_string(i + 1);
            if (e[i] != 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty()) {
            out += mag.get_str();
        } else if (mag == 1) {
            out += mono;
        } else {
            out += mag.get_str() + "*" + mono;
        }
    }
    return out;
}

} // namespace vertexeum
