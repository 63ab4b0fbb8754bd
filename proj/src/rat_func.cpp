#include "vertexeum/rat_func.hpp"

#include <cctype>
#include <optional>
#include <set>
#include <vector>

namespace vertexeum {

namespace {

MultiPoly times_powers(MultiPoly p, const FormPowers& forms)
{
    for (const auto& [f, e] : forms) {
        for (int k = 0; k < e; ++k) p = p.times(f);
    }
    return p;
}

// The candidate L with p = c L^d read off from the x_i^d and x_i^{d-1} x_j
// coefficients; the caller confirms by exact division.
std::optional<LinearForm> power_root(const MultiPoly& p)
{
    const int d = p.total_degree();
    for (int i = 0; i < 3; ++i) {
        Exponents pure{};
        pure[static_cast<std::size_t>(i)] = d;
        Rational lead = p.coefficient(pure);
        if (lead == 0) continue;
        std::array<Rational, 3> ratio{};
        Integer den = 1;
        for (int j = 0; j < 3; ++j) {
            if (j == i) {
                ratio[static_cast<std::size_t>(j)] = 1;
                continue;
            }
            Exponents mixed{};
            mixed[static_cast<std::size_t>(i)] = d - 1;
            mixed[static_cast<std::size_t>(j)] = 1;
            ratio[static_cast<std::size_t>(j)] = p.coefficient(mixed) / (lead * d);
            den = lcm(den, Integer(ratio[static_cast<std::size_t>(j)].get_den()));
        }
        Weight w{};
        for (std::size_t j = 0; j < 3; ++j) {
            Integer c = Rational(ratio[j] * den).get_num();
            if (!c.fits_slong_p()) return std::nullopt;
            w[j] = c.get_si();
        }
        return LinearForm::canonicalize(w).second;
    }
    return std::nullopt;
}

// Writes p as scalar * prod forms^e using trial division by the candidates,
// accepting a leftover linear factor. Empty if p does not split that way.
std::optional<std::pair<Rational, FormPowers>> split_linear(MultiPoly p, const std::set<LinearForm>& candidates)
{
    FormPowers forms;
    for (const auto& f : candidates) {
        while (p.total_degree() > 0) {
            auto q = p.divide_exact(f);
            if (!q) break;
            p = std::move(*q);
            ++forms[f];
        }
    }
    if (p.total_degree() <= 0) return std::make_pair(p.constant(), forms);
    if (p.total_degree() > 1) {
        auto root = power_root(p);
        if (!root) return std::nullopt;
        while (p.total_degree() > 1) {
            auto q = p.divide_exact(*root);
            if (!q) return std::nullopt;
            p = std::move(*q);
            ++forms[*root];
        }
    }
    auto lin = p.as_linear_form();
    if (!lin) return std::nullopt;
    ++forms[lin->second];
    return std::make_pair(lin->first, forms);
}

} // namespace

RatFunc::RatFunc(MultiPoly num, const Rational& den_scalar, const std::map<LinearForm, int>& den)
    : num_(std::move(num))
{
    if (den_scalar == 0) throw MathError("rational function with zero denominator");
    Rational scalar = den_scalar;
    for (const auto& [f, e] : den) {
        if (e == 0) continue;
        auto [c, canon] = LinearForm::canonicalize(f.coeffs());
        scalar *= vertexeum::pow(Rational(static_cast<long>(c)), e);
        if (e > 0) {
            den_[canon] += e;
        } else {
            for (int k = 0; k < -e; ++k) num_ = num_.times(canon);
        }
    }
    num_ *= 1 / scalar;
    normalize();
}

RatFunc RatFunc::from_normalized(MultiPoly num, FormPowers den)
{
    RatFunc r;
    r.num_ = std::move(num);
    if (!r.num_.is_zero()) r.den_ = std::move(den);
    return r;
}

void RatFunc::normalize()
{
    if (num_.is_zero()) {
        den_.clear();
        return;
    }
    for (auto it = den_.begin(); it != den_.end();) {
        while (it->second > 0) {
            auto q = num_.divide_exact(it->first);
            if (!q) break;
            num_ = std::move(*q);
            --it->second;
        }
        it = it->second == 0 ? den_.erase(it) : std::next(it);
    }
}

MultiPoly RatFunc::denominator_poly() const { return times_powers(MultiPoly(1), den_); }

int RatFunc::degree() const
{
    if (num_.is_zero()) return 0;
    int d = num_.total_degree();
    for (const auto& [f, e] : den_) d -= e;
    return d;
}

RatFunc RatFunc::sum(std::span<const RatFunc> terms)
{
    FormPowers common;
    for (const auto& t : terms) {
        for (const auto& [f, e] : t.den_) {
            auto& slot = common[f];
            slot = std::max(slot, e);
        }
    }
    MultiPoly num;
    for (const auto& t : terms) {
        if (t.is_zero()) continue;
        FormPowers missing;
        for (const auto& [f, e] : common) {
            auto it = t.den_.find(f);
            int have = it == t.den_.end() ? 0 : it->second;
            if (e > have) missing[f] = e - have;
        }
        num += times_powers(t.num_, missing);
    }
    RatFunc r;
    r.num_ = std::move(num);
    r.den_ = std::move(common);
    r.normalize();
    return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b)
{
    const RatFunc terms[] = {a, b};
    return RatFunc::sum(terms);
}

RatFunc operator-(const RatFunc& a) { return RatFunc::from_normalized(-a.num_, a.den_); }

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b)
{
    if (a.is_zero() || b.is_zero()) return RatFunc();
    RatFunc r;
    r.num_ = a.num_ * b.num_;
    r.den_ = a.den_;
    for (const auto& [f, e] : b.den_) r.den_[f] += e;
    r.normalize();
    return r;
}

RatFunc operator/(const RatFunc& a, const RatFunc& b)
{
    if (b.is_zero()) throw MathError("division by the zero rational function");
    if (a.is_zero()) return RatFunc();
    // a / b = (Na * Db) / (Da * Nb); Nb must split into linear forms.
    std::optional<MultiPoly> direct = a.num_.divide_exact(b.num_);
    if (direct) {
        RatFunc r;
        r.num_ = times_powers(std::move(*direct), b.den_);
        r.den_ = a.den_;
        r.normalize();
        return r;
    }
    std::set<LinearForm> candidates;
    for (int i = 0; i < 3; ++i) candidates.insert(LinearForm::coordinate(i));
    for (const auto& [f, e] : a.den_) candidates.insert(f);
    for (const auto& [f, e] : b.den_) candidates.insert(f);
    auto split = split_linear(b.num_, candidates);
    if (!split) {
        throw MathError("quotient is not representable: divisor numerator '" + b.num_.to_string() +
                        "' does not split into linear forms");
    }
    RatFunc r;
    r.num_ = times_powers(a.num_, b.den_) * (1 / split->first);
    r.den_ = a.den_;
    for (const auto& [f, e] : split->second) r.den_[f] += e;
    r.normalize();
    return r;
}

RatFunc RatFunc::pow(int n) const
{
    if (n < 0) return RatFunc(1) / pow(-n);
    RatFunc result(1);
    RatFunc base = *this;
    while (n > 0) {
        if (n & 1) result = result * base;
        n >>= 1;
        if (n > 0) base = base * base;
    }
    return result;
}

RatFunc RatFunc::specialize(const std::map<int, RatFunc>& subst) const
{
    for (const auto& [var, value] : subst) {
        if (var < 0 || var > 2) throw InvalidArgument("substitution variable out of range");
    }
    std::array<RatFunc, 3> image{variable(0), variable(1), variable(2)};
    for (const auto& [var, value] : subst) image[static_cast<std::size_t>(var)] = value;

    std::array<std::vector<RatFunc>, 3> powers;
    auto power_of = [&](std::size_t var, int e) -> const RatFunc& {
        auto& cache = powers[var];
        if (cache.empty()) cache.push_back(RatFunc(1));
        while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * image[var]);
        return cache[static_cast<std::size_t>(e)];
    };

    std::vector<RatFunc> terms;
    terms.reserve(num_.size());
    for (const auto& [e, c] : num_.terms()) {
        RatFunc t(c);
        for (std::size_t i = 0; i < 3; ++i) {
            if (e[i] > 0) t = t * power_of(i, e[i]);
        }
        terms.push_back(std::move(t));
    }
    RatFunc out = sum(terms);
    for (const auto& [f, e] : den_) {
        RatFunc lin;
        for (std::size_t i = 0; i < 3; ++i) {
            if (f[i] != 0) lin += RatFunc(Rational(static_cast<long>(f[i]))) * image[i];
        }
        if (lin.is_zero()) {
            throw MathError("denominator factor " + f.to_string() + " vanishes under the substitution");
        }
        for (int k = 0; k < e; ++k) out = out / lin;
    }
    return out;
}

std::string RatFunc::to_string() const
{
    if (den_.empty()) return num_.to_string();
    std::string den;
    for (const auto& [f, e] : den_) {
        if (!den.empty()) den += "*";
        den += "(" + f.to_string() + ")";
        if (e != 1) den += "^" + std::to_string(e);
    }
    return "(" + num_.to_string() + ")/(" + den + ")";
}

namespace {

class Parser {
public:
    explicit Parser(const std::string& text) : s_(text) {}

    RatFunc parse_all()
    {
        skip();
        RatFunc out;
        if (peek() == '(' && s_.find(")/(") != std::string::npos) {
            expect('(');
            MultiPoly num = parse_poly();
            expect(')');
            expect('/');
            expect('(');
            std::map<LinearForm, int> den;
            parse_denominator(den);
            expect(')');
            out = RatFunc(std::move(num), 1, den);
        } else {
            out = RatFunc(parse_poly());
        }
        skip();
        if (pos_ != s_.size()) fail("trailing characters");
        return out;
    }

private:
    [[noreturn]] void fail(const std::string& what) const
    {
        throw InvalidArgument("cannot parse rational function '" + s_ + "' at offset " +
                              std::to_string(pos_) + ": " + what);
    }

    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    char peek()
    {
        skip();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    void expect(char c)
    {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    std::string digits()
    {
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected digits");
        return s_.substr(start, pos_ - start);
    }

    int parse_var()
    {
        if (peek() != 's') fail("expected variable");
        ++pos_;
        std::string d = digits();
        int v = std::stoi(d);
        if (v < 1 || v > 3) fail("variable index out of range");
        return v - 1;
    }

    MultiPoly parse_term()
    {
        Rational coef = 1;
        Exponents e{0, 0, 0};
        bool have_factor = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            std::string num = digits();
            if (peek() == '/' && pos_ + 1 < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
                ++pos_;
                num += "/" + digits();
            }
            coef = rational_from_string(num);
            have_factor = true;
            if (peek() != '*') return MultiPoly(coef);
            ++pos_;
        }
        while (true) {
            int v = parse_var();
            int power = 1;
            if (peek() == '^') {
                ++pos_;
                power = std::stoi(digits());
            }
            e[static_cast<std::size_t>(v)] += power;
            have_factor = true;
            if (peek() == '*' && pos_ + 1 < s_.size()) {
                std::size_t save = pos_;
                ++pos_;
                if (peek() == 's') continue;
                pos_ = save;
            }
            break;
        }
        if (!have_factor) fail("empty term");
        return MultiPoly::monomial(e, coef);
    }

    MultiPoly parse_poly()
    {
        MultiPoly p;
        bool negative = false;
        if (peek() == '-') {
            negative = true;
            ++pos_;
        }
        while (true) {
            MultiPoly t = parse_term();
            p += negative ? -t : t;
            char c = peek();
            if (c == '+' || c == '-') {
                negative = c == '-';
                ++pos_;
                continue;
            }
            break;
        }
        return p;
    }

    void parse_denominator(std::map<LinearForm, int>& den)
    {
        while (true) {
            LinearForm f;
            if (peek() == '(') {
                ++pos_;
                MultiPoly lin = parse_poly();
                expect(')');
                auto split = lin.as_linear_form();
                if (!split || split->first != 1) fail("denominator factor is not a canonical linear form");
                f = split->second;
            } else {
                f = LinearForm::coordinate(parse_var());
            }
            int power = 1;
            if (peek() == '^') {
                ++pos_;
                power = std::stoi(digits());
            }
            den[f] += power;
            if (peek() != '*') break;
            ++pos_;
        }
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

} // namespace

RatFunc RatFunc::parse(const std::string& text) { return Parser(text).parse_all(); }

bool equal_by_cross_multiplication(const RatFunc& a, const RatFunc& b)
{
    return a.numerator() * b.denominator_poly() == b.numerator() * a.denominator_poly();
}

} // namespace vertexeum
