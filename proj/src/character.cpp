#include "vertexeum/character.hpp"

#include <algorithm>
#include <vector>

#include "vertexeum/rational.hpp"

namespace vertexeum {

LaurentCharacter LaurentCharacter::monomial(const Weight& k, std::int64_t c)
{
    LaurentCharacter out;
    out.add_term(k, c);
    return out;
}

LaurentCharacter LaurentCharacter::one_minus(int i)
{
    Weight k{0, 0, 0};
    k.at(static_cast<std::size_t>(i)) = 1;
    LaurentCharacter out = constant(1);
    out.add_term(k, -1);
    return out;
}

std::int64_t LaurentCharacter::coefficient(const Weight& k) const
{
    auto it = terms_.find(k);
    return it == terms_.end() ? 0 : it->second;
}

std::int64_t LaurentCharacter::coefficient_sum() const
{
    std::int64_t s = 0;
    for (const auto& [k, c] : terms_) s += c;
    return s;
}

void LaurentCharacter::add_term(const Weight& k, std::int64_t c)
{
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentCharacter& LaurentCharacter::operator+=(const LaurentCharacter& o)
{
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

LaurentCharacter& LaurentCharacter::operator-=(const LaurentCharacter& o)
{
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
}

LaurentCharacter operator-(const LaurentCharacter& a)
{
    LaurentCharacter out;
    for (const auto& [k, c] : a.terms_) out.terms_.emplace_hint(out.terms_.end(), k, -c);
    return out;
}

LaurentCharacter operator*(const LaurentCharacter& a, const LaurentCharacter& b)
{
    LaurentCharacter out;
    for (const auto& [ka, ca] : a.terms_) {
        for (const auto& [kb, cb] : b.terms_) {
            out.add_term({ka[0] + kb[0], ka[1] + kb[1], ka[2] + kb[2]}, ca * cb);
        }
    }
    return out;
}

LaurentCharacter LaurentCharacter::shifted(const Weight& s) const
{
    LaurentCharacter out;
    for (const auto& [k, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), Weight{k[0] + s[0], k[1] + s[1], k[2] + s[2]}, c);
    return out;
}

LaurentCharacter LaurentCharacter::bar() const
{
    LaurentCharacter out;
    for (const auto& [k, c] : terms_) out.terms_.emplace(Weight{-k[0], -k[1], -k[2]}, c);
    return out;
}

LaurentCharacter LaurentCharacter::permuted(const std::array<int, 3>& perm) const
{
    LaurentCharacter out;
    for (const auto& [k, c] : terms_) {
        Weight nk{};
        for (std::size_t i = 0; i < 3; ++i) nk[static_cast<std::size_t>(perm[i])] = k[i];
        out.terms_.emplace(nk, c);
    }
    return out;
}

bool LaurentCharacter::divide_one_minus(int i, LaurentCharacter& quotient) const
{
    auto axis = static_cast<std::size_t>(i);
    // Group by the exponents off the axis; along the axis (1 - t) g = f gives
    // g_k = sum_{j <= k} f_j, which must terminate.
    std::map<Weight, std::vector<std::pair<std::int64_t, std::int64_t>>> fibers;
    for (const auto& [k, c] : terms_) {
        Weight key = k;
        key[axis] = 0;
        fibers[key].emplace_back(k[axis], c);
    }
    LaurentCharacter out;
    for (auto& [key, entries] : fibers) {
        std::sort(entries.begin(), entries.end());
        std::int64_t running = 0;
        std::size_t next = 0;
        std::int64_t lo = entries.front().first;
        std::int64_t hi = entries.back().first;
        for (std::int64_t k = lo; k <= hi; ++k) {
            if (next < entries.size() && entries[next].first == k) running += entries[next++].second;
            if (k == hi) break;
            if (running != 0) {
                Weight w = key;
                w[axis] = k;
                out.add_term(w, running);
            }
        }
        if (running != 0) return false;
    }
    quotient = std::move(out);
    return true;
}

std::string LaurentCharacter::to_string() const
{
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : terms_) {
        if (!out.empty()) out += c < 0 ? " - " : " + ";
        else if (c < 0) out += "-";
        auto mag = c < 0 ? -c : c;
        std::string mono;
        for (std::size_t i = 0; i < 3; ++i) {
            if (k[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "t" + std::to_string(i + 1);
            if (k[i] != 1) mono += "^" + std::to_string(k[i]);
        }
        if (mono.empty()) out += std::to_string(mag);
        else if (mag == 1) out += mono;
        else out += std::to_string(mag) + "*" + mono;
    }
    return out;
}

// ---------------------------------------------------------------------------

LocalizedCharacter::LocalizedCharacter(LaurentCharacter num, std::array<int, 3> denominator)
    : num_(std::move(num)), den_(denominator)
{
    for (int e : den_) {
        if (e < 0) throw InvalidArgument("negative (1-t_i) exponent in localized character");
    }
}

namespace {

LaurentCharacter times_one_minus(LaurentCharacter p, const std::array<int, 3>& powers)
{
    for (int i = 0; i < 3; ++i) {
        for (int k = 0; k < powers[static_cast<std::size_t>(i)]; ++k) p = p * LaurentCharacter::one_minus(i);
    }
    return p;
}

} // namespace

LocalizedCharacter operator+(const LocalizedCharacter& a, const LocalizedCharacter& b)
{
    std::array<int, 3> common{}, pad_a{}, pad_b{};
    for (std::size_t i = 0; i < 3; ++i) {
        common[i] = std::max(a.den_[i], b.den_[i]);
        pad_a[i] = common[i] - a.den_[i];
        pad_b[i] = common[i] - b.den_[i];
    }
    return LocalizedCharacter(times_one_minus(a.num_, pad_a) + times_one_minus(b.num_, pad_b), common);
}

LocalizedCharacter operator-(const LocalizedCharacter& a, const LocalizedCharacter& b)
{
    return a + LocalizedCharacter(-b.num_, b.den_);
}

LocalizedCharacter operator*(const LocalizedCharacter& a, const LocalizedCharacter& b)
{
    std::array<int, 3> den{};
    for (std::size_t i = 0; i < 3; ++i) den[i] = a.den_[i] + b.den_[i];
    return LocalizedCharacter(a.num_ * b.num_, den);
}

LocalizedCharacter LocalizedCharacter::bar() const
{
    LaurentCharacter num = num_.bar();
    for (std::size_t i = 0; i < 3; ++i) {
        Weight t{0, 0, 0};
        t[i] = 1;
        for (int k = 0; k < den_[i]; ++k) num = -num.shifted(t);
    }
    return LocalizedCharacter(std::move(num), den_);
}

LocalizedCharacter LocalizedCharacter::reduced() const
{
    LaurentCharacter num = num_;
    std::array<int, 3> den = den_;
    if (num.is_zero()) return LocalizedCharacter();
    for (int i = 0; i < 3; ++i) {
        auto& e = den[static_cast<std::size_t>(i)];
        LaurentCharacter q;
        while (e > 0 && num.divide_one_minus(i, q)) {
            num = std::move(q);
            --e;
        }
    }
    return LocalizedCharacter(std::move(num), den);
}

const LaurentCharacter& LocalizedCharacter::as_laurent() const
{
    if (has_denominator()) throw MathError("localized character still carries a (1-t_i) denominator");
    return num_;
}

bool LocalizedCharacter::operator==(const LocalizedCharacter& o) const
{
    return times_one_minus(num_, o.den_) == times_one_minus(o.num_, den_);
}

} // namespace vertexeum
