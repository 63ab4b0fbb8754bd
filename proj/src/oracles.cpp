#include "vertexeum/oracles.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace vertexeum::oracle {

namespace {

Rational sign(long e) { return e % 2 == 0 ? Rational(1) : Rational(-1); }

// Generalized binomial coefficients binom(a, j), j = 0..n.
std::vector<RatFunc> binomials(const RatFunc& a, int n)
{
    std::vector<RatFunc> out{RatFunc(1)};
    for (int j = 1; j <= n; ++j) {
        out.push_back(out.back() * (a - RatFunc(j - 1)) * RatFunc(Rational(1, j)));
    }
    return out;
}

// Calls visit(subset) for every k-subset of items.
template <typename T, typename Visit>
void for_each_subset(const std::vector<T>& items, int k, Visit&& visit)
{
    std::vector<T> chosen;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (static_cast<int>(chosen.size()) == k) {
            visit(chosen);
            return;
        }
        std::size_t need = static_cast<std::size_t>(k) - chosen.size();
        for (std::size_t i = start; i + need <= items.size(); ++i) {
            chosen.push_back(items[i]);
            rec(i + 1);
            chosen.pop_back();
        }
    };
    rec(0);
}

using Mono = std::array<int, 3>;

// Integer polynomials in up to three variables modulo x_i^{bound_i}.
struct Truncated {
    Mono bound;
    std::map<Mono, Integer> terms;

    Truncated operator*(const Truncated& o) const
    {
        Truncated r{bound, {}};
        for (const auto& [a, x] : terms) {
            for (const auto& [b, y] : o.terms) {
                Mono m{a[0] + b[0], a[1] + b[1], a[2] + b[2]};
                if (m[0] >= bound[0] || m[1] >= bound[1] || m[2] >= bound[2]) continue;
                r.terms[m] += x * y;
            }
        }
        return r;
    }
    Truncated operator+(const Truncated& o) const
    {
        Truncated r = *this;
        for (const auto& [m, x] : o.terms) r.terms[m] += x;
        return r;
    }
    Truncated graded(int degree) const
    {
        Truncated r{bound, {}};
        for (const auto& [m, x] : terms) {
            if (m[0] + m[1] + m[2] == degree) r.terms[m] = x;
        }
        return r;
    }
    Integer coefficient(const Mono& m) const
    {
        auto it = terms.find(m);
        return it == terms.end() ? Integer(0) : it->second;
    }
};

// c_3(E (x) L) for a rank 3 bundle E: c3 + c2 l + c1 l^2 + l^3.
Truncated twisted_c3(const Truncated& total_chern, const Truncated& l)
{
    Truncated c1 = total_chern.graded(1), c2 = total_chern.graded(2), c3 = total_chern.graded(3);
    return c3 + c2 * l + c1 * l * l + l * l * l;
}

} // namespace

std::vector<Integer> macmahon_counts(int order)
{
    std::vector<Integer> a(static_cast<std::size_t>(order) + 1);
    a[0] = 1;
    for (int k = 1; k <= order; ++k) {
        for (int rep = 0; rep < k; ++rep) {
            for (int n = k; n <= order; ++n) a[static_cast<std::size_t>(n)] += a[static_cast<std::size_t>(n - k)];
        }
    }
    return a;
}

QSeries macmahon_power(int order, const RatFunc& f)
{
    QSeries out = QSeries::one(order);
    for (int n = 1; n <= order; ++n) {
        // (1 - (-1)^n q^n)^{-n f} = sum_j binom(-n f, j) (-1)^{j (n+1)} q^{n j}
        std::vector<RatFunc> b = binomials(RatFunc(-n) * f, order / n);
        QSeries factor(order);
        for (int j = 0; n * j <= order; ++j) {
            factor[n * j] = RatFunc(sign(static_cast<long>(j) * (n + 1))) * b[static_cast<std::size_t>(j)];
        }
        out = out * factor;
    }
    return out;
}

QSeries one_plus_q_power(int order, const RatFunc& f) { return QSeries(binomials(f, order)); }

std::size_t brute_force_plane_partitions(int n)
{
    std::vector<Box> cells;
    for (int x = 0; x < n; ++x) {
        for (int y = 0; x + y < n; ++y) {
            for (int z = 0; x + y + z < n; ++z) cells.push_back({x, y, z});
        }
    }
    std::size_t count = 0;
    for_each_subset(cells, n, [&](const std::vector<Box>& chosen) {
        std::set<Box> s(chosen.begin(), chosen.end());
        bool ok = true;
        for (const auto& b : chosen) {
            for (std::size_t i = 0; i < 3 && ok; ++i) {
                if (b[i] == 0) continue;
                Box p = b;
                --p[i];
                ok = s.count(p) > 0;
            }
        }
        if (ok) ++count;
    });
    return count;
}

std::size_t brute_force_leg_count(const Legs& legs, int n, int window)
{
    auto in_cylinder = [&](const Box& b) {
        std::array<std::pair<int, int>, 3> sections{{{b[1], b[2]}, {b[0], b[2]}, {b[0], b[1]}}};
        for (std::size_t i = 0; i < 3; ++i) {
            if (legs[i].contains(sections[i].first, sections[i].second)) return true;
        }
        return false;
    };
    std::vector<Box> cells;
    for (int x = 0; x < window; ++x) {
        for (int y = 0; y < window; ++y) {
            for (int z = 0; z < window; ++z) {
                if (!in_cylinder({x, y, z})) cells.push_back({x, y, z});
            }
        }
    }
    std::size_t count = 0;
    for_each_subset(cells, n, [&](const std::vector<Box>& chosen) {
        std::set<Box> s(chosen.begin(), chosen.end());
        bool ok = true;
        for (const auto& b : chosen) {
            for (std::size_t i = 0; i < 3 && ok; ++i) {
                if (b[i] == 0) continue;
                Box p = b;
                --p[i];
                ok = in_cylinder(p) || s.count(p) > 0;
            }
        }
        if (ok) ++count;
    });
    return count;
}

std::map<std::array<int, 3>, long> vertex_character_expansion(const Partition3D& pi)
{
    std::map<std::array<int, 3>, long> v;
    for (const auto& b : pi.boxes()) {
        v[{b[0], b[1], b[2]}] += 1;
        v[{-b[0] - 1, -b[1] - 1, -b[2] - 1}] -= 1;
    }
    // (1-t1)(1-t2)(1-t3) = sum over subsets S of (-1)^{|S|} t^{e_S}
    for (const auto& a : pi.boxes()) {
        for (const auto& b : pi.boxes()) {
            for (int mask = 0; mask < 8; ++mask) {
                std::array<int, 3> k{};
                for (int i = 0; i < 3; ++i) {
                    k[static_cast<std::size_t>(i)] =
                        a[static_cast<std::size_t>(i)] - b[static_cast<std::size_t>(i)] + ((mask >> i) & 1) - 1;
                }
                v[k] += __builtin_popcount(static_cast<unsigned>(mask)) % 2 == 0 ? 1 : -1;
            }
        }
    }
    std::erase_if(v, [](const auto& kv) { return kv.second == 0; });
    return v;
}

Integer p3_twisted_c3()
{
    const Mono bound{4, 1, 1};
    Truncated one{bound, {{Mono{0, 0, 0}, 1}}};
    Truncated h{bound, {{Mono{1, 0, 0}, 1}}};
    Truncated total = one;
    for (int k = 0; k < 4; ++k) total = total * (one + h);
    Truncated l{bound, {{Mono{1, 0, 0}, -4}}};
    return twisted_c3(total, l).coefficient({3, 0, 0});
}

Integer p1cubed_twisted_c3()
{
    const Mono bound{2, 2, 2};
    Truncated one{bound, {{Mono{0, 0, 0}, 1}}};
    Truncated total = one;
    Truncated l{bound, {}};
    for (std::size_t i = 0; i < 3; ++i) {
        Mono m{0, 0, 0};
        m[i] = 1;
        total = total * (one + Truncated{bound, {{m, 2}}});
        l.terms[m] = -2;
    }
    return twisted_c3(total, l).coefficient({1, 1, 1});
}

Integer automorphism_count(const WeightedPartition& eta)
{
    const auto& pairs = eta.pairs();
    std::vector<std::size_t> idx(pairs.size());
    std::iota(idx.begin(), idx.end(), 0);
    Integer count = 0;
    do {
        bool fixed = true;
        for (std::size_t i = 0; i < idx.size() && fixed; ++i) fixed = pairs[idx[i]] == pairs[i];
        if (fixed) ++count;
    } while (std::next_permutation(idx.begin(), idx.end()));
    return count;
}

DTRational local_curve_closed_form(int g, int d)
{
    const int n = 2 * g - 2 + d;
    std::vector<Rational> binom;
    for (int j = 0; j <= std::abs(n); ++j) {
        Integer c;
        mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(std::abs(n)), static_cast<unsigned long>(j));
        binom.emplace_back(c);
    }
    if (n >= 0) return DTRational(1 - g, binom, {Rational(1)});
    return DTRational(1 - g, {Rational(1)}, binom);
}

} // namespace vertexeum::oracle
