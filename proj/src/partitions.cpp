#include "vertexeum/partitions.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "vertexeum/rational.hpp"

namespace vertexeum {

// ---------------------------------------------------------------------------
// Partition2D

Partition2D::Partition2D(std::vector<int> parts) : parts_(std::move(parts))
{
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw InvalidArgument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1]) throw InvalidArgument("partition parts must be weakly decreasing");
    }
}

int Partition2D::size() const
{
    int s = 0;
    for (int p : parts_) s += p;
    return s;
}

bool Partition2D::contains(int row, int col) const
{
    return row >= 0 && col >= 0 && row < static_cast<int>(parts_.size()) && col < parts_[static_cast<std::size_t>(row)];
}

Partition2D Partition2D::parse(const std::string& text)
{
    std::vector<int> parts;
    std::string token;
    auto flush = [&] {
        if (token.empty()) return;
        try {
            std::size_t used = 0;
            int v = std::stoi(token, &used);
            if (used != token.size()) throw InvalidArgument("bad part");
            parts.push_back(v);
        } catch (const std::logic_error&) {
            throw InvalidArgument("cannot parse partition part '" + token + "' in '" + text + "'");
        }
        token.clear();
    };
    for (char c : text) {
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') {
            token += c;
        } else if (c == '.' || c == ',' || c == '(' || c == ')' || std::isspace(static_cast<unsigned char>(c))) {
            flush();
        } else {
            throw InvalidArgument("unexpected character in partition '" + text + "'");
        }
    }
    flush();
    return Partition2D(std::move(parts));
}

std::string Partition2D::to_string() const
{
    std::string out = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i > 0) out += ",";
        out += std::to_string(parts_[i]);
    }
    return out + ")";
}

Legs parse_legs(const std::string& text)
{
    std::vector<std::string> pieces;
    if (text.find('(') != std::string::npos) {
        std::size_t pos = 0;
        while ((pos = text.find('(', pos)) != std::string::npos) {
            auto close = text.find(')', pos);
            if (close == std::string::npos) throw InvalidArgument("unbalanced parentheses in legs '" + text + "'");
            pieces.push_back(text.substr(pos + 1, close - pos - 1));
            pos = close + 1;
        }
    } else if (!text.empty()) {
        std::string cur;
        for (char c : text) {
            if (c == ',') {
                pieces.push_back(cur);
                cur.clear();
            } else {
                cur += c;
            }
        }
        pieces.push_back(cur);
    }
    if (pieces.size() > 3) throw InvalidArgument("at most three legs may be given: '" + text + "'");
    Legs legs;
    for (std::size_t i = 0; i < pieces.size(); ++i) legs[i] = Partition2D::parse(pieces[i]);
    return legs;
}

std::string legs_to_string(const Legs& legs)
{
    return legs[0].to_string() + "," + legs[1].to_string() + "," + legs[2].to_string();
}

bool legs_empty(const Legs& legs)
{
    return legs[0].empty() && legs[1].empty() && legs[2].empty();
}

bool in_leg(const Legs& legs, int leg, const Box& b)
{
    switch (leg) {
    case 0: return legs[0].contains(b[1], b[2]);
    case 1: return legs[1].contains(b[0], b[2]);
    case 2: return legs[2].contains(b[0], b[1]);
    default: throw InvalidArgument("leg index out of range");
    }
}

bool in_cylinders(const Legs& legs, const Box& b)
{
    return in_leg(legs, 0, b) || in_leg(legs, 1, b) || in_leg(legs, 2, b);
}

// ---------------------------------------------------------------------------
// Partition3D

Partition3D Partition3D::from_boxes(std::vector<Box> boxes)
{
    std::sort(boxes.begin(), boxes.end());
    if (std::adjacent_find(boxes.begin(), boxes.end()) != boxes.end()) {
        throw InvalidArgument("duplicate box in partition");
    }
    Partition3D p;
    p.boxes_ = std::move(boxes);
    if (!is_order_ideal(p.boxes_, [&](const Box& b) { return p.contains(b); })) {
        throw InvalidArgument("box set is not an order ideal");
    }
    return p;
}

bool Partition3D::contains(const Box& b) const
{
    return std::binary_search(boxes_.begin(), boxes_.end(), b);
}

Partition3D Partition3D::permuted(const std::array<int, 3>& perm) const
{
    std::vector<Box> moved;
    moved.reserve(boxes_.size());
    for (const auto& b : boxes_) {
        Box m{};
        for (std::size_t i = 0; i < 3; ++i) m[static_cast<std::size_t>(perm[i])] = b[i];
        moved.push_back(m);
    }
    return from_boxes(std::move(moved));
}

std::string Partition3D::to_text() const
{
    std::string out;
    for (const auto& b : boxes_) {
        out += std::to_string(b[0]) + "," + std::to_string(b[1]) + "," + std::to_string(b[2]) + "\n";
    }
    return out;
}

Partition3D Partition3D::parse_text(const std::string& text)
{
    std::string normalized = text;
    std::replace(normalized.begin(), normalized.end(), ';', ' ');
    std::istringstream in(normalized);
    std::vector<Box> boxes;
    std::string token;
    while (in >> token) {
        if (token[0] == '#') {
            std::getline(in, token);
            continue;
        }
        Box b{};
        char c1 = 0, c2 = 0;
        std::istringstream t(token);
        if (!(t >> b[0] >> c1 >> b[1] >> c2 >> b[2]) || c1 != ',' || c2 != ',' || t.peek() != EOF) {
            throw InvalidArgument("malformed box triple '" + token + "'");
        }
        boxes.push_back(b);
    }
    return from_boxes(std::move(boxes));
}

// ---------------------------------------------------------------------------
// Enumeration core: grow finite sets of off-cylinder boxes one addable box at a
// time. A child is kept only when the added box is its lexicographically largest
// removable extra box, so each configuration has exactly one parent.

namespace {

class ExtraBoxEnumerator {
public:
    ExtraBoxEnumerator(const Legs& legs, int window) : legs_(legs), window_(window)
    {
        for (int x = 0; x < window; ++x)
            for (int y = 0; y < window; ++y)
                for (int z = 0; z < window; ++z)
                    if (in_cylinders(legs, {x, y, z})) base_.push_back({x, y, z});
    }

    std::vector<std::vector<std::vector<Box>>> levels(int max_level)
    {
        std::vector<std::vector<std::vector<Box>>> out;
        out.push_back(std::vector<std::vector<Box>>(1));
        for (int level = 1; level <= max_level; ++level) {
            std::vector<std::vector<Box>> next;
            for (const auto& parent : out.back()) grow(parent, next);
            std::sort(next.begin(), next.end());
            out.push_back(std::move(next));
        }
        return out;
    }

private:
    void grow(const std::vector<Box>& extra, std::vector<std::vector<Box>>& sink) const
    {
        std::set<Box> members(extra.begin(), extra.end());
        auto contains = [&](const Box& b) { return members.count(b) > 0 || in_cylinders(legs_, b); };

        std::set<Box> candidates{{0, 0, 0}};
        auto push_successors = [&](const Box& b) {
            for (std::size_t i = 0; i < 3; ++i) {
                Box s = b;
                ++s[i];
                if (s[i] < window_) candidates.insert(s);
            }
        };
        for (const auto& b : extra) push_successors(b);
        for (const auto& b : base_) push_successors(b);

        for (const auto& b : candidates) {
            if (contains(b)) continue;
            bool addable = true;
            for (std::size_t i = 0; i < 3 && addable; ++i) {
                if (b[i] == 0) continue;
                Box p = b;
                --p[i];
                addable = contains(p);
            }
            if (!addable) continue;
            if (b[0] >= window_ - 1 || b[1] >= window_ - 1 || b[2] >= window_ - 1) {
                throw WindowTooSmall("enumeration touched the window boundary at window " + std::to_string(window_));
            }
            members.insert(b);
            bool canonical = true;
            for (auto it = members.rbegin(); it != members.rend(); ++it) {
                const Box& e = *it;
                bool removable = true;
                for (std::size_t i = 0; i < 3 && removable; ++i) {
                    Box s = e;
                    ++s[i];
                    removable = members.count(s) == 0;
                }
                if (removable) {
                    canonical = e == b;
                    break;
                }
            }
            if (canonical) sink.emplace_back(members.begin(), members.end());
            members.erase(b);
        }
    }

    const Legs& legs_;
    int window_;
    std::vector<Box> base_;
};

} // namespace

std::vector<Partition3D> enumerate_finite(int n)
{
    if (n < 0) throw InvalidArgument("partition size must be nonnegative");
    Legs none;
    auto levels = ExtraBoxEnumerator(none, n + 2).levels(n);
    std::vector<Partition3D> out;
    out.reserve(levels[static_cast<std::size_t>(n)].size());
    for (auto& boxes : levels[static_cast<std::size_t>(n)]) {
        Partition3D p;
        p.boxes_ = std::move(boxes);
        out.push_back(std::move(p));
    }
    return out;
}

// ---------------------------------------------------------------------------
// LegPartition3D

LegPartition3D LegPartition3D::minimal(const Legs& legs, int window)
{
    return with_extra_boxes(legs, window, {});
}

LegPartition3D LegPartition3D::with_extra_boxes(const Legs& legs, int window, std::vector<Box> extra)
{
    if (window < 1) throw InvalidArgument("window must be at least 1");
    LegPartition3D p;
    p.legs_ = legs;
    p.window_ = window;
    for (int x = 0; x < window; ++x)
        for (int y = 0; y < window; ++y)
            for (int z = 0; z < window; ++z)
                if (in_cylinders(legs, {x, y, z})) p.window_boxes_.push_back({x, y, z});
    for (const auto& b : extra) {
        if (b[0] >= window || b[1] >= window || b[2] >= window) {
            throw InvalidArgument("extra box lies outside the window");
        }
        if (in_cylinders(legs, b)) throw InvalidArgument("extra box lies inside a leg cylinder");
        p.window_boxes_.push_back(b);
    }
    std::sort(p.window_boxes_.begin(), p.window_boxes_.end());
    if (std::adjacent_find(p.window_boxes_.begin(), p.window_boxes_.end()) != p.window_boxes_.end()) {
        throw InvalidArgument("duplicate extra box");
    }
    if (!is_order_ideal(p.window_boxes_, [&](const Box& b) { return p.contains(b); })) {
        throw InvalidArgument("legged box set is not an order ideal");
    }
    return p;
}

std::vector<Box> LegPartition3D::extra_boxes() const
{
    std::vector<Box> out;
    for (const auto& b : window_boxes_) {
        if (!in_cylinders(legs_, b)) out.push_back(b);
    }
    return out;
}

bool LegPartition3D::contains(const Box& b) const
{
    if (b[0] < 0 || b[1] < 0 || b[2] < 0) return false;
    if (b[0] < window_ && b[1] < window_ && b[2] < window_) {
        return std::binary_search(window_boxes_.begin(), window_boxes_.end(), b);
    }
    return in_cylinders(legs_, b);
}

long LegPartition3D::renormalized_volume(int n_window) const
{
    if (n_window < window_) throw InvalidArgument("renormalization window smaller than the storage window");
    long count = static_cast<long>(window_boxes_.size());
    // Cylinder boxes in [0,N)^3 outside [0,B)^3.
    std::set<Box> outside;
    for (int leg = 0; leg < 3; ++leg) {
        const auto& lam = legs_[static_cast<std::size_t>(leg)];
        for (int row = 0; row < static_cast<int>(lam.parts().size()); ++row) {
            for (int col = 0; col < lam.parts()[static_cast<std::size_t>(row)]; ++col) {
                for (int t = 0; t < n_window; ++t) {
                    Box b{};
                    switch (leg) {
                    case 0: b = {t, row, col}; break;
                    case 1: b = {row, t, col}; break;
                    default: b = {row, col, t}; break;
                    }
                    if (b[0] >= n_window || b[1] >= n_window || b[2] >= n_window) continue;
                    if (b[0] < window_ && b[1] < window_ && b[2] < window_) continue;
                    outside.insert(b);
                }
            }
        }
    }
    count += static_cast<long>(outside.size());
    long legs_size = legs_[0].size() + legs_[1].size() + legs_[2].size();
    return count - static_cast<long>(n_window) * legs_size;
}

int default_window(const Legs& legs, int n)
{
    int largest = std::max({legs[0].largest_part(), legs[1].largest_part(), legs[2].largest_part(),
                            static_cast<int>(legs[0].parts().size()), static_cast<int>(legs[1].parts().size()),
                            static_cast<int>(legs[2].parts().size())});
    return std::max(n, 0) + largest + 2;
}

std::vector<LegPartition3D> enumerate_with_legs(const Legs& legs, int n, int window)
{
    long base_volume = LegPartition3D::minimal(legs, window).renormalized_volume();
    long level = n - base_volume;
    if (level < 0) return {};
    auto levels = ExtraBoxEnumerator(legs, window).levels(static_cast<int>(level));
    std::vector<LegPartition3D> out;
    for (auto& extra : levels.back()) out.push_back(LegPartition3D::with_extra_boxes(legs, window, std::move(extra)));
    return out;
}

std::vector<LegPartition3D> enumerate_with_legs(const Legs& legs, int n)
{
    long base_volume = LegPartition3D::minimal(legs, default_window(legs, 0)).renormalized_volume();
    int level = static_cast<int>(std::max<long>(n - base_volume, 0));
    for (int window = default_window(legs, std::max(n, level));; window *= 2) {
        try {
            return enumerate_with_legs(legs, n, window);
        } catch (const WindowTooSmall&) {
        }
    }
}

std::vector<std::vector<LegPartition3D>> enumerate_leg_levels(const Legs& legs, int max_extra)
{
    if (max_extra < 0) throw InvalidArgument("level count must be nonnegative");
    for (int window = default_window(legs, max_extra);; window *= 2) {
        try {
            auto levels = ExtraBoxEnumerator(legs, window).levels(max_extra);
            std::vector<std::vector<LegPartition3D>> out(levels.size());
            for (std::size_t k = 0; k < levels.size(); ++k) {
                for (auto& extra : levels[k]) {
                    out[k].push_back(LegPartition3D::with_extra_boxes(legs, window, std::move(extra)));
                }
            }
            return out;
        } catch (const WindowTooSmall&) {
        }
    }
}

// ---------------------------------------------------------------------------

ContentTable content_table(const Partition3D& pi)
{
    ContentTable a;
    for (const auto& b : pi.boxes()) ++a[{b[0] - b[1], b[2]}];
    return a;
}

} // namespace vertexeum
