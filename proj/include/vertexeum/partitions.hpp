#ifndef VERTEXEUM_PARTITIONS_HPP
#define VERTEXEUM_PARTITIONS_HPP

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace vertexeum {

/// 0-based box coordinates (x, y, z).
using Box = std::array<int, 3>;

/// Weakly decreasing list of positive parts.
class Partition2D {
public:
    Partition2D() = default;
    explicit Partition2D(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }
    int size() const;
    int largest_part() const { return parts_.empty() ? 0 : parts_.front(); }
    /// Cell (row, col) lies in the diagram iff row < length and col < parts[row].
    bool contains(int row, int col) const;

    /// Accepts "2.1", "2 1", "(2,1)", "()" and "" (empty).
    static Partition2D parse(const std::string& text);
    /// "(2,1)" style.
    std::string to_string() const;

    bool operator==(const Partition2D&) const = default;

private:
    std::vector<int> parts_;
};

/// Outgoing leg partitions (lambda1, lambda2, lambda3) along the x, y, z axes.
///
/// The cross-section of leg i uses the two remaining axes in increasing order:
/// leg 1 holds (y, z), leg 2 holds (x, z), leg 3 holds (x, y), and a box lies
/// in cylinder i iff its cross-section cell is in lambda_i.
using Legs = std::array<Partition2D, 3>;

/// Parses "l1,l2,l3" where parts within a leg are separated by '.', e.g. "2.1,,1",
/// or the parenthesized form "(2,1),(),(1)".
Legs parse_legs(const std::string& text);
std::string legs_to_string(const Legs& legs);
bool legs_empty(const Legs& legs);

bool in_leg(const Legs& legs, int leg, const Box& b);
bool in_cylinders(const Legs& legs, const Box& b);

/// True when every predecessor of every box is present (predicate-based).
template <typename Contains>
bool is_order_ideal(const std::vector<Box>& boxes, Contains&& contains)
{
    for (const auto& b : boxes) {
        for (std::size_t i = 0; i < 3; ++i) {
            if (b[i] < 0) return false;
            if (b[i] == 0) continue;
            Box p = b;
            --p[i];
            if (!contains(p)) return false;
        }
    }
    return true;
}

/// A finite 3-dimensional partition (plane partition).
class Partition3D {
public:
    Partition3D() = default;
    /// Validates the order-ideal condition; throws InvalidArgument.
    static Partition3D from_boxes(std::vector<Box> boxes);

    const std::vector<Box>& boxes() const { return boxes_; }
    int size() const { return static_cast<int>(boxes_.size()); }
    bool contains(const Box& b) const;
    /// Moves coordinate i to position perm[i].
    Partition3D permuted(const std::array<int, 3>& perm) const;

    /// Canonical text: one "x,y,z" triple per line, sorted.
    std::string to_text() const;
    /// Accepts triples separated by whitespace or ';'.
    static Partition3D parse_text(const std::string& text);

    auto operator<=>(const Partition3D&) const = default;

private:
    friend std::vector<Partition3D> enumerate_finite(int n);
    std::vector<Box> boxes_;
};

/// A 3-dimensional partition with prescribed leg asymptotics, stored on a window [0,B)^3.
class LegPartition3D {
public:
    /// The union of the leg cylinders.
    static LegPartition3D minimal(const Legs& legs, int window);
    /// Minimal configuration plus the given finite set of off-cylinder boxes.
    static LegPartition3D with_extra_boxes(const Legs& legs, int window, std::vector<Box> extra);

    const Legs& legs() const { return legs_; }
    int window() const { return window_; }
    /// Every box of the partition inside [0,B)^3, sorted.
    const std::vector<Box>& window_boxes() const { return window_boxes_; }
    /// Boxes not in any leg cylinder, sorted.
    std::vector<Box> extra_boxes() const;
    bool contains(const Box& b) const;

    /// #(pi in [0,N)^3) - N (|l1|+|l2|+|l3|); requires N >= window.
    long renormalized_volume(int n_window) const;
    long renormalized_volume() const { return renormalized_volume(window_); }

    bool operator==(const LegPartition3D& o) const
    {
        return legs_ == o.legs_ && extra_boxes() == o.extra_boxes();
    }

private:
    Legs legs_;
    int window_ = 1;
    std::vector<Box> window_boxes_;
};

/// Thrown when a legged enumeration reaches the window boundary off the cylinders.
class WindowTooSmall : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// All plane partitions with exactly n boxes, sorted by canonical box list.
std::vector<Partition3D> enumerate_finite(int n);

/// Default window for volume-n enumeration: n + largest leg part + 2.
int default_window(const Legs& legs, int n);

/// Legged partitions with renormalized volume exactly n, enumerated in a fixed
/// window. Throws WindowTooSmall when the window is insufficient.
std::vector<LegPartition3D> enumerate_with_legs(const Legs& legs, int n, int window);
/// As above, starting at default_window and growing until the boundary check passes.
std::vector<LegPartition3D> enumerate_with_legs(const Legs& legs, int n);

/// Legged partitions grouped by the number of boxes beyond the minimal
/// configuration: result[k] holds those with k extra boxes, k = 0..max_extra.
std::vector<std::vector<LegPartition3D>> enumerate_leg_levels(const Legs& legs, int max_extra);

/// a_{i,j}: number of boxes in the z = j slice with content x - y = i.
using ContentTable = std::map<std::pair<int, int>, int>;
ContentTable content_table(const Partition3D& pi);

} // namespace vertexeum

#endif
