#ifndef VERTEXEUM_TORIC_HPP
#define VERTEXEUM_TORIC_HPP

#include <array>
#include <string>
#include <vector>

#include "vertexeum/linear_form.hpp"
#include "vertexeum/qseries.hpp"
#include "vertexeum/rat_func.hpp"

namespace vertexeum {

/// A torus-fixed point away from the relative divisor, given by its three tangent weights.
struct FixedPoint {
    std::string label;
    std::array<Weight, 3> weights{};
    bool operator==(const FixedPoint&) const = default;
};

/// A fixed point on the relative divisor: the normal weight and the two tangent weights along it.
struct DivisorFixedPoint {
    std::string label;
    Weight normal{};
    std::array<Weight, 2> tangent{};
    bool operator==(const DivisorFixedPoint&) const = default;
};

struct ToricGeometry {
    std::string name;
    std::vector<FixedPoint> interior;
    std::vector<DivisorFixedPoint> divisor;
    bool compact = false;

    bool operator==(const ToricGeometry&) const = default;
    bool relative() const { return !divisor.empty(); }
};

/// Checks nonzero weights and unique labels; throws InvalidArgument.
void validate(const ToricGeometry& g);

/// Sum over fixed points of the Bott residue integrands:
///   interior:  (-w1-w2)(-w1-w3)(-w2-w3) / (w1 w2 w3)
///   divisor:   (-w2-w3) / w1    (w1 normal, w2 w3 tangent)
RatFunc bott_exponent(const ToricGeometry& g, unsigned threads = 0);

/// M(-q)^{bott_exponent}.
QSeries degree0_partition_function(const ToricGeometry& g, int order, unsigned threads = 0);

/// W_inf = M(-q)^{(s2+s3)/s1}.
QSeries winfty_series(int order);

/// Product of local factors: the vertex series W evaluated at s -> -w for
/// every interior point, times W_inf evaluated at s1 = n, s2 = -t2, s3 = -t3
/// for every divisor point. `vertex` is W(0,0,0) to at least `order`.
QSeries degree0_local_product(const ToricGeometry& g, const QSeries& vertex, int order, unsigned threads = 0);

/// The part of f with a pole at s1 = 0: the negative powers of s1 in the
/// Laurent expansion of f in s1 with coefficients rational in s2, s3.
RatFunc s1_polar_part(const RatFunc& f);

/// "affine3", "p3", "p1xp1xp1", "p1xc2-rel".
const std::vector<std::string>& builtin_geometry_names();
/// Throws InvalidArgument for unknown names.
ToricGeometry builtin_geometry(const std::string& name);

/// Parses the JSON geometry document and validates it.
ToricGeometry parse_geometry(const std::string& json_text);
std::string serialize_geometry(const ToricGeometry& g);
/// A built-in name or a path to a JSON document.
ToricGeometry load_geometry(const std::string& name_or_path);

} // namespace vertexeum

#endif
