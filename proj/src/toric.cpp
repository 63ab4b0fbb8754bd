#include "vertexeum/toric.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

#include "vertexeum/parallel.hpp"

namespace vertexeum {

namespace {

using nlohmann::json;

bool is_zero(const Weight& w) { return w[0] == 0 && w[1] == 0 && w[2] == 0; }

Weight operator-(const Weight& a) { return {-a[0], -a[1], -a[2]}; }
Weight operator+(const Weight& a, const Weight& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
Weight operator-(const Weight& a, const Weight& b) { return a + (-b); }

RatFunc form_value(const Weight& w)
{
    if (is_zero(w)) return RatFunc();
    return RatFunc(MultiPoly(LinearForm(w)));
}

// prod num / prod den over weights; a vanishing numerator weight makes the term zero.
RatFunc weight_ratio(const std::vector<Weight>& num, const std::vector<Weight>& den)
{
    MultiPoly n(1);
    for (const auto& w : num) {
        if (is_zero(w)) return RatFunc();
        n = n.times(LinearForm(w));
    }
    std::map<LinearForm, int> d;
    for (const auto& w : den) {
        if (is_zero(w)) throw InvalidArgument("zero tangent weight at a fixed point");
        d[LinearForm(w)] += 1;
    }
    return RatFunc(std::move(n), 1, d);
}

RatFunc interior_term(const FixedPoint& p)
{
    const auto& [w1, w2, w3] = p.weights;
    return weight_ratio({-w1 - w2, -w1 - w3, -w2 - w3}, {w1, w2, w3});
}

RatFunc divisor_term(const DivisorFixedPoint& p)
{
    return weight_ratio({-p.tangent[0] - p.tangent[1]}, {p.normal});
}

Weight read_weight(const json& j, const std::string& where)
{
    if (!j.is_array() || j.size() != 3) throw InvalidArgument(where + ": expected an integer triple");
    Weight w{};
    for (std::size_t i = 0; i < 3; ++i) {
        if (!j[i].is_number_integer()) throw InvalidArgument(where + ": expected an integer triple");
        w[i] = j[i].get<std::int64_t>();
    }
    return w;
}

const json& require(const json& obj, const char* key, const std::string& where)
{
    auto it = obj.find(key);
    if (it == obj.end()) throw InvalidArgument(where + ": missing key '" + key + "'");
    return *it;
}

void check_keys(const json& obj, std::initializer_list<const char*> allowed, const std::string& where)
{
    for (const auto& [key, value] : obj.items()) {
        bool ok = false;
        for (const char* a : allowed) ok = ok || key == a;
        if (!ok) throw InvalidArgument(where + ": unexpected key '" + key + "'");
    }
}

// Weights of the coordinate lines of A^3 are (s1, s2, s3).
ToricGeometry affine3()
{
    ToricGeometry g;
    g.name = "affine3";
    g.interior.push_back({"origin", {Weight{1, 0, 0}, Weight{0, 1, 0}, Weight{0, 0, 1}}});
    return g;
}

// P^3 with homogeneous coordinate weights (0, s1, s2, s3); at the i-th
// coordinate point the tangent weights are lambda_j - lambda_i, j != i.
ToricGeometry p3()
{
    const std::array<Weight, 4> lambda{Weight{0, 0, 0}, Weight{1, 0, 0}, Weight{0, 1, 0}, Weight{0, 0, 1}};
    ToricGeometry g;
    g.name = "p3";
    g.compact = true;
    for (std::size_t i = 0; i < 4; ++i) {
        FixedPoint p;
        p.label = "x" + std::to_string(i);
        std::size_t k = 0;
        for (std::size_t j = 0; j < 4; ++j) {
            if (j != i) p.weights[k++] = lambda[j] - lambda[i];
        }
        g.interior.push_back(p);
    }
    return g;
}

// Each P^1 factor has tangent weight +s_i at 0 and -s_i at infinity.
ToricGeometry p1xp1xp1()
{
    ToricGeometry g;
    g.name = "p1xp1xp1";
    g.compact = true;
    for (int mask = 0; mask < 8; ++mask) {
        FixedPoint p;
        for (std::size_t i = 0; i < 3; ++i) {
            bool inf = (mask >> i) & 1;
            p.label += inf ? '-' : '+';
            Weight w{0, 0, 0};
            w[i] = inf ? -1 : 1;
            p.weights[i] = w;
        }
        g.interior.push_back(p);
    }
    return g;
}

// P^1 x C^2 relative to the fiber over infinity. The point over 0 has weights
// (-s1, -s2, -s3); over infinity the normal weight is s1 and the fiber
// directions keep -s2, -s3.
ToricGeometry p1xc2_rel()
{
    ToricGeometry g;
    g.name = "p1xc2-rel";
    g.interior.push_back({"zero", {Weight{-1, 0, 0}, Weight{0, -1, 0}, Weight{0, 0, -1}}});
    g.divisor.push_back({"infinity", Weight{1, 0, 0}, {Weight{0, -1, 0}, Weight{0, 0, -1}}});
    return g;
}

} // namespace

void validate(const ToricGeometry& g)
{
    std::set<std::string> labels;
    auto check_label = [&](const std::string& label) {
        if (label.empty()) throw InvalidArgument("geometry '" + g.name + "': empty point label");
        if (!labels.insert(label).second) {
            throw InvalidArgument("geometry '" + g.name + "': duplicate point label '" + label + "'");
        }
    };
    for (const auto& p : g.interior) {
        check_label(p.label);
        for (const auto& w : p.weights) {
            if (is_zero(w)) throw InvalidArgument("geometry '" + g.name + "': zero weight at point '" + p.label + "'");
        }
    }
    for (const auto& p : g.divisor) {
        check_label(p.label);
        if (is_zero(p.normal) || is_zero(p.tangent[0]) || is_zero(p.tangent[1])) {
            throw InvalidArgument("geometry '" + g.name + "': zero weight at divisor point '" + p.label + "'");
        }
    }
}

RatFunc bott_exponent(const ToricGeometry& g, unsigned threads)
{
    validate(g);
    std::size_t n_int = g.interior.size();
    std::vector<RatFunc> terms(n_int + g.divisor.size());
    parallel_for(terms.size(), threads, [&](std::size_t i) {
        terms[i] = i < n_int ? interior_term(g.interior[i]) : divisor_term(g.divisor[i - n_int]);
    });
    return RatFunc::sum(terms);
}

QSeries degree0_partition_function(const ToricGeometry& g, int order, unsigned threads)
{
    return pow_exponent(macmahon(order, true), bott_exponent(g, threads));
}

QSeries winfty_series(int order)
{
    return pow_exponent(macmahon(order, true), RatFunc::parse("(s2+s3)/(s1)"));
}

QSeries degree0_local_product(const ToricGeometry& g, const QSeries& vertex, int order, unsigned threads)
{
    validate(g);
    if (vertex.order() < order) throw InvalidArgument("vertex series is shorter than the requested order");
    QSeries w = vertex.truncated(order);
    QSeries w_inf = g.divisor.empty() ? QSeries::one(order) : winfty_series(order);

    std::size_t n_int = g.interior.size();
    std::vector<QSeries> factors(n_int + g.divisor.size(), QSeries(order));
    parallel_for(factors.size(), threads, [&](std::size_t i) {
        std::map<int, RatFunc> subst;
        if (i < n_int) {
            const auto& p = g.interior[i];
            for (int k = 0; k < 3; ++k) subst[k] = form_value(-p.weights[static_cast<std::size_t>(k)]);
            factors[i] = w.specialize(subst);
        } else {
            const auto& p = g.divisor[i - n_int];
            subst[0] = form_value(p.normal);
            subst[1] = form_value(-p.tangent[0]);
            subst[2] = form_value(-p.tangent[1]);
            factors[i] = w_inf.specialize(subst);
        }
    });
    QSeries out = QSeries::one(order);
    for (const auto& f : factors) out = out * f;
    return out;
}

RatFunc s1_polar_part(const RatFunc& f)
{
    const LinearForm s1 = LinearForm::coordinate(0);
    auto it = f.denominator().find(s1);
    if (it == f.denominator().end()) return RatFunc();
    const int k = it->second;

    // Taylor coefficients in s1 of f * s1^k, up to s1^{k-1}; coefficients are free of s1.
    std::vector<RatFunc> series(static_cast<std::size_t>(k));
    for (const auto& [e, c] : f.numerator().terms()) {
        if (e[0] < k) series[static_cast<std::size_t>(e[0])] += RatFunc(MultiPoly::monomial({0, e[1], e[2]}, c));
    }
    for (const auto& [form, e] : f.denominator()) {
        if (form == s1) continue;
        // 1/(a s1 + b)^e = sum_j binom(-e, j) a^j s1^j / b^{e+j}
        Rational a(static_cast<long>(form[0]));
        RatFunc b(MultiPoly(LinearForm(0, form[1], form[2])));
        std::vector<RatFunc> expansion(static_cast<std::size_t>(k));
        Rational binom = 1;
        RatFunc inv_b = RatFunc(1) / b;
        RatFunc term = inv_b.pow(e);
        for (int j = 0; j < k; ++j) {
            expansion[static_cast<std::size_t>(j)] = RatFunc(binom * vertexeum::pow(a, j)) * term;
            binom = binom * Rational(-e - j) / Rational(j + 1);
            term = term * inv_b;
        }
        std::vector<RatFunc> product(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) {
            for (int j = 0; i + j < k; ++j) {
                product[static_cast<std::size_t>(i + j)] +=
                    series[static_cast<std::size_t>(i)] * expansion[static_cast<std::size_t>(j)];
            }
        }
        series = std::move(product);
    }
    std::vector<RatFunc> polar;
    for (int i = 0; i < k; ++i) {
        polar.push_back(series[static_cast<std::size_t>(i)] * RatFunc(MultiPoly(1), 1, {{s1, k - i}}));
    }
    return RatFunc::sum(polar);
}

const std::vector<std::string>& builtin_geometry_names()
{
    static const std::vector<std::string> names{"affine3", "p3", "p1xp1xp1", "p1xc2-rel"};
    return names;
}

ToricGeometry builtin_geometry(const std::string& name)
{
    if (name == "affine3") return affine3();
    if (name == "p3") return p3();
    if (name == "p1xp1xp1") return p1xp1xp1();
    if (name == "p1xc2-rel") return p1xc2_rel();
    throw InvalidArgument("unknown built-in geometry '" + name + "'");
}

ToricGeometry parse_geometry(const std::string& json_text)
{
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw InvalidArgument(std::string("geometry document is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw InvalidArgument("geometry document must be an object");
    check_keys(doc, {"name", "interior", "divisor", "compact"}, "geometry");

    ToricGeometry g;
    const json& name = require(doc, "name", "geometry");
    if (!name.is_string()) throw InvalidArgument("geometry: 'name' must be a string");
    g.name = name.get<std::string>();

    const json& interior = require(doc, "interior", "geometry");
    if (!interior.is_array()) throw InvalidArgument("geometry: 'interior' must be an array");
    for (std::size_t i = 0; i < interior.size(); ++i) {
        const json& pt = interior[i];
        std::string where = "interior[" + std::to_string(i) + "]";
        if (!pt.is_object()) throw InvalidArgument(where + ": expected an object");
        check_keys(pt, {"label", "weights"}, where);
        FixedPoint p;
        p.label = pt.contains("label") ? pt["label"].get<std::string>() : "p" + std::to_string(i);
        const json& ws = require(pt, "weights", where);
        if (!ws.is_array() || ws.size() != 3) throw InvalidArgument(where + ": 'weights' must hold three triples");
        for (std::size_t k = 0; k < 3; ++k) p.weights[k] = read_weight(ws[k], where + ".weights");
        g.interior.push_back(p);
    }

    if (doc.contains("divisor")) {
        const json& divisor = doc["divisor"];
        if (!divisor.is_array()) throw InvalidArgument("geometry: 'divisor' must be an array");
        for (std::size_t i = 0; i < divisor.size(); ++i) {
            const json& pt = divisor[i];
            std::string where = "divisor[" + std::to_string(i) + "]";
            if (!pt.is_object()) throw InvalidArgument(where + ": expected an object");
            check_keys(pt, {"label", "normal", "tangent"}, where);
            DivisorFixedPoint p;
            p.label = pt.contains("label") ? pt["label"].get<std::string>() : "d" + std::to_string(i);
            p.normal = read_weight(require(pt, "normal", where), where + ".normal");
            const json& ts = require(pt, "tangent", where);
            if (!ts.is_array() || ts.size() != 2) throw InvalidArgument(where + ": 'tangent' must hold two triples");
            for (std::size_t k = 0; k < 2; ++k) p.tangent[k] = read_weight(ts[k], where + ".tangent");
            g.divisor.push_back(p);
        }
    }

    if (doc.contains("compact")) {
        if (!doc["compact"].is_boolean()) throw InvalidArgument("geometry: 'compact' must be a boolean");
        g.compact = doc["compact"].get<bool>();
    }
    validate(g);
    return g;
}

std::string serialize_geometry(const ToricGeometry& g)
{
    json doc = json::object();
    doc["name"] = g.name;
    doc["interior"] = json::array();
    for (const auto& p : g.interior) {
        json ws = json::array();
        for (const auto& w : p.weights) ws.push_back(w);
        doc["interior"].push_back({{"label", p.label}, {"weights", ws}});
    }
    doc["divisor"] = json::array();
    for (const auto& p : g.divisor) {
        doc["divisor"].push_back({{"label", p.label}, {"normal", p.normal}, {"tangent", {p.tangent[0], p.tangent[1]}}});
    }
    doc["compact"] = g.compact;
    return doc.dump(2);
}

ToricGeometry load_geometry(const std::string& name_or_path)
{
    for (const auto& n : builtin_geometry_names()) {
        if (n == name_or_path) return builtin_geometry(n);
    }
    std::ifstream in(name_or_path);
    if (!in) throw InvalidArgument("'" + name_or_path + "' is neither a built-in geometry nor a readable file");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_geometry(buf.str());
}

} // namespace vertexeum
