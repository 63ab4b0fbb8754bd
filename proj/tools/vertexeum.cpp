#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "vertexeum/correspondence.hpp"
#include "vertexeum/parallel.hpp"
#include "vertexeum/partitions.hpp"
#include "vertexeum/toric.hpp"
#include "vertexeum/verify.hpp"
#include "vertexeum/vertex.hpp"

using namespace vertexeum;
using nlohmann::json;

namespace {

constexpr int kArgumentError = 2;
constexpr int kVerificationFailure = 1;

json box_json(const Box& b) { return json::array({b[0], b[1], b[2]}); }

json legs_json(const Legs& legs)
{
    json out = json::array();
    for (const auto& l : legs) out.push_back(l.parts());
    return out;
}

json series_json(const QSeries& s)
{
    json out = json::array();
    for (const auto& c : s.coefficient_strings()) out.push_back(c);
    return out;
}

void print_series(const QSeries& s)
{
    auto coeffs = s.coefficient_strings();
    for (std::size_t n = 0; n < coeffs.size(); ++n) std::cout << "q^" << n << ": " << coeffs[n] << "\n";
}

std::string read_file(const std::string& path)
{
    if (path == "-") {
        std::stringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot read '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int cmd_enumerate(int n, const std::string& legs_text, bool as_json)
{
    if (n < 0) throw InvalidArgument("--n must be nonnegative");
    Legs legs = parse_legs(legs_text);
    json parts = json::array();
    std::vector<std::string> text;
    if (legs_empty(legs)) {
        for (const auto& pi : enumerate_finite(n)) {
            json boxes = json::array();
            for (const auto& b : pi.boxes()) boxes.push_back(box_json(b));
            parts.push_back(boxes);
            text.push_back(pi.to_text());
        }
    } else {
        for (const auto& pi : enumerate_with_legs(legs, n)) {
            json boxes = json::array();
            std::string t;
            for (const auto& b : pi.extra_boxes()) {
                boxes.push_back(box_json(b));
                t += std::to_string(b[0]) + "," + std::to_string(b[1]) + "," + std::to_string(b[2]) + "\n";
            }
            parts.push_back(boxes);
            text.push_back(t);
        }
    }
    if (as_json) {
        json out{{"n", n}, {"legs", legs_json(legs)}, {"count", parts.size()}, {"partitions", parts}};
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << parts.size() << " partitions of volume " << n;
    if (!legs_empty(legs)) std::cout << " with legs " << legs_to_string(legs) << " (boxes outside the cylinders)";
    std::cout << "\n";
    for (std::size_t i = 0; i < text.size(); ++i) {
        std::cout << "# " << i << "\n" << text[i];
    }
    return 0;
}

int cmd_measure(const std::string& path, bool as_json)
{
    Partition3D pi = Partition3D::parse_text(read_file(path));
    LaurentCharacter v = vertex_character(pi);
    FactoredMeasure w = measure_from_character(v);
    if (as_json) {
        json boxes = json::array();
        for (const auto& b : pi.boxes()) boxes.push_back(box_json(b));
        json character = json::array();
        for (const auto& [k, c] : v.terms()) character.push_back({{"k", json::array({k[0], k[1], k[2]})}, {"v", c}});
        json factors = json::array();
        for (const auto& [f, e] : w.factors()) factors.push_back({{"form", f.to_string()}, {"exponent", e}});
        json out{{"boxes", boxes},       {"size", pi.size()},           {"character", character},
                 {"scalar", to_string(w.scalar())}, {"factors", factors}, {"measure", w.to_string()},
                 {"value", w.to_ratfunc().to_string()}};
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << "boxes: " << pi.size() << "\n";
    std::cout << "V: " << v.to_string() << "\n";
    std::cout << "w: " << w.to_string() << "\n";
    return 0;
}

int cmd_series(int order, const std::string& legs_text, unsigned threads, bool as_json)
{
    if (order < 0) throw InvalidArgument("--order must be nonnegative");
    Legs legs = parse_legs(legs_text);
    VertexSeries w = vertex_series(legs, order, threads);
    if (as_json) {
        json out{{"legs", legs_json(legs)},
                 {"order", order},
                 {"counts", w.counts},
                 {"coefficients", series_json(w.series())}};
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << "W" << legs_to_string(legs) << " to q^" << order << "\n";
    print_series(w.series());
    return 0;
}

int cmd_verify(const std::string& suite, int order, unsigned threads, bool as_json)
{
    VerifyContext ctx(threads);
    SuiteReport report = run_suite(suite, ctx, order);
    if (as_json) {
        json checks = json::array();
        for (const auto& c : report.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        json out{{"suite", report.suite}, {"pass", report.passed()}, {"checks", checks}};
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& c : report.checks) {
            std::cout << (c.pass ? "PASS  " : "FAIL  ") << c.name;
            if (!c.detail.empty()) std::cout << "  [" << c.detail << "]";
            std::cout << "\n";
        }
        std::cout << report.suite << ": " << (report.passed() ? "PASS" : "FAIL") << " (" << report.checks.size()
                  << " checks)\n";
    }
    return report.passed() ? 0 : kVerificationFailure;
}

int cmd_toric(const std::string& what, const std::string& geometry, int order, unsigned threads, bool as_json)
{
    ToricGeometry g = load_geometry(geometry);
    if (what == "geometry") {
        std::cout << serialize_geometry(g) << "\n";
        return 0;
    }
    RatFunc e = bott_exponent(g, threads);
    if (what == "exponent") {
        if (as_json) {
            std::cout << json{{"geometry", g.name}, {"exponent", e.to_string()}, {"constant", e.is_constant()}}.dump(2)
                      << "\n";
        } else {
            std::cout << e.to_string() << "\n";
        }
        return 0;
    }
    if (order < 0) throw InvalidArgument("--order must be nonnegative");
    QSeries z = degree0_partition_function(g, order, threads);
    if (as_json) {
        std::cout << json{{"geometry", g.name}, {"exponent", e.to_string()}, {"order", order}, {"coefficients", series_json(z)}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "Z(" << g.name << ")_0 = M(-q)^(" << e.to_string() << ")\n";
        print_series(z);
    }
    return 0;
}

int cmd_gwdt(const std::string& what, int g, int d, bool as_json)
{
    TrigExpr gw;
    DTRational dt;
    json out;
    if (what == "local") {
        gw = gw_local_curve(g, d);
        dt = dt_local_curve(g, d);
        out = {{"g", g}, {"d", d}};
    } else {
        gw = p3_line_gw();
        dt = p3_example();
        out = {{"d", 4}, {"sum_k", 1}};
    }
    if (as_json) {
        out["gw"] = gw.to_string();
        out["dt"] = dt.to_string();
        out["lowest_power"] = dt.lowest_power();
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "GW: " << gw.to_string() << "\n";
        std::cout << "DT: " << dt.to_string() << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Equivariant vertex and degree 0 Donaldson-Thomas computations"};
    app.require_subcommand(1);

    bool as_json = false;
    unsigned threads = 0;
    app.add_flag("--json", as_json, "Structured output");
    app.add_option("--threads", threads, "Worker cap (default: VERTEXEUM_THREADS or hardware)");

    int n = 0;
    std::string legs;
    auto* enumerate = app.add_subcommand("enumerate", "List partitions of a given renormalized volume");
    enumerate->add_option("--n", n, "Volume")->required();
    enumerate->add_option("--legs", legs, "Leg partitions, e.g. \"2.1,,1\"");

    std::string partition_file;
    auto* measure = app.add_subcommand("measure", "Vertex character and measure of a finite partition");
    measure->add_option("--partition", partition_file, "File with one x,y,z triple per line ('-' for stdin)")
        ->required();

    int order = -1;
    auto* series = app.add_subcommand("series", "Vertex series W(l1,l2,l3) to a given order");
    series->add_option("--order", order, "Truncation order (default 6)")->check(CLI::NonNegativeNumber);
    series->add_option("--legs", legs, "Leg partitions");

    std::string suite;
    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("suite", suite, "Suite name")->required()->check(CLI::IsMember(suite_names()));
    verify->add_option("--order", order, "Suite order (default depends on the suite)")->check(CLI::NonNegativeNumber);

    std::string toric_what, geometry;
    auto* toric = app.add_subcommand("toric", "Degree 0 partition functions of toric 3-folds");
    toric->add_option("what", toric_what, "exponent | z0 | geometry")
        ->required()
        ->check(CLI::IsMember({"exponent", "z0", "geometry"}));
    toric->add_option("--geometry", geometry, "Built-in name or JSON file")->required();
    toric->add_option("--order", order, "Truncation order (default 6)")->check(CLI::NonNegativeNumber);

    std::string gwdt_what;
    int g = 0, d = 0;
    auto* gwdt = app.add_subcommand("gwdt", "GW to DT change of variables on closed forms");
    gwdt->add_option("what", gwdt_what, "local | p3-example")->required()->check(CLI::IsMember({"local", "p3-example"}));
    gwdt->add_option("--g", g, "Genus");
    gwdt->add_option("--d", d, "Degree");

    for (auto* sub : {enumerate, measure, series, verify, toric, gwdt}) {
        sub->add_flag("--json", as_json, "Structured output");
        sub->add_option("--threads", threads, "Worker cap");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kArgumentError;
    }

    try {
        unsigned workers = resolve_threads(threads);
        if (enumerate->parsed()) return cmd_enumerate(n, legs, as_json);
        if (measure->parsed()) return cmd_measure(partition_file, as_json);
        if (series->parsed()) return cmd_series(order < 0 ? kDefaultOrder : order, legs, workers, as_json);
        if (verify->parsed()) return cmd_verify(suite, order, workers, as_json);
        if (toric->parsed()) return cmd_toric(toric_what, geometry, order < 0 ? kDefaultOrder : order, workers, as_json);
        if (gwdt->parsed()) {
            if (gwdt_what == "local" && (gwdt->count("--g") == 0 || gwdt->count("--d") == 0)) {
                throw InvalidArgument("gwdt local needs --g and --d");
            }
            return cmd_gwdt(gwdt_what, g, d, as_json);
        }
    } catch (const InvalidArgument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kArgumentError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kVerificationFailure;
    }
    return kArgumentError;
}
