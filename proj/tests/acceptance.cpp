// One PASS/FAIL line per acceptance criterion; exits nonzero on any failure.

#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#include "vertexeum/verify.hpp"

using namespace vertexeum;

namespace {

struct Criterion {
    int number;
    std::string title;
    std::vector<std::pair<std::string, int>> suites;  // suite, order
};

} // namespace

int main()
{
    const std::vector<Criterion> criteria{
        {1, "W(0,0,0) = M(-q)^-c through q^6, exact", {{"theorem0", 6}}},
        {2, "CY specialization of W(0,0,0) equals M(-q) through q^6", {{"cy", 6}}},
        {3, "cubic factor divides w(pi) and constant-term identity, |pi| <= 6", {{"cubic", 6}, {"constant-term", 6}}},
        {4, "W((1),0,0) = (1+q)^((s2+s3)/s1) M(-q)^-c through q^4", {{"degree1", 4}}},
        {5, "vertex character sanity and S3 equivariance, |pi| <= 6", {{"character", 6}}},
        {6, "toric degree 0 exponents and local products through q^6", {{"toric", 6}}},
        {7, "Nakajima pairing, diagonal splitting and degeneration, k <= 4", {{"nakajima", 4}, {"degeneration", 4}}},
        {8, "GW to DT change of variables", {{"gwdt", 2}}},
    };

    VerifyContext ctx;
    int failures = 0;
    for (const auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        bool pass = true;
        std::size_t checks = 0;
        std::vector<std::string> failed;
        for (const auto& [suite, order] : c.suites) {
            try {
                SuiteReport report = run_suite(suite, ctx, order);
                checks += report.checks.size();
                for (const auto& check : report.checks) {
                    if (!check.pass) failed.push_back(suite + ": " + check.name + " [" + check.detail + "]");
                }
                pass = pass && report.passed() && !report.checks.empty();
            } catch (const std::exception& e) {
                pass = false;
                failed.push_back(suite + ": exception: " + e.what());
            }
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cout << (pass ? "PASS" : "FAIL") << "  " << c.number << ". " << c.title << " (" << checks << " checks, "
                  << secs << " s)\n";
        for (const auto& f : failed) std::cout << "      " << f << "\n";
        if (!pass) ++failures;
    }
    std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail") << "\n";
    return failures == 0 ? 0 : 1;
}
