#ifndef VERTEXEUM_VERIFY_HPP
#define VERTEXEUM_VERIFY_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "vertexeum/partitions.hpp"
#include "vertexeum/vertex.hpp"

namespace vertexeum {

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::vector<Check> checks;

    bool passed() const;
    void add(std::string name, bool pass, std::string detail = {});
};

/// Shared, lazily computed inputs so that several suites can reuse one
/// enumeration and one vertex series.
class VerifyContext {
public:
    explicit VerifyContext(unsigned threads = 0) : threads_(threads) {}

    unsigned threads() const { return threads_; }
    const std::vector<Partition3D>& partitions(int n);
    /// W(0,0,0) through q^order.
    const VertexSeries& finite_series(int order);

private:
    unsigned threads_;
    std::map<int, std::vector<Partition3D>> partitions_;
    std::unique_ptr<VertexSeries> series_;
};

/// theorem0, cy, cubic, constant-term, character, degree1, toric, nakajima, degeneration, gwdt.
const std::vector<std::string>& suite_names();
int default_suite_order(const std::string& suite);

/// order < 0 selects the suite default. Throws InvalidArgument for unknown suites.
SuiteReport run_suite(const std::string& suite, VerifyContext& ctx, int order = -1);

} // namespace vertexeum

#endif
