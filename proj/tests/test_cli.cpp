#include <doctest.h>

#include <fstream>
#include <sstream>

#include "testgen.hpp"

using namespace gma;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE_MESSAGE(in.good(), "cannot open " << path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct GoldenCase {
    const char* name;
    int exit_code;
};

// every verb appears at least once
const GoldenCase kCases[] = {
    {"detect_euler", 0},     {"detect_negative", 2},     {"detect_conjugate", 0},
    {"exp_generators", 0},   {"exp_expr", 0},            {"extract_section3", 0},
    {"slice_bezout", 0},     {"slice_lattice", 0},       {"slice_trivial", 0},
    {"conjugate_section3", 0}, {"verify_valid", 0},      {"verify_cocycle_fail", 0},
    {"weight_slice", 0},     {"weight_none", 0},         {"isslice_true", 0},
    {"isslice_false", 0},
};

} // namespace

TEST_CASE("golden sessions reproduce byte-identical output") {
    for (const auto& c : kCases) {
        CAPTURE(c.name);
        std::string dir = GMA_GOLDEN_DIR;
        std::string session = slurp(dir + "/" + c.name + ".gma");
        std::string expected = slurp(dir + "/" + c.name + ".out");
        RunResult r = run_session_text(session);
        CHECK(r.exit_code == c.exit_code);
        CHECK(r.output == expected);
        // determinism: a second run yields the same bytes
        RunResult again = run_session_text(session);
        CHECK(again.output == r.output);
    }
}
