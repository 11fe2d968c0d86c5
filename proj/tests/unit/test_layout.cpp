#include <doctest.h>

#include <fstream>
#include <sstream>
#include <string>

namespace {

std::string slurp(const std::string& relative) {
    std::ifstream in(std::string(SGK_SOURCE_DIR) + "/" + relative);
    REQUIRE(in.good());
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

}  // namespace

TEST_CASE("graph algorithms never touch compressed storage directly") {
    const auto text = slurp("include/sgk/algorithms.hpp");
    CHECK(text.find("offsets(") == std::string::npos);
    CHECK(text.find("minor_indices(") == std::string::npos);
}

TEST_CASE("oracles do not depend on the code they check") {
    for (const char* file : {"include/sgk/oracle/dense.hpp", "include/sgk/oracle/graph.hpp", "src/oracle/graph.cpp"}) {
        CAPTURE(file);
        const auto text = slurp(file);
        CHECK(text.find("kernels.hpp") == std::string::npos);
        CHECK(text.find("algorithms.hpp") == std::string::npos);
    }
}
