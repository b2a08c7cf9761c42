#include <gtest/gtest.h>

#include <sstream>

#include "helpers.hpp"
#include "ostar/error.hpp"
#include "ostar/graph_io.hpp"
#include "ostar/search.hpp"

using namespace ostar;

namespace {

ErrorKind parse_kind(const std::string& text) {
    std::istringstream in(text);
    try {
        read_graph(in);
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "accepted: " << text;
    return ErrorKind::DomainError;
}

}  // namespace

TEST(GraphIo, WritesCanonicalText) {
    EXPECT_EQ(to_graph_text(test::star21()), "dg 4\n0 1\n0 2\n3 0\n");
    EXPECT_EQ(to_graph_text(OrientedGraph::empty(3)), "dg 3\n");
}

TEST(GraphIo, ReadsCommentsAndBlankLines) {
    std::istringstream in("# header comment\n\ndg 4\n# arcs\n3 0\n0 1\n0 2\n");
    EXPECT_EQ(read_graph(in), test::star21());
}

TEST(GraphIo, RoundTripsRandomGraphs) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto g = random_oriented_graph(1 + seed, seed);
        std::istringstream in(to_graph_text(g));
        EXPECT_EQ(read_graph(in), g);
    }
}

TEST(GraphIo, RejectsMalformedInput) {
    EXPECT_EQ(parse_kind(""), ErrorKind::ParseError);
    EXPECT_EQ(parse_kind("0 1\n"), ErrorKind::ParseError);
    EXPECT_EQ(parse_kind("dg 0\n"), ErrorKind::ParseError);
    EXPECT_EQ(parse_kind("dg 3\n0 3\n"), ErrorKind::ParseError);
    EXPECT_EQ(parse_kind("dg 3\n1 1\n"), ErrorKind::ParseError);
    EXPECT_EQ(parse_kind("dg 3\n0 1\n0 1\n"), ErrorKind::ParseError);
    EXPECT_EQ(parse_kind("dg 3\n0 1\n1 0\n"), ErrorKind::ParseError);
    EXPECT_EQ(parse_kind("dg 3\n0 x\n"), ErrorKind::ParseError);
}

TEST(GraphIo, ErrorsCarryLineNumbers) {
    std::istringstream in("dg 3\n0 1\n1 0\n");
    try {
        read_graph(in);
        FAIL();
    } catch (const Error& e) {
        EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
    }
}

TEST(GraphIo, ReadsDataFiles) {
    EXPECT_EQ(read_graph_file(std::string(OSTAR_TEST_DATA) + "/star21.dg"), test::star21());
    EXPECT_EQ(read_graph_file(std::string(OSTAR_TEST_DATA) + "/c4.dg"), test::cycle4());
    EXPECT_THROW(read_graph_file("/nonexistent/graph.dg"), Error);
}
