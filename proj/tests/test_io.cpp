#include <gtest/gtest.h>

#include "indeque/generators.hpp"
#include "indeque/io.hpp"
#include "oracles.hpp"

using namespace indeque;

namespace {

const std::string kP70 =
    "~?@EhCGGC@?G?_@?@??_?G?@??C??G??G??C??@???G???_??@???@????_???G???@????C????G????G????C????@?????G?????_????"
    "@?????@??????_?????G?????@??????C??????G??????G??????C??????@???????G???????_??????@???????@????????_???????G?"
    "??????@????????C????????G????????G????????C????????@?????????G?????????_????????@?????????@??????????_????????"
    "?G?????????@??????????C??????????G??????????G??????????C??????????@???????????G";

const std::string kC63 =
    "~??~hCGGC@?G?_@?@??_?G?@??C??G??G??C??@???G???_??@???@????_???G???@????C????G????G????C????@?????G?????_????"
    "@?????@??????_?????G?????@??????C??????G??????G??????C??????@???????G???????_??????@???????@????????_???????G?"
    "??????@????????C????????G????????G????????C????????@?????????G?????????_????????@?????????@??????????o????????"
    "?G";

}  // namespace

TEST(Graph6, KnownEncodings) {
  EXPECT_EQ(serialize_graph6(complete(3)), "Bw");
  EXPECT_EQ(serialize_graph6(cycle(4)), "Cl");
  EXPECT_EQ(serialize_graph6(path(6)), "EhCG");
  EXPECT_EQ(serialize_graph6(Graph(0)), "?");
  EXPECT_EQ(serialize_graph6(Graph(1)), "@");
  EXPECT_EQ(serialize_graph6(apexiated_octahedron()), "I]~tShcU?");
  EXPECT_EQ(serialize_graph6(path(70)), kP70);
  EXPECT_EQ(serialize_graph6(cycle(63)), kC63);
}

TEST(Graph6, ParsesKnownEncodings) {
  EXPECT_EQ(parse_graph6("Bw"), complete(3));
  EXPECT_EQ(parse_graph6("Cl"), cycle(4));
  EXPECT_EQ(parse_graph6(">>graph6<<EhCG"), path(6));
  EXPECT_EQ(parse_graph6(kP70), path(70));
  EXPECT_EQ(parse_graph6(kC63), cycle(63));
  const auto oct = parse_graph6("I]~tShcU?");
  EXPECT_EQ(oct.order(), 10);
  EXPECT_EQ(oct.edge_count(), 24u);
}

TEST(Graph6, MatchesIndependentEncoder) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const auto g = random_graph(seed, static_cast<int>(seed % 80), static_cast<int>(seed * 7 % 100));
    const auto line = serialize_graph6(g);
    EXPECT_EQ(line, oracle::graph6(g)) << seed;
    EXPECT_EQ(parse_graph6(line), g) << seed;
  }
}

TEST(Graph6, Rejections) {
  EXPECT_THROW(parse_graph6(":Fa@x^"), UnsupportedFormat);
  EXPECT_THROW(parse_graph6(">>sparse6<<:Fa@x^"), UnsupportedFormat);
  EXPECT_THROW(parse_graph6("&Cl"), UnsupportedFormat);
  EXPECT_THROW(parse_graph6("C l"), ParseError);
  EXPECT_THROW(parse_graph6("Clx"), ParseError);  // body too long
  EXPECT_THROW(parse_graph6("C"), ParseError);    // body too short
  EXPECT_THROW(parse_graph6("Bx"), ParseError);   // padding bits set
  EXPECT_THROW(parse_graph6(""), ParseError);
  try {
    parse_graph6("C\x7f", 12);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 12u);
  }
}

TEST(EdgeList, RoundTrip) {
  const auto g = apexiated_octahedron();
  const auto text = serialize_edge_list(g);
  EXPECT_EQ(parse_edge_list(text), g);
  EXPECT_EQ(parse_edge_list("# a path\n3 2\n0 1\n\n1 2 # tail\n"), path(3));
}

TEST(EdgeList, ErrorsCarryLineNumbers) {
  auto line_of = [](const std::string& text) -> std::size_t {
    try {
      parse_edge_list(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  EXPECT_EQ(line_of("3 2\n0 1\n"), 2u);        // too few edges
  EXPECT_EQ(line_of("3 1\n0 1\n1 2\n"), 3u);   // too many
  EXPECT_EQ(line_of("3 1\n0 3\n"), 2u);        // out of range
  EXPECT_EQ(line_of("3 1\n# c\n2 2\n"), 3u);   // self-loop
  EXPECT_EQ(line_of("3 x\n"), 1u);
  EXPECT_THROW(parse_edge_list("# only comments\n"), Error);
}

TEST(ReadGraph, DetectsFormat) {
  EXPECT_EQ(read_graph("Cl\n"), cycle(4));
  EXPECT_EQ(read_graph("# comment\n4 4\n0 1\n1 2\n2 3\n3 0\n"), cycle(4));
  try {
    read_graph("  \n\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("no graph"), std::string::npos);
  }
}
