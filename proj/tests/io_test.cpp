#include "tonnetz/io.h"

#include <gtest/gtest.h>

#include <regex>

#include "tonnetz/builders.h"

namespace tonnetz {
namespace {

TEST(GraphJson, RoundTripKeepsLabelsColoursAndEdges) {
  auto t = build_eulerian();
  auto j = graph_to_json(t.graph);
  LabeledGraph back = graph_from_json(nlohmann::json::parse(j.dump()));
  ASSERT_EQ(back.num_vertices(), t.graph.num_vertices());
  ASSERT_EQ(back.num_edges(), t.graph.num_edges());
  for (int v = 0; v < back.num_vertices(); ++v) {
    EXPECT_EQ(back.vertex(v).label, t.graph.vertex(v).label);
    EXPECT_EQ(back.vertex(v).color, t.graph.vertex(v).color);
  }
  for (int e = 0; e < back.num_edges(); ++e) {
    EXPECT_EQ(back.edge(e).u, t.graph.edge(e).u);
    EXPECT_EQ(back.edge(e).v, t.graph.edge(e).v);
  }
}

TEST(GraphJson, RejectsDanglingEdge) {
  nlohmann::json j = graph_to_json(build_eulerian().graph);
  j["edges"][0][1] = 99;
  EXPECT_THROW(graph_from_json(j), std::exception);
}

TEST(Dot, NodeAndEdgeCounts) {
  std::string dot = graph_to_dot(build_eulerian().graph);
  std::regex node("n\\d+ \\[label=");
  std::regex edge("n\\d+ -- n\\d+");
  EXPECT_EQ(std::distance(std::sregex_iterator(dot.begin(), dot.end(), node), std::sregex_iterator()), 24);
  EXPECT_EQ(std::distance(std::sregex_iterator(dot.begin(), dot.end(), edge), std::sregex_iterator()), 36);
  EXPECT_NE(dot.find("n23 [label=\"Bm\""), std::string::npos);
}

TEST(StructureJson, RoundTrip) {
  auto h = build_hexachordal();
  EXPECT_EQ(structure_from_json(nlohmann::json::parse(structure_to_json(h.structure).dump())), h.structure);
}

TEST(CycleJson, LabelsInOrder) {
  auto t = build_eulerian();
  auto c = make_cycle(t.graph, std::vector<std::string>{"CM", "Cm", "AbM", "G#m", "EM", "Em"});
  auto j = cycle_to_json(t.graph, c);
  std::vector<std::string> labels = j.at("vertices");
  EXPECT_EQ(labels.size(), 6u);
  EXPECT_EQ(labels.front(), "CM");
  EXPECT_EQ(j.at("length"), 6);
  auto v = cycle_vector_to_json(CycleVector::from_cycle(t.graph, c));
  EXPECT_EQ(v.at("edges").size(), 6u);
}

TEST(RealizationJson, ExactRoundTrip) {
  auto r = desargues_instance(make_rvec({0, 0, 1}), make_rvec({4, 1, 1}), make_rvec({1, 5, 1}),
                              make_rvec({-3, 2, 1}), Rational(1, 2), Rational(1, 3), Rational(2, 3));
  auto j = realization_to_json(r);
  // Coordinates are strings so nothing is rounded.
  EXPECT_TRUE(j.at("points")[0][0][0].is_string());
  Realization back = realization_from_json(nlohmann::json::parse(j.dump()));
  EXPECT_EQ(back.structure, r.structure);
  EXPECT_EQ(back.ambient, r.ambient);
  EXPECT_EQ(back.points, r.points);
  EXPECT_EQ(back.lines, r.lines);
  EXPECT_TRUE(verify_realization(back).ok());
}

TEST(ReportJson, Fields) {
  RealizationReport rep;
  rep.flags = rep.flags_ok = 30;
  rep.nonflags = rep.nonflags_ok = 70;
  rep.max_flag_residual = 0.0;
  rep.min_nonflag_residual = 0.25;
  auto j = report_to_json(rep);
  EXPECT_EQ(j.at("flags_ok"), 30);
  EXPECT_EQ(j.at("ok"), true);
}

}  // namespace
}  // namespace tonnetz
