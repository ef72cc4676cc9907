#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "dynfeat/errors.hpp"
#include "dynfeat/generators.hpp"
#include "dynfeat/graph.hpp"
#include "dynfeat/io.hpp"
#include "fixtures.hpp"
#include "support.hpp"

using namespace dynfeat;
using testing::TempDir;
using testing::write_file;

TEST_SUITE("graph") {
  TEST_CASE("construction normalizes and validates edges") {
    Graph g(3, {{2, 0, 1.0}, {1, 2, 2.0}});
    REQUIRE(g.edge_count() == 2);
    CHECK(g.edges()[0].u == 0);
    CHECK(g.edges()[0].v == 2);
    CHECK(g.edges()[1].u == 1);
    CHECK(g.is_weighted());

    CHECK_THROWS_AS(Graph(2, {{0, 0, 1.0}}), ArgumentError);
    CHECK_THROWS_AS(Graph(2, {{0, 1, 1.0}, {1, 0, 1.0}}), ArgumentError);
    CHECK_THROWS_AS(Graph(2, {{0, 2, 1.0}}), ArgumentError);
    CHECK_THROWS_AS(Graph(2, {{0, 1, 0.0}}), ArgumentError);
    CHECK_THROWS_AS(Graph(2, {{0, 1, -1.0}}), ArgumentError);
    CHECK_THROWS_AS(Graph(2, {}, std::vector<NodeLabel>{1}), ArgumentError);
  }

  TEST_CASE("adjacency counts each edge once per endpoint with sorted lists") {
    const auto g = testing::star_graph(4);
    const auto adj = g.adjacency();
    CHECK(adj.degree(0) == 3);
    for (std::size_t i = 1; i < 4; ++i) CHECK(adj.degree(i) == 1);
    std::mt19937_64 gen(5);
    const auto r = testing::random_graph(15, 0.4, gen, true);
    const auto a = r.adjacency();
    std::size_t total = 0;
    for (std::size_t i = 0; i < 15; ++i) {
      total += a.degree(i);
      CHECK(std::is_sorted(a.targets.begin() + a.offsets[i], a.targets.begin() + a.offsets[i + 1]));
    }
    CHECK(total == 2 * r.edge_count());
    const auto b = r.adjacency(true);
    CHECK(std::all_of(b.weights.begin(), b.weights.end(), [](double w) { return w == 1.0; }));
  }

  TEST_CASE("diagnose") {
    auto k3 = diagnose(testing::complete_graph(3));
    CHECK(k3.connected);
    CHECK_FALSE(k3.bipartite);
    CHECK(k3.isolated_vertex_count == 0);

    auto p3 = diagnose(testing::path_graph(3));
    CHECK(p3.connected);
    CHECK(p3.bipartite);

    auto two = diagnose(Graph(4, {{0, 1, 1.0}, {2, 3, 1.0}}));
    CHECK_FALSE(two.connected);
    CHECK(two.component_count == 2);

    auto iso = diagnose(Graph(3, {{0, 1, 1.0}}));
    CHECK(iso.isolated_vertex_count == 1);
    CHECK(iso.component_count == 2);
  }

  TEST_CASE("topology generators") {
    const auto k5 = generate_topology(Topology::clique, 5);
    CHECK(k5.edge_count() == 10);

    const auto s4 = generate_topology(Topology::star, 4).adjacency();
    CHECK(s4.degree(0) == 3);
    CHECK(s4.degree(1) == 1);
    CHECK(s4.degree(3) == 1);

    CHECK(generate_topology(Topology::erdos_renyi, 30, 0.4, 7) ==
          generate_topology(Topology::erdos_renyi, 30, 0.4, 7));
    CHECK(diagnose(generate_topology(Topology::erdos_renyi, 30, 0.4, 7)).connected);
    CHECK_FALSE(generate_topology(Topology::erdos_renyi, 30, 0.4, 7) ==
                generate_topology(Topology::erdos_renyi, 30, 0.4, 8));

    const auto ring = generate_topology(Topology::ring, 7).adjacency();
    for (std::size_t i = 0; i < 7; ++i) CHECK(ring.degree(i) == 2);

    const auto reg = generate_topology(Topology::regular, 12).adjacency();
    for (std::size_t i = 0; i < 12; ++i) CHECK(reg.degree(i) == 4);

    const auto c3 = generate_topology(Topology::communities3, 30);
    CHECK(c3.edge_count() == 3 * 45 + 2);
    CHECK(diagnose(c3).connected);

    CHECK_THROWS_AS(generate_topology(Topology::communities3, 31), ArgumentError);
    CHECK_THROWS_AS(generate_topology(Topology::ring, 2), ArgumentError);
    CHECK_THROWS_AS(generate_topology(Topology::erdos_renyi, 30, 0.0, 1), ArgumentError);
    CHECK_THROWS_AS(generate_topology(Topology::erdos_renyi, 40, 0.001, 1), GenerationError);

    for (auto kind : {Topology::communities3, Topology::ring, Topology::clique,
                      Topology::erdos_renyi, Topology::star, Topology::regular}) {
      CHECK(parse_topology(to_string(kind)) == kind);
    }
    CHECK_FALSE(parse_topology("torus").has_value());
  }

  TEST_CASE("synthetic dataset generator") {
    const auto ds = generate_synthetic_dataset(fixed_vertex_params(), 11);
    REQUIRE(ds.size() == 204);
    CHECK(std::count(ds.class_labels.begin(), ds.class_labels.end(), 0) == 91);
    CHECK(std::count(ds.class_labels.begin(), ds.class_labels.end(), 1) == 113);
    double edges_a = 0.0;
    double edges_b = 0.0;
    for (std::size_t i = 0; i < ds.size(); ++i) {
      CHECK(ds.graphs[i].vertex_count() == 84);
      for (const auto& e : ds.graphs[i].edges()) {
        CHECK(e.weight >= 1.0);
        CHECK(e.weight <= 10.0);
        CHECK(e.weight == std::floor(e.weight));
      }
      (ds.class_labels[i] == 0 ? edges_a : edges_b) += static_cast<double>(ds.graphs[i].edge_count());
    }
    edges_a /= 91.0;
    edges_b /= 113.0;
    CHECK(std::abs(edges_a - edges_b) / edges_a <= 0.05);
    CHECK(ds == generate_synthetic_dataset(fixed_vertex_params(), 11));

    const auto planted = generate_synthetic_dataset(planted_signal_params(), 3);
    CHECK(planted.size() == 200);
    for (const auto& g : planted.graphs) {
      CHECK(g.vertex_count() >= 20);
      CHECK(g.vertex_count() <= 40);
      CHECK_FALSE(g.is_weighted());
    }
  }
}

TEST_SUITE("io") {
  TEST_CASE("minimal TU dataset") {
    TempDir dir;
    write_file(dir / "T_A.txt", "1, 2\n2, 1\n");
    write_file(dir / "T_graph_indicator.txt", "1\n1\n");
    write_file(dir / "T_graph_labels.txt", "1\n");
    const auto ds = load_tu_dataset(dir.path(), "T");
    REQUIRE(ds.size() == 1);
    CHECK(ds.graphs[0].vertex_count() == 2);
    REQUIRE(ds.graphs[0].edge_count() == 1);
    CHECK(ds.graphs[0].edges()[0] == Edge{0, 1, 1.0});
    CHECK(ds.class_labels == std::vector<int>{0});
  }

  TEST_CASE("TU loader remaps ids, labels and weights") {
    TempDir dir;
    write_file(dir / "T_A.txt", "1,2\n2,1\n3,4\n4,3\n4,5\n5,4\n");
    write_file(dir / "T_graph_indicator.txt", "1\n1\n2\n2\n2\n");
    write_file(dir / "T_graph_labels.txt", "5\n-3\n");
    write_file(dir / "T_node_labels.txt", "4\n2\n2\n9\n4\n");
    write_file(dir / "T_edge_attributes.txt", "2.5\n2.5\n1\n1\n3, 0.1\n3, 0.1\n");
    const auto ds = load_tu_dataset(dir.path(), "T");
    REQUIRE(ds.size() == 2);
    CHECK(ds.class_labels == std::vector<int>{1, 0});
    CHECK(ds.label_universe == std::vector<NodeLabel>{2, 4, 9});
    CHECK(ds.graphs[1].vertex_count() == 3);
    CHECK(ds.graphs[1].edges()[0] == Edge{0, 1, 1.0});
    CHECK(ds.graphs[1].edges()[1] == Edge{1, 2, 3.0});
    CHECK(ds.graphs[0].edges()[0].weight == 2.5);
    CHECK(*ds.graphs[1].node_labels() == std::vector<NodeLabel>{2, 9, 4});
  }

  TEST_CASE("TU loader errors") {
    TempDir dir;
    CHECK_THROWS_AS(load_tu_dataset(dir.path(), "T"), FormatError);
    try {
      load_tu_dataset(dir.path(), "T");
    } catch (const FormatError& e) {
      CHECK(std::string(e.what()).find("T_A.txt") != std::string::npos);
    }

    write_file(dir / "T_graph_indicator.txt", "1\n1\n2\n");
    write_file(dir / "T_graph_labels.txt", "0\n1\n");
    write_file(dir / "T_A.txt", "1,3\n3,1\n");
    CHECK_THROWS_AS(load_tu_dataset(dir.path(), "T"), FormatError);

    write_file(dir / "T_A.txt", "1,4\n");
    CHECK_THROWS_AS(load_tu_dataset(dir.path(), "T"), FormatError);

    write_file(dir / "T_A.txt", "1,x\n");
    CHECK_THROWS_AS(load_tu_dataset(dir.path(), "T"), FormatError);

    write_file(dir / "T_A.txt", "1,2\n2,1\n");
    write_file(dir / "T_edge_attributes.txt", "0\n0\n");
    CHECK_THROWS_AS(load_tu_dataset(dir.path(), "T"), FormatError);
    write_file(dir / "T_edge_attributes.txt", "-2\n-2\n");
    CHECK_THROWS_AS(load_tu_dataset(dir.path(), "T"), FormatError);
  }

  TEST_CASE("TU save/load round trip") {
    std::mt19937_64 gen(3);
    Dataset ds;
    ds.name = "RT";
    for (int i = 0; i < 6; ++i) {
      auto g = testing::random_graph(8, 0.4, gen, i % 2 == 0);
      std::vector<NodeLabel> labels(8);
      for (std::size_t v = 0; v < 8; ++v) labels[v] = static_cast<NodeLabel>((v * 7 + i) % 3);
      ds.graphs.emplace_back(8, g.edges(), labels, std::to_string(i + 1));
      ds.class_labels.push_back(i % 3);
    }
    ds.label_universe = collect_label_universe(ds.graphs);
    TempDir dir;
    save_tu_dataset(ds, dir.path());
    const auto once = load_tu_dataset(dir.path(), "RT");
    save_tu_dataset(once, dir.path());
    const auto twice = load_tu_dataset(dir.path(), "RT");
    CHECK(once == twice);
    REQUIRE(once.size() == ds.size());
    for (std::size_t i = 0; i < ds.size(); ++i) {
      CHECK(once.graphs[i].edge_count() == ds.graphs[i].edge_count());
      CHECK(*once.graphs[i].node_labels() == *ds.graphs[i].node_labels());
    }
  }

  TEST_CASE("weighted format") {
    TempDir dir;
    const auto file = dir / "w.txt";
    write_file(file, "#n 3\ng1 0 1 5.0\ng1 1 2 3.0\n");
    write_file(weighted_classes_path(file), "g1 0\n");
    const auto ds = load_weighted_graphs(file);
    REQUIRE(ds.size() == 1);
    CHECK(ds.graphs[0].vertex_count() == 3);
    CHECK(ds.graphs[0].edges() == std::vector<Edge>{{0, 1, 5.0}, {1, 2, 3.0}});
    CHECK(ds.graphs[0].id() == "g1");

    write_file(file, "g1 0 4 1\n");
    CHECK(load_weighted_graphs(file).graphs[0].vertex_count() == 5);

    write_file(file, "g1 0 1 0\n");
    CHECK_THROWS_AS(load_weighted_graphs(file), FormatError);
    write_file(file, "g1 0 1 -1\n");
    CHECK_THROWS_AS(load_weighted_graphs(file), FormatError);
    write_file(file, "g1 0 1 1\ng1 1 0 2\n");
    CHECK_THROWS_AS(load_weighted_graphs(file), FormatError);

    write_file(file, "");
    std::filesystem::remove(weighted_classes_path(file));
    CHECK(load_weighted_graphs(file).size() == 0);
  }

  TEST_CASE("fixed-vertex synthetic dataset round-trips bit-identically") {
    auto ds = generate_synthetic_dataset(fixed_vertex_params(), 5);
    TempDir dir;
    save_weighted_graphs(ds, dir / "s.txt");
    const auto back = load_weighted_graphs(dir / "s.txt");
    REQUIRE(back.size() == 204);
    CHECK(back.graphs == ds.graphs);
    CHECK(back.class_labels == ds.class_labels);
    save_weighted_graphs(back, dir / "s2.txt");
    CHECK(testing::read_file(dir / "s.txt") == testing::read_file(dir / "s2.txt"));

    // Non-integer weights keep every bit too.
    Dataset frac;
    frac.name = "frac";
    frac.graphs.emplace_back(3, std::vector<Edge>{{0, 1, 0.1}, {1, 2, 1.0 / 3.0}}, std::nullopt, "a");
    frac.graphs.emplace_back(2, std::vector<Edge>{{0, 1, 2.718281828459045}}, std::nullopt, "b");
    frac.class_labels = {1, 0};
    save_weighted_graphs(frac, dir / "f.txt");
    const auto f = load_weighted_graphs(dir / "f.txt");
    CHECK(f.graphs == frac.graphs);
    CHECK(f.class_labels == frac.class_labels);
  }

  TEST_CASE("MUTAG statistics" * doctest::skip(!testing::has_tu_dataset("MUTAG"))) {
    const auto ds = load_tu_dataset(testing::data_dir() / "MUTAG", "MUTAG");
    const auto s = compute_stats(ds);
    CHECK(s.num_graphs == 188);
    CHECK(s.classes == 2);
    CHECK(s.node_labels == 7);
    CHECK(std::abs(s.avg_nodes - 17.93) <= 0.01);
    CHECK(std::abs(s.avg_edges - 19.79) <= 0.01);
    CHECK(format_stats_csv(s) == "MUTAG,188,2,7,17.93,19.79");
  }
}
