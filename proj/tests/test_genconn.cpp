#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "rank3/canonical.hpp"
#include "rank3/errors.hpp"
#include "rank3/genconn.hpp"
#include "rank3/oracle.hpp"

using namespace rank3;

TEST_CASE("connection graph census for c = 1..7") {
  const std::vector<std::size_t> expected = {1, 2, 5, 16, 72, 592, 10808};
  for (int c = 1; c <= 7; ++c) {
    CAPTURE(c);
    CHECK(generate_connection_graphs(c).size() == expected[c - 1]);
  }
}

TEST_CASE("three coatoms give 1, 2, 1, 1 graphs with r = 0, 1, 2, 3") {
  std::vector<int> per_r(4, 0);
  for (const auto& g : generate_connection_graphs(3)) ++per_r[g.connector_count()];
  CHECK(per_r == std::vector<int>{1, 2, 1, 1});
}

TEST_CASE("output is valid, isomorph-free and ordered by (r, form)") {
  for (int c = 1; c <= 6; ++c) {
    const auto graphs = generate_connection_graphs(c);
    std::set<CanonicalForm> forms;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      CHECK(validate_connection_graph(graphs[i]));
      CHECK(canonical_form(graphs[i]).neighborhoods().size() ==
            static_cast<std::size_t>(graphs[i].connector_count()));
      forms.insert(canonical_form(graphs[i]));
      if (i > 0) {
        CHECK(graphs[i - 1].connector_count() <= graphs[i].connector_count());
        CHECK(canonical_form(graphs[i - 1]) < canonical_form(graphs[i]));
      }
    }
    CHECK(forms.size() == graphs.size());
  }
}

TEST_CASE("generation is complete against exhaustive labeled enumeration, c <= 4") {
  for (int c = 1; c <= 4; ++c) {
    std::set<std::vector<SubsetMask>> expected;
    for (const auto& g : oracle::labeled_families(c)) expected.insert(oracle::min_form(g));
    std::set<std::vector<SubsetMask>> got;
    for (const auto& g : generate_connection_graphs(c)) got.insert(oracle::min_form(g));
    CHECK(got == expected);
  }
}

TEST_CASE("worker count does not change the output") {
  CHECK(generate_connection_graphs(6, -1, 3) == generate_connection_graphs(6));
  CHECK(generate_connection_graphs(7, -1, 4) == generate_connection_graphs(7));
}

TEST_CASE("connector bound keeps exactly the small classes") {
  const auto all = generate_connection_graphs(6);
  for (int bound : {0, 1, 3, 6}) {
    std::vector<BicoloredGraph> expected;
    for (const auto& g : all) {
      if (g.connector_count() <= bound) expected.push_back(g);
    }
    CHECK(generate_connection_graphs(6, bound) == expected);
  }
}

TEST_CASE("emitted automorphism groups match the representatives") {
  for (int c = 1; c <= 6; ++c) {
    for_each_connection_graph(c, {}, [&](int, const GeneratedGraph& g) {
      CHECK(g.automorphisms.elements() == automorphism_group_on_coatoms(g.graph).elements());
      CHECK(g.form == canonical_form(g.graph));
    });
  }
}

TEST_CASE("r and s") {
  CHECK(count_r_s(BicoloredGraph(3, {0b011, 0b110})).connectors == 2);
  CHECK(count_r_s(BicoloredGraph(3, {0b011, 0b110})).isolated_coatoms == 0);
  CHECK(count_r_s(BicoloredGraph(3, {})).isolated_coatoms == 3);
  const auto one = count_r_s(BicoloredGraph(3, {0b011}));
  CHECK(one.connectors + one.isolated_coatoms == 2);
  // r + s <= c(c-1)/2 from c = 3 on; below that the empty graph has s = c.
  for (int c = 1; c <= 7; ++c) {
    for (const auto& g : generate_connection_graphs(c)) {
      const auto rs = count_r_s(g);
      CHECK(rs.connectors + rs.isolated_coatoms <= std::max(max_connector_count(c), c));
    }
  }
}

TEST_CASE("brute-force lattice counts") {
  CHECK(brute_force_count(3, 3) == 8);
  CHECK(brute_force_count(4, 4) == 34);
  for (int a = 1; a <= 13; ++a) CHECK(brute_force_count(1, a) == 1);
  for (int a = 1; a <= 12; ++a) CHECK(brute_force_count(2, a) == a);
  CHECK_THROWS_AS(brute_force_count(7, 8), ResourceLimitError);
}

TEST_CASE("both orientations of the brute-force count agree") {
  for (int c = 1; c <= 10; ++c) {
    for (int a = c + 1; c + a <= 11; ++a) {
      CAPTURE(c);
      CAPTURE(a);
      CHECK(brute_force_count_oriented(c, a) == brute_force_count_oriented(a, c));
    }
  }
  CHECK(brute_force_count_oriented(5, 4) == 68);
  CHECK(brute_force_count_oriented(4, 5) == 68);
}
