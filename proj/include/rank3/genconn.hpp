#pragma once

#include <functional>
#include <vector>

#include "rank3/bigraph.hpp"
#include "rank3/canonical.hpp"
#include "rank3/perm_group.hpp"

namespace rank3 {

// One isomorphism class, as emitted by the generator: the canonical
// representative, its form, and its automorphism group acting on the
// representative's coatom labels.
struct GeneratedGraph {
  BicoloredGraph graph;
  CanonicalForm form;
  PermGroup automorphisms;
};

struct GenerationOptions {
  // Only classes with at most this many connectors; negative means no bound.
  int max_connectors = -1;
  int jobs = 1;
};

// Canonical augmentation over connector families: a child adds one
// neighborhood to its parent and is kept iff that neighborhood lies in the
// automorphism orbit of the child's canonically last neighborhood. Extensions
// are tried once per orbit of the parent's group.
//
// `visit(worker, graph)` is called exactly once per class. Calls with the
// same worker index are sequential; distinct workers may run concurrently.
// Visiting order depends on scheduling, so callers should aggregate
// commutatively.
void for_each_connection_graph(int coatoms, const GenerationOptions& options,
                               const std::function<void(int worker, const GeneratedGraph&)>& visit);

// All connection graphs of c coatoms, one per isomorphism class, as canonical
// representatives ordered by (r, canonical form).
std::vector<BicoloredGraph> generate_connection_graphs(int coatoms, int max_connectors = -1,
                                                       int jobs = 1);

struct ConnectorStats {
  int connectors = 0;          // r
  int isolated_coatoms = 0;    // s
};

ConnectorStats count_r_s(const BicoloredGraph& g);

// Maximum number of connectors for c coatoms, c(c-1)/2.
inline int max_connector_count(int coatoms) { return coatoms * (coatoms - 1) / 2; }

}  // namespace rank3
