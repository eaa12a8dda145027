#include "rank3/genconn.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <stdexcept>
#include <thread>

namespace rank3 {

namespace {

struct Node {
  std::vector<SubsetMask> sets;
  CanonicalLabeling labeling;
};

class Generator {
 public:
  Generator(int coatoms, int max_connectors) : c_(coatoms), max_r_(max_connectors) {
    for (SubsetMask m = 0; m <= full_subset(c_); ++m) {
      if (subset_size(m) >= 2) candidates_.push_back(m);
    }
  }

  Node root() const {
    return Node{{}, canonical_labeling(BicoloredGraph(c_, {}))};
  }

  std::vector<Node> children(const Node& node) const {
    std::vector<Node> out;
    if (static_cast<int>(node.sets.size()) >= max_r_) return out;

    const PermGroup& group = node.labeling.automorphisms;
    std::vector<SubsetMask> seen;
    for (SubsetMask t : candidates_) {
      bool linear = true;
      for (SubsetMask u : node.sets) {
        if (subset_size(t & u) > 1) {
          linear = false;
          break;
        }
      }
      if (!linear) continue;
      if (std::find(seen.begin(), seen.end(), group.block_normal_form(t)) != seen.end()) continue;
      for (const auto& g : group.transversal()) {
        const SubsetMask key = group.block_normal_form(g.apply(t));
        if (std::find(seen.begin(), seen.end(), key) == seen.end()) seen.push_back(key);
      }

      std::vector<SubsetMask> sets = node.sets;
      sets.push_back(t);
      CanonicalLabeling labeling = canonical_labeling(BicoloredGraph(c_, sets));
      const SubsetMask last = labeling.labeling.inverse().apply(labeling.form.neighborhoods().back());
      if (labeling.automorphisms.same_orbit(t, last)) {
        out.push_back(Node{std::move(sets), std::move(labeling)});
      }
    }
    return out;
  }

  static GeneratedGraph emitted(const Node& node) {
    const auto& lab = node.labeling;
    return GeneratedGraph{lab.form.graph(), lab.form, lab.automorphisms.conjugated(lab.labeling)};
  }

  void depth_first(const Node& node, int worker,
                   const std::function<void(int, const GeneratedGraph&)>& visit) const {
    visit(worker, emitted(node));
    for (const Node& child : children(node)) depth_first(child, worker, visit);
  }

 private:
  int c_;
  int max_r_;
  std::vector<SubsetMask> candidates_;
};

}  // namespace

void for_each_connection_graph(int coatoms, const GenerationOptions& options,
                               const std::function<void(int worker, const GeneratedGraph&)>& visit) {
  if (coatoms < 0 || coatoms > kMaxCoatoms) {
    throw std::invalid_argument("generation: coatom count out of range");
  }
  const int bound = max_connector_count(coatoms);
  const int max_r = options.max_connectors < 0 ? bound : std::min(options.max_connectors, bound);
  const Generator gen(coatoms, max_r);
  const int jobs = std::max(1, options.jobs);

  if (jobs == 1) {
    gen.depth_first(gen.root(), 0, visit);
    return;
  }

  // Expand breadth-first until there is enough independent work, emitting
  // the expanded levels from the calling thread.
  std::vector<Node> frontier;
  frontier.push_back(gen.root());
  while (frontier.size() < static_cast<std::size_t>(8 * jobs)) {
    std::vector<Node> next;
    for (const Node& node : frontier) {
      auto kids = gen.children(node);
      next.insert(next.end(), std::make_move_iterator(kids.begin()),
                  std::make_move_iterator(kids.end()));
    }
    if (next.empty()) break;
    for (const Node& node : frontier) visit(0, Generator::emitted(node));
    frontier = std::move(next);
  }

  std::atomic<std::size_t> cursor{0};
  std::vector<std::exception_ptr> errors(jobs);
  auto work = [&](int worker) {
    try {
      for (std::size_t i = cursor++; i < frontier.size(); i = cursor++) {
        gen.depth_first(frontier[i], worker, visit);
      }
    } catch (...) {
      errors[worker] = std::current_exception();
      cursor = frontier.size();
    }
  };
  std::vector<std::thread> threads;
  for (int w = 0; w < jobs; ++w) threads.emplace_back(work, w);
  for (auto& t : threads) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

std::vector<BicoloredGraph> generate_connection_graphs(int coatoms, int max_connectors, int jobs) {
  const int workers = std::max(1, jobs);
  std::vector<std::vector<CanonicalForm>> found(workers);
  for_each_connection_graph(coatoms, {max_connectors, workers},
                            [&](int worker, const GeneratedGraph& g) { found[worker].push_back(g.form); });

  std::vector<CanonicalForm> forms;
  for (auto& part : found) {
    forms.insert(forms.end(), std::make_move_iterator(part.begin()),
                 std::make_move_iterator(part.end()));
  }
  std::sort(forms.begin(), forms.end());
  std::vector<BicoloredGraph> graphs;
  graphs.reserve(forms.size());
  for (const auto& f : forms) graphs.push_back(f.graph());
  return graphs;
}

ConnectorStats count_r_s(const BicoloredGraph& g) {
  return ConnectorStats{g.connector_count(), g.isolated_coatom_count()};
}

}  // namespace rank3
