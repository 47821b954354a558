#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mfass/model.hpp"

namespace mfass {

// Binary decomposition tree of a two-terminal series-parallel network.
// Leaves are arcs; internal nodes record a series or parallel composition.
struct SPTree {
  enum class Kind { leaf, series, parallel };
  struct Node {
    Kind kind = Kind::leaf;
    ArcId arc = -1;  // valid for leaves
    int left = -1;
    int right = -1;
  };
  std::vector<Node> nodes;
  int root = -1;

  int leaf_count() const;
};

// Irreducible remainder reported when recognition fails.
struct SPWitness {
  std::string message;
  std::vector<std::pair<NodeId, NodeId>> remainder_arcs;
};

// Recognizes a two-terminal series-parallel network by iterated local
// reductions (parallel bundles first, then lowest-numbered series node).
// Returns the SP-tree, or nullopt with a witness if irreducible.
std::optional<SPTree> decompose(const FlowNetwork& net, SPWitness* witness = nullptr);

// Subnetwork capacity of the tree under masked arcs: series = min,
// parallel = sum. Equals max_flow of the decomposed network.
Cap sp_capacity(const SPTree& tree, const std::vector<Cap>& capacities,
                const std::vector<bool>& shut_mask);
Cap sp_capacity(const SPTree& tree, const FlowNetwork& net, const std::vector<ArcId>& shut = {});

// Rebuilds a network from the tree (fresh node numbering). Arc ids and
// capacities are preserved; node ids match the original only up to relabeling.
FlowNetwork recompose(const SPTree& tree, const std::vector<Cap>& capacities);

// Nested text form, e.g. "S(P(0,1),2)". Used by golden tests.
std::string dump(const SPTree& tree);

}  // namespace mfass
