#include "mfass/sptree.hpp"

#include <algorithm>
#include <cassert>

namespace mfass {

namespace {

struct WorkArc {
  NodeId tail;
  NodeId head;
  int tree_node;
};

}  // namespace

int SPTree::leaf_count() const {
  int n = 0;
  for (const Node& node : nodes)
    if (node.kind == Kind::leaf) ++n;
  return n;
}

std::optional<SPTree> decompose(const FlowNetwork& net, SPWitness* witness) {
  if (net.arcs.empty()) throw PreconditionError("decompose requires at least one arc");
  if (net.source == net.sink) throw PreconditionError("decompose requires source != sink");

  SPTree tree;
  std::vector<WorkArc> arcs;
  arcs.reserve(net.arcs.size());
  std::vector<bool> touched(static_cast<std::size_t>(net.node_count), false);
  for (const Arc& a : net.arcs) {
    tree.nodes.push_back({SPTree::Kind::leaf, a.id, -1, -1});
    arcs.push_back({a.tail, a.head, static_cast<int>(tree.nodes.size()) - 1});
    touched[static_cast<std::size_t>(a.tail)] = true;
    touched[static_cast<std::size_t>(a.head)] = true;
  }

  auto fail = [&](const std::string& msg) -> std::optional<SPTree> {
    if (witness) {
      witness->message = msg;
      witness->remainder_arcs.clear();
      for (const WorkArc& wa : arcs) witness->remainder_arcs.emplace_back(wa.tail, wa.head);
    }
    return std::nullopt;
  };

  // A node never incident to any arc cannot arise from series/parallel
  // composition.
  for (NodeId v = 0; v < net.node_count; ++v)
    if (!touched[static_cast<std::size_t>(v)])
      return fail("isolated node " + std::to_string(v));

  while (arcs.size() > 1) {
    // Parallel reduction: first arc (in list order) with a later same-endpoint
    // partner; folding left keeps k-ary bundles left-associated.
    bool reduced = false;
    for (std::size_t i = 0; i + 1 < arcs.size() && !reduced; ++i) {
      for (std::size_t j = i + 1; j < arcs.size(); ++j) {
        if (arcs[i].tail == arcs[j].tail && arcs[i].head == arcs[j].head) {
          tree.nodes.push_back(
              {SPTree::Kind::parallel, -1, arcs[i].tree_node, arcs[j].tree_node});
          arcs[i].tree_node = static_cast<int>(tree.nodes.size()) - 1;
          arcs.erase(arcs.begin() + static_cast<std::ptrdiff_t>(j));
          reduced = true;
          break;
        }
      }
    }
    if (reduced) continue;

    // Series reduction at the lowest-numbered interior node with exactly one
    // incoming and one outgoing arc.
    int best_node = -1;
    std::size_t in_pos = 0, out_pos = 0;
    std::vector<int> indeg(static_cast<std::size_t>(net.node_count), 0);
    std::vector<int> outdeg(static_cast<std::size_t>(net.node_count), 0);
    for (const WorkArc& wa : arcs) {
      ++outdeg[static_cast<std::size_t>(wa.tail)];
      ++indeg[static_cast<std::size_t>(wa.head)];
    }
    for (NodeId v = 0; v < net.node_count && best_node < 0; ++v) {
      if (v == net.source || v == net.sink) continue;
      if (indeg[static_cast<std::size_t>(v)] != 1 || outdeg[static_cast<std::size_t>(v)] != 1) continue;
      std::size_t ip = arcs.size(), op = arcs.size();
      for (std::size_t k = 0; k < arcs.size(); ++k) {
        if (arcs[k].head == v) ip = k;
        if (arcs[k].tail == v) op = k;
      }
      if (ip == op) continue;  // self-loop, never reducible
      best_node = v;
      in_pos = ip;
      out_pos = op;
    }
    if (best_node < 0) return fail("no series or parallel reduction applies");

    tree.nodes.push_back(
        {SPTree::Kind::series, -1, arcs[in_pos].tree_node, arcs[out_pos].tree_node});
    WorkArc merged{arcs[in_pos].tail, arcs[out_pos].head,
                   static_cast<int>(tree.nodes.size()) - 1};
    std::size_t keep = std::min(in_pos, out_pos);
    std::size_t drop = std::max(in_pos, out_pos);
    arcs[keep] = merged;
    arcs.erase(arcs.begin() + static_cast<std::ptrdiff_t>(drop));
  }

  if (arcs[0].tail != net.source || arcs[0].head != net.sink)
    return fail("remaining arc does not run source to sink");
  tree.root = arcs[0].tree_node;
  return tree;
}

Cap sp_capacity(const SPTree& tree, const std::vector<Cap>& capacities,
                const std::vector<bool>& shut_mask) {
  std::vector<Cap> value(tree.nodes.size(), 0);
  // children always precede parents in the arena
  for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
    const SPTree::Node& node = tree.nodes[i];
    switch (node.kind) {
      case SPTree::Kind::leaf: {
        auto a = static_cast<std::size_t>(node.arc);
        value[i] = shut_mask[a] ? 0 : capacities[a];
        break;
      }
      case SPTree::Kind::series:
        value[i] = std::min(value[static_cast<std::size_t>(node.left)],
                            value[static_cast<std::size_t>(node.right)]);
        break;
      case SPTree::Kind::parallel:
        value[i] = checked_add(value[static_cast<std::size_t>(node.left)],
                               value[static_cast<std::size_t>(node.right)]);
        break;
    }
  }
  return value[static_cast<std::size_t>(tree.root)];
}

Cap sp_capacity(const SPTree& tree, const FlowNetwork& net, const std::vector<ArcId>& shut) {
  std::vector<Cap> caps(net.arcs.size());
  for (const Arc& a : net.arcs) caps[static_cast<std::size_t>(a.id)] = a.capacity;
  std::vector<bool> mask(net.arcs.size(), false);
  for (ArcId a : shut) mask.at(static_cast<std::size_t>(a)) = true;
  return sp_capacity(tree, caps, mask);
}

FlowNetwork recompose(const SPTree& tree, const std::vector<Cap>& capacities) {
  FlowNetwork net;
  net.source = 0;
  net.sink = 1;
  int next_node = 2;

  struct Frame {
    int tree_node;
    NodeId s, t;
  };
  std::vector<Frame> stack{{tree.root, 0, 1}};
  std::vector<Arc> arcs;
  while (!stack.empty()) {
    Frame f = stack.back();
    stack.pop_back();
    const SPTree::Node& node = tree.nodes[static_cast<std::size_t>(f.tree_node)];
    switch (node.kind) {
      case SPTree::Kind::leaf:
        arcs.push_back({node.arc, f.s, f.t, capacities[static_cast<std::size_t>(node.arc)]});
        break;
      case SPTree::Kind::series: {
        int mid = next_node++;
        stack.push_back({node.right, mid, f.t});
        stack.push_back({node.left, f.s, mid});
        break;
      }
      case SPTree::Kind::parallel:
        stack.push_back({node.right, f.s, f.t});
        stack.push_back({node.left, f.s, f.t});
        break;
    }
  }
  std::sort(arcs.begin(), arcs.end(), [](const Arc& a, const Arc& b) { return a.id < b.id; });
  net.arcs = std::move(arcs);
  net.node_count = next_node;
  return net;
}

std::string dump(const SPTree& tree) {
  std::vector<std::string> text(tree.nodes.size());
  for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
    const SPTree::Node& node = tree.nodes[i];
    switch (node.kind) {
      case SPTree::Kind::leaf:
        text[i] = std::to_string(node.arc);
        break;
      case SPTree::Kind::series:
        text[i] = "S(" + text[static_cast<std::size_t>(node.left)] + "," +
                  text[static_cast<std::size_t>(node.right)] + ")";
        break;
      case SPTree::Kind::parallel:
        text[i] = "P(" + text[static_cast<std::size_t>(node.left)] + "," +
                  text[static_cast<std::size_t>(node.right)] + ")";
        break;
    }
  }
  return tree.root >= 0 ? text[static_cast<std::size_t>(tree.root)] : std::string();
}

}  // namespace mfass
