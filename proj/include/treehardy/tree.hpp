#pragma once

#include <optional>
#include <vector>

#include "treehardy/errors.hpp"

namespace treehardy {

// Address of a tree node: the branch word leading down from the root.
// Branch indices are 1-based; the empty word is the root.
struct NodeId {
    std::vector<int> word;

    int depth() const { return static_cast<int>(word.size()); }
    bool operator==(const NodeId& other) const { return word == other.word; }
    bool operator<(const NodeId& other) const { return word < other.word; }
};

// Homogeneous tree of branching order q, truncated at depth D below a
// distinguished base node. Every node at depth < D has exactly q children;
// the root's upward branch is absent (a truncation artifact, documented
// where it matters). Horocycle levels coincide with word lengths.
//
// Immutable after construction; all queries are pure.
class FiniteTree {
public:
    FiniteTree(int q, int depth);

    int q() const { return q_; }
    int depth() const { return depth_; }
    int node_count() const { return static_cast<int>(nodes_.size()); }

    // Nodes in lexicographic word order (root first).
    const std::vector<NodeId>& nodes() const { return nodes_; }
    const NodeId& node(int index) const { return nodes_[index]; }
    int index_of(const NodeId& t) const;
    bool contains(const NodeId& t) const;

    // Index-level structure queries.
    int parent_index(int index) const { return parent_[index]; }  // -1 at root
    int child_index(int index, int branch) const;                 // -1 past depth D
    const std::vector<int>& level(int d) const { return levels_[d]; }
    int node_depth(int index) const { return nodes_[index].depth(); }
    // Ancestor k levels up, or -1 if that passes the root.
    int ancestor_index(int index, int k) const;

    std::optional<NodeId> parent(const NodeId& t) const;
    std::optional<NodeId> child(const NodeId& t, int branch) const;

    NodeId meet(const NodeId& t, const NodeId& u) const;
    int dist(const NodeId& t, const NodeId& u) const;
    // Partial order s <= t: dist(s, s^t) <= dist(t, s^t).
    bool leq(const NodeId& s, const NodeId& t) const;
    bool same_horocycle(const NodeId& s, const NodeId& t) const;

private:
    void check_node(const NodeId& t) const;

    int q_ = 2;
    int depth_ = 0;
    std::vector<NodeId> nodes_;
    std::vector<int> parent_;
    std::vector<std::vector<int>> children_;
    std::vector<std::vector<int>> levels_;
};

}  // namespace treehardy
