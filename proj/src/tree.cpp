#include "treehardy/tree.hpp"

#include <algorithm>

namespace treehardy {

namespace {

// Depth-first preorder enumeration of words = lexicographic order.
void enumerate(int q, int depth, NodeId& cur, std::vector<NodeId>& out) {
    out.push_back(cur);
    if (cur.depth() == depth) return;
    for (int b = 1; b <= q; ++b) {
        cur.word.push_back(b);
        enumerate(q, depth, cur, out);
        cur.word.pop_back();
    }
}

}  // namespace

FiniteTree::FiniteTree(int q, int depth) : q_(q), depth_(depth) {
    if (q < 2) throw InvalidParameterError("FiniteTree: q must be >= 2");
    if (depth < 0) throw InvalidParameterError("FiniteTree: depth must be >= 0");

    NodeId root;
    enumerate(q_, depth_, root, nodes_);

    parent_.assign(nodes_.size(), -1);
    children_.assign(nodes_.size(), {});
    levels_.assign(depth_ + 1, {});
    for (int i = 0; i < node_count(); ++i) {
        const NodeId& t = nodes_[i];
        levels_[t.depth()].push_back(i);
        if (t.depth() < depth_) children_[i].assign(q_, -1);
        if (t.depth() > 0) {
            NodeId p{std::vector<int>(t.word.begin(), t.word.end() - 1)};
            const int pi = index_of(p);
            parent_[i] = pi;
            children_[pi][t.word.back() - 1] = i;
        }
    }
}

int FiniteTree::index_of(const NodeId& t) const {
    const auto it = std::lower_bound(nodes_.begin(), nodes_.end(), t);
    if (it == nodes_.end() || !(*it == t))
        throw InvalidParameterError("FiniteTree: node not in tree");
    return static_cast<int>(it - nodes_.begin());
}

bool FiniteTree::contains(const NodeId& t) const {
    if (t.depth() > depth_) return false;
    for (int b : t.word)
        if (b < 1 || b > q_) return false;
    return true;
}

int FiniteTree::child_index(int index, int branch) const {
    if (branch < 1 || branch > q_)
        throw InvalidParameterError("child: branch index outside [1,q]");
    if (nodes_[index].depth() == depth_) return -1;
    return children_[index][branch - 1];
}

int FiniteTree::ancestor_index(int index, int k) const {
    int i = index;
    for (int j = 0; j < k && i >= 0; ++j) i = parent_[i];
    return i;
}

std::optional<NodeId> FiniteTree::parent(const NodeId& t) const {
    check_node(t);
    if (t.depth() == 0) return std::nullopt;
    return NodeId{std::vector<int>(t.word.begin(), t.word.end() - 1)};
}

std::optional<NodeId> FiniteTree::child(const NodeId& t, int branch) const {
    check_node(t);
    if (branch < 1 || branch > q_)
        throw InvalidParameterError("child: branch index outside [1,q]");
    if (t.depth() == depth_) return std::nullopt;
    NodeId c = t;
    c.word.push_back(branch);
    return c;
}

NodeId FiniteTree::meet(const NodeId& t, const NodeId& u) const {
    check_node(t);
    check_node(u);
    size_t n = 0;
    while (n < t.word.size() && n < u.word.size() && t.word[n] == u.word[n]) ++n;
    return NodeId{std::vector<int>(t.word.begin(), t.word.begin() + n)};
}

int FiniteTree::dist(const NodeId& t, const NodeId& u) const {
    const NodeId v = meet(t, u);
    return (t.depth() - v.depth()) + (u.depth() - v.depth());
}

bool FiniteTree::leq(const NodeId& s, const NodeId& t) const {
    const NodeId v = meet(s, t);
    return s.depth() - v.depth() <= t.depth() - v.depth();
}

bool FiniteTree::same_horocycle(const NodeId& s, const NodeId& t) const {
    check_node(s);
    check_node(t);
    return s.depth() == t.depth();
}

void FiniteTree::check_node(const NodeId& t) const {
    if (!contains(t)) throw InvalidParameterError("FiniteTree: node not in tree");
}

}  // namespace treehardy
