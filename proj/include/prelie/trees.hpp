#ifndef PRELIE_TREES_HPP
#define PRELIE_TREES_HPP

#include <string>
#include <utility>
#include <vector>

#include "prelie/integer.hpp"

namespace prelie {

/// Non-planar rooted tree whose vertices carry decoration symbols, kept in
/// canonical form: branches are recursively canonical and sorted by key.
/// Two trees are equal exactly when their keys are equal, so isomorphic
/// inputs collapse to one representative no matter the branch order given.
class DecoratedTree {
  public:
    explicit DecoratedTree(std::string decoration,
                           std::vector<DecoratedTree> branches = {});

    static DecoratedTree leaf(std::string decoration) {
        return DecoratedTree(std::move(decoration));
    }

    const std::string& decoration() const { return decoration_; }
    const std::vector<DecoratedTree>& branches() const { return branches_; }
    int vertex_count() const { return vertex_count_; }

    /// Collision-free canonical encoding (decorations are length-prefixed so
    /// arbitrary strings, including other tree keys, are safe decorations).
    const std::string& key() const { return key_; }
    /// Human form, e.g. "x[y,z[w]]".
    std::string display() const;

    bool operator==(const DecoratedTree& o) const { return key_ == o.key_; }
    bool operator<(const DecoratedTree& o) const { return key_ < o.key_; }

    /// Decorations of vertices in preorder (root first, branches in
    /// canonical order); the traversal that vertex indices refer to.
    std::vector<std::string> preorder_decorations() const;

    /// 1-based preorder index of the first vertex carrying `decoration`,
    /// or 0 if absent.
    int find_decoration(const std::string& decoration) const;

  private:
    std::string decoration_;
    std::vector<DecoratedTree> branches_;
    std::string key_;
    int vertex_count_;
};

/// Rooted tree with vertices bijectively labelled 1..n; the arity-n basis
/// of the operad layer.  parent(root) == 0.
class LabelledTree {
  public:
    LabelledTree(int n, std::vector<int> parent);

    static LabelledTree single() { return LabelledTree(1, {0}); }
    /// Corolla: root 1 with leaves 2..n_leaves+1.
    static LabelledTree corolla(int n_leaves);

    int vertex_count() const { return n_; }
    int root() const { return root_; }
    int parent(int v) const { return parent_[static_cast<std::size_t>(v) - 1]; }
    std::vector<int> children(int v) const;

    /// The tree as a decorated tree with the given decoration per label.
    DecoratedTree decorated(const std::vector<std::string>& decorations) const;
    /// Labels themselves as decorations ("1", "2", ...).
    DecoratedTree as_decorated() const;

    std::string display() const { return as_decorated().display(); }

    bool operator==(const LabelledTree& o) const { return parent_ == o.parent_; }
    bool operator<(const LabelledTree& o) const { return parent_ < o.parent_; }

  private:
    int n_;
    int root_;
    std::vector<int> parent_;  // parent_[v-1]
};

/// All labelled rooted trees on {1..n}; |result| = n^(n-1).
std::vector<LabelledTree> enumerate_labelled(int n);

/// All decorated trees with exactly n vertices over the given alphabet,
/// one canonical representative per isomorphism class.
std::vector<DecoratedTree> enumerate_decorated(int n, const std::vector<std::string>& alphabet);

/// Order of the stabilizer of the decorated tensor underlying t: the
/// product over vertices of m! for every multiset of m equal branches.
Integer stab_order(const DecoratedTree& t);

/// Root corolla of a tree: branches grouped by isomorphism class.
struct Corolla {
    std::string root_decoration;
    std::vector<std::pair<DecoratedTree, int>> groups;  // distinct trees, mult >= 1
};
Corolla dec(const DecoratedTree& t);

/// Fully nested corolla decomposition; heads are single decorations, group
/// arguments are distinct and sorted, multiplicities positive.
struct NestedCorolla {
    std::string head;
    std::vector<std::pair<NestedCorolla, int>> groups;

    NestedCorolla(std::string h, std::vector<std::pair<NestedCorolla, int>> g = {});
    static NestedCorolla leaf(std::string h) { return NestedCorolla(std::move(h)); }

    /// Builds the corolla from an arbitrary group list: sorts, drops zero
    /// multiplicities, merges equal arguments; `merge_factor` receives the
    /// product of multinomials the merges contribute.
    static NestedCorolla merged(std::string h, std::vector<std::pair<NestedCorolla, int>> g,
                                Integer& merge_factor);

    const std::string& key() const { return key_; }
    std::string display() const;

    bool operator==(const NestedCorolla& o) const { return key_ == o.key_; }
    bool operator<(const NestedCorolla& o) const { return key_ < o.key_; }

  private:
    std::string key_;
};

NestedCorolla normal_form(const DecoratedTree& t);
/// Inverse of normal_form: grafts the nested corollas back into a tree.
DecoratedTree regraft(const NestedCorolla& nf);

/// Number of increasing labellings of t: distinct labelled trees of this
/// shape whose labels grow away from the root.  Repeated isomorphic
/// branches are counted once, matching the labelled-tree quotient.
Integer lambda_count(const DecoratedTree& t);

/// New root x with the given branches attached; zero multiplicities are
/// dropped, repeated arguments merge into one multiset.
DecoratedTree graft_corolla(const std::string& root,
                            const std::vector<std::pair<DecoratedTree, int>>& groups);

}  // namespace prelie

#endif
