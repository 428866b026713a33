#include "prelie/trees.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <stdexcept>

namespace prelie {

DecoratedTree::DecoratedTree(std::string decoration, std::vector<DecoratedTree> branches)
    : decoration_(std::move(decoration)), branches_(std::move(branches)) {
    std::sort(branches_.begin(), branches_.end());
    vertex_count_ = 1;
    for (const auto& b : branches_) vertex_count_ += b.vertex_count_;
    key_ = std::to_string(decoration_.size()) + ":" + decoration_ + "[";
    for (std::size_t i = 0; i < branches_.size(); ++i) {
        if (i) key_ += ",";
        key_ += branches_[i].key_;
    }
    key_ += "]";
}

std::string DecoratedTree::display() const {
    if (branches_.empty()) return decoration_;
    std::string out = decoration_ + "[";
    for (std::size_t i = 0; i < branches_.size(); ++i) {
        if (i) out += ",";
        out += branches_[i].display();
    }
    return out + "]";
}

std::vector<std::string> DecoratedTree::preorder_decorations() const {
    std::vector<std::string> out;
    out.reserve(static_cast<std::size_t>(vertex_count_));
    auto walk = [&](auto&& self, const DecoratedTree& t) -> void {
        out.push_back(t.decoration_);
        for (const auto& b : t.branches_) self(self, b);
    };
    walk(walk, *this);
    return out;
}

int DecoratedTree::find_decoration(const std::string& decoration) const {
    auto decs = preorder_decorations();
    for (std::size_t i = 0; i < decs.size(); ++i)
        if (decs[i] == decoration) return static_cast<int>(i) + 1;
    return 0;
}

LabelledTree::LabelledTree(int n, std::vector<int> parent) : n_(n), root_(0), parent_(std::move(parent)) {
    if (n_ < 1 || parent_.size() != static_cast<std::size_t>(n_))
        throw std::invalid_argument("labelled tree: bad parent map size");
    for (int v = 1; v <= n_; ++v) {
        int p = parent_[static_cast<std::size_t>(v) - 1];
        if (p < 0 || p > n_ || p == v) throw std::invalid_argument("labelled tree: bad parent entry");
        if (p == 0) {
            if (root_ != 0) throw std::invalid_argument("labelled tree: two roots");
            root_ = v;
        }
    }
    if (root_ == 0) throw std::invalid_argument("labelled tree: no root");
    // every vertex must reach the root without cycles
    for (int v = 1; v <= n_; ++v) {
        int cur = v, steps = 0;
        while (cur != root_) {
            cur = parent_[static_cast<std::size_t>(cur) - 1];
            if (++steps > n_) throw std::invalid_argument("labelled tree: cycle in parent map");
        }
    }
}

LabelledTree LabelledTree::corolla(int n_leaves) {
    std::vector<int> parent(static_cast<std::size_t>(n_leaves) + 1, 1);
    parent[0] = 0;
    return LabelledTree(n_leaves + 1, std::move(parent));
}

std::vector<int> LabelledTree::children(int v) const {
    std::vector<int> out;
    for (int u = 1; u <= n_; ++u)
        if (parent(u) == v) out.push_back(u);
    return out;
}

DecoratedTree LabelledTree::decorated(const std::vector<std::string>& decorations) const {
    if (decorations.size() != static_cast<std::size_t>(n_))
        throw std::invalid_argument("decoration count does not match vertex count");
    auto build = [&](auto&& self, int v) -> DecoratedTree {
        std::vector<DecoratedTree> kids;
        for (int c : children(v)) kids.push_back(self(self, c));
        return DecoratedTree(decorations[static_cast<std::size_t>(v) - 1], std::move(kids));
    };
    return build(build, root_);
}

DecoratedTree LabelledTree::as_decorated() const {
    std::vector<std::string> decs;
    for (int v = 1; v <= n_; ++v) decs.push_back(std::to_string(v));
    return decorated(decs);
}

namespace {

// Prüfer decode: sequence over {1..n} of length n-2 -> edge list of the
// unique unrooted labelled tree.
std::vector<std::pair<int, int>> prufer_edges(int n, const std::vector<int>& seq) {
    std::vector<int> degree(static_cast<std::size_t>(n) + 1, 1);
    for (int s : seq) degree[static_cast<std::size_t>(s)]++;
    std::vector<std::pair<int, int>> edges;
    std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
    int ptr = 1;
    while (ptr <= n && degree[static_cast<std::size_t>(ptr)] != 1) ++ptr;
    int leaf = ptr;
    for (int s : seq) {
        edges.emplace_back(leaf, s);
        used[static_cast<std::size_t>(leaf)] = true;
        if (--degree[static_cast<std::size_t>(s)] == 1 && s < ptr) {
            leaf = s;
        } else {
            ++ptr;
            while (ptr <= n && (degree[static_cast<std::size_t>(ptr)] != 1 ||
                                used[static_cast<std::size_t>(ptr)]))
                ++ptr;
            leaf = ptr;
        }
    }
    int a = 0, b = 0;
    for (int v = 1; v <= n; ++v)
        if (!used[static_cast<std::size_t>(v)] && degree[static_cast<std::size_t>(v)] == 1) {
            if (!a)
                a = v;
            else
                b = v;
        }
    edges.emplace_back(a, b);
    return edges;
}

}  // namespace

std::vector<LabelledTree> enumerate_labelled(int n) {
    if (n < 1) throw std::invalid_argument("need n >= 1");
    std::vector<LabelledTree> out;
    if (n == 1) {
        out.push_back(LabelledTree::single());
        return out;
    }
    std::vector<int> seq(static_cast<std::size_t>(n) - 2, 1);
    while (true) {
        auto edges = prufer_edges(n, seq);
        std::vector<std::vector<int>> adj(static_cast<std::size_t>(n) + 1);
        for (auto [a, b] : edges) {
            adj[static_cast<std::size_t>(a)].push_back(b);
            adj[static_cast<std::size_t>(b)].push_back(a);
        }
        for (int root = 1; root <= n; ++root) {
            std::vector<int> parent(static_cast<std::size_t>(n), -1);
            parent[static_cast<std::size_t>(root) - 1] = 0;
            std::vector<int> stack{root};
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (int u : adj[static_cast<std::size_t>(v)])
                    if (parent[static_cast<std::size_t>(u) - 1] == -1) {
                        parent[static_cast<std::size_t>(u) - 1] = v;
                        stack.push_back(u);
                    }
            }
            out.emplace_back(n, std::move(parent));
        }
        // next Prüfer sequence
        std::size_t i = seq.size();
        while (i > 0 && seq[i - 1] == n) seq[--i] = 1;
        if (i == 0) break;
        ++seq[i - 1];
    }
    return out;
}

std::vector<DecoratedTree> enumerate_decorated(int n, const std::vector<std::string>& alphabet) {
    if (n < 1) throw std::invalid_argument("need n >= 1");
    // by_size[k] = all canonical trees with k vertices
    std::vector<std::vector<DecoratedTree>> by_size(static_cast<std::size_t>(n) + 1);
    for (const auto& a : alphabet) by_size[1].push_back(DecoratedTree::leaf(a));
    for (int size = 2; size <= n; ++size) {
        // all trees with total branch size size-1: pick a nondecreasing list of
        // smaller trees (by (size, index) to avoid duplicates), then a root.
        std::vector<DecoratedTree> branches;
        auto rec = [&](auto&& self, int remaining, int min_size, std::size_t min_index) -> void {
            if (remaining == 0) {
                for (const auto& a : alphabet) {
                    by_size[static_cast<std::size_t>(size)].push_back(
                        DecoratedTree(a, branches));
                }
                return;
            }
            for (int s = min_size; s <= remaining; ++s) {
                const auto& pool = by_size[static_cast<std::size_t>(s)];
                for (std::size_t i = (s == min_size ? min_index : 0); i < pool.size(); ++i) {
                    branches.push_back(pool[i]);
                    self(self, remaining - s, s, i);
                    branches.pop_back();
                }
            }
        };
        rec(rec, size - 1, 1, 0);
    }
    // the multiset choice is canonical already, but keys may repeat across
    // different root alphabet letters only if alphabet repeats; dedupe anyway
    auto& res = by_size[static_cast<std::size_t>(n)];
    std::sort(res.begin(), res.end());
    res.erase(std::unique(res.begin(), res.end()), res.end());
    return res;
}

Integer stab_order(const DecoratedTree& t) {
    Integer r(1);
    const auto& bs = t.branches();
    std::size_t i = 0;
    while (i < bs.size()) {
        std::size_t j = i;
        while (j < bs.size() && bs[j] == bs[i]) ++j;
        r = r * factorial(static_cast<unsigned>(j - i)) * stab_order(bs[i]).pow(static_cast<unsigned>(j - i));
        i = j;
    }
    return r;
}

Corolla dec(const DecoratedTree& t) {
    Corolla c;
    c.root_decoration = t.decoration();
    const auto& bs = t.branches();
    std::size_t i = 0;
    while (i < bs.size()) {
        std::size_t j = i;
        while (j < bs.size() && bs[j] == bs[i]) ++j;
        c.groups.emplace_back(bs[i], static_cast<int>(j - i));
        i = j;
    }
    return c;
}

NestedCorolla::NestedCorolla(std::string h, std::vector<std::pair<NestedCorolla, int>> g)
    : head(std::move(h)), groups(std::move(g)) {
    std::sort(groups.begin(), groups.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 0; i < groups.size(); ++i) {
        if (groups[i].second < 1) throw std::invalid_argument("corolla multiplicity must be >= 1");
        if (i && groups[i].first == groups[i - 1].first)
            throw std::invalid_argument("corolla arguments must be distinct; merge first");
    }
    key_ = "{" + std::to_string(head.size()) + ":" + head + ";";
    for (std::size_t i = 0; i < groups.size(); ++i) {
        if (i) key_ += ",";
        key_ += groups[i].first.key_ + "^" + std::to_string(groups[i].second);
    }
    key_ += "}";
}

NestedCorolla NestedCorolla::merged(std::string h, std::vector<std::pair<NestedCorolla, int>> g,
                                    Integer& merge_factor) {
    std::erase_if(g, [](const auto& p) { return p.second == 0; });
    std::sort(g.begin(), g.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::pair<NestedCorolla, int>> merged_groups;
    std::size_t i = 0;
    while (i < g.size()) {
        std::size_t j = i;
        std::vector<int> mults;
        int total = 0;
        while (j < g.size() && g[j].first == g[i].first) {
            mults.push_back(g[j].second);
            total += g[j].second;
            ++j;
        }
        if (mults.size() > 1) merge_factor = merge_factor * multinomial(mults);
        merged_groups.emplace_back(g[i].first, total);
        i = j;
    }
    return NestedCorolla(std::move(h), std::move(merged_groups));
}

std::string NestedCorolla::display() const {
    if (groups.empty()) return head;
    std::string out = "{" + head + ";";
    for (std::size_t i = 0; i < groups.size(); ++i) {
        if (i) out += ",";
        out += groups[i].first.display();
        if (groups[i].second != 1) out += "^" + std::to_string(groups[i].second);
    }
    return out + "}";
}

NestedCorolla normal_form(const DecoratedTree& t) {
    Corolla c = dec(t);
    std::vector<std::pair<NestedCorolla, int>> groups;
    for (const auto& [b, m] : c.groups) groups.emplace_back(normal_form(b), m);
    return NestedCorolla(c.root_decoration, std::move(groups));
}

DecoratedTree regraft(const NestedCorolla& nf) {
    std::vector<std::pair<DecoratedTree, int>> groups;
    for (const auto& [arg, m] : nf.groups) groups.emplace_back(regraft(arg), m);
    return graft_corolla(nf.head, groups);
}

Integer lambda_count(const DecoratedTree& t) {
    // labellings = multinomial(branch sizes) * prod lambda(branch),
    // divided by m! per class of m isomorphic branches (those labellings
    // give the same labelled tree).
    std::vector<int> sizes;
    Integer prod(1);
    Integer auts(1);
    const auto& bs = t.branches();
    std::size_t i = 0;
    while (i < bs.size()) {
        std::size_t j = i;
        while (j < bs.size() && bs[j] == bs[i]) ++j;
        auts = auts * factorial(static_cast<unsigned>(j - i));
        prod = prod * lambda_count(bs[i]).pow(static_cast<unsigned>(j - i));
        for (std::size_t k = i; k < j; ++k) sizes.push_back(bs[i].vertex_count());
        i = j;
    }
    return (multinomial(sizes) * prod).div_exact(auts);
}

DecoratedTree graft_corolla(const std::string& root,
                            const std::vector<std::pair<DecoratedTree, int>>& groups) {
    std::vector<DecoratedTree> branches;
    for (const auto& [b, m] : groups) {
        if (m < 0) throw std::invalid_argument("negative corolla multiplicity");
        for (int k = 0; k < m; ++k) branches.push_back(b);
    }
    return DecoratedTree(root, std::move(branches));
}

}  // namespace prelie
