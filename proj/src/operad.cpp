#include "prelie/operad.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

namespace prelie {

namespace {

// mutable working form; branch order is whatever the construction produced
struct RawTree {
    std::string dec;
    std::vector<RawTree> kids;
};

RawTree to_raw(const DecoratedTree& t) {
    RawTree r;
    r.dec = t.decoration();
    for (const auto& b : t.branches()) r.kids.push_back(to_raw(b));
    return r;
}

DecoratedTree to_canonical(const RawTree& t) {
    std::vector<DecoratedTree> kids;
    for (const auto& k : t.kids) kids.push_back(to_canonical(k));
    return DecoratedTree(t.dec, std::move(kids));
}

// preorder paths (child-index chains from the root), aligned with
// DecoratedTree::preorder_decorations
void collect_paths(const DecoratedTree& t, std::vector<int>& prefix,
                   std::vector<std::vector<int>>& out) {
    out.push_back(prefix);
    for (std::size_t i = 0; i < t.branches().size(); ++i) {
        prefix.push_back(static_cast<int>(i));
        collect_paths(t.branches()[i], prefix, out);
        prefix.pop_back();
    }
}

std::vector<std::vector<int>> preorder_paths(const DecoratedTree& t) {
    std::vector<std::vector<int>> out;
    std::vector<int> prefix;
    collect_paths(t, prefix, out);
    return out;
}

RawTree* navigate(RawTree& t, const std::vector<int>& path) {
    RawTree* cur = &t;
    for (int i : path) cur = &cur->kids[static_cast<std::size_t>(i)];
    return cur;
}

const std::string kSlotPrefix = "\x01";

std::string slot_name(int i) { return kSlotPrefix + std::to_string(i); }

void check_no_slots(const DecoratedTree& t) {
    if (t.decoration().rfind(kSlotPrefix, 0) == 0)
        throw std::invalid_argument("reserved decoration in input tree");
    for (const auto& b : t.branches()) check_no_slots(b);
}

}  // namespace

STerm compose_partial(const DecoratedTree& outer, int vertex, const DecoratedTree& inner,
                      Ring ring) {
    if (vertex < 1 || vertex > outer.vertex_count())
        throw std::invalid_argument("vertex index " + std::to_string(vertex) +
                                    " out of range for a tree with " +
                                    std::to_string(outer.vertex_count()) + " vertices");
    auto outer_paths = preorder_paths(outer);
    const auto& vpath = outer_paths[static_cast<std::size_t>(vertex) - 1];

    RawTree base = to_raw(outer);
    RawTree* v = navigate(base, vpath);
    std::vector<RawTree> incoming = std::move(v->kids);
    v->kids.clear();

    auto inner_paths = preorder_paths(inner);
    const std::size_t targets = inner_paths.size();
    const std::size_t slots = incoming.size();

    STerm result(ring);
    std::vector<std::size_t> f(slots, 0);
    while (true) {
        RawTree replacement = to_raw(inner);
        for (std::size_t j = 0; j < slots; ++j)
            navigate(replacement, inner_paths[f[j]])->kids.push_back(incoming[j]);
        RawTree whole = base;
        *navigate(whole, vpath) = std::move(replacement);
        result.lin.add_term(to_canonical(whole), Coefficient::one(ring));
        // next attachment map
        std::size_t j = 0;
        while (j < slots && ++f[j] == targets) f[j++] = 0;
        if (j == slots) break;
    }
    return result;
}

STerm compose_total_ordered(const LabelledTree& outer, const std::vector<STerm>& args,
                            const std::vector<int>& order) {
    const int n = outer.vertex_count();
    if (static_cast<int>(args.size()) != n)
        throw std::invalid_argument("total composition arity mismatch: outer tree has " +
                                    std::to_string(n) + " vertices, got " +
                                    std::to_string(args.size()) + " arguments");
    Ring ring = args.empty() ? Ring::Z() : args[0].ring();
    for (const auto& a : args)
        if (!(a.ring() == ring)) throw ring_mismatch_error("argument rings differ");
    for (const auto& a : args)
        for (const auto& [t, c] : a.lin.terms()) check_no_slots(t);
    {
        std::vector<int> sorted = order;
        std::sort(sorted.begin(), sorted.end());
        std::vector<int> expect(static_cast<std::size_t>(n));
        std::iota(expect.begin(), expect.end(), 1);
        if (sorted != expect) throw std::invalid_argument("substitution order must be a permutation");
    }

    std::vector<std::string> slots;
    for (int v = 1; v <= n; ++v) slots.push_back(slot_name(v));
    Element<DecoratedTree> cur =
        Element<DecoratedTree>::unit_term(ring, outer.decorated(slots));

    for (int label : order) {
        Element<DecoratedTree> next(ring);
        for (const auto& [t, c] : cur.terms()) {
            int idx = t.find_decoration(slot_name(label));
            assert(idx != 0);
            for (const auto& [u, d] : args[static_cast<std::size_t>(label) - 1].lin.terms()) {
                STerm part = compose_partial(t, idx, u, ring);
                next += part.lin.scaled(c * d);
            }
        }
        cur = std::move(next);
    }
    return STerm(std::move(cur));
}

STerm compose_total(const LabelledTree& outer, const std::vector<STerm>& args) {
    std::vector<int> order(static_cast<std::size_t>(outer.vertex_count()));
    std::iota(order.rbegin(), order.rend(), 1);  // n, n-1, ..., 1
    return compose_total_ordered(outer, args, order);
}

STerm compose_total(const LabelledTree& outer, const std::vector<DecoratedTree>& args, Ring ring) {
    std::vector<STerm> lifted;
    lifted.reserve(args.size());
    for (const auto& t : args) lifted.push_back(STerm(Element<DecoratedTree>::unit_term(ring, t)));
    return compose_total(outer, lifted);
}

Element<DecoratedTree> labelled_compose(const LabelledTree& t, int i, const LabelledTree& u,
                                        Ring ring) {
    const int m = t.vertex_count(), n = u.vertex_count();
    if (i < 1 || i > m) throw std::invalid_argument("composition slot out of range");
    std::vector<DecoratedTree> args;
    for (int j = 1; j <= m; ++j) {
        if (j < i)
            args.push_back(DecoratedTree::leaf(std::to_string(j)));
        else if (j > i)
            args.push_back(DecoratedTree::leaf(std::to_string(j + n - 1)));
        else {
            std::vector<std::string> labels;
            for (int k = 1; k <= n; ++k) labels.push_back(std::to_string(i + k - 1));
            args.push_back(u.decorated(labels));
        }
    }
    return compose_total(t, args, ring).lin;
}

Element<DecoratedTree> labelled_total(const LabelledTree& outer,
                                      const std::vector<LabelledTree>& args, Ring ring) {
    std::vector<DecoratedTree> dec_args;
    int offset = 0;
    for (const auto& a : args) {
        std::vector<std::string> labels;
        for (int k = 1; k <= a.vertex_count(); ++k) labels.push_back(std::to_string(offset + k));
        dec_args.push_back(a.decorated(labels));
        offset += a.vertex_count();
    }
    return compose_total(outer, dec_args, ring).lin;
}

LabelledTree labelled_from_decorated(const DecoratedTree& t) {
    const int n = t.vertex_count();
    auto decs = t.preorder_decorations();
    auto paths = [&] {
        // recompute parent relation from the preorder walk
        std::vector<int> parent_pre(static_cast<std::size_t>(n), 0);
        int counter = 0;
        auto walk = [&](auto&& self, const DecoratedTree& node, int parent_idx) -> void {
            int me = ++counter;
            parent_pre[static_cast<std::size_t>(me) - 1] = parent_idx;
            for (const auto& b : node.branches()) self(self, b, me);
        };
        walk(walk, t, 0);
        return parent_pre;
    }();
    std::vector<int> label_of(static_cast<std::size_t>(n), 0);
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int idx = 1; idx <= n; ++idx) {
        const std::string& d = decs[static_cast<std::size_t>(idx) - 1];
        int lab = 0;
        for (char c : d) {
            if (c < '0' || c > '9') throw std::invalid_argument("labelled tree vertex '" + d + "' is not a number");
            lab = lab * 10 + (c - '0');
        }
        if (lab < 1 || lab > n || seen[static_cast<std::size_t>(lab)])
            throw std::invalid_argument("labels must form 1.." + std::to_string(n));
        seen[static_cast<std::size_t>(lab)] = true;
        label_of[static_cast<std::size_t>(idx) - 1] = lab;
    }
    std::vector<int> parent(static_cast<std::size_t>(n), 0);
    for (int idx = 1; idx <= n; ++idx) {
        int p = paths[static_cast<std::size_t>(idx) - 1];
        parent[static_cast<std::size_t>(label_of[static_cast<std::size_t>(idx) - 1]) - 1] =
            p == 0 ? 0 : label_of[static_cast<std::size_t>(p) - 1];
    }
    return LabelledTree(n, std::move(parent));
}

STerm prelie_bracket(const STerm& a, const STerm& b) {
    LabelledTree germ(2, {0, 1});
    return compose_total(germ, {a, b});
}

STerm left_comb(const std::string& x, const std::string& y, int n, Ring ring) {
    if (n < 1) throw std::invalid_argument("left comb needs n >= 1");
    STerm acc = STerm::generator(x, ring);
    STerm yy = STerm::generator(y, ring);
    for (int k = 0; k < n; ++k) acc = prelie_bracket(acc, yy);
    return acc;
}

}  // namespace prelie
