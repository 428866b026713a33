#include "prelie/gamma.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <set>
#include <stdexcept>

namespace prelie {

GammaTerm orb_of(const DecoratedTree& t, Ring ring) {
    return GammaTerm(Element<DecoratedTree>::unit_term(ring, t));
}

GammaTerm trace(const STerm& a) {
    GammaTerm out(a.ring());
    for (const auto& [t, c] : a.lin.terms())
        out.lin.add_term(t, c * Coefficient::from_integer(a.ring(), stab_order(t)));
    return out;
}

bool ker_trace_predicate(const DecoratedTree& t, std::uint64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    return stab_order(t).mod_u64(p) == 0;
}

bool ker_corolla_predicate(const DecoratedTree& t, std::uint64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    for (const auto& [branch, mult] : dec(t).groups) {
        if (static_cast<std::uint64_t>(mult) >= p) return true;
        if (ker_corolla_predicate(branch, p)) return true;
    }
    return false;
}

STerm ker_generator_reduce(const DecoratedTree& A, const DecoratedTree& B, std::uint64_t p) {
    Ring z = Ring::Z();
    Corolla dA = dec(A);
    std::vector<DecoratedTree> branches;
    for (const auto& [b, m] : dA.groups)
        for (int k = 0; k < m; ++k) branches.push_back(b);

    Element<DecoratedTree> acc(z);

    // head summand: all p copies of B join the root corolla of A
    {
        std::vector<std::pair<DecoratedTree, int>> groups = dA.groups;
        groups.emplace_back(B, static_cast<int>(p));
        acc.add_term(graft_corolla(dA.root_decoration, groups), Coefficient::one(z));
    }

    // one summand per branch: the p copies of B composed into that branch
    LabelledTree fp = LabelledTree::corolla(static_cast<int>(p));
    for (std::size_t i = 0; i < branches.size(); ++i) {
        std::vector<DecoratedTree> args{branches[i]};
        for (std::uint64_t k = 0; k < p; ++k) args.push_back(B);
        STerm pushed = compose_total(fp, args, z);
        for (const auto& [u, c] : pushed.lin.terms()) {
            std::vector<std::pair<DecoratedTree, int>> groups;
            for (std::size_t j = 0; j < branches.size(); ++j)
                if (j != i) groups.emplace_back(branches[j], 1);
            groups.emplace_back(u, 1);
            acc.add_term(graft_corolla(dA.root_decoration, groups), c);
        }
    }
    return STerm(acc.reduced_mod(p));
}

STerm p_restricted_defect(const std::string& x, const std::string& y, std::uint64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    Ring z = Ring::Z();
    STerm lhs = left_comb(x, y, static_cast<int>(p), z);
    STerm inner = left_comb(y, y, static_cast<int>(p) - 1, z);
    STerm rhs = prelie_bracket(STerm::generator(x, z), inner);
    return STerm((lhs - rhs).lin.reduced_mod(p));
}

STerm lambda_project(const STerm& a, std::uint64_t p) {
    if (!(a.ring() == Ring::Zp(p)))
        throw ring_mismatch_error("lambda projection is defined over Z/p only");
    STerm out(a.ring());
    for (const auto& [t, c] : a.lin.terms())
        if (!ker_trace_predicate(t, p)) out.lin.add_term(t, c);
    return out;
}

DecoratedTree two_level_tree(const LabelledTree& outer, const std::vector<DecoratedTree>& args) {
    std::vector<std::string> decorations;
    decorations.reserve(args.size());
    for (const auto& a : args) decorations.push_back(a.key());
    return outer.decorated(decorations);
}

GammaTerm gamma_compose_basis(const LabelledTree& outer, const std::vector<DecoratedTree>& args,
                              Ring ring) {
    if (static_cast<int>(args.size()) != outer.vertex_count())
        throw std::invalid_argument("composition arity mismatch");
    STerm expansion = compose_total(outer, args, Ring::Z());
    Integer denom = stab_order(two_level_tree(outer, args));
    for (const auto& a : args) denom = denom * stab_order(a);

    GammaTerm out(ring);
    for (const auto& [t, chi] : expansion.lin.terms()) {
        Integer numer = chi.num() * stab_order(t);
        Integer q = numer.div_exact(denom);  // integral by construction; throws on a bug
        out.lin.add_term(t, Coefficient::from_integer(ring, q));
    }
    return out;
}

GammaTerm gamma_compose(const LabelledTree& outer, const std::vector<GammaTerm>& args) {
    if (static_cast<int>(args.size()) != outer.vertex_count())
        throw std::invalid_argument("composition arity mismatch");
    Ring ring = args.empty() ? Ring::Z() : args[0].ring();
    for (const auto& a : args)
        if (!(a.ring() == ring)) throw ring_mismatch_error("argument rings differ");

    GammaTerm out(ring);
    std::vector<DecoratedTree> picked;
    auto rec = [&](auto&& self, std::size_t i, const Coefficient& coef) -> void {
        if (i == args.size()) {
            out += gamma_compose_basis(outer, picked, ring).scaled(coef);
            return;
        }
        for (const auto& [t, c] : args[i].lin.terms()) {
            picked.push_back(t);
            self(self, i + 1, coef * c);
            picked.pop_back();
        }
    };
    rec(rec, 0, Coefficient::one(ring));
    return out;
}

std::string OrbTensor::display() const {
    std::string out = shape.display() + "<";
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i) out += ",";
        out += word[i];
    }
    return out + ">";
}

std::vector<OrbTensor> expand_orb(const DecoratedTree& t) {
    const int n = t.vertex_count();
    if (n > 8) throw std::invalid_argument("orbit expansion limited to 8 vertices");
    // parent indices and decorations in preorder
    std::vector<int> parent_pre(static_cast<std::size_t>(n), 0);
    {
        int counter = 0;
        auto walk = [&](auto&& self, const DecoratedTree& node, int parent_idx) -> void {
            int me = ++counter;
            parent_pre[static_cast<std::size_t>(me) - 1] = parent_idx;
            for (const auto& b : node.branches()) self(self, b, me);
        };
        walk(walk, t, 0);
    }
    auto decs = t.preorder_decorations();

    std::set<std::pair<std::vector<int>, std::vector<std::string>>> seen;
    std::vector<int> sigma(static_cast<std::size_t>(n));
    std::iota(sigma.begin(), sigma.end(), 1);  // sigma[i-1] = label of preorder vertex i
    do {
        std::vector<int> parent(static_cast<std::size_t>(n), 0);
        std::vector<std::string> word(static_cast<std::size_t>(n));
        for (int i = 1; i <= n; ++i) {
            int lab = sigma[static_cast<std::size_t>(i) - 1];
            int p = parent_pre[static_cast<std::size_t>(i) - 1];
            parent[static_cast<std::size_t>(lab) - 1] =
                p == 0 ? 0 : sigma[static_cast<std::size_t>(p) - 1];
            word[static_cast<std::size_t>(lab) - 1] = decs[static_cast<std::size_t>(i) - 1];
        }
        seen.emplace(std::move(parent), std::move(word));
    } while (std::next_permutation(sigma.begin(), sigma.end()));

    std::vector<OrbTensor> out;
    for (const auto& [parent, word] : seen)
        out.push_back(OrbTensor{LabelledTree(n, parent), word});
    return out;
}

}  // namespace prelie
