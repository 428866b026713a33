#ifndef PRELIE_OPERAD_HPP
#define PRELIE_OPERAD_HPP

#include <string>
#include <vector>

#include "prelie/element.hpp"
#include "prelie/trees.hpp"

namespace prelie {

/// Linear combination of decorated trees in the symmetric (coinvariant)
/// basis.  Kept as a distinct type from GammaTerm so the two bases can
/// never be mixed in one combination.
struct STerm {
    Element<DecoratedTree> lin;

    explicit STerm(Ring ring) : lin(ring) {}
    explicit STerm(Element<DecoratedTree> e) : lin(std::move(e)) {}
    static STerm generator(const std::string& symbol, Ring ring) {
        return STerm(Element<DecoratedTree>::unit_term(ring, DecoratedTree::leaf(symbol)));
    }

    const Ring& ring() const { return lin.ring(); }
    bool is_zero() const { return lin.is_zero(); }
    STerm& operator+=(const STerm& o) {
        lin += o.lin;
        return *this;
    }
    friend STerm operator+(STerm a, const STerm& b) { return a += b; }
    friend STerm operator-(STerm a, const STerm& b) { return STerm(a.lin - b.lin); }
    STerm scaled(const Coefficient& c) const { return STerm(lin.scaled(c)); }
    bool operator==(const STerm& o) const { return lin == o.lin; }
    std::string str() const { return lin.str(); }
};

/// Substitute `inner` for the vertex of `outer` at 1-based preorder index
/// `vertex`: the vertex's decoration is discarded, its incoming branches are
/// reattached to vertices of `inner` in all possible ways, one summand per
/// attachment map (coefficients merge only when canonical forms collide).
STerm compose_partial(const DecoratedTree& outer, int vertex, const DecoratedTree& inner,
                      Ring ring = Ring::Z());

/// Simultaneous substitution of args[i-1] for the vertex labelled i of the
/// outer tree, extended multilinearly.  Evaluated as iterated partial
/// composition in decreasing label order; the result is order-independent.
STerm compose_total(const LabelledTree& outer, const std::vector<STerm>& args);
STerm compose_total(const LabelledTree& outer, const std::vector<DecoratedTree>& args,
                    Ring ring = Ring::Z());
/// Same, with an explicit substitution order (a permutation of 1..n).
STerm compose_total_ordered(const LabelledTree& outer, const std::vector<STerm>& args,
                            const std::vector<int>& order);

/// Operadic partial composition of labelled trees: vertex labelled `i` of
/// `t` is replaced by `u`; labels of u shift to i..i+n-1 and the higher
/// labels of t shift up by n-1.  Keys of the result are labelled trees.
Element<DecoratedTree> labelled_compose(const LabelledTree& t, int i, const LabelledTree& u,
                                        Ring ring = Ring::Z());

/// Total composition of labelled trees; argument j keeps a contiguous label
/// block after the previous arguments'.
Element<DecoratedTree> labelled_total(const LabelledTree& outer,
                                      const std::vector<LabelledTree>& args,
                                      Ring ring = Ring::Z());

LabelledTree labelled_from_decorated(const DecoratedTree& t);

/// Pre-Lie product: sum over graftings of b onto the vertices of a.
STerm prelie_bracket(const STerm& a, const STerm& b);

/// {...{{x,y},y}...,y} with n brackets.
STerm left_comb(const std::string& x, const std::string& y, int n, Ring ring = Ring::Z());

}  // namespace prelie

#endif
