#ifndef PRELIE_GAMMA_HPP
#define PRELIE_GAMMA_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "prelie/operad.hpp"

namespace prelie {

/// Linear combination of decorated trees read in the orbit (invariant)
/// basis: the key t stands for orb t, the sum of the tensors in the
/// symmetric-group orbit of t taken once per stabilizer coset.
struct GammaTerm {
    Element<DecoratedTree> lin;

    explicit GammaTerm(Ring ring) : lin(ring) {}
    explicit GammaTerm(Element<DecoratedTree> e) : lin(std::move(e)) {}

    const Ring& ring() const { return lin.ring(); }
    bool is_zero() const { return lin.is_zero(); }
    GammaTerm& operator+=(const GammaTerm& o) {
        lin += o.lin;
        return *this;
    }
    friend GammaTerm operator+(GammaTerm a, const GammaTerm& b) { return a += b; }
    friend GammaTerm operator-(GammaTerm a, const GammaTerm& b) { return GammaTerm(a.lin - b.lin); }
    GammaTerm scaled(const Coefficient& c) const { return GammaTerm(lin.scaled(c)); }
    bool operator==(const GammaTerm& o) const { return lin == o.lin; }
    std::string str() const { return lin.str(); }
};

GammaTerm orb_of(const DecoratedTree& t, Ring ring = Ring::Z());

/// Trace (norm) map S -> Gamma: t maps to |Stab(t)| orb t, termwise.
GammaTerm trace(const STerm& a);

/// t lies in the kernel of the trace over Z/p exactly when p divides the
/// stabilizer order.
bool ker_trace_predicate(const DecoratedTree& t, std::uint64_t p);

/// Equivalent corolla-shaped criterion: some corolla of the normal form
/// repeats a branch at least p times.
bool ker_corolla_predicate(const DecoratedTree& t, std::uint64_t p);

/// Rewrites the grafting of p copies of B onto A into the kernel-normal
/// summands mod p: the p-fold corolla over A's own root plus, for each
/// branch of A, the p-fold corolla pushed into that branch.  Equals the
/// direct composition expansion reduced mod p.
STerm ker_generator_reduce(const DecoratedTree& A, const DecoratedTree& B, std::uint64_t p);

/// Difference of the two p-fold combs {..{x,y}..,y} - {x,{..{y,y}..,y}}
/// reduced mod p; the single surviving term is the p-corolla of x over y.
STerm p_restricted_defect(const std::string& x, const std::string& y, std::uint64_t p);

/// Projection onto the image of the trace: drops every kernel term.
/// Defined over Z/p only.
STerm lambda_project(const STerm& a, std::uint64_t p);

/// Outer tree whose vertex i is decorated by the canonical key of args[i-1];
/// its stabilizer is the stabilizer of the two-level tensor.
DecoratedTree two_level_tree(const LabelledTree& outer, const std::vector<DecoratedTree>& args);

/// Composition in the orbit basis.  The expansion is computed over Z in the
/// symmetric basis and every coefficient chi is carried to
/// chi * |Stab(result)| / (|Stab(two-level)| * prod |Stab(arg_i)|);
/// a failing division throws non_integral_error (bug signal).
GammaTerm gamma_compose_basis(const LabelledTree& outer, const std::vector<DecoratedTree>& args,
                              Ring ring);
GammaTerm gamma_compose(const LabelledTree& outer, const std::vector<GammaTerm>& args);

/// Expanded display of orb t: the distinct labelled tensors of the orbit,
/// each a labelled tree plus the decoration word read off label order.
struct OrbTensor {
    LabelledTree shape;
    std::vector<std::string> word;
    std::string display() const;
};
std::vector<OrbTensor> expand_orb(const DecoratedTree& t);

}  // namespace prelie

#endif
