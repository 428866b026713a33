#ifndef PRELIE_BRACE_HPP
#define PRELIE_BRACE_HPP

#include <string>
#include <vector>

#include "prelie/cor.hpp"
#include "prelie/element.hpp"

namespace prelie {

/// Rooted tree with an order on the incoming edges of every vertex.
/// Branch order is significant: no sorting, equality is order-sensitive.
class PlanarTree {
  public:
    explicit PlanarTree(std::string decoration, std::vector<PlanarTree> branches = {});
    static PlanarTree leaf(std::string decoration) { return PlanarTree(std::move(decoration)); }

    const std::string& decoration() const { return decoration_; }
    const std::vector<PlanarTree>& branches() const { return branches_; }
    int vertex_count() const { return vertex_count_; }

    const std::string& key() const { return key_; }
    /// "x(y,z)" with parentheses, distinct from the sorted bracket form of
    /// non-planar trees.
    std::string display() const;

    bool operator==(const PlanarTree& o) const { return key_ == o.key_; }
    bool operator<(const PlanarTree& o) const { return key_ < o.key_; }

  private:
    std::string decoration_;
    std::vector<PlanarTree> branches_;
    std::string key_;
    int vertex_count_;
};

using BraceTerm = Element<PlanarTree>;

/// <x; y_1,...,y_n>: sum over the order-preserving insertions of the
/// sequence y_1..y_n into the planar corners of x (weakly increasing along
/// the counterclockwise boundary walk; several arguments in one corner
/// stack left to right).
BraceTerm brace_op(const PlanarTree& x, const std::vector<PlanarTree>& ys, Ring ring = Ring::Z());
BraceTerm brace_op(const BraceTerm& x, const std::vector<BraceTerm>& ys);

/// Arrangements of the multiset {1^r_1, ..., n^r_n} (block-index words);
/// one per (r_1,...,r_n)-shuffle.
std::vector<std::vector<int>> shuffle_arrangements(const std::vector<int>& multiplicities);
/// The same shuffles as permutations of {1..sum r_i}: the values of block j
/// appear in increasing order when the permutation is read left to right.
std::vector<std::vector<int>> shuffles(const std::vector<int>& multiplicities);

/// Value of a corolla expression in the free brace algebra: a corolla maps
/// to the shuffle sum over <head; arranged argument copies>.  This is the
/// cross-model evaluation used as an independent oracle.
BraceTerm eval_brace(const CorExpr& e, Ring ring);
BraceTerm gamma_to_brace(const CorExpr& corolla, Ring ring = Ring::Z());

/// Do the two sides agree in the brace model?
bool oracle_compare(const CorExpr& lhs, const CorExpr& rhs, Ring ring);

}  // namespace prelie

#endif
