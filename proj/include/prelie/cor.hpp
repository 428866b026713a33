#ifndef PRELIE_COR_HPP
#define PRELIE_COR_HPP

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "prelie/gamma.hpp"

namespace prelie {

struct CorGroup;

/// Formal corolla-calculus expression: a generator symbol, an integer-linear
/// combination, or a corolla {head; arg^r, ...} which is linear in the head
/// and polynomial of degree r in each argument slot.
class CorExpr {
  public:
    enum class Kind { symbol, corolla, sum };
    using Group = CorGroup;

    static CorExpr symbol(std::string name);
    static CorExpr corolla(CorExpr head, std::vector<Group> groups);
    static CorExpr sum(std::vector<std::pair<Integer, CorExpr>> summands);

    Kind kind() const;
    const std::string& name() const;                               // symbol
    CorExpr head() const;                                          // corolla
    const std::vector<Group>& groups() const;                      // corolla
    const std::vector<std::pair<Integer, CorExpr>>& summands() const;  // sum

    std::string display() const;

  private:
    struct Node;
    explicit CorExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

struct CorGroup {
    CorExpr arg;
    int multiplicity;
};

/// Value of the expression in the free divided-symmetry algebra: corollas
/// evaluate through the orbit-basis composition; sums in argument slots
/// expand by the divided-power rule (no binomial factors), repeated
/// arguments merge with their multinomial factor first.
GammaTerm normalize(const CorExpr& e, Ring ring);

/// Gamma value of a reduced corolla expansion: each nested-corolla monomial
/// is the orbit of its regrafted tree with coefficient one.
GammaTerm normalize_expansion(const Element<NestedCorolla>& e, Ring ring);

CorExpr to_cor_expr(const NestedCorolla& c);
CorExpr to_cor_expr(const Element<NestedCorolla>& e);

struct Rel7Expansion {
    Element<NestedCorolla> reduced{Ring::Z()};  // merged, divided by prod r_j!
    long raw_summand_count = 0;                 // splittings before merging
    std::vector<std::string> raw_display;       // one line per splitting, unmerged
};

/// Distribution of an outer corolla over an inner one: enumerates the
/// splittings s_i = beta_i + sum alpha_i per argument copy, merges repeated
/// inputs (permutation identification plus multinomial merge factors) and
/// divides by prod r_j!, which is exact only for the merged expression.
/// Head and arguments of both corollas must be generator symbols.
Rel7Expansion apply_rel7(const CorExpr& lhs, Ring ring);

struct RelationBounds {
    int max_groups = 3;      // arguments per corolla
    int max_inner_mult = 3;  // each r_i; also the total inner budget for REL7
    int max_outer_mult = 3;  // each s_i; also the total outer budget for REL7
};

struct RelationOutcome {
    long checked = 0;
    long failures = 0;
};

/// Checks the corolla-calculus relations (1)-(7) instance by instance over
/// the given alphabet, each instance both by normalize (orbit model) and by
/// the planar-tree oracle.  Emits one report line per instance:
///   REL<k> <instance> OK|FAIL <detail>
RelationOutcome verify_relations(const std::vector<std::string>& alphabet,
                                 const RelationBounds& bounds, Ring ring,
                                 const std::function<void(const std::string&)>& line_sink);

}  // namespace prelie

#endif
