#include "prelie/cor.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>

#include "prelie/brace.hpp"

namespace prelie {

struct CorExpr::Node {
    Kind kind;
    std::string name;                                   // symbol
    std::shared_ptr<const Node> head;                   // corolla
    std::vector<Group> groups;                          // corolla
    std::vector<std::pair<Integer, CorExpr>> summands;  // sum
};

CorExpr CorExpr::symbol(std::string name) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::symbol;
    n->name = std::move(name);
    return CorExpr(std::move(n));
}

CorExpr CorExpr::corolla(CorExpr head, std::vector<Group> groups) {
    for (const auto& g : groups)
        if (g.multiplicity < 0) throw std::invalid_argument("negative corolla multiplicity");
    auto n = std::make_shared<Node>();
    n->kind = Kind::corolla;
    n->head = head.node_;
    n->groups = std::move(groups);
    return CorExpr(std::move(n));
}

CorExpr CorExpr::sum(std::vector<std::pair<Integer, CorExpr>> summands) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::sum;
    n->summands = std::move(summands);
    return CorExpr(std::move(n));
}

CorExpr::Kind CorExpr::kind() const { return node_->kind; }
const std::string& CorExpr::name() const { return node_->name; }
CorExpr CorExpr::head() const { return CorExpr(node_->head); }
const std::vector<CorExpr::Group>& CorExpr::groups() const { return node_->groups; }
const std::vector<std::pair<Integer, CorExpr>>& CorExpr::summands() const {
    return node_->summands;
}

std::string CorExpr::display() const {
    switch (node_->kind) {
        case Kind::symbol:
            return node_->name;
        case Kind::corolla: {
            std::string out = "{" + CorExpr(node_->head).display() + ";";
            for (std::size_t i = 0; i < node_->groups.size(); ++i) {
                if (i) out += ",";
                out += node_->groups[i].arg.display();
                if (node_->groups[i].multiplicity != 1)
                    out += "^" + std::to_string(node_->groups[i].multiplicity);
            }
            return out + "}";
        }
        case Kind::sum: {
            if (node_->summands.empty()) return "0";
            std::string out;
            for (const auto& [c, e] : node_->summands) {
                bool neg = c.is_negative();
                Integer a = neg ? -c : c;
                if (out.empty())
                    out += neg ? "-" : "";
                else
                    out += neg ? " - " : " + ";
                if (!a.is_one()) out += a.str() + "*";
                out += e.display();
            }
            return out;
        }
    }
    return "?";
}

namespace {

// compositions of total into parts.size() == n slots
void for_each_composition(int total, int slots, std::vector<int>& parts,
                          const std::function<void(const std::vector<int>&)>& fn) {
    if (slots == 0) {
        if (total == 0) fn(parts);
        return;
    }
    for (int v = 0; v <= total; ++v) {
        parts.push_back(v);
        for_each_composition(total - v, slots - 1, parts, fn);
        parts.pop_back();
    }
}

}  // namespace

GammaTerm normalize(const CorExpr& e, Ring ring) {
    switch (e.kind()) {
        case CorExpr::Kind::symbol:
            return orb_of(DecoratedTree::leaf(e.name()), ring);
        case CorExpr::Kind::sum: {
            GammaTerm out(ring);
            for (const auto& [c, sub] : e.summands())
                out += normalize(sub, ring).scaled(Coefficient::from_integer(ring, c));
            return out;
        }
        case CorExpr::Kind::corolla:
            break;
    }

    GammaTerm head_val = normalize(e.head(), ring);
    std::vector<GammaTerm> arg_vals;
    std::vector<int> mults;
    for (const auto& g : e.groups()) {
        if (g.multiplicity == 0) continue;  // removable slot
        arg_vals.push_back(normalize(g.arg, ring));
        mults.push_back(g.multiplicity);
    }

    GammaTerm out(ring);

    // one group at a time: distribute its multiplicity over the terms of the
    // argument value (divided-power expansion: coefficient is the plain
    // monomial in the scalars, no binomial factor)
    std::vector<std::pair<DecoratedTree, int>> collected;
    auto finish = [&](const DecoratedTree& head_tree, const Coefficient& coef) {
        // merge equal keys across groups; each merge contributes its
        // multinomial factor
        auto groups = collected;
        std::sort(groups.begin(), groups.end());
        Integer merge_factor(1);
        std::vector<std::pair<DecoratedTree, int>> merged;
        std::size_t i = 0;
        while (i < groups.size()) {
            std::size_t j = i;
            std::vector<int> ms;
            int total = 0;
            while (j < groups.size() && groups[j].first == groups[i].first) {
                ms.push_back(groups[j].second);
                total += groups[j].second;
                ++j;
            }
            if (ms.size() > 1) merge_factor = merge_factor * multinomial(ms);
            merged.emplace_back(groups[i].first, total);
            i = j;
        }
        int total_mult = 0;
        std::vector<DecoratedTree> args{head_tree};
        for (const auto& [t, m] : merged) {
            total_mult += m;
            for (int k = 0; k < m; ++k) args.push_back(t);
        }
        LabelledTree outer = total_mult == 0 ? LabelledTree::single()
                                             : LabelledTree::corolla(total_mult);
        GammaTerm val = gamma_compose_basis(outer, args, ring);
        out += val.scaled(coef * Coefficient::from_integer(ring, merge_factor));
    };

    auto expand = [&](auto&& self, const DecoratedTree& head_tree, std::size_t gi,
                      const Coefficient& coef) -> void {
        if (gi == arg_vals.size()) {
            finish(head_tree, coef);
            return;
        }
        const auto& terms = arg_vals[gi].lin.terms();
        std::vector<std::pair<DecoratedTree, Coefficient>> flat(terms.begin(), terms.end());
        std::vector<int> parts;
        for_each_composition(
            mults[gi], static_cast<int>(flat.size()), parts, [&](const std::vector<int>& s) {
                Coefficient c = coef;
                std::size_t before = collected.size();
                for (std::size_t k = 0; k < flat.size(); ++k) {
                    if (s[k] == 0) continue;
                    c = c * flat[k].second.pow(static_cast<unsigned>(s[k]));
                    collected.emplace_back(flat[k].first, s[k]);
                }
                self(self, head_tree, gi + 1, c);
                collected.erase(collected.begin() + static_cast<std::ptrdiff_t>(before),
                                collected.end());
            });
    };

    for (const auto& [h, hc] : head_val.lin.terms()) expand(expand, h, 0, hc);
    return out;
}

GammaTerm normalize_expansion(const Element<NestedCorolla>& e, Ring ring) {
    GammaTerm out(ring);
    for (const auto& [term, c] : e.terms()) {
        Coefficient mapped = ring == c.ring() ? c : Coefficient::from_integer(ring, c.num());
        out.lin.add_term(regraft(term), mapped);
    }
    return out;
}

CorExpr to_cor_expr(const NestedCorolla& c) {
    if (c.groups.empty()) return CorExpr::symbol(c.head);
    std::vector<CorExpr::Group> groups;
    for (const auto& [arg, m] : c.groups) groups.push_back({to_cor_expr(arg), m});
    return CorExpr::corolla(CorExpr::symbol(c.head), std::move(groups));
}

CorExpr to_cor_expr(const Element<NestedCorolla>& e) {
    std::vector<std::pair<Integer, CorExpr>> summands;
    for (const auto& [term, c] : e.terms()) summands.emplace_back(c.num(), to_cor_expr(term));
    return CorExpr::sum(std::move(summands));
}

namespace {

std::string symbol_of(const CorExpr& e, const char* what) {
    if (e.kind() != CorExpr::Kind::symbol)
        throw std::invalid_argument(std::string(what) + " must be a generator symbol");
    return e.name();
}

}  // namespace

Rel7Expansion apply_rel7(const CorExpr& lhs, Ring ring) {
    if (lhs.kind() != CorExpr::Kind::corolla || lhs.head().kind() != CorExpr::Kind::corolla)
        throw std::invalid_argument("expected a corolla whose head is a corolla");
    const CorExpr inner = lhs.head();
    std::string x = symbol_of(inner.head(), "inner head");

    std::vector<std::string> ys;
    std::vector<int> rs;
    for (const auto& g : inner.groups()) {
        if (g.multiplicity == 0) continue;
        ys.push_back(symbol_of(g.arg, "inner argument"));
        rs.push_back(g.multiplicity);
    }
    std::vector<std::string> zs;
    std::vector<int> ss;
    for (const auto& g : lhs.groups()) {
        if (g.multiplicity == 0) continue;
        zs.push_back(symbol_of(g.arg, "outer argument"));
        ss.push_back(g.multiplicity);
    }
    const std::size_t m = zs.size();

    // copies of the inner arguments, one per unit of multiplicity
    std::vector<std::size_t> copy_block;
    for (std::size_t j = 0; j < ys.size(); ++j)
        for (int t = 0; t < rs[j]; ++t) copy_block.push_back(j);
    const std::size_t R = copy_block.size();

    Integer divisor(1);
    for (int r : rs) divisor = divisor * factorial(static_cast<unsigned>(r));

    Rel7Expansion out;
    Element<NestedCorolla> acc(Ring::Z());

    // per outer argument z_k: a composition of s_k into R copy shares plus a
    // top-level remainder beta_k
    std::vector<std::vector<int>> split(m);
    auto emit = [&]() {
        ++out.raw_summand_count;
        Integer coeff(1);
        std::vector<std::pair<NestedCorolla, int>> groups;
        for (std::size_t c = 0; c < R; ++c) {
            std::vector<std::pair<NestedCorolla, int>> inner_groups;
            for (std::size_t k = 0; k < m; ++k)
                if (split[k][c] > 0)
                    inner_groups.emplace_back(NestedCorolla::leaf(zs[k]), split[k][c]);
            NestedCorolla arg =
                NestedCorolla::merged(ys[copy_block[c]], std::move(inner_groups), coeff);
            groups.emplace_back(std::move(arg), 1);
        }
        for (std::size_t k = 0; k < m; ++k)
            if (split[k][R] > 0) groups.emplace_back(NestedCorolla::leaf(zs[k]), split[k][R]);

        {  // unmerged record, groups sorted for a stable display
            auto sorted = groups;
            std::sort(sorted.begin(), sorted.end());
            std::string line = "{" + x + ";";
            for (std::size_t i = 0; i < sorted.size(); ++i) {
                if (i) line += ",";
                line += sorted[i].first.display();
                if (sorted[i].second != 1) line += "^" + std::to_string(sorted[i].second);
            }
            line += "}";
            out.raw_display.push_back(std::move(line));
        }

        NestedCorolla term = NestedCorolla::merged(x, std::move(groups), coeff);
        acc.add_term(term, Coefficient::from_integer(Ring::Z(), coeff));
    };

    auto rec = [&](auto&& self, std::size_t k) -> void {
        if (k == m) {
            emit();
            return;
        }
        std::vector<int> parts;
        for_each_composition(ss[k], static_cast<int>(R) + 1, parts,
                             [&](const std::vector<int>& s) {
                                 split[k] = s;
                                 self(self, k + 1);
                             });
    };
    rec(rec, 0);

    acc = acc.divided_exact(divisor);
    if (ring.kind() == Ring::Kind::mod_p) {
        Element<NestedCorolla> red(ring);
        for (const auto& [t, c] : acc.terms())
            red.add_term(t, Coefficient::from_integer(ring, c.num()));
        out.reduced = std::move(red);
    } else if (ring.kind() == Ring::Kind::rationals) {
        Element<NestedCorolla> q(ring);
        for (const auto& [t, c] : acc.terms())
            q.add_term(t, Coefficient::from_integer(ring, c.num()));
        out.reduced = std::move(q);
    } else {
        out.reduced = std::move(acc);
    }
    std::sort(out.raw_display.begin(), out.raw_display.end());
    return out;
}

namespace {

struct SymbolCorolla {
    std::string head;
    std::vector<std::pair<std::string, int>> groups;

    CorExpr expr() const {
        std::vector<CorExpr::Group> gs;
        for (const auto& [s, r] : groups) gs.push_back({CorExpr::symbol(s), r});
        return CorExpr::corolla(CorExpr::symbol(head), gs);
    }
};

// all corollas {head; a_1^r_1,...} with <= max_groups argument groups,
// 1 <= r_i <= max_mult, optional cap on the total multiplicity
std::vector<SymbolCorolla> corolla_instances(const std::vector<std::string>& alphabet,
                                             int max_groups, int max_mult, int max_total) {
    std::vector<SymbolCorolla> out;
    std::vector<std::pair<std::string, int>> groups;
    auto rec = [&](auto&& self, std::size_t min_sym, int budget) -> void {
        for (const auto& head : alphabet) out.push_back({head, groups});
        if (static_cast<int>(groups.size()) == max_groups) return;
        for (std::size_t s = min_sym; s < alphabet.size(); ++s)
            for (int r = 1; r <= max_mult && r <= budget; ++r) {
                groups.emplace_back(alphabet[s], r);
                self(self, s, budget - r);  // same symbol may repeat as its own group
                groups.pop_back();
            }
    };
    rec(rec, 0, max_total);
    return out;
}

}  // namespace

RelationOutcome verify_relations(const std::vector<std::string>& alphabet,
                                 const RelationBounds& bounds, Ring ring,
                                 const std::function<void(const std::string&)>& line_sink) {
    RelationOutcome outcome;

    auto check = [&](int rel, const std::string& instance, const CorExpr& lhs,
                     const CorExpr& rhs) {
        ++outcome.checked;
        GammaTerm l = normalize(lhs, ring);
        GammaTerm r = normalize(rhs, ring);
        bool gamma_ok = l == r;
        bool brace_ok = oracle_compare(lhs, rhs, ring);
        std::string line = "REL" + std::to_string(rel) + " " + instance;
        if (gamma_ok && brace_ok) {
            line += " OK";
        } else {
            ++outcome.failures;
            line += " FAIL";
            if (!gamma_ok) line += " gamma: " + l.str() + " vs " + r.str();
            if (!brace_ok) line += " brace-oracle mismatch";
        }
        line_sink(line);
    };

    const int budget = bounds.max_groups * bounds.max_inner_mult;
    auto instances =
        corolla_instances(alphabet, bounds.max_groups, bounds.max_inner_mult, budget);

    for (const auto& inst : instances) {
        CorExpr base = inst.expr();

        // (1) invariance under permuting the argument groups
        if (inst.groups.size() >= 2) {
            auto perm = inst.groups;
            std::reverse(perm.begin(), perm.end());
            std::rotate(perm.begin(), perm.begin() + 1, perm.end());
            SymbolCorolla permuted{inst.head, perm};
            check(1, base.display() + " = " + permuted.expr().display(), base, permuted.expr());
        }

        // (2) zero multiplicities are removable
        {
            std::vector<CorExpr::Group> gs;
            for (const auto& [s, r] : inst.groups) gs.push_back({CorExpr::symbol(s), r});
            gs.push_back({CorExpr::symbol(alphabet.front()), 0});
            CorExpr padded = CorExpr::corolla(CorExpr::symbol(inst.head), gs);
            check(2, padded.display() + " = " + base.display(), padded, base);
        }

        // (3) scalar homogeneity in one slot, lambda = 2
        if (!inst.groups.empty()) {
            const Integer lambda(2);
            std::vector<CorExpr::Group> gs;
            for (std::size_t i = 0; i < inst.groups.size(); ++i) {
                CorExpr arg = CorExpr::symbol(inst.groups[i].first);
                if (i == 0) arg = CorExpr::sum({{lambda, arg}});
                gs.push_back({arg, inst.groups[i].second});
            }
            CorExpr scaled_arg = CorExpr::corolla(CorExpr::symbol(inst.head), gs);
            Integer factor = lambda.pow(static_cast<unsigned>(inst.groups[0].second));
            CorExpr rhs = CorExpr::sum({{factor, base}});
            check(3, scaled_arg.display() + " = " + rhs.display(), scaled_arg, rhs);
        }

        // (4) merging a split slot costs a binomial coefficient
        if (!inst.groups.empty()) {
            auto [sym, r] = inst.groups[0];
            if (r >= 2) {
                for (int a = 1; a < r; ++a) {
                    std::vector<CorExpr::Group> gs{{CorExpr::symbol(sym), a},
                                                   {CorExpr::symbol(sym), r - a}};
                    for (std::size_t i = 1; i < inst.groups.size(); ++i)
                        gs.push_back({CorExpr::symbol(inst.groups[i].first),
                                      inst.groups[i].second});
                    CorExpr split_expr = CorExpr::corolla(CorExpr::symbol(inst.head), gs);
                    CorExpr rhs = CorExpr::sum(
                        {{binomial(static_cast<unsigned>(r), static_cast<unsigned>(a)), base}});
                    check(4, split_expr.display() + " = " + rhs.display(), split_expr, rhs);
                }
            }
        }

        // (5) additive slot splits into all multiplicity splittings
        if (!inst.groups.empty() && alphabet.size() >= 2) {
            auto [sym, r] = inst.groups[0];
            const std::string& other = alphabet[1];
            std::vector<CorExpr::Group> gs;
            gs.push_back({CorExpr::sum({{Integer(1), CorExpr::symbol(sym)},
                                        {Integer(1), CorExpr::symbol(other)}}),
                          r});
            for (std::size_t i = 1; i < inst.groups.size(); ++i)
                gs.push_back({CorExpr::symbol(inst.groups[i].first), inst.groups[i].second});
            CorExpr lhs5 = CorExpr::corolla(CorExpr::symbol(inst.head), gs);
            std::vector<std::pair<Integer, CorExpr>> rhs_terms;
            for (int s = 0; s <= r; ++s) {
                std::vector<CorExpr::Group> hs;
                if (s > 0) hs.push_back({CorExpr::symbol(sym), s});
                if (r - s > 0) hs.push_back({CorExpr::symbol(other), r - s});
                for (std::size_t i = 1; i < inst.groups.size(); ++i)
                    hs.push_back({CorExpr::symbol(inst.groups[i].first), inst.groups[i].second});
                rhs_terms.emplace_back(Integer(1),
                                       CorExpr::corolla(CorExpr::symbol(inst.head), hs));
            }
            CorExpr rhs = CorExpr::sum(std::move(rhs_terms));
            check(5, lhs5.display() + " = sum of splittings", lhs5, rhs);
        }
    }

    // (6) {x;} = x
    for (const auto& s : alphabet) {
        CorExpr lhs6 = CorExpr::corolla(CorExpr::symbol(s), {});
        check(6, lhs6.display() + " = " + s, lhs6, CorExpr::symbol(s));
    }

    // (7) distribution over an inner corolla; totals bounded to keep the
    // splitting enumeration desk-scale
    auto inner_instances = corolla_instances(alphabet, bounds.max_groups, bounds.max_inner_mult,
                                             bounds.max_inner_mult);
    auto outer_instances = corolla_instances(alphabet, bounds.max_groups, bounds.max_outer_mult,
                                             bounds.max_outer_mult);
    for (const auto& in : inner_instances) {
        if (in.groups.empty()) continue;
        for (const auto& outlist : outer_instances) {
            if (outlist.groups.empty()) continue;
            if (outlist.head != alphabet.front()) continue;  // head is unused on the outer side
            std::vector<CorExpr::Group> og;
            for (const auto& [s, r] : outlist.groups) og.push_back({CorExpr::symbol(s), r});
            CorExpr lhs7 = CorExpr::corolla(in.expr(), og);
            ++outcome.checked;
            Rel7Expansion expansion = apply_rel7(lhs7, ring);
            GammaTerm direct = normalize(lhs7, ring);
            GammaTerm via = normalize_expansion(expansion.reduced, ring);
            bool gamma_ok = direct == via;
            bool brace_ok = oracle_compare(lhs7, to_cor_expr(expansion.reduced), ring);
            std::string line = "REL7 " + lhs7.display();
            if (gamma_ok && brace_ok) {
                line += " OK";
            } else {
                ++outcome.failures;
                line += " FAIL";
                if (!gamma_ok) line += " gamma: " + direct.str() + " vs " + via.str();
                if (!brace_ok) line += " brace-oracle mismatch";
            }
            line_sink(line);
        }
    }

    return outcome;
}

}  // namespace prelie
