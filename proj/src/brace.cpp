#include "prelie/brace.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace prelie {

PlanarTree::PlanarTree(std::string decoration, std::vector<PlanarTree> branches)
    : decoration_(std::move(decoration)), branches_(std::move(branches)) {
    vertex_count_ = 1;
    for (const auto& b : branches_) vertex_count_ += b.vertex_count_;
    key_ = std::to_string(decoration_.size()) + ":" + decoration_ + "(";
    for (std::size_t i = 0; i < branches_.size(); ++i) {
        if (i) key_ += ",";
        key_ += branches_[i].key_;
    }
    key_ += ")";
}

std::string PlanarTree::display() const {
    if (branches_.empty()) return decoration_;
    std::string out = decoration_ + "(";
    for (std::size_t i = 0; i < branches_.size(); ++i) {
        if (i) out += ",";
        out += branches_[i].display();
    }
    return out + ")";
}

namespace {

// The corners of a planar tree in counterclockwise boundary-walk order:
// at a vertex with children c_1..c_k the walk sees the gap before c_1,
// then the corners of c_1, the gap between c_1 and c_2, and so on to the
// gap after c_k.  A tree with k vertices has 2k-1 corners.
int corner_count(const PlanarTree& t) { return 2 * t.vertex_count() - 1; }

// Rebuild t with `at[c]` (a list of argument trees) inserted at corner c,
// consuming corner ids in walk order.
PlanarTree graft_at_corners(const PlanarTree& t,
                            const std::vector<std::vector<const PlanarTree*>>& at,
                            int& corner) {
    std::vector<PlanarTree> kids;
    auto take = [&](std::vector<PlanarTree>& dst) {
        for (const PlanarTree* g : at[static_cast<std::size_t>(corner)]) dst.push_back(*g);
        ++corner;
    };
    take(kids);
    for (const auto& b : t.branches()) {
        kids.push_back(graft_at_corners(b, at, corner));
        take(kids);
    }
    return PlanarTree(t.decoration(), std::move(kids));
}

}  // namespace

namespace {

void brace_op_into(BraceTerm& out, const PlanarTree& x,
                   const std::vector<const PlanarTree*>& ys, const Coefficient& coef) {
    const int m = corner_count(x);
    const std::size_t n = ys.size();
    // weakly increasing assignment of y_1..y_n to corners 0..m-1
    std::vector<int> assign(n, 0);
    std::vector<std::vector<const PlanarTree*>> at(static_cast<std::size_t>(m));
    while (true) {
        for (auto& slot : at) slot.clear();
        for (std::size_t j = 0; j < n; ++j)
            at[static_cast<std::size_t>(assign[j])].push_back(ys[j]);
        int corner = 0;
        out.add_term(graft_at_corners(x, at, corner), coef);
        assert(corner == m);
        // next nondecreasing assignment
        std::size_t j = n;
        while (j > 0 && assign[j - 1] == m - 1) --j;
        if (j == 0) break;
        int v = ++assign[j - 1];
        for (std::size_t k = j; k < n; ++k) assign[k] = v;
    }
}

void brace_op_multilinear(BraceTerm& out, const BraceTerm& x,
                          const std::vector<const BraceTerm*>& ys) {
    std::vector<const PlanarTree*> picked(ys.size(), nullptr);
    auto rec = [&](auto&& self, std::size_t i, const Coefficient& coef) -> void {
        if (i == ys.size()) {
            for (const auto& [hx, hc] : x.terms()) brace_op_into(out, hx, picked, coef * hc);
            return;
        }
        for (const auto& [t, c] : ys[i]->terms()) {
            picked[i] = &t;
            self(self, i + 1, coef * c);
        }
    };
    rec(rec, 0, Coefficient::one(x.ring()));
}

}  // namespace

BraceTerm brace_op(const PlanarTree& x, const std::vector<PlanarTree>& ys, Ring ring) {
    std::vector<const PlanarTree*> ptrs;
    ptrs.reserve(ys.size());
    for (const auto& y : ys) ptrs.push_back(&y);
    BraceTerm out(ring);
    brace_op_into(out, x, ptrs, Coefficient::one(ring));
    return out;
}

BraceTerm brace_op(const BraceTerm& x, const std::vector<BraceTerm>& ys) {
    Ring ring = x.ring();
    std::vector<const BraceTerm*> ptrs;
    ptrs.reserve(ys.size());
    for (const auto& y : ys) {
        if (!(y.ring() == ring)) throw ring_mismatch_error("brace argument rings differ");
        ptrs.push_back(&y);
    }
    BraceTerm out(ring);
    brace_op_multilinear(out, x, ptrs);
    return out;
}

std::vector<std::vector<int>> shuffle_arrangements(const std::vector<int>& multiplicities) {
    std::vector<int> word;
    for (std::size_t j = 0; j < multiplicities.size(); ++j) {
        if (multiplicities[j] < 0) throw std::invalid_argument("negative multiplicity");
        for (int k = 0; k < multiplicities[j]; ++k) word.push_back(static_cast<int>(j) + 1);
    }
    std::vector<std::vector<int>> out;
    std::sort(word.begin(), word.end());
    do {
        out.push_back(word);
    } while (std::next_permutation(word.begin(), word.end()));
    return out;
}

std::vector<std::vector<int>> shuffles(const std::vector<int>& multiplicities) {
    std::vector<int> offset(multiplicities.size() + 1, 0);
    for (std::size_t j = 0; j < multiplicities.size(); ++j)
        offset[j + 1] = offset[j] + multiplicities[j];
    std::vector<std::vector<int>> out;
    for (const auto& word : shuffle_arrangements(multiplicities)) {
        std::vector<int> taken(multiplicities.size(), 0);
        std::vector<int> sigma;
        sigma.reserve(word.size());
        for (int b : word) sigma.push_back(offset[static_cast<std::size_t>(b) - 1] + ++taken[static_cast<std::size_t>(b) - 1]);
        out.push_back(std::move(sigma));
    }
    return out;
}

BraceTerm eval_brace(const CorExpr& e, Ring ring) {
    switch (e.kind()) {
        case CorExpr::Kind::symbol:
            return BraceTerm::unit_term(ring, PlanarTree::leaf(e.name()));
        case CorExpr::Kind::sum: {
            BraceTerm out(ring);
            for (const auto& [c, sub] : e.summands())
                out += eval_brace(sub, ring).scaled(Coefficient::from_integer(ring, c));
            return out;
        }
        case CorExpr::Kind::corolla:
            break;
    }

    BraceTerm head_val = eval_brace(e.head(), ring);
    std::vector<BraceTerm> arg_vals;
    std::vector<int> mults;
    for (const auto& g : e.groups()) {
        if (g.multiplicity == 0) continue;
        arg_vals.push_back(eval_brace(g.arg, ring));
        mults.push_back(g.multiplicity);
    }

    BraceTerm out(ring);
    for (const auto& word : shuffle_arrangements(mults)) {
        std::vector<const BraceTerm*> sequence;
        sequence.reserve(word.size());
        for (int b : word) sequence.push_back(&arg_vals[static_cast<std::size_t>(b) - 1]);
        brace_op_multilinear(out, head_val, sequence);
    }
    return out;
}

BraceTerm gamma_to_brace(const CorExpr& corolla, Ring ring) { return eval_brace(corolla, ring); }

bool oracle_compare(const CorExpr& lhs, const CorExpr& rhs, Ring ring) {
    return eval_brace(lhs, ring) == eval_brace(rhs, ring);
}

}  // namespace prelie
