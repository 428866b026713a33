#include <doctest.h>

#include <map>
#include <random>

#include "prelie/gamma.hpp"
#include "prelie/parse.hpp"

using namespace prelie;

namespace {

const Ring Z = Ring::Z();

STerm sterm(const std::string& text, Ring ring = Z) {
    return STerm(Element<DecoratedTree>::unit_term(ring, parse_tree(text)));
}

Element<DecoratedTree> expect_sum(Ring ring,
                                  const std::vector<std::pair<long long, std::string>>& terms) {
    Element<DecoratedTree> e(ring);
    for (const auto& [c, t] : terms)
        e.add_term(parse_tree(t), Coefficient::from_integer(ring, Integer(c)));
    return e;
}

DecoratedTree random_tree(std::mt19937& rng, int n, const std::vector<std::string>& alphabet) {
    std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
    if (n == 1) return DecoratedTree::leaf(alphabet[pick(rng)]);
    std::vector<DecoratedTree> kids;
    int remaining = n - 1;
    while (remaining > 0) {
        std::uniform_int_distribution<int> size(1, remaining);
        int s = size(rng);
        kids.push_back(random_tree(rng, s, alphabet));
        remaining -= s;
    }
    return DecoratedTree(alphabet[pick(rng)], std::move(kids));
}

LabelledTree random_labelled(std::mt19937& rng, int n) {
    auto all = enumerate_labelled(n);
    return all[rng() % all.size()];
}

}  // namespace

TEST_CASE("orbit elements") {
    GammaTerm root = orb_of(parse_tree("x"));
    CHECK(root.lin == expect_sum(Z, {{1, "x"}}));
    CHECK(orb_of(parse_tree("x[y,z]")) == orb_of(parse_tree("x[z,y]")));

    auto tensors = expand_orb(parse_tree("x[y,y]"));
    CHECK(tensors.size() == 3);  // 3!/|Stab| = 6/2
    std::vector<std::string> shown;
    for (const auto& t : tensors) shown.push_back(t.display());
    CHECK(std::find(shown.begin(), shown.end(), "1[2,3]<x,y,y>") != shown.end());
    CHECK(std::find(shown.begin(), shown.end(), "2[1,3]<y,x,y>") != shown.end());
    CHECK(std::find(shown.begin(), shown.end(), "3[1,2]<y,y,x>") != shown.end());

    // orbit sizes: n!/|Stab| in general
    std::mt19937 rng(41);
    for (int i = 0; i < 30; ++i) {
        DecoratedTree t = random_tree(rng, 1 + static_cast<int>(rng() % 5), {"x", "y"});
        Integer expect = factorial(static_cast<unsigned>(t.vertex_count())).div_exact(stab_order(t));
        CHECK(Integer(static_cast<long long>(expand_orb(t).size())) == expect);
    }
}

TEST_CASE("trace map multiplies by the stabilizer order") {
    CHECK(trace(sterm("x[y,z]")).lin == expect_sum(Z, {{1, "x[y,z]"}}));
    CHECK(trace(sterm("y[x,x]")).lin == expect_sum(Z, {{2, "y[x,x]"}}));
    Ring z2 = Ring::Zp(2);
    CHECK(trace(sterm("y[x,x]", z2)).is_zero());
}

TEST_CASE("kernel predicates") {
    CHECK(ker_trace_predicate(parse_tree("y[x,x]"), 2));
    CHECK_FALSE(ker_trace_predicate(parse_tree("y[x,x]"), 3));
    CHECK_FALSE(ker_trace_predicate(parse_tree("x[y[x[y]]]"), 2));  // chain
    CHECK(ker_corolla_predicate(parse_tree("x[y[z,z]]"), 2));       // deep repeat
    CHECK_THROWS_AS(ker_trace_predicate(parse_tree("x"), 4), std::invalid_argument);

    // the stabilizer divisibility and corolla-multiplicity criteria agree
    for (std::uint64_t p : {2ull, 3ull, 5ull})
        for (int n = 1; n <= 6; ++n)
            for (const auto& t : enumerate_decorated(n, {"x", "y"}))
                CHECK(ker_trace_predicate(t, p) == ker_corolla_predicate(t, p));
}

TEST_CASE("kernel generator rewriting") {
    // a bare generator head: nothing to push down
    STerm base = ker_generator_reduce(parse_tree("x"), parse_tree("y"), 2);
    CHECK(base.lin == expect_sum(Ring::Zp(2), {{1, "x[y,y]"}}));

    // worked example: A = x[z], B = y, p = 2
    STerm rewritten = ker_generator_reduce(parse_tree("x[z]"), parse_tree("y"), 2);
    CHECK(rewritten.lin == expect_sum(Ring::Zp(2), {{1, "x[y,y,z]"}, {1, "x[z[y,y]]"}}));

    // must equal the direct composition expansion reduced mod p
    std::mt19937 rng(43);
    for (std::uint64_t p : {2ull, 3ull}) {
        for (int i = 0; i < 25; ++i) {
            DecoratedTree A = random_tree(rng, 1 + static_cast<int>(rng() % 4), {"x", "z"});
            DecoratedTree B = random_tree(rng, 1 + static_cast<int>(rng() % 2), {"y"});
            std::vector<DecoratedTree> args{A};
            for (std::uint64_t k = 0; k < p; ++k) args.push_back(B);
            STerm direct = compose_total(LabelledTree::corolla(static_cast<int>(p)), args, Z);
            CHECK(ker_generator_reduce(A, B, p).lin == direct.lin.reduced_mod(p));
        }
    }

    // the multinomial (i_0,...,i_v) vanishes mod p unless concentrated
    for (std::uint64_t p : {2ull, 3ull, 5ull}) {
        std::vector<int> parts;
        auto rec = [&](auto&& self, int remaining, int slots) -> void {
            if (slots == 0) {
                if (remaining != 0) return;
                bool concentrated = true;
                int nonzero = 0;
                for (int v : parts)
                    if (v != 0) ++nonzero;
                concentrated = nonzero <= 1;
                Integer m = multinomial(parts);
                CHECK((m.mod_u64(p) != 0) == concentrated);
                return;
            }
            for (int v = 0; v <= remaining; ++v) {
                parts.push_back(v);
                self(self, remaining - v, slots - 1);
                parts.pop_back();
            }
        };
        rec(rec, static_cast<int>(p), 4);
    }
}

TEST_CASE("p-restricted defect is exactly the p-fold corolla") {
    CHECK(p_restricted_defect("x", "y", 2).lin == expect_sum(Ring::Zp(2), {{1, "x[y,y]"}}));
    CHECK(p_restricted_defect("x", "y", 3).lin == expect_sum(Ring::Zp(3), {{1, "x[y,y,y]"}}));
}

TEST_CASE("lambda projection") {
    Ring z2 = Ring::Zp(2);
    STerm kernel = sterm("y[x,x]", z2);
    CHECK(lambda_project(kernel, 2).is_zero());
    STerm chain = sterm("x[y[z]]", z2);
    CHECK(lambda_project(chain, 2) == chain);
    STerm mixed = STerm(expect_sum(z2, {{1, "x[y,y]"}, {1, "x[y[y]]"}}));
    CHECK(lambda_project(mixed, 2).lin == expect_sum(z2, {{1, "x[y[y]]"}}));
    CHECK_THROWS_AS(lambda_project(sterm("x"), 2), ring_mismatch_error);
}

TEST_CASE("orbit-basis composition: unit and corolla grafting") {
    GammaTerm t = orb_of(parse_tree("x[y,y]"));
    CHECK(gamma_compose(LabelledTree::single(), {t}) == t);

    // grafting distinct orbit arguments under a fresh root has coefficient 1
    GammaTerm grafted = gamma_compose(
        LabelledTree::corolla(2),
        {orb_of(parse_tree("x")), orb_of(parse_tree("a[b]")), orb_of(parse_tree("c"))});
    CHECK(grafted.lin == expect_sum(Z, {{1, "x[a[b],c]"}}));

    // the same with a repeated argument: still coefficient 1 (divided power)
    GammaTerm repeated = gamma_compose(
        LabelledTree::corolla(2),
        {orb_of(parse_tree("x")), orb_of(parse_tree("y")), orb_of(parse_tree("y"))});
    CHECK(repeated.lin == expect_sum(Z, {{1, "x[y,y]"}}));
}

TEST_CASE("orbit-basis composition: the ten-term corolla product") {
    // {{x;y}_2; y,z}_{2,1} as a composition of the 4-corolla with arguments
    // (orb x[y,y], y, y, z)
    GammaTerm result =
        gamma_compose(parse_labelled("1[2,3,4]"),
                      {orb_of(parse_tree("x[y,y]")), orb_of(parse_tree("y")),
                       orb_of(parse_tree("y")), orb_of(parse_tree("z"))});
    Element<DecoratedTree> expected = expect_sum(
        Z, {{6, "x[y,y,y,y,z]"},      // {x;y,z}_{4,1}
            {1, "x[y[y],y[y],z]"},    // {x;{y;y},z}_{2,1}
            {2, "x[y[y],y,y,z]"},     // {x;{y;y},y,z}_{1,2,1}
            {3, "x[y[z],y,y,y]"},     // {x;{y;z},y}_{1,3}
            {1, "x[y[y],y[z],y]"},    // {x;{y;y},{y;z},y}_{1,1,1}
            {2, "x[y[y,z],y,y]"},     // {x;{y;y,z},y}_{1,2}
            {1, "x[y[y,y],y,z]"},     // {x;{y;y}_2,y,z}_{1,1,1}
            {1, "x[y[y,y],y[z]]"},    // {x;{y;y}_2,{y;z}}_{1,1}
            {1, "x[y[y],y[y,z]]"},    // {x;{y;y},{y;y,z}}_{1,1}
            {1, "x[y[y,y,z],y]"}});   // {x;{y;y,z}_{2,1},y}_{1,1}
    CHECK(result.lin == expected);
}

TEST_CASE("over Q the composition is the trace-conjugated symmetric one") {
    // exhaustive over every outer tree with up to 3 vertices and every
    // argument tuple with at most 5 vertices in total
    std::vector<std::vector<DecoratedTree>> by_size{{}};
    for (int s = 1; s <= 5; ++s) by_size.push_back(enumerate_decorated(s, {"x", "y"}));

    auto check_instance = [&](const LabelledTree& outer, const std::vector<DecoratedTree>& trees) {
        // rational route: Tr(mu(...)) divided by the two-level stabilizer
        // and the argument stabilizers, with fraction arithmetic throughout
        STerm symmetric = compose_total(outer, trees, Ring::Q());
        GammaTerm traced = trace(symmetric);
        Integer denom = stab_order(two_level_tree(outer, trees));
        for (const auto& t : trees) denom = denom * stab_order(t);
        Element<DecoratedTree> rational(Ring::Q());
        for (const auto& [t, c] : traced.lin.terms())
            rational.add_term(t, c * Coefficient::rational(Integer(1), denom));
        CHECK(gamma_compose_basis(outer, trees, Ring::Q()).lin == rational);
    };

    for (int n = 1; n <= 3; ++n) {
        for (const auto& outer : enumerate_labelled(n)) {
            std::vector<DecoratedTree> trees;
            auto rec = [&](auto&& self, int slot, int budget) -> void {
                if (slot == n) {
                    check_instance(outer, trees);
                    return;
                }
                int remaining_slots = n - slot - 1;
                for (int s = 1; s + remaining_slots <= budget; ++s)
                    for (const auto& t : by_size[static_cast<std::size_t>(s)]) {
                        trees.push_back(t);
                        self(self, slot + 1, budget - s);
                        trees.pop_back();
                    }
            };
            rec(rec, 0, 5);
        }
    }
}

TEST_CASE("integrality of the composition coefficients") {
    std::mt19937 rng(53);
    for (int trial = 0; trial < 150; ++trial) {
        int n = 1 + static_cast<int>(rng() % 3);
        LabelledTree outer = random_labelled(rng, n);
        std::vector<GammaTerm> args;
        int budget = 6 - n;
        for (int i = 0; i < n; ++i) {
            int extra = budget > 0 ? static_cast<int>(rng() % (budget + 1)) : 0;
            budget -= extra;
            args.push_back(orb_of(random_tree(rng, 1 + extra, {"x", "y"})));
        }
        CHECK_NOTHROW(gamma_compose(outer, args));  // non_integral_error must not fire
    }
}

TEST_CASE("trace is a morphism for composition at desk scale") {
    std::mt19937 rng(59);
    for (int trial = 0; trial < 80; ++trial) {
        int n = 1 + static_cast<int>(rng() % 3);
        LabelledTree outer = random_labelled(rng, n);
        std::vector<DecoratedTree> trees;
        for (int i = 0; i < n; ++i)
            trees.push_back(random_tree(rng, 1 + static_cast<int>(rng() % 3), {"x", "y"}));

        for (Ring ring : {Ring::Z(), Ring::Zp(2)}) {
            // Tr(mu(upsilon(t_1..t_n)))
            STerm symmetric = compose_total(outer, trees, ring);
            GammaTerm lhs = trace(symmetric);
            // two-level trace then the orbit-basis composition
            Integer factor = stab_order(two_level_tree(outer, trees));
            for (const auto& t : trees) factor = factor * stab_order(t);
            std::vector<GammaTerm> orb_args;
            for (const auto& t : trees) orb_args.push_back(orb_of(t, ring));
            GammaTerm rhs = gamma_compose(outer, orb_args)
                                .scaled(Coefficient::from_integer(ring, factor));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("two-stage and one-stage orbit composition agree") {
    // mu-tilde is associative: composing the middle layer first (treating the
    // inner trees as opaque letters) then resolving the letters agrees with
    // resolving the middle layer first.
    std::mt19937 rng(61);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 1 + static_cast<int>(rng() % 2);
        LabelledTree outer = random_labelled(rng, n);
        std::vector<LabelledTree> middles;
        std::vector<std::vector<DecoratedTree>> letters(static_cast<std::size_t>(n));
        std::map<std::string, DecoratedTree> decode;
        for (int i = 0; i < n; ++i) {
            int m = 1 + static_cast<int>(rng() % 2);
            middles.push_back(random_labelled(rng, m));
            for (int j = 0; j < m; ++j) {
                DecoratedTree t = random_tree(rng, 1 + static_cast<int>(rng() % 2), {"x", "y"});
                letters[static_cast<std::size_t>(i)].push_back(t);
                decode.emplace(t.key(), t);
            }
        }

        // inner first
        std::vector<GammaTerm> inner_vals;
        for (int i = 0; i < n; ++i) {
            std::vector<GammaTerm> orb_args;
            for (const auto& t : letters[static_cast<std::size_t>(i)]) orb_args.push_back(orb_of(t));
            inner_vals.push_back(gamma_compose(middles[static_cast<std::size_t>(i)], orb_args));
        }
        GammaTerm route1 = gamma_compose(outer, inner_vals);

        // outer first over opaque letters, then resolve each letter tree
        std::vector<DecoratedTree> letter_trees;
        for (int i = 0; i < n; ++i) {
            std::vector<std::string> keys;
            for (const auto& t : letters[static_cast<std::size_t>(i)]) keys.push_back(t.key());
            letter_trees.push_back(middles[static_cast<std::size_t>(i)].decorated(keys));
        }
        GammaTerm letter_level = gamma_compose_basis(outer, letter_trees, Ring::Z());
        GammaTerm route2(Z);
        for (const auto& [w, c] : letter_level.lin.terms()) {
            // rebuild w as an outer shape whose vertices name inner trees
            auto decs = w.preorder_decorations();
            const int wn = w.vertex_count();
            std::vector<int> parent_pre(static_cast<std::size_t>(wn), 0);
            int counter = 0;
            auto walk = [&](auto&& self, const DecoratedTree& node, int parent_idx) -> void {
                int me = ++counter;
                parent_pre[static_cast<std::size_t>(me) - 1] = parent_idx;
                for (const auto& b : node.branches()) self(self, b, me);
            };
            walk(walk, w, 0);
            LabelledTree shape(wn, parent_pre);
            std::vector<GammaTerm> orb_args;
            for (const auto& d : decs) orb_args.push_back(orb_of(decode.at(d)));
            route2 += gamma_compose(shape, orb_args).scaled(c);
        }
        CHECK(route1 == route2);
    }
}
