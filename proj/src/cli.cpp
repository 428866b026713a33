#include "prelie/cli.hpp"

#include <CLI11.hpp>

#include "prelie/brace.hpp"
#include "prelie/parse.hpp"

namespace prelie {

namespace {

Ring ring_from_flag(const std::string& flag) {
    if (flag == "z") return Ring::Z();
    if (flag == "q") return Ring::Q();
    if (flag.rfind("zmod:", 0) == 0) {
        std::uint64_t p = 0;
        try {
            p = std::stoull(flag.substr(5));
        } catch (const std::exception&) {
            throw std::invalid_argument("--ring zmod:P needs a numeric modulus");
        }
        return Ring::Zp(p);
    }
    throw std::invalid_argument("--ring: expected z, q, or zmod:P");
}

std::string format_gamma(const GammaTerm& g, const std::string& format) {
    if (format != "expanded") return g.str();
    if (g.is_zero()) return "0";
    std::string out;
    for (const auto& [t, c] : g.lin.terms()) {
        if (!out.empty()) out += " + ";
        if (!c.is_one()) out += c.str() + "*";
        out += "(";
        auto tensors = expand_orb(t);
        for (std::size_t i = 0; i < tensors.size(); ++i) {
            if (i) out += " + ";
            out += tensors[i].display();
        }
        out += ")";
    }
    return out;
}

std::vector<DecoratedTree> parse_trees(const std::vector<std::string>& texts) {
    std::vector<DecoratedTree> out;
    out.reserve(texts.size());
    for (const auto& t : texts) out.push_back(parse_tree(t));
    return out;
}

struct Options {
    std::string ring_flag = "z";
    std::string format = "compact";
    Ring ring() const { return ring_from_flag(ring_flag); }
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact computations in free pre-Lie algebras with divided symmetries"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--ring", opt.ring_flag, "coefficient ring: z, q, or zmod:P")
        ->capture_default_str();
    app.add_option("--format", opt.format, "compact | expanded (orbit elements as tensor sums)")
        ->check(CLI::IsMember({"compact", "expanded"}))
        ->capture_default_str();

    int exit_code = 0;
    auto guard = [&](const std::function<void()>& body) {
        try {
            (void)opt.ring();  // validate the flag even when unused
            body();
        } catch (const parse_error& e) {
            err << "parse error: " << e.what() << "\n";
            exit_code = 1;
        } catch (const non_integral_error& e) {
            err << "non-integral division: " << e.what() << "\n";
            exit_code = 3;
        } catch (const ring_mismatch_error& e) {
            err << "ring error: " << e.what() << "\n";
            exit_code = 2;
        } catch (const std::invalid_argument& e) {
            err << "error: " << e.what() << "\n";
            exit_code = 2;
        }
    };

    // enum N [--list]
    {
        auto* cmd = app.add_subcommand("enum", "count (or list) labelled rooted trees on n vertices");
        auto n = std::make_shared<int>(1);
        auto list = std::make_shared<bool>(false);
        cmd->add_option("n", *n, "number of vertices")->required();
        cmd->add_flag("--list", *list, "print every tree");
        cmd->callback([&, n, list] {
            guard([&] {
                auto trees = enumerate_labelled(*n);
                if (*list)
                    for (const auto& t : trees) out << t.display() << "\n";
                else
                    out << trees.size() << "\n";
            });
        });
    }

    // compose TREE I TREE
    {
        auto* cmd = app.add_subcommand("compose", "partial composition of labelled trees at vertex i");
        auto a = std::make_shared<std::string>();
        auto i = std::make_shared<int>(1);
        auto b = std::make_shared<std::string>();
        cmd->add_option("outer", *a)->required();
        cmd->add_option("i", *i)->required();
        cmd->add_option("inner", *b)->required();
        cmd->callback([&, a, i, b] {
            guard([&] {
                auto result = labelled_compose(parse_labelled(*a), *i, parse_labelled(*b), opt.ring());
                out << result.str() << "\n";
            });
        });
    }

    // total OUTER ARGS...
    {
        auto* cmd = app.add_subcommand("total", "total composition of an outer labelled tree with decorated trees");
        auto outer = std::make_shared<std::string>();
        auto rest = std::make_shared<std::vector<std::string>>();
        cmd->add_option("outer", *outer)->required();
        cmd->add_option("args", *rest, "one decorated tree per outer vertex")->required();
        cmd->callback([&, outer, rest] {
            guard([&] {
                auto result = compose_total(parse_labelled(*outer), parse_trees(*rest), opt.ring());
                out << result.str() << "\n";
            });
        });
    }

    // bracket A B
    {
        auto* cmd = app.add_subcommand("bracket", "pre-Lie product of two decorated trees");
        auto a = std::make_shared<std::string>();
        auto b = std::make_shared<std::string>();
        cmd->add_option("a", *a)->required();
        cmd->add_option("b", *b)->required();
        cmd->callback([&, a, b] {
            guard([&] {
                Ring ring = opt.ring();
                STerm result = prelie_bracket(
                    STerm(Element<DecoratedTree>::unit_term(ring, parse_tree(*a))),
                    STerm(Element<DecoratedTree>::unit_term(ring, parse_tree(*b))));
                out << result.str() << "\n";
            });
        });
    }

    // stab TREE
    {
        auto* cmd = app.add_subcommand("stab", "stabilizer order of a decorated tree");
        auto a = std::make_shared<std::string>();
        cmd->add_option("tree", *a)->required();
        cmd->callback([&, a] {
            guard([&] { out << stab_order(parse_tree(*a)).str() << "\n"; });
        });
    }

    // trace TREE
    {
        auto* cmd = app.add_subcommand("trace", "trace map of a tree: |Stab| times its orbit element");
        auto a = std::make_shared<std::string>();
        cmd->add_option("tree", *a)->required();
        cmd->callback([&, a] {
            guard([&] {
                Ring ring = opt.ring();
                GammaTerm g = trace(STerm(Element<DecoratedTree>::unit_term(ring, parse_tree(*a))));
                out << format_gamma(g, opt.format) << "\n";
            });
        });
    }

    // gamma-compose OUTER ARGS...
    {
        auto* cmd = app.add_subcommand("gamma-compose", "orbit-basis composition of an outer labelled tree with orbit elements");
        auto outer = std::make_shared<std::string>();
        auto rest = std::make_shared<std::vector<std::string>>();
        cmd->add_option("outer", *outer)->required();
        cmd->add_option("args", *rest, "one decorated tree per outer vertex")->required();
        cmd->callback([&, outer, rest] {
            guard([&] {
                Ring ring = opt.ring();
                std::vector<GammaTerm> gargs;
                for (const auto& t : parse_trees(*rest)) gargs.push_back(orb_of(t, ring));
                out << format_gamma(gamma_compose(parse_labelled(*outer), gargs), opt.format)
                    << "\n";
            });
        });
    }

    // normal-form TREE
    {
        auto* cmd = app.add_subcommand("normal-form", "nested corolla decomposition of a tree");
        auto a = std::make_shared<std::string>();
        cmd->add_option("tree", *a)->required();
        cmd->callback([&, a] {
            guard([&] { out << normal_form(parse_tree(*a)).display() << "\n"; });
        });
    }

    // lambda TREE
    {
        auto* cmd = app.add_subcommand("lambda", "number of increasing labellings of a tree");
        auto a = std::make_shared<std::string>();
        cmd->add_option("tree", *a)->required();
        cmd->callback([&, a] {
            guard([&] { out << lambda_count(parse_tree(*a)).str() << "\n"; });
        });
    }

    // ker-basis N P [--alphabet x,y]
    {
        auto* cmd = app.add_subcommand("ker-basis", "trace-kernel basis trees with n vertices over an alphabet");
        auto n = std::make_shared<int>(1);
        auto p = std::make_shared<std::uint64_t>(2);
        auto alpha = std::make_shared<std::string>("x,y");
        cmd->add_option("n", *n)->required();
        cmd->add_option("p", *p)->required();
        cmd->add_option("--alphabet", *alpha, "comma-separated decorations")->capture_default_str();
        cmd->callback([&, n, p, alpha] {
            guard([&] {
                std::vector<std::string> letters;
                std::string cur;
                for (char c : *alpha) {
                    if (c == ',') {
                        if (!cur.empty()) letters.push_back(cur);
                        cur.clear();
                    } else if (!std::isspace(static_cast<unsigned char>(c))) {
                        cur += c;
                    }
                }
                if (!cur.empty()) letters.push_back(cur);
                if (letters.empty()) throw std::invalid_argument("empty alphabet");
                long count = 0;
                for (const auto& t : enumerate_decorated(*n, letters))
                    if (ker_trace_predicate(t, *p)) {
                        out << t.display() << "  stab=" << stab_order(t).str() << "\n";
                        ++count;
                    }
                out << count << " kernel basis elements\n";
            });
        });
    }

    // defect X Y P
    {
        auto* cmd = app.add_subcommand("defect", "p-restricted defect: left p-comb minus right p-comb mod p");
        auto x = std::make_shared<std::string>();
        auto y = std::make_shared<std::string>();
        auto p = std::make_shared<std::uint64_t>(2);
        cmd->add_option("x", *x)->required();
        cmd->add_option("y", *y)->required();
        cmd->add_option("p", *p)->required();
        cmd->callback([&, x, y, p] {
            guard([&] { out << p_restricted_defect(*x, *y, *p).str() << "\n"; });
        });
    }

    // cor-eval EXPR
    {
        auto* cmd = app.add_subcommand("cor-eval", "evaluate a corolla expression in the orbit basis");
        auto e = std::make_shared<std::string>();
        cmd->add_option("expr", *e)->required();
        cmd->callback([&, e] {
            guard([&] {
                out << format_gamma(normalize(parse_cor_expr(*e), opt.ring()), opt.format) << "\n";
            });
        });
    }

    // rel7 EXPR [--raw]
    {
        auto* cmd = app.add_subcommand("rel7", "distribute an outer corolla over its corolla head");
        auto e = std::make_shared<std::string>();
        auto raw = std::make_shared<bool>(false);
        cmd->add_option("expr", *e)->required();
        cmd->add_flag("--raw", *raw, "also print the unmerged splittings");
        cmd->callback([&, e, raw] {
            guard([&] {
                Rel7Expansion r = apply_rel7(parse_cor_expr(*e), opt.ring());
                if (*raw) {
                    out << r.raw_summand_count << " raw summands\n";
                    for (const auto& line : r.raw_display) out << "  " << line << "\n";
                }
                out << r.reduced.str() << "\n";
            });
        });
    }

    // verify --max-n --max-r --max-s [--alphabet x,y,z]
    {
        auto* cmd = app.add_subcommand("verify", "check the corolla relations instance by instance");
        auto bounds = std::make_shared<RelationBounds>();
        auto alpha = std::make_shared<std::string>("x,y,z");
        cmd->add_option("--max-n", bounds->max_groups, "argument groups per corolla")
            ->capture_default_str();
        cmd->add_option("--max-r", bounds->max_inner_mult, "inner multiplicity bound")
            ->capture_default_str();
        cmd->add_option("--max-s", bounds->max_outer_mult, "outer multiplicity bound")
            ->capture_default_str();
        cmd->add_option("--alphabet", *alpha, "comma-separated symbols")->capture_default_str();
        cmd->callback([&, bounds, alpha] {
            guard([&] {
                std::vector<std::string> letters;
                std::string cur;
                for (char c : *alpha) {
                    if (c == ',') {
                        if (!cur.empty()) letters.push_back(cur);
                        cur.clear();
                    } else if (!std::isspace(static_cast<unsigned char>(c))) {
                        cur += c;
                    }
                }
                if (!cur.empty()) letters.push_back(cur);
                auto outcome = verify_relations(letters, *bounds, opt.ring(),
                                                [&](const std::string& line) { out << line << "\n"; });
                out << outcome.checked << " instances, " << outcome.failures << " failures\n";
                if (outcome.failures > 0) exit_code = 4;
            });
        });
    }

    // brace-expand EXPR
    {
        auto* cmd = app.add_subcommand("brace-expand", "expand a corolla expression in the planar-tree model");
        auto e = std::make_shared<std::string>();
        cmd->add_option("expr", *e)->required();
        cmd->callback([&, e] {
            guard([&] { out << eval_brace(parse_cor_expr(*e), opt.ring()).str() << "\n"; });
        });
    }

    // oracle 'LHS = RHS'
    {
        auto* cmd = app.add_subcommand("oracle", "compare two corolla expressions in the planar-tree model");
        auto e = std::make_shared<std::string>();
        cmd->add_option("equation", *e)->required();
        cmd->callback([&, e] {
            guard([&] {
                auto [lhs, rhs] = parse_equation(*e);
                bool ok = oracle_compare(lhs, rhs, opt.ring());
                out << (ok ? "equal" : "different") << "\n";
                if (!ok) exit_code = 4;
            });
        });
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }
    return exit_code;
}

}  // namespace prelie
