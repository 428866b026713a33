#include "prelie/parse.hpp"

#include <cctype>

#include "prelie/operad.hpp"

namespace prelie {

namespace {

class Scanner {
  public:
    explicit Scanner(const std::string& text) : text_(text) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool done() {
        skip_ws();
        return pos_ >= text_.size();
    }
    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }
    std::string ident() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        if (start == pos_) fail("expected a symbol");
        return text_.substr(start, pos_ - start);
    }
    int integer() {
        skip_ws();
        std::size_t start = pos_;
        if (pos_ < text_.size() && text_[pos_] == '-') ++pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_ || (text_[start] == '-' && pos_ == start + 1)) fail("expected an integer");
        try {
            return std::stoi(text_.substr(start, pos_ - start));
        } catch (const std::exception&) {
            fail("integer out of range");
        }
    }
    [[noreturn]] void fail(const std::string& what) {
        throw parse_error(what + " at position " + std::to_string(pos_) + " in \"" + text_ + "\"");
    }

  private:
    const std::string& text_;
    std::size_t pos_ = 0;
};

DecoratedTree parse_tree_at(Scanner& s) {
    std::string sym = s.ident();
    std::vector<DecoratedTree> branches;
    if (s.accept('[')) {
        if (!s.accept(']')) {
            do {
                branches.push_back(parse_tree_at(s));
            } while (s.accept(','));
            s.expect(']');
        }
    }
    return DecoratedTree(std::move(sym), std::move(branches));
}

CorExpr parse_expr_at(Scanner& s);

CorExpr parse_factor_at(Scanner& s) {
    if (s.accept('(')) {
        CorExpr inner = parse_expr_at(s);
        s.expect(')');
        return inner;
    }
    if (s.accept('{')) {
        CorExpr head = parse_expr_at(s);
        s.expect(';');
        std::vector<CorExpr::Group> groups;
        if (s.peek() != '}') {
            do {
                CorExpr arg = parse_factor_at(s);
                int mult = 1;
                if (s.accept('^')) mult = s.integer();
                if (mult < 0) s.fail("multiplicity must be nonnegative");
                groups.push_back({std::move(arg), mult});
            } while (s.accept(','));
        }
        s.expect('}');
        return CorExpr::corolla(std::move(head), std::move(groups));
    }
    return CorExpr::symbol(s.ident());
}

CorExpr parse_term_at(Scanner& s, Integer& factor_out) {
    factor_out = Integer(1);
    char c = s.peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
        factor_out = Integer(static_cast<long long>(s.integer()));
        if (!s.accept('*')) {
            char n = s.peek();
            // a bare integer is only a scalar when a factor follows
            if (n != '{' && n != '(' && !std::isalpha(static_cast<unsigned char>(n)) && n != '_')
                s.fail("expected an expression after the scalar");
        }
    }
    return parse_factor_at(s);
}

CorExpr parse_expr_at(Scanner& s) {
    std::vector<std::pair<Integer, CorExpr>> summands;
    bool negative = s.accept('-');
    while (true) {
        Integer coef(1);
        CorExpr term = parse_term_at(s, coef);
        if (negative) coef = -coef;
        summands.emplace_back(std::move(coef), std::move(term));
        if (s.accept('+'))
            negative = false;
        else if (s.accept('-'))
            negative = true;
        else
            break;
    }
    if (summands.size() == 1 && summands[0].first.is_one()) return summands[0].second;
    return CorExpr::sum(std::move(summands));
}

}  // namespace

DecoratedTree parse_tree(const std::string& text) {
    Scanner s(text);
    DecoratedTree t = parse_tree_at(s);
    if (!s.done()) s.fail("trailing input after tree");
    return t;
}

LabelledTree parse_labelled(const std::string& text) {
    DecoratedTree t = parse_tree(text);
    try {
        return labelled_from_decorated(t);
    } catch (const std::invalid_argument& e) {
        throw parse_error(e.what());
    }
}

CorExpr parse_cor_expr(const std::string& text) {
    Scanner s(text);
    CorExpr e = parse_expr_at(s);
    if (!s.done()) s.fail("trailing input after expression");
    return e;
}

std::pair<CorExpr, CorExpr> parse_equation(const std::string& text) {
    std::size_t depth = 0, eq = std::string::npos;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '{') ++depth;
        if (text[i] == '}') --depth;
        if (text[i] == '=' && depth == 0) {
            if (eq != std::string::npos) throw parse_error("more than one '=' in equation");
            eq = i;
        }
    }
    if (eq == std::string::npos) throw parse_error("expected '=' in equation");
    return {parse_cor_expr(text.substr(0, eq)), parse_cor_expr(text.substr(eq + 1))};
}

}  // namespace prelie
