#ifndef PRELIE_PARSE_HPP
#define PRELIE_PARSE_HPP

#include <string>
#include <utility>

#include "prelie/cor.hpp"
#include "prelie/trees.hpp"

namespace prelie {

struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// tree := symbol | symbol '[' tree (',' tree)* ']'
/// symbols are alphanumeric identifiers; whitespace is insignificant.
DecoratedTree parse_tree(const std::string& text);

/// A tree whose symbols are the labels 1..n.
LabelledTree parse_labelled(const std::string& text);

/// expr   := term (('+'|'-') term)*
/// term   := [int '*'?] factor
/// factor := symbol | '(' expr ')' | '{' expr ';' [group (',' group)*] '}'
/// group  := factor ('^' int)?
CorExpr parse_cor_expr(const std::string& text);

/// expr '=' expr
std::pair<CorExpr, CorExpr> parse_equation(const std::string& text);

}  // namespace prelie

#endif
