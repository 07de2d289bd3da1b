#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "heunalg/relalg/ast.hpp"

namespace heunalg::relalg {

class ParseError : public std::runtime_error {
public:
    ParseError(SourcePos pos, const std::string& message);
    [[nodiscard]] SourcePos pos() const { return pos_; }
    [[nodiscard]] const std::string& message() const { return message_; }

private:
    SourcePos pos_;
    std::string message_;
};

/// Parses a presentation:
///   header   := ('gens' | 'scalars' | 'central') name* ';'
///   relation := expr '=' expr            (statements separated by ';', '#' starts a comment)
///   expr     := '-'? term (('+'|'-') term)*
///   term     := factor ('*'? factor)*
///   factor   := atom ('^' uint)?
///   atom     := uint ('/' uint)? | name | '[' expr ',' expr ']' | '{' expr ',' expr '}' | '(' expr ')'
/// Every identifier must be declared; names must be distinct.
Presentation parse(std::string_view source);

/// Parses a single expression against an existing presentation's declarations.
Node parse_expression(std::string_view source, const Presentation& declarations);

std::string print(const Node& node);
std::string print(const Relation& rel);
std::string print(const Presentation& pres);

}  // namespace heunalg::relalg
