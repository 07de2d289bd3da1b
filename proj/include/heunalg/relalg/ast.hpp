#pragma once

#include <string>
#include <vector>

#include "heunalg/rational.hpp"

namespace heunalg::relalg {

struct SourcePos {
    int line = 1;
    int column = 1;
    friend bool operator==(const SourcePos&, const SourcePos&) = default;
};

enum class NodeKind { literal, symbol, sum, product, power, commutator, anticommutator, paren };

/// Expression tree node. Children layout by kind:
///   sum: terms, with `negated[k]` marking subtraction (a leading '-' negates term 0);
///   product: factors; power: {base}; commutator / anticommutator: {left, right}; paren: {inner}.
struct Node {
    NodeKind kind = NodeKind::literal;
    SourcePos pos;
    Rational value;
    std::string name;
    unsigned exponent = 0;
    std::vector<Node> children;
    std::vector<bool> negated;

    static Node literal(Rational v, SourcePos p = {});
    static Node symbol(std::string n, SourcePos p = {});
    static Node sum(std::vector<Node> terms, std::vector<bool> neg, SourcePos p = {});
    static Node product(std::vector<Node> factors, SourcePos p = {});
    static Node power(Node base, unsigned exp, SourcePos p = {});
    static Node commutator(Node a, Node b, SourcePos p = {});
    static Node anticommutator(Node a, Node b, SourcePos p = {});
    static Node paren(Node inner, SourcePos p = {});
};

/// Equality of shape and payload, ignoring source positions.
bool structurally_equal(const Node& a, const Node& b);

struct Relation {
    Node lhs;
    Node rhs;
    SourcePos pos;
};

struct ScalarSymbol {
    std::string name;
    bool central = false;  // central element (vs free parameter)
};

struct Presentation {
    std::vector<std::string> generators;
    std::vector<ScalarSymbol> scalars;
    std::vector<Relation> relations;

    [[nodiscard]] bool is_generator(const std::string& n) const;
    [[nodiscard]] bool is_scalar(const std::string& n) const;
};

bool structurally_equal(const Presentation& a, const Presentation& b);

}  // namespace heunalg::relalg
