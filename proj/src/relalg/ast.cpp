#include "heunalg/relalg/ast.hpp"

#include <algorithm>

namespace heunalg::relalg {

Node Node::literal(Rational v, SourcePos p) {
    Node n;
    n.kind = NodeKind::literal;
    n.value = std::move(v);
    n.pos = p;
    return n;
}

Node Node::symbol(std::string name, SourcePos p) {
    Node n;
    n.kind = NodeKind::symbol;
    n.name = std::move(name);
    n.pos = p;
    return n;
}

Node Node::sum(std::vector<Node> terms, std::vector<bool> neg, SourcePos p) {
    Node n;
    n.kind = NodeKind::sum;
    n.children = std::move(terms);
    n.negated = std::move(neg);
    n.pos = p;
    return n;
}

Node Node::product(std::vector<Node> factors, SourcePos p) {
    Node n;
    n.kind = NodeKind::product;
    n.children = std::move(factors);
    n.pos = p;
    return n;
}

Node Node::power(Node base, unsigned exp, SourcePos p) {
    Node n;
    n.kind = NodeKind::power;
    n.children.push_back(std::move(base));
    n.exponent = exp;
    n.pos = p;
    return n;
}

Node Node::commutator(Node a, Node b, SourcePos p) {
    Node n;
    n.kind = NodeKind::commutator;
    n.children.push_back(std::move(a));
    n.children.push_back(std::move(b));
    n.pos = p;
    return n;
}

Node Node::anticommutator(Node a, Node b, SourcePos p) {
    Node n = commutator(std::move(a), std::move(b), p);
    n.kind = NodeKind::anticommutator;
    return n;
}

Node Node::paren(Node inner, SourcePos p) {
    Node n;
    n.kind = NodeKind::paren;
    n.children.push_back(std::move(inner));
    n.pos = p;
    return n;
}

bool structurally_equal(const Node& a, const Node& b) {
    if (a.kind != b.kind || a.children.size() != b.children.size()) return false;
    switch (a.kind) {
        case NodeKind::literal:
            if (a.value != b.value) return false;
            break;
        case NodeKind::symbol:
            if (a.name != b.name) return false;
            break;
        case NodeKind::power:
            if (a.exponent != b.exponent) return false;
            break;
        case NodeKind::sum:
            if (a.negated != b.negated) return false;
            break;
        default:
            break;
    }
    for (std::size_t k = 0; k < a.children.size(); ++k)
        if (!structurally_equal(a.children[k], b.children[k])) return false;
    return true;
}

bool Presentation::is_generator(const std::string& n) const {
    return std::find(generators.begin(), generators.end(), n) != generators.end();
}

bool Presentation::is_scalar(const std::string& n) const {
    return std::any_of(scalars.begin(), scalars.end(), [&](const ScalarSymbol& s) { return s.name == n; });
}

bool structurally_equal(const Presentation& a, const Presentation& b) {
    if (a.generators != b.generators || a.scalars.size() != b.scalars.size() ||
        a.relations.size() != b.relations.size())
        return false;
    for (std::size_t k = 0; k < a.scalars.size(); ++k)
        if (a.scalars[k].name != b.scalars[k].name || a.scalars[k].central != b.scalars[k].central) return false;
    for (std::size_t k = 0; k < a.relations.size(); ++k) {
        if (!structurally_equal(a.relations[k].lhs, b.relations[k].lhs) ||
            !structurally_equal(a.relations[k].rhs, b.relations[k].rhs))
            return false;
    }
    return true;
}

}  // namespace heunalg::relalg
