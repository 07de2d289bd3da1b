#include "heunalg/relalg/parser.hpp"

#include <cctype>
#include <set>
#include <sstream>
#include <vector>

namespace heunalg::relalg {

ParseError::ParseError(SourcePos pos, const std::string& message)
    : std::runtime_error(std::to_string(pos.line) + ":" + std::to_string(pos.column) + ": " + message),
      pos_(pos),
      message_(message) {}

namespace {

enum class Tok { ident, number, plus, minus, star, slash, caret, lbracket, rbracket, lbrace, rbrace, lparen, rparen,
                 comma, equals, semicolon, end };

struct Token {
    Tok kind;
    std::string text;
    SourcePos pos;
};

std::string describe(const Token& t) {
    switch (t.kind) {
        case Tok::end: return "end of input";
        case Tok::ident: return "identifier '" + t.text + "'";
        case Tok::number: return "number '" + t.text + "'";
        default: return "'" + t.text + "'";
    }
}

std::vector<Token> lex(std::string_view src) {
    std::vector<Token> out;
    SourcePos pos;
    std::size_t i = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k, ++i) {
            if (src[i] == '\n') {
                ++pos.line;
                pos.column = 1;
            } else {
                ++pos.column;
            }
        }
    };
    while (i < src.size()) {
        const char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        if (c == '#') {
            while (i < src.size() && src[i] != '\n') advance(1);
            continue;
        }
        const SourcePos start = pos;
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
            out.push_back({Tok::ident, std::string(src.substr(i, j - i)), start});
            advance(j - i);
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
            out.push_back({Tok::number, std::string(src.substr(i, j - i)), start});
            advance(j - i);
            continue;
        }
        Tok k;
        switch (c) {
            case '+': k = Tok::plus; break;
            case '-': k = Tok::minus; break;
            case '*': k = Tok::star; break;
            case '/': k = Tok::slash; break;
            case '^': k = Tok::caret; break;
            case '[': k = Tok::lbracket; break;
            case ']': k = Tok::rbracket; break;
            case '{': k = Tok::lbrace; break;
            case '}': k = Tok::rbrace; break;
            case '(': k = Tok::lparen; break;
            case ')': k = Tok::rparen; break;
            case ',': k = Tok::comma; break;
            case '=': k = Tok::equals; break;
            case ';': k = Tok::semicolon; break;
            default: throw ParseError(start, std::string("unexpected character '") + c + "'");
        }
        out.push_back({k, std::string(1, c), start});
        advance(1);
    }
    out.push_back({Tok::end, "", pos});
    return out;
}

bool is_keyword(const std::string& s) { return s == "gens" || s == "scalars" || s == "central"; }

class Parser {
public:
    explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    Presentation presentation() {
        Presentation p;
        while (peek().kind != Tok::end) {
            if (peek().kind == Tok::semicolon) {
                next();
                continue;
            }
            if (peek().kind == Tok::ident && is_keyword(peek().text)) {
                header(p);
            } else {
                Relation r;
                r.pos = peek().pos;
                r.lhs = expr();
                expect(Tok::equals, "'='");
                r.rhs = expr();
                if (peek().kind != Tok::end) expect(Tok::semicolon, "';' or operator");
                p.relations.push_back(std::move(r));
            }
        }
        return p;
    }

    Node single_expression() {
        Node n = expr();
        if (peek().kind != Tok::end) fail("end of expression");
        return n;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    Token next() { return toks_[pos_++]; }

    [[noreturn]] void fail(const std::string& expected) const {
        throw ParseError(peek().pos, "expected " + expected + ", found " + describe(peek()));
    }

    Token expect(Tok k, const std::string& what) {
        if (peek().kind != k) fail(what);
        return next();
    }

    void header(Presentation& p) {
        const Token kw = next();
        while (peek().kind == Tok::ident) {
            const Token name = next();
            if (is_keyword(name.text)) throw ParseError(name.pos, "keyword '" + name.text + "' used as a name");
            if (!declared_.insert(name.text).second)
                throw ParseError(name.pos, "duplicate declaration of '" + name.text + "'");
            if (kw.text == "gens") {
                p.generators.push_back(name.text);
            } else {
                p.scalars.push_back({name.text, kw.text == "central"});
            }
        }
        if (peek().kind != Tok::end) expect(Tok::semicolon, "name or ';'");
    }

    static bool starts_factor(Tok k) {
        return k == Tok::ident || k == Tok::number || k == Tok::lbracket || k == Tok::lbrace || k == Tok::lparen;
    }

    Node expr() {
        const SourcePos start = peek().pos;
        std::vector<Node> terms;
        std::vector<bool> neg;
        bool lead = false;
        if (peek().kind == Tok::minus) {
            next();
            lead = true;
        }
        terms.push_back(term());
        neg.push_back(lead);
        while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
            neg.push_back(next().kind == Tok::minus);
            terms.push_back(term());
        }
        if (terms.size() == 1 && !lead) return std::move(terms.front());
        return Node::sum(std::move(terms), std::move(neg), start);
    }

    Node term() {
        const SourcePos start = peek().pos;
        std::vector<Node> factors;
        factors.push_back(factor());
        for (;;) {
            if (peek().kind == Tok::star) {
                next();
                factors.push_back(factor());
            } else if (starts_factor(peek().kind)) {
                factors.push_back(factor());
            } else {
                break;
            }
        }
        if (factors.size() == 1) return std::move(factors.front());
        return Node::product(std::move(factors), start);
    }

    Node factor() {
        const SourcePos start = peek().pos;
        Node a = atom();
        if (peek().kind == Tok::caret) {
            next();
            const Token e = expect(Tok::number, "unsigned integer exponent");
            unsigned long exp = 0;
            try {
                exp = std::stoul(e.text);
            } catch (const std::exception&) {
                throw ParseError(e.pos, "exponent out of range");
            }
            if (exp > 64) throw ParseError(e.pos, "exponent out of range");
            return Node::power(std::move(a), static_cast<unsigned>(exp), start);
        }
        return a;
    }

    Node atom() {
        const Token& t = peek();
        const SourcePos start = t.pos;
        switch (t.kind) {
            case Tok::number: {
                const std::string num = next().text;
                std::string den = "1";
                if (peek().kind == Tok::slash) {
                    next();
                    const Token d = expect(Tok::number, "denominator");
                    if (d.text.find_first_not_of('0') == std::string::npos)
                        throw ParseError(d.pos, "zero denominator");
                    den = d.text;
                }
                return Node::literal(Rational::parse(num + "/" + den), start);
            }
            case Tok::ident: {
                const Token id = next();
                if (is_keyword(id.text)) throw ParseError(id.pos, "keyword '" + id.text + "' inside an expression");
                return Node::symbol(id.text, start);
            }
            case Tok::lbracket: {
                next();
                Node a = expr();
                expect(Tok::comma, "','");
                Node b = expr();
                expect(Tok::rbracket, "']'");
                return Node::commutator(std::move(a), std::move(b), start);
            }
            case Tok::lbrace: {
                next();
                Node a = expr();
                expect(Tok::comma, "','");
                Node b = expr();
                expect(Tok::rbrace, "'}'");
                return Node::anticommutator(std::move(a), std::move(b), start);
            }
            case Tok::lparen: {
                next();
                Node inner = expr();
                expect(Tok::rparen, "')'");
                return Node::paren(std::move(inner), start);
            }
            default:
                fail("number, name, '[', '{' or '('");
        }
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    std::set<std::string> declared_;
};

void check_declared(const Node& n, const Presentation& p) {
    if (n.kind == NodeKind::symbol && !p.is_generator(n.name) && !p.is_scalar(n.name))
        throw ParseError(n.pos, "undeclared identifier '" + n.name + "'");
    for (const auto& c : n.children) check_declared(c, p);
}

void print_to(std::ostringstream& os, const Node& n) {
    switch (n.kind) {
        case NodeKind::literal: os << n.value.str(); break;
        case NodeKind::symbol: os << n.name; break;
        case NodeKind::sum:
            for (std::size_t k = 0; k < n.children.size(); ++k) {
                if (k == 0) {
                    if (n.negated[0]) os << '-';
                } else {
                    os << (n.negated[k] ? " - " : " + ");
                }
                print_to(os, n.children[k]);
            }
            break;
        case NodeKind::product:
            for (std::size_t k = 0; k < n.children.size(); ++k) {
                if (k) os << '*';
                print_to(os, n.children[k]);
            }
            break;
        case NodeKind::power:
            print_to(os, n.children[0]);
            os << '^' << n.exponent;
            break;
        case NodeKind::commutator:
        case NodeKind::anticommutator:
            os << (n.kind == NodeKind::commutator ? '[' : '{');
            print_to(os, n.children[0]);
            os << ", ";
            print_to(os, n.children[1]);
            os << (n.kind == NodeKind::commutator ? ']' : '}');
            break;
        case NodeKind::paren:
            os << '(';
            print_to(os, n.children[0]);
            os << ')';
            break;
    }
}

}  // namespace

Presentation parse(std::string_view source) {
    Parser parser(lex(source));
    Presentation p = parser.presentation();
    for (const auto& r : p.relations) {
        check_declared(r.lhs, p);
        check_declared(r.rhs, p);
    }
    return p;
}

Node parse_expression(std::string_view source, const Presentation& declarations) {
    Parser parser(lex(source));
    Node n = parser.single_expression();
    check_declared(n, declarations);
    return n;
}

std::string print(const Node& node) {
    std::ostringstream os;
    print_to(os, node);
    return os.str();
}

std::string print(const Relation& rel) { return print(rel.lhs) + " = " + print(rel.rhs); }

std::string print(const Presentation& pres) {
    std::ostringstream os;
    os << "gens";
    for (const auto& g : pres.generators) os << ' ' << g;
    os << ";\nscalars";
    for (const auto& s : pres.scalars)
        if (!s.central) os << ' ' << s.name;
    os << ";\ncentral";
    for (const auto& s : pres.scalars)
        if (s.central) os << ' ' << s.name;
    os << ";\n";
    for (const auto& r : pres.relations) os << print(r) << ";\n";
    return os.str();
}

}  // namespace heunalg::relalg
