#include "flagsphere/expr.hpp"

#include <cctype>

#include "flagsphere/errors.hpp"
#include "flagsphere/structure.hpp"

namespace flagsphere {

namespace {

using Kind = FamilyExpr::Kind;

ExprPtr make(FamilyExpr e) { return std::make_shared<const FamilyExpr>(std::move(e)); }

struct Parser {
    const std::string& text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool peek(char c) {
        skip_ws();
        return pos < text.size() && text[pos] == c;
    }
    bool accept(char c) {
        if (!peek(c)) return false;
        ++pos;
        return true;
    }
    void expect(char c) {
        if (!accept(c)) throw ParseError(std::string("expected '") + c + "'", pos);
    }

    int number() {
        skip_ws();
        const std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw ParseError("expected a number", pos);
        long long v = 0;
        for (std::size_t i = start; i < pos; ++i) {
            v = v * 10 + (text[i] - '0');
            if (v > 1000000) throw ParseError("number too large", start);
        }
        return static_cast<int>(v);
    }

    std::string word() {
        skip_ws();
        const std::size_t start = pos;
        while (pos < text.size() && (std::isalpha(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) ++pos;
        if (pos == start) throw ParseError("expected a name", pos);
        return text.substr(start, pos - start);
    }

    bool next_is_digit() {
        return pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]));
    }

    // atoms that take one numeric parameter, inline (C5) or call style (C(5))
    int numeric_param(const std::string& name) {
        if (next_is_digit()) return number();
        if (accept('(')) {
            const int v = number();
            expect(')');
            return v;
        }
        throw ParseError("'" + name + "' needs a numeric parameter", pos);
    }

    ExprPtr expr() {
        std::vector<ExprPtr> terms{term()};
        while (accept('*')) terms.push_back(term());
        if (terms.size() == 1) return terms[0];
        FamilyExpr e;
        e.kind = Kind::Join;
        e.children = std::move(terms);
        return make(std::move(e));
    }

    ExprPtr term() {
        skip_ws();
        const std::size_t at = pos;
        if (pos >= text.size()) throw ParseError("unexpected end of input", pos);
        if (text[pos] == '(') {  // parenthesized sub-expression
            ++pos;
            ExprPtr inner = expr();
            expect(')');
            return inner;
        }
        const std::string name = word();
        FamilyExpr e;
        if (name == "S" && next_is_digit()) {
            if (number() != 0) throw ParseError("only S0 is an atom", at);
            e.kind = Kind::S0;
            return make(std::move(e));
        }
        if (name == "empty") { e.kind = Kind::Empty; return make(std::move(e)); }
        if (name == "point") { e.kind = Kind::Point; return make(std::move(e)); }
        if (name == "C") { e.kind = Kind::Cycle; e.a = numeric_param(name); return make(std::move(e)); }
        if (name == "simplex") { e.kind = Kind::Simplex; e.a = numeric_param(name); return make(std::move(e)); }
        if (name == "oct") { e.kind = Kind::Oct; e.a = numeric_param(name); return make(std::move(e)); }
        if (name == "upsilon" && next_is_digit()) {
            const int which = number();
            if (which != 1 && which != 2) throw ParseError("only upsilon1/upsilon2 exist", at);
            e.kind = (which == 1) ? Kind::Upsilon1Atom : Kind::Upsilon2Atom;
            expect('(');
            e.a = number();
            expect(',');
            e.b = number();
            expect(')');
            return make(std::move(e));
        }
        if (name == "susp") {
            e.kind = Kind::Susp;
            e.a = 1;
            if (accept('^')) e.a = number();
            expect('(');
            e.children.push_back(expr());
            expect(')');
            return make(std::move(e));
        }
        if (name == "subdivide" || name == "contract") {
            e.kind = (name == "subdivide") ? Kind::Subdivide : Kind::Contract;
            expect('(');
            e.children.push_back(expr());
            expect(',');
            e.a = number();
            expect(',');
            e.b = number();
            expect(')');
            return make(std::move(e));
        }
        if (name == "link") {
            e.kind = Kind::Link;
            expect('(');
            e.children.push_back(expr());
            while (accept(',')) e.verts.push_back(number());
            expect(')');
            return make(std::move(e));
        }
        if (name == "split") {
            e.kind = Kind::Split;
            expect('(');
            e.children.push_back(expr());
            expect(',');
            e.a = number();
            while (accept(',')) e.verts.push_back(number());
            expect(')');
            return make(std::move(e));
        }
        throw ParseError("unknown name '" + name + "'", at);
    }
};

void print_into(const ExprPtr& e, std::string& out) {
    switch (e->kind) {
        case Kind::S0: out += "S0"; return;
        case Kind::Empty: out += "empty"; return;
        case Kind::Point: out += "point"; return;
        case Kind::Cycle: out += "C" + std::to_string(e->a); return;
        case Kind::Simplex: out += "simplex" + std::to_string(e->a); return;
        case Kind::Oct: out += "oct" + std::to_string(e->a); return;
        case Kind::Upsilon1Atom: out += "upsilon1(" + std::to_string(e->a) + "," + std::to_string(e->b) + ")"; return;
        case Kind::Upsilon2Atom: out += "upsilon2(" + std::to_string(e->a) + "," + std::to_string(e->b) + ")"; return;
        case Kind::Join: {
            for (std::size_t i = 0; i < e->children.size(); ++i) {
                if (i) out += " * ";
                const bool nested_join = e->children[i]->kind == Kind::Join;
                if (nested_join) out += "(";
                print_into(e->children[i], out);
                if (nested_join) out += ")";
            }
            return;
        }
        case Kind::Susp: {
            out += (e->a == 1) ? "susp(" : "susp^" + std::to_string(e->a) + "(";
            print_into(e->children[0], out);
            out += ")";
            return;
        }
        case Kind::Subdivide:
        case Kind::Contract: {
            out += (e->kind == Kind::Subdivide) ? "subdivide(" : "contract(";
            print_into(e->children[0], out);
            out += "," + std::to_string(e->a) + "," + std::to_string(e->b) + ")";
            return;
        }
        case Kind::Link:
        case Kind::Split: {
            out += (e->kind == Kind::Link) ? "link(" : "split(";
            print_into(e->children[0], out);
            if (e->kind == Kind::Split) out += "," + std::to_string(e->a);
            for (int v : e->verts) out += "," + std::to_string(v);
            out += ")";
            return;
        }
    }
}

}  // namespace

ExprPtr parse_expr(const std::string& text) {
    Parser p{text};
    ExprPtr e = p.expr();
    p.skip_ws();
    if (p.pos != text.size()) throw ParseError("trailing input", p.pos);
    return e;
}

std::string print_expr(const ExprPtr& e) {
    std::string out;
    print_into(e, out);
    return out;
}

SimplicialComplex eval_expr(const ExprPtr& e) {
    switch (e->kind) {
        case Kind::S0: return s0_complex();
        case Kind::Empty: return SimplicialComplex();
        case Kind::Point: return point_complex();
        case Kind::Cycle: return cycle_complex(e->a);
        case Kind::Simplex: return simplex_complex(e->a);
        case Kind::Oct: return octahedral_sphere(e->a);
        case Kind::Upsilon1Atom: return construct_family(FamilyKind::Upsilon1, e->a, e->b);
        case Kind::Upsilon2Atom: return construct_family(FamilyKind::Upsilon2, e->a, e->b);
        case Kind::Join: {
            SimplicialComplex out = eval_expr(e->children[0]);
            for (std::size_t i = 1; i < e->children.size(); ++i) out = join(out, eval_expr(e->children[i]));
            return out;
        }
        case Kind::Susp: return suspend_k(eval_expr(e->children[0]), e->a);
        case Kind::Subdivide: return edge_subdivision(eval_expr(e->children[0]), Face::of({e->a, e->b}));
        case Kind::Contract: return contract_edge(eval_expr(e->children[0]), Face::of({e->a, e->b}));
        case Kind::Link: return link(eval_expr(e->children[0]), Face::from_vertices(e->verts)).complex;
        case Kind::Split: return vertex_split(eval_expr(e->children[0]), e->a, Face::from_vertices(e->verts));
    }
    throw Error("unreachable expression kind");
}

SimplicialComplex eval_expr(const std::string& text) { return eval_expr(parse_expr(text)); }

}  // namespace flagsphere
