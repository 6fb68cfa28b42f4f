#pragma once

#include <memory>
#include <string>
#include <vector>

#include "flagsphere/complex.hpp"

namespace flagsphere {

struct FamilyExpr;
using ExprPtr = std::shared_ptr<const FamilyExpr>;

/// AST of the construction DSL.
///
///   expr := term ("*" term)*
///   term := atom | func "(" args ")"
///   atoms: S0, empty, point, C<k>, simplex<k>, oct<d> (call forms C(5),
///          simplex(4), oct(3) also accepted), upsilon1(m,ell), upsilon2(m,ell)
///   funcs: susp(e), susp^m(e), subdivide(e,u,v), contract(e,u,v),
///          link(e, v...), split(e, v, j...)
///
/// Whitespace-insensitive. Transform vertex arguments refer to the canonical
/// labeling of the evaluated sub-expression.
struct FamilyExpr {
    enum class Kind {
        S0, Empty, Point, Cycle, Simplex, Oct, Upsilon1Atom, Upsilon2Atom,
        Join, Susp, Subdivide, Contract, Link, Split
    };
    Kind kind = Kind::Empty;
    int a = 0, b = 0;               // k/d, (m, ell), edge endpoints, susp count
    std::vector<int> verts;         // link face / split vertex-set
    std::vector<ExprPtr> children;  // join operands, or the single transformed child

    friend bool operator==(const FamilyExpr& x, const FamilyExpr& y) {
        if (x.kind != y.kind || x.a != y.a || x.b != y.b || x.verts != y.verts ||
            x.children.size() != y.children.size())
            return false;
        for (std::size_t i = 0; i < x.children.size(); ++i)
            if (!(*x.children[i] == *y.children[i])) return false;
        return true;
    }
};

/// Throws ParseError carrying the byte offset of the failure.
ExprPtr parse_expr(const std::string& text);

/// Canonical text; parse_expr(print_expr(e)) == e.
std::string print_expr(const ExprPtr& e);

SimplicialComplex eval_expr(const ExprPtr& e);
SimplicialComplex eval_expr(const std::string& text);

}  // namespace flagsphere
