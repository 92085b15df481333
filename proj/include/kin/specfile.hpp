#pragma once

#include <map>
#include <string>
#include <vector>

#include "kin/catalog.hpp"

namespace kin {

// Declarative spec files: user-defined algebras, geometries, contraction
// recipes and duality pairs, checked by the same suites as the catalog.

struct SpecSlot {
    bool inline_expr = false;
    GenSym sym = GenSym::J;
    std::vector<VectorField> fields;  // 1 field for time, 3 for trans/boost
};

struct SpecAlgebraDecl {
    std::string name;
    SpecSlot time, trans, boost;
};

struct SpecGeometryDecl {
    std::string name;
    std::string algebra;
    TensorField g = TensorField::metric();
    TensorField h = TensorField::inverse_metric();
    Connection conn;
    std::vector<DomainIneq> domain;
};

struct SpecContractDecl {
    std::string src, dst;
    RuleKind rule = RuleKind::LInf;
    InvolutionKind pre = InvolutionKind::Identity;
    std::map<std::string, SlotScale> scales;  // keys t, p, k, g, h, gamma
    bool expect_contract = true;
};

struct SpecDualDecl {
    std::string left, right;
    int sign_g = 1, sign_h = 1;
};

struct SpecDocument {
    std::vector<SpecAlgebraDecl> algebras;
    std::vector<SpecGeometryDecl> geometries;
    std::vector<SpecContractDecl> contractions;
    std::vector<SpecDualDecl> duals;
    // Declaration order for the canonical printer.
    std::vector<std::pair<char, int>> order;  // 'a','g','c','d' + index

    bool empty() const {
        return algebras.empty() && geometries.empty() && contractions.empty() && duals.empty();
    }
};

// Total parse: either the full document or a thrown SyntaxError /
// UnknownSymbol / DuplicateName; no partial side effects.
SpecDocument parse_spec(const std::string& text);

// Canonical printer; parse(print(parse(t))) == parse(t).
std::string print_spec(const SpecDocument& doc);

// Builds a presentation from a declaration (slots resolved against the
// primitive families or inline expressions).
AlgebraPresentation realize_algebra(const SpecAlgebraDecl& decl);

// Expression sublanguage used by the CLI too: + - * / ^ over x0..x3, c, l.
RationalFn parse_expression(const std::string& text);

}  // namespace kin
