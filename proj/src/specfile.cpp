#include "kin/specfile.hpp"

#include <cctype>
#include <cstring>
#include <sstream>

namespace kin {

namespace {

struct Token {
    enum Kind { Ident, Number, Punct, End } kind = End;
    std::string text;
    int line = 1, col = 1;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }
    bool at_punct(const std::string& p) const {
        return tok_.kind == Token::Punct && tok_.text == p;
    }
    bool at_ident(const std::string& w) const {
        return tok_.kind == Token::Ident && tok_.text == w;
    }
    Token expect_punct(const std::string& p) {
        if (!at_punct(p)) throw SyntaxError(tok_.line, tok_.col, "expected '" + p + "'");
        return take();
    }
    Token expect_ident() {
        if (tok_.kind != Token::Ident)
            throw SyntaxError(tok_.line, tok_.col, "expected an identifier");
        return take();
    }
    Token expect_keyword(const std::string& w) {
        if (!at_ident(w)) throw SyntaxError(tok_.line, tok_.col, "expected '" + w + "'");
        return take();
    }
    [[noreturn]] void fail(const std::string& expected) const {
        throw SyntaxError(tok_.line, tok_.col, expected);
    }

private:
    void advance() {
        for (;;) {
            while (pos_ < text_.size() && std::isspace((unsigned char)text_[pos_])) bump();
            if (pos_ < text_.size() && text_[pos_] == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') bump();
                continue;
            }
            break;
        }
        tok_.line = line_;
        tok_.col = col_;
        if (pos_ >= text_.size()) {
            tok_.kind = Token::End;
            tok_.text.clear();
            return;
        }
        char c = text_[pos_];
        if (std::isalpha((unsigned char)c) || c == '_') {
            std::string w;
            // Identifiers follow the catalog names: letters, digits, _, +, -, '
            // with +/- only as trailing marks so that "d+" lexes as one token
            // while "a-b" still splits.
            while (pos_ < text_.size()) {
                char d = text_[pos_];
                if (std::isalnum((unsigned char)d) || d == '_' || d == '\'') {
                    w += d;
                    bump();
                } else if ((d == '+' || d == '-') && !w.empty() &&
                           (pos_ + 1 >= text_.size() ||
                            !std::isalnum((unsigned char)text_[pos_ + 1]))) {
                    w += d;
                    bump();
                } else {
                    break;
                }
            }
            tok_.kind = Token::Ident;
            tok_.text = w;
            return;
        }
        if (std::isdigit((unsigned char)c)) {
            std::string w;
            while (pos_ < text_.size() && std::isdigit((unsigned char)text_[pos_])) {
                w += text_[pos_];
                bump();
            }
            tok_.kind = Token::Number;
            tok_.text = w;
            return;
        }
        // multi-char punctuation
        static const char* multi[] = {"->", "<->"};
        for (const char* m : multi) {
            size_t n = std::strlen(m);
            if (text_.compare(pos_, n, m) == 0) {
                tok_.kind = Token::Punct;
                tok_.text = m;
                for (size_t i = 0; i < n; ++i) bump();
                return;
            }
        }
        tok_.kind = Token::Punct;
        tok_.text = std::string(1, c);
        bump();
    }

    void bump() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    const std::string& text_;
    size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    Token tok_;
};

// expr := term (('+'|'-') term)*
// term := factor (('*'|'/') factor)*
// factor := ['-'] atom ['^' ['-'] int]
// atom := number | x0..x3 | c | l | '(' expr ')'
class ExprParser {
public:
    explicit ExprParser(Lexer& lex) : lex_(lex) {}

    RationalFn parse() {
        RationalFn v = term();
        while (lex_.at_punct("+") || lex_.at_punct("-")) {
            bool plus = lex_.take().text == "+";
            RationalFn rhs = term();
            v = plus ? v + rhs : v - rhs;
        }
        return v;
    }

private:
    RationalFn term() {
        RationalFn v = factor();
        while (lex_.at_punct("*") || lex_.at_punct("/")) {
            bool mul = lex_.take().text == "*";
            RationalFn rhs = factor();
            if (!mul && rhs.is_zero()) throw DivisionByZeroFn();
            v = mul ? v * rhs : v / rhs;
        }
        return v;
    }

    RationalFn factor() {
        bool neg = false;
        while (lex_.at_punct("-")) {
            lex_.take();
            neg = !neg;
        }
        RationalFn v = atom();
        if (lex_.at_punct("^")) {
            lex_.take();
            bool eneg = false;
            if (lex_.at_punct("-")) {
                lex_.take();
                eneg = true;
            }
            Token t = lex_.take();
            if (t.kind != Token::Number) throw SyntaxError(t.line, t.col, "expected an exponent");
            int e = std::stoi(t.text);
            v = v.pow(eneg ? -e : e);
        }
        return neg ? -v : v;
    }

    RationalFn atom() {
        Token t = lex_.peek();
        if (t.kind == Token::Number) {
            lex_.take();
            return RationalFn(Rational(BigInt(t.text)));
        }
        if (t.kind == Token::Ident) {
            lex_.take();
            if (t.text == "x0") return RationalFn::variable(VX0);
            if (t.text == "x1") return RationalFn::variable(VX1);
            if (t.text == "x2") return RationalFn::variable(VX2);
            if (t.text == "x3") return RationalFn::variable(VX3);
            if (t.text == "c") return RationalFn::variable(VC);
            if (t.text == "l") return RationalFn::variable(VL);
            throw UnknownSymbol(t.text);
        }
        if (lex_.at_punct("(")) {
            lex_.take();
            RationalFn v = parse();
            lex_.expect_punct(")");
            return v;
        }
        throw SyntaxError(t.line, t.col, "expected an expression");
    }

    Lexer& lex_;
};

MultiPoly expr_to_poly(const RationalFn& f, const Token& at) {
    if (!f.den_factors().empty())
        throw SyntaxError(at.line, at.col,
                          "generator components must be polynomial in the coordinates");
    return f.num();
}

class SpecParser {
public:
    explicit SpecParser(const std::string& text) : lex_(text) {}

    SpecDocument parse() {
        SpecDocument doc;
        while (lex_.peek().kind != Token::End) {
            Token t = lex_.expect_ident();
            if (t.text == "algebra") {
                doc.order.emplace_back('a', int(doc.algebras.size()));
                doc.algebras.push_back(parse_algebra(doc));
            } else if (t.text == "geometry") {
                doc.order.emplace_back('g', int(doc.geometries.size()));
                doc.geometries.push_back(parse_geometry(doc));
            } else if (t.text == "contract") {
                doc.order.emplace_back('c', int(doc.contractions.size()));
                doc.contractions.push_back(parse_contract());
            } else if (t.text == "dual") {
                doc.order.emplace_back('d', int(doc.duals.size()));
                doc.duals.push_back(parse_dual());
            } else {
                throw SyntaxError(t.line, t.col,
                                  "expected 'algebra', 'geometry', 'contract' or 'dual'");
            }
        }
        return doc;
    }

private:
    void check_fresh(const SpecDocument& doc, const std::string& name) {
        for (const auto& a : doc.algebras)
            if (a.name == name) throw DuplicateName(name);
        for (const auto& g : doc.geometries)
            if (g.name == name) throw DuplicateName(name);
    }

    SpecSlot parse_slot(int count) {
        SpecSlot slot;
        if (lex_.at_ident("expr")) {
            slot.inline_expr = true;
            for (int i = 0; i < count; ++i) {
                lex_.expect_keyword("expr");
                lex_.expect_punct("(");
                VectorField f;
                for (int mu = 0; mu < 4; ++mu) {
                    Token at = lex_.peek();
                    ExprParser ep(lex_);
                    f.comp[mu] = expr_to_poly(ep.parse(), at);
                    if (mu < 3) lex_.expect_punct(",");
                }
                lex_.expect_punct(")");
                slot.fields.push_back(std::move(f));
            }
            return slot;
        }
        Token t = lex_.expect_ident();
        auto sym = gen_sym_from(t.text);
        if (!sym) throw UnknownSymbol(t.text);
        slot.sym = *sym;
        return slot;
    }

    SpecAlgebraDecl parse_algebra(const SpecDocument& doc) {
        SpecAlgebraDecl decl;
        decl.name = lex_.expect_ident().text;
        check_fresh(doc, decl.name);
        lex_.expect_punct("{");
        lex_.expect_keyword("time");
        decl.time = parse_slot(1);
        lex_.expect_punct(";");
        lex_.expect_keyword("trans");
        decl.trans = parse_slot(3);
        lex_.expect_punct(";");
        lex_.expect_keyword("boost");
        decl.boost = parse_slot(3);
        lex_.expect_punct(";");
        lex_.expect_keyword("rot");
        Token rot = lex_.expect_ident();
        if (rot.text != "J") throw UnknownSymbol(rot.text);
        if (lex_.at_punct(";")) lex_.take();
        lex_.expect_punct("}");
        return decl;
    }

    int parse_index() {
        lex_.expect_punct("[");
        Token t = lex_.take();
        if (t.kind != Token::Number) throw SyntaxError(t.line, t.col, "expected an index");
        int v = std::stoi(t.text);
        if (v < 0 || v > 3) throw SyntaxError(t.line, t.col, "index out of range 0..3");
        lex_.expect_punct("]");
        return v;
    }

    SpecGeometryDecl parse_geometry(const SpecDocument& doc) {
        SpecGeometryDecl decl;
        decl.name = lex_.expect_ident().text;
        check_fresh(doc, decl.name);
        lex_.expect_punct("{");
        bool have_algebra = false;
        while (!lex_.at_punct("}")) {
            Token t = lex_.expect_ident();
            if (t.text == "algebra") {
                decl.algebra = lex_.expect_ident().text;
                have_algebra = true;
            } else if (t.text == "g" || t.text == "h") {
                bool is_g = t.text == "g";
                int m = parse_index(), n = parse_index();
                lex_.expect_punct("=");
                ExprParser ep(lex_);
                RationalFn v = ep.parse();
                if (is_g) decl.g.at({m, n}) = decl.g.at({n, m}) = v;
                else decl.h.at({m, n}) = decl.h.at({n, m}) = v;
            } else if (t.text == "gamma") {
                int l = parse_index(), m = parse_index(), n = parse_index();
                lex_.expect_punct("=");
                ExprParser ep(lex_);
                RationalFn v = ep.parse();
                decl.conn.gamma[l][m][n] = decl.conn.gamma[l][n][m] = v;
            } else if (t.text == "domain") {
                ExprParser ep(lex_);
                RationalFn v = ep.parse();
                int sign;
                if (lex_.at_punct(">")) sign = 1;
                else if (lex_.at_punct("<")) sign = -1;
                else lex_.fail("expected '>' or '<'");
                lex_.take();
                Token z = lex_.take();
                if (z.kind != Token::Number || z.text != "0")
                    throw SyntaxError(z.line, z.col, "expected 0");
                decl.domain.push_back({v, sign});
            } else {
                throw SyntaxError(t.line, t.col, "expected 'algebra', 'g', 'h', 'gamma' or 'domain'");
            }
            lex_.expect_punct(";");
        }
        lex_.expect_punct("}");
        if (!have_algebra) lex_.fail("geometry declaration needs an 'algebra' entry");
        return decl;
    }

    SlotScale parse_scale_value() {
        SlotScale s;
        if (lex_.at_punct("-")) {
            lex_.take();
            s.coeff = Rational(-1);
        }
        Token t = lex_.take();
        if (t.kind == Token::Number) {
            s.coeff = s.coeff * Rational(BigInt(t.text));
            return s;
        }
        if (t.kind == Token::Ident && t.text == "eps") {
            s.order = 1;
            if (lex_.at_punct("^")) {
                lex_.take();
                int sign = 1;
                if (lex_.at_punct("-")) {
                    lex_.take();
                    sign = -1;
                }
                Token e = lex_.take();
                if (e.kind != Token::Number)
                    throw SyntaxError(e.line, e.col, "expected an exponent");
                s.order = sign * std::stoi(e.text);
            }
            return s;
        }
        throw SyntaxError(t.line, t.col, "expected a scale (1, eps^k, ...)");
    }

    SpecContractDecl parse_contract() {
        SpecContractDecl decl;
        decl.src = lex_.expect_ident().text;
        lex_.expect_punct("->");
        decl.dst = lex_.expect_ident().text;
        lex_.expect_punct("{");
        while (!lex_.at_punct("}")) {
            Token t = lex_.expect_ident();
            if (t.text == "rule") {
                Token r = lex_.expect_ident();
                auto rule = rule_from(r.text);
                if (!rule) throw UnknownSymbol(r.text);
                decl.rule = *rule;
            } else if (t.text == "scale") {
                Token slot = lex_.expect_ident();
                if (slot.text != "t" && slot.text != "p" && slot.text != "k" &&
                    slot.text != "g" && slot.text != "h" && slot.text != "gamma")
                    throw SyntaxError(slot.line, slot.col, "expected t, p, k, g, h or gamma");
                lex_.expect_punct("=");
                decl.scales[slot.text] = parse_scale_value();
            } else if (t.text == "expect") {
                Token e = lex_.expect_ident();
                if (e.text == "contracts") decl.expect_contract = true;
                else if (e.text == "blocked") decl.expect_contract = false;
                else throw SyntaxError(e.line, e.col, "expected 'contracts' or 'blocked'");
            } else if (t.text == "pre") {
                Token p = lex_.expect_ident();
                if (p.text == "theta") decl.pre = InvolutionKind::TimeReversal;
                else if (p.text == "pi") decl.pre = InvolutionKind::Parity;
                else if (p.text == "thetapi") decl.pre = InvolutionKind::Composite;
                else throw SyntaxError(p.line, p.col, "expected 'theta', 'pi' or 'thetapi'");
            } else {
                throw SyntaxError(t.line, t.col, "expected 'rule', 'scale', 'expect' or 'pre'");
            }
            lex_.expect_punct(";");
        }
        lex_.expect_punct("}");
        return decl;
    }

    SpecDualDecl parse_dual() {
        SpecDualDecl decl;
        decl.left = lex_.expect_ident().text;
        lex_.expect_punct("<->");
        decl.right = lex_.expect_ident().text;
        while (lex_.at_ident("sign")) {
            lex_.take();
            Token which = lex_.expect_ident();
            lex_.expect_punct("=");
            bool neg = false;
            if (lex_.at_punct("-")) {
                lex_.take();
                neg = true;
            }
            Token v = lex_.take();
            if (v.kind != Token::Number || v.text != "1")
                throw SyntaxError(v.line, v.col, "expected 1 or -1");
            int sign = neg ? -1 : 1;
            if (which.text == "g") decl.sign_g = sign;
            else if (which.text == "h") decl.sign_h = sign;
            else throw SyntaxError(which.line, which.col, "expected 'g' or 'h'");
        }
        lex_.expect_punct(";");
        return decl;
    }

    Lexer lex_;
};

std::string scale_str(const SlotScale& s) {
    std::string out;
    if (s.coeff == Rational(-1)) out += "-";
    else if (s.coeff != Rational(1)) out += s.coeff.str() + "*";
    if (s.order == 0) out += (s.coeff == Rational(1) || s.coeff == Rational(-1)) ? "1" : "";
    else if (s.order == 1) out += "eps";
    else out += "eps^" + std::to_string(s.order);
    return out;
}

}  // namespace

SpecDocument parse_spec(const std::string& text) {
    SpecParser p(text);
    return p.parse();
}

RationalFn parse_expression(const std::string& text) {
    Lexer lex(text);
    ExprParser ep(lex);
    RationalFn v = ep.parse();
    if (lex.peek().kind != Token::End)
        throw SyntaxError(lex.peek().line, lex.peek().col, "trailing input after expression");
    return v;
}

std::string print_spec(const SpecDocument& doc) {
    std::ostringstream out;
    auto emit_slot = [&](const SpecSlot& slot) {
        if (!slot.inline_expr) {
            out << gen_sym_name(slot.sym);
            return;
        }
        bool first = true;
        for (const auto& f : slot.fields) {
            if (!first) out << " ";
            first = false;
            out << "expr(";
            for (int mu = 0; mu < 4; ++mu) {
                if (mu) out << ", ";
                out << f.comp[mu].str();
            }
            out << ")";
        }
    };
    for (const auto& [kind, idx] : doc.order) {
        if (kind == 'a') {
            const auto& a = doc.algebras[idx];
            out << "algebra " << a.name << " { time ";
            emit_slot(a.time);
            out << "; trans ";
            emit_slot(a.trans);
            out << "; boost ";
            emit_slot(a.boost);
            out << "; rot J }\n";
        } else if (kind == 'g') {
            const auto& g = doc.geometries[idx];
            out << "geometry " << g.name << " {\n  algebra " << g.algebra << ";\n";
            for (int m = 0; m < 4; ++m)
                for (int n = m; n < 4; ++n)
                    if (!g.g.at({m, n}).is_zero())
                        out << "  g[" << m << "][" << n << "] = " << g.g.at({m, n}).str()
                            << ";\n";
            for (int m = 0; m < 4; ++m)
                for (int n = m; n < 4; ++n)
                    if (!g.h.at({m, n}).is_zero())
                        out << "  h[" << m << "][" << n << "] = " << g.h.at({m, n}).str()
                            << ";\n";
            for (int l = 0; l < 4; ++l)
                for (int m = 0; m < 4; ++m)
                    for (int n = m; n < 4; ++n)
                        if (!g.conn.gamma[l][m][n].is_zero())
                            out << "  gamma[" << l << "][" << m << "][" << n
                                << "] = " << g.conn.gamma[l][m][n].str() << ";\n";
            for (const auto& d : g.domain)
                out << "  domain " << d.fn.str() << (d.sign > 0 ? " > 0" : " < 0") << ";\n";
            out << "}\n";
        } else if (kind == 'c') {
            const auto& c = doc.contractions[idx];
            out << "contract " << c.src << " -> " << c.dst << " { rule "
                << rule_info(c.rule).name << "; ";
            if (c.pre == InvolutionKind::Parity) out << "pre pi; ";
            else if (c.pre == InvolutionKind::TimeReversal) out << "pre theta; ";
            else if (c.pre == InvolutionKind::Composite) out << "pre thetapi; ";
            for (const auto& [slot, scale] : c.scales)
                out << "scale " << slot << " = " << scale_str(scale) << "; ";
            out << "expect " << (c.expect_contract ? "contracts" : "blocked") << "; }\n";
        } else {
            const auto& d = doc.duals[idx];
            out << "dual " << d.left << " <-> " << d.right;
            if (d.sign_g < 0) out << " sign g = -1";
            if (d.sign_h < 0) out << " sign h = -1";
            out << ";\n";
        }
    }
    return out.str();
}

AlgebraPresentation realize_algebra(const SpecAlgebraDecl& decl) {
    AlgebraPresentation alg;
    alg.name = decl.name;
    alg.display = decl.name;
    auto slot_field = [&](const SpecSlot& slot, int blk, int idx) -> VectorField {
        if (slot.inline_expr) return slot.fields[blk == 0 ? 0 : idx - 1];
        return build_generator(slot.sym, idx);
    };
    alg.slots = {SlotSpec{decl.time.inline_expr ? GenSym::H : decl.time.sym, 1},
                 SlotSpec{decl.trans.inline_expr ? GenSym::P : decl.trans.sym, 1},
                 SlotSpec{decl.boost.inline_expr ? GenSym::K : decl.boost.sym, 1},
                 SlotSpec{GenSym::J, 1}};
    alg.basis[0] = slot_field(decl.time, 0, 0);
    for (int i = 1; i <= 3; ++i) {
        alg.basis[i] = slot_field(decl.trans, 1, i);
        alg.basis[3 + i] = slot_field(decl.boost, 2, i);
        alg.basis[6 + i] = build_generator(GenSym::J, i);
    }
    return alg;
}

}  // namespace kin
