//
// Copyright (c) 2026 The lcasp authors
//
// This file is part of lcasp.
//
// Permission is hereby granted, free of charge, to any person obtaining a copy
// of this software and associated documentation files (the "Software"), to
// deal in the Software without restriction, including without limitation the
// rights to use, copy, modify, merge, publish, distribute, sublicense, and/or
// sell copies of the Software, and to permit persons to whom the Software is
// furnished to do so, subject to the following conditions:
//
// The above copyright notice and this permission notice shall be included in
// all copies or substantial portions of the Software.
//
// THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
// IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
// FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
// AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
// LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING
// FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS
// IN THE SOFTWARE.
//
#include <lcasp/syntax.hpp>

#include <cctype>

namespace lcasp::syntax {

namespace {

enum class Tok {
    end, ident, variable, integer, string,
    lparen, rparen, lbrace, rbrace, comma, semi, colon, if_, dot, dotdot,
    star, plus, minus, slash, lt, le, gt, ge, eq, ne, amp, hash, bar
};

struct Token {
    Tok kind = Tok::end;
    std::string text;
    unsigned line = 1;
    unsigned column = 1;
};

char const *describe(Tok kind) {
    switch (kind) {
        case Tok::end: return "end of input";
        case Tok::ident: return "identifier";
        case Tok::variable: return "variable";
        case Tok::integer: return "integer";
        case Tok::string: return "string";
        case Tok::lparen: return "'('";
        case Tok::rparen: return "')'";
        case Tok::lbrace: return "'{'";
        case Tok::rbrace: return "'}'";
        case Tok::comma: return "','";
        case Tok::semi: return "';'";
        case Tok::colon: return "':'";
        case Tok::if_: return "':-'";
        case Tok::dot: return "'.'";
        case Tok::dotdot: return "'..'";
        case Tok::star: return "'*'";
        case Tok::plus: return "'+'";
        case Tok::minus: return "'-'";
        case Tok::slash: return "'/'";
        case Tok::lt: return "'<'";
        case Tok::le: return "'<='";
        case Tok::gt: return "'>'";
        case Tok::ge: return "'>='";
        case Tok::eq: return "'='";
        case Tok::ne: return "'!='";
        case Tok::amp: return "'&'";
        case Tok::hash: return "'#'";
        case Tok::bar: return "'|'";
    }
    return "?";
}

class Lexer {
public:
    explicit Lexer(std::string_view text)
        : text_(text) {}

    Token next() {
        skip();
        Token tok;
        tok.line = line_;
        tok.column = column_;
        if (pos_ >= text_.size()) { return tok; }
        char c = text_[pos_];
        auto single = [&](Tok kind) {
            tok.kind = kind;
            tok.text = std::string(1, c);
            advance();
            return tok;
        };
        auto two = [&](Tok kind, char const *txt) {
            tok.kind = kind;
            tok.text = txt;
            advance();
            advance();
            return tok;
        };
        char n = pos_ + 1 < text_.size() ? text_[pos_ + 1] : '\0';
        if (std::islower(static_cast<unsigned char>(c)) || (c == '_' && std::isalnum(static_cast<unsigned char>(n)))) {
            tok.kind = c == '_' && std::isupper(static_cast<unsigned char>(n)) ? Tok::variable : Tok::ident;
            tok.text = word();
            return tok;
        }
        if (std::isupper(static_cast<unsigned char>(c))) {
            tok.kind = Tok::variable;
            tok.text = word();
            return tok;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            tok.kind = Tok::integer;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                tok.text.push_back(text_[pos_]);
                advance();
            }
            return tok;
        }
        switch (c) {
            case '"': return string(tok);
            case '(': return single(Tok::lparen);
            case ')': return single(Tok::rparen);
            case '{': return single(Tok::lbrace);
            case '}': return single(Tok::rbrace);
            case ',': return single(Tok::comma);
            case ';': return single(Tok::semi);
            case ':': return n == '-' ? two(Tok::if_, ":-") : single(Tok::colon);
            case '.': return n == '.' ? two(Tok::dotdot, "..") : single(Tok::dot);
            case '*': return single(Tok::star);
            case '+': return single(Tok::plus);
            case '-': return single(Tok::minus);
            case '/': return single(Tok::slash);
            case '<': return n == '=' ? two(Tok::le, "<=") : single(Tok::lt);
            case '>': return n == '=' ? two(Tok::ge, ">=") : single(Tok::gt);
            case '=': return n == '=' ? two(Tok::eq, "==") : single(Tok::eq);
            case '!':
                if (n == '=') { return two(Tok::ne, "!="); }
                break;
            case '&': return single(Tok::amp);
            case '#': return single(Tok::hash);
            case '|': return single(Tok::bar);
            default: break;
        }
        throw ParseError(line_, column_, std::string("unexpected character '") + c + "'");
    }

private:
    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        }
        else {
            ++column_;
        }
        ++pos_;
    }

    void skip() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            }
            else if (c == '%' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '*') {
                unsigned line = line_;
                unsigned column = column_;
                advance();
                advance();
                while (pos_ < text_.size() && !(text_[pos_] == '*' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '%')) {
                    advance();
                }
                if (pos_ >= text_.size()) { throw ParseError(line, column, "unterminated block comment"); }
                advance();
                advance();
            }
            else if (c == '%') {
                while (pos_ < text_.size() && text_[pos_] != '\n') { advance(); }
            }
            else {
                break;
            }
        }
    }

    std::string word() {
        std::string res;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' || text_[pos_] == '\'')) {
            res.push_back(text_[pos_]);
            advance();
        }
        return res;
    }

    Token string(Token tok) {
        tok.kind = Tok::string;
        advance();
        while (true) {
            if (pos_ >= text_.size() || text_[pos_] == '\n') {
                throw ParseError(tok.line, tok.column, "unterminated string");
            }
            char c = text_[pos_];
            advance();
            if (c == '"') { break; }
            if (c == '\\' && pos_ < text_.size()) {
                char e = text_[pos_];
                advance();
                tok.text.push_back(e == 'n' ? '\n' : e);
                continue;
            }
            tok.text.push_back(c);
        }
        return tok;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    unsigned line_ = 1;
    unsigned column_ = 1;
};

std::optional<Rational> numeric_value(Term const &term) {
    switch (term.kind) {
        case Term::Kind::integer: return Rational(term.value);
        case Term::Kind::string:
            try {
                return parse_decimal(term.name);
            }
            catch (std::invalid_argument const &) {
                return std::nullopt;
            }
        case Term::Kind::unary_minus:
            if (auto v = numeric_value(term.args[0])) { return Rational(-*v); }
            return std::nullopt;
        default: return std::nullopt;
    }
}

class Parser {
public:
    explicit Parser(std::string_view text)
        : lexer_(text) {
        tok_ = lexer_.next();
        peek_ = lexer_.next();
    }

    Program program() {
        Program prg;
        while (tok_.kind != Tok::end) { prg.statements.push_back(statement()); }
        return prg;
    }

    std::variant<Atom, LcAtom> single_atom() {
        std::variant<Atom, LcAtom> res;
        if (accept(Tok::amp)) { res = lc_atom(); }
        else { res = atom(); }
        expect(Tok::end);
        return res;
    }

private:
    // {{{2 token helpers

    void shift() {
        tok_ = peek_;
        peek_ = lexer_.next();
    }

    bool accept(Tok kind) {
        if (tok_.kind == kind) {
            shift();
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(std::vector<std::string> expected) const {
        std::string found = tok_.kind == Tok::end ? "end of input" : "'" + tok_.text + "'";
        throw ParseError(tok_.line, tok_.column, "unexpected " + found, std::move(expected));
    }

    [[noreturn]] void error(Token const &at, std::string message) const {
        throw ParseError(at.line, at.column, std::move(message));
    }

    Token expect(Tok kind) {
        if (tok_.kind != kind) { fail({describe(kind)}); }
        Token res = tok_;
        shift();
        return res;
    }

    static bool is_relation(Tok kind) {
        return kind == Tok::lt || kind == Tok::le || kind == Tok::gt || kind == Tok::ge || kind == Tok::eq ||
               kind == Tok::ne;
    }

    Relation relation() {
        Relation rel = Relation::eq;
        switch (tok_.kind) {
            case Tok::lt: rel = Relation::lt; break;
            case Tok::le: rel = Relation::le; break;
            case Tok::gt: rel = Relation::gt; break;
            case Tok::ge: rel = Relation::ge; break;
            case Tok::eq: rel = Relation::eq; break;
            case Tok::ne: rel = Relation::ne; break;
            default: fail({"'<='", "'<'", "'>='", "'>'", "'='", "'!='"});
        }
        shift();
        return rel;
    }

    bool starts_term() const {
        switch (tok_.kind) {
            case Tok::ident: return tok_.text != "not";
            case Tok::variable:
            case Tok::integer:
            case Tok::string:
            case Tok::minus:
            case Tok::lparen: return true;
            default: return false;
        }
    }

    // {{{2 terms

    Term term() {
        Term lhs = product();
        while (tok_.kind == Tok::plus || tok_.kind == Tok::minus) {
            char op = tok_.kind == Tok::plus ? '+' : '-';
            shift();
            lhs = Term::binary(op, std::move(lhs), product());
        }
        return lhs;
    }

    Term product() {
        Term lhs = unary();
        while (tok_.kind == Tok::star || tok_.kind == Tok::slash) {
            char op = tok_.kind == Tok::star ? '*' : '/';
            shift();
            lhs = Term::binary(op, std::move(lhs), unary());
        }
        return lhs;
    }

    Term unary() {
        if (accept(Tok::minus)) {
            if (tok_.kind == Tok::integer) {
                Integer value(tok_.text, 10);
                shift();
                return Term::integer(-value);
            }
            return Term::negate(unary());
        }
        return primary();
    }

    Term primary() {
        switch (tok_.kind) {
            case Tok::integer: {
                Integer value(tok_.text, 10);
                shift();
                return Term::integer(value);
            }
            case Tok::string: {
                std::string text = tok_.text;
                shift();
                return Term::string(std::move(text));
            }
            case Tok::variable: {
                std::string name = tok_.text;
                shift();
                return Term::variable(std::move(name));
            }
            case Tok::ident: {
                if (tok_.text == "not") { fail({"term"}); }
                std::string name = tok_.text;
                shift();
                if (accept(Tok::lparen)) { return Term::function(std::move(name), arguments()); }
                return Term::symbol(std::move(name));
            }
            case Tok::lparen: {
                shift();
                Term res = term();
                expect(Tok::rparen);
                return res;
            }
            default: fail({"integer", "string", "variable", "identifier", "'('", "'-'"});
        }
    }

    std::vector<Term> arguments() {
        std::vector<Term> args;
        args.push_back(term());
        while (accept(Tok::comma)) { args.push_back(term()); }
        expect(Tok::rparen);
        return args;
    }

    // {{{2 atoms and literals

    Atom atom() {
        if (tok_.kind != Tok::ident || tok_.text == "not") { fail({"identifier"}); }
        Atom res;
        res.predicate = tok_.text;
        shift();
        if (accept(Tok::lparen)) { res.args = arguments(); }
        return res;
    }

    Atom term_to_atom(Term term, Token const &at) {
        if (term.kind == Term::Kind::symbol) { return Atom{term.name, {}}; }
        if (term.kind == Term::Kind::function) { return Atom{term.name, std::move(term.args)}; }
        error(at, "expected an atom but found term '" + to_string(term) + "'");
    }

    ConditionLiteral condition_literal() {
        if (tok_.kind == Tok::ident && tok_.text == "not") {
            shift();
            return AtomLiteral{true, atom()};
        }
        Token at = tok_;
        Term lhs = term();
        if (is_relation(tok_.kind)) {
            Relation rel = relation();
            return Comparison{rel, std::move(lhs), term()};
        }
        return AtomLiteral{false, term_to_atom(std::move(lhs), at)};
    }

    Condition condition() {
        Condition cond;
        cond.push_back(condition_literal());
        while (accept(Tok::comma)) { cond.push_back(condition_literal()); }
        return cond;
    }

    static void flatten_product(Term term, std::vector<Term> &out) {
        if (term.kind == Term::Kind::binary && term.name == "*") {
            Term rhs = std::move(term.args[1]);
            flatten_product(std::move(term.args[0]), out);
            out.push_back(std::move(rhs));
            return;
        }
        out.push_back(std::move(term));
    }

    LcAtom lc_atom() {
        Token at = tok_;
        if (tok_.kind != Tok::ident) { fail({"sum", "diff", "dom", "minimize", "maximize"}); }
        LcAtom res;
        if (tok_.text == "sum") { res.kind = LcKind::sum; }
        else if (tok_.text == "diff") { res.kind = LcKind::diff; }
        else if (tok_.text == "dom") { res.kind = LcKind::dom; }
        else if (tok_.text == "minimize") { res.kind = LcKind::minimize; }
        else if (tok_.text == "maximize") { res.kind = LcKind::maximize; }
        else { error(at, "unknown theory atom '&" + tok_.text + "'"); }
        shift();
        expect(Tok::lbrace);
        switch (res.kind) {
            case LcKind::diff: {
                Token elem_at = tok_;
                Term diff = term();
                if (diff.kind != Term::Kind::binary || diff.name != "-") {
                    error(elem_at, "&diff expects a difference 'x-y'");
                }
                res.elements.push_back(LcElement{{std::move(diff.args[0])}, {}});
                res.elements.push_back(LcElement{{std::move(diff.args[1])}, {}});
                expect(Tok::rbrace);
                break;
            }
            case LcKind::dom: {
                res.lower = term();
                expect(Tok::dotdot);
                res.upper = term();
                expect(Tok::rbrace);
                expect(Tok::eq);
                res.elements.push_back(LcElement{{term()}, {}});
                auto lb = numeric_value(res.lower);
                auto ub = numeric_value(res.upper);
                if (lb && ub && *lb > *ub) { error(at, "&dom with lower bound greater than upper bound"); }
                break;
            }
            default: {
                if (tok_.kind != Tok::rbrace) {
                    do {
                        LcElement elem;
                        flatten_product(term(), elem.factors);
                        if (accept(Tok::colon)) { elem.condition = condition(); }
                        res.elements.push_back(std::move(elem));
                    } while (accept(Tok::semi));
                }
                expect(Tok::rbrace);
                break;
            }
        }
        if (res.has_relation()) {
            Token rel_at = tok_;
            res.relation = relation();
            if (res.kind == LcKind::diff && (res.relation == Relation::eq || res.relation == Relation::ne)) {
                error(rel_at, "&diff supports only <=, <, >= and >");
            }
            res.rhs = term();
        }
        return res;
    }

    Aggregate aggregate(std::optional<Term> lower, bool choice) {
        Aggregate agg;
        agg.lower = std::move(lower);
        Token at = tok_;
        expect(Tok::lbrace);
        if (tok_.kind != Tok::rbrace) {
            do {
                AggregateElement elem;
                Token lit_at = tok_;
                if (tok_.kind == Tok::ident && tok_.text == "not") {
                    if (choice) { error(lit_at, "choice elements must be atoms"); }
                    shift();
                    elem.literal.negated = true;
                }
                elem.literal.atom = atom();
                if (accept(Tok::colon)) { elem.condition = condition(); }
                agg.elements.push_back(std::move(elem));
            } while (accept(Tok::semi));
        }
        expect(Tok::rbrace);
        if (starts_term()) { agg.upper = term(); }
        if (agg.lower && agg.lower->kind == Term::Kind::integer && agg.lower->value < 0) {
            error(at, "negative lower bound");
        }
        if (agg.lower && agg.upper && agg.lower->kind == Term::Kind::integer && agg.upper->kind == Term::Kind::integer &&
            agg.lower->value > agg.upper->value) {
            error(at, "lower bound exceeds upper bound");
        }
        return agg;
    }

    BodyLiteral body_literal() {
        Token at = tok_;
        if (tok_.kind == Tok::ident && tok_.text == "not") {
            shift();
            if (accept(Tok::amp)) { return LcLiteral{true, checked_body_lc(lc_atom(), at)}; }
            return AtomLiteral{true, atom()};
        }
        if (accept(Tok::amp)) { return LcLiteral{false, checked_body_lc(lc_atom(), at)}; }
        if (tok_.kind == Tok::lbrace) { return aggregate(std::nullopt, false); }
        Term lhs = term();
        if (tok_.kind == Tok::lbrace) { return aggregate(std::move(lhs), false); }
        if (is_relation(tok_.kind)) {
            Relation rel = relation();
            return Comparison{rel, std::move(lhs), term()};
        }
        return AtomLiteral{false, term_to_atom(std::move(lhs), at)};
    }

    LcAtom checked_body_lc(LcAtom atom, Token const &at) {
        if (!atom.has_relation()) {
            error(at, std::string("&") + to_string(atom.kind) + " may only occur in rule heads");
        }
        return atom;
    }

    std::vector<BodyLiteral> body() {
        std::vector<BodyLiteral> res;
        res.push_back(body_literal());
        while (accept(Tok::comma) || accept(Tok::semi)) { res.push_back(body_literal()); }
        return res;
    }

    // {{{2 statements

    Statement statement() {
        if (tok_.kind == Tok::hash) { return directive(); }
        Rule rule;
        if (accept(Tok::if_)) {
            rule.body = body();
            expect(Tok::dot);
            return rule;
        }
        Token at = tok_;
        if (accept(Tok::amp)) { rule.head = lc_atom(); }
        else if (tok_.kind == Tok::lbrace) { rule.head = aggregate(std::nullopt, true); }
        else {
            if (!starts_term()) { fail({"atom", "'&'", "'{'", "':-'", "'#'"}); }
            Term lhs = term();
            if (tok_.kind == Tok::lbrace) { rule.head = aggregate(std::move(lhs), true); }
            else { rule.head = term_to_atom(std::move(lhs), at); }
        }
        if (tok_.kind == Tok::semi || tok_.kind == Tok::bar) {
            error(tok_, "disjunctive rule heads are not supported");
        }
        if (accept(Tok::if_)) { rule.body = body(); }
        expect(Tok::dot);
        return rule;
    }

    Statement directive() {
        expect(Tok::hash);
        Token at = tok_;
        if (tok_.kind != Tok::ident) { fail({"program", "external", "show", "real", "integer"}); }
        std::string name = tok_.text;
        shift();
        if (name == "program") {
            ProgramDirective dir;
            dir.name = expect(Tok::ident).text;
            if (accept(Tok::lparen)) {
                dir.params.push_back(expect(Tok::ident).text);
                while (accept(Tok::comma)) { dir.params.push_back(expect(Tok::ident).text); }
                expect(Tok::rparen);
            }
            expect(Tok::dot);
            return dir;
        }
        if (name == "external") {
            ExternalDirective dir;
            dir.atom = atom();
            if (accept(Tok::colon)) { dir.body = body(); }
            expect(Tok::dot);
            return dir;
        }
        if (name == "show") {
            ShowDirective dir;
            dir.predicate = expect(Tok::ident).text;
            expect(Tok::slash);
            dir.arity = static_cast<unsigned>(std::stoul(expect(Tok::integer).text));
            expect(Tok::dot);
            return dir;
        }
        if (name == "real" || name == "integer") {
            DomainDirective dir;
            dir.real = name == "real";
            dir.variables.push_back(term());
            while (accept(Tok::comma)) { dir.variables.push_back(term()); }
            expect(Tok::dot);
            return dir;
        }
        throw ParseError(at.line, at.column, "unknown directive '#" + name + "'",
                         {"program", "external", "show", "real", "integer"});
    }

    Lexer lexer_;
    Token tok_;
    Token peek_;
};

} // namespace

Program parse_program(std::string_view text) { return Parser(text).program(); }

std::variant<Atom, LcAtom> parse_atom(std::string_view text) { return Parser(text).single_atom(); }

} // namespace lcasp::syntax
