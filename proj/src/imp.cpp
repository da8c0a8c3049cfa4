#include "abslog/imp.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>

namespace abslog {

namespace {

// ---------------------------------------------------------------- lexer

enum class Tok { Ident, Int, Kw, Punct, End };

struct Token {
    Tok kind = Tok::End;
    std::string text;
    int64_t value = 0;
    int line = 1;
    int col = 1;
};

const std::set<std::string>& keywords() {
    static const std::set<std::string> kws = {
        "Module", "def",  "var",  "if",   "then",  "else", "skip",
        "NULL",   "print", "malloc", "free", "load", "store", "cmp",
    };
    return kws;
}

std::vector<Token> lex(const std::string& src) {
    std::vector<Token> out;
    int line = 1, col = 1;
    size_t i = 0;
    auto advance = [&](size_t n) {
        for (size_t j = 0; j < n; ++j) {
            if (i + j < src.size() && src[i + j] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        i += n;
    };
    while (i < src.size()) {
        char c = src[i];
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            advance(1);
            continue;
        }
        if (c == '/' && i + 1 < src.size() && src[i + 1] == '/') {
            while (i < src.size() && src[i] != '\n') advance(1);
            continue;
        }
        Token t;
        t.line = line;
        t.col = col;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
            t.kind = Tok::Int;
            t.text = src.substr(i, j - i);
            try {
                t.value = std::stoll(t.text);
            } catch (const std::out_of_range&) {
                throw ImpParseError("integer literal out of range", line, col);
            }
            out.push_back(t);
            advance(j - i);
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t j = i;
            while (j < src.size() &&
                   (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_'))
                ++j;
            t.text = src.substr(i, j - i);
            t.kind = keywords().count(t.text) ? Tok::Kw : Tok::Ident;
            out.push_back(t);
            advance(j - i);
            continue;
        }
        auto two = src.substr(i, 2);
        if (two == ":=" || two == "==") {
            t.kind = Tok::Punct;
            t.text = two;
            out.push_back(t);
            advance(2);
            continue;
        }
        static const std::string singles = "[](){},;.?&:=<+-*/%";
        if (singles.find(c) != std::string::npos) {
            t.kind = Tok::Punct;
            t.text = std::string(1, c);
            out.push_back(t);
            advance(1);
            continue;
        }
        throw ImpParseError(std::string("unexpected character '") + c + "'", line, col);
    }
    Token end;
    end.kind = Tok::End;
    end.line = line;
    end.col = col;
    out.push_back(end);
    return out;
}

// ---------------------------------------------------------------- parser

struct Parser {
    std::vector<Token> toks;
    size_t pos = 0;

    const Token& peek(size_t ahead = 0) const {
        size_t p = pos + ahead;
        if (p >= toks.size()) p = toks.size() - 1;
        return toks[p];
    }
    const Token& cur() const { return peek(0); }

    [[noreturn]] void fail(const std::string& what) const {
        throw ImpParseError(what, cur().line, cur().col);
    }

    bool is_punct(const std::string& p, size_t ahead = 0) const {
        return peek(ahead).kind == Tok::Punct && peek(ahead).text == p;
    }
    bool is_kw(const std::string& k, size_t ahead = 0) const {
        return peek(ahead).kind == Tok::Kw && peek(ahead).text == k;
    }

    Token take() { return toks[pos >= toks.size() ? toks.size() - 1 : pos++]; }

    void expect_punct(const std::string& p) {
        if (!is_punct(p)) fail("expected '" + p + "'");
        ++pos;
    }
    void expect_kw(const std::string& k) {
        if (!is_kw(k)) fail("expected '" + k + "'");
        ++pos;
    }
    std::string expect_ident(const std::string& what) {
        if (cur().kind != Tok::Ident) fail("expected " + what);
        return take().text;
    }

    // ident ('.' segment)*; segments after a dot may spell a keyword, so
    // module functions can be named like the builtins (Mem.store).
    std::string dotted_name() {
        std::string n = expect_ident("name");
        while (is_punct(".")) {
            ++pos;
            if (cur().kind != Tok::Ident && cur().kind != Tok::Kw)
                fail("expected name after '.'");
            n += ".";
            n += take().text;
        }
        return n;
    }

    ImpExprPtr parse_primary() {
        if (cur().kind == Tok::Int) return ImpExpr::mkint(take().value);
        if (is_kw("NULL")) {
            ++pos;
            return ImpExpr::mknull();
        }
        if (cur().kind == Tok::Ident) return ImpExpr::mkvar(take().text);
        if (is_punct("(")) {
            ++pos;
            auto e = parse_expr();
            expect_punct(")");
            return e;
        }
        fail("expected expression");
    }

    ImpExprPtr parse_mul() {
        auto e = parse_primary();
        while (is_punct("*") || is_punct("/") || is_punct("%")) {
            auto op = take().text == "*"   ? ImpExpr::Op::Mul
                      : toks[pos - 1].text == "/" ? ImpExpr::Op::Div
                                                  : ImpExpr::Op::Mod;
            e = ImpExpr::mkbin(op, e, parse_primary());
        }
        return e;
    }

    ImpExprPtr parse_add() {
        auto e = parse_mul();
        while (is_punct("+") || is_punct("-")) {
            auto op = take().text == "+" ? ImpExpr::Op::Add : ImpExpr::Op::Sub;
            e = ImpExpr::mkbin(op, e, parse_mul());
        }
        return e;
    }

    ImpExprPtr parse_expr() {
        auto e = parse_add();
        while (is_punct("==") || is_punct("<")) {
            auto op = take().text == "==" ? ImpExpr::Op::Eq : ImpExpr::Op::Lt;
            e = ImpExpr::mkbin(op, e, parse_add());
        }
        return e;
    }

    std::vector<ImpExprPtr> parse_args() {
        expect_punct("(");
        std::vector<ImpExprPtr> args;
        if (!is_punct(")")) {
            args.push_back(parse_expr());
            while (is_punct(",")) {
                ++pos;
                args.push_back(parse_expr());
            }
        }
        expect_punct(")");
        return args;
    }

    // The right-hand side of "var x :=" / "x =": call forms plus, for the
    // declaring form only, plain expressions.
    ImpStmtPtr parse_rhs(const std::string& x, bool decl, bool allow_expr) {
        if (is_punct("&")) {
            ++pos;
            return ImpStmt::mkaddrof(x, dotted_name(), decl);
        }
        if (is_kw("malloc")) {
            ++pos;
            expect_punct("(");
            auto n = parse_expr();
            expect_punct(")");
            return ImpStmt::mkmalloc(x, n, decl);
        }
        if (is_kw("load")) {
            ++pos;
            expect_punct("(");
            auto p = parse_expr();
            expect_punct(")");
            return ImpStmt::mkload(x, p, decl);
        }
        if (is_kw("cmp")) {
            ++pos;
            expect_punct("(");
            auto a = parse_expr();
            expect_punct(",");
            auto b = parse_expr();
            expect_punct(")");
            return ImpStmt::mkcmp(x, a, b, decl);
        }
        if (is_punct("(") && is_punct("*", 1)) {
            pos += 2;
            auto fp = parse_expr();
            expect_punct(")");
            auto args = parse_args();
            return ImpStmt::mkcall_ind(x, fp, args, decl);
        }
        if (cur().kind == Tok::Ident) {
            // Distinguish a call "f(...)" / "M.f(...)" from a plain
            // expression starting with a variable.
            size_t ahead = 1;
            while (is_punct(".", ahead) &&
                   (peek(ahead + 1).kind == Tok::Ident || peek(ahead + 1).kind == Tok::Kw))
                ahead += 2;
            bool call = is_punct("(", ahead);
            if (call) {
                std::string fn = dotted_name();
                auto args = parse_args();
                return ImpStmt::mkcall(x, fn, args, decl);
            }
        }
        if (!allow_expr) fail("expected a call, address-of, malloc, load or cmp");
        return ImpStmt::mkassign(x, parse_expr(), decl);
    }

    ImpStmtPtr parse_block();

    ImpStmtPtr parse_stmt() {
        if (is_kw("skip")) {
            ++pos;
            return ImpStmt::mkskip();
        }
        if (is_kw("var")) {
            ++pos;
            std::string x = expect_ident("variable name");
            expect_punct(":=");
            return parse_rhs(x, true, true);
        }
        if (is_kw("if")) {
            ++pos;
            expect_punct("(");
            auto c = parse_expr();
            expect_punct(")");
            expect_kw("then");
            auto t = parse_block();
            expect_kw("else");
            auto f = parse_block();
            return ImpStmt::mkif(c, t, f);
        }
        if (is_kw("print")) {
            ++pos;
            expect_punct("(");
            auto e = parse_expr();
            expect_punct(")");
            return ImpStmt::mkprint(e);
        }
        if (is_kw("free")) {
            ++pos;
            expect_punct("(");
            auto p = parse_expr();
            expect_punct(")");
            return ImpStmt::mkfree(p);
        }
        if (is_kw("store")) {
            ++pos;
            expect_punct("(");
            auto p = parse_expr();
            expect_punct(",");
            auto v = parse_expr();
            expect_punct(")");
            return ImpStmt::mkstore(p, v);
        }
        if (cur().kind == Tok::Ident) {
            if (is_punct(":=", 1)) {
                std::string x = take().text;
                ++pos;
                return ImpStmt::mkassign(x, parse_expr(), false);
            }
            if (is_punct("=", 1)) {
                std::string x = take().text;
                ++pos;
                return parse_rhs(x, false, false);
            }
        }
        fail("expected statement");
    }

    bool stmt_ahead() const {
        if (is_kw("skip") || is_kw("var") || is_kw("if") || is_kw("print") ||
            is_kw("free") || is_kw("store"))
            return true;
        if (cur().kind == Tok::Ident && (is_punct(":=", 1) || is_punct("=", 1)))
            return true;
        return false;
    }

    // body := stmt (';' stmt)* (';' expr)? | expr | stmt-list without return
    void parse_body(ImpFun& f) {
        std::vector<ImpStmtPtr> stmts;
        ImpExprPtr ret;
        for (;;) {
            if (is_kw("def") || cur().kind == Tok::End) break;
            if (stmt_ahead()) {
                stmts.push_back(parse_stmt());
            } else {
                ret = parse_expr();
                if (is_punct(";")) fail("return expression must end the body");
                break;
            }
            if (is_punct(";")) {
                ++pos;
                continue;
            }
            break;
        }
        ImpStmtPtr body;
        if (stmts.empty()) {
            body = ImpStmt::mkskip();
        } else {
            body = stmts.back();
            for (auto it = stmts.rbegin() + 1; it != stmts.rend(); ++it)
                body = ImpStmt::mkseq(*it, body);
        }
        f.body = body;
        f.ret = ret ? ret : ImpExpr::mkint(0);
    }

    ImpFun parse_fun() {
        expect_kw("def");
        ImpFun f;
        f.name = expect_ident("function name");
        expect_punct("(");
        if (is_punct("[")) {
            ++pos;
            f.bracketed = true;
            if (!is_punct("]")) {
                for (;;) {
                    ImpParam p;
                    p.name = expect_ident("parameter name");
                    if (is_punct(":")) {
                        ++pos;
                        p.annotated = true;
                        std::string ty = expect_ident("parameter type");
                        if (ty == "int64")
                            p.type = ImpType::Int64;
                        else if (ty == "ptr")
                            p.type = ImpType::Ptr;
                        else if (ty == "val")
                            p.type = ImpType::Val;
                        else
                            fail("unknown parameter type '" + ty + "'");
                    }
                    f.params.push_back(p);
                    if (is_punct(",")) {
                        ++pos;
                        continue;
                    }
                    break;
                }
            }
            expect_punct("]");
            expect_punct("?");
        } else if (!is_punct(")")) {
            for (;;) {
                ImpParam p;
                p.name = expect_ident("parameter name");
                f.params.push_back(p);
                if (is_punct(",")) {
                    ++pos;
                    continue;
                }
                break;
            }
        }
        expect_punct(")");
        expect_punct("=");
        parse_body(f);
        return f;
    }

    ImpModule parse() {
        ImpModule m;
        expect_punct("[");
        expect_kw("Module");
        m.name = expect_ident("module name");
        expect_punct("]");
        while (!(cur().kind == Tok::End)) m.funs.push_back(parse_fun());
        return m;
    }
};

ImpStmtPtr Parser::parse_block() {
    expect_punct("{");
    std::vector<ImpStmtPtr> stmts;
    stmts.push_back(parse_stmt());
    while (is_punct(";")) {
        ++pos;
        stmts.push_back(parse_stmt());
    }
    expect_punct("}");
    ImpStmtPtr body = stmts.back();
    for (auto it = stmts.rbegin() + 1; it != stmts.rend(); ++it)
        body = ImpStmt::mkseq(*it, body);
    return body;
}

// ------------------------------------------------------- static checking

void check_expr_vars(const ImpExprPtr& e, const std::set<std::string>& scope, int line,
                     int col);

void expr_vars_fail(const std::string& x, int line, int col) {
    throw ImpParseError("use of undeclared variable '" + x + "'", line, col);
}

void check_expr_vars(const ImpExprPtr& e, const std::set<std::string>& scope, int line,
                     int col) {
    if (!e) return;
    switch (e->kind) {
        case ImpExpr::Kind::Var:
            if (!scope.count(e->var)) expr_vars_fail(e->var, line, col);
            break;
        case ImpExpr::Kind::Binop:
            check_expr_vars(e->lhs, scope, line, col);
            check_expr_vars(e->rhs, scope, line, col);
            break;
        default:
            break;
    }
}

// Declarations are unique per function and hoist past branch joins; uses of
// a name before any declaration are rejected.
void check_stmt(const ImpStmtPtr& s, std::set<std::string>& scope,
                std::set<std::string>& declared, std::vector<std::string>& locals) {
    if (!s) return;
    auto declare = [&](const std::string& x) {
        if (declared.count(x) || scope.count(x))
            throw ImpParseError("redeclaration of '" + x + "'", 0, 0);
        declared.insert(x);
        scope.insert(x);
        locals.push_back(x);
    };
    auto need = [&](const std::string& x) {
        if (!scope.count(x))
            throw ImpParseError("assignment to undeclared variable '" + x + "'", 0, 0);
    };
    auto ck = [&](const ImpExprPtr& e) { check_expr_vars(e, scope, 0, 0); };
    switch (s->kind) {
        case ImpStmt::Kind::Skip:
            break;
        case ImpStmt::Kind::Assign:
            ck(s->e1);
            s->decl ? declare(s->target) : need(s->target);
            break;
        case ImpStmt::Kind::Seq:
            check_stmt(s->s1, scope, declared, locals);
            check_stmt(s->s2, scope, declared, locals);
            break;
        case ImpStmt::Kind::If:
            ck(s->e1);
            check_stmt(s->s1, scope, declared, locals);
            check_stmt(s->s2, scope, declared, locals);
            break;
        case ImpStmt::Kind::CallDirect:
            for (auto& a : s->args) ck(a);
            s->decl ? declare(s->target) : need(s->target);
            break;
        case ImpStmt::Kind::CallIndirect:
            ck(s->e1);
            for (auto& a : s->args) ck(a);
            s->decl ? declare(s->target) : need(s->target);
            break;
        case ImpStmt::Kind::AddrOf:
            s->decl ? declare(s->target) : need(s->target);
            break;
        case ImpStmt::Kind::Malloc:
        case ImpStmt::Kind::Load:
            ck(s->e1);
            s->decl ? declare(s->target) : need(s->target);
            break;
        case ImpStmt::Kind::Cmp:
            ck(s->e1);
            ck(s->e2);
            s->decl ? declare(s->target) : need(s->target);
            break;
        case ImpStmt::Kind::Free:
        case ImpStmt::Kind::Print:
            ck(s->e1);
            break;
        case ImpStmt::Kind::Store:
            ck(s->e1);
            ck(s->e2);
            break;
    }
}

void check_fun(ImpFun& f) {
    std::set<std::string> scope;
    for (auto& p : f.params) {
        if (scope.count(p.name))
            throw ImpParseError("duplicate parameter '" + p.name + "' in " + f.name, 0, 0);
        scope.insert(p.name);
    }
    std::set<std::string> declared;
    f.locals.clear();
    check_stmt(f.body, scope, declared, f.locals);
    check_expr_vars(f.ret, scope, 0, 0);
}

// ------------------------------------------------------------- renderer

int prec_of(ImpExpr::Op op) {
    switch (op) {
        case ImpExpr::Op::Eq:
        case ImpExpr::Op::Lt:
            return 0;
        case ImpExpr::Op::Add:
        case ImpExpr::Op::Sub:
            return 1;
        default:
            return 2;
    }
}

const char* op_text(ImpExpr::Op op) {
    switch (op) {
        case ImpExpr::Op::Eq:
            return "==";
        case ImpExpr::Op::Lt:
            return "<";
        case ImpExpr::Op::Add:
            return "+";
        case ImpExpr::Op::Sub:
            return "-";
        case ImpExpr::Op::Mul:
            return "*";
        case ImpExpr::Op::Div:
            return "/";
        default:
            return "%";
    }
}

void render_expr(std::ostringstream& o, const ImpExprPtr& e, int parent) {
    switch (e->kind) {
        case ImpExpr::Kind::Var:
            o << e->var;
            return;
        case ImpExpr::Kind::Int:
            o << e->lit;
            return;
        case ImpExpr::Kind::Null:
            o << "NULL";
            return;
        case ImpExpr::Kind::Binop: {
            int p = prec_of(e->op);
            if (p < parent) o << "(";
            render_expr(o, e->lhs, p);
            o << " " << op_text(e->op) << " ";
            render_expr(o, e->rhs, p + 1);
            if (p < parent) o << ")";
            return;
        }
    }
}

std::string expr_str(const ImpExprPtr& e) {
    std::ostringstream o;
    render_expr(o, e, 0);
    return o.str();
}

void flatten_seq(const ImpStmtPtr& s, std::vector<ImpStmtPtr>& out) {
    if (s->kind == ImpStmt::Kind::Seq) {
        flatten_seq(s->s1, out);
        flatten_seq(s->s2, out);
    } else {
        out.push_back(s);
    }
}

void render_stmt(std::vector<std::string>& lines, const ImpStmtPtr& s, int indent);

void render_seq(std::vector<std::string>& lines, const ImpStmtPtr& s, int indent) {
    std::vector<ImpStmtPtr> items;
    flatten_seq(s, items);
    for (size_t i = 0; i < items.size(); ++i) {
        render_stmt(lines, items[i], indent);
        if (i + 1 < items.size()) lines.back() += ";";
    }
}

std::string target_prefix(const ImpStmt& s) {
    return s.decl ? "var " + s.target + " := " : s.target + " = ";
}

void render_stmt(std::vector<std::string>& lines, const ImpStmtPtr& s, int indent) {
    std::string pad(indent, ' ');
    switch (s->kind) {
        case ImpStmt::Kind::Skip:
            lines.push_back(pad + "skip");
            return;
        case ImpStmt::Kind::Assign:
            lines.push_back(pad + (s->decl ? "var " + s->target + " := " : s->target + " := ") +
                            expr_str(s->e1));
            return;
        case ImpStmt::Kind::Seq:
            render_seq(lines, s, indent);
            return;
        case ImpStmt::Kind::If: {
            lines.push_back(pad + "if (" + expr_str(s->e1) + ") then {");
            render_seq(lines, s->s1, indent + 2);
            lines.push_back(pad + "} else {");
            render_seq(lines, s->s2, indent + 2);
            lines.push_back(pad + "}");
            return;
        }
        case ImpStmt::Kind::CallDirect: {
            std::string a;
            for (size_t i = 0; i < s->args.size(); ++i)
                a += (i ? ", " : "") + expr_str(s->args[i]);
            lines.push_back(pad + target_prefix(*s) + s->fn + "(" + a + ")");
            return;
        }
        case ImpStmt::Kind::CallIndirect: {
            std::string a;
            for (size_t i = 0; i < s->args.size(); ++i)
                a += (i ? ", " : "") + expr_str(s->args[i]);
            lines.push_back(pad + target_prefix(*s) + "(*" + expr_str(s->e1) + ")(" + a + ")");
            return;
        }
        case ImpStmt::Kind::AddrOf:
            lines.push_back(pad + target_prefix(*s) + "&" + s->fn);
            return;
        case ImpStmt::Kind::Malloc:
            lines.push_back(pad + target_prefix(*s) + "malloc(" + expr_str(s->e1) + ")");
            return;
        case ImpStmt::Kind::Free:
            lines.push_back(pad + "free(" + expr_str(s->e1) + ")");
            return;
        case ImpStmt::Kind::Load:
            lines.push_back(pad + target_prefix(*s) + "load(" + expr_str(s->e1) + ")");
            return;
        case ImpStmt::Kind::Store:
            lines.push_back(pad + "store(" + expr_str(s->e1) + ", " + expr_str(s->e2) + ")");
            return;
        case ImpStmt::Kind::Cmp:
            lines.push_back(pad + target_prefix(*s) + "cmp(" + expr_str(s->e1) + ", " +
                            expr_str(s->e2) + ")");
            return;
        case ImpStmt::Kind::Print:
            lines.push_back(pad + "print(" + expr_str(s->e1) + ")");
            return;
    }
}

bool is_lit_zero(const ImpExprPtr& e) {
    return e && e->kind == ImpExpr::Kind::Int && e->lit == 0;
}

bool is_skip(const ImpStmtPtr& s) { return !s || s->kind == ImpStmt::Kind::Skip; }

// ------------------------------------------------------------- embedding

using Env = std::map<std::string, Value>;

Value v_undef() { return Value::tagged("undef", Value::unit()); }

bool is_undef(const Value& v) {
    return v.kind() == Value::Kind::Tagged && v.tag() == "undef";
}

Prog ub(const std::string& why) { return take(Domain::empty(), why); }

std::string strip_mod(const std::string& dotted) {
    auto p = dotted.rfind('.');
    return p == std::string::npos ? dotted : dotted.substr(p + 1);
}

struct Ev {
    bool ok = false;
    Value v;
    std::string why;
};

Ev ev_ok(Value v) { return Ev{true, std::move(v), ""}; }
Ev ev_ub(std::string why) { return Ev{false, Value::unit(), std::move(why)}; }

int64_t wrap_add(int64_t a, int64_t b) {
    return static_cast<int64_t>(static_cast<uint64_t>(a) + static_cast<uint64_t>(b));
}
int64_t wrap_sub(int64_t a, int64_t b) {
    return static_cast<int64_t>(static_cast<uint64_t>(a) - static_cast<uint64_t>(b));
}
int64_t wrap_mul(int64_t a, int64_t b) {
    return static_cast<int64_t>(static_cast<uint64_t>(a) * static_cast<uint64_t>(b));
}

// Equality is defined on integers, on pointers (same block compares
// offsets, distinct blocks and function-vs-heap compare unequal), and
// between a pointer and NULL. Pointer-vs-nonzero-integer and undef are
// undefined comparisons.
Ev value_eq(const Value& a, const Value& b) {
    if (is_undef(a) || is_undef(b)) return ev_ub("comparison with undef");
    bool ai = a.kind() == Value::Kind::Int, bi = b.kind() == Value::Kind::Int;
    bool aa = a.kind() == Value::Kind::Addr, ba = b.kind() == Value::Kind::Addr;
    if (ai && bi) return ev_ok(Value::integer(a.int_of() == b.int_of() ? 1 : 0));
    if (aa && ba) {
        const Address& x = a.addr_of();
        const Address& y = b.addr_of();
        if (x.is_fun != y.is_fun) return ev_ok(Value::integer(0));
        if (x.is_fun) return ev_ok(Value::integer(x.fn == y.fn ? 1 : 0));
        if (x.block != y.block) return ev_ok(Value::integer(0));
        return ev_ok(Value::integer(x.off == y.off ? 1 : 0));
    }
    if ((aa && bi) || (ai && ba)) {
        int64_t n = ai ? a.int_of() : b.int_of();
        if (n == 0) return ev_ok(Value::integer(0));
        return ev_ub("pointer compared with nonzero integer");
    }
    return ev_ub("undefined comparison");
}

Ev eval_expr(const ImpExprPtr& e, const Env& env) {
    switch (e->kind) {
        case ImpExpr::Kind::Var: {
            auto it = env.find(e->var);
            if (it == env.end()) return ev_ub("unbound variable " + e->var);
            return ev_ok(it->second);
        }
        case ImpExpr::Kind::Int:
            return ev_ok(Value::integer(e->lit));
        case ImpExpr::Kind::Null:
            return ev_ok(Value::integer(0));
        case ImpExpr::Kind::Binop:
            break;
    }
    Ev l = eval_expr(e->lhs, env);
    if (!l.ok) return l;
    Ev r = eval_expr(e->rhs, env);
    if (!r.ok) return r;
    const Value& a = l.v;
    const Value& b = r.v;
    bool ai = a.kind() == Value::Kind::Int, bi = b.kind() == Value::Kind::Int;
    bool ah = a.kind() == Value::Kind::Addr && !a.addr_of().is_fun;
    switch (e->op) {
        case ImpExpr::Op::Add:
            if (ai && bi) return ev_ok(Value::integer(wrap_add(a.int_of(), b.int_of())));
            if (ah && bi)
                return ev_ok(Value::addr(
                    Address::heap(a.addr_of().block, wrap_add(a.addr_of().off, b.int_of()))));
            return ev_ub("ill-typed +");
        case ImpExpr::Op::Sub:
            if (ai && bi) return ev_ok(Value::integer(wrap_sub(a.int_of(), b.int_of())));
            if (ah && bi)
                return ev_ok(Value::addr(
                    Address::heap(a.addr_of().block, wrap_sub(a.addr_of().off, b.int_of()))));
            return ev_ub("ill-typed -");
        case ImpExpr::Op::Mul:
            if (ai && bi) return ev_ok(Value::integer(wrap_mul(a.int_of(), b.int_of())));
            return ev_ub("ill-typed *");
        case ImpExpr::Op::Div:
        case ImpExpr::Op::Mod: {
            if (!(ai && bi)) return ev_ub("ill-typed division");
            int64_t x = a.int_of(), y = b.int_of();
            if (y == 0) return ev_ub("division by zero");
            if (x == INT64_MIN && y == -1)
                return ev_ok(Value::integer(e->op == ImpExpr::Op::Div ? INT64_MIN : 0));
            return ev_ok(Value::integer(e->op == ImpExpr::Op::Div ? x / y : x % y));
        }
        case ImpExpr::Op::Eq:
            return value_eq(a, b);
        case ImpExpr::Op::Lt:
            if (ai && bi) return ev_ok(Value::integer(a.int_of() < b.int_of() ? 1 : 0));
            return ev_ub("ill-typed <");
    }
    return ev_ub("bad operator");
}

using Kont = std::function<Prog(Env)>;

Prog exec_stmt(const ImpStmtPtr& s, Env env, const Kont& k);

Prog eval_args(const std::vector<ImpExprPtr>& args, const Env& env,
               const std::function<Prog(std::vector<Value>)>& k) {
    std::vector<Value> out;
    out.reserve(args.size());
    for (auto& a : args) {
        Ev r = eval_expr(a, env);
        if (!r.ok) return ub(r.why);
        out.push_back(r.v);
    }
    return k(std::move(out));
}

Prog exec_stmt(const ImpStmtPtr& s, Env env, const Kont& k) {
    switch (s->kind) {
        case ImpStmt::Kind::Skip:
            return k(env);
        case ImpStmt::Kind::Assign: {
            Ev r = eval_expr(s->e1, env);
            if (!r.ok) return ub(r.why);
            env[s->target] = r.v;
            return k(env);
        }
        case ImpStmt::Kind::Seq: {
            ImpStmtPtr s2 = s->s2;
            return exec_stmt(s->s1, std::move(env),
                             [s2, k](Env e) { return exec_stmt(s2, std::move(e), k); });
        }
        case ImpStmt::Kind::If: {
            Ev c = eval_expr(s->e1, env);
            if (!c.ok) return ub(c.why);
            if (c.v.kind() != Value::Kind::Int) return ub("non-integer condition");
            return exec_stmt(c.v.int_of() != 0 ? s->s1 : s->s2, std::move(env), k);
        }
        case ImpStmt::Kind::CallDirect: {
            std::string fn = strip_mod(s->fn);
            std::string x = s->target;
            return eval_args(s->args, env, [fn, x, env, k](std::vector<Value> vs) {
                return bind(call(fn, Value::list(std::move(vs))), [x, env, k](Value r) {
                    Env e = env;
                    e[x] = r;
                    return k(e);
                });
            });
        }
        case ImpStmt::Kind::CallIndirect: {
            Ev fp = eval_expr(s->e1, env);
            if (!fp.ok) return ub(fp.why);
            if (fp.v.kind() != Value::Kind::Addr || !fp.v.addr_of().is_fun)
                return ub("indirect call through a non-function value");
            std::string fn = fp.v.addr_of().fn;
            std::string x = s->target;
            return eval_args(s->args, env, [fn, x, env, k](std::vector<Value> vs) {
                return bind(call(fn, Value::list(std::move(vs))), [x, env, k](Value r) {
                    Env e = env;
                    e[x] = r;
                    return k(e);
                });
            });
        }
        case ImpStmt::Kind::AddrOf:
            env[s->target] = Value::addr(Address::fun(strip_mod(s->fn)));
            return k(env);
        case ImpStmt::Kind::Malloc: {
            Ev n = eval_expr(s->e1, env);
            if (!n.ok) return ub(n.why);
            std::string x = s->target;
            return bind(call("alloc", Value::list({n.v})), [x, env, k](Value r) {
                Env e = env;
                e[x] = r;
                return k(e);
            });
        }
        case ImpStmt::Kind::Free: {
            Ev p = eval_expr(s->e1, env);
            if (!p.ok) return ub(p.why);
            return bind(call("free", Value::list({p.v})),
                        [env, k](Value) { return k(env); });
        }
        case ImpStmt::Kind::Load: {
            Ev p = eval_expr(s->e1, env);
            if (!p.ok) return ub(p.why);
            std::string x = s->target;
            return bind(call("load", Value::list({p.v})), [x, env, k](Value r) {
                Env e = env;
                e[x] = r;
                return k(e);
            });
        }
        case ImpStmt::Kind::Store: {
            Ev p = eval_expr(s->e1, env);
            if (!p.ok) return ub(p.why);
            Ev v = eval_expr(s->e2, env);
            if (!v.ok) return ub(v.why);
            return bind(call("store", Value::list({p.v, v.v})),
                        [env, k](Value) { return k(env); });
        }
        case ImpStmt::Kind::Cmp: {
            Ev a = eval_expr(s->e1, env);
            if (!a.ok) return ub(a.why);
            Ev b = eval_expr(s->e2, env);
            if (!b.ok) return ub(b.why);
            Ev r = value_eq(a.v, b.v);
            if (!r.ok) return ub(r.why);
            env[s->target] = r.v;
            return k(env);
        }
        case ImpStmt::Kind::Print: {
            Ev v = eval_expr(s->e1, env);
            if (!v.ok) return ub(v.why);
            return bind(obs("print", v.v), [env, k](Value) { return k(env); });
        }
    }
    return ub("bad statement");
}

std::function<Prog(Value)> embed_fun(const ImpFun& f) {
    return [f](Value arg) -> Prog {
        if (arg.kind() != Value::Kind::List || arg.items().size() != f.params.size())
            return ub("argument unpack failed for " + f.name);
        Env env;
        for (size_t i = 0; i < f.params.size(); ++i) {
            const Value& v = arg.items()[i];
            if (f.params[i].type == ImpType::Int64 && v.kind() != Value::Kind::Int)
                return ub("argument downcast to int64 failed for " + f.name);
            if (f.params[i].type == ImpType::Ptr && v.kind() != Value::Kind::Addr)
                return ub("argument downcast to ptr failed for " + f.name);
            env[f.params[i].name] = v;
        }
        ImpExprPtr ret_e = f.ret;
        return exec_stmt(f.body, std::move(env), [ret_e](Env e) {
            Ev r = eval_expr(ret_e, e);
            return r.ok ? ret(r.v) : ub(r.why);
        });
    };
}

// -------------------------------------------------------------- Mem module

struct MemSt {
    int64_t next = 0;
    std::map<int64_t, int64_t> extents;                   // block -> cell count
    std::map<std::pair<int64_t, int64_t>, Value> cells;   // (block, off) -> value
};

Value encode_mem(const MemSt& m) {
    std::vector<Value> ext;
    for (auto& [b, n] : m.extents)
        ext.push_back(Value::pair(Value::integer(b), Value::integer(n)));
    std::vector<Value> cells;
    for (auto& [key, v] : m.cells)
        cells.push_back(Value::pair(
            Value::pair(Value::integer(key.first), Value::integer(key.second)), v));
    return Value::pair(Value::integer(m.next),
                       Value::pair(Value::list(std::move(ext)), Value::list(std::move(cells))));
}

MemSt decode_mem(const Value& v) {
    MemSt m;
    m.next = v.first().int_of();
    for (auto& e : v.second().first().items())
        m.extents[e.first().int_of()] = e.second().int_of();
    for (auto& c : v.second().second().items())
        m.cells[{c.first().first().int_of(), c.first().second().int_of()}] = c.second();
    return m;
}

Prog with_mem(const std::function<Prog(MemSt)>& k) {
    return bind(get_state(), [k](Value s) { return k(decode_mem(s)); });
}

Prog put_mem(const MemSt& m, Prog rest) {
    return seq(put_state(encode_mem(m)), std::move(rest));
}

bool unpack1(const Value& arg, Value& a) {
    if (arg.kind() != Value::Kind::List || arg.items().size() != 1) return false;
    a = arg.items()[0];
    return true;
}

Prog mem_alloc(Value arg) {
    Value n;
    if (!unpack1(arg, n) || n.kind() != Value::Kind::Int)
        return ub("alloc expects [n: int64]");
    int64_t count = n.int_of();
    if (count < 0) return ub("alloc with negative size");
    return bind(choose(Domain::described("fresh block", "mem.fresh"), "fresh block"),
                [count](Value bv) {
                    int64_t b = bv.int_of();
                    return with_mem([b, count](MemSt m) {
                        bool fresh = !m.extents.count(b);
                        MemSt m2 = m;
                        m2.extents[b] = count;
                        for (int64_t i = 0; i < count; ++i) m2.cells[{b, 8 * i}] = v_undef();
                        if (b >= m2.next) m2.next = b + 1;
                        return seq(guarantee(fresh, "block is fresh"),
                                   put_mem(m2, ret(Value::addr(Address::heap(b, 0)))));
                    });
                });
}

Prog mem_free(Value arg) {
    Value p;
    if (!unpack1(arg, p) || p.kind() != Value::Kind::Addr || p.addr_of().is_fun)
        return ub("free expects [p]");
    auto key = std::make_pair(p.addr_of().block, p.addr_of().off);
    return with_mem([key](MemSt m) {
        if (!m.cells.count(key)) return ub("free outside allocation");
        m.cells.erase(key);
        return put_mem(m, ret(Value::integer(0)));
    });
}

Prog mem_load(Value arg) {
    Value p;
    if (!unpack1(arg, p) || p.kind() != Value::Kind::Addr || p.addr_of().is_fun)
        return ub("load expects [p]");
    auto key = std::make_pair(p.addr_of().block, p.addr_of().off);
    return with_mem([key](MemSt m) {
        auto it = m.cells.find(key);
        if (it == m.cells.end()) return ub("load outside allocation");
        return ret(it->second);
    });
}

Prog mem_store(Value arg) {
    if (arg.kind() != Value::Kind::List || arg.items().size() != 2)
        return ub("store expects [p, v]");
    Value p = arg.items()[0];
    Value v = arg.items()[1];
    if (p.kind() != Value::Kind::Addr || p.addr_of().is_fun)
        return ub("store expects a pointer");
    auto key = std::make_pair(p.addr_of().block, p.addr_of().off);
    return with_mem([key, v](MemSt m) {
        if (!m.cells.count(key)) return ub("store outside allocation");
        m.cells[key] = v;
        return put_mem(m, ret(Value::integer(0)));
    });
}

}  // namespace

// ------------------------------------------------------------ constructors

ImpExprPtr ImpExpr::mkvar(std::string x) {
    auto e = std::make_shared<ImpExpr>();
    e->kind = Kind::Var;
    e->var = std::move(x);
    return e;
}
ImpExprPtr ImpExpr::mkint(int64_t v) {
    auto e = std::make_shared<ImpExpr>();
    e->kind = Kind::Int;
    e->lit = v;
    return e;
}
ImpExprPtr ImpExpr::mknull() {
    auto e = std::make_shared<ImpExpr>();
    e->kind = Kind::Null;
    return e;
}
ImpExprPtr ImpExpr::mkbin(Op op, ImpExprPtr a, ImpExprPtr b) {
    auto e = std::make_shared<ImpExpr>();
    e->kind = Kind::Binop;
    e->op = op;
    e->lhs = std::move(a);
    e->rhs = std::move(b);
    return e;
}

namespace {
std::shared_ptr<ImpStmt> base_stmt(ImpStmt::Kind k) {
    auto s = std::make_shared<ImpStmt>();
    s->kind = k;
    return s;
}
}  // namespace

ImpStmtPtr ImpStmt::mkskip() { return base_stmt(Kind::Skip); }
ImpStmtPtr ImpStmt::mkassign(std::string x, ImpExprPtr e, bool decl) {
    auto s = base_stmt(Kind::Assign);
    s->target = std::move(x);
    s->e1 = std::move(e);
    s->decl = decl;
    return s;
}
ImpStmtPtr ImpStmt::mkseq(ImpStmtPtr a, ImpStmtPtr b) {
    auto s = base_stmt(Kind::Seq);
    s->s1 = std::move(a);
    s->s2 = std::move(b);
    return s;
}
ImpStmtPtr ImpStmt::mkif(ImpExprPtr c, ImpStmtPtr t, ImpStmtPtr f) {
    auto s = base_stmt(Kind::If);
    s->e1 = std::move(c);
    s->s1 = std::move(t);
    s->s2 = std::move(f);
    return s;
}
ImpStmtPtr ImpStmt::mkcall(std::string x, std::string fn, std::vector<ImpExprPtr> args,
                           bool decl) {
    auto s = base_stmt(Kind::CallDirect);
    s->target = std::move(x);
    s->fn = std::move(fn);
    s->args = std::move(args);
    s->decl = decl;
    return s;
}
ImpStmtPtr ImpStmt::mkcall_ind(std::string x, ImpExprPtr fp, std::vector<ImpExprPtr> args,
                               bool decl) {
    auto s = base_stmt(Kind::CallIndirect);
    s->target = std::move(x);
    s->e1 = std::move(fp);
    s->args = std::move(args);
    s->decl = decl;
    return s;
}
ImpStmtPtr ImpStmt::mkaddrof(std::string x, std::string g, bool decl) {
    auto s = base_stmt(Kind::AddrOf);
    s->target = std::move(x);
    s->fn = std::move(g);
    s->decl = decl;
    return s;
}
ImpStmtPtr ImpStmt::mkmalloc(std::string x, ImpExprPtr n, bool decl) {
    auto s = base_stmt(Kind::Malloc);
    s->target = std::move(x);
    s->e1 = std::move(n);
    s->decl = decl;
    return s;
}
ImpStmtPtr ImpStmt::mkfree(ImpExprPtr p) {
    auto s = base_stmt(Kind::Free);
    s->e1 = std::move(p);
    return s;
}
ImpStmtPtr ImpStmt::mkload(std::string x, ImpExprPtr p, bool decl) {
    auto s = base_stmt(Kind::Load);
    s->target = std::move(x);
    s->e1 = std::move(p);
    s->decl = decl;
    return s;
}
ImpStmtPtr ImpStmt::mkstore(ImpExprPtr p, ImpExprPtr v) {
    auto s = base_stmt(Kind::Store);
    s->e1 = std::move(p);
    s->e2 = std::move(v);
    return s;
}
ImpStmtPtr ImpStmt::mkcmp(std::string x, ImpExprPtr a, ImpExprPtr b, bool decl) {
    auto s = base_stmt(Kind::Cmp);
    s->target = std::move(x);
    s->e1 = std::move(a);
    s->e2 = std::move(b);
    s->decl = decl;
    return s;
}
ImpStmtPtr ImpStmt::mkprint(ImpExprPtr e) {
    auto s = base_stmt(Kind::Print);
    s->e1 = std::move(e);
    return s;
}

// ---------------------------------------------------------------- equality

namespace {
bool expr_eq(const ImpExprPtr& a, const ImpExprPtr& b) {
    if (!a || !b) return !a && !b;
    return *a == *b;
}
bool stmt_eq(const ImpStmtPtr& a, const ImpStmtPtr& b) {
    if (!a || !b) return !a && !b;
    return *a == *b;
}
}  // namespace

bool operator==(const ImpExpr& a, const ImpExpr& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
        case ImpExpr::Kind::Var:
            return a.var == b.var;
        case ImpExpr::Kind::Int:
            return a.lit == b.lit;
        case ImpExpr::Kind::Null:
            return true;
        case ImpExpr::Kind::Binop:
            return a.op == b.op && expr_eq(a.lhs, b.lhs) && expr_eq(a.rhs, b.rhs);
    }
    return false;
}

bool operator==(const ImpStmt& a, const ImpStmt& b) {
    if (a.kind != b.kind || a.target != b.target || a.decl != b.decl || a.fn != b.fn)
        return false;
    if (a.args.size() != b.args.size()) return false;
    for (size_t i = 0; i < a.args.size(); ++i)
        if (!expr_eq(a.args[i], b.args[i])) return false;
    return expr_eq(a.e1, b.e1) && expr_eq(a.e2, b.e2) && stmt_eq(a.s1, b.s1) &&
           stmt_eq(a.s2, b.s2);
}

bool operator==(const ImpParam& a, const ImpParam& b) {
    return a.name == b.name && a.type == b.type && a.annotated == b.annotated;
}

bool operator==(const ImpFun& a, const ImpFun& b) {
    return a.name == b.name && a.params == b.params && a.bracketed == b.bracketed &&
           a.locals == b.locals && stmt_eq(a.body, b.body) && expr_eq(a.ret, b.ret);
}

bool operator==(const ImpModule& a, const ImpModule& b) {
    return a.name == b.name && a.funs == b.funs;
}

// ------------------------------------------------------------- top level

ImpModule parse_module(const std::string& src) {
    Parser p;
    p.toks = lex(src);
    ImpModule m = p.parse();
    for (auto& f : m.funs) check_fun(f);
    return m;
}

std::string render_module(const ImpModule& m) {
    std::ostringstream out;
    out << "[Module " << m.name << "]\n";
    for (size_t fi = 0; fi < m.funs.size(); ++fi) {
        const ImpFun& f = m.funs[fi];
        out << "\ndef " << f.name << "(";
        if (f.bracketed) {
            out << "[";
            for (size_t i = 0; i < f.params.size(); ++i) {
                if (i) out << ", ";
                out << f.params[i].name;
                if (f.params[i].annotated) {
                    if (f.params[i].type == ImpType::Int64) out << ": int64";
                    if (f.params[i].type == ImpType::Ptr) out << ": ptr";
                    if (f.params[i].type == ImpType::Val) out << ": val";
                }
            }
            out << "]?";
        } else {
            for (size_t i = 0; i < f.params.size(); ++i) {
                if (i) out << ", ";
                out << f.params[i].name;
            }
        }
        out << ") =\n";
        std::vector<std::string> lines;
        bool have_ret = !is_lit_zero(f.ret);
        if (!is_skip(f.body)) {
            render_seq(lines, f.body, 2);
            if (have_ret) lines.back() += ";";
        } else if (!have_ret) {
            lines.push_back("  skip");
        }
        if (have_ret) lines.push_back("  " + expr_str(f.ret));
        for (auto& l : lines) out << l << "\n";
    }
    return out.str();
}

ModuleSem embed(const ImpModule& m) {
    ModuleSem sem;
    sem.name = m.name;
    sem.init = Value::unit();
    for (const auto& f : m.funs) sem.funs[f.name] = embed_fun(f);
    return sem;
}

ModuleSem mem_impl() {
    ModuleSem sem;
    sem.name = "Mem";
    sem.init = encode_mem(MemSt{});
    sem.funs["alloc"] = mem_alloc;
    sem.funs["free"] = mem_free;
    sem.funs["load"] = mem_load;
    sem.funs["store"] = mem_store;
    return sem;
}

PreAbs mem_preabs() {
    PreAbs pre;
    pre.name = "Mem";
    pre.init = encode_mem(MemSt{});
    auto nb = [](Value) { return choose(Domain::empty(), "trivial"); };
    pre.funs["alloc"] = PreAbsFun{nb, mem_alloc};
    pre.funs["free"] = PreAbsFun{nb, mem_free};
    pre.funs["load"] = PreAbsFun{nb, mem_load};
    pre.funs["store"] = PreAbsFun{nb, mem_store};
    return pre;
}

}  // namespace abslog
