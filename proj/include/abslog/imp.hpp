#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "abslog/abspec.hpp"
#include "abslog/module.hpp"

namespace abslog {

struct ImpParseError : std::runtime_error {
    int line = 0;
    int col = 0;
    ImpParseError(const std::string& what, int line_, int col_)
        : std::runtime_error(what + " at " + std::to_string(line_) + ":" +
                             std::to_string(col_)),
          line(line_),
          col(col_) {}
};

struct ImpExpr;
using ImpExprPtr = std::shared_ptr<const ImpExpr>;

// NULL is kept distinct from the literal 0 so sources round-trip; both
// evaluate to the integer 0.
struct ImpExpr {
    enum class Kind { Var, Int, Null, Binop };
    enum class Op { Eq, Lt, Add, Sub, Mul, Div, Mod };

    Kind kind = Kind::Int;
    std::string var;
    int64_t lit = 0;
    Op op = Op::Add;
    ImpExprPtr lhs;
    ImpExprPtr rhs;

    static ImpExprPtr mkvar(std::string x);
    static ImpExprPtr mkint(int64_t v);
    static ImpExprPtr mknull();
    static ImpExprPtr mkbin(Op op, ImpExprPtr a, ImpExprPtr b);
};

bool operator==(const ImpExpr& a, const ImpExpr& b);

struct ImpStmt;
using ImpStmtPtr = std::shared_ptr<const ImpStmt>;

// Assignment-like forms carry `decl`: true renders as "var x := rhs" and
// introduces the local. Plain-expression assignment always uses ":=";
// calls, address-of and the memory builtins use "=" unless declaring.
// print is a statement, not a call: it emits the observation directly.
struct ImpStmt {
    enum class Kind {
        Skip,
        Assign,
        Seq,
        If,
        CallDirect,
        CallIndirect,
        AddrOf,
        Malloc,
        Free,
        Load,
        Store,
        Cmp,
        Print,
    };

    Kind kind = Kind::Skip;
    std::string target;
    bool decl = false;
    std::string fn;  // dotted callee (CallDirect) or target function (AddrOf)
    ImpExprPtr e1;
    ImpExprPtr e2;
    std::vector<ImpExprPtr> args;
    ImpStmtPtr s1;
    ImpStmtPtr s2;

    static ImpStmtPtr mkskip();
    static ImpStmtPtr mkassign(std::string x, ImpExprPtr e, bool decl);
    static ImpStmtPtr mkseq(ImpStmtPtr a, ImpStmtPtr b);
    static ImpStmtPtr mkif(ImpExprPtr c, ImpStmtPtr t, ImpStmtPtr f);
    static ImpStmtPtr mkcall(std::string x, std::string fn, std::vector<ImpExprPtr> args,
                             bool decl);
    static ImpStmtPtr mkcall_ind(std::string x, ImpExprPtr fp, std::vector<ImpExprPtr> args,
                                 bool decl);
    static ImpStmtPtr mkaddrof(std::string x, std::string g, bool decl);
    static ImpStmtPtr mkmalloc(std::string x, ImpExprPtr n, bool decl);
    static ImpStmtPtr mkfree(ImpExprPtr p);
    static ImpStmtPtr mkload(std::string x, ImpExprPtr p, bool decl);
    static ImpStmtPtr mkstore(ImpExprPtr p, ImpExprPtr v);
    static ImpStmtPtr mkcmp(std::string x, ImpExprPtr a, ImpExprPtr b, bool decl);
    static ImpStmtPtr mkprint(ImpExprPtr e);
};

bool operator==(const ImpStmt& a, const ImpStmt& b);

// val accepts anything; int64 and ptr are checked at unpack and miss is UB.
enum class ImpType { Val, Int64, Ptr };

// annotated records whether the source spelled a ": type"; "[stk]?" and
// "[stk: val]?" bind identically but render differently.
struct ImpParam {
    std::string name;
    ImpType type = ImpType::Val;
    bool annotated = false;
};

bool operator==(const ImpParam& a, const ImpParam& b);

// bracketed distinguishes "def f([a: int64]?)" headers from "def f(a)";
// both unpack a list argument of matching arity, UB on failure.
struct ImpFun {
    std::string name;
    std::vector<ImpParam> params;
    bool bracketed = false;
    std::vector<std::string> locals;  // declaration order
    ImpStmtPtr body;
    ImpExprPtr ret;
};

bool operator==(const ImpFun& a, const ImpFun& b);

struct ImpModule {
    std::string name;
    std::vector<ImpFun> funs;
};

bool operator==(const ImpModule& a, const ImpModule& b);

ImpModule parse_module(const std::string& src);

// Canonical form: parse(render(m)) == m, and render(parse(s)) == s for
// sources already in canonical form (the shipped corpus is).
std::string render_module(const ImpModule& m);

ModuleSem embed(const ImpModule& m);

// Nondeterministic allocator over the "mem.fresh" candidate domain; free
// releases a single cell. State is (next block hint, extents, cells).
ModuleSem mem_impl();

// Friend bodies are NB; context bodies are the mem_impl machine.
PreAbs mem_preabs();

}  // namespace abslog
