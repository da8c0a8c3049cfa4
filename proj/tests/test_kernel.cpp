#include "doctest.h"

#include "abslog/behavior.hpp"
#include "abslog/module.hpp"
#include "abslog/prog.hpp"

using namespace abslog;

namespace {

EnumConfig plain_cfg() { return EnumConfig{}; }

bool beh_equal(const BehSet& a, const BehSet& b) {
    return a.traces == b.traces && a.ub_prefixes == b.ub_prefixes;
}

BehSet run(const Prog& p, int64_t budget = 40) {
    EnumConfig cfg = plain_cfg();
    return enumerate_prog(p, budget, cfg);
}

}  // namespace

TEST_CASE("monad laws up to bounded behavior") {
    auto k = [](const Value& v) { return bind(obs("print", v), [](const Value&) { return ret(Value::integer(9)); }); };
    auto h = [](const Value& v) { return obs("echo", v); };

    // left identity
    CHECK(beh_equal(run(bind(ret(Value::integer(3)), k)), run(k(Value::integer(3)))));

    // right identity
    Prog p = seq(obs("print", Value::integer(1)), ret(Value::integer(2)));
    CHECK(beh_equal(run(bind(p, [](const Value& v) { return ret(v); })), run(p)));

    // associativity
    Prog lhs = bind(bind(p, k), h);
    Prog rhs = bind(p, [k, h](const Value& v) { return bind(k(v), h); });
    CHECK(beh_equal(run(lhs), run(rhs)));
}

TEST_CASE("assume and guarantee shapes") {
    CHECK(assume(true).kind() == Prog::Kind::Ret);
    CHECK(guarantee(true).kind() == Prog::Kind::Ret);
    CHECK(assume(true).ret_value() == Value::unit());

    Prog ub = assume(false);
    REQUIRE(ub.kind() == Prog::Kind::Vis);
    CHECK(ub.event().kind == EventKind::Take);
    CHECK(ub.event().domain.kind == Domain::Kind::Empty);

    Prog nb = guarantee(false);
    REQUIRE(nb.kind() == Prog::Kind::Vis);
    CHECK(nb.event().kind == EventKind::Choose);
    CHECK(nb.event().domain.kind == Domain::Kind::Empty);
}

TEST_CASE("interpret with the identity handler preserves behavior") {
    Prog p = bind(obs("print", Value::integer(1)), [](const Value&) {
        return bind(choose(Domain::finite({Value::integer(1), Value::integer(2)})),
                    [](const Value& v) { return ret(v); });
    });
    Handler identity = [](const Event&, const Value&) { return std::nullopt; };
    Value s0 = Value::str("st");
    Prog wrapped = interpret(p, identity, s0);
    Prog paired = bind(p, [s0](const Value& v) { return ret(Value::pair(v, s0)); });
    CHECK(beh_equal(run(wrapped), run(paired)));
}

TEST_CASE("interpret threads state through put and get") {
    ModuleSem m;
    m.name = "M";
    m.init = Value::integer(0);
    m.funs["main"] = [](const Value&) {
        return seq(put_state(Value::integer(5)), get_state());
    };
    BehSet s = run(close_stack(stack_of({m}), "main", Value::unit()));
    REQUIRE(s.traces.size() == 1);
    CHECK(*s.traces.begin() == make_term({}, Value::integer(5)));
}

TEST_CASE("close dispatches main with its argument") {
    ModuleSem m;
    m.name = "M";
    m.funs["main"] = [](const Value& x) { return ret(x); };
    BehSet s = run(close_stack(stack_of({m}), "main", Value::integer(7)));
    REQUIRE(s.traces.size() == 1);
    CHECK(*s.traces.begin() == make_term({}, Value::integer(7)));
}

TEST_CASE("get_caller answers the dynamic caller") {
    ModuleSem a;
    a.name = "A";
    a.funs["f"] = [](const Value&) { return call("g", Value::unit()); };
    ModuleSem b;
    b.name = "B";
    b.funs["g"] = [](const Value&) {
        return bind(get_caller(), [](const Value& who) {
            return seq(obs("saw", who), ret(who));
        });
    };
    BehSet s = run(close_stack(stack_of({a, b}), "f", Value::unit()));
    REQUIRE(s.traces.size() == 1);
    const Trace& t = *s.traces.begin();
    REQUIRE(t.events.size() == 1);
    CHECK(t.events[0].fn == "saw");
    CHECK(t.events[0].args == Value::str("A"));
    CHECK(t.value == Value::str("A"));

    // the entry point's caller is the external world
    BehSet s2 = run(close_stack(stack_of({a, b}), "g", Value::unit()));
    REQUIRE(s2.traces.size() == 1);
    CHECK(s2.traces.begin()->events[0].args == Value::str(kExternalCaller));
}

TEST_CASE("call to an undefined function is an error trace") {
    ModuleSem m;
    m.name = "M";
    m.funs["main"] = [](const Value&) { return call("nope", Value::unit()); };
    BehSet s = run(close_stack(stack_of({m}), "main", Value::unit()));
    REQUIRE(s.traces.size() == 1);
    CHECK(s.traces.begin()->terminal == Terminal::Error);
    CHECK(s.ub_prefixes.empty());
}

TEST_CASE("ipc outside a pre-abstraction is an error trace") {
    ModuleSem m;
    m.name = "M";
    m.funs["main"] = [](const Value&) { return seq(ipc(), ret(Value::integer(1))); };
    BehSet s = run(close_stack(stack_of({m}), "main", Value::unit()));
    REQUIRE(s.traces.size() == 1);
    CHECK(s.traces.begin()->terminal == Terminal::Error);
}

TEST_CASE("linking appends and flags duplicates") {
    ModuleSem m1;
    m1.name = "M1";
    m1.funs["f"] = [](const Value&) { return skip(); };
    ModuleSem m2;
    m2.name = "M2";
    m2.funs["g"] = [](const Value&) { return skip(); };

    ModStack s = link(stack_of({m1}), stack_of({m2}));
    REQUIRE(s.mods.size() == 2);
    CHECK(s.mods[0].name == "M1");
    CHECK(s.mods[1].name == "M2");
    CHECK(s.duplicate_warnings.empty());

    ModStack empty_left = link(stack_of({}), stack_of({m2}));
    CHECK(empty_left.mods.size() == 1);

    ModuleSem m1b;
    m1b.name = "M1b";
    m1b.funs["f"] = [](const Value&) { return skip(); };
    ModStack dup = link(stack_of({m1}), stack_of({m1b}));
    REQUIRE(dup.duplicate_warnings.size() == 1);
    CHECK(dup.duplicate_warnings[0].find("f") != std::string::npos);
}

TEST_CASE("module-local state is per module") {
    ModuleSem a;
    a.name = "A";
    a.init = Value::integer(1);
    a.funs["main"] = [](const Value&) {
        return seq(put_state(Value::integer(10)),
                   bind(call("peek", Value::unit()), [](const Value& other) {
                       return bind(get_state(), [other](const Value& mine) {
                           return ret(Value::pair(mine, other));
                       });
                   }));
    };
    ModuleSem b;
    b.name = "B";
    b.init = Value::integer(2);
    b.funs["peek"] = [](const Value&) { return get_state(); };
    BehSet s = run(close_stack(stack_of({a, b}), "main", Value::unit()));
    REQUIRE(s.traces.size() == 1);
    CHECK(s.traces.begin()->value ==
          Value::pair(Value::integer(10), Value::integer(2)));
}

TEST_CASE("loop combinators") {
    // zero iterations
    CHECK(beh_equal(run(repeat_n(0, [] { return obs("tick", Value::unit()); })),
                    run(skip())));

    // three iterations emit three events
    BehSet s = run(repeat_n(3, [] { return obs("tick", Value::unit()); }));
    REQUIRE(s.traces.size() == 1);
    CHECK(s.traces.begin()->events.size() == 3);

    // immediately-false guard behaves like skip
    Prog loop = while_loop([](const Value&) { return ret(Value::none()); }, Value::unit());
    CHECK(beh_equal(run(loop), run(skip())));

    // counting loop: iterate twice then stop
    Prog count = while_loop(
        [](const Value& s) {
            int64_t n = s.int_of();
            if (n == 0) return ret(Value::none());
            return seq(obs("tick", Value::integer(n)),
                       ret(Value::some(Value::integer(n - 1))));
        },
        Value::integer(2));
    BehSet cs = run(count);
    REQUIRE(cs.traces.size() == 1);
    CHECK(cs.traces.begin()->events.size() == 2);
}

TEST_CASE("budget exhaustion is partial and flagged") {
    Prog spin = while_loop(
        [](const Value& s) { return ret(Value::some(s)); }, Value::unit());
    BehSet s = run(spin, 25);
    CHECK(s.truncated);
    REQUIRE(s.traces.size() == 1);
    CHECK(s.traces.begin()->terminal == Terminal::Partial);

    Prog obs_spin = while_loop(
        [](const Value& s) {
            return seq(obs("tick", Value::unit()), ret(Value::some(s)));
        },
        Value::unit());
    BehSet s2 = run(obs_spin, 10);
    CHECK(s2.truncated);
    REQUIRE(s2.traces.size() == 1);
    CHECK(s2.traces.begin()->terminal == Terminal::Partial);
    CHECK(!s2.traces.begin()->events.empty());
}

TEST_CASE("recursion through calls unfolds lazily and burns budget") {
    ModuleSem m;
    m.name = "M";
    m.funs["loop"] = [](const Value&) { return call("loop", Value::unit()); };
    BehSet s = run(close_stack(stack_of({m}), "loop", Value::unit()), 60);
    CHECK(s.truncated);
    REQUIRE(s.traces.size() == 1);
    CHECK(s.traces.begin()->terminal == Terminal::Partial);
}
