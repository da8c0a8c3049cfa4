#include "doctest.h"

#include <random>

#include "abslog/behavior.hpp"

using namespace abslog;

namespace {

BehSet run(const Prog& p, int64_t budget = 40, const EnumConfig& cfg = EnumConfig{}) {
    return enumerate_prog(p, budget, cfg);
}

bool beh_equal(const BehSet& a, const BehSet& b) {
    return a.traces == b.traces && a.ub_prefixes == b.ub_prefixes;
}

ObsRecord rec(const std::string& fn, int64_t arg, int64_t retv = 0) {
    return ObsRecord{fn, Value::integer(arg), Value::integer(retv)};
}

}  // namespace

TEST_CASE("ret is a single terminated trace") {
    BehSet s = run(ret(Value::integer(5)), 4);
    REQUIRE(s.traces.size() == 1);
    CHECK(*s.traces.begin() == make_term({}, Value::integer(5)));
    CHECK(s.ub_prefixes.empty());
    CHECK(!s.truncated);
}

TEST_CASE("assume false is top") {
    Prog p = seq(assume(false), obs("print", Value::integer(1)));
    BehSet s = run(p, 4);
    CHECK(beh_is_top(s));
    CHECK(s.traces.empty());

    // Top absorbs any behavior on the right of an inclusion
    BehSet anything;
    anything.traces.insert(make_error({rec("x", 1)}));
    anything.ub_prefixes.insert({rec("y", 2)});
    CHECK(included(anything, s).holds);
}

TEST_CASE("guarantee false is partial only") {
    Prog p = seq(guarantee(false), obs("print", Value::integer(1)));
    BehSet s = run(p, 4);
    CHECK(!beh_is_top(s));
    CHECK(s.ub_prefixes.empty());
    REQUIRE(s.traces.size() == 1);
    CHECK(*s.traces.begin() == make_partial({}));
    CHECK(!s.truncated);
}

TEST_CASE("observations record configured responses") {
    Prog p = bind(obs("print", Value::integer(1)), [](const Value& r) { return ret(r); });

    BehSet s = run(p);
    REQUIRE(s.traces.size() == 1);
    CHECK(*s.traces.begin() == make_term({rec("print", 1, 0)}, Value::integer(0)));

    EnumConfig cfg;
    cfg.responders["print"] = {Value::integer(4), Value::integer(7)};
    BehSet s2 = run(p, 40, cfg);
    CHECK(s2.traces.size() == 2);
    CHECK(s2.traces.count(make_term({rec("print", 1, 4)}, Value::integer(4))) == 1);
    CHECK(s2.traces.count(make_term({rec("print", 1, 7)}, Value::integer(7))) == 1);
}

TEST_CASE("choose is union") {
    Domain d = Domain::finite({Value::integer(1), Value::integer(2)});
    auto branch = [](const Value& v) { return bind(obs("print", v), [v](const Value&) { return ret(v); }); };
    Prog p = bind(choose(d), branch);

    BehSet whole = run(p, 10);
    BehSet parts = beh_union(run(branch(Value::integer(1)), 9),
                             run(branch(Value::integer(2)), 9));
    CHECK(beh_equal(whole, parts));
    CHECK(whole.traces.size() == 2);
}

TEST_CASE("take is intersection of partial-closed branches") {
    Domain d = Domain::finite({Value::integer(1), Value::integer(2)});
    auto branch = [](const Value& v) {
        return seq(obs("print", Value::integer(9)), ret(v));
    };
    Prog p = bind(take(d), branch);

    BehSet whole = run(p, 10);
    BehSet parts = beh_intersect(run(branch(Value::integer(1)), 9),
                                 run(branch(Value::integer(2)), 9));
    CHECK(beh_equal(whole, parts));

    // branches agree on the event but not the result: only the shared
    // prefix behavior remains
    REQUIRE(whole.traces.size() == 1);
    CHECK(*whole.traces.begin() == make_partial({rec("print", 9)}));
}

TEST_CASE("take branches that go to top are neutral") {
    Domain d = Domain::finite({Value::integer(1), Value::integer(2)});
    Prog p = bind(take(d), [](const Value& v) {
        if (v.int_of() == 1) return seq(assume(false), skip());
        return bind(obs("print", v), [](const Value&) { return ret(Value::integer(3)); });
    });
    BehSet s = run(p, 10);
    REQUIRE(s.traces.size() == 1);
    CHECK(*s.traces.begin() == make_term({rec("print", 2)}, Value::integer(3)));
}

TEST_CASE("described domains resolve through the config") {
    Prog p = bind(choose(Domain::described("fresh block", "mem.fresh")),
                  [](const Value& v) { return ret(v); });

    EnumConfig cfg;
    cfg.domains["mem.fresh"] = {Value::integer(0), Value::integer(1)};
    BehSet s = run(p, 10, cfg);
    CHECK(s.traces.size() == 2);

    // mem.fresh ships a default candidate set; other keys must be configured
    EnumConfig defaults;
    CHECK(run(p, 10, defaults).traces.size() == 4);

    Prog q = bind(choose(Domain::described("handles", "pool.handles")),
                  [](const Value& v) { return ret(v); });
    CHECK_THROWS_AS(run(q, 10, defaults), EnumError);
    CHECK_THROWS_WITH_AS(run(q, 10, defaults),
                         doctest::Contains("enumeration-config-missing"), EnumError);
}

TEST_CASE("ub after events is a prefixed marker with an error witness") {
    Prog p = seq(obs("print", Value::integer(1)), assume(false));
    BehSet s = run(p, 10);
    CHECK(s.traces.empty());
    REQUIRE(s.ub_prefixes.size() == 1);
    CHECK(*s.ub_prefixes.begin() == std::vector<ObsRecord>{rec("print", 1)});

    // same-shaped abstraction covers it
    CHECK(included(s, s).holds);

    // an abstraction without the marker rejects it, witnessing the error
    BehSet abs;
    abs.traces.insert(make_term({rec("print", 1)}, Value::unit()));
    Verdict v = included(s, abs);
    REQUIRE(!v.holds);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->terminal == Terminal::Error);
    CHECK(v.witness->events == std::vector<ObsRecord>{rec("print", 1)});
}

TEST_CASE("included pinned cases") {
    BehSet term1;
    term1.traces.insert(make_term({}, Value::integer(1)));
    CHECK(included(term1, term1).holds);

    BehSet err;
    err.traces.insert(make_error({}));
    BehSet partial_only;
    partial_only.traces.insert(make_partial({}));
    Verdict v = included(err, partial_only);
    REQUIRE(!v.holds);
    CHECK(*v.witness == make_error({}));

    CHECK(included(err, beh_top()).holds);
    CHECK(included(partial_only, term1).holds);
}

TEST_CASE("partial coverage is event-prefix coverage") {
    BehSet impl;
    impl.traces.insert(make_partial({rec("a", 1)}));

    BehSet abs_long;
    abs_long.traces.insert(make_term({rec("a", 1), rec("b", 2)}, Value::unit()));
    CHECK(included(impl, abs_long).holds);

    BehSet abs_short;
    abs_short.traces.insert(make_term({}, Value::unit()));
    CHECK(!included(impl, abs_short).holds);

    BehSet abs_ub;
    abs_ub.ub_prefixes.insert({rec("a", 1), rec("c", 3)});
    CHECK(included(impl, abs_ub).holds);
}

TEST_CASE("enumerate is deterministic") {
    Prog p = bind(choose(Domain::finite({Value::integer(1), Value::integer(2)})),
                  [](const Value& v) { return seq(obs("print", v), assume(v.int_of() != 2)); });
    BehSet a = run(p, 12);
    BehSet b = run(p, 12);
    CHECK(beh_equal(a, b));
    CHECK(a.truncated == b.truncated);
}

TEST_CASE("raising the budget never removes a settled trace") {
    Prog p = bind(choose(Domain::finite({Value::integer(0), Value::integer(1),
                                         Value::integer(2)})),
                  [](const Value& v) {
                      return bind(repeat_n(v.int_of(),
                                           [] { return obs("tick", Value::unit()); }),
                                  [v](const Value&) { return ret(v); });
                  });
    for (int64_t small : {3, 5, 8, 12}) {
        BehSet lo = run(p, small);
        BehSet hi = run(p, small * 2 + 6);
        for (const auto& t : lo.traces) {
            if (t.terminal == Terminal::Partial) continue;
            CHECK(beh_covered(hi, t));
        }
    }
}

TEST_CASE("canonicalization minimizes generators") {
    BehSet s;
    s.traces.insert(make_term({rec("a", 1), rec("b", 2)}, Value::integer(0)));
    s.traces.insert(make_partial({rec("a", 1)}));
    s.traces.insert(make_partial({}));
    s.ub_prefixes.insert({rec("a", 1), rec("b", 2), rec("c", 3)});
    s.ub_prefixes.insert({rec("a", 1), rec("b", 2), rec("c", 3), rec("d", 4)});

    BehSet c = beh_canon(s);
    CHECK(c.ub_prefixes.size() == 1);
    CHECK(c.traces.size() == 1);
    CHECK(c.traces.begin()->terminal == Terminal::Term);
}

namespace {

// Random closing context with one hole: eagerly generated program shapes
// over obs/choose/take/seq, hole spliced at a random point.
Prog gen_ctx(std::mt19937& rng, int depth, const Prog& hole, bool& placed) {
    auto pick = [&rng](int n) { return static_cast<int>(rng() % n); };
    if (depth <= 0) {
        if (!placed) {
            placed = true;
            return hole;
        }
        return ret(Value::integer(pick(3)));
    }
    switch (pick(5)) {
        case 0:
            return seq(obs("o", Value::integer(pick(3))),
                       gen_ctx(rng, depth - 1, hole, placed));
        case 1: {
            Prog a = gen_ctx(rng, depth - 1, hole, placed);
            Prog b = gen_ctx(rng, depth - 1, hole, placed);
            return bind(choose(Domain::finite({Value::integer(0), Value::integer(1)})),
                        [a, b](const Value& v) { return v.int_of() == 0 ? a : b; });
        }
        case 2: {
            Prog a = gen_ctx(rng, depth - 1, hole, placed);
            Prog b = gen_ctx(rng, depth - 1, hole, placed);
            return bind(take(Domain::finite({Value::integer(0), Value::integer(1)})),
                        [a, b](const Value& v) { return v.int_of() == 0 ? a : b; });
        }
        case 3: {
            if (!placed) {
                placed = true;
                return seq(hole, gen_ctx(rng, depth - 1, hole, placed));
            }
            return seq(obs("p", Value::integer(pick(2))),
                       gen_ctx(rng, depth - 1, hole, placed));
        }
        default:
            return gen_ctx(rng, depth - 1, hole, placed);
    }
}

}  // namespace

TEST_CASE("guarantee-assume lemma over 200 random contexts") {
    std::mt19937 rng(20240817);
    int checked = 0;
    for (int i = 0; i < 200; ++i) {
        bool p_val = (rng() % 2) == 0;
        Prog with_pair = seq(guarantee(p_val), assume(p_val));

        std::mt19937 shape_rng(rng());
        std::mt19937 shape_rng2 = shape_rng;

        bool placed = false;
        Prog lhs = gen_ctx(shape_rng, 4, with_pair, placed);
        if (!placed) lhs = seq(with_pair, lhs);

        bool placed2 = false;
        Prog rhs = gen_ctx(shape_rng2, 4, skip(), placed2);
        if (!placed2) rhs = seq(skip(), rhs);

        Verdict v = included(run(lhs, 40), run(rhs, 40));
        CHECK(v.holds);
        ++checked;
    }
    CHECK(checked == 200);
}

TEST_CASE("trace json rendering") {
    Trace t = make_term({rec("print", 1, 0)}, Value::integer(1));
    CHECK(trace_to_json(t).dump() ==
          "{\"events\":[{\"fn\":\"print\",\"args\":{\"int\":1},\"ret\":{\"int\":0}}],"
          "\"terminal\":\"term\",\"value\":{\"int\":1}}");

    Trace e = make_error({});
    CHECK(trace_to_json(e).dump() == "{\"events\":[],\"terminal\":\"error\"}");

    BehSet s;
    s.traces.insert(t);
    Json j = behset_to_json(s);
    CHECK(j["traces"].size() == 1);
    CHECK(j["truncated"] == false);
}

TEST_CASE("check_refine aggregates per-argument verdicts") {
    ModuleSem impl;
    impl.name = "M";
    impl.funs["main"] = [](const Value& x) {
        return bind(obs("print", x), [x](const Value&) { return ret(x); });
    };

    ModuleSem abs_ok = impl;
    ModuleSem abs_strict;
    abs_strict.name = "M";
    abs_strict.funs["main"] = [](const Value& x) {
        return seq(guarantee(x.int_of() != 2),
                   bind(obs("print", x), [x](const Value&) { return ret(x); }));
    };

    std::vector<Value> args = {Value::integer(1), Value::integer(2)};
    EnumConfig cfg;

    RefineReport ok = check_refine(stack_of({impl}), stack_of({abs_ok}), stack_of({}),
                                   "main", args, 20, cfg);
    CHECK(ok.holds);
    REQUIRE(ok.args.size() == 2);

    RefineReport bad = check_refine(stack_of({impl}), stack_of({abs_strict}), stack_of({}),
                                    "main", args, 20, cfg);
    CHECK(!bad.holds);
    CHECK(bad.args[0].verdict.holds);
    CHECK(!bad.args[1].verdict.holds);
    REQUIRE(bad.args[1].verdict.witness.has_value());

    Json j = report_to_json(bad);
    CHECK(j["verdict"] == "violation");
}
