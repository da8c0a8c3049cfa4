#include "doctest.h"

#include "abslog/spec.hpp"

using namespace abslog;

namespace {

Spec fire_like_spec() {
    // pre hands the callee a Ball, post returns a Fired token
    Spec s;
    s.a_domain = {Value::unit()};
    s.cond = [](const Value&) {
        SpecCase c;
        c.pre = [](const Value& x, const Value& xa, const Measure& d,
                   const Resource& res) {
            return !d.has_value() && x == xa && res == cannon("Ball");
        };
        c.post = [](const Value& r, const Value& ra, const Resource& res) {
            return r == ra && res == cannon("Fired");
        };
        return c;
    };
    s.pre_assume = [](const Value&, const Value& x) {
        return std::vector<AssumeTuple>{{x, std::nullopt, cannon("Ball")}};
    };
    s.pre_guar = [](const Value&, const Value& xa, const Resource& res_m) {
        return std::vector<GuarTuple>{
            {xa, std::nullopt, cannon("Ball"), Resource::unit(), res_m}};
    };
    s.post_assume = [](const Value&, const Value& r) {
        return std::vector<AssumeTuple>{{r, std::nullopt, cannon("Fired")}};
    };
    s.post_guar = [](const Value&, const Value& ra, const Resource& res_m) {
        return std::vector<GuarTuple>{
            {ra, std::nullopt, cannon("Fired"), Resource::unit(), res_m}};
    };
    s.ra_candidates = [](const Value&, const Value&) {
        return std::vector<Value>{Value::unit()};
    };
    return s;
}

StrongerSample small_sample() {
    StrongerSample smp;
    smp.xs = {Value::unit(), Value::integer(3), Value::integer(4)};
    smp.xas = smp.xs;
    smp.ds = {std::nullopt, Measure{Ordinal{0, 1}}};
    smp.rs = smp.xs;
    smp.ras = smp.xs;
    return smp;
}

}  // namespace

TEST_CASE("identity spec pins argument, measure and resource") {
    Spec s = default_spec();
    SpecCase c = s.cond(Value::unit());
    Value three = Value::integer(3);
    Value four = Value::integer(4);
    CHECK(c.pre(three, three, std::nullopt, Resource::unit()));
    CHECK(!c.pre(three, four, std::nullopt, Resource::unit()));
    CHECK(!c.pre(three, three, Measure{Ordinal{0, 1}}, Resource::unit()));
    CHECK(!c.pre(three, three, std::nullopt, cannon("Ball")));
    CHECK(c.post(three, three, Resource::unit()));
    CHECK(c.post(three, three, cannon("Fired")));
    CHECK(!c.post(three, four, Resource::unit()));
}

TEST_CASE("identity spec witnesses mirror the known side") {
    Spec s = default_spec();
    Value v = Value::integer(7);
    auto pa = s.pre_assume(Value::unit(), v);
    REQUIRE(pa.size() == 1);
    CHECK(pa[0].xa == v);
    CHECK(!pa[0].d.has_value());
    CHECK(pa[0].res.is_unit());
    auto pg = s.pre_guar(Value::unit(), v, cannon("Ready"));
    REQUIRE(pg.size() == 1);
    CHECK(pg[0].xr == v);
    CHECK(pg[0].res_m == cannon("Ready"));
    CHECK(pg[0].res_f.is_unit());
}

TEST_CASE("hoare lifting differs from the identity spec only on the measure") {
    Spec hl = spec_of_hl([](const Value&) { return true; },
                         [](const Value&) { return true; });
    SpecCase c = hl.cond(Value::unit());
    Value three = Value::integer(3);
    CHECK(c.pre(three, three, std::nullopt, Resource::unit()));
    CHECK(c.pre(three, three, Measure{Ordinal{0, 1}}, Resource::unit()));
    CHECK(!c.pre(three, Value::integer(4), std::nullopt, Resource::unit()));
    CHECK(!c.pre(three, three, std::nullopt, cannon("Ball")));
}

TEST_CASE("hoare lifting applies the plain predicates") {
    Spec hl = spec_of_hl(
        [](const Value& x) { return x.kind() == Value::Kind::Int && x.int_of() % 2 == 0; },
        [](const Value& r) { return r.kind() == Value::Kind::Int && r.int_of() >= 0; });
    SpecCase c = hl.cond(Value::unit());
    CHECK(c.pre(Value::integer(4), Value::integer(4), std::nullopt, Resource::unit()));
    CHECK(!c.pre(Value::integer(3), Value::integer(3), std::nullopt, Resource::unit()));
    CHECK(c.post(Value::integer(0), Value::integer(0), Resource::unit()));
    CHECK(!c.post(Value::integer(-1), Value::integer(-1), Resource::unit()));
}

TEST_CASE("table lookup falls back to the identity spec") {
    SpecTable t;
    t.entries["fire"] = fire_like_spec();
    CHECK(t.declares("fire"));
    CHECK(!t.declares("load"));
    SpecCase c = t.lookup("load").cond(Value::unit());
    Value v = Value::integer(1);
    CHECK(c.pre(v, v, std::nullopt, Resource::unit()));
    CHECK(!c.pre(v, v, std::nullopt, cannon("Ball")));
}

TEST_CASE("witness validation accepts consistent specs") {
    std::vector<Value> args = {Value::unit(), Value::integer(2)};
    CHECK_NOTHROW(validate_spec("id", default_spec(), args, args));
    CHECK_NOTHROW(validate_spec("fire", fire_like_spec(), args, args));
}

TEST_CASE("witness validation rejects tuples breaking their own predicate") {
    Spec s = default_spec();
    s.pre_assume = [](const Value&, const Value& x) {
        return std::vector<AssumeTuple>{
            {Value::pair(x, x), std::nullopt, Resource::unit()}};
    };
    CHECK_THROWS_WITH_AS(
        validate_spec("broken", s, {Value::integer(1)}, {Value::integer(1)}),
        doctest::Contains("spec-witness-invalid: broken"), std::runtime_error);
}

TEST_CASE("strengthening is reflexive on the sampled order") {
    Pcm p = cannon_pcm();
    StrongerSample smp = small_sample();
    CHECK(stronger(p, default_spec(), default_spec(), smp));
    CHECK(stronger(p, fire_like_spec(), fire_like_spec(), smp));
}

TEST_CASE("identity spec beats a pre-restricted resource-free spec") {
    Pcm p = cannon_pcm();
    StrongerSample smp = small_sample();
    smp.ds = {std::nullopt};
    Spec even_pre = spec_of_hl(
        [](const Value& x) { return x.kind() == Value::Kind::Int && x.int_of() % 2 == 0; },
        [](const Value&) { return true; });
    CHECK(stronger(p, default_spec(), even_pre, smp));
    CHECK(!stronger(p, even_pre, default_spec(), smp));

    // the lifting leaves the measure open, so once the sample carries a
    // measured d the identity spec no longer covers the lifted one
    CHECK(!stronger(p, default_spec(), even_pre, small_sample()));
}

TEST_CASE("identity spec cannot stand in for a resource-transferring spec") {
    Pcm p = cannon_pcm();
    StrongerSample smp = small_sample();
    CHECK(!stronger(p, default_spec(), fire_like_spec(), smp));
}

TEST_CASE("table strengthening covers every declared function") {
    Pcm p = cannon_pcm();
    StrongerSample smp = small_sample();
    SpecTable strong;
    strong.entries["fire"] = fire_like_spec();
    SpecTable weak;
    weak.entries["fire"] = fire_like_spec();
    weak.entries["noop"] = default_spec();
    CHECK(table_stronger(p, strong, weak, smp));

    SpecTable mismatch;
    mismatch.entries["fire"] = default_spec();
    CHECK(!table_stronger(p, mismatch, weak, smp));
}
