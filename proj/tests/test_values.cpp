#include "doctest.h"

#include "abslog/value.hpp"

using namespace abslog;

TEST_CASE("upcast embeddings") {
    CHECK(to_any(ImpValue::vint(5)) == Value::integer(5));
    CHECK(to_any(ImpValue::vint(5)).int_of() == 5);

    std::vector<ImpValue> args = {ImpValue::vptr(Address::heap(0, 0)), ImpValue::vint(7)};
    Value packed = to_any(args);
    REQUIRE(packed.kind() == Value::Kind::List);
    REQUIRE(packed.items().size() == 2);
    CHECK(packed.items()[0].kind() == Value::Kind::Addr);
    CHECK(packed.items()[1] == Value::integer(7));

    CHECK(Value::unit().is_unit());
}

TEST_CASE("downcast round-trips and mismatches") {
    CHECK(as_int64(Value::integer(5)) == 5);
    CHECK(!as_int64(Value::str("x")).has_value());
    CHECK(!as_int64(Value::boolean(true)).has_value());

    Value lst = Value::list({Value::addr(Address::heap(0, 0)), Value::integer(7)});
    auto vs = as_val_list(lst);
    REQUIRE(vs.has_value());
    REQUIRE(vs->size() == 2);
    CHECK((*vs)[0].kind == ImpValue::Kind::Ptr);
    CHECK((*vs)[1] == ImpValue::vint(7));

    CHECK(!as_val_list(Value::list({Value::str("x")})).has_value());
    CHECK(!as_val(Value::tagged("other", Value::unit())).has_value());

    ImpValue u = ImpValue::undef();
    auto back = as_val(to_any(u));
    REQUIRE(back.has_value());
    CHECK(back->kind == ImpValue::Kind::Undef);

    CHECK(as_bool(Value::boolean(true)) == true);
    CHECK(!as_bool(Value::integer(1)).has_value());
    CHECK(as_text(Value::str("hi")) == std::string("hi"));
    CHECK(as_ord(Value::ord(Ordinal{1, 2})) == Ordinal{1, 2});
    auto ints = as_int_list(Value::list({Value::integer(1), Value::integer(2)}));
    REQUIRE(ints.has_value());
    CHECK(*ints == std::vector<int64_t>{1, 2});
}

TEST_CASE("unpack_args shapes") {
    Address p = Address::heap(3, 8);
    Value packed = to_any(std::vector<ImpValue>{ImpValue::vptr(p), ImpValue::vint(3)});

    auto ok = unpack_args(packed, {ArgKind::Ptr, ArgKind::Val});
    REQUIRE(ok.has_value());
    CHECK((*ok)[0] == ImpValue::vptr(p));
    CHECK((*ok)[1] == ImpValue::vint(3));

    Value short_list = to_any(std::vector<ImpValue>{ImpValue::vint(3)});
    CHECK(!unpack_args(short_list, {ArgKind::Ptr, ArgKind::Val}).has_value());

    auto empty = unpack_args(Value::list({}), {});
    REQUIRE(empty.has_value());
    CHECK(empty->empty());

    CHECK(!unpack_args(packed, {ArgKind::Int64, ArgKind::Val}).has_value());
    CHECK(!unpack_args(Value::integer(3), {}).has_value());

    Value with_undef = Value::list({to_any(ImpValue::undef())});
    auto vs = unpack_args(with_undef, {ArgKind::Val});
    REQUIRE(vs.has_value());
    CHECK((*vs)[0].kind == ImpValue::Kind::Undef);
    CHECK(!unpack_args(with_undef, {ArgKind::Int64}).has_value());
}

TEST_CASE("measure order") {
    CHECK(measure_lt(Measure{Ordinal{0, 1}}, Measure{Ordinal{0, 2}}));
    CHECK(measure_lt(Measure{}, Measure{}));
    CHECK(!measure_lt(Measure{Ordinal{1, 0}}, Measure{Ordinal{1, 0}}));
    CHECK(measure_lt(Measure{Ordinal{1, 5}}, Measure{}));
    CHECK(!measure_lt(Measure{}, Measure{Ordinal{9, 9}}));

    CHECK(ord_lt(Ordinal{0, 5}, Ordinal{1, 0}));
    CHECK(ord_lt(Ordinal{1, 0}, Ordinal{1, 1}));
    CHECK(!ord_lt(Ordinal{1, 1}, Ordinal{1, 1}));
    CHECK(!ord_lt(Ordinal{2, 0}, Ordinal{1, 9}));
}

TEST_CASE("ordinal descent terminates") {
    // omega*2 + 3 with finite cap 10: every chain through ord_pred is finite.
    Ordinal o{2, 3};
    int steps = 0;
    std::optional<Ordinal> cur = o;
    while (cur) {
        auto next = ord_pred(*cur, 10);
        if (next) CHECK(ord_lt(*next, *cur));
        cur = next;
        ++steps;
        REQUIRE(steps < 1000);
    }
    // chain: (2,3)..(2,0), (1,10)..(1,0), (0,10)..(0,0)
    CHECK(steps == 4 + 11 + 11);
}

TEST_CASE("ordinal descent exact length") {
    // (1,2) cap 3: (1,2)->(1,1)->(1,0)->(0,3)->(0,2)->(0,1)->(0,0)->none
    std::optional<Ordinal> cur = Ordinal{1, 2};
    std::vector<Ordinal> chain;
    while (cur) {
        chain.push_back(*cur);
        cur = ord_pred(*cur, 3);
    }
    REQUIRE(chain.size() == 7);
    CHECK(chain.front() == Ordinal{1, 2});
    CHECK(chain.back() == Ordinal{0, 0});
}

TEST_CASE("structural equality and total order") {
    Value a = Value::pair(Value::integer(1), Value::str("x"));
    Value b = Value::pair(Value::integer(1), Value::str("x"));
    CHECK(a == b);
    CHECK(!(a < b));
    CHECK(!(b < a));

    Value c = Value::pair(Value::integer(1), Value::str("y"));
    CHECK(a != c);
    CHECK((a < c) != (c < a));

    // order is transitive and consistent over a mixed sample
    std::vector<Value> sample = {
        Value::unit(),
        Value::boolean(false),
        Value::boolean(true),
        Value::integer(-1),
        Value::integer(3),
        Value::str("a"),
        Value::str("b"),
        Value::pair(Value::integer(0), Value::unit()),
        Value::list({}),
        Value::list({Value::integer(1)}),
        Value::none(),
        Value::some(Value::integer(2)),
        Value::addr(Address::heap(0, 8)),
        Value::addr(Address::fun("f")),
        Value::ord(Ordinal{0, 1}),
        Value::tagged("t", Value::integer(1)),
    };
    for (const auto& x : sample)
        for (const auto& y : sample) {
            int c1 = compare(x, y);
            int c2 = compare(y, x);
            CHECK(((c1 == 0 && c2 == 0) || (c1 < 0 && c2 > 0) || (c1 > 0 && c2 < 0)));
            CHECK((x == y) == (c1 == 0));
        }
}

TEST_CASE("function addresses have offset zero") {
    Address f = Address::fun("Mem.alloc");
    CHECK(f.is_fun);
    CHECK(f.off == 0);
    CHECK(Address::fun("f") == Address::fun("f"));
    CHECK(!(Address::fun("f") == Address::heap(0, 0)));
}

TEST_CASE("canonical json rendering") {
    CHECK(to_json(Value::integer(5)).dump() == "{\"int\":5}");
    CHECK(to_json(Value::addr(Address::heap(0, 8))).dump() ==
          "{\"addr\":{\"block\":0,\"off\":8}}");
    CHECK(to_json(Value::list({Value::integer(1), Value::integer(2)})).dump() ==
          "{\"list\":[{\"int\":1},{\"int\":2}]}");
    CHECK(to_json(Value::addr(Address::fun("f"))).dump() == "{\"addr\":{\"fn\":\"f\"}}");
    CHECK(to_json(Value::ord(Ordinal{1, 2})).dump() == "{\"ord\":{\"omega\":1,\"fin\":2}}");
}

TEST_CASE("json round-trip") {
    std::vector<Value> sample = {
        Value::unit(),
        Value::boolean(true),
        Value::integer(-42),
        Value::str("hello"),
        Value::pair(Value::integer(1), Value::none()),
        Value::list({Value::some(Value::integer(2)), Value::unit()}),
        Value::addr(Address::heap(3, 16)),
        Value::addr(Address::fun("Stack.push")),
        Value::ord(Ordinal{2, 0}),
        Value::tagged("undef", Value::unit()),
    };
    for (const auto& v : sample) {
        auto back = value_from_json(to_json(v));
        REQUIRE(back.has_value());
        CHECK(*back == v);
    }
    CHECK(!value_from_json(Json::parse("{\"what\":1}")).has_value());
    CHECK(!value_from_json(Json::parse("3")).has_value());
}

TEST_CASE("assoc lists stay sorted and canonical") {
    Value m = Value::list({});
    m = assoc_put(m, Value::str("b"), Value::integer(2));
    m = assoc_put(m, Value::str("a"), Value::integer(1));
    Value m2 = Value::list({});
    m2 = assoc_put(m2, Value::str("a"), Value::integer(1));
    m2 = assoc_put(m2, Value::str("b"), Value::integer(2));
    CHECK(m == m2);

    CHECK(assoc_find(m, Value::str("a")) == Value::integer(1));
    CHECK(!assoc_find(m, Value::str("z")).has_value());

    Value m3 = assoc_put(m, Value::str("a"), Value::integer(9));
    CHECK(assoc_find(m3, Value::str("a")) == Value::integer(9));
    CHECK(assoc_find(m, Value::str("a")) == Value::integer(1));

    Value m4 = assoc_erase(m3, Value::str("a"));
    CHECK(!assoc_find(m4, Value::str("a")).has_value());
    CHECK(assoc_find(m4, Value::str("b")) == Value::integer(2));
}
