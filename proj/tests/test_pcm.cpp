#include "doctest.h"

#include "abslog/pcm.hpp"

#include <stdexcept>

using namespace abslog;

namespace {

void check_laws(const Pcm& p) {
    CHECK(valid(Resource::unit()));
    for (const auto& a : p.universe) {
        CHECK(add(Resource::unit(), a) == a);
        CHECK(add(a, Resource::unit()) == a);
        for (const auto& b : p.universe) {
            CHECK(add(a, b) == add(b, a));
            if (valid(add(a, b))) CHECK(valid(a));
            for (const auto& c : p.universe)
                CHECK(add(add(a, b), c) == add(a, add(b, c)));
        }
    }
}

}  // namespace

TEST_CASE("pcm laws over the cannon universe") { check_laws(cannon_pcm()); }

TEST_CASE("pcm laws over the mem universe") { check_laws(mem_pcm()); }

TEST_CASE("cannon composition table") {
    CHECK(add(Resource::unit(), cannon("Ball")) == cannon("Ball"));
    CHECK(add(cannon("Ball"), cannon("Ready")) == cannon("Loaded"));
    CHECK(add(cannon("Ready"), cannon("Ball")) == cannon("Loaded"));
    CHECK(add(cannon("Ball"), cannon("Ball")).is_bad());
    CHECK(!valid(add(cannon("Ball"), cannon("Ball"))));
    CHECK(add(cannon("Fired"), cannon("Ball")).is_bad());
    CHECK(add(cannon("Loaded"), cannon("Ready")).is_bad());
    for (const auto& sym : {"Ball", "Ready", "Fired", "Loaded"})
        CHECK(valid(cannon(sym)));
    CHECK(!valid(Resource::bad()));
}

TEST_CASE("cannon frame-preserving updates") {
    Pcm p = cannon_pcm();
    CHECK(fpu(p, add(cannon("Ready"), cannon("Ball")), cannon("Fired")));
    CHECK(!fpu(p, cannon("Ready"), add(cannon("Ball"), cannon("Ball"))));
    for (const auto& a : p.universe) CHECK(fpu(p, a, a));
    // Bad is the source of every update: no frame keeps it valid.
    for (const auto& r : p.universe) CHECK(fpu(p, Resource::bad(), r));

    // fpu is transitive over the whole universe.
    for (const auto& a : p.universe)
        for (const auto& b : p.universe)
            for (const auto& c : p.universe)
                if (fpu(p, a, b) && fpu(p, b, c)) CHECK(fpu(p, a, c));
}

TEST_CASE("update modality") {
    Pcm p = cannon_pcm();
    Resource loaded = cannon("Loaded");
    CHECK(upd_modality(p, loaded, [&](const Resource& r) { return r == loaded; }));
    CHECK(upd_modality(p, loaded, [](const Resource& r) { return r == cannon("Fired"); }));
    // Ready alone cannot reach Fired: the frame holding the Ball observes it.
    CHECK(!upd_modality(p, cannon("Ready"),
                        [](const Resource& r) { return r == cannon("Fired"); }));
    CHECK(!upd_modality(p, Resource::unit(),
                        [](const Resource& r) { return r == cannon("Ball"); }));
}

TEST_CASE("decision procedures need a universe") {
    Pcm p;
    p.name = "empty";
    CHECK_THROWS_AS(fpu(p, Resource::unit(), Resource::unit()), std::runtime_error);
    CHECK_THROWS_AS(upd_modality(p, Resource::unit(), [](const Resource&) { return true; }),
                    std::runtime_error);
}

TEST_CASE("exclusive and agreement combinators") {
    Resource ea = Resource::excl(Value::integer(1));
    Resource eb = Resource::excl(Value::integer(2));
    CHECK(add(ea, eb).is_bad());
    CHECK(add(ea, ea).is_bad());
    CHECK(valid(ea));

    Resource aga = Resource::ag({Value::integer(1)});
    CHECK(add(aga, aga) == aga);
    CHECK(valid(add(aga, aga)));
    Resource agb = Resource::ag({Value::integer(2)});
    CHECK(!valid(add(aga, agb)));
    CHECK(!add(aga, agb).is_bad());
    CHECK(Resource::ag({}) == Resource::unit());
}

TEST_CASE("product and option combinators") {
    Resource a1 = Resource::excl(Value::integer(1));
    Resource b1 = Resource::ag({Value::str("x")});
    Resource p1 = Resource::prod(a1, Resource::unit());
    Resource p2 = Resource::prod(Resource::unit(), b1);
    CHECK(add(p1, p2) == Resource::prod(a1, b1));
    CHECK(Resource::prod(Resource::unit(), Resource::unit()) == Resource::unit());

    Resource o1 = Resource::opt(b1);
    CHECK(add(o1, o1) == Resource::opt(add(b1, b1)));
    CHECK(valid(o1));
    CHECK(!valid(add(o1, Resource::opt(Resource::ag({Value::str("y")})))));
}

TEST_CASE("auth validity is fragment inclusion") {
    Resource full = Resource::finmap({{cell_key(0, 0), Resource::excl(Value::integer(1))}});
    CHECK(valid(Resource::auth_full(Resource::unit())));
    CHECK(valid(Resource::auth(full, full)));
    CHECK(valid(Resource::auth(full, Resource::unit())));
    // fragment the authority does not cover
    CHECK(!valid(Resource::auth(Resource::unit(), full)));
    CHECK(add(Resource::auth_full(Resource::unit()), Resource::auth_full(full)).is_bad());
    CHECK(add(Resource::auth_full(full), Resource::auth_frag(full)) ==
          Resource::auth(full, full));
}

TEST_CASE("points-to footprints") {
    Address p = Address::heap(0, 0);
    std::vector<ImpValue> vals = {ImpValue::vint(0), ImpValue::vint(1)};

    CHECK(points_to(p, {}) == Resource::unit());

    // exclusive cell collision
    CHECK(add(points_to(p, {vals[0]}), points_to(p, {vals[1]})).is_bad());
    CHECK(add(points_to(p, {vals[0]}), points_to(p, {vals[0]})).is_bad());

    // cons law over every block, start offset, and value list up to length 4
    for (int64_t blk : {0, 1})
        for (int64_t off : {0, 8})
            for (int len = 1; len <= 4; ++len) {
                int combos = 1;
                for (int i = 0; i < len; ++i) combos *= 2;
                for (int pick = 0; pick < combos; ++pick) {
                    std::vector<ImpValue> vs;
                    for (int i = 0; i < len; ++i) vs.push_back(vals[(pick >> i) & 1]);
                    Address head = Address::heap(blk, off);
                    Address tail = Address::heap(blk, off + 8);
                    std::vector<ImpValue> rest(vs.begin() + 1, vs.end());
                    CHECK(points_to(head, vs) ==
                          add(points_to(head, {vs[0]}), points_to(tail, rest)));
                }
            }
}

TEST_CASE("resource inclusion") {
    Resource exl = Resource::excl(Value::integer(1));
    Resource m1 = Resource::finmap({{cell_key(0, 0), exl}});
    Resource m2 = Resource::finmap(
        {{cell_key(0, 0), exl}, {cell_key(0, 8), Resource::excl(Value::integer(2))}});
    CHECK(res_le(Resource::unit(), m2));
    CHECK(res_le(m1, m2));
    CHECK(!res_le(m2, m1));
    CHECK(res_le(Resource::ag({Value::integer(1)}),
                 Resource::ag({Value::integer(1), Value::integer(2)})));
    CHECK(res_le(cannon("Ball"), cannon("Loaded")));
    CHECK(res_le(cannon("Ready"), cannon("Loaded")));
    CHECK(!res_le(cannon("Fired"), cannon("Loaded")));
}

TEST_CASE("resource value encoding round-trips") {
    std::vector<Resource> sample = {
        Resource::unit(),
        Resource::bad(),
        Resource::excl(Value::integer(7)),
        Resource::ag({Value::list({Value::integer(1)})}),
        Resource::auth_full(Resource::unit()),
        Resource::auth(Resource::finmap({{cell_key(0, 0), Resource::excl(Value::integer(1))}}),
                       Resource::unit()),
        points_to(Address::heap(1, 8), {ImpValue::vint(3), ImpValue::undef()}),
        Resource::prod(cannon("Ball"), Resource::unit()),
        Resource::opt(Resource::ag({Value::integer(4)})),
        cannon("Loaded"),
    };
    for (const auto& r : sample) {
        auto back = decode_resource(encode_resource(r));
        REQUIRE(back.has_value());
        CHECK(*back == r);
    }
    CHECK(!decode_resource(Value::integer(3)).has_value());
}

TEST_CASE("mem universe exercises fpu reflexivity and transitivity on a sample") {
    Pcm p = mem_pcm();
    REQUIRE(p.universe.size() > 20);
    for (const auto& a : p.universe) CHECK(fpu(p, a, a));

    // the allocation-shaped update: fresh authority gains a cell plus its fragment
    Resource before = Resource::auth_full(Resource::unit());
    Resource cellmap =
        Resource::finmap({{cell_key(0, 0), Resource::excl(Value::integer(1))}});
    Resource after = Resource::auth(cellmap, cellmap);
    CHECK(fpu(p, before, after));

    // stealing a cell the frame may already own is not frame-preserving
    CHECK(!fpu(p, Resource::unit(), Resource::auth_frag(cellmap)));
}

TEST_CASE("show_resource is stable for report rendering") {
    CHECK(show_resource(Resource::unit()) == "unit");
    CHECK(show_resource(cannon("Ball")) == "Ball");
    CHECK(show_resource(Resource::excl(Value::integer(1))) == "ex({\"int\":1})");
}
