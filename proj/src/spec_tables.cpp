#include "abslog/spec_tables.hpp"

#include <algorithm>
#include <optional>
#include <utility>

namespace abslog {

namespace {

Value iv(int64_t i) { return Value::integer(i); }

bool is_heap_ptr(const Value& v) {
    return v.kind() == Value::Kind::Addr && !v.addr_of().is_fun;
}

// Authority bookkeeping for the allocator-style tables. The module resource
// is Auth(full, frag) with full a finite map from cell or handle keys to
// per-key resources. A plain unit module resource reads as an empty
// authority so registration-time validation can run the exit enumerators.

struct AuthView {
    bool ok = false;
    std::vector<std::pair<Value, Resource>> entries;
    Resource frag_side = Resource::unit();
};

AuthView auth_view(const Resource& rm) {
    AuthView v;
    if (rm.is_unit()) {
        v.ok = true;
        return v;
    }
    if (rm.kind() != Resource::Kind::Auth || !rm.has_full()) return v;
    const Resource& full = rm.full();
    if (full.kind() == Resource::Kind::FinMap) {
        v.entries = full.entries();
    } else if (!full.is_unit()) {
        return v;
    }
    v.frag_side = rm.frag();
    v.ok = true;
    return v;
}

Resource rebuild_auth(const AuthView& v, std::vector<std::pair<Value, Resource>> es) {
    Resource full = es.empty() ? Resource::unit() : Resource::finmap(std::move(es));
    return Resource::auth(full, v.frag_side);
}

const Resource* entry_at(const AuthView& v, const Value& k) {
    for (const auto& e : v.entries)
        if (e.first == k) return &e.second;
    return nullptr;
}

std::vector<std::pair<Value, Resource>> put_entry(
    std::vector<std::pair<Value, Resource>> es, const Value& k, Resource r) {
    for (auto& e : es)
        if (e.first == k) {
            e.second = std::move(r);
            return es;
        }
    es.emplace_back(k, std::move(r));
    return es;
}

std::vector<std::pair<Value, Resource>> drop_entry(
    std::vector<std::pair<Value, Resource>> es, const Value& k) {
    es.erase(std::remove_if(es.begin(), es.end(),
                            [&](const auto& e) { return e.first == k; }),
             es.end());
    return es;
}

std::vector<std::vector<ImpValue>> payload_tuples(const std::vector<ImpValue>& pool,
                                                  int64_t n) {
    std::vector<std::vector<ImpValue>> out = {{}};
    for (int64_t i = 0; i < n; ++i) {
        std::vector<std::vector<ImpValue>> next;
        next.reserve(out.size() * pool.size());
        for (const auto& t : out)
            for (const ImpValue& v : pool) {
                auto t2 = t;
                t2.push_back(v);
                next.push_back(std::move(t2));
            }
        out = std::move(next);
    }
    return out;
}

// res is exactly a points-to fragment of n consecutive cells at p, with
// every payload a decodable machine value. Extract-and-rerender keeps the
// check canonicalization-proof.
bool block_shape(const Resource& res, const Address& p, int64_t n) {
    if (p.is_fun) return false;
    if (n == 0) return res.is_unit();
    if (res.kind() != Resource::Kind::Auth || res.has_full()) return false;
    const Resource& f = res.frag();
    if (f.kind() != Resource::Kind::FinMap) return false;
    if (static_cast<int64_t>(f.entries().size()) != n) return false;
    std::vector<ImpValue> vs;
    vs.reserve(n);
    for (int64_t i = 0; i < n; ++i) {
        const Value k = cell_key(p.block, p.off + 8 * i);
        const Resource* cell = nullptr;
        for (const auto& e : f.entries())
            if (e.first == k) cell = &e.second;
        if (!cell || cell->kind() != Resource::Kind::Excl) return false;
        auto dv = as_val(cell->excl_of());
        if (!dv) return false;
        vs.push_back(*dv);
    }
    return res == points_to(p, vs);
}

std::optional<ImpValue> single_cell(const Resource& res, const Address& p) {
    if (!block_shape(res, p, 1)) return std::nullopt;
    auto dv = as_val(res.frag().entries()[0].second.excl_of());
    return dv;
}

Measure small_measure() { return Measure{Ordinal{0, 0}}; }

bool is_arg_list(const Value& x, const std::vector<Value>& want) {
    return x == Value::list(want);
}

}  // namespace

// ---------------------------------------------------------------------------
// hoare

SpecTable hoare_specs() {
    auto top = [](const Value&) { return true; };
    SpecTable t;
    t.entries["main"] = spec_of_hl(top, top);
    t.entries["f"] = spec_of_hl(
        [](const Value& x) {
            if (x.kind() != Value::Kind::List || x.items().size() != 1) return false;
            const Value& n = x.items()[0];
            return n.kind() == Value::Kind::Int && ((n.int_of() % 4) + 4) % 4 == 0;
        },
        [](const Value& r) {
            return r.kind() == Value::Kind::Int && ((r.int_of() % 4) + 4) % 4 == 1;
        });
    // mirror enumerators only emit in-predicate tuples for in-predicate
    // samples, so the witnesses here have to satisfy the contract
    validate_spec("main", t.entries["main"], {Value::unit(), Value::list({})},
                  {Value::unit(), iv(0)});
    validate_spec("f", t.entries["f"], {Value::list({iv(40)}), Value::list({iv(0)})},
                  {iv(441), iv(1)});
    return t;
}

// ---------------------------------------------------------------------------
// cannon

namespace {

Spec cannon_fire_spec() {
    Spec s;
    s.cond = [](const Value&) {
        SpecCase c;
        c.pre = [](const Value& x, const Value& xa, const Measure&,
                   const Resource& res) {
            return x.is_unit() && xa.is_unit() && res == cannon("Ball");
        };
        c.post = [](const Value& r, const Value& ra, const Resource& res) {
            return r == ra && r == Value::integer(1) && res.is_unit();
        };
        return c;
    };
    s.pre_assume = [](const Value&, const Value& x) {
        std::vector<AssumeTuple> out;
        if (x.is_unit()) out.push_back({Value::unit(), std::nullopt, cannon("Ball")});
        return out;
    };
    s.pre_guar = [](const Value&, const Value& xa, const Resource& res_m) {
        std::vector<GuarTuple> out;
        if (xa.is_unit())
            out.push_back({Value::unit(), std::nullopt, cannon("Ball"),
                           Resource::unit(), res_m});
        return out;
    };
    s.post_assume = [](const Value&, const Value& r) {
        std::vector<AssumeTuple> out;
        if (r == iv(1)) out.push_back({iv(1), std::nullopt, Resource::unit()});
        return out;
    };
    s.post_guar = [](const Value&, const Value& ra, const Resource&) {
        std::vector<GuarTuple> out;
        // retiring the shot: the module resource drops from Ready to Fired
        if (ra == iv(1))
            out.push_back({iv(1), std::nullopt, Resource::unit(), Resource::unit(),
                           cannon("Fired")});
        return out;
    };
    s.ra_candidates = [](const Value&, const Value&) {
        return std::vector<Value>{iv(1)};
    };
    return s;
}

Spec cannon_main_spec() {
    Spec s;
    s.cond = [](const Value&) {
        SpecCase c;
        c.pre = [](const Value& x, const Value& xa, const Measure&,
                   const Resource& res) {
            return x.is_unit() && xa.is_unit() && res == cannon("Ball");
        };
        c.post = [](const Value& r, const Value& ra, const Resource& res) {
            return r == ra && res.is_unit();
        };
        return c;
    };
    s.pre_assume = [](const Value&, const Value& x) {
        std::vector<AssumeTuple> out;
        if (x.is_unit()) out.push_back({Value::unit(), std::nullopt, cannon("Ball")});
        return out;
    };
    s.pre_guar = [](const Value&, const Value& xa, const Resource& res_m) {
        std::vector<GuarTuple> out;
        if (xa.is_unit())
            out.push_back({Value::unit(), std::nullopt, cannon("Ball"),
                           Resource::unit(), res_m});
        return out;
    };
    s.post_assume = [](const Value&, const Value& r) {
        return std::vector<AssumeTuple>{{r, std::nullopt, Resource::unit()}};
    };
    s.post_guar = [](const Value&, const Value& ra, const Resource& res_m) {
        return std::vector<GuarTuple>{
            {ra, std::nullopt, Resource::unit(), Resource::unit(), res_m}};
    };
    return s;
}

}  // namespace

SpecTable cannon_specs() {
    SpecTable t;
    t.entries["fire"] = cannon_fire_spec();
    t.entries["main"] = cannon_main_spec();
    validate_spec("fire", t.entries["fire"], {Value::unit(), iv(7)}, {iv(1), iv(0)});
    validate_spec("main", t.entries["main"], {Value::unit(), iv(7)}, {iv(1), iv(0)});
    return t;
}

Resource cannon_sigma() { return cannon("Ready"); }

// ---------------------------------------------------------------------------
// mem

namespace {

Spec mem_alloc_spec(const MemSamples& w, const std::vector<ImpValue>& pay,
                    const std::vector<Address>& starts) {
    Spec s;
    s.a_domain.clear();
    for (int64_t n : w.lengths) s.a_domain.push_back(iv(n));
    s.cond = [](const Value& a) {
        const int64_t n = a.int_of();
        SpecCase c;
        c.pre = [n](const Value& x, const Value&, const Measure& d,
                    const Resource& res) {
            return d.has_value() && is_arg_list(x, {iv(n)}) && n >= 0 &&
                   res.is_unit();
        };
        c.post = [n](const Value& r, const Value&, const Resource& res) {
            return is_heap_ptr(r) && block_shape(res, r.addr_of(), n);
        };
        return c;
    };
    s.pre_assume = [](const Value& a, const Value& x) {
        const int64_t n = a.int_of();
        std::vector<AssumeTuple> out;
        if (n >= 0 && is_arg_list(x, {iv(n)}))
            out.push_back({x, small_measure(), Resource::unit()});
        return out;
    };
    s.pre_guar = [](const Value& a, const Value&, const Resource& res_m) {
        const int64_t n = a.int_of();
        std::vector<GuarTuple> out;
        if (n >= 0)
            out.push_back({Value::list({iv(n)}), small_measure(), Resource::unit(),
                           Resource::unit(), res_m});
        return out;
    };
    s.post_assume = [pay](const Value& a, const Value& r) {
        const int64_t n = a.int_of();
        std::vector<AssumeTuple> out;
        if (!is_heap_ptr(r)) return out;
        for (const auto& vs : payload_tuples(pay, n))
            out.push_back({r, std::nullopt, points_to(r.addr_of(), vs)});
        return out;
    };
    s.post_guar = [pay, starts](const Value& a, const Value&, const Resource& res_m) {
        const int64_t n = a.int_of();
        std::vector<GuarTuple> out;
        auto v = auth_view(res_m);
        if (!v.ok) return out;
        for (const Address& p : starts) {
            bool taken = false;
            for (int64_t i = 0; i < n; ++i)
                if (entry_at(v, cell_key(p.block, p.off + 8 * i))) taken = true;
            if (taken) continue;
            for (const auto& vs : payload_tuples(pay, n)) {
                auto es = v.entries;
                for (int64_t i = 0; i < n; ++i)
                    es = put_entry(std::move(es), cell_key(p.block, p.off + 8 * i),
                                   Resource::excl(to_any(vs[i])));
                out.push_back({Value::addr(p), std::nullopt, points_to(p, vs),
                               Resource::unit(), rebuild_auth(v, std::move(es))});
            }
        }
        return out;
    };
    s.ra_candidates = [starts](const Value&, const Value&) {
        std::vector<Value> out;
        for (const Address& p : starts) out.push_back(Value::addr(p));
        return out;
    };
    return s;
}

Spec mem_free_spec(const std::vector<ImpValue>& pay,
                   const std::vector<Address>& ptrs) {
    Spec s;
    s.a_domain.clear();
    for (const Address& p : ptrs)
        for (const ImpValue& v : pay)
            s.a_domain.push_back(Value::pair(Value::addr(p), to_any(v)));
    s.cond = [](const Value& a) {
        const Address p = a.first().addr_of();
        const ImpValue v = *as_val(a.second());
        SpecCase c;
        c.pre = [p, v](const Value& x, const Value&, const Measure& d,
                       const Resource& res) {
            return d.has_value() && is_arg_list(x, {Value::addr(p)}) &&
                   res == points_to(p, {v});
        };
        c.post = [](const Value& r, const Value&, const Resource& res) {
            return as_val(r).has_value() && res.is_unit();
        };
        return c;
    };
    s.pre_assume = [](const Value& a, const Value& x) {
        const Address p = a.first().addr_of();
        const ImpValue v = *as_val(a.second());
        std::vector<AssumeTuple> out;
        if (is_arg_list(x, {Value::addr(p)}))
            out.push_back({x, small_measure(), points_to(p, {v})});
        return out;
    };
    s.pre_guar = [](const Value& a, const Value&, const Resource& res_m) {
        const Address p = a.first().addr_of();
        const ImpValue v = *as_val(a.second());
        return std::vector<GuarTuple>{{Value::list({Value::addr(p)}), small_measure(),
                                       points_to(p, {v}), Resource::unit(), res_m}};
    };
    s.post_assume = [](const Value&, const Value& r) {
        std::vector<AssumeTuple> out;
        if (as_val(r)) out.push_back({r, std::nullopt, Resource::unit()});
        return out;
    };
    s.post_guar = [](const Value& a, const Value&, const Resource& res_m) {
        const Address p = a.first().addr_of();
        const ImpValue v = *as_val(a.second());
        std::vector<GuarTuple> out;
        auto view = auth_view(res_m);
        if (!view.ok) return out;
        const Value k = cell_key(p.block, p.off);
        const Resource* cell = entry_at(view, k);
        if (!cell || *cell != Resource::excl(to_any(v))) return out;
        out.push_back({iv(0), std::nullopt, Resource::unit(), Resource::unit(),
                       rebuild_auth(view, drop_entry(view.entries, k))});
        return out;
    };
    s.ra_candidates = [](const Value&, const Value&) {
        return std::vector<Value>{iv(0)};
    };
    return s;
}

Spec mem_load_spec(const std::vector<ImpValue>& pay,
                   const std::vector<Address>& ptrs) {
    Spec s;
    s.a_domain.clear();
    for (const Address& p : ptrs)
        for (const ImpValue& v : pay)
            s.a_domain.push_back(Value::pair(Value::addr(p), to_any(v)));
    s.cond = [](const Value& a) {
        const Address p = a.first().addr_of();
        const ImpValue v = *as_val(a.second());
        SpecCase c;
        c.pre = [p, v](const Value& x, const Value&, const Measure& d,
                       const Resource& res) {
            return d.has_value() && is_arg_list(x, {Value::addr(p)}) &&
                   res == points_to(p, {v});
        };
        c.post = [p, v](const Value& r, const Value&, const Resource& res) {
            return r == to_any(v) && res == points_to(p, {v});
        };
        return c;
    };
    s.pre_assume = [](const Value& a, const Value& x) {
        const Address p = a.first().addr_of();
        const ImpValue v = *as_val(a.second());
        std::vector<AssumeTuple> out;
        if (is_arg_list(x, {Value::addr(p)}))
            out.push_back({x, small_measure(), points_to(p, {v})});
        return out;
    };
    s.pre_guar = [](const Value& a, const Value&, const Resource& res_m) {
        const Address p = a.first().addr_of();
        const ImpValue v = *as_val(a.second());
        return std::vector<GuarTuple>{{Value::list({Value::addr(p)}), small_measure(),
                                       points_to(p, {v}), Resource::unit(), res_m}};
    };
    s.post_assume = [](const Value& a, const Value& r) {
        const Address p = a.first().addr_of();
        const ImpValue v = *as_val(a.second());
        std::vector<AssumeTuple> out;
        if (r == to_any(v)) out.push_back({r, std::nullopt, points_to(p, {v})});
        return out;
    };
    s.post_guar = [](const Value& a, const Value&, const Resource& res_m) {
        const Address p = a.first().addr_of();
        const ImpValue v = *as_val(a.second());
        std::vector<GuarTuple> out;
        auto view = auth_view(res_m);
        if (!view.ok) return out;
        const Resource* cell = entry_at(view, cell_key(p.block, p.off));
        if (!cell || *cell != Resource::excl(to_any(v))) return out;
        out.push_back({to_any(v), std::nullopt, points_to(p, {v}), Resource::unit(),
                       res_m});
        return out;
    };
    s.ra_candidates = [pay](const Value&, const Value&) {
        std::vector<Value> out;
        for (const ImpValue& v : pay) out.push_back(to_any(v));
        return out;
    };
    return s;
}

Spec mem_store_spec(const MemSamples& w, const std::vector<ImpValue>& pay,
                    const std::vector<Address>& ptrs) {
    Spec s;
    s.a_domain.clear();
    for (const Address& p : ptrs)
        for (int64_t nv : w.cell_values)
            s.a_domain.push_back(Value::pair(Value::addr(p), iv(nv)));
    s.cond = [](const Value& a) {
        const Address p = a.first().addr_of();
        const ImpValue nv = *as_val(a.second());
        SpecCase c;
        c.pre = [p, nv](const Value& x, const Value&, const Measure& d,
                        const Resource& res) {
            return d.has_value() && is_arg_list(x, {Value::addr(p), to_any(nv)}) &&
                   single_cell(res, p).has_value();
        };
        c.post = [p, nv](const Value& r, const Value&, const Resource& res) {
            return as_val(r).has_value() && res == points_to(p, {nv});
        };
        return c;
    };
    s.pre_assume = [pay](const Value& a, const Value& x) {
        const Address p = a.first().addr_of();
        const ImpValue nv = *as_val(a.second());
        std::vector<AssumeTuple> out;
        if (!is_arg_list(x, {Value::addr(p), to_any(nv)})) return out;
        for (const ImpValue& old : pay)
            out.push_back({x, small_measure(), points_to(p, {old})});
        return out;
    };
    s.pre_guar = [pay](const Value& a, const Value&, const Resource& res_m) {
        const Address p = a.first().addr_of();
        const ImpValue nv = *as_val(a.second());
        std::vector<GuarTuple> out;
        for (const ImpValue& old : pay)
            out.push_back({Value::list({Value::addr(p), to_any(nv)}), small_measure(),
                           points_to(p, {old}), Resource::unit(), res_m});
        return out;
    };
    s.post_assume = [](const Value& a, const Value& r) {
        const Address p = a.first().addr_of();
        const ImpValue nv = *as_val(a.second());
        std::vector<AssumeTuple> out;
        if (as_val(r)) out.push_back({r, std::nullopt, points_to(p, {nv})});
        return out;
    };
    s.post_guar = [](const Value& a, const Value&, const Resource& res_m) {
        const Address p = a.first().addr_of();
        const ImpValue nv = *as_val(a.second());
        std::vector<GuarTuple> out;
        auto view = auth_view(res_m);
        if (!view.ok) return out;
        const Value k = cell_key(p.block, p.off);
        if (!entry_at(view, k)) return out;
        out.push_back({iv(0), std::nullopt, points_to(p, {nv}), Resource::unit(),
                       rebuild_auth(view, put_entry(view.entries, k,
                                                    Resource::excl(to_any(nv))))});
        return out;
    };
    s.ra_candidates = [](const Value&, const Value&) {
        return std::vector<Value>{iv(0)};
    };
    return s;
}

}  // namespace

SpecTable mem_specs(const MemSamples& w) {
    std::vector<ImpValue> pay;
    for (int64_t c : w.cell_values) pay.push_back(ImpValue::vint(c));
    pay.push_back(ImpValue::undef());

    std::vector<Address> ptrs;
    for (int64_t b : w.blocks)
        for (int64_t o : w.offsets) ptrs.push_back(Address::heap(b, o));
    std::vector<Address> starts;
    for (int64_t b : w.blocks) starts.push_back(Address::heap(b, 0));

    SpecTable t;
    t.entries["alloc"] = mem_alloc_spec(w, pay, starts);
    t.entries["free"] = mem_free_spec(pay, ptrs);
    t.entries["load"] = mem_load_spec(pay, ptrs);
    t.entries["store"] = mem_store_spec(w, pay, ptrs);

    const Value p0 = Value::addr(Address::heap(0, 0));
    const std::vector<Value> args = {Value::list({iv(1)}), Value::list({p0}),
                                     Value::list({p0, iv(1)}), iv(9)};
    const std::vector<Value> rets = {iv(0), iv(1), p0, to_any(ImpValue::undef())};
    for (const auto& e : t.entries) validate_spec(e.first, e.second, args, rets);
    return t;
}

Resource mem_sigma() { return Resource::auth_full(Resource::unit()); }

// ---------------------------------------------------------------------------
// stacks

std::vector<Value> stack_handles(const StackSamples& w) {
    std::vector<Value> out;
    for (int64_t b : w.handle_blocks) out.push_back(Value::addr(Address::heap(b, 0)));
    return out;
}

std::vector<Value> stack_lists(const StackSamples& w) {
    std::vector<std::vector<Value>> grow = {{}};
    std::vector<Value> out = {Value::list({})};
    for (int64_t len = 1; len <= w.max_len; ++len) {
        std::vector<std::vector<Value>> next;
        for (const auto& t : grow)
            for (int64_t e : w.elems) {
                auto t2 = t;
                t2.push_back(iv(e));
                out.push_back(Value::list(t2));
                next.push_back(std::move(t2));
            }
        grow = std::move(next);
    }
    return out;
}

SpecTable stack1_specs() {
    SpecTable t;
    t.entries["new"] = default_spec();
    t.entries["push"] = default_spec();
    t.entries["pop"] = default_spec();
    return t;
}

Resource is_stack(const Value& h, const Value& items) {
    return Resource::auth_frag(Resource::finmap({{h, Resource::excl(items)}}));
}

namespace {

Value cons_front(int64_t v, const Value& items) {
    std::vector<Value> xs = {iv(v)};
    for (const Value& e : items.items()) xs.push_back(e);
    return Value::list(std::move(xs));
}

Value head_or_zero(const Value& items) {
    return items.items().empty() ? iv(0) : items.items()[0];
}

Value tail_of(const Value& items) {
    std::vector<Value> xs;
    for (size_t i = 1; i < items.items().size(); ++i) xs.push_back(items.items()[i]);
    return Value::list(std::move(xs));
}

Spec stack2a_new_spec(const std::vector<Value>& handles) {
    Spec s;
    s.cond = [](const Value&) {
        SpecCase c;
        c.pre = [](const Value& x, const Value&, const Measure& d,
                   const Resource& res) {
            return d.has_value() && x == Value::list({}) && res.is_unit();
        };
        c.post = [](const Value& r, const Value&, const Resource& res) {
            return is_heap_ptr(r) && res == is_stack(r, Value::list({}));
        };
        return c;
    };
    s.pre_assume = [](const Value&, const Value& x) {
        std::vector<AssumeTuple> out;
        if (x == Value::list({}))
            out.push_back({x, small_measure(), Resource::unit()});
        return out;
    };
    s.pre_guar = [](const Value&, const Value&, const Resource& res_m) {
        return std::vector<GuarTuple>{{Value::list({}), small_measure(),
                                       Resource::unit(), Resource::unit(), res_m}};
    };
    s.post_assume = [](const Value&, const Value& r) {
        std::vector<AssumeTuple> out;
        if (is_heap_ptr(r))
            out.push_back({r, std::nullopt, is_stack(r, Value::list({}))});
        return out;
    };
    s.post_guar = [handles](const Value&, const Value&, const Resource& res_m) {
        std::vector<GuarTuple> out;
        auto view = auth_view(res_m);
        if (!view.ok) return out;
        for (const Value& h : handles) {
            if (entry_at(view, h)) continue;
            out.push_back({h, std::nullopt, is_stack(h, Value::list({})),
                           Resource::unit(),
                           rebuild_auth(view, put_entry(view.entries, h,
                                                        Resource::excl(
                                                            Value::list({}))))});
        }
        return out;
    };
    s.ra_candidates = [handles](const Value&, const Value&) { return handles; };
    return s;
}

Spec stack2a_push_spec(const StackSamples& w, const std::vector<Value>& handles,
                       const std::vector<Value>& lists) {
    Spec s;
    s.a_domain.clear();
    for (const Value& h : handles)
        for (int64_t e : w.elems)
            for (const Value& l : lists)
                s.a_domain.push_back(Value::list({h, iv(e), l}));
    s.cond = [](const Value& a) {
        const Value h = a.items()[0];
        const int64_t v = a.items()[1].int_of();
        const Value items = a.items()[2];
        SpecCase c;
        c.pre = [h, v, items](const Value& x, const Value&, const Measure& d,
                              const Resource& res) {
            return d.has_value() && x == Value::list({h, iv(v)}) &&
                   res == is_stack(h, items);
        };
        c.post = [h, v, items](const Value& r, const Value&, const Resource& res) {
            return as_val(r).has_value() && res == is_stack(h, cons_front(v, items));
        };
        return c;
    };
    s.pre_assume = [](const Value& a, const Value& x) {
        const Value h = a.items()[0];
        const int64_t v = a.items()[1].int_of();
        const Value items = a.items()[2];
        std::vector<AssumeTuple> out;
        if (x == Value::list({h, iv(v)}))
            out.push_back({x, small_measure(), is_stack(h, items)});
        return out;
    };
    s.pre_guar = [](const Value& a, const Value&, const Resource& res_m) {
        const Value h = a.items()[0];
        const int64_t v = a.items()[1].int_of();
        const Value items = a.items()[2];
        return std::vector<GuarTuple>{{Value::list({h, iv(v)}), small_measure(),
                                       is_stack(h, items), Resource::unit(), res_m}};
    };
    s.post_assume = [](const Value& a, const Value& r) {
        const Value h = a.items()[0];
        const int64_t v = a.items()[1].int_of();
        const Value items = a.items()[2];
        std::vector<AssumeTuple> out;
        if (as_val(r))
            out.push_back({r, std::nullopt, is_stack(h, cons_front(v, items))});
        return out;
    };
    s.post_guar = [](const Value& a, const Value&, const Resource& res_m) {
        const Value h = a.items()[0];
        const int64_t v = a.items()[1].int_of();
        const Value items = a.items()[2];
        std::vector<GuarTuple> out;
        auto view = auth_view(res_m);
        if (!view.ok) return out;
        const Resource* cur = entry_at(view, h);
        if (!cur || *cur != Resource::excl(items)) return out;
        const Value grown = cons_front(v, items);
        out.push_back({iv(0), std::nullopt, is_stack(h, grown), Resource::unit(),
                       rebuild_auth(view, put_entry(view.entries, h,
                                                    Resource::excl(grown)))});
        return out;
    };
    s.ra_candidates = [](const Value&, const Value&) {
        return std::vector<Value>{iv(0)};
    };
    return s;
}

Spec stack2a_pop_spec(const std::vector<Value>& handles,
                      const std::vector<Value>& lists) {
    Spec s;
    s.a_domain.clear();
    for (const Value& h : handles)
        for (const Value& l : lists) s.a_domain.push_back(Value::pair(h, l));
    s.cond = [](const Value& a) {
        const Value h = a.first();
        const Value items = a.second();
        SpecCase c;
        c.pre = [h, items](const Value& x, const Value&, const Measure& d,
                           const Resource& res) {
            return d.has_value() && x == Value::list({h}) &&
                   res == is_stack(h, items);
        };
        c.post = [h, items](const Value& r, const Value&, const Resource& res) {
            return r == head_or_zero(items) && res == is_stack(h, tail_of(items));
        };
        return c;
    };
    s.pre_assume = [](const Value& a, const Value& x) {
        const Value h = a.first();
        const Value items = a.second();
        std::vector<AssumeTuple> out;
        if (x == Value::list({h}))
            out.push_back({x, small_measure(), is_stack(h, items)});
        return out;
    };
    s.pre_guar = [](const Value& a, const Value&, const Resource& res_m) {
        const Value h = a.first();
        const Value items = a.second();
        return std::vector<GuarTuple>{{Value::list({h}), small_measure(),
                                       is_stack(h, items), Resource::unit(), res_m}};
    };
    s.post_assume = [](const Value& a, const Value& r) {
        const Value h = a.first();
        const Value items = a.second();
        std::vector<AssumeTuple> out;
        if (r == head_or_zero(items))
            out.push_back({r, std::nullopt, is_stack(h, tail_of(items))});
        return out;
    };
    s.post_guar = [](const Value& a, const Value&, const Resource& res_m) {
        const Value h = a.first();
        const Value items = a.second();
        std::vector<GuarTuple> out;
        auto view = auth_view(res_m);
        if (!view.ok) return out;
        const Resource* cur = entry_at(view, h);
        if (!cur || *cur != Resource::excl(items)) return out;
        const Value rest = tail_of(items);
        out.push_back({head_or_zero(items), std::nullopt, is_stack(h, rest),
                       Resource::unit(),
                       rebuild_auth(view, put_entry(view.entries, h,
                                                    Resource::excl(rest)))});
        return out;
    };
    s.ra_candidates = [](const Value& a, const Value&) {
        return std::vector<Value>{head_or_zero(a.second())};
    };
    return s;
}

}  // namespace

SpecTable stack2a_specs(const StackSamples& w) {
    const auto handles = stack_handles(w);
    const auto lists = stack_lists(w);
    SpecTable t;
    t.entries["new"] = stack2a_new_spec(handles);
    t.entries["push"] = stack2a_push_spec(w, handles, lists);
    t.entries["pop"] = stack2a_pop_spec(handles, lists);

    const Value h0 = handles[0];
    const std::vector<Value> args = {Value::list({}), Value::list({h0, iv(1)}),
                                     Value::list({h0}), iv(9)};
    const std::vector<Value> rets = {iv(0), iv(1), iv(2), h0, iv(9)};
    for (const auto& e : t.entries) validate_spec(e.first, e.second, args, rets);
    return t;
}

Resource stack2a_sigma() { return Resource::auth_full(Resource::unit()); }

// ---------------------------------------------------------------------------
// bags

std::vector<std::string> bag_properties() { return {"evens", "odds", "nonzero"}; }

bool bag_member(const std::string& prop, const Value& v) {
    if (v.kind() != Value::Kind::Int) return false;
    const int64_t i = v.int_of();
    if (prop == "evens") return i % 2 == 0;
    if (prop == "odds") return i % 2 != 0;
    if (prop == "nonzero") return i != 0;
    return false;
}

Resource is_bag(const Value& h, const std::string& prop) {
    return Resource::auth_frag(
        Resource::finmap({{h, Resource::opt(Resource::ag({Value::str(prop)}))}}));
}

namespace {

Spec stack2b_new_spec(const std::vector<Value>& handles) {
    Spec s;
    s.a_domain.clear();
    for (const std::string& p : bag_properties()) s.a_domain.push_back(Value::str(p));
    s.cond = [](const Value& a) {
        const std::string prop = a.str_of();
        SpecCase c;
        c.pre = [](const Value& x, const Value&, const Measure& d,
                   const Resource& res) {
            return d.has_value() && x == Value::list({}) && res.is_unit();
        };
        c.post = [prop](const Value& r, const Value&, const Resource& res) {
            return is_heap_ptr(r) && res == is_bag(r, prop);
        };
        return c;
    };
    s.pre_assume = [](const Value&, const Value& x) {
        std::vector<AssumeTuple> out;
        if (x == Value::list({}))
            out.push_back({x, small_measure(), Resource::unit()});
        return out;
    };
    s.pre_guar = [](const Value&, const Value&, const Resource& res_m) {
        return std::vector<GuarTuple>{{Value::list({}), small_measure(),
                                       Resource::unit(), Resource::unit(), res_m}};
    };
    s.post_assume = [](const Value& a, const Value& r) {
        const std::string prop = a.str_of();
        std::vector<AssumeTuple> out;
        if (is_heap_ptr(r)) out.push_back({r, std::nullopt, is_bag(r, prop)});
        return out;
    };
    s.post_guar = [handles](const Value& a, const Value&, const Resource& res_m) {
        const std::string prop = a.str_of();
        std::vector<GuarTuple> out;
        auto view = auth_view(res_m);
        if (!view.ok) return out;
        for (const Value& h : handles) {
            // agreement composes: reopening an existing bag at the same
            // property is allowed, a clashing property is not
            const Resource* cur = entry_at(view, h);
            const Resource tag = Resource::opt(Resource::ag({Value::str(prop)}));
            const Resource nxt = cur ? add(*cur, tag) : tag;
            if (!valid(nxt)) continue;
            out.push_back({h, std::nullopt, is_bag(h, prop), Resource::unit(),
                           rebuild_auth(view, put_entry(view.entries, h, nxt))});
        }
        return out;
    };
    s.ra_candidates = [handles](const Value&, const Value&) { return handles; };
    return s;
}

Spec stack2b_push_spec(const StackSamples& w, const std::vector<Value>& handles) {
    Spec s;
    s.a_domain.clear();
    for (const Value& h : handles)
        for (int64_t e : w.elems)
            for (const std::string& p : bag_properties())
                s.a_domain.push_back(Value::list({h, iv(e), Value::str(p)}));
    s.cond = [](const Value& a) {
        const Value h = a.items()[0];
        const int64_t v = a.items()[1].int_of();
        const std::string prop = a.items()[2].str_of();
        SpecCase c;
        c.pre = [h, v, prop](const Value& x, const Value&, const Measure& d,
                             const Resource& res) {
            return d.has_value() && x == Value::list({h, iv(v)}) &&
                   bag_member(prop, iv(v)) && res == is_bag(h, prop);
        };
        c.post = [h, prop](const Value& r, const Value&, const Resource& res) {
            return as_val(r).has_value() && res == is_bag(h, prop);
        };
        return c;
    };
    s.pre_assume = [](const Value& a, const Value& x) {
        const Value h = a.items()[0];
        const int64_t v = a.items()[1].int_of();
        const std::string prop = a.items()[2].str_of();
        std::vector<AssumeTuple> out;
        if (x == Value::list({h, iv(v)}) && bag_member(prop, iv(v)))
            out.push_back({x, small_measure(), is_bag(h, prop)});
        return out;
    };
    s.pre_guar = [](const Value& a, const Value&, const Resource& res_m) {
        const Value h = a.items()[0];
        const int64_t v = a.items()[1].int_of();
        const std::string prop = a.items()[2].str_of();
        std::vector<GuarTuple> out;
        if (bag_member(prop, iv(v)))
            out.push_back({Value::list({h, iv(v)}), small_measure(), is_bag(h, prop),
                           Resource::unit(), res_m});
        return out;
    };
    s.post_assume = [](const Value& a, const Value& r) {
        const Value h = a.items()[0];
        const std::string prop = a.items()[2].str_of();
        std::vector<AssumeTuple> out;
        if (as_val(r)) out.push_back({r, std::nullopt, is_bag(h, prop)});
        return out;
    };
    s.post_guar = [](const Value& a, const Value&, const Resource& res_m) {
        const Value h = a.items()[0];
        const std::string prop = a.items()[2].str_of();
        std::vector<GuarTuple> out;
        auto view = auth_view(res_m);
        if (!view.ok) return out;
        const Resource* cur = entry_at(view, h);
        if (!cur || *cur != Resource::opt(Resource::ag({Value::str(prop)})))
            return out;
        out.push_back({iv(0), std::nullopt, is_bag(h, prop), Resource::unit(), res_m});
        return out;
    };
    s.ra_candidates = [](const Value&, const Value&) {
        return std::vector<Value>{iv(0)};
    };
    return s;
}

Spec stack2b_pop_spec(const StackSamples& w, const std::vector<Value>& handles) {
    Spec s;
    s.a_domain.clear();
    for (const Value& h : handles)
        for (const std::string& p : bag_properties())
            s.a_domain.push_back(Value::pair(h, Value::str(p)));
    s.cond = [](const Value& a) {
        const Value h = a.first();
        const std::string prop = a.second().str_of();
        SpecCase c;
        c.pre = [h, prop](const Value& x, const Value&, const Measure& d,
                          const Resource& res) {
            return d.has_value() && x == Value::list({h}) && res == is_bag(h, prop);
        };
        c.post = [h, prop](const Value& r, const Value&, const Resource& res) {
            return (r == iv(0) || bag_member(prop, r)) && res == is_bag(h, prop);
        };
        return c;
    };
    s.pre_assume = [](const Value& a, const Value& x) {
        const Value h = a.first();
        const std::string prop = a.second().str_of();
        std::vector<AssumeTuple> out;
        if (x == Value::list({h}))
            out.push_back({x, small_measure(), is_bag(h, prop)});
        return out;
    };
    s.pre_guar = [](const Value& a, const Value&, const Resource& res_m) {
        const Value h = a.first();
        const std::string prop = a.second().str_of();
        return std::vector<GuarTuple>{{Value::list({h}), small_measure(),
                                       is_bag(h, prop), Resource::unit(), res_m}};
    };
    s.post_assume = [](const Value& a, const Value& r) {
        const Value h = a.first();
        const std::string prop = a.second().str_of();
        std::vector<AssumeTuple> out;
        if (r == iv(0) || bag_member(prop, r))
            out.push_back({r, std::nullopt, is_bag(h, prop)});
        return out;
    };
    s.post_guar = [w](const Value& a, const Value&, const Resource& res_m) {
        const Value h = a.first();
        const std::string prop = a.second().str_of();
        std::vector<GuarTuple> out;
        auto view = auth_view(res_m);
        if (!view.ok) return out;
        const Resource* cur = entry_at(view, h);
        if (!cur || *cur != Resource::opt(Resource::ag({Value::str(prop)})))
            return out;
        std::vector<Value> results = {iv(0)};
        for (int64_t e : w.elems)
            if (bag_member(prop, iv(e))) results.push_back(iv(e));
        for (const Value& r : results)
            out.push_back({r, std::nullopt, is_bag(h, prop), Resource::unit(), res_m});
        return out;
    };
    s.ra_candidates = [w](const Value& a, const Value&) {
        const std::string prop = a.second().str_of();
        std::vector<Value> results = {iv(0)};
        for (int64_t e : w.elems)
            if (bag_member(prop, iv(e))) results.push_back(iv(e));
        return results;
    };
    return s;
}

}  // namespace

SpecTable stack2b_specs(const StackSamples& w) {
    const auto handles = stack_handles(w);
    SpecTable t;
    t.entries["new"] = stack2b_new_spec(handles);
    t.entries["push"] = stack2b_push_spec(w, handles);
    t.entries["pop"] = stack2b_pop_spec(w, handles);

    const Value h0 = handles[0];
    const std::vector<Value> args = {Value::list({}), Value::list({h0, iv(1)}),
                                     Value::list({h0, iv(2)}), Value::list({h0}),
                                     iv(9)};
    const std::vector<Value> rets = {iv(0), iv(1), iv(2), h0, iv(9)};
    for (const auto& e : t.entries) validate_spec(e.first, e.second, args, rets);
    return t;
}

Resource stack2b_sigma() { return Resource::auth_full(Resource::unit()); }

// ---------------------------------------------------------------------------
// echo

namespace {

bool nonzero_int_list(const Value& v) {
    auto xs = as_int_list(v);
    if (!xs) return false;
    for (int64_t x : *xs)
        if (x == 0) return false;
    return true;
}

Spec echo_walk_spec(const std::vector<Value>& handles,
                    const std::vector<Value>& lists) {
    Spec s;
    s.a_domain = handles;
    s.cond = [](const Value& a) {
        const Value h = a;
        SpecCase c;
        c.pre = [h](const Value& x, const Value& xa, const Measure& d,
                    const Resource& res) {
            return !d.has_value() && x == Value::list({h}) && nonzero_int_list(xa) &&
                   res == is_stack(h, xa);
        };
        c.post = [h](const Value& r, const Value& ra, const Resource& res) {
            return as_val(r).has_value() && nonzero_int_list(ra) &&
                   res == is_stack(h, ra);
        };
        return c;
    };
    s.pre_assume = [lists](const Value& a, const Value& x) {
        std::vector<AssumeTuple> out;
        if (x != Value::list({a})) return out;
        for (const Value& l : lists)
            out.push_back({l, std::nullopt, is_stack(a, l)});
        return out;
    };
    s.pre_guar = [](const Value& a, const Value& xa, const Resource& res_m) {
        std::vector<GuarTuple> out;
        if (nonzero_int_list(xa))
            out.push_back({Value::list({a}), std::nullopt, is_stack(a, xa),
                           Resource::unit(), res_m});
        return out;
    };
    s.post_assume = [lists](const Value& a, const Value& r) {
        std::vector<AssumeTuple> out;
        if (!as_val(r)) return out;
        for (const Value& l : lists)
            out.push_back({l, std::nullopt, is_stack(a, l)});
        return out;
    };
    s.post_guar = [](const Value& a, const Value& ra, const Resource& res_m) {
        std::vector<GuarTuple> out;
        if (nonzero_int_list(ra))
            out.push_back({iv(0), std::nullopt, is_stack(a, ra), Resource::unit(),
                           res_m});
        return out;
    };
    s.ra_candidates = [lists](const Value&, const Value&) { return lists; };
    return s;
}

}  // namespace

SpecTable echo_specs(const StackSamples& w) {
    const auto handles = stack_handles(w);
    const auto lists = stack_lists(w);
    SpecTable t;
    t.entries["echo"] = default_spec();
    t.entries["input"] = echo_walk_spec(handles, lists);
    t.entries["output"] = echo_walk_spec(handles, lists);

    const Value h0 = handles[0];
    const std::vector<Value> args = {Value::list({h0}), iv(3)};
    const std::vector<Value> rets = {iv(0), Value::list({iv(1)}), iv(7)};
    validate_spec("input", t.entries["input"], args, rets);
    validate_spec("output", t.entries["output"], args, rets);
    validate_spec("echo", t.entries["echo"], {Value::list({})}, {iv(0)});
    return t;
}

// ---------------------------------------------------------------------------
// repeat

int64_t sem_apply(const std::string& sem, int64_t m) {
    if (sem == "succ") return m + 1;
    return m;
}

Spec succ_spec(const std::vector<int64_t>& ms) {
    Spec s;
    s.a_domain.clear();
    for (int64_t m : ms) s.a_domain.push_back(iv(m));
    s.cond = [](const Value& a) {
        const int64_t m = a.int_of();
        SpecCase c;
        c.pre = [m](const Value& x, const Value&, const Measure& d,
                    const Resource& res) {
            return d.has_value() && is_arg_list(x, {iv(m)}) && res.is_unit();
        };
        c.post = [m](const Value& r, const Value&, const Resource& res) {
            return r == iv(m + 1) && res.is_unit();
        };
        return c;
    };
    s.pre_assume = [](const Value& a, const Value& x) {
        const int64_t m = a.int_of();
        std::vector<AssumeTuple> out;
        if (is_arg_list(x, {iv(m)}))
            out.push_back({x, small_measure(), Resource::unit()});
        return out;
    };
    s.pre_guar = [](const Value& a, const Value&, const Resource& res_m) {
        const int64_t m = a.int_of();
        return std::vector<GuarTuple>{{Value::list({iv(m)}), small_measure(),
                                       Resource::unit(), Resource::unit(), res_m}};
    };
    s.post_assume = [](const Value& a, const Value& r) {
        const int64_t m = a.int_of();
        std::vector<AssumeTuple> out;
        if (r == iv(m + 1)) out.push_back({r, std::nullopt, Resource::unit()});
        return out;
    };
    s.post_guar = [](const Value& a, const Value&, const Resource& res_m) {
        const int64_t m = a.int_of();
        return std::vector<GuarTuple>{
            {iv(m + 1), std::nullopt, Resource::unit(), Resource::unit(), res_m}};
    };
    s.ra_candidates = [](const Value& a, const Value&) {
        return std::vector<Value>{iv(a.int_of() + 1)};
    };
    return s;
}

namespace {

std::vector<int64_t> m_closure(const RepeatSamples& w) {
    int64_t max_n = 0;
    for (int64_t n : w.ns) max_n = std::max(max_n, n);
    std::vector<int64_t> out;
    for (int64_t m : w.ms)
        for (int64_t k = 0; k <= max_n; ++k) out.push_back(m + k);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// the contract every function passed into repeat is expected to meet:
// one application at measure w, computing the named semantics
Spec expected_arg_spec(const std::string& sem, const std::vector<int64_t>& ms) {
    Spec s;
    s.a_domain.clear();
    for (int64_t m : ms) s.a_domain.push_back(iv(m));
    s.cond = [sem](const Value& a) {
        const int64_t m = a.int_of();
        SpecCase c;
        c.pre = [m](const Value& x, const Value&, const Measure& d,
                    const Resource& res) {
            return d == Measure{Ordinal{1, 0}} && is_arg_list(x, {iv(m)}) &&
                   res.is_unit();
        };
        c.post = [sem, m](const Value& r, const Value&, const Resource& res) {
            return r == iv(sem_apply(sem, m)) && res.is_unit();
        };
        return c;
    };
    return s;
}

int64_t iterate_sem(const std::string& sem, int64_t n, int64_t m) {
    int64_t r = m;
    for (int64_t i = 0; i < n; ++i) r = sem_apply(sem, r);
    return r;
}

}  // namespace

Spec repeat_entry_spec(const SpecTable& argfns, const RepeatSamples& w) {
    const auto ms = m_closure(w);
    StrongerSample smp;
    for (int64_t m : ms) smp.xs.push_back(Value::list({iv(m)}));
    smp.xas = {Value::unit()};
    smp.ds = {Measure{Ordinal{1, 0}}};
    for (int64_t m : ms) {
        smp.rs.push_back(iv(m));
        smp.rs.push_back(iv(m + 1));
    }
    smp.ras = {Value::unit()};

    Spec s;
    s.a_domain.clear();
    for (const auto& e : argfns.entries) {
        for (const std::string& sem : {std::string("succ"), std::string("id")}) {
            if (!stronger(unit_pcm(), e.second, expected_arg_spec(sem, ms), smp))
                continue;
            for (int64_t n : w.ns)
                for (int64_t m : w.ms)
                    s.a_domain.push_back(
                        Value::list({Value::addr(Address::fun(e.first)), iv(n),
                                     iv(m), Value::str(sem)}));
        }
    }
    s.cond = [](const Value& a) {
        const Value f = a.items()[0];
        const int64_t n = a.items()[1].int_of();
        const int64_t m = a.items()[2].int_of();
        const std::string sem = a.items()[3].str_of();
        SpecCase c;
        c.pre = [f, n, m](const Value& x, const Value&, const Measure& d,
                          const Resource& res) {
            return d.has_value() && !measure_lt(d, Measure{Ordinal{1, n}}) &&
                   is_arg_list(x, {f, iv(n), iv(m)}) && n >= 0 && res.is_unit();
        };
        c.post = [sem, n, m](const Value& r, const Value&, const Resource& res) {
            return r == iv(iterate_sem(sem, n, m)) && res.is_unit();
        };
        return c;
    };
    s.pre_assume = [](const Value& a, const Value& x) {
        const Value f = a.items()[0];
        const int64_t n = a.items()[1].int_of();
        const int64_t m = a.items()[2].int_of();
        std::vector<AssumeTuple> out;
        if (n >= 0 && is_arg_list(x, {f, iv(n), iv(m)}))
            out.push_back({x, Measure{Ordinal{1, n}}, Resource::unit()});
        return out;
    };
    s.pre_guar = [](const Value& a, const Value&, const Resource& res_m) {
        const Value f = a.items()[0];
        const int64_t n = a.items()[1].int_of();
        const int64_t m = a.items()[2].int_of();
        std::vector<GuarTuple> out;
        if (n >= 0)
            out.push_back({Value::list({f, iv(n), iv(m)}), Measure{Ordinal{1, n}},
                           Resource::unit(), Resource::unit(), res_m});
        return out;
    };
    s.post_assume = [](const Value& a, const Value& r) {
        const int64_t n = a.items()[1].int_of();
        const int64_t m = a.items()[2].int_of();
        const std::string sem = a.items()[3].str_of();
        std::vector<AssumeTuple> out;
        if (r == iv(iterate_sem(sem, n, m)))
            out.push_back({r, std::nullopt, Resource::unit()});
        return out;
    };
    s.post_guar = [](const Value& a, const Value&, const Resource& res_m) {
        const int64_t n = a.items()[1].int_of();
        const int64_t m = a.items()[2].int_of();
        const std::string sem = a.items()[3].str_of();
        return std::vector<GuarTuple>{{iv(iterate_sem(sem, n, m)), std::nullopt,
                                       Resource::unit(), Resource::unit(), res_m}};
    };
    s.ra_candidates = [](const Value& a, const Value&) {
        const int64_t n = a.items()[1].int_of();
        const int64_t m = a.items()[2].int_of();
        const std::string sem = a.items()[3].str_of();
        return std::vector<Value>{iv(iterate_sem(sem, n, m))};
    };
    return s;
}

SpecTable repeat_specs(const RepeatSamples& w) {
    const auto ms = m_closure(w);
    SpecTable argfns;
    argfns.entries["succ"] = succ_spec(ms);

    SpecTable t;
    t.entries["succ"] = succ_spec(ms);
    t.entries["repeat"] = repeat_entry_spec(argfns, w);
    t.entries["add"] = default_spec();

    const Value fsucc = Value::addr(Address::fun("succ"));
    validate_spec("succ", t.entries["succ"], {Value::list({iv(3)}), iv(9)},
                  {iv(4), iv(0)});
    validate_spec("repeat", t.entries["repeat"],
                  {Value::list({fsucc, iv(2), iv(3)}), Value::list({iv(3)}), iv(9)},
                  {iv(5), iv(4), iv(0)});
    return t;
}

Pcm unit_pcm() { return Pcm{"unit", {Resource::unit()}}; }

}  // namespace abslog
