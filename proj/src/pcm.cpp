#include "abslog/pcm.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace abslog {

namespace {

std::map<std::string, NamedPcmDef>& named_tables() {
    static std::map<std::string, NamedPcmDef> tables;
    return tables;
}

}  // namespace

void register_named_pcm(const std::string& table, NamedPcmDef def) {
    named_tables()[table] = std::move(def);
}

Resource Resource::unit() {
    static const Resource r{std::make_shared<const Node>()};
    return r;
}

Resource Resource::bad() {
    static const Resource r = [] {
        auto n = std::make_shared<Node>();
        n->kind = Kind::Bad;
        return Resource{std::shared_ptr<const Node>(std::move(n))};
    }();
    return r;
}

Resource Resource::excl(Value v) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Excl;
    n->val = std::move(v);
    return Resource{std::move(n)};
}

Resource Resource::ag(std::vector<Value> agreed) {
    std::sort(agreed.begin(), agreed.end());
    agreed.erase(std::unique(agreed.begin(), agreed.end()), agreed.end());
    if (agreed.empty()) return unit();
    auto n = std::make_shared<Node>();
    n->kind = Kind::Ag;
    n->vals = std::move(agreed);
    return Resource{std::move(n)};
}

Resource Resource::auth(std::optional<Resource> full, Resource frag) {
    if (frag.is_bad()) return bad();
    if (full && full->is_bad()) return bad();
    if (!full && frag.is_unit()) return unit();
    auto n = std::make_shared<Node>();
    n->kind = Kind::Auth;
    n->has_full = full.has_value();
    n->kids = {full ? *std::move(full) : unit(), std::move(frag)};
    return Resource{std::move(n)};
}

Resource Resource::auth_full(Resource full) { return auth(std::move(full), unit()); }
Resource Resource::auth_frag(Resource frag) { return auth(std::nullopt, std::move(frag)); }

Resource Resource::finmap(std::vector<std::pair<Value, Resource>> entries) {
    std::vector<std::pair<Value, Resource>> kept;
    for (auto& e : entries) {
        if (e.second.is_bad()) return bad();
        if (e.second.is_unit()) continue;
        kept.push_back(std::move(e));
    }
    std::sort(kept.begin(), kept.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    if (kept.empty()) return unit();
    auto n = std::make_shared<Node>();
    n->kind = Kind::FinMap;
    n->entries = std::move(kept);
    return Resource{std::move(n)};
}

Resource Resource::prod(Resource a, Resource b) {
    if (a.is_bad() || b.is_bad()) return bad();
    if (a.is_unit() && b.is_unit()) return unit();
    auto n = std::make_shared<Node>();
    n->kind = Kind::Prod;
    n->kids = {std::move(a), std::move(b)};
    return Resource{std::move(n)};
}

Resource Resource::opt(Resource inner) {
    if (inner.is_bad()) return bad();
    auto n = std::make_shared<Node>();
    n->kind = Kind::Opt;
    n->kids = {std::move(inner)};
    return Resource{std::move(n)};
}

Resource Resource::named(std::string table, std::string sym) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Named;
    n->s = std::move(table);
    n->s2 = std::move(sym);
    return Resource{std::move(n)};
}

int compare(const Resource& a, const Resource& b) {
    using K = Resource::Kind;
    if (a.kind() != b.kind())
        return static_cast<int>(a.kind()) < static_cast<int>(b.kind()) ? -1 : 1;
    switch (a.kind()) {
        case K::Unit:
        case K::Bad:
            return 0;
        case K::Excl:
            return compare(a.excl_of(), b.excl_of());
        case K::Ag: {
            const auto& xs = a.ag_of();
            const auto& ys = b.ag_of();
            size_t n = std::min(xs.size(), ys.size());
            for (size_t i = 0; i < n; ++i) {
                int c = compare(xs[i], ys[i]);
                if (c != 0) return c;
            }
            if (xs.size() != ys.size()) return xs.size() < ys.size() ? -1 : 1;
            return 0;
        }
        case K::Auth: {
            if (a.has_full() != b.has_full()) return a.has_full() ? 1 : -1;
            if (a.has_full()) {
                int c = compare(a.full(), b.full());
                if (c != 0) return c;
            }
            return compare(a.frag(), b.frag());
        }
        case K::FinMap: {
            const auto& xs = a.entries();
            const auto& ys = b.entries();
            size_t n = std::min(xs.size(), ys.size());
            for (size_t i = 0; i < n; ++i) {
                int c = compare(xs[i].first, ys[i].first);
                if (c != 0) return c;
                c = compare(xs[i].second, ys[i].second);
                if (c != 0) return c;
            }
            if (xs.size() != ys.size()) return xs.size() < ys.size() ? -1 : 1;
            return 0;
        }
        case K::Prod: {
            int c = compare(a.first(), b.first());
            if (c != 0) return c;
            return compare(a.second(), b.second());
        }
        case K::Opt:
            return compare(a.inner(), b.inner());
        case K::Named: {
            int c = a.table().compare(b.table());
            if (c != 0) return c;
            return a.sym().compare(b.sym());
        }
    }
    return 0;
}

bool operator==(const Resource& a, const Resource& b) { return compare(a, b) == 0; }
bool operator!=(const Resource& a, const Resource& b) { return compare(a, b) != 0; }
bool operator<(const Resource& a, const Resource& b) { return compare(a, b) < 0; }

Resource add(const Resource& a, const Resource& b) {
    using K = Resource::Kind;
    if (a.is_bad() || b.is_bad()) return Resource::bad();
    if (a.is_unit()) return b;
    if (b.is_unit()) return a;
    if (a.kind() != b.kind()) return Resource::bad();
    switch (a.kind()) {
        case K::Excl:
            return Resource::bad();
        case K::Ag: {
            std::vector<Value> u = a.ag_of();
            u.insert(u.end(), b.ag_of().begin(), b.ag_of().end());
            return Resource::ag(std::move(u));
        }
        case K::Auth: {
            if (a.has_full() && b.has_full()) return Resource::bad();
            std::optional<Resource> full;
            if (a.has_full()) full = a.full();
            if (b.has_full()) full = b.full();
            return Resource::auth(full, add(a.frag(), b.frag()));
        }
        case K::FinMap: {
            std::vector<std::pair<Value, Resource>> merged = a.entries();
            for (const auto& [k, v] : b.entries()) {
                bool hit = false;
                for (auto& [mk, mv] : merged) {
                    if (mk == k) {
                        mv = add(mv, v);
                        hit = true;
                        break;
                    }
                }
                if (!hit) merged.emplace_back(k, v);
            }
            return Resource::finmap(std::move(merged));
        }
        case K::Prod:
            return Resource::prod(add(a.first(), b.first()), add(a.second(), b.second()));
        case K::Opt:
            return Resource::opt(add(a.inner(), b.inner()));
        case K::Named: {
            if (a.table() != b.table()) return Resource::bad();
            auto it = named_tables().find(a.table());
            if (it == named_tables().end()) return Resource::bad();
            return it->second.add(a.sym(), b.sym());
        }
        default:
            return Resource::bad();
    }
}

bool valid(const Resource& r) {
    using K = Resource::Kind;
    switch (r.kind()) {
        case K::Unit:
            return true;
        case K::Bad:
            return false;
        case K::Excl:
            return true;
        case K::Ag:
            return r.ag_of().size() == 1;
        case K::Auth:
            if (r.has_full()) return valid(r.full()) && res_le(r.frag(), r.full());
            return valid(r.frag());
        case K::FinMap:
            for (const auto& [k, v] : r.entries())
                if (!valid(v)) return false;
            return true;
        case K::Prod:
            return valid(r.first()) && valid(r.second());
        case K::Opt:
            return valid(r.inner());
        case K::Named:
            return true;
    }
    return false;
}

bool res_le(const Resource& a, const Resource& b) {
    using K = Resource::Kind;
    if (a == b) return true;
    if (a.is_unit()) return true;
    if (b.is_bad()) return true;
    if (a.is_bad()) return false;
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
        case K::Excl:
            return false;
        case K::Ag:
            return std::includes(b.ag_of().begin(), b.ag_of().end(), a.ag_of().begin(),
                                 a.ag_of().end());
        case K::Auth:
            if (a.has_full() && !(b.has_full() && a.full() == b.full())) return false;
            return res_le(a.frag(), b.frag());
        case K::FinMap: {
            for (const auto& [k, v] : a.entries()) {
                bool found = false;
                for (const auto& [bk, bv] : b.entries()) {
                    if (bk == k) {
                        if (!res_le(v, bv)) return false;
                        found = true;
                        break;
                    }
                }
                if (!found) return false;
            }
            return true;
        }
        case K::Prod:
            return res_le(a.first(), b.first()) && res_le(a.second(), b.second());
        case K::Opt:
            return res_le(a.inner(), b.inner());
        case K::Named: {
            auto it = named_tables().find(a.table());
            if (it == named_tables().end()) return false;
            for (const auto& s : it->second.symbols)
                if (add(a, Resource::named(a.table(), s)) == b) return true;
            return false;
        }
        default:
            return false;
    }
}

bool fpu(const Pcm& p, const Resource& from, const Resource& to) {
    if (p.universe.empty())
        throw std::runtime_error("universe-missing: pcm " + p.name);
    for (const auto& f : p.universe)
        if (valid(add(from, f)) && !valid(add(to, f))) return false;
    return true;
}

bool upd_modality(const Pcm& p, const Resource& r,
                  const std::function<bool(const Resource&)>& pred) {
    if (p.universe.empty())
        throw std::runtime_error("universe-missing: pcm " + p.name);
    for (const auto& cand : p.universe)
        if (pred(cand) && fpu(p, r, cand)) return true;
    return false;
}

Value cell_key(int64_t block, int64_t off) {
    return Value::pair(Value::integer(block), Value::integer(off));
}

Resource points_to(const Address& p, const std::vector<ImpValue>& vs) {
    if (p.is_fun) return Resource::bad();
    Resource r = Resource::unit();
    for (size_t i = 0; i < vs.size(); ++i) {
        Value key = cell_key(p.block, p.off + 8 * static_cast<int64_t>(i));
        Resource cell = Resource::auth_frag(
            Resource::finmap({{key, Resource::excl(to_any(vs[i]))}}));
        r = add(r, cell);
    }
    return r;
}

std::string show_resource(const Resource& r) {
    using K = Resource::Kind;
    switch (r.kind()) {
        case K::Unit:
            return "unit";
        case K::Bad:
            return "bad";
        case K::Excl:
            return "ex(" + show(r.excl_of()) + ")";
        case K::Ag: {
            std::string s = "ag{";
            for (size_t i = 0; i < r.ag_of().size(); ++i) {
                if (i) s += ", ";
                s += show(r.ag_of()[i]);
            }
            return s + "}";
        }
        case K::Auth: {
            std::string s = "auth(";
            s += r.has_full() ? show_resource(r.full()) : "-";
            s += ", " + show_resource(r.frag()) + ")";
            return s;
        }
        case K::FinMap: {
            std::string s = "{";
            for (size_t i = 0; i < r.entries().size(); ++i) {
                if (i) s += ", ";
                s += show(r.entries()[i].first) + " -> " +
                     show_resource(r.entries()[i].second);
            }
            return s + "}";
        }
        case K::Prod:
            return "(" + show_resource(r.first()) + ", " + show_resource(r.second()) + ")";
        case K::Opt:
            return "some(" + show_resource(r.inner()) + ")";
        case K::Named:
            return r.sym();
    }
    return "?";
}

Value encode_resource(const Resource& r) {
    using K = Resource::Kind;
    switch (r.kind()) {
        case K::Unit:
            return Value::tagged("r.unit", Value::unit());
        case K::Bad:
            return Value::tagged("r.bad", Value::unit());
        case K::Excl:
            return Value::tagged("r.ex", r.excl_of());
        case K::Ag:
            return Value::tagged("r.ag", Value::list(r.ag_of()));
        case K::Auth: {
            Value full = r.has_full() ? Value::some(encode_resource(r.full())) : Value::none();
            return Value::tagged("r.auth",
                                 Value::pair(full, encode_resource(r.frag())));
        }
        case K::FinMap: {
            std::vector<Value> items;
            for (const auto& [k, v] : r.entries())
                items.push_back(Value::pair(k, encode_resource(v)));
            return Value::tagged("r.map", Value::list(std::move(items)));
        }
        case K::Prod:
            return Value::tagged("r.prod", Value::pair(encode_resource(r.first()),
                                                       encode_resource(r.second())));
        case K::Opt:
            return Value::tagged("r.opt", encode_resource(r.inner()));
        case K::Named:
            return Value::tagged("r.named",
                                 Value::pair(Value::str(r.table()), Value::str(r.sym())));
    }
    return Value::tagged("r.bad", Value::unit());
}

std::optional<Resource> decode_resource(const Value& v) {
    if (v.kind() != Value::Kind::Tagged) return std::nullopt;
    const std::string& t = v.tag();
    const Value& p = v.payload();
    if (t == "r.unit") return Resource::unit();
    if (t == "r.bad") return Resource::bad();
    if (t == "r.ex") return Resource::excl(p);
    if (t == "r.ag") {
        if (p.kind() != Value::Kind::List) return std::nullopt;
        return Resource::ag(p.items());
    }
    if (t == "r.auth") {
        if (p.kind() != Value::Kind::Pair) return std::nullopt;
        std::optional<Resource> full;
        if (p.first().kind() == Value::Kind::Some) {
            full = decode_resource(p.first().some_of());
            if (!full) return std::nullopt;
        } else if (p.first().kind() != Value::Kind::None) {
            return std::nullopt;
        }
        auto frag = decode_resource(p.second());
        if (!frag) return std::nullopt;
        return Resource::auth(full, *frag);
    }
    if (t == "r.map") {
        if (p.kind() != Value::Kind::List) return std::nullopt;
        std::vector<std::pair<Value, Resource>> entries;
        for (const auto& e : p.items()) {
            if (e.kind() != Value::Kind::Pair) return std::nullopt;
            auto r = decode_resource(e.second());
            if (!r) return std::nullopt;
            entries.emplace_back(e.first(), *r);
        }
        return Resource::finmap(std::move(entries));
    }
    if (t == "r.prod") {
        if (p.kind() != Value::Kind::Pair) return std::nullopt;
        auto a = decode_resource(p.first());
        auto b = decode_resource(p.second());
        if (!a || !b) return std::nullopt;
        return Resource::prod(*a, *b);
    }
    if (t == "r.opt") {
        auto inner = decode_resource(p);
        if (!inner) return std::nullopt;
        return Resource::opt(*inner);
    }
    if (t == "r.named") {
        if (p.kind() != Value::Kind::Pair) return std::nullopt;
        auto table = as_text(p.first());
        auto sym = as_text(p.second());
        if (!table || !sym) return std::nullopt;
        return Resource::named(*table, *sym);
    }
    return std::nullopt;
}

namespace {

void ensure_cannon_registered() {
    static const bool done = [] {
        NamedPcmDef def;
        def.symbols = {"Ball", "Ready", "Fired", "Loaded"};
        def.add = [](const std::string& a, const std::string& b) -> Resource {
            if ((a == "Ball" && b == "Ready") || (a == "Ready" && b == "Ball"))
                return Resource::named("cannon", "Loaded");
            return Resource::bad();
        };
        register_named_pcm("cannon", std::move(def));
        return true;
    }();
    (void)done;
}

}  // namespace

Resource cannon(const std::string& sym) {
    ensure_cannon_registered();
    return Resource::named("cannon", sym);
}

Pcm cannon_pcm() {
    ensure_cannon_registered();
    Pcm p;
    p.name = "cannon";
    p.universe = {Resource::unit(),  cannon("Ball"),   cannon("Ready"),
                  cannon("Fired"),   cannon("Loaded"), Resource::bad()};
    return p;
}

Pcm mem_pcm() {
    Pcm p;
    p.name = "mem";
    std::vector<Value> keys;
    for (int64_t b : {0, 1})
        for (int64_t off : {0, 8}) keys.push_back(cell_key(b, off));
    std::vector<Resource> cells = {Resource::excl(Value::integer(0)),
                                   Resource::excl(Value::integer(1))};

    // all maps over the four keys with at most two occupied cells
    std::vector<Resource> maps = {Resource::unit()};
    for (size_t i = 0; i < keys.size(); ++i)
        for (const auto& c : cells) {
            maps.push_back(Resource::finmap({{keys[i], c}}));
            for (size_t j = i + 1; j < keys.size(); ++j)
                for (const auto& d : cells)
                    maps.push_back(Resource::finmap({{keys[i], c}, {keys[j], d}}));
        }

    for (const auto& m : maps) p.universe.push_back(Resource::auth_frag(m));
    for (const auto& m : maps)
        if (m.is_unit() || m.entries().size() <= 1) {
            p.universe.push_back(Resource::auth_full(m));
            p.universe.push_back(Resource::auth(m, m));
        }
    p.universe.push_back(Resource::bad());
    std::sort(p.universe.begin(), p.universe.end());
    p.universe.erase(std::unique(p.universe.begin(), p.universe.end()),
                     p.universe.end());
    return p;
}

}  // namespace abslog
