#include "abslog/value.hpp"

#include <algorithm>

namespace abslog {

int compare(const Address& a, const Address& b) {
    if (a.is_fun != b.is_fun) return a.is_fun ? 1 : -1;
    if (a.is_fun) return a.fn.compare(b.fn);
    if (a.block != b.block) return a.block < b.block ? -1 : 1;
    if (a.off != b.off) return a.off < b.off ? -1 : 1;
    return 0;
}

bool operator==(const Address& a, const Address& b) { return compare(a, b) == 0; }
bool operator<(const Address& a, const Address& b) { return compare(a, b) < 0; }

int compare(const Ordinal& a, const Ordinal& b) {
    if (a.k != b.k) return a.k < b.k ? -1 : 1;
    if (a.n != b.n) return a.n < b.n ? -1 : 1;
    return 0;
}

bool operator==(const Ordinal& a, const Ordinal& b) { return compare(a, b) == 0; }
bool ord_lt(const Ordinal& a, const Ordinal& b) { return compare(a, b) < 0; }

std::optional<Ordinal> ord_pred(const Ordinal& o, int64_t fin_cap) {
    if (o.n > 0) return Ordinal{o.k, o.n - 1};
    if (o.k > 0) return Ordinal{o.k - 1, fin_cap};
    return std::nullopt;
}

bool measure_lt(const Measure& a, const Measure& b) {
    if (!b.has_value()) return true;
    if (!a.has_value()) return false;
    return ord_lt(*a, *b);
}

Value Value::unit() {
    static const Value v{std::make_shared<const Node>()};
    return v;
}

Value Value::boolean(bool b) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Bool;
    n->b = b;
    return Value{std::move(n)};
}

Value Value::integer(int64_t i) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Int;
    n->i = i;
    return Value{std::move(n)};
}

Value Value::str(std::string s) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Str;
    n->s = std::move(s);
    return Value{std::move(n)};
}

Value Value::pair(Value a, Value b) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Pair;
    n->kids = {std::move(a), std::move(b)};
    return Value{std::move(n)};
}

Value Value::list(std::vector<Value> items) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::List;
    n->kids = std::move(items);
    return Value{std::move(n)};
}

Value Value::none() {
    auto n = std::make_shared<Node>();
    n->kind = Kind::None;
    return Value{std::move(n)};
}

Value Value::some(Value v) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Some;
    n->kids = {std::move(v)};
    return Value{std::move(n)};
}

Value Value::addr(Address a) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Addr;
    n->addr = std::move(a);
    return Value{std::move(n)};
}

Value Value::ord(Ordinal o) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Ord;
    n->ordv = o;
    return Value{std::move(n)};
}

Value Value::tagged(std::string tag, Value payload) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Tagged;
    n->s = std::move(tag);
    n->kids = {std::move(payload)};
    return Value{std::move(n)};
}

int compare(const Value& a, const Value& b) {
    using K = Value::Kind;
    if (a.kind() != b.kind())
        return static_cast<int>(a.kind()) < static_cast<int>(b.kind()) ? -1 : 1;
    switch (a.kind()) {
        case K::Unit:
            return 0;
        case K::Bool:
            if (a.bool_of() == b.bool_of()) return 0;
            return a.bool_of() ? 1 : -1;
        case K::Int:
            if (a.int_of() != b.int_of()) return a.int_of() < b.int_of() ? -1 : 1;
            return 0;
        case K::Str:
            return a.str_of().compare(b.str_of());
        case K::None:
            return 0;
        case K::Addr:
            return compare(a.addr_of(), b.addr_of());
        case K::Ord:
            return compare(a.ord_of(), b.ord_of());
        case K::Tagged: {
            int c = a.tag().compare(b.tag());
            if (c != 0) return c;
            return compare(a.payload(), b.payload());
        }
        case K::Pair:
        case K::List:
        case K::Some: {
            const auto& xs = a.items();
            const auto& ys = b.items();
            size_t n = std::min(xs.size(), ys.size());
            for (size_t i = 0; i < n; ++i) {
                int c = compare(xs[i], ys[i]);
                if (c != 0) return c;
            }
            if (xs.size() != ys.size()) return xs.size() < ys.size() ? -1 : 1;
            return 0;
        }
    }
    return 0;
}

bool operator==(const Value& a, const Value& b) { return compare(a, b) == 0; }
bool operator!=(const Value& a, const Value& b) { return compare(a, b) != 0; }
bool operator<(const Value& a, const Value& b) { return compare(a, b) < 0; }

Json to_json(const Value& v) {
    using K = Value::Kind;
    switch (v.kind()) {
        case K::Unit:
            return Json{{"unit", nullptr}};
        case K::Bool:
            return Json{{"bool", v.bool_of()}};
        case K::Int:
            return Json{{"int", v.int_of()}};
        case K::Str:
            return Json{{"str", v.str_of()}};
        case K::Pair:
            return Json{{"pair", Json::array({to_json(v.first()), to_json(v.second())})}};
        case K::List: {
            Json items = Json::array();
            for (const auto& x : v.items()) items.push_back(to_json(x));
            return Json{{"list", std::move(items)}};
        }
        case K::None:
            return Json{{"none", nullptr}};
        case K::Some:
            return Json{{"some", to_json(v.some_of())}};
        case K::Addr: {
            const auto& a = v.addr_of();
            if (a.is_fun) return Json{{"addr", Json{{"fn", a.fn}}}};
            return Json{{"addr", Json{{"block", a.block}, {"off", a.off}}}};
        }
        case K::Ord:
            return Json{{"ord", Json{{"omega", v.ord_of().k}, {"fin", v.ord_of().n}}}};
        case K::Tagged:
            return Json{{"tagged", Json{{"tag", v.tag()}, {"payload", to_json(v.payload())}}}};
    }
    return Json{{"unit", nullptr}};
}

std::optional<Value> value_from_json(const Json& j) {
    if (!j.is_object() || j.size() != 1) return std::nullopt;
    const auto& key = j.begin().key();
    const auto& val = j.begin().value();
    if (key == "unit") return Value::unit();
    if (key == "bool") {
        if (!val.is_boolean()) return std::nullopt;
        return Value::boolean(val.get<bool>());
    }
    if (key == "int") {
        if (!val.is_number_integer()) return std::nullopt;
        return Value::integer(val.get<int64_t>());
    }
    if (key == "str") {
        if (!val.is_string()) return std::nullopt;
        return Value::str(val.get<std::string>());
    }
    if (key == "pair") {
        if (!val.is_array() || val.size() != 2) return std::nullopt;
        auto a = value_from_json(val[0]);
        auto b = value_from_json(val[1]);
        if (!a || !b) return std::nullopt;
        return Value::pair(*a, *b);
    }
    if (key == "list") {
        if (!val.is_array()) return std::nullopt;
        std::vector<Value> items;
        for (const auto& x : val) {
            auto v = value_from_json(x);
            if (!v) return std::nullopt;
            items.push_back(*v);
        }
        return Value::list(std::move(items));
    }
    if (key == "none") return Value::none();
    if (key == "some") {
        auto v = value_from_json(val);
        if (!v) return std::nullopt;
        return Value::some(*v);
    }
    if (key == "addr") {
        if (!val.is_object()) return std::nullopt;
        if (val.contains("fn")) {
            if (!val["fn"].is_string()) return std::nullopt;
            return Value::addr(Address::fun(val["fn"].get<std::string>()));
        }
        if (!val.contains("block") || !val.contains("off")) return std::nullopt;
        return Value::addr(
            Address::heap(val["block"].get<int64_t>(), val["off"].get<int64_t>()));
    }
    if (key == "ord") {
        if (!val.is_object() || !val.contains("omega") || !val.contains("fin"))
            return std::nullopt;
        return Value::ord(Ordinal{val["omega"].get<int64_t>(), val["fin"].get<int64_t>()});
    }
    if (key == "tagged") {
        if (!val.is_object() || !val.contains("tag") || !val.contains("payload"))
            return std::nullopt;
        auto p = value_from_json(val["payload"]);
        if (!p) return std::nullopt;
        return Value::tagged(val["tag"].get<std::string>(), *p);
    }
    return std::nullopt;
}

std::string show(const Value& v) { return to_json(v).dump(); }

bool operator==(const ImpValue& a, const ImpValue& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
        case ImpValue::Kind::Int:
            return a.i == b.i;
        case ImpValue::Kind::Ptr:
            return a.p == b.p;
        case ImpValue::Kind::Undef:
            return true;
    }
    return false;
}

Value to_any(const ImpValue& v) {
    switch (v.kind) {
        case ImpValue::Kind::Int:
            return Value::integer(v.i);
        case ImpValue::Kind::Ptr:
            return Value::addr(v.p);
        case ImpValue::Kind::Undef:
            return Value::tagged("undef", Value::unit());
    }
    return Value::unit();
}

Value to_any(const std::vector<ImpValue>& vs) {
    std::vector<Value> items;
    items.reserve(vs.size());
    for (const auto& v : vs) items.push_back(to_any(v));
    return Value::list(std::move(items));
}

std::optional<ImpValue> as_val(const Value& v) {
    using K = Value::Kind;
    switch (v.kind()) {
        case K::Int:
            return ImpValue::vint(v.int_of());
        case K::Addr:
            return ImpValue::vptr(v.addr_of());
        case K::Tagged:
            if (v.tag() == "undef" && v.payload().is_unit()) return ImpValue::undef();
            return std::nullopt;
        default:
            return std::nullopt;
    }
}

std::optional<int64_t> as_int64(const Value& v) {
    if (v.kind() != Value::Kind::Int) return std::nullopt;
    return v.int_of();
}

std::optional<bool> as_bool(const Value& v) {
    if (v.kind() != Value::Kind::Bool) return std::nullopt;
    return v.bool_of();
}

std::optional<std::string> as_text(const Value& v) {
    if (v.kind() != Value::Kind::Str) return std::nullopt;
    return v.str_of();
}

std::optional<Ordinal> as_ord(const Value& v) {
    if (v.kind() != Value::Kind::Ord) return std::nullopt;
    return v.ord_of();
}

std::optional<std::vector<ImpValue>> as_val_list(const Value& v) {
    if (v.kind() != Value::Kind::List) return std::nullopt;
    std::vector<ImpValue> out;
    out.reserve(v.items().size());
    for (const auto& x : v.items()) {
        auto iv = as_val(x);
        if (!iv) return std::nullopt;
        out.push_back(*iv);
    }
    return out;
}

std::optional<std::vector<int64_t>> as_int_list(const Value& v) {
    if (v.kind() != Value::Kind::List) return std::nullopt;
    std::vector<int64_t> out;
    out.reserve(v.items().size());
    for (const auto& x : v.items()) {
        auto i = as_int64(x);
        if (!i) return std::nullopt;
        out.push_back(*i);
    }
    return out;
}

std::optional<std::vector<ImpValue>> unpack_args(
    const Value& packed, const std::vector<ArgKind>& kinds) {
    if (packed.kind() != Value::Kind::List) return std::nullopt;
    if (packed.items().size() != kinds.size()) return std::nullopt;
    std::vector<ImpValue> out;
    out.reserve(kinds.size());
    for (size_t i = 0; i < kinds.size(); ++i) {
        auto iv = as_val(packed.items()[i]);
        if (!iv) return std::nullopt;
        switch (kinds[i]) {
            case ArgKind::Ptr:
                if (iv->kind != ImpValue::Kind::Ptr) return std::nullopt;
                break;
            case ArgKind::Int64:
                if (iv->kind != ImpValue::Kind::Int) return std::nullopt;
                break;
            case ArgKind::Val:
                break;
        }
        out.push_back(*iv);
    }
    return out;
}

std::optional<Value> assoc_find(const Value& list, const Value& key) {
    if (list.kind() != Value::Kind::List) return std::nullopt;
    for (const auto& entry : list.items()) {
        if (entry.kind() != Value::Kind::Pair) continue;
        if (entry.first() == key) return entry.second();
    }
    return std::nullopt;
}

Value assoc_put(const Value& list, const Value& key, const Value& v) {
    std::vector<Value> entries;
    bool replaced = false;
    if (list.kind() == Value::Kind::List) entries = list.items();
    for (auto& entry : entries) {
        if (entry.kind() == Value::Kind::Pair && entry.first() == key) {
            entry = Value::pair(key, v);
            replaced = true;
            break;
        }
    }
    if (!replaced) entries.push_back(Value::pair(key, v));
    std::sort(entries.begin(), entries.end());
    return Value::list(std::move(entries));
}

Value assoc_erase(const Value& list, const Value& key) {
    std::vector<Value> entries;
    if (list.kind() == Value::Kind::List) {
        for (const auto& entry : list.items()) {
            if (entry.kind() == Value::Kind::Pair && entry.first() == key) continue;
            entries.push_back(entry);
        }
    }
    std::sort(entries.begin(), entries.end());
    return Value::list(std::move(entries));
}

}  // namespace abslog
