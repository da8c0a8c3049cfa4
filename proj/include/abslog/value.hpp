#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace abslog {

using Json = nlohmann::ordered_json;

// Heap or function address. Function addresses always have offset 0.
struct Address {
    bool is_fun = false;
    std::string fn;
    int64_t block = 0;
    int64_t off = 0;

    static Address heap(int64_t block, int64_t off) {
        Address a;
        a.block = block;
        a.off = off;
        return a;
    }
    static Address fun(std::string name) {
        Address a;
        a.is_fun = true;
        a.fn = std::move(name);
        return a;
    }
};

int compare(const Address& a, const Address& b);
bool operator==(const Address& a, const Address& b);
bool operator<(const Address& a, const Address& b);

// omega*k + n, compared lexicographically. Covers everything the spec
// tables need; a general ordinal library would be dead weight here.
struct Ordinal {
    int64_t k = 0;
    int64_t n = 0;
};

int compare(const Ordinal& a, const Ordinal& b);
bool operator==(const Ordinal& a, const Ordinal& b);
bool ord_lt(const Ordinal& a, const Ordinal& b);

// Largest ordinal strictly below o whose finite part is capped, or nullopt
// at zero. Every descent chain through this helper terminates.
std::optional<Ordinal> ord_pred(const Ordinal& o, int64_t fin_cap);

// None is the top measure: everything (including None) sits strictly below it.
using Measure = std::optional<Ordinal>;

bool measure_lt(const Measure& a, const Measure& b);

// Immutable tree over a closed universe. Shared freely; never mutated after
// construction.
class Value {
  public:
    enum class Kind {
        Unit,
        Bool,
        Int,
        Str,
        Pair,
        List,
        None,
        Some,
        Addr,
        Ord,
        Tagged,
    };

    Value() : Value(unit()) {}

    static Value unit();
    static Value boolean(bool b);
    static Value integer(int64_t i);
    static Value str(std::string s);
    static Value pair(Value a, Value b);
    static Value list(std::vector<Value> items);
    static Value none();
    static Value some(Value v);
    static Value addr(Address a);
    static Value ord(Ordinal o);
    static Value tagged(std::string tag, Value payload);

    Kind kind() const { return node_->kind; }

    bool is_unit() const { return kind() == Kind::Unit; }

    // Field accessors assume the matching kind; callers test kind() first.
    bool bool_of() const { return node_->b; }
    int64_t int_of() const { return node_->i; }
    const std::string& str_of() const { return node_->s; }
    const Value& first() const { return node_->kids[0]; }
    const Value& second() const { return node_->kids[1]; }
    const std::vector<Value>& items() const { return node_->kids; }
    const Value& some_of() const { return node_->kids[0]; }
    const Address& addr_of() const { return node_->addr; }
    const Ordinal& ord_of() const { return node_->ordv; }
    const std::string& tag() const { return node_->s; }
    const Value& payload() const { return node_->kids[0]; }

  private:
    struct Node {
        Kind kind = Kind::Unit;
        bool b = false;
        int64_t i = 0;
        std::string s;
        std::vector<Value> kids;
        Address addr;
        Ordinal ordv;
    };

    explicit Value(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

    std::shared_ptr<const Node> node_;
};

// Total order; drives canonical sets and assoc lists.
int compare(const Value& a, const Value& b);
bool operator==(const Value& a, const Value& b);
bool operator!=(const Value& a, const Value& b);
bool operator<(const Value& a, const Value& b);

Json to_json(const Value& v);
std::optional<Value> value_from_json(const Json& j);
std::string show(const Value& v);

// IMP-level values. undef is a real value (reads of uninitialized cells
// produce it); using it as an operand is the caller's fault, not ours.
struct ImpValue {
    enum class Kind { Int, Ptr, Undef };

    Kind kind = Kind::Undef;
    int64_t i = 0;
    Address p;

    static ImpValue vint(int64_t i) {
        ImpValue v;
        v.kind = Kind::Int;
        v.i = i;
        return v;
    }
    static ImpValue vptr(Address a) {
        ImpValue v;
        v.kind = Kind::Ptr;
        v.p = std::move(a);
        return v;
    }
    static ImpValue undef() { return ImpValue{}; }
};

bool operator==(const ImpValue& a, const ImpValue& b);

Value to_any(const ImpValue& v);
Value to_any(const std::vector<ImpValue>& vs);

std::optional<ImpValue> as_val(const Value& v);
std::optional<int64_t> as_int64(const Value& v);
std::optional<bool> as_bool(const Value& v);
std::optional<std::string> as_text(const Value& v);
std::optional<Ordinal> as_ord(const Value& v);
std::optional<std::vector<ImpValue>> as_val_list(const Value& v);
std::optional<std::vector<int64_t>> as_int_list(const Value& v);

// Argument shapes checked at function entry. Val accepts any IMP value
// (pointers and undef included); Int64 and Ptr are exact.
enum class ArgKind { Ptr, Val, Int64 };

std::optional<std::vector<ImpValue>> unpack_args(
    const Value& packed, const std::vector<ArgKind>& kinds);

// Sorted association list encoded as List[Pair(key, value)]. Keeping it
// sorted makes equal maps structurally equal, which memoization relies on.
std::optional<Value> assoc_find(const Value& list, const Value& key);
Value assoc_put(const Value& list, const Value& key, const Value& v);
Value assoc_erase(const Value& list, const Value& key);

}  // namespace abslog
