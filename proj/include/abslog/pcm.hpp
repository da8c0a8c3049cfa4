#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "abslog/value.hpp"

namespace abslog {

// Resource trees over the installed combinators. Canonical form:
//  - Bad never appears inside a container (it absorbs the whole tree)
//  - FinMap entries are key-sorted and never map to unit
//  - Ag over the empty set, Auth(none, unit) and Prod(unit, unit) collapse
//    to unit
// Canonical form makes structural equality coincide with PCM equality.
class Resource {
  public:
    enum class Kind { Unit, Bad, Excl, Ag, Auth, FinMap, Prod, Opt, Named };

    Resource() : Resource(unit()) {}

    static Resource unit();
    static Resource bad();
    static Resource excl(Value v);
    static Resource ag(std::vector<Value> agreed);
    static Resource auth(std::optional<Resource> full, Resource frag);
    static Resource auth_full(Resource full);
    static Resource auth_frag(Resource frag);
    static Resource finmap(std::vector<std::pair<Value, Resource>> entries);
    static Resource prod(Resource a, Resource b);
    static Resource opt(Resource inner);
    static Resource named(std::string table, std::string sym);

    Kind kind() const { return node_->kind; }
    bool is_unit() const { return kind() == Kind::Unit; }
    bool is_bad() const { return kind() == Kind::Bad; }

    const Value& excl_of() const { return node_->val; }
    const std::vector<Value>& ag_of() const { return node_->vals; }
    bool has_full() const { return node_->has_full; }
    const Resource& full() const { return node_->kids[0]; }
    const Resource& frag() const { return node_->kids[1]; }
    const std::vector<std::pair<Value, Resource>>& entries() const {
        return node_->entries;
    }
    const Resource& first() const { return node_->kids[0]; }
    const Resource& second() const { return node_->kids[1]; }
    const Resource& inner() const { return node_->kids[0]; }
    const std::string& table() const { return node_->s; }
    const std::string& sym() const { return node_->s2; }

  private:
    struct Node {
        Kind kind = Kind::Unit;
        Value val;
        std::vector<Value> vals;
        bool has_full = false;
        std::vector<Resource> kids;
        std::vector<std::pair<Value, Resource>> entries;
        std::string s;
        std::string s2;
    };

    explicit Resource(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

    std::shared_ptr<const Node> node_;
};

int compare(const Resource& a, const Resource& b);
bool operator==(const Resource& a, const Resource& b);
bool operator!=(const Resource& a, const Resource& b);
bool operator<(const Resource& a, const Resource& b);

// Composition table for a Named symbol family. Returns the sum of two
// non-unit symbols; symbols must be listed so inclusion can search them.
struct NamedPcmDef {
    std::vector<std::string> symbols;
    std::function<Resource(const std::string&, const std::string&)> add;
};

void register_named_pcm(const std::string& table, NamedPcmDef def);

Resource add(const Resource& a, const Resource& b);
bool valid(const Resource& r);

// Structural resource inclusion: res_le(a, b) iff some c has a + c = b.
bool res_le(const Resource& a, const Resource& b);

struct Pcm {
    std::string name;
    std::vector<Resource> universe;
};

// Frame-preserving update, decided exhaustively over p's universe.
bool fpu(const Pcm& p, const Resource& from, const Resource& to);

// True iff some r' in the universe has fpu(r, r') and pred(r').
bool upd_modality(const Pcm& p, const Resource& r,
                  const std::function<bool(const Resource&)>& pred);

// Fragment asserting ownership of |vs| consecutive 8-byte cells at p.
Resource points_to(const Address& p, const std::vector<ImpValue>& vs);

// Memory cell key used by points_to and the Mem authority: Pair(block, off).
Value cell_key(int64_t block, int64_t off);

std::string show_resource(const Resource& r);

Value encode_resource(const Resource& r);
std::optional<Resource> decode_resource(const Value& v);

// {unit, Ball, Ready, Fired, Loaded, Bad}; Ball + Ready = Loaded, every
// other sum of two non-units is Bad. Registers the symbol table on first use.
Pcm cannon_pcm();
Resource cannon(const std::string& sym);

// Law-checking universe for the points-to memory PCM: authorities and
// fragments over blocks {0,1}, offsets {0,8}, cell payloads {0,1}.
Pcm mem_pcm();

}  // namespace abslog
