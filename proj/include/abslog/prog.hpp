#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "abslog/value.hpp"

namespace abslog {

// Finite domains are duplicate-free and sorted so enumeration order is
// canonical. Described domains name a candidate set resolved from the
// enumeration config at check time.
struct Domain {
    enum class Kind { Finite, Described, Empty };

    Kind kind = Kind::Empty;
    std::vector<Value> values;
    std::string name;
    std::string key;

    static Domain finite(std::vector<Value> vs);
    static Domain described(std::string name, std::string key);
    static Domain empty();
};

// Fault is internal: it marks a program-level fault (unresolved call, IPC
// outside a pre-abstraction) that the enumerator turns into an Error trace.
enum class EventKind { Choose, Take, Obs, Call, Get, Put, GetCaller, Ipc, Fault };

struct Event {
    EventKind kind = EventKind::Fault;
    Domain domain;
    std::string fn;
    Value payload;
    std::string note;
};

Event ev_choose(Domain d, std::string note = "");
Event ev_take(Domain d, std::string note = "");
Event ev_obs(std::string fn, Value args);
Event ev_call(std::string fn, Value args);
Event ev_get();
Event ev_put(Value state);
Event ev_getcaller();
Event ev_ipc();
Event ev_fault(std::string what);

// Resumable program tree. Tau nodes carry a memoized thunk so recursive
// builders (loops, call dispatch) unfold on demand instead of at
// construction time; forcing is idempotent and the tree is otherwise
// immutable.
class Prog {
  public:
    enum class Kind { Ret, Vis, Tau };

    Prog() : Prog(ret_(Value::unit())) {}

    static Prog ret_(Value v);
    static Prog vis_(Event e, std::function<Prog(Value)> k);
    static Prog tau_(std::function<Prog()> thunk);

    Kind kind() const { return node_->kind; }
    const Value& ret_value() const { return node_->v; }
    const Event& event() const { return node_->e; }

    // Vis only; total on the event's answer set.
    Prog resume(const Value& answer) const { return node_->k(answer); }

    // Tau only; forces and memoizes the next step.
    Prog next() const;

    const void* id() const { return node_.get(); }

  private:
    struct Node {
        Kind kind = Kind::Ret;
        Value v;
        Event e;
        std::function<Prog(Value)> k;
        std::function<Prog()> thunk;
        std::shared_ptr<Prog> forced;
    };

    explicit Prog(std::shared_ptr<Node> n) : node_(std::move(n)) {}

    std::shared_ptr<Node> node_;
};

Prog ret(Value v);
Prog skip();
Prog tau_next(Prog p);

Prog bind(Prog p, std::function<Prog(Value)> k);
Prog seq(Prog a, Prog b);

Prog choose(Domain d, std::string note = "");
Prog take(Domain d, std::string note = "");
Prog obs(std::string fn, Value args);
Prog call(std::string fn, Value args);
Prog get_state();
Prog put_state(Value v);
Prog get_caller();
Prog ipc();
Prog fault(std::string what);

// if P then skip else UB / NB
Prog assume(bool p, std::string note = "");
Prog guarantee(bool p, std::string note = "");

Prog ite(bool c, Prog then_p, Prog else_p);

// body() is re-invoked per iteration; a Tau sits on every back-edge.
Prog repeat_n(int64_t n, std::function<Prog()> body);

// step(s) returns Some(s') to continue with s', None to stop.
Prog while_loop(std::function<Prog(Value)> step, Value init);

// Stateful event rewriting. The handler sees each Vis event with the current
// state; returning a program (which must produce Pair(answer, state'))
// replaces the event, returning nullopt passes it through untouched. The
// result produces Pair(final value, final state).
using Handler = std::function<std::optional<Prog>(const Event&, const Value&)>;

Prog interpret(Prog p, Handler h, Value s0);

}  // namespace abslog
