#include "abslog/prog.hpp"

#include <algorithm>
#include <utility>

namespace abslog {

Domain Domain::finite(std::vector<Value> vs) {
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    Domain d;
    d.kind = vs.empty() ? Kind::Empty : Kind::Finite;
    d.values = std::move(vs);
    return d;
}

Domain Domain::described(std::string name, std::string key) {
    Domain d;
    d.kind = Kind::Described;
    d.name = std::move(name);
    d.key = std::move(key);
    return d;
}

Domain Domain::empty() { return Domain{}; }

Event ev_choose(Domain d, std::string note) {
    Event e;
    e.kind = EventKind::Choose;
    e.domain = std::move(d);
    e.note = std::move(note);
    return e;
}

Event ev_take(Domain d, std::string note) {
    Event e;
    e.kind = EventKind::Take;
    e.domain = std::move(d);
    e.note = std::move(note);
    return e;
}

Event ev_obs(std::string fn, Value args) {
    Event e;
    e.kind = EventKind::Obs;
    e.fn = std::move(fn);
    e.payload = std::move(args);
    return e;
}

Event ev_call(std::string fn, Value args) {
    Event e;
    e.kind = EventKind::Call;
    e.fn = std::move(fn);
    e.payload = std::move(args);
    return e;
}

Event ev_get() {
    Event e;
    e.kind = EventKind::Get;
    return e;
}

Event ev_put(Value state) {
    Event e;
    e.kind = EventKind::Put;
    e.payload = std::move(state);
    return e;
}

Event ev_getcaller() {
    Event e;
    e.kind = EventKind::GetCaller;
    return e;
}

Event ev_ipc() {
    Event e;
    e.kind = EventKind::Ipc;
    return e;
}

Event ev_fault(std::string what) {
    Event e;
    e.kind = EventKind::Fault;
    e.fn = std::move(what);
    return e;
}

Prog Prog::ret_(Value v) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Ret;
    n->v = std::move(v);
    return Prog{std::move(n)};
}

Prog Prog::vis_(Event e, std::function<Prog(Value)> k) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Vis;
    n->e = std::move(e);
    n->k = std::move(k);
    return Prog{std::move(n)};
}

Prog Prog::tau_(std::function<Prog()> thunk) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Tau;
    n->thunk = std::move(thunk);
    return Prog{std::move(n)};
}

Prog Prog::next() const {
    if (!node_->forced) {
        node_->forced = std::make_shared<Prog>(node_->thunk());
        node_->thunk = nullptr;
    }
    return *node_->forced;
}

Prog ret(Value v) { return Prog::ret_(std::move(v)); }
Prog skip() { return ret(Value::unit()); }
Prog tau_next(Prog p) {
    return Prog::tau_([p] { return p; });
}

Prog bind(Prog p, std::function<Prog(Value)> k) {
    switch (p.kind()) {
        case Prog::Kind::Ret:
            return k(p.ret_value());
        case Prog::Kind::Tau:
            return Prog::tau_([p, k] { return bind(p.next(), k); });
        case Prog::Kind::Vis:
            return Prog::vis_(p.event(),
                              [p, k](const Value& a) { return bind(p.resume(a), k); });
    }
    return p;
}

Prog seq(Prog a, Prog b) {
    return bind(std::move(a), [b](const Value&) { return b; });
}

namespace {

Prog answer_self(Event e) {
    return Prog::vis_(std::move(e), [](const Value& a) { return ret(a); });
}

}  // namespace

Prog choose(Domain d, std::string note) {
    return answer_self(ev_choose(std::move(d), std::move(note)));
}
Prog take(Domain d, std::string note) {
    return answer_self(ev_take(std::move(d), std::move(note)));
}
Prog obs(std::string fn, Value args) {
    return answer_self(ev_obs(std::move(fn), std::move(args)));
}
Prog call(std::string fn, Value args) {
    return answer_self(ev_call(std::move(fn), std::move(args)));
}
Prog get_state() { return answer_self(ev_get()); }
Prog put_state(Value v) { return answer_self(ev_put(std::move(v))); }
Prog get_caller() { return answer_self(ev_getcaller()); }
Prog ipc() { return answer_self(ev_ipc()); }
Prog fault(std::string what) { return answer_self(ev_fault(std::move(what))); }

Prog assume(bool p, std::string note) {
    if (p) return skip();
    return seq(take(Domain::empty(), std::move(note)), skip());
}

Prog guarantee(bool p, std::string note) {
    if (p) return skip();
    return seq(choose(Domain::empty(), std::move(note)), skip());
}

Prog ite(bool c, Prog then_p, Prog else_p) { return c ? then_p : else_p; }

Prog repeat_n(int64_t n, std::function<Prog()> body) {
    if (n <= 0) return skip();
    return bind(Prog::tau_([body] { return body(); }),
                [n, body](const Value&) { return repeat_n(n - 1, body); });
}

Prog while_loop(std::function<Prog(Value)> step, Value init) {
    return bind(step(init), [step](const Value& r) {
        if (r.kind() == Value::Kind::Some) {
            Value s = r.some_of();
            return Prog::tau_([step, s] { return while_loop(step, s); });
        }
        return skip();
    });
}

Prog interpret(Prog p, Handler h, Value s0) {
    switch (p.kind()) {
        case Prog::Kind::Ret:
            return ret(Value::pair(p.ret_value(), s0));
        case Prog::Kind::Tau:
            return Prog::tau_([p, h, s0] { return interpret(p.next(), h, s0); });
        case Prog::Kind::Vis: {
            auto handled = h(p.event(), s0);
            if (!handled) {
                return Prog::vis_(p.event(), [p, h, s0](const Value& a) {
                    return interpret(p.resume(a), h, s0);
                });
            }
            return bind(*handled, [p, h](const Value& ans_state) {
                // handler programs produce Pair(answer, new state)
                if (ans_state.kind() != Value::Kind::Pair)
                    return fault("handler-protocol: expected Pair(answer, state)");
                Value a = ans_state.first();
                Value s1 = ans_state.second();
                return interpret(p.resume(a), h, s1);
            });
        }
    }
    return p;
}

}  // namespace abslog
