#include "abslog/module.hpp"

#include <memory>
#include <set>

namespace abslog {

const char* const kExternalCaller = "<external>";

ModStack stack_of(std::vector<ModuleSem> mods) {
    ModStack s;
    s.mods = std::move(mods);
    std::set<std::string> seen;
    for (const auto& m : s.mods)
        for (const auto& [fn, def] : m.funs)
            if (!seen.insert(fn).second)
                s.duplicate_warnings.push_back("duplicate function: " + fn);
    return s;
}

ModStack link(ModStack a, const ModStack& b) {
    std::vector<ModuleSem> mods = std::move(a.mods);
    mods.insert(mods.end(), b.mods.begin(), b.mods.end());
    return stack_of(std::move(mods));
}

const ModuleSem* find_fun(const ModStack& s, const std::string& fn) {
    for (const auto& m : s.mods)
        if (m.funs.count(fn)) return &m;
    return nullptr;
}

namespace {

// states: sorted assoc list module name -> module-local state
Value init_states(const ModStack& s) {
    Value states = Value::list({});
    for (const auto& m : s.mods)
        states = assoc_put(states, Value::str(m.name), m.init);
    return states;
}

Prog run_call(std::shared_ptr<const ModStack> stack, const std::string& caller,
              const std::string& fn, const Value& arg, const Value& states) {
    const ModuleSem* mod = find_fun(*stack, fn);
    if (!mod) return fault("unresolved call: " + fn);
    const std::string mod_name = mod->name;

    Handler h = [stack, mod_name, caller](const Event& e,
                                          const Value& sts) -> std::optional<Prog> {
        switch (e.kind) {
            case EventKind::Get: {
                auto cur = assoc_find(sts, Value::str(mod_name));
                Value v = cur ? *cur : Value::unit();
                return ret(Value::pair(v, sts));
            }
            case EventKind::Put:
                return ret(Value::pair(
                    Value::unit(), assoc_put(sts, Value::str(mod_name), e.payload)));
            case EventKind::GetCaller:
                return ret(Value::pair(Value::str(caller), sts));
            case EventKind::Call: {
                std::string callee = e.fn;
                Value args = e.payload;
                return Prog::tau_([stack, mod_name, callee, args, sts] {
                    return bind(run_call(stack, mod_name, callee, args, sts),
                                [](const Value& rs) { return tau_next(ret(rs)); });
                });
            }
            case EventKind::Ipc:
                return fault("ipc outside pre-abstraction: " + mod_name);
            default:
                return std::nullopt;
        }
    };

    return interpret(mod->funs.at(fn)(arg), h, states);
}

}  // namespace

Prog close_stack(const ModStack& s, const std::string& main_fn, const Value& arg) {
    auto stack = std::make_shared<const ModStack>(s);
    Value states = init_states(s);
    return bind(run_call(stack, kExternalCaller, main_fn, arg, states),
                [](const Value& rs) { return ret(rs.first()); });
}

}  // namespace abslog
