#pragma once

#include <map>
#include <string>
#include <vector>

#include "abslog/prog.hpp"

namespace abslog {

using FunSem = std::function<Prog(Value)>;

struct ModuleSem {
    std::string name;
    Value init = Value::unit();
    std::map<std::string, FunSem> funs;
};

// Linking is append. Duplicate function names across modules are legal to
// build but flagged; well-formedness checks surface the warnings.
struct ModStack {
    std::vector<ModuleSem> mods;
    std::vector<std::string> duplicate_warnings;
};

ModStack stack_of(std::vector<ModuleSem> mods);
ModStack link(ModStack a, const ModStack& b);

// Module defining fn, or nullptr. Earlier modules win, matching dispatch.
const ModuleSem* find_fun(const ModStack& s, const std::string& fn);

// Name the external world uses as caller of the entry point.
extern const char* const kExternalCaller;

// Closed configuration: call main(arg) with every module at its init state.
// Get/Put act on the executing module's slot, GetCaller answers the dynamic
// caller, Call dispatches within the stack (unresolved names fault), and a
// Tau is spent on every call and return edge. Choose/Take/Obs/Ipc/Fault pass
// through to the enumerator.
Prog close_stack(const ModStack& s, const std::string& main_fn, const Value& arg);

}  // namespace abslog
