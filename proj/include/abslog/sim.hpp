#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "abslog/behavior.hpp"
#include "abslog/module.hpp"

namespace abslog {

struct SimError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class SimVerdict { Holds, Fails, FuelExhausted };

const char* to_string(SimVerdict v);

// Bounded simulation game between an implementation function and an
// abstraction function over Kripke worlds with a module-local relational
// invariant inv(world, impl state, abs state).
//
// The game makes the universally quantified sides finite through explicit
// candidate sets: worlds and state_pairs below, plus three pieces of the
// enumeration config — call_returns (environment answers at synchronized
// calls), callers (get_caller answers; both sides of a goal see the same
// one), and responders/domains as in trace enumeration. A call whose return
// domain has no configured candidates is an error, not a silent pass.
struct SimConfig {
    std::vector<Value> worlds{Value::unit()};

    // Preorder on worlds; reflexivity and transitivity over the finite set
    // are checked before any game runs. Null means equality.
    std::function<bool(const Value&, const Value&)> leq;

    // inv(world, impl state, abs state). Null means always true.
    std::function<bool(const Value&, const Value&, const Value&)> inv;

    // Primary budget, spent on incomplete rules (existential branching and
    // synchronized Obs/Call/Ipc steps).
    int fuel = 400;

    // Secondary budget, spent on complete rewrites (Tau, state threading,
    // universal branching); reset whenever fuel is spent.
    int stutter = 4096;

    // Candidate (impl state, abs state) pairs used at game start and after
    // every synchronized call. Empty means {(unit, unit)} for raw sim_check
    // and {(impl.init, abs.init)} inside adequacy_probe.
    std::vector<std::pair<Value, Value>> state_pairs;

    // Function name -> argument values to check (used by adequacy_probe and
    // the CLI; sim_check takes its argument list directly).
    std::map<std::string, std::vector<Value>> argsets;

    EnumConfig enumcfg;

    // Swaps the expansion order inside the complete tier and inside the
    // existential tier. Complete rules are order-insensitive, so verdicts
    // must not change; kept as a knob so that property is checkable.
    bool expand_impl_first = false;
};

// Throws SimError if leq is not reflexive or not transitive on cfg.worlds.
void validate_simconfig(const SimConfig& cfg);

struct SimOutcome {
    Value arg;
    SimVerdict verdict = SimVerdict::Fails;
    long goals = 0;
};

// Plays the game for each argument: the refuter picks a caller, a start
// world and a start state pair; the prover must then win from every such
// position. Verdict merge is deterministic: on AND nodes Fails dominates
// FuelExhausted dominates Holds, on OR nodes Holds dominates FuelExhausted
// dominates Fails.
std::vector<SimOutcome> sim_check(const SimConfig& cfg, const FunSem& implFun,
                                  const FunSem& absFun, const std::vector<Value>& args);

struct AdequacyReport {
    std::vector<std::pair<std::string, SimOutcome>> sim;
    bool sim_all_hold = true;
    bool trace_holds = true;
    bool agree = true;
    std::string note;
    long goals = 0;
};

// Runs sim_check on every function pair named in cfg.argsets, then
// independently closes both sides with ctx and checks bounded trace
// inclusion from main_fn. sim Holds with a trace violation is a checker
// bug and is flagged as such; the reverse asymmetry is expected and
// reported as "sim incomplete".
AdequacyReport adequacy_probe(const SimConfig& cfg, const ModuleSem& impl,
                              const ModuleSem& abs, const std::vector<ModuleSem>& ctx,
                              const std::string& main_fn, const std::vector<Value>& main_args,
                              int64_t budget);

Json adequacy_to_json(const AdequacyReport& r);

}  // namespace abslog
