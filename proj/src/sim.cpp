#include "abslog/sim.hpp"

#include <utility>

namespace abslog {

const char* to_string(SimVerdict v) {
    switch (v) {
        case SimVerdict::Holds:
            return "Holds";
        case SimVerdict::Fails:
            return "Fails";
        case SimVerdict::FuelExhausted:
            return "FuelExhausted";
    }
    return "Fails";
}

namespace {

using WorldLeq = std::function<bool(const Value&, const Value&)>;
using WorldInv = std::function<bool(const Value&, const Value&, const Value&)>;

WorldLeq effective_leq(const SimConfig& cfg) {
    if (cfg.leq) return cfg.leq;
    return [](const Value& a, const Value& b) { return a == b; };
}

WorldInv effective_inv(const SimConfig& cfg) {
    if (cfg.inv) return cfg.inv;
    return [](const Value&, const Value&, const Value&) { return true; };
}

}  // namespace

void validate_simconfig(const SimConfig& cfg) {
    WorldLeq leq = effective_leq(cfg);
    for (const auto& w : cfg.worlds)
        if (!leq(w, w)) throw SimError("sim: leq is not reflexive at " + show(w));
    for (const auto& a : cfg.worlds)
        for (const auto& b : cfg.worlds) {
            if (!leq(a, b)) continue;
            for (const auto& c : cfg.worlds)
                if (leq(b, c) && !leq(a, c))
                    throw SimError("sim: leq is not transitive via " + show(b));
        }
}

namespace {

struct Side {
    Value st;
    Prog p;
};

// One game position relates (impl state, impl program) to (abs state, abs
// program) at a world. Expansion tiers, in order: deterministic rewrites
// (Tau, Get/Put, GetCaller), universal branching (abs Take, impl Choose),
// existential branching (abs Choose, impl Take), then synchronization
// (Ret/Obs/Call/Ipc/Fault). The first two tiers are complete rules and
// spend the stutter budget; the rest spend fuel, which resets stutter.
struct Game {
    const SimConfig& cfg;
    WorldLeq leq;
    WorldInv inv;
    std::vector<std::pair<Value, Value>> state_pairs;
    long goals = 0;

    SimVerdict run(const Value& w, const std::string& caller, Side im, Side ab, int fuel,
                   int stutter) {
        ++goals;

        // Complete tier, first the side whose rules discharge goals without
        // consulting the other: draining one side's deterministic moves must
        // not starve the other side's empty-take (its divergence is covered
        // by the abstraction's top, not a budget question).
        auto drain = [&](Side* s) -> bool {
            for (;;) {
                if (s->p.kind() == Prog::Kind::Tau) {
                    if (stutter <= 0) return true;
                    --stutter;
                    s->p = s->p.next();
                    continue;
                }
                if (s->p.kind() == Prog::Kind::Vis) {
                    const Event& e = s->p.event();
                    if (e.kind == EventKind::Get) {
                        if (stutter <= 0) return true;
                        --stutter;
                        s->p = s->p.resume(s->st);
                        continue;
                    }
                    if (e.kind == EventKind::Put) {
                        if (stutter <= 0) return true;
                        --stutter;
                        s->st = e.payload;
                        s->p = s->p.resume(Value::unit());
                        continue;
                    }
                    if (e.kind == EventKind::GetCaller) {
                        if (stutter <= 0) return true;
                        --stutter;
                        s->p = s->p.resume(Value::str(caller));
                        continue;
                    }
                }
                return false;
            }
        };

        // Universal branching (complete).
        auto abs_take = [&]() -> std::optional<SimVerdict> {
            if (ab.p.kind() != Prog::Kind::Vis || ab.p.event().kind != EventKind::Take)
                return std::nullopt;
            auto dom = resolve_domain(ab.p.event().domain, cfg.enumcfg);
            if (dom.empty()) return SimVerdict::Holds;
            if (stutter <= 0) return SimVerdict::FuelExhausted;
            bool exhausted = false;
            for (const auto& v : dom) {
                SimVerdict r = run(w, caller, im, Side{ab.st, ab.p.resume(v)}, fuel, stutter - 1);
                if (r == SimVerdict::Fails) return r;
                if (r == SimVerdict::FuelExhausted) exhausted = true;
            }
            return exhausted ? SimVerdict::FuelExhausted : SimVerdict::Holds;
        };
        auto impl_choose = [&]() -> std::optional<SimVerdict> {
            if (im.p.kind() != Prog::Kind::Vis || im.p.event().kind != EventKind::Choose)
                return std::nullopt;
            auto dom = resolve_domain(im.p.event().domain, cfg.enumcfg);
            if (dom.empty()) return SimVerdict::Holds;
            if (stutter <= 0) return SimVerdict::FuelExhausted;
            bool exhausted = false;
            for (const auto& v : dom) {
                SimVerdict r = run(w, caller, Side{im.st, im.p.resume(v)}, ab, fuel, stutter - 1);
                if (r == SimVerdict::Fails) return r;
                if (r == SimVerdict::FuelExhausted) exhausted = true;
            }
            return exhausted ? SimVerdict::FuelExhausted : SimVerdict::Holds;
        };
        if (cfg.expand_impl_first) {
            if (drain(&im)) return SimVerdict::FuelExhausted;
            if (auto r = impl_choose()) return *r;
            if (drain(&ab)) return SimVerdict::FuelExhausted;
            if (auto r = abs_take()) return *r;
        } else {
            if (drain(&ab)) return SimVerdict::FuelExhausted;
            if (auto r = abs_take()) return *r;
            if (drain(&im)) return SimVerdict::FuelExhausted;
            if (auto r = impl_choose()) return *r;
        }

        // Tier 3: existential branching.
        auto abs_choose = [&]() -> std::optional<SimVerdict> {
            if (ab.p.kind() != Prog::Kind::Vis || ab.p.event().kind != EventKind::Choose)
                return std::nullopt;
            auto dom = resolve_domain(ab.p.event().domain, cfg.enumcfg);
            if (dom.empty()) return SimVerdict::Fails;
            if (fuel <= 0) return SimVerdict::FuelExhausted;
            bool exhausted = false;
            for (const auto& v : dom) {
                SimVerdict r =
                    run(w, caller, im, Side{ab.st, ab.p.resume(v)}, fuel - 1, cfg.stutter);
                if (r == SimVerdict::Holds) return r;
                if (r == SimVerdict::FuelExhausted) exhausted = true;
            }
            return exhausted ? SimVerdict::FuelExhausted : SimVerdict::Fails;
        };
        auto impl_take = [&]() -> std::optional<SimVerdict> {
            if (im.p.kind() != Prog::Kind::Vis || im.p.event().kind != EventKind::Take)
                return std::nullopt;
            auto dom = resolve_domain(im.p.event().domain, cfg.enumcfg);
            if (dom.empty()) return SimVerdict::Fails;
            if (fuel <= 0) return SimVerdict::FuelExhausted;
            bool exhausted = false;
            for (const auto& v : dom) {
                SimVerdict r =
                    run(w, caller, Side{im.st, im.p.resume(v)}, ab, fuel - 1, cfg.stutter);
                if (r == SimVerdict::Holds) return r;
                if (r == SimVerdict::FuelExhausted) exhausted = true;
            }
            return exhausted ? SimVerdict::FuelExhausted : SimVerdict::Fails;
        };
        if (cfg.expand_impl_first) {
            if (auto r = impl_take()) return *r;
            if (auto r = abs_choose()) return *r;
        } else {
            if (auto r = abs_choose()) return *r;
            if (auto r = impl_take()) return *r;
        }

        // Tier 4: synchronization.
        if (im.p.kind() == Prog::Kind::Ret && ab.p.kind() == Prog::Kind::Ret) {
            if (im.p.ret_value() != ab.p.ret_value()) return SimVerdict::Fails;
            for (const auto& w2 : cfg.worlds)
                if (leq(w, w2) && inv(w2, im.st, ab.st)) return SimVerdict::Holds;
            return SimVerdict::Fails;
        }
        if (im.p.kind() != Prog::Kind::Vis || ab.p.kind() != Prog::Kind::Vis)
            return SimVerdict::Fails;

        const Event& ei = im.p.event();
        const Event& ea = ab.p.event();
        if (ei.kind == EventKind::Fault && ea.kind == EventKind::Fault)
            return SimVerdict::Holds;
        if (ei.kind == EventKind::Obs && ea.kind == EventKind::Obs) {
            if (ei.fn != ea.fn || ei.payload != ea.payload) return SimVerdict::Fails;
            auto answers = cfg.enumcfg.responses_for(ei.fn);
            if (answers.empty()) return SimVerdict::Holds;
            if (fuel <= 0) return SimVerdict::FuelExhausted;
            bool exhausted = false;
            for (const auto& r : answers) {
                SimVerdict v = run(w, caller, Side{im.st, im.p.resume(r)},
                                   Side{ab.st, ab.p.resume(r)}, fuel - 1, cfg.stutter);
                if (v == SimVerdict::Fails) return v;
                if (v == SimVerdict::FuelExhausted) exhausted = true;
            }
            return exhausted ? SimVerdict::FuelExhausted : SimVerdict::Holds;
        }
        if (ei.kind == EventKind::Call && ea.kind == EventKind::Call) {
            if (ei.fn != ea.fn || ei.payload != ea.payload) return SimVerdict::Fails;
            auto it = cfg.enumcfg.call_returns.find(ei.fn);
            if (it == cfg.enumcfg.call_returns.end() || it->second.empty())
                throw SimError("sim: no call-return candidates configured for '" + ei.fn +
                               "' (enum config call_returns)");
            if (fuel <= 0) return SimVerdict::FuelExhausted;
            bool exhausted = false;
            for (const auto& w2 : cfg.worlds) {
                if (!leq(w, w2) || !inv(w2, im.st, ab.st)) continue;
                bool failed = false;
                bool branch_exhausted = false;
                for (const auto& w3 : cfg.worlds) {
                    if (failed) break;
                    if (!leq(w2, w3)) continue;
                    for (const auto& sp : state_pairs) {
                        if (failed) break;
                        if (!inv(w3, sp.first, sp.second)) continue;
                        for (const auto& r : it->second) {
                            SimVerdict v =
                                run(w3, caller, Side{sp.first, im.p.resume(r)},
                                    Side{sp.second, ab.p.resume(r)}, fuel - 1, cfg.stutter);
                            if (v == SimVerdict::Fails) {
                                failed = true;
                                break;
                            }
                            if (v == SimVerdict::FuelExhausted) branch_exhausted = true;
                        }
                    }
                }
                if (!failed && !branch_exhausted) return SimVerdict::Holds;
                if (!failed && branch_exhausted) exhausted = true;
            }
            return exhausted ? SimVerdict::FuelExhausted : SimVerdict::Fails;
        }
        if (ei.kind == EventKind::Ipc && ea.kind == EventKind::Ipc) {
            if (fuel <= 0) return SimVerdict::FuelExhausted;
            return run(w, caller, Side{im.st, im.p.resume(Value::unit())},
                       Side{ab.st, ab.p.resume(Value::unit())}, fuel - 1, cfg.stutter);
        }
        return SimVerdict::Fails;
    }
};

}  // namespace

std::vector<SimOutcome> sim_check(const SimConfig& cfg, const FunSem& implFun,
                                  const FunSem& absFun, const std::vector<Value>& args) {
    validate_simconfig(cfg);
    Game g{cfg, effective_leq(cfg), effective_inv(cfg),
           cfg.state_pairs.empty()
               ? std::vector<std::pair<Value, Value>>{{Value::unit(), Value::unit()}}
               : cfg.state_pairs};
    std::vector<std::string> callers = cfg.enumcfg.callers.empty()
                                           ? std::vector<std::string>{kExternalCaller}
                                           : cfg.enumcfg.callers;
    std::vector<SimOutcome> out;
    for (const auto& x : args) {
        long before = g.goals;
        SimVerdict verdict = SimVerdict::Holds;
        bool exhausted = false;
        for (const auto& caller : callers) {
            if (verdict == SimVerdict::Fails) break;
            for (const auto& w : cfg.worlds) {
                if (verdict == SimVerdict::Fails) break;
                for (const auto& sp : g.state_pairs) {
                    SimVerdict r = g.run(w, caller, Side{sp.first, implFun(x)},
                                         Side{sp.second, absFun(x)}, cfg.fuel, cfg.stutter);
                    if (r == SimVerdict::Fails) {
                        verdict = SimVerdict::Fails;
                        break;
                    }
                    if (r == SimVerdict::FuelExhausted) exhausted = true;
                }
            }
        }
        if (verdict != SimVerdict::Fails && exhausted) verdict = SimVerdict::FuelExhausted;
        out.push_back(SimOutcome{x, verdict, g.goals - before});
    }
    return out;
}

AdequacyReport adequacy_probe(const SimConfig& cfg, const ModuleSem& impl,
                              const ModuleSem& abs, const std::vector<ModuleSem>& ctx,
                              const std::string& main_fn, const std::vector<Value>& main_args,
                              int64_t budget) {
    SimConfig c2 = cfg;
    if (c2.state_pairs.empty()) c2.state_pairs = {{impl.init, abs.init}};

    AdequacyReport rep;
    for (const auto& [fn, args] : cfg.argsets) {
        auto ii = impl.funs.find(fn);
        auto ai = abs.funs.find(fn);
        if (ii == impl.funs.end() || ai == abs.funs.end())
            throw SimError("sim: function '" + fn + "' is not defined on both sides");
        for (auto& o : sim_check(c2, ii->second, ai->second, args)) {
            rep.goals += o.goals;
            if (o.verdict != SimVerdict::Holds) rep.sim_all_hold = false;
            rep.sim.emplace_back(fn, std::move(o));
        }
    }

    RefineReport tr = check_refine(stack_of({impl}), stack_of({abs}), stack_of(ctx), main_fn,
                                   main_args, budget, cfg.enumcfg);
    rep.trace_holds = tr.holds;
    rep.agree = !(rep.sim_all_hold && !rep.trace_holds);
    if (!rep.agree)
        rep.note = "checker bug: simulation holds but trace inclusion is violated";
    else if (!rep.sim_all_hold && rep.trace_holds)
        rep.note = "sim incomplete";
    return rep;
}

Json adequacy_to_json(const AdequacyReport& r) {
    Json sims = Json::array();
    for (const auto& [fn, o] : r.sim) {
        Json row;
        row["fn"] = fn;
        row["arg"] = to_json(o.arg);
        row["verdict"] = to_string(o.verdict);
        row["goals"] = o.goals;
        sims.push_back(std::move(row));
    }
    Json j;
    j["sim"] = std::move(sims);
    j["sim_all_hold"] = r.sim_all_hold;
    j["trace_holds"] = r.trace_holds;
    j["agree"] = r.agree;
    j["note"] = r.note;
    j["goals"] = r.goals;
    return j;
}

}  // namespace abslog
