#include "abslog/abspec.hpp"

#include <algorithm>
#include <sstream>

namespace abslog {

Value encode_measure(const Measure& d) {
    if (!d.has_value()) return Value::none();
    return Value::some(Value::ord(*d));
}

Measure decode_measure(const Value& v) {
    if (v.kind() == Value::Kind::None) return std::nullopt;
    return Measure{v.some_of().ord_of()};
}

namespace {

Value encode_ctx(const FrameCtx& c) {
    return Value::pair(encode_resource(c.frm), encode_resource(c.res_f));
}

FrameCtx decode_ctx(const Value& v) {
    return FrameCtx{decode_resource(v.first()).value(),
                    decode_resource(v.second()).value()};
}

// Module state pair accessors. A malformed pair can only arise from outside
// tampering; fault so it surfaces as an Error trace.
bool state_res(const Value& st, Resource* out) {
    if (st.kind() != Value::Kind::Pair) return false;
    auto r = decode_resource(st.first());
    if (!r) return false;
    *out = *r;
    return true;
}

}  // namespace

Prog assume_point(std::vector<AssumeTuple> cands,
                  std::function<bool(const Value&, const Measure&, const Resource&)> cond,
                  Resource res_f, std::vector<Resource> frames, std::string note) {
    return bind(get_state(), [=](Value st) {
        Resource res_m;
        if (!state_res(st, &res_m)) return fault("abspec state malformed: " + note);
        std::vector<Value> dom;
        for (const AssumeTuple& t : cands) {
            if (!cond(t.xa, t.d, t.res)) continue;
            for (const Resource& frm : frames) {
                if (!valid(add(add(t.res, res_f), add(res_m, frm)))) continue;
                dom.push_back(Value::list(
                    {t.xa, encode_measure(t.d), encode_resource(frm)}));
            }
        }
        return take(Domain::finite(std::move(dom)), note);
    });
}

Prog guarantee_point(std::function<std::vector<GuarTuple>(const Resource&)> cands,
                     std::function<bool(const Value&, const Measure&, const Resource&)> cond,
                     Resource frm, std::string note) {
    return bind(get_state(), [=](Value st) {
        Resource res_m;
        if (!state_res(st, &res_m)) return fault("abspec state malformed: " + note);
        Value orig = st.second();
        std::vector<Value> dom;
        for (const GuarTuple& t : cands(res_m)) {
            if (!cond(t.xr, t.d, t.res)) continue;
            if (!valid(add(add(t.res, t.res_f), add(t.res_m, frm)))) continue;
            dom.push_back(Value::list({t.xr, encode_measure(t.d),
                                       encode_resource(t.res_f),
                                       encode_resource(t.res_m)}));
        }
        return bind(choose(Domain::finite(std::move(dom)), note), [=](Value tv) {
            const auto& it = tv.items();
            Resource new_m = decode_resource(it[3]).value();
            Value out = Value::list({it[0], it[1], it[2]});
            return bind(put_state(Value::pair(encode_resource(new_m), orig)),
                        [out](Value) { return ret(out); });
        });
    });
}

Prog abspec_call(const SpecTable& s, const Measure& d, const FrameCtx& ctx,
                 const std::string& fn, const Value& xa, const CfgPtr& cfg) {
    // copy: the continuations below outlive the caller's table
    Spec sp = s.lookup(fn);
    return bind(choose(Domain::finite(sp.a_domain), "quantifier for " + fn),
                [=](Value a) {
        SpecCase c = sp.cond(a);
        auto pre_cands = [sp, a, xa](const Resource& rm) {
            return sp.pre_guar(a, xa, rm);
        };
        auto pre_cond = [c, xa](const Value& x, const Measure& dp, const Resource& res) {
            return c.pre(x, xa, dp, res);
        };
        return bind(guarantee_point(pre_cands, pre_cond, ctx.frm, "pre of " + fn),
                    [=](Value g) {
            const auto& git = g.items();
            Value x = git[0];
            Measure dp = decode_measure(git[1]);
            Resource res_f2 = decode_resource(git[2]).value();
            return seq(
                guarantee(measure_lt(dp, d), "measure decreases at " + fn),
                bind(call(fn, x), [=](Value r) {
                    auto post_cond = [c, r](const Value& ra, const Measure&,
                                            const Resource& res) {
                        return c.post(r, ra, res);
                    };
                    return bind(assume_point(sp.post_assume(a, r), post_cond, res_f2,
                                             cfg->frame_candidates(), "post of " + fn),
                                [=](Value t) {
                        const auto& tit = t.items();
                        Resource frm2 = decode_resource(tit[2]).value();
                        return ret(Value::pair(tit[0],
                                               encode_ctx(FrameCtx{frm2, res_f2})));
                    });
                }));
        });
    });
}

namespace {

Prog ipc_loop(const SpecTable& s, const Ordinal& i, const FrameCtx& ctx,
              const CfgPtr& cfg) {
    auto next = ord_pred(i, cfg->ipc_bound.n);
    std::vector<Value> flags = {Value::boolean(false)};
    if (next.has_value() && !cfg->ipc_menu.empty())
        flags.push_back(Value::boolean(true));
    SpecTable table = s;
    return bind(choose(Domain::finite(std::move(flags)), "ipc continue"),
                [=](Value c) {
        if (!c.bool_of()) return ret(Value::pair(Value::unit(), encode_ctx(ctx)));
        std::vector<Value> menu;
        for (const auto& [fn, arg] : cfg->ipc_menu)
            menu.push_back(Value::pair(Value::str(fn), arg));
        return bind(choose(Domain::finite(std::move(menu)), "ipc menu"), [=](Value m) {
            std::string fn = m.first().str_of();
            return bind(abspec_call(table, Measure{i}, ctx, fn, m.second(), cfg),
                        [=](Value rp) {
                FrameCtx c2 = decode_ctx(rp.second());
                return Prog::tau_([=] { return ipc_loop(table, *next, c2, cfg); });
            });
        });
    });
}

}  // namespace

Prog abspec_ipc(const SpecTable& s, const Measure&, const FrameCtx& ctx,
                const CfgPtr& cfg) {
    Ordinal bound = cfg->ipc_bound;
    std::vector<Value> bounds = {Value::ord(bound)};
    SpecTable table = s;
    return bind(choose(Domain::finite(std::move(bounds)), "ipc bound"), [=](Value b) {
        return ipc_loop(table, b.ord_of(), ctx, cfg);
    });
}

namespace {

// Rewrites a body so Get/Put address the original-state slot, Call runs the
// specified-call protocol, and Ipc runs the pure-call loop. Produces
// Pair(result, encoded FrameCtx).
Prog translate_body(Prog p, const SpecTable& s, const Measure& d, const FrameCtx& ctx,
                    const CfgPtr& cfg) {
    switch (p.kind()) {
        case Prog::Kind::Ret:
            return ret(Value::pair(p.ret_value(), encode_ctx(ctx)));
        case Prog::Kind::Tau:
            return Prog::tau_([=] { return translate_body(p.next(), s, d, ctx, cfg); });
        case Prog::Kind::Vis:
            break;
    }
    const Event& e = p.event();
    SpecTable table = s;
    switch (e.kind) {
        case EventKind::Call:
            return bind(abspec_call(table, d, ctx, e.fn, e.payload, cfg), [=](Value rp) {
                FrameCtx c2 = decode_ctx(rp.second());
                return translate_body(p.resume(rp.first()), table, d, c2, cfg);
            });
        case EventKind::Ipc:
            return bind(abspec_ipc(table, d, ctx, cfg), [=](Value rp) {
                FrameCtx c2 = decode_ctx(rp.second());
                return translate_body(p.resume(Value::unit()), table, d, c2, cfg);
            });
        case EventKind::Get:
            return bind(get_state(), [=](Value st) {
                return translate_body(p.resume(st.second()), table, d, ctx, cfg);
            });
        case EventKind::Put:
            return bind(get_state(), [=](Value st) {
                return bind(put_state(Value::pair(st.first(), e.payload)), [=](Value) {
                    return translate_body(p.resume(Value::unit()), table, d, ctx, cfg);
                });
            });
        default:
            return Prog::vis_(e, [=](Value v) {
                return translate_body(p.resume(v), table, d, ctx, cfg);
            });
    }
}

}  // namespace

std::function<Prog(Value)> abspec_fun(const SpecTable& s, const Spec& sp,
                                      std::function<Prog(Value)> body,
                                      const CfgPtr& cfg) {
    SpecTable table = s;
    Spec spec = sp;
    return [=](Value x) {
        return bind(take(Domain::finite(spec.a_domain), "spec quantifier"),
                    [=](Value a) {
            SpecCase c = spec.cond(a);
            auto pre_cond = [c, x](const Value& xa, const Measure& d,
                                   const Resource& res) {
                return c.pre(x, xa, d, res);
            };
            return bind(assume_point(spec.pre_assume(a, x), pre_cond, Resource::unit(),
                                     cfg->frame_candidates(), "entry pre"),
                        [=](Value t) {
                const auto& tit = t.items();
                Value xa = tit[0];
                Measure d = decode_measure(tit[1]);
                FrameCtx ctx{decode_resource(tit[2]).value(), Resource::unit()};
                Prog path =
                    d.has_value()
                        ? bind(abspec_ipc(table, d, ctx, cfg),
                               [=](Value ip) {
                                   return bind(choose(Domain::finite(
                                                          spec.ra_candidates(a, xa)),
                                                      "pure result"),
                                               [=](Value ra) {
                                                   return ret(Value::pair(
                                                       ra, ip.second()));
                                               });
                               })
                        : translate_body(body(xa), table, d, ctx, cfg);
                return bind(path, [=](Value rp) {
                    Value ra = rp.first();
                    FrameCtx c2 = decode_ctx(rp.second());
                    auto post_cands = [spec, a, ra](const Resource& rm) {
                        return spec.post_guar(a, ra, rm);
                    };
                    auto post_cond = [c, ra](const Value& r, const Measure&,
                                             const Resource& res) {
                        return c.post(r, ra, res);
                    };
                    return bind(guarantee_point(post_cands, post_cond, c2.frm,
                                                "exit post"),
                                [](Value g) { return ret(g.items()[0]); });
                });
            });
        });
    };
}

std::function<Prog(Value)> to_abspec(const SpecTable& s, const PreAbsFun& f,
                                     const Spec& sp, const CfgPtr& cfg) {
    auto as_friend = abspec_fun(s, sp, f.friend_body, cfg);
    if (!f.context_body) return as_friend;
    auto as_context = abspec_fun(s, default_spec(), f.context_body, cfg);
    return [=](Value x) {
        std::vector<Value> bs = {Value::boolean(false), Value::boolean(true)};
        return bind(take(Domain::finite(std::move(bs)), "friend or context"),
                    [=](Value b) { return b.bool_of() ? as_friend(x) : as_context(x); });
    };
}

ModuleSem build_abspec(const SpecTable& s, const PreAbs& pre, const Resource& sigma,
                       const SpecTable& own, const CfgPtr& cfg) {
    ModuleSem m;
    m.name = pre.name;
    m.init = Value::pair(encode_resource(sigma), pre.init);
    for (const auto& [fn, f] : pre.funs)
        m.funs[fn] = to_abspec(s, f, own.lookup(fn), cfg);
    return m;
}

namespace {

Prog erase_ipc(Prog p) {
    switch (p.kind()) {
        case Prog::Kind::Ret:
            return p;
        case Prog::Kind::Tau:
            return Prog::tau_([p] { return erase_ipc(p.next()); });
        case Prog::Kind::Vis:
            break;
    }
    if (p.event().kind == EventKind::Ipc)
        return Prog::tau_([p] { return erase_ipc(p.resume(Value::unit())); });
    return Prog::vis_(p.event(), [p](Value v) { return erase_ipc(p.resume(v)); });
}

}  // namespace

ModuleSem to_abs(const std::vector<std::string>& friends, const PreAbs& pre) {
    ModuleSem m;
    m.name = pre.name;
    m.init = pre.init;
    for (const auto& [fn, f] : pre.funs) {
        auto frd = f.friend_body;
        auto ctx = f.context_body ? f.context_body : f.friend_body;
        std::vector<std::string> fs = friends;
        m.funs[fn] = [frd, ctx, fs](Value x) {
            return bind(get_caller(), [=](Value c) {
                bool is_friend = std::find(fs.begin(), fs.end(), c.str_of()) != fs.end();
                return erase_ipc(is_friend ? frd(x) : ctx(x));
            });
        };
    }
    return m;
}

ModuleSem safe_module(const std::string& name, const std::vector<std::string>& ns,
                      const std::vector<std::string>& ns_i, const CfgPtr& cfg) {
    std::vector<Value> args;
    if (auto it = cfg->domains.find("safe-args"); it != cfg->domains.end())
        args = it->second;
    std::vector<Value> rets = {Value::integer(0)};
    if (auto it = cfg->domains.find("safe-ret"); it != cfg->domains.end())
        rets = it->second;

    std::vector<Value> menu;
    for (const std::string& g : ns)
        for (const Value& a : args) menu.push_back(Value::pair(Value::str(g), a));

    // shared_ptr so the recursive lambda can capture itself
    auto loop = std::make_shared<std::function<Prog()>>();
    *loop = [menu, rets, loop]() -> Prog {
        std::vector<Value> flags = {Value::boolean(false)};
        if (!menu.empty()) flags.push_back(Value::boolean(true));
        return bind(choose(Domain::finite(flags), "keep calling"), [=](Value c) {
            if (!c.bool_of())
                return bind(choose(Domain::finite(rets), "safe return"),
                            [](Value r) { return ret(r); });
            return bind(choose(Domain::finite(menu), "safe call"), [=](Value m) {
                return bind(call(m.first().str_of(), m.second()), [=](Value) {
                    return Prog::tau_([loop] { return (*loop)(); });
                });
            });
        });
    };

    ModuleSem m;
    m.name = name;
    for (const std::string& f : ns_i)
        m.funs[f] = [loop](Value) { return (*loop)(); };
    return m;
}

namespace {

void sketch_prog(Prog p, int depth, std::ostringstream& out, const std::string& pad) {
    for (int i = 0; i < depth; ++i) {
        switch (p.kind()) {
            case Prog::Kind::Ret:
                out << pad << "ret " << show(p.ret_value()) << "\n";
                return;
            case Prog::Kind::Tau:
                p = p.next();
                continue;
            case Prog::Kind::Vis:
                break;
        }
        const Event& e = p.event();
        switch (e.kind) {
            case EventKind::Choose:
            case EventKind::Take: {
                const char* w = e.kind == EventKind::Choose ? "choose" : "take";
                out << pad << w << "[" << e.domain.values.size() << "]";
                if (!e.note.empty()) out << " " << e.note;
                out << "\n";
                if (e.domain.kind != Domain::Kind::Finite || e.domain.values.empty()) {
                    out << pad << (e.kind == EventKind::Choose ? "(no behavior)"
                                                               : "(undefined)")
                        << "\n";
                    return;
                }
                p = p.resume(e.domain.values.front());
                continue;
            }
            case EventKind::Obs:
                out << pad << "obs " << e.fn << " " << show(e.payload) << "\n";
                p = p.resume(Value::integer(0));
                continue;
            case EventKind::Call:
                out << pad << "call " << e.fn << " " << show(e.payload) << "\n";
                p = p.resume(Value::integer(0));
                continue;
            case EventKind::Get:
                out << pad << "get\n";
                p = p.resume(Value::unit());
                continue;
            case EventKind::Put:
                out << pad << "put " << show(e.payload) << "\n";
                p = p.resume(Value::unit());
                continue;
            case EventKind::GetCaller:
                out << pad << "get_caller\n";
                p = p.resume(Value::str("<sketch>"));
                continue;
            case EventKind::Ipc:
                out << pad << "ipc -> skip\n";
                p = p.resume(Value::unit());
                continue;
            case EventKind::Fault:
                out << pad << "fault " << e.note << "\n";
                return;
        }
    }
    out << pad << "...\n";
}

}  // namespace

std::string erase_listing(const std::vector<std::string>& friends, const PreAbs& pre,
                          const std::map<std::string, Value>& sample_args) {
    std::ostringstream out;
    out << "module " << pre.name << "\n";
    out << "friends:";
    for (const auto& f : friends) out << " " << f;
    out << "\ninit: " << show(pre.init) << "\n";
    for (const auto& [fn, f] : pre.funs) {
        Value arg = Value::unit();
        if (auto it = sample_args.find(fn); it != sample_args.end()) arg = it->second;
        out << "fn " << fn << " (sketch at arg " << show(arg) << ")\n";
        if (!f.context_body) {
            sketch_prog(f.friend_body(arg), 12, out, "  ");
            continue;
        }
        out << "  friend:\n";
        sketch_prog(f.friend_body(arg), 12, out, "    ");
        out << "  context:\n";
        sketch_prog(f.context_body(arg), 12, out, "    ");
    }
    return out.str();
}

}  // namespace abslog
