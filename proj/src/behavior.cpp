#include "abslog/behavior.hpp"

#include <algorithm>

namespace abslog {

int compare(const ObsRecord& a, const ObsRecord& b) {
    int c = a.fn.compare(b.fn);
    if (c != 0) return c;
    c = compare(a.args, b.args);
    if (c != 0) return c;
    return compare(a.ret, b.ret);
}

bool operator==(const ObsRecord& a, const ObsRecord& b) { return compare(a, b) == 0; }
bool operator<(const ObsRecord& a, const ObsRecord& b) { return compare(a, b) < 0; }

int compare(const Trace& a, const Trace& b) {
    size_t n = std::min(a.events.size(), b.events.size());
    for (size_t i = 0; i < n; ++i) {
        int c = compare(a.events[i], b.events[i]);
        if (c != 0) return c;
    }
    if (a.events.size() != b.events.size())
        return a.events.size() < b.events.size() ? -1 : 1;
    if (a.terminal != b.terminal)
        return static_cast<int>(a.terminal) < static_cast<int>(b.terminal) ? -1 : 1;
    return compare(a.value, b.value);
}

bool operator==(const Trace& a, const Trace& b) { return compare(a, b) == 0; }
bool operator<(const Trace& a, const Trace& b) { return compare(a, b) < 0; }

Trace make_term(std::vector<ObsRecord> events, Value v) {
    Trace t;
    t.events = std::move(events);
    t.terminal = Terminal::Term;
    t.value = std::move(v);
    return t;
}

Trace make_error(std::vector<ObsRecord> events) {
    Trace t;
    t.events = std::move(events);
    t.terminal = Terminal::Error;
    return t;
}

Trace make_partial(std::vector<ObsRecord> events) {
    Trace t;
    t.events = std::move(events);
    t.terminal = Terminal::Partial;
    return t;
}

namespace {

bool is_prefix(const std::vector<ObsRecord>& p, const std::vector<ObsRecord>& e) {
    if (p.size() > e.size()) return false;
    for (size_t i = 0; i < p.size(); ++i)
        if (!(p[i] == e[i])) return false;
    return true;
}

}  // namespace

bool beh_is_top(const BehSet& s) {
    return s.ub_prefixes.count(std::vector<ObsRecord>{}) > 0;
}

BehSet beh_top() {
    BehSet s;
    s.ub_prefixes.insert(std::vector<ObsRecord>{});
    return s;
}

bool beh_covered(const BehSet& s, const Trace& t) {
    for (const auto& q : s.ub_prefixes)
        if (is_prefix(q, t.events)) return true;
    if (t.terminal == Terminal::Partial) {
        if (t.events.empty()) return true;
        for (const auto& tr : s.traces)
            if (is_prefix(t.events, tr.events)) return true;
        for (const auto& q : s.ub_prefixes)
            if (is_prefix(t.events, q)) return true;
        return false;
    }
    return s.traces.count(t) > 0;
}

BehSet beh_canon(BehSet s) {
    BehSet out;
    out.truncated = s.truncated;

    // ub markers form an antichain under the prefix order
    for (const auto& p : s.ub_prefixes) {
        bool subsumed = false;
        for (const auto& q : s.ub_prefixes)
            if (!(q == p) && is_prefix(q, p)) {
                subsumed = true;
                break;
            }
        if (!subsumed) out.ub_prefixes.insert(p);
    }

    for (const auto& t : s.traces) {
        bool drop = false;
        for (const auto& q : out.ub_prefixes)
            if (is_prefix(q, t.events)) {
                drop = true;
                break;
            }
        if (drop) continue;
        if (t.terminal == Terminal::Partial) {
            for (const auto& other : s.traces)
                if (!(other == t) && is_prefix(t.events, other.events)) {
                    drop = true;
                    break;
                }
            if (!drop)
                for (const auto& q : s.ub_prefixes)
                    if (is_prefix(t.events, q)) {
                        drop = true;
                        break;
                    }
        }
        if (!drop) out.traces.insert(t);
    }
    return out;
}

BehSet beh_union(const BehSet& a, const BehSet& b) {
    BehSet out = a;
    out.truncated = a.truncated || b.truncated;
    out.traces.insert(b.traces.begin(), b.traces.end());
    out.ub_prefixes.insert(b.ub_prefixes.begin(), b.ub_prefixes.end());
    return beh_canon(std::move(out));
}

namespace {

std::set<std::vector<ObsRecord>> all_prefixes(const BehSet& s) {
    std::set<std::vector<ObsRecord>> out;
    out.insert(std::vector<ObsRecord>{});
    auto add = [&out](const std::vector<ObsRecord>& events) {
        for (size_t len = 0; len <= events.size(); ++len)
            out.insert(std::vector<ObsRecord>(events.begin(), events.begin() + len));
    };
    for (const auto& t : s.traces) add(t.events);
    for (const auto& p : s.ub_prefixes) add(p);
    return out;
}

}  // namespace

BehSet beh_intersect(const BehSet& a, const BehSet& b) {
    BehSet out;
    out.truncated = a.truncated || b.truncated;

    for (const auto& p : a.ub_prefixes)
        for (const auto& q : b.ub_prefixes)
            if (is_prefix(q, p)) {
                out.ub_prefixes.insert(p);
                break;
            }
    for (const auto& p : b.ub_prefixes)
        for (const auto& q : a.ub_prefixes)
            if (is_prefix(q, p)) {
                out.ub_prefixes.insert(p);
                break;
            }

    for (const auto& t : a.traces)
        if (beh_covered(b, t)) out.traces.insert(t);
    for (const auto& t : b.traces)
        if (beh_covered(a, t)) out.traces.insert(t);

    // Partial members both closures share, at prefixes neither side stores
    for (const auto& p : all_prefixes(a)) {
        Trace part = make_partial(p);
        if (beh_covered(a, part) && beh_covered(b, part)) out.traces.insert(part);
    }

    return beh_canon(std::move(out));
}

std::vector<Value> resolve_domain(const Domain& d, const EnumConfig& cfg) {
    switch (d.kind) {
        case Domain::Kind::Finite:
            return d.values;
        case Domain::Kind::Empty:
            return {};
        case Domain::Kind::Described: {
            auto it = cfg.domains.find(d.key);
            if (it == cfg.domains.end())
                throw EnumError("enumeration-config-missing: domain " + d.name +
                                " (key " + d.key + ")");
            return it->second;
        }
    }
    return {};
}

namespace {

struct Enumerator {
    const EnumConfig& cfg;

    std::vector<Value> resolve(const Domain& d) const { return resolve_domain(d, cfg); }

    static BehSet single(Trace t) {
        BehSet s;
        s.traces.insert(std::move(t));
        return s;
    }

    static BehSet exhausted() {
        BehSet s;
        s.traces.insert(make_partial({}));
        s.truncated = true;
        return s;
    }

    static BehSet nb() {
        BehSet s;
        s.traces.insert(make_partial({}));
        return s;
    }

    static BehSet prepend(const ObsRecord& rec, const BehSet& s) {
        BehSet out;
        out.truncated = s.truncated;
        for (const auto& t : s.traces) {
            Trace t2 = t;
            t2.events.insert(t2.events.begin(), rec);
            out.traces.insert(std::move(t2));
        }
        for (const auto& p : s.ub_prefixes) {
            std::vector<ObsRecord> p2 = p;
            p2.insert(p2.begin(), rec);
            out.ub_prefixes.insert(std::move(p2));
        }
        return out;
    }

    BehSet go(const Prog& p, int64_t budget) const {
        switch (p.kind()) {
            case Prog::Kind::Ret:
                return single(make_term({}, p.ret_value()));
            case Prog::Kind::Tau:
                if (budget <= 0) return exhausted();
                return go(p.next(), budget - 1);
            case Prog::Kind::Vis:
                break;
        }
        if (budget <= 0) return exhausted();
        const Event& e = p.event();
        int64_t b2 = budget - 1;
        switch (e.kind) {
            case EventKind::Fault:
                return single(make_error({}));
            case EventKind::Choose: {
                auto dom = resolve(e.domain);
                if (dom.empty()) return nb();
                BehSet out;
                for (const auto& v : dom) out = beh_union(out, go(p.resume(v), b2));
                return out;
            }
            case EventKind::Take: {
                auto dom = resolve(e.domain);
                if (dom.empty()) return beh_top();
                std::optional<BehSet> acc;
                for (const auto& v : dom) {
                    BehSet s = go(p.resume(v), b2);
                    acc = acc ? beh_intersect(*acc, s) : std::move(s);
                    if (acc->traces.empty() && acc->ub_prefixes.empty()) break;
                }
                return *acc;
            }
            case EventKind::Obs: {
                auto answers = cfg.responses_for(e.fn);
                if (answers.empty()) return nb();
                BehSet out;
                for (const auto& r : answers) {
                    ObsRecord rec{e.fn, e.payload, r};
                    out = beh_union(out, prepend(rec, go(p.resume(r), b2)));
                }
                return out;
            }
            default:
                // Get/Put/GetCaller/Call/Ipc must have been handled by close;
                // reaching the enumerator is a program fault
                return single(make_error({}));
        }
    }
};

}  // namespace

BehSet enumerate_prog(const Prog& p, int64_t budget, const EnumConfig& cfg) {
    Enumerator en{cfg};
    return beh_canon(en.go(p, budget));
}

Verdict included(const BehSet& impl, const BehSet& abs) {
    std::vector<Trace> violations;
    for (const auto& t : impl.traces)
        if (!beh_covered(abs, t)) violations.push_back(t);
    for (const auto& p : impl.ub_prefixes) {
        bool covered = false;
        for (const auto& q : abs.ub_prefixes)
            if (is_prefix(q, p)) {
                covered = true;
                break;
            }
        if (!covered) violations.push_back(make_error(p));
    }
    Verdict v;
    if (violations.empty()) {
        v.holds = true;
        return v;
    }
    v.holds = false;
    auto best = std::min_element(
        violations.begin(), violations.end(), [](const Trace& a, const Trace& b) {
            if (a.events.size() != b.events.size())
                return a.events.size() < b.events.size();
            return a < b;
        });
    v.witness = *best;
    return v;
}

RefineReport check_refine(const ModStack& impl, const ModStack& abs, const ModStack& ctx,
                          const std::string& main_fn, const std::vector<Value>& args,
                          int64_t budget, const EnumConfig& cfg,
                          std::optional<int64_t> abs_budget) {
    int64_t ab = abs_budget.value_or(budget * 2);
    RefineReport report;
    for (const auto& arg : args) {
        BehSet bi = enumerate_prog(close_stack(link(impl, ctx), main_fn, arg), budget, cfg);
        BehSet ba = enumerate_prog(close_stack(link(abs, ctx), main_fn, arg), ab, cfg);
        ArgReport r;
        r.arg = arg;
        r.verdict = included(bi, ba);
        r.impl_truncated = bi.truncated;
        r.abs_truncated = ba.truncated;
        report.holds = report.holds && r.verdict.holds;
        report.args.push_back(std::move(r));
    }
    return report;
}

Json trace_to_json(const Trace& t) {
    Json events = Json::array();
    for (const auto& e : t.events)
        events.push_back(Json{{"fn", e.fn}, {"args", to_json(e.args)}, {"ret", to_json(e.ret)}});
    const char* term = "partial";
    if (t.terminal == Terminal::Term) term = "term";
    if (t.terminal == Terminal::Error) term = "error";
    if (t.terminal == Terminal::Diverge) term = "diverge";
    Json j{{"events", std::move(events)}, {"terminal", term}};
    if (t.terminal == Terminal::Term) j["value"] = to_json(t.value);
    return j;
}

Json behset_to_json(const BehSet& s) {
    Json traces = Json::array();
    for (const auto& t : s.traces) traces.push_back(trace_to_json(t));
    Json ubs = Json::array();
    for (const auto& p : s.ub_prefixes) {
        Json events = Json::array();
        for (const auto& e : p)
            events.push_back(
                Json{{"fn", e.fn}, {"args", to_json(e.args)}, {"ret", to_json(e.ret)}});
        ubs.push_back(std::move(events));
    }
    return Json{{"traces", std::move(traces)},
                {"ub_prefixes", std::move(ubs)},
                {"truncated", s.truncated}};
}

Json report_to_json(const RefineReport& r) {
    Json args = Json::array();
    for (const auto& a : r.args) {
        Json ja{{"arg", to_json(a.arg)},
                {"verdict", a.verdict.holds ? "holds" : "violation"},
                {"impl_truncated", a.impl_truncated},
                {"abs_truncated", a.abs_truncated}};
        if (a.verdict.witness) ja["witness"] = trace_to_json(*a.verdict.witness);
        args.push_back(std::move(ja));
    }
    return Json{{"verdict", r.holds ? "holds" : "violation"}, {"args", std::move(args)}};
}

}  // namespace abslog
