#include "abslog/spec.hpp"

#include <sstream>
#include <stdexcept>

namespace abslog {

namespace {

SpecCase id_case_no_measure() {
    SpecCase c;
    c.pre = [](const Value& x, const Value& xa, const Measure& d, const Resource& res) {
        return !d.has_value() && x == xa && res.is_unit();
    };
    c.post = [](const Value& r, const Value& ra, const Resource&) { return r == ra; };
    return c;
}

std::vector<AssumeTuple> mirror_assume(const Value& v) {
    return {AssumeTuple{v, std::nullopt, Resource::unit()}};
}

std::vector<GuarTuple> mirror_guar(const Value& v, const Resource& res_m) {
    return {GuarTuple{v, std::nullopt, Resource::unit(), Resource::unit(), res_m}};
}

}  // namespace

Spec default_spec() {
    Spec s;
    s.a_domain = {Value::unit()};
    s.cond = [](const Value&) { return id_case_no_measure(); };
    s.pre_assume = [](const Value&, const Value& x) { return mirror_assume(x); };
    s.pre_guar = [](const Value&, const Value& xa, const Resource& res_m) {
        return mirror_guar(xa, res_m);
    };
    s.post_assume = [](const Value&, const Value& r) { return mirror_assume(r); };
    s.post_guar = [](const Value&, const Value& ra, const Resource& res_m) {
        return mirror_guar(ra, res_m);
    };
    s.ra_candidates = [](const Value&, const Value&) {
        return std::vector<Value>{Value::unit()};
    };
    return s;
}

Spec spec_of_hl(std::function<bool(const Value&)> pre,
                std::function<bool(const Value&)> post) {
    Spec s = default_spec();
    s.cond = [pre, post](const Value&) {
        SpecCase c;
        c.pre = [pre](const Value& x, const Value& xa, const Measure&,
                      const Resource& res) {
            return x == xa && res.is_unit() && pre(x);
        };
        c.post = [post](const Value& r, const Value& ra, const Resource&) {
            return r == ra && post(r);
        };
        return c;
    };
    // enumerators stay on the d = None path; tuples failing the lifted
    // predicate are filtered out at translation time
    return s;
}

const Spec& SpecTable::lookup(const std::string& fn) const {
    auto it = entries.find(fn);
    if (it != entries.end()) return it->second;
    static const Spec fallback = default_spec();
    return fallback;
}

void validate_spec(const std::string& name, const Spec& s,
                   const std::vector<Value>& sample_args,
                   const std::vector<Value>& sample_rets) {
    auto fail = [&name](const std::string& what) {
        throw std::runtime_error("spec-witness-invalid: " + name + ": " + what);
    };
    for (const Value& a : s.a_domain) {
        SpecCase c = s.cond(a);
        for (const Value& x : sample_args) {
            for (const AssumeTuple& t : s.pre_assume(a, x)) {
                if (!c.pre(x, t.xa, t.d, t.res))
                    fail("pre_assume tuple breaks pre on arg " + show(x));
            }
            // pre_guar runs from the abstract side; sample args double as xa
            for (const GuarTuple& t : s.pre_guar(a, x, Resource::unit())) {
                if (!c.pre(t.xr, x, t.d, t.res))
                    fail("pre_guar tuple breaks pre on abstract arg " + show(x));
            }
        }
        for (const Value& r : sample_rets) {
            for (const AssumeTuple& t : s.post_assume(a, r)) {
                if (!c.post(r, t.xa, t.res))
                    fail("post_assume tuple breaks post on ret " + show(r));
            }
            for (const GuarTuple& t : s.post_guar(a, r, Resource::unit())) {
                if (!c.post(t.xr, r, t.res))
                    fail("post_guar tuple breaks post on abstract ret " + show(r));
            }
        }
    }
}

namespace {

bool pre_reaches(const Pcm& p, const SpecCase& c0, const SpecCase& c1,
                 const StrongerSample& smp) {
    for (const Value& x : smp.xs)
        for (const Value& xa : smp.xas)
            for (const Measure& d : smp.ds)
                for (const Resource& res : p.universe) {
                    if (!c0.pre(x, xa, d, res)) continue;
                    bool ok = upd_modality(p, res, [&](const Resource& res2) {
                        return c1.pre(x, xa, d, res2);
                    });
                    if (!ok) return false;
                }
    return true;
}

bool post_reaches(const Pcm& p, const SpecCase& c1, const SpecCase& c0,
                  const StrongerSample& smp) {
    for (const Value& r : smp.rs)
        for (const Value& ra : smp.ras)
            for (const Resource& res : p.universe) {
                if (!c1.post(r, ra, res)) continue;
                bool ok = upd_modality(p, res, [&](const Resource& res2) {
                    return c0.post(r, ra, res2);
                });
                if (!ok) return false;
            }
    return true;
}

}  // namespace

bool stronger(const Pcm& p, const Spec& s1, const Spec& s0, const StrongerSample& smp) {
    for (const Value& a0 : s0.a_domain) {
        SpecCase c0 = s0.cond(a0);
        bool found = false;
        for (const Value& a1 : s1.a_domain) {
            SpecCase c1 = s1.cond(a1);
            if (pre_reaches(p, c0, c1, smp) && post_reaches(p, c1, c0, smp)) {
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

bool table_stronger(const Pcm& p, const SpecTable& t1, const SpecTable& t0,
                    const StrongerSample& smp) {
    for (const auto& [fn, s0] : t0.entries) {
        if (!stronger(p, t1.lookup(fn), s0, smp)) return false;
    }
    return true;
}

}  // namespace abslog
