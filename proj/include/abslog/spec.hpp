#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "abslog/pcm.hpp"
#include "abslog/value.hpp"

namespace abslog {

// Instantiation candidates for the take side of an ASSUME: the abstract twin
// of a known concrete value, plus measure and transferred resource. The
// frame is crossed in from the enumeration config.
struct AssumeTuple {
    Value xa;
    Measure d;
    Resource res;
};

// Candidates for the choose side of a GUARANTEE: the concrete twin of a
// known abstract value, measure, transferred resource, the resource the
// choosing side retains (res_f), and the module resource it updates to.
struct GuarTuple {
    Value xr;
    Measure d;
    Resource res;
    Resource res_f;
    Resource res_m;
};

struct SpecCase {
    std::function<bool(const Value& x, const Value& xa, const Measure& d,
                       const Resource& res)>
        pre;
    std::function<bool(const Value& r, const Value& ra, const Resource& res)> post;
};

// A function specification: abstract quantifier domain, pre/post predicates,
// and the finite witness enumerators the operational translation draws its
// choose/take tuples from. The paper quantifies over arbitrary tuples; the
// enumerators are the executable stand-in and double as instantiation hints.
struct Spec {
    std::vector<Value> a_domain = {Value::unit()};
    std::function<SpecCase(const Value& a)> cond;

    // callee entry: concrete x known, take (xa, d, res)
    std::function<std::vector<AssumeTuple>(const Value& a, const Value& x)> pre_assume;
    // caller at a call site: abstract xa known, choose (x, d', res, res_f, res_m')
    std::function<std::vector<GuarTuple>(const Value& a, const Value& xa,
                                         const Resource& res_m)>
        pre_guar;
    // caller at return: concrete r known, take (ra, d, res)
    std::function<std::vector<AssumeTuple>(const Value& a, const Value& r)> post_assume;
    // callee exit: abstract ra known, choose (r, d', res, res_f, res_m')
    std::function<std::vector<GuarTuple>(const Value& a, const Value& ra,
                                         const Resource& res_m)>
        post_guar;

    // abstract results available on the pure (d = Some) path
    std::function<std::vector<Value>(const Value& a, const Value& xa)> ra_candidates;
};

// s*: concrete and abstract sides coincide, no measure, no resources.
Spec default_spec();

// Resource-free Hoare lifting: plain predicates on the packed argument and
// the result; d left unconstrained by the predicate (the enumerators still
// only supply None).
Spec spec_of_hl(std::function<bool(const Value&)> pre,
                std::function<bool(const Value&)> post);

struct SpecTable {
    std::map<std::string, Spec> entries;

    // undeclared names resolve to s*
    const Spec& lookup(const std::string& fn) const;
    bool declares(const std::string& fn) const { return entries.count(fn) > 0; }
};

// Eager registration check: every enumerated witness tuple must satisfy its
// own predicate on the given sample values. Throws with a diagnostic naming
// the offending tuple.
void validate_spec(const std::string& name, const Spec& s,
                   const std::vector<Value>& sample_args,
                   const std::vector<Value>& sample_rets);

struct StrongerSample {
    std::vector<Value> xs;
    std::vector<Value> xas;
    std::vector<Measure> ds;
    std::vector<Value> rs;
    std::vector<Value> ras;
};

// Sampled s1 >= s0: for every a0 some a1 makes pre0 reach pre1 and post1
// reach post0 through the update modality, over the sample and p's universe.
bool stronger(const Pcm& p, const Spec& s1, const Spec& s0, const StrongerSample& smp);

// Sampled table strengthening: s1 covers every function s0 declares.
bool table_stronger(const Pcm& p, const SpecTable& t1, const SpecTable& t0,
                    const StrongerSample& smp);

}  // namespace abslog
