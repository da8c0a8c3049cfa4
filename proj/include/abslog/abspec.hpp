#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "abslog/enumcfg.hpp"
#include "abslog/module.hpp"
#include "abslog/spec.hpp"

namespace abslog {

// Friend body runs when the caller is one of the verified modules, context
// body otherwise. Both may use Get/Put (rerouted to the original-state slot
// under translation), Call, and Ipc. Whole-program abstractions have no
// separate context treatment: leave context_body empty and the single body
// serves every caller.
struct PreAbsFun {
    std::function<Prog(Value)> friend_body;
    std::function<Prog(Value)> context_body;  // may be empty
};

struct PreAbs {
    std::string name;
    Value init = Value::unit();
    std::map<std::string, PreAbsFun> funs;
};

using CfgPtr = std::shared_ptr<const EnumConfig>;

Value encode_measure(const Measure& d);
Measure decode_measure(const Value& v);

// Caller frame and function-held resource threaded through a translated
// body; updated only at interaction points.
struct FrameCtx {
    Resource frm;
    Resource res_f;
};

// Interaction points, exposed for direct testing. Both run against module
// state of the form Pair(encoded res_m, original state).
//
// assume_point takes a tuple (twin, d, res, frm) with frm from `frames`,
// keeps those passing cond(twin, d, res) and valid(res+res_f+res_m+frm),
// and yields List[twin, measure, frame]; an empty candidate set is UB.
Prog assume_point(std::vector<AssumeTuple> cands,
                  std::function<bool(const Value& twin, const Measure& d,
                                     const Resource& res)>
                      cond,
                  Resource res_f, std::vector<Resource> frames, std::string note);

// guarantee_point chooses a tuple (twin, d', res, res_f, res_m') passing
// cond(twin, d', res) and valid(res+res_f+res_m'+frm), writes res_m' back
// into the state pair, and yields List[twin, measure, res_f]; an empty
// candidate set is NB.
Prog guarantee_point(
    std::function<std::vector<GuarTuple>(const Resource& res_m)> cands,
    std::function<bool(const Value& twin, const Measure& d, const Resource& res)>
        cond,
    Resource frm, std::string note);

// Specified call: choose the callee's quantifier and a pre witness, insist
// the chosen measure is below d, perform the real call, then take a post
// witness. Yields Pair(abstract result, Pair(frame, res_f) encoded).
Prog abspec_call(const SpecTable& s, const Measure& d, const FrameCtx& ctx,
                 const std::string& fn, const Value& xa, const CfgPtr& cfg);

// Implicit pure calls: choose an ordinal bound, then loop over the
// configured menu with the bound strictly decreasing. Empty menu means the
// exit branch only. Yields Pair(Unit, encoded FrameCtx).
Prog abspec_ipc(const SpecTable& s, const Measure& d, const FrameCtx& ctx,
                const CfgPtr& cfg);

// One function under its spec: take the quantifier, assume the pre, run the
// body (measure None) or an IPC phase plus chosen abstract result (measure
// Some), and guarantee the post. Calls and Ipc in the body are translated;
// Get/Put address the original-state slot of the pair.
std::function<Prog(Value)> abspec_fun(const SpecTable& s, const Spec& sp,
                                      std::function<Prog(Value)> body,
                                      const CfgPtr& cfg);

// Intersection of the friend body under sp and the context body under the
// identity spec, via Take over bool.
std::function<Prog(Value)> to_abspec(const SpecTable& s, const PreAbsFun& f,
                                     const Spec& sp, const CfgPtr& cfg);

// [s | (pre, sigma) : own] — module state becomes Pair(sigma, pre.init).
ModuleSem build_abspec(const SpecTable& s, const PreAbs& pre, const Resource& sigma,
                       const SpecTable& own, const CfgPtr& cfg);

// Spec erasure: dispatch on get_caller against the friend set, interpret
// Ipc as skip, keep the original init.
ModuleSem to_abs(const std::vector<std::string>& friends, const PreAbs& pre);

// Arbitrary-behavior module: each exported function loops nondeterministic
// calls over ns x configured args ("safe-args" domain), then returns a value
// from the "safe-ret" domain (default Int 0).
ModuleSem safe_module(const std::string& name, const std::vector<std::string>& ns,
                      const std::vector<std::string>& ns_i, const CfgPtr& cfg);

// Human-readable sketch of the erased module, for the CLI listing.
std::string erase_listing(const std::vector<std::string>& friends, const PreAbs& pre,
                          const std::map<std::string, Value>& sample_args = {});

}  // namespace abslog
