#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "abslog/enumcfg.hpp"
#include "abslog/module.hpp"
#include "abslog/prog.hpp"

namespace abslog {

struct ObsRecord {
    std::string fn;
    Value args;
    Value ret;
};

int compare(const ObsRecord& a, const ObsRecord& b);
bool operator==(const ObsRecord& a, const ObsRecord& b);
bool operator<(const ObsRecord& a, const ObsRecord& b);

// Diverge exists for fidelity of the data model; the bounded enumerator
// renders exhaustion as Partial and never emits it.
enum class Terminal { Term, Error, Partial, Diverge };

struct Trace {
    std::vector<ObsRecord> events;
    Terminal terminal = Terminal::Partial;
    Value value;
};

int compare(const Trace& a, const Trace& b);
bool operator==(const Trace& a, const Trace& b);
bool operator<(const Trace& a, const Trace& b);

Trace make_term(std::vector<ObsRecord> events, Value v);
Trace make_error(std::vector<ObsRecord> events);
Trace make_partial(std::vector<ObsRecord> events);

// Canonical bounded behavior set. Stored traces are the minimal generators:
// Partial members implied by another element's prefix closure are dropped.
// A ub_prefix p stands for every trace extending p (Take over the empty
// domain reached after p); Top is the [] prefix. truncated records that some
// Partial came from budget exhaustion rather than the program.
struct BehSet {
    std::set<Trace> traces;
    std::set<std::vector<ObsRecord>> ub_prefixes;
    bool truncated = false;
};

bool beh_is_top(const BehSet& s);
BehSet beh_top();

// Membership in the Partial-closure of s.
bool beh_covered(const BehSet& s, const Trace& t);

BehSet beh_canon(BehSet s);
BehSet beh_union(const BehSet& a, const BehSet& b);
BehSet beh_intersect(const BehSet& a, const BehSet& b);

// Candidate values of a Choose/Take domain. Described domains look up their
// key in cfg.domains and throw EnumError when the key is absent.
std::vector<Value> resolve_domain(const Domain& d, const EnumConfig& cfg);

BehSet enumerate_prog(const Prog& p, int64_t budget, const EnumConfig& cfg);

struct Verdict {
    bool holds = false;
    std::optional<Trace> witness;
};

Verdict included(const BehSet& impl, const BehSet& abs);

struct ArgReport {
    Value arg;
    Verdict verdict;
    bool impl_truncated = false;
    bool abs_truncated = false;
};

struct RefineReport {
    bool holds = true;
    std::vector<ArgReport> args;
};

// Encloses impl and abs with ctx, enumerates both sides per argument, and
// checks trace inclusion. abs_budget defaults to twice the impl budget so
// abstraction-side truncation does not masquerade as a violation.
RefineReport check_refine(const ModStack& impl, const ModStack& abs, const ModStack& ctx,
                          const std::string& main_fn, const std::vector<Value>& args,
                          int64_t budget, const EnumConfig& cfg,
                          std::optional<int64_t> abs_budget = std::nullopt);

Json trace_to_json(const Trace& t);
Json behset_to_json(const BehSet& s);
Json report_to_json(const RefineReport& r);

}  // namespace abslog
