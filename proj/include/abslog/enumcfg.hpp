#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "abslog/pcm.hpp"
#include "abslog/value.hpp"

namespace abslog {

struct EnumError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The allocator's fresh-block domain is the one key with a shipped default;
// everything else is configured per check.
std::map<std::string, std::vector<Value>> default_enum_domains();

// Finite candidate sets consumed at check time: resolution of Described
// domains, environment answers for Obs, and the instantiation material the
// spec translation bakes into its choose/take sites.
struct EnumConfig {
    // Described domain key -> candidate values
    std::map<std::string, std::vector<Value>> domains = default_enum_domains();

    // Obs fn -> possible environment answers; absent means {Int 0}
    std::map<std::string, std::vector<Value>> responders;

    // pure calls a translated friend may interrogate between steps
    std::vector<std::pair<std::string, Value>> ipc_menu;

    // iteration bound for the IPC loop (finite part per omega level)
    Ordinal ipc_bound{0, 3};

    // frame resources an ASSUME ranges over; empty means {unit}
    std::vector<Resource> frames;

    // env call returns assumed during simulation, fn -> candidates
    std::map<std::string, std::vector<Value>> call_returns;

    // caller names a translated body may be entered from
    std::vector<std::string> callers;

    std::vector<Value> responses_for(const std::string& fn) const;
    std::vector<Resource> frame_candidates() const;
};

EnumConfig enumcfg_from_json(const Json& j);
EnumConfig load_enumcfg(const std::string& path);
Json enumcfg_to_json(const EnumConfig& cfg);

}  // namespace abslog
