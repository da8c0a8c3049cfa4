#include "abslog/enumcfg.hpp"

#include <fstream>

namespace abslog {

std::map<std::string, std::vector<Value>> default_enum_domains() {
    return {{"mem.fresh",
             {Value::integer(0), Value::integer(1), Value::integer(2), Value::integer(3)}}};
}

std::vector<Value> EnumConfig::responses_for(const std::string& fn) const {
    auto it = responders.find(fn);
    if (it != responders.end()) return it->second;
    return {Value::integer(0)};
}

std::vector<Resource> EnumConfig::frame_candidates() const {
    if (frames.empty()) return {Resource::unit()};
    return frames;
}

namespace {

std::vector<Value> values_from_json(const Json& arr, const std::string& where) {
    if (!arr.is_array()) throw EnumError("enum config: " + where + " must be an array");
    std::vector<Value> out;
    for (const auto& item : arr) {
        auto v = value_from_json(item);
        if (!v) throw EnumError("enum config: bad value in " + where);
        out.push_back(*v);
    }
    return out;
}

}  // namespace

EnumConfig enumcfg_from_json(const Json& j) {
    EnumConfig cfg;
    if (!j.is_object()) throw EnumError("enum config: top level must be an object");
    if (j.contains("domains"))
        for (const auto& [key, arr] : j["domains"].items())
            cfg.domains[key] = values_from_json(arr, "domains." + key);
    if (j.contains("responders"))
        for (const auto& [key, arr] : j["responders"].items())
            cfg.responders[key] = values_from_json(arr, "responders." + key);
    if (j.contains("ipc_menu")) {
        for (const auto& item : j["ipc_menu"]) {
            if (!item.is_object() || !item.contains("fn") || !item.contains("arg"))
                throw EnumError("enum config: ipc_menu entries need fn and arg");
            auto v = value_from_json(item["arg"]);
            if (!v) throw EnumError("enum config: bad ipc_menu arg");
            cfg.ipc_menu.emplace_back(item["fn"].get<std::string>(), *v);
        }
    }
    if (j.contains("ipc_bound")) {
        const auto& b = j["ipc_bound"];
        if (!b.is_object() || !b.contains("omega") || !b.contains("fin"))
            throw EnumError("enum config: ipc_bound needs omega and fin");
        cfg.ipc_bound = Ordinal{b["omega"].get<int64_t>(), b["fin"].get<int64_t>()};
    }
    if (j.contains("frames")) {
        for (const auto& item : j["frames"]) {
            auto v = value_from_json(item);
            if (!v) throw EnumError("enum config: bad frame value");
            auto r = decode_resource(*v);
            if (!r) throw EnumError("enum config: frame is not a resource encoding");
            cfg.frames.push_back(*r);
        }
    }
    if (j.contains("call_returns"))
        for (const auto& [key, arr] : j["call_returns"].items())
            cfg.call_returns[key] = values_from_json(arr, "call_returns." + key);
    if (j.contains("callers"))
        for (const auto& item : j["callers"]) cfg.callers.push_back(item.get<std::string>());
    return cfg;
}

EnumConfig load_enumcfg(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw EnumError("enum config: cannot open " + path);
    Json j = Json::parse(in, nullptr, true, true);
    return enumcfg_from_json(j);
}

Json enumcfg_to_json(const EnumConfig& cfg) {
    Json j = Json::object();
    Json domains = Json::object();
    for (const auto& [k, vs] : cfg.domains) {
        Json arr = Json::array();
        for (const auto& v : vs) arr.push_back(to_json(v));
        domains[k] = std::move(arr);
    }
    j["domains"] = std::move(domains);
    Json responders = Json::object();
    for (const auto& [k, vs] : cfg.responders) {
        Json arr = Json::array();
        for (const auto& v : vs) arr.push_back(to_json(v));
        responders[k] = std::move(arr);
    }
    j["responders"] = std::move(responders);
    Json menu = Json::array();
    for (const auto& [fn, arg] : cfg.ipc_menu)
        menu.push_back(Json{{"fn", fn}, {"arg", to_json(arg)}});
    j["ipc_menu"] = std::move(menu);
    j["ipc_bound"] = Json{{"omega", cfg.ipc_bound.k}, {"fin", cfg.ipc_bound.n}};
    Json frames = Json::array();
    for (const auto& r : cfg.frames) frames.push_back(to_json(encode_resource(r)));
    j["frames"] = std::move(frames);
    Json creturns = Json::object();
    for (const auto& [k, vs] : cfg.call_returns) {
        Json arr = Json::array();
        for (const auto& v : vs) arr.push_back(to_json(v));
        creturns[k] = std::move(arr);
    }
    j["call_returns"] = std::move(creturns);
    Json callers = Json::array();
    for (const auto& c : cfg.callers) callers.push_back(c);
    j["callers"] = std::move(callers);
    return j;
}

}  // namespace abslog
