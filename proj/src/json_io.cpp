#include "efluct/json_io.hpp"

#include "efluct/errors.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>

namespace efluct {

json to_json(const GammaPoly& p) {
    json out = json::array();
    for (const auto& [m, c] : p.terms()) {
        json exps = json::object();
        for (auto [color, e] : m) exps[std::to_string(color)] = e;
        out.push_back({{"coeff", c}, {"exps", exps}});
    }
    return out;
}

GammaPoly gamma_poly_from_json(const json& j) {
    if (!j.is_array()) throw InputError("GammaPoly JSON must be an array");
    GammaPoly p;
    for (const auto& t : j) {
        Monomial m;
        for (const auto& [color, e] : t.at("exps").items()) m.emplace_back(std::stoi(color), e.get<int>());
        std::sort(m.begin(), m.end());
        p.add_term(m, t.at("coeff").get<GammaPoly::Coeff>());
    }
    return p;
}

json to_json(const NExpansion& e) {
    json terms = json::array();
    for (auto it = e.terms().rbegin(); it != e.terms().rend(); ++it)
        terms.push_back({{"n_exp", it->first}, {"poly", to_json(it->second)}});
    return {{"terms", terms}};
}

json to_json(const Pairing& pi) {
    json out = json::array();
    for (auto [x, y] : pi.blocks()) out.push_back({x + 1, y + 1});
    return out;
}

json to_json(const SpokeArcConfig& cfg) {
    auto one_based = [](const std::vector<int>& v) {
        json out = json::array();
        for (int x : v) out.push_back(x + 1);
        return out;
    };
    json inner = json::array(), outer = json::array();
    for (const auto& pi : cfg.inner_pairings) inner.push_back(to_json(pi));
    for (const auto& pi : cfg.outer_pairings) outer.push_back(to_json(pi));
    return {{"a", cfg.a},
            {"U", one_based(cfg.inner)},
            {"V", one_based(cfg.outer)},
            {"iota", cfg.inner_arc_lengths},
            {"o", cfg.outer_arc_lengths},
            {"inner_pairings", inner},
            {"outer_pairings", outer}};
}

json to_json(const CovEstimate& est) {
    json gamma = json::object();
    for (auto [c, g] : est.gamma) gamma[std::to_string(c)] = g;
    return {{"estimate", {est.estimate.real(), est.estimate.imag()}},
            {"se", est.se},
            {"reps", est.reps},
            {"N", est.N},
            {"gamma", gamma},
            {"seed", est.seed},
            {"rng", kRngName}};
}

json to_json(const ClusterWord& cw) {
    json out = json::array();
    for (const auto& c : cw.clusters) out.push_back({c.color, format_word(Word(c.types))});
    return out;
}

ClusterWord cluster_word_from_json(const json& j) {
    if (!j.is_array()) throw InputError("cluster word JSON must be an array of [color, word]");
    ClusterWord cw;
    for (const auto& item : j) {
        if (!item.is_array() || item.size() != 2) throw InputError("cluster entry must be [color, word]");
        const Word w = parse_word(item[1].get<std::string>());
        cw.clusters.push_back({item[0].get<int>(), w.types});
    }
    return cw;
}

json to_json(const FreenessResult& r) {
    const char* status = r.status == CaseStatus::Pass ? "pass" : r.status == CaseStatus::Fail ? "fail" : "rejected";
    json out = {{"inner", to_json(r.input.inner)},
                {"outer", to_json(r.input.outer)},
                {"channel", to_string(r.input.channel)},
                {"status", status}};
    if (r.status != CaseStatus::Rejected) {
        out["centered"] = r.centered.to_string();
        out["sstar"] = r.sstar.to_string();
        out["rhs"] = r.rhs.to_string();
    }
    if (!r.note.empty()) out["note"] = r.note;
    return out;
}

json to_json(const FreenessReport& r) {
    json cases = json::array();
    for (const auto& c : r.cases) cases.push_back(to_json(c));
    return {{"passed", r.passed}, {"failed", r.failed}, {"rejected", r.rejected}, {"cases", cases}};
}

std::vector<FreenessCase> freeness_grid_from_json(const json& j) {
    if (!j.is_array()) throw InputError("freeness grid must be a JSON array");
    std::vector<FreenessCase> grid;
    for (const auto& item : j)
        grid.push_back({cluster_word_from_json(item.at("inner")), cluster_word_from_json(item.at("outer")),
                        parse_channel(item.value("channel", std::string("complex")))});
    return grid;
}

std::string utc_timestamp() {
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

json to_json(const RunManifest& m) {
    return {{"command", m.command},
            {"params", m.params},
            {"seed", m.seed},
            {"version", m.version},
            {"timestamp", m.timestamp.empty() ? utc_timestamp() : m.timestamp}};
}

} // namespace efluct
