#include "cyclesat/json_io.hpp"

#include <nlohmann/json.hpp>

#include "cyclesat/graph6.hpp"

namespace cyclesat {

using nlohmann::json;

json to_json(const Graph& g) {
    json adj = json::array();
    for (int v = 0; v < g.order(); ++v) adj.push_back(g.neighbors(v));
    return {{"n", g.order()}, {"m", g.size()}, {"adj", adj}};
}

json to_json(const SaturationCertificate& cert) {
    json j{{"schema_version", kSchemaVersion},
           {"type", "saturation_certificate"},
           {"n", cert.n},
           {"m", cert.m},
           {"r", cert.r},
           {"connected", cert.connected},
           {"cross_checked", cert.cross_checked}};
    switch (cert.verdict) {
        case SatVerdict::saturated: j["verdict"] = "saturated"; break;
        case SatVerdict::not_free: j["verdict"] = "not-free"; break;
        case SatVerdict::not_saturated: j["verdict"] = "not-saturated"; break;
    }
    if (cert.verdict == SatVerdict::not_free) j["cycle_witness"] = cert.cycle_witness;
    if (cert.verdict == SatVerdict::not_saturated) {
        j["offending_nonedge"] = {cert.offending_nonedge.first, cert.offending_nonedge.second};
        j["offending_max_path"] = cert.offending_max_path;
    }
    if (cert.verdict == SatVerdict::saturated && !cert.nonedge_witnesses.empty()) {
        json w = json::array();
        for (const auto& [edge, path] : cert.nonedge_witnesses)
            w.push_back({{"u", edge.first}, {"v", edge.second}, {"path", path}});
        j["nonedge_witnesses"] = std::move(w);
    }
    return j;
}

json to_json(const SatResult& res) {
    json j{{"schema_version", kSchemaVersion},
           {"type", "sat_search"},
           {"n", res.n},
           {"r", res.r},
           {"found", res.found},
           {"graphs_examined", res.graphs_examined},
           {"max_edges_searched", res.max_edges_searched}};
    if (res.found) {
        j["sat_value"] = res.sat_value;
        j["witnesses"] = res.witnesses;
    }
    return j;
}

json to_json(const StructurePartition& p) {
    return {{"x1", p.x1}, {"x2", p.x2},  {"x2p", p.x2p}, {"x3", p.x3},   {"xge4", p.xge4},
            {"y", p.y},   {"y1", p.y1},  {"y2", p.y2},   {"z", p.z},     {"counts", p.counts()}};
}

json to_json(const PropertyReport& rep) {
    json j = json::object();
    for (const auto& [name, c] : rep.items) {
        json cj{{"holds", c.holds}, {"applicable", c.applicable}};
        if (!c.detail.empty()) cj["detail"] = c.detail;
        j[name] = std::move(cj);
    }
    return j;
}

json to_json(const SatBound& b) {
    json j{{"n", b.n},
           {"r", b.r},
           {"lower", b.lower},
           {"lower_source", b.lower_source}};
    if (b.upper) {
        j["upper"] = *b.upper;
        j["upper_source"] = b.upper_source;
    }
    if (b.exact) {
        j["exact"] = *b.exact;
        j["exact_source"] = b.exact_source;
    }
    if (!b.notes.empty()) j["notes"] = b.notes;
    return j;
}

namespace {

CactusBlock cactus_block_from_json(const json& j) {
    CactusBlock b;
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "k3") b.family = CactusBlock::Family::k3;
    else if (kind == "k4") b.family = CactusBlock::Family::k4;
    else if (kind == "k5") b.family = CactusBlock::Family::k5;
    else if (kind == "d") {
        b.family = CactusBlock::Family::d;
        b.p1 = j.at("a").get<int>();
        b.p2 = j.at("b").get<int>();
    } else if (kind == "h") {
        b.family = CactusBlock::Family::h;
        b.p1 = j.at("t").get<int>();
    } else {
        throw std::invalid_argument("recipe: unknown cactus block kind '" + kind + "'");
    }
    return b;
}

json cactus_block_to_json(const CactusBlock& b) {
    switch (b.family) {
        case CactusBlock::Family::k3: return {{"kind", "k3"}};
        case CactusBlock::Family::k4: return {{"kind", "k4"}};
        case CactusBlock::Family::k5: return {{"kind", "k5"}};
        case CactusBlock::Family::d: return {{"kind", "d"}, {"a", b.p1}, {"b", b.p2}};
        case CactusBlock::Family::h: return {{"kind", "h"}, {"t", b.p1}};
    }
    throw std::invalid_argument("unknown cactus block family");
}

}  // namespace

ConstructionSpec spec_from_json(const json& j) {
    ConstructionSpec s;
    std::string family = j.at("family").get<std::string>();
    using K = ConstructionSpec::Kind;
    if (family == "kn") {
        s.kind = K::kn;
        s.n = j.at("n").get<int>();
    } else if (family == "d") {
        s.kind = K::d;
        s.a = j.at("a").get<int>();
        s.b = j.at("b").get<int>();
    } else if (family == "h") {
        s.kind = K::h;
        s.n = j.at("n").get<int>();
        s.k = j.at("k").get<int>();
        s.r = j.at("r").get<int>();
    } else if (family == "cactus") {
        s.kind = K::cactus;
        for (const auto& bj : j.at("blocks")) s.blocks.push_back(cactus_block_from_json(bj));
        s.at.assign(s.blocks.size(), 0);
        s.via.assign(s.blocks.size(), 0);
        if (j.contains("attach")) {
            const auto& aj = j.at("attach");
            for (std::size_t i = 0; i < aj.size() && i + 1 < s.blocks.size(); ++i) {
                s.at[i + 1] = aj[i].at("at").get<int>();
                if (aj[i].contains("via")) s.via[i + 1] = aj[i].at("via").get<int>();
            }
        }
    } else if (family == "m6") {
        s.kind = K::m6;
        s.n = j.at("n").get<int>();
    } else if (family == "snark") {
        s.kind = K::snark;
        s.k = j.at("k").get<int>();
    } else if (family == "expand_vertex") {
        s.kind = K::expand_vertex;
        s.v = j.at("v").get<int>();
        s.children.push_back(spec_from_json(j.at("inner")));
    } else if (family == "expand_edge") {
        s.kind = K::expand_edge;
        s.u = j.at("u").get<int>();
        s.v = j.at("v").get<int>();
        s.children.push_back(spec_from_json(j.at("inner")));
    } else if (family == "attach") {
        s.kind = K::attach;
        if (j.contains("pendants")) s.set_u = j.at("pendants").get<std::vector<int>>();
        if (j.contains("triangles")) s.set_w = j.at("triangles").get<std::vector<int>>();
        s.children.push_back(spec_from_json(j.at("inner")));
    } else if (family == "chain") {
        s.kind = K::chain;
        for (const auto& pj : j.at("parts")) s.children.push_back(spec_from_json(pj));
        for (const auto& jj : j.at("joins"))
            s.joins.push_back({jj.at(0).get<int>(), jj.at(1).get<int>()});
    } else if (family == "mrn") {
        s.kind = K::mrn;
        s.r = j.at("r").get<int>();
        s.n = j.at("n").get<int>();
        s.children.push_back(spec_from_json(j.at("base")));
    } else if (family == "good_base") {
        s.kind = K::good_base;
        s.r = j.at("r").get<int>();
    } else {
        throw std::invalid_argument("recipe: unknown family '" + family + "'");
    }
    return s;
}

json spec_to_json(const ConstructionSpec& s) {
    using K = ConstructionSpec::Kind;
    switch (s.kind) {
        case K::kn: return {{"family", "kn"}, {"n", s.n}};
        case K::d: return {{"family", "d"}, {"a", s.a}, {"b", s.b}};
        case K::h: return {{"family", "h"}, {"n", s.n}, {"k", s.k}, {"r", s.r}};
        case K::cactus: {
            json blocks = json::array();
            for (const auto& b : s.blocks) blocks.push_back(cactus_block_to_json(b));
            json attach = json::array();
            for (std::size_t i = 1; i < s.blocks.size(); ++i)
                attach.push_back({{"at", s.at[i]}, {"via", s.via.empty() ? 0 : s.via[i]}});
            return {{"family", "cactus"}, {"blocks", blocks}, {"attach", attach}};
        }
        case K::m6: return {{"family", "m6"}, {"n", s.n}};
        case K::snark: return {{"family", "snark"}, {"k", s.k}};
        case K::expand_vertex:
            return {{"family", "expand_vertex"}, {"v", s.v}, {"inner", spec_to_json(s.children[0])}};
        case K::expand_edge:
            return {{"family", "expand_edge"},
                    {"u", s.u},
                    {"v", s.v},
                    {"inner", spec_to_json(s.children[0])}};
        case K::attach:
            return {{"family", "attach"},
                    {"pendants", s.set_u},
                    {"triangles", s.set_w},
                    {"inner", spec_to_json(s.children[0])}};
        case K::chain: {
            json parts = json::array();
            for (const auto& c : s.children) parts.push_back(spec_to_json(c));
            json joins = json::array();
            for (auto [u, v] : s.joins) joins.push_back({u, v});
            return {{"family", "chain"}, {"parts", parts}, {"joins", joins}};
        }
        case K::mrn:
            return {{"family", "mrn"},
                    {"r", s.r},
                    {"n", s.n},
                    {"base", spec_to_json(s.children[0])}};
        case K::good_base: return {{"family", "good_base"}, {"r", s.r}};
    }
    throw std::invalid_argument("unknown construction kind");
}

}  // namespace cyclesat
