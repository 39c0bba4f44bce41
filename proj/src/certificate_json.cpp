#include "hadwiger/certificate_json.hpp"

#include "hadwiger/graph6.hpp"

#include <stdexcept>

namespace hadwiger {

std::string to_string(MinorStatus s)
{
    switch (s) {
    case MinorStatus::Found: return "found";
    case MinorStatus::Absent: return "absent";
    case MinorStatus::TimedOut: return "timed_out";
    }
    return "unknown";
}

MinorStatus minor_status_from_string(const std::string& s)
{
    for (auto st : {MinorStatus::Found, MinorStatus::Absent, MinorStatus::TimedOut})
        if (to_string(st) == s) return st;
    throw std::invalid_argument("unknown minor status '" + s + "'");
}

namespace {

    ClassifyFailure classify_failure_from_string(const std::string& s)
    {
        for (auto f : {ClassifyFailure::CompleteToX, ClassifyFailure::IndependentTriple, ClassifyFailure::MaximalityBreach,
                       ClassifyFailure::AlphaExceedsTwo})
            if (to_string(f) == s) return f;
        throw std::invalid_argument("unknown classification failure '" + s + "'");
    }

    Json set_json(const VertexSet& s) { return s.to_vector(); }

    VertexSet set_from(const Json& j) { return VertexSet::from_range(j.get<std::vector<int>>()); }

    template <std::size_t N>
    Json sets_json(const std::array<VertexSet, N>& a)
    {
        Json out = Json::array();
        for (const auto& s : a) out.push_back(set_json(s));
        return out;
    }

    template <std::size_t N>
    std::array<VertexSet, N> sets_from(const Json& j)
    {
        if (!j.is_array() || j.size() != N) throw std::invalid_argument("expected " + std::to_string(N) + " vertex sets");
        std::array<VertexSet, N> out;
        for (std::size_t i = 0; i < N; ++i) out[i] = set_from(j[i]);
        return out;
    }

    Json edges_json(const std::vector<Edge>& edges)
    {
        Json out = Json::array();
        for (auto [u, v] : edges) out.push_back({u, v});
        return out;
    }

    std::vector<Edge> edges_from(const Json& j)
    {
        std::vector<Edge> out;
        for (const auto& e : j) out.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
        return out;
    }

    template <class T, class F>
    std::optional<T> optional_from(const Json& j, const char* key, F&& read)
    {
        auto it = j.find(key);
        if (it == j.end() || it->is_null()) return std::nullopt;
        return read(*it);
    }

}  // namespace

Json to_json(const PatternWitness& w)
{
    Json j;
    j["kind"] = to_string(w.kind);
    j["mapping"] = w.mapping;
    if (w.kind == PatternKind::Custom) {
        j["pattern_order"] = w.pattern.order();
        j["pattern_edges"] = edges_json(w.pattern.edges());
    }
    return j;
}

PatternWitness pattern_witness_from_json(const Json& j)
{
    auto kind = pattern_kind_from_string(j.at("kind").get<std::string>());
    auto mapping = j.at("mapping").get<std::vector<int>>();
    if (kind != PatternKind::Custom) return make_witness(kind, std::move(mapping));
    PatternWitness w;
    w.kind = kind;
    w.pattern = Graph(j.at("pattern_order").get<int>(), edges_from(j.at("pattern_edges")));
    w.mapping = std::move(mapping);
    return w;
}

Json to_json(const MinorWitness& w)
{
    Json out = Json::array();
    for (const auto& s : w.branch_sets) out.push_back(set_json(s));
    return out;
}

MinorWitness minor_witness_from_json(const Json& j)
{
    MinorWitness w;
    for (const auto& s : j) w.branch_sets.push_back(set_from(s));
    return w;
}

Json to_json(const Certificate& c)
{
    Json j;
    j["n"] = c.n;
    if (c.n <= kGraph6MaxOrder)
        j["graph6"] = emit_graph6(c.graph());
    else
        j["edges"] = edges_json(c.edges);
    j["hash"] = c.hash;
    j["branch"] = to_string(c.branch);
    j["outcome"] = to_string(c.outcome);
    j["alpha"] = c.alpha;
    if (c.pattern) j["pattern"] = to_json(*c.pattern);
    if (c.inflation) {
        j["inflation"] = {{"parts", sets_json(c.inflation->parts)}, {"rest", set_json(c.inflation->rest)}};
    }
    if (c.decomposition) {
        const auto& d = *c.decomposition;
        j["classes"] = {
            {"y", sets_json(d.y)},
            {"z", sets_json(d.z)},
            {"z_lo", sets_json(d.z_lo)},
            {"z_hi", sets_json(d.z_hi)},
            {"a1", set_json(d.a1)},
            {"b1", set_json(d.b1)},
            {"a3", set_json(d.a3)},
            {"b3", set_json(d.b3)},
            {"y1_prime", set_json(d.y1_prime)},
            {"y1_dprime", set_json(d.y1_dprime)},
        };
    }
    if (c.classify_failure) {
        Json f;
        f["failure"] = to_string(*c.classify_failure);
        f["witness"] = c.classify_witness ? to_json(*c.classify_witness) : Json();
        j["classify_failure"] = f;
    }
    if (!c.violations.empty()) {
        Json vs = Json::array();
        for (const auto& v : c.violations) {
            Json x;
            x["claim"] = to_string(v.claim);
            x["index"] = v.index;
            x["vertices"] = v.vertices;
            x["witness"] = v.witness ? to_json(*v.witness) : Json();
            vs.push_back(x);
        }
        j["violations"] = vs;
    }
    if (c.cover) j["cover"] = sets_json(c.cover->h);
    if (c.cover_check) {
        const auto& k = *c.cover_check;
        j["cover_check"] = {
            {"sizes", k.sizes},
            {"sum", k.sum},
            {"expected_sum", k.expected_sum},
            {"all_cliques", k.all_cliques},
            {"identity_holds", k.identity_holds},
        };
    }
    if (c.bound) {
        const auto& b = *c.bound;
        j["bound"] = {
            {"omega", b.omega},
            {"max_cover", b.max_cover},
            {"cover_bound", b.cover_bound},
            {"seagull_threshold_x4", b.seagull_threshold_x4},
            {"seagull", b.seagull},
        };
    }
    if (c.minor) {
        Json m;
        m["threshold"] = c.minor->threshold;
        m["status"] = to_string(c.minor->status);
        m["branch_sets"] = c.minor->witness ? to_json(*c.minor->witness) : Json();
        j["minor"] = m;
    }
    if (!c.anomalies.empty()) j["anomalies"] = c.anomalies;
    return j;
}

Certificate certificate_from_json(const Json& j)
{
    Certificate c;
    c.n = j.at("n").get<int>();
    if (auto it = j.find("graph6"); it != j.end()) {
        auto g = parse_graph6(it->get<std::string>());
        if (g.order() != c.n) throw std::invalid_argument("graph6 order disagrees with n");
        c.edges = g.edges();
    }
    else {
        c.edges = edges_from(j.at("edges"));
    }
    c.hash = j.at("hash").get<std::string>();
    c.branch = branch_from_string(j.at("branch").get<std::string>());
    c.outcome = outcome_from_string(j.at("outcome").get<std::string>());
    c.alpha = j.at("alpha").get<int>();
    c.pattern = optional_from<PatternWitness>(j, "pattern", pattern_witness_from_json);
    c.inflation = optional_from<InflationPartition>(j, "inflation", [](const Json& x) {
        InflationPartition p;
        p.parts = sets_from<5>(x.at("parts"));
        p.rest = set_from(x.at("rest"));
        return p;
    });
    c.decomposition = optional_from<Decomposition>(j, "classes", [](const Json& x) {
        Decomposition d;
        d.y = sets_from<5>(x.at("y"));
        d.z = sets_from<5>(x.at("z"));
        d.z_lo = sets_from<5>(x.at("z_lo"));
        d.z_hi = sets_from<5>(x.at("z_hi"));
        d.a1 = set_from(x.at("a1"));
        d.b1 = set_from(x.at("b1"));
        d.a3 = set_from(x.at("a3"));
        d.b3 = set_from(x.at("b3"));
        d.y1_prime = set_from(x.at("y1_prime"));
        d.y1_dprime = set_from(x.at("y1_dprime"));
        return d;
    });
    if (auto it = j.find("classify_failure"); it != j.end()) {
        c.classify_failure = classify_failure_from_string(it->at("failure").get<std::string>());
        c.classify_witness = optional_from<PatternWitness>(*it, "witness", pattern_witness_from_json);
    }
    if (auto it = j.find("violations"); it != j.end()) {
        for (const auto& x : *it) {
            ClaimViolation v;
            v.claim = claim_id_from_string(x.at("claim").get<std::string>());
            v.index = x.at("index").get<int>();
            v.vertices = x.at("vertices").get<std::vector<int>>();
            v.witness = optional_from<PatternWitness>(x, "witness", pattern_witness_from_json);
            c.violations.push_back(std::move(v));
        }
    }
    c.cover = optional_from<CliqueCover>(j, "cover", [](const Json& x) { return CliqueCover{sets_from<4>(x)}; });
    c.cover_check = optional_from<CoverCheck>(j, "cover_check", [&](const Json& x) {
        CoverCheck k;
        k.sizes = x.at("sizes").get<std::array<int, 4>>();
        k.sum = x.at("sum").get<int>();
        k.expected_sum = x.at("expected_sum").get<int>();
        k.all_cliques = x.at("all_cliques").get<bool>();
        k.identity_holds = x.at("identity_holds").get<bool>();
        for (int s : k.sizes) k.max_size = std::max(k.max_size, s);
        k.ceil_quarter_n_plus_2 = (c.n + 5) / 4;
        return k;
    });
    c.bound = optional_from<BoundSummary>(j, "bound", [](const Json& x) {
        BoundSummary b;
        b.omega = x.at("omega").get<int>();
        b.max_cover = x.at("max_cover").get<int>();
        b.cover_bound = x.at("cover_bound").get<int>();
        b.seagull_threshold_x4 = x.at("seagull_threshold_x4").get<int>();
        b.seagull = x.at("seagull").get<bool>();
        return b;
    });
    c.minor = optional_from<MinorCrossCheck>(j, "minor", [](const Json& x) {
        MinorCrossCheck m;
        m.threshold = x.at("threshold").get<int>();
        m.status = minor_status_from_string(x.at("status").get<std::string>());
        m.witness = optional_from<MinorWitness>(x, "branch_sets", minor_witness_from_json);
        return m;
    });
    if (auto it = j.find("anomalies"); it != j.end()) c.anomalies = it->get<std::vector<std::string>>();
    return c;
}

}  // namespace hadwiger
