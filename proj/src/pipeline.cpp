#include "hadwiger/pipeline.hpp"

#include "hadwiger/graph6.hpp"
#include "hadwiger/invariants.hpp"
#include "hadwiger/theorems.hpp"

#include <algorithm>

namespace hadwiger {

std::string to_string(Branch b)
{
    switch (b) {
    case Branch::AlphaExceedsTwo: return "alpha_exceeds_two";
    case Branch::Clique: return "clique";
    case Branch::C5Free: return "c5_free";
    case Branch::W5Present: return "w5_present";
    case Branch::Cover: return "cover";
    }
    return "unknown";
}

std::string to_string(Outcome o)
{
    switch (o) {
    case Outcome::Verified: return "verified";
    case Outcome::HypothesisFailed: return "hypothesis_failed";
    case Outcome::Anomaly: return "anomaly";
    }
    return "unknown";
}

Branch branch_from_string(const std::string& s)
{
    for (auto b : {Branch::AlphaExceedsTwo, Branch::Clique, Branch::C5Free, Branch::W5Present, Branch::Cover})
        if (to_string(b) == s) return b;
    throw std::invalid_argument("unknown branch '" + s + "'");
}

Outcome outcome_from_string(const std::string& s)
{
    for (auto o : {Outcome::Verified, Outcome::HypothesisFailed, Outcome::Anomaly})
        if (to_string(o) == s) return o;
    throw std::invalid_argument("unknown outcome '" + s + "'");
}

namespace {

    MinorWitness singletons(const VertexSet& s)
    {
        MinorWitness w;
        for (int v : s) w.branch_sets.push_back(VertexSet{v});
        return w;
    }

    void cross_check_minor(const Graph& g, const PipelineOptions& options, Certificate& c)
    {
        if (g.order() > options.minor_check_max_n) return;
        MinorCrossCheck check;
        check.threshold = ceil_div(g.order(), 2);
        MinorSearchOptions search;
        if (options.minor_budget)
            search.deadline = std::chrono::steady_clock::now() +
                              std::chrono::duration_cast<std::chrono::steady_clock::duration>(*options.minor_budget);
        auto r = search_clique_minor(g, check.threshold, search);
        check.status = r.status;
        check.witness = std::move(r.witness);
        if (check.status == MinorStatus::Absent)
            c.anomalies.push_back("no K_" + std::to_string(check.threshold) + " minor: h < ceil(n/2)");
        else if (check.status == MinorStatus::Found && !validate_minor_witness(g, *check.witness))
            c.anomalies.push_back("minor search returned an invalid witness");
        c.minor = std::move(check);
    }

    void run_cover_branch(const Graph& g, const PatternWitness& c5, Certificate& c)
    {
        c.branch = Branch::Cover;
        c.pattern = c5;
        auto p = maximal_inflation(g, c5);
        c.inflation = p;
        if (auto check = verify_inflation(g, p); !check.ok) {
            c.anomalies.push_back("inflation failed verification: " + to_string(check.violations.front().kind));
            return;
        }

        Decomposition d;
        try {
            d = classify(g, p);
        }
        catch (const ClassificationError& e) {
            c.classify_failure = e.failure();
            c.classify_witness = e.witness();
            c.anomalies.push_back(e.what());
            return;
        }
        c.decomposition = d;

        c.violations = verify_claims(g, p, d);
        if (!c.violations.empty()) {
            c.anomalies.push_back(std::to_string(c.violations.size()) + " claim violation(s), first: claim " +
                                  to_string(c.violations.front().claim));
            return;
        }

        try {
            auto r = build_cover(g, p, d);
            c.cover = r.cover;
            c.cover_check = r.check;
        }
        catch (const CoverError& e) {
            c.cover = assemble_cover(p, d);
            c.cover_check = check_cover(g, p, *c.cover);
            c.anomalies.push_back(e.what());
            return;
        }

        BoundSummary b;
        int n = g.order();
        b.omega = clique_number(g);
        b.max_cover = c.cover_check->max_size;
        b.cover_bound = ceil_div(n + 2, 4);
        b.seagull_threshold_x4 = seagull_threshold_x4(n);
        b.seagull = seagull_condition(n, b.omega);
        c.bound = b;

        if (c.cover_check->sum < n + 2) c.anomalies.push_back("cover sum below n + 2");
        if (b.omega < b.max_cover) c.anomalies.push_back("clique number below the largest cover clique");
        if (b.max_cover < b.cover_bound) c.anomalies.push_back("largest cover clique below ceil((n+2)/4)");
        if (n % 2 == 1 && n + 3 > 4 * b.cover_bound) c.anomalies.push_back("(n+3)/4 exceeds ceil((n+2)/4)");
        if (!b.seagull) c.anomalies.push_back("seagull threshold not met");
    }

}  // namespace

Certificate verify_pipeline(const Graph& g, const PipelineOptions& options)
{
    Certificate c;
    c.n = g.order();
    c.edges = g.edges();
    c.hash = fingerprint(g);
    c.alpha = independence_number(g);

    if (c.alpha > 2) {
        c.branch = Branch::AlphaExceedsTwo;
        c.outcome = Outcome::HypothesisFailed;
        c.pattern = find_independent_triple(g);
        return c;
    }

    if (c.alpha <= 1) {
        c.branch = Branch::Clique;
        MinorCrossCheck check;
        check.threshold = ceil_div(g.order(), 2);
        check.status = MinorStatus::Found;
        check.witness = singletons(g.vertices());
        c.minor = std::move(check);
    }
    else if (auto c5 = find_induced(g, PatternKind::C5); !c5) {
        c.branch = Branch::C5Free;
        cross_check_minor(g, options, c);
    }
    else if (auto w5 = is_w5_free(g); !w5.free) {
        c.branch = Branch::W5Present;
        c.outcome = Outcome::HypothesisFailed;
        c.pattern = std::move(w5.witness);
        return c;
    }
    else {
        run_cover_branch(g, *c5, c);
        if (c.anomalies.empty()) cross_check_minor(g, options, c);
    }
    c.outcome = c.anomalies.empty() ? Outcome::Verified : Outcome::Anomaly;
    return c;
}

Revalidation revalidate(const Certificate& c)
{
    Revalidation r;
    auto fail = [&](std::string msg) {
        r.ok = false;
        r.failures.push_back(std::move(msg));
    };

    Graph g;
    try {
        g = c.graph();
    }
    catch (const std::exception& e) {
        fail(std::string("graph does not rebuild: ") + e.what());
        return r;
    }
    if (fingerprint(g) != c.hash) fail("fingerprint mismatch");

    auto check_pattern = [&](const std::optional<PatternWitness>& w, PatternKind kind, const char* what) {
        if (!w)
            fail(std::string(what) + " missing");
        else if (w->kind != kind || !validate_pattern_witness(g, *w))
            fail(std::string(what) + " does not validate");
    };

    if (c.branch != Branch::AlphaExceedsTwo && find_independent_triple(g)) fail("independence number above 2");

    switch (c.branch) {
    case Branch::AlphaExceedsTwo: check_pattern(c.pattern, PatternKind::Independent3, "independent triple"); break;
    case Branch::W5Present: check_pattern(c.pattern, PatternKind::W5, "W5 witness"); break;
    case Branch::Clique:
        if (!is_clique(g, g.vertices())) fail("clique branch on a graph that is not complete");
        break;
    case Branch::C5Free:
        if (find_induced(g, PatternKind::C5)) fail("c5_free branch on a graph with an induced C5");
        break;
    case Branch::Cover: {
        check_pattern(c.pattern, PatternKind::C5, "C5 seed");
        if (!c.inflation) {
            fail("inflation missing");
            break;
        }
        auto inflation_check = verify_inflation(g, *c.inflation);
        if (!inflation_check.ok) fail("inflation does not validate: " + to_string(inflation_check.violations.front().kind));
        if (c.pattern)
            for (int i = 0; i < 5; ++i)
                if (!c.inflation->part(i).contains(c.pattern->mapping[static_cast<std::size_t>(i)]))
                    fail("seed vertex " + std::to_string(i) + " not in its part");
        if (c.classify_failure && c.classify_witness && !validate_pattern_witness(g, *c.classify_witness))
            fail("classification witness does not validate");
        if (c.decomposition)
            for (auto& msg : verify_decomposition(g, *c.inflation, *c.decomposition)) fail(msg);
        if (c.cover) {
            if (c.decomposition && !(assemble_cover(*c.inflation, *c.decomposition).h == c.cover->h))
                fail("cover does not match the decomposition");
            auto check = check_cover(g, *c.inflation, *c.cover);
            if (c.outcome != Outcome::Anomaly) {
                if (!check.all_cliques) fail("a cover set is not a clique");
                if (!check.identity_holds) fail("cover counting identity fails");
                if (check.sum < c.n + 2) fail("cover sum below n + 2");
            }
            if (c.bound) {
                if (c.bound->max_cover != check.max_size) fail("recorded largest cover clique is wrong");
                if (c.bound->cover_bound != ceil_div(c.n + 2, 4)) fail("recorded ceil((n+2)/4) is wrong");
                if (c.bound->seagull_threshold_x4 != seagull_threshold_x4(c.n)) fail("recorded seagull threshold is wrong");
                if (c.bound->seagull != seagull_condition(c.n, c.bound->omega)) fail("recorded seagull flag is wrong");
                if (check.all_cliques && c.bound->omega < check.max_size) fail("recorded clique number below a cover clique");
            }
        }
        break;
    }
    }

    for (const auto& v : c.violations) {
        if (!v.witness)
            fail("claim " + to_string(v.claim) + " violation carries no witness");
        else if (!validate_pattern_witness(g, *v.witness))
            fail("claim " + to_string(v.claim) + " witness does not validate");
    }

    if (c.minor && c.minor->status == MinorStatus::Found) {
        if (!c.minor->witness)
            fail("minor witness missing");
        else if (c.minor->witness->order() < c.minor->threshold || !validate_minor_witness(g, *c.minor->witness))
            fail("minor witness does not validate");
    }

    bool anomalous = !c.anomalies.empty();
    if (anomalous != (c.outcome == Outcome::Anomaly)) fail("outcome disagrees with the anomaly list");
    if (!c.violations.empty() && c.outcome != Outcome::Anomaly) fail("claim violations recorded without an anomaly outcome");
    return r;
}

}  // namespace hadwiger
