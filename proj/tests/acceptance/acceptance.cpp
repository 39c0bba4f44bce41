// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include "cli.hpp"

#include "hadwiger/certificate_json.hpp"
#include "hadwiger/decomposition.hpp"
#include "hadwiger/families.hpp"
#include "hadwiger/generate.hpp"
#include "hadwiger/graph6.hpp"
#include "hadwiger/invariants.hpp"
#include "hadwiger/minors.hpp"
#include "hadwiger/pipeline.hpp"
#include "hadwiger/theorems.hpp"

#include "oracles.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace hadwiger;
namespace F = hadwiger::families;
namespace fs = std::filesystem;

namespace {

struct Verdict {
    bool pass = true;
    std::vector<std::string> problems;
    std::string detail;

    void require(bool ok, const std::string& what)
    {
        if (ok) return;
        pass = false;
        if (problems.size() < 5) problems.push_back(what);
    }
};

int failures = 0;

void report(int id, const std::string& title, const Verdict& v, double seconds)
{
    std::ostringstream line;
    line << "criterion " << id << ": " << (v.pass ? "PASS" : "FAIL") << "  " << title;
    if (!v.detail.empty()) line << " (" << v.detail << ")";
    line << " [" << static_cast<long long>(seconds * 1000) << " ms]";
    std::cout << line.str() << "\n";
    for (const auto& p : v.problems) std::cout << "    " << p << "\n";
    std::cout.flush();
    if (!v.pass) ++failures;
}

template <class Fn>
void criterion(int id, const std::string& title, Fn fn)
{
    auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
        fn(v);
    }
    catch (const std::exception& e) {
        v.pass = false;
        v.problems.push_back(std::string("exception: ") + e.what());
    }
    report(id, title, v, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
}

std::string g6(const Graph& g) { return emit_graph6(g); }

std::vector<std::uint64_t> keys_of(const std::vector<Graph>& gs)
{
    std::vector<std::uint64_t> keys;
    for (const auto& g : gs) keys.push_back(oracle::canonical_key(g));
    std::sort(keys.begin(), keys.end());
    return keys;
}

/// Exhaustive classes with alpha <= 2 and 1 <= n <= max_n.
std::vector<Graph> exhaustive(int max_n)
{
    std::vector<Graph> out;
    for (int n = 1; n <= max_n; ++n) {
        auto part = enumerate_alpha2(n);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

/// Seeds 0..count-1 of run `seed` at order n.
std::vector<Graph> random_batch(int n, int count, std::uint64_t seed)
{
    std::vector<Graph> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) out.push_back(random_alpha2(n, sample_seed(seed, static_cast<std::uint64_t>(i))));
    return out;
}

bool w5_free_with_c5(const Graph& g) { return is_w5_free(g).free && find_induced(g, PatternKind::C5).has_value(); }

Graph wheel_with_extras(const std::vector<std::vector<int>>& missed)
{
    auto edges = F::wheel(5).edges();
    int n = 6 + static_cast<int>(missed.size());
    for (std::size_t a = 0; a < missed.size(); ++a) {
        int u = 6 + static_cast<int>(a);
        for (int r = 1; r <= 5; ++r)
            if (std::find(missed[a].begin(), missed[a].end(), r) == missed[a].end()) edges.emplace_back(r, u);
        for (std::size_t b = 0; b < a; ++b) edges.emplace_back(6 + static_cast<int>(b), u);
    }
    return Graph(n, edges);
}

Json graph_record(std::uint64_t index, const Certificate& c)
{
    Json j;
    j["record"] = "graph";
    j["index"] = index;
    j["check"] = "pipeline";
    j["outcome"] = to_string(c.outcome);
    j["branch"] = to_string(c.branch);
    j["certificate"] = to_json(c);
    return j;
}

// Cover-branch certificate for a host whose claims are broken on purpose.
Certificate planted(const Graph& g, std::vector<int> seed)
{
    Certificate c;
    c.n = g.order();
    c.edges = g.edges();
    c.hash = fingerprint(g);
    c.branch = Branch::Cover;
    c.outcome = Outcome::Anomaly;
    c.alpha = independence_number(g);
    c.pattern = make_witness(PatternKind::C5, std::move(seed));
    c.inflation = maximal_inflation(g, *c.pattern);
    c.decomposition = classify(g, *c.inflation);
    c.violations = verify_claims(g, *c.inflation, *c.decomposition);
    c.cover = assemble_cover(*c.inflation, *c.decomposition);
    c.cover_check = check_cover(g, *c.inflation, *c.cover);
    c.anomalies.push_back("planted claim violation");
    return c;
}

Graph plant_host(std::array<int, 5> sizes, const std::vector<std::vector<int>>& extras)
{
    Graph g = F::blown_up_c5(sizes);
    for (const auto& nbrs : extras) {
        VertexSet s;
        for (int v : nbrs) s.insert(v);
        g = F::add_vertex(g, s);
    }
    return g;
}

std::vector<int> seed_of(std::array<int, 5> sizes)
{
    std::vector<int> seed;
    int first = 0;
    for (int s : sizes) {
        seed.push_back(first);
        first += s;
    }
    return seed;
}

struct RunResult {
    int code;
    std::string out, err;
};

RunResult run_cli(const std::vector<std::string>& args)
{
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

Json summary_of(const std::string& text)
{
    std::istringstream in(text);
    std::string line;
    Json last;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto j = Json::parse(line);
        if (j.value("record", "") == "summary") last = j;
    }
    return last;
}

fs::path write_temp(const std::string& name, const std::string& content)
{
    auto dir = fs::temp_directory_path() / "hadwiger-acceptance";
    fs::create_directories(dir);
    auto p = dir / name;
    std::ofstream(p, std::ios::binary) << content;
    return p;
}

}  // namespace

int main()
{
    const auto corpus8 = exhaustive(8);

    criterion(1, "h >= ceil(n/2) and h >= chi on every alpha <= 2 class, 1 <= n <= 8", [&](Verdict& v) {
        const int known[] = {0, 1, 2, 3, 7, 14, 38, 107, 410};
        for (int n = 1; n <= 8; ++n) {
            auto gs = enumerate_alpha2(n);
            v.require(static_cast<int>(gs.size()) == known[n], "class count at n=" + std::to_string(n));
            if (n <= 6) {
                auto want = oracle::classes(n, [](const Graph& g) { return oracle::alpha(g) <= 2; });
                v.require(keys_of(gs) == want, "classes differ from brute force at n=" + std::to_string(n));
            }
        }
        for (const auto& g : corpus8) {
            auto h = hadwiger_number(g);
            int chi = chromatic_number(g);
            v.require(h.exact, "h not exact for " + g6(g));
            v.require(validate_minor_witness(g, h.witness) && h.witness.order() == h.h, "bad K_h model for " + g6(g));
            v.require(h.h >= ceil_div(g.order(), 2), "h < ceil(n/2) for " + g6(g));
            v.require(h.h >= chi, "h < chi for " + g6(g));
        }
        v.detail = std::to_string(corpus8.size()) + " classes";
    });

    criterion(2, "h >= chi iff h >= ceil(n/2) on the same corpus", [&](Verdict& v) {
        int checked = 0;
        for (const auto& g : corpus8) {
            if (independence_number(g) != 2) continue;
            auto r = theorem2_check(g);
            v.require(r.exact, "inexact theorem2 run for " + g6(g));
            v.require(r.holds, "biconditional fails for " + g6(g));
            ++checked;
        }
        v.detail = std::to_string(checked) + " graphs with alpha = 2, " +
                   std::to_string(corpus8.size() - static_cast<std::size_t>(checked)) + " cliques skipped";
    });

    // Criteria 3 and 4 share one corpus: every W5-free alpha = 2 class with
    // an induced C5 up to 9 vertices, and 10,000 random graphs per order.
    std::vector<Graph> sound_corpus;
    std::ostringstream corpus_note;
    {
        int exhaustive_kept = 0;
        for (const auto& g : exhaustive(9))
            if (w5_free_with_c5(g)) {
                sound_corpus.push_back(g);
                ++exhaustive_kept;
            }
        corpus_note << exhaustive_kept << " exhaustive";
        for (int n : {10, 12, 14, 16}) {
            int kept = 0;
            for (auto& g : random_batch(n, 10000, static_cast<std::uint64_t>(n)))
                if (w5_free_with_c5(g)) {
                    sound_corpus.push_back(std::move(g));
                    ++kept;
                }
            corpus_note << ", n=" << n << ": " << kept << "/10000";
        }
    }

    criterion(3, "classification total, no claim violations, cover identity", [&](Verdict& v) {
        for (const auto& g : sound_corpus) {
            int n = g.order();
            auto c5 = find_induced(g, PatternKind::C5);
            auto p = maximal_inflation(g, *c5);
            v.require(verify_inflation(g, p).ok, "inflation invalid for " + g6(g));
            Decomposition d;
            try {
                d = classify(g, p);
            }
            catch (const ClassificationError& e) {
                v.require(false, "classification fails for " + g6(g) + ": " + e.what());
                continue;
            }
            v.require(verify_decomposition(g, p, d).empty(), "decomposition inconsistent for " + g6(g));
            v.require(verify_claims(g, p, d).empty(), "claim violated for " + g6(g));
            auto cover = assemble_cover(p, d);
            auto check = check_cover(g, p, cover);
            v.require(check.all_cliques, "non-clique H_j for " + g6(g));
            int expected = n + p.part(3).size() + p.part(4).size();
            v.require(check.sum == expected, "cover sum != n+|X_4|+|X_5| for " + g6(g));
            v.require(check.sum >= n + 2, "cover sum < n+2 for " + g6(g));
        }
        v.detail = corpus_note.str();
    });

    criterion(4, "omega >= max|H_j| >= ceil((n+2)/4) and seagull on every pipeline run", [&](Verdict& v) {
        int runs = 0, anomalies = 0;
        for (const auto& g : sound_corpus) {
            auto c = verify_pipeline(g);
            if (c.outcome == Outcome::Anomaly) {
                ++anomalies;
                v.require(false, "pipeline anomaly for " + g6(g) + ": " + c.anomalies.front());
                continue;
            }
            v.require(c.branch == Branch::Cover && c.bound.has_value(), "no cover certificate for " + g6(g));
            if (!c.bound) continue;
            const auto& b = *c.bound;
            v.require(b.omega == clique_number(g), "recorded omega is wrong for " + g6(g));
            v.require(b.omega >= b.max_cover, "omega < max|H_j| for " + g6(g));
            v.require(b.max_cover >= ceil_div(g.order() + 2, 4), "max|H_j| < ceil((n+2)/4) for " + g6(g));
            v.require(seagull_condition(g), "seagull condition fails for " + g6(g));
            v.require(b.seagull, "recorded seagull flag false for " + g6(g));
            ++runs;
        }
        v.detail = std::to_string(runs) + " runs, " + std::to_string(anomalies) + " anomalies";
    });

    criterion(5, "matching chi = branch-and-bound chi (n <= 8); h = brute force (all graphs n <= 7)", [&](Verdict& v) {
        for (const auto& g : corpus8) {
            auto by_matching = chromatic_coloring_by_matching(g);
            auto by_search = chromatic_coloring_branch_and_bound(g);
            v.require(is_proper_coloring(g, by_matching) && is_proper_coloring(g, by_search), "improper colouring for " + g6(g));
            v.require(by_matching.colors == by_search.colors, "chi disagreement for " + g6(g));
            v.require(by_search.colors == oracle::chromatic(g), "chi differs from brute force for " + g6(g));
        }
        std::size_t graphs = 0;
        const int all_known[] = {1, 1, 2, 4, 11, 34, 156, 1044};
        for (int n = 1; n <= 7; ++n) {
            auto all = enumerate_all_graphs(n);
            v.require(static_cast<int>(all.size()) == all_known[n], "all-graph count at n=" + std::to_string(n));
            if (n <= 6)
                v.require(keys_of(all) == oracle::classes(n, [](const Graph&) { return true; }),
                          "all-graph classes differ from brute force at n=" + std::to_string(n));
            for (const auto& g : all) {
                v.require(hadwiger_number(g).h == oracle::hadwiger(g), "h differs from brute force for " + g6(g));
                ++graphs;
            }
        }
        v.detail = std::to_string(corpus8.size()) + " colourings, " + std::to_string(graphs) + " minor checks";
    });

    criterion(6, "h(C5)=3, h(W5)=4, chi(W5)=4, h(octahedron)=4", [&](Verdict& v) {
        struct Fixed {
            const char* what;
            int got, oracle, pinned;
        };
        const Fixed values[] = {
            {"h(C5)", hadwiger_number(F::cycle(5)).h, oracle::hadwiger(F::cycle(5)), 3},
            {"h(W5)", hadwiger_number(F::wheel(5)).h, oracle::hadwiger(F::wheel(5)), 4},
            {"chi(W5)", chromatic_number(F::wheel(5)), oracle::chromatic(F::wheel(5)), 4},
            {"h(octahedron)", hadwiger_number(F::octahedron()).h, oracle::hadwiger(F::octahedron()), 4},
        };
        for (const auto& f : values) {
            v.require(f.oracle == f.pinned, std::string(f.what) + " brute force disagrees with the pinned value");
            v.require(f.got == f.pinned, std::string(f.what) + " = " + std::to_string(f.got));
        }
    });

    criterion(7, "Corollary 7 procedure on the 11-vertex instance and on W5", [&](Verdict& v) {
        auto g = wheel_with_extras({{1}, {2}, {3}, {4}, {5}});
        auto wheel = make_witness(PatternKind::W5, {0, 1, 2, 3, 4, 5});
        v.require(oracle::alpha(g) == 2, "instance does not have alpha = 2");
        auto r = corollary7_witness(g, wheel);
        v.require(r.kind == Cor7Kind::CoStarWitness && r.witness.has_value(), "no co-star witness");
        if (r.witness) {
            v.require(r.witness->kind == PatternKind::CoStar5, "witness is not CO_STAR_5");
            v.require(validate_pattern_witness(g, *r.witness), "witness does not validate");
            VertexSet six;
            for (int x : r.witness->mapping) six.insert(x);
            auto sub = induced_subgraph(g, six);
            v.require(six.size() == 6 && find_induced(sub.graph, PatternKind::CoStar5).has_value(),
                      "find_induced does not see co-K_{1,5} on the six vertices");
            v.require(oracle::has_induced(sub.graph, complement(Graph(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}}))),
                      "brute force does not see co-K_{1,5} on the six vertices");
        }
        auto w = corollary7_witness(F::wheel(5), wheel);
        v.require(w.kind == Cor7Kind::DominatingEdge && w.edge.has_value(), "W5 gives no dominating edge");
        if (w.edge) v.require(oracle::dominates(F::wheel(5), w.edge->first, w.edge->second), "returned edge does not dominate");
    });

    criterion(8, "every emitted certificate passes --revalidate", [&](Verdict& v) {
        std::size_t checked = 0;
        auto revalidate_report = [&](const std::string& name, const std::string& report, bool expect_ok) {
            auto path = write_temp(name, report);
            auto r = run_cli({"verify", "--revalidate", "--input", path.string()});
            auto s = summary_of(r.out);
            if (expect_ok) {
                v.require(r.code == cli::kExitOk, name + ": --revalidate exit " + std::to_string(r.code));
                v.require(s.value("failed", -1) == 0 && s.value("errors", -1) == 0, name + ": " + s.dump());
                checked += s.value("checked", std::size_t{0});
            }
            else {
                v.require(r.code == cli::kExitAnomaly && s.value("failed", 0) > 0, name + ": tampering not detected");
            }
            return s;
        };

        for (int n = 1; n <= 8; ++n) {
            auto pipeline = run_cli({"verify", "--gen", "n=" + std::to_string(n)});
            v.require(pipeline.code == cli::kExitOk, "verify n=" + std::to_string(n) + " exit " + std::to_string(pipeline.code));
            revalidate_report("pipeline-" + std::to_string(n) + ".jsonl", pipeline.out, true);
            auto inv = run_cli({"invariants", "--gen", "n=" + std::to_string(n), "--format", "json"});
            revalidate_report("invariants-" + std::to_string(n) + ".jsonl", inv.out, true);
        }
        for (int n : {10, 12, 14, 16}) {
            auto hunt = run_cli({"hunt", "--n", std::to_string(n), "--samples", "500", "--seed", std::to_string(n)});
            v.require(hunt.code == cli::kExitOk, "hunt n=" + std::to_string(n) + " exit " + std::to_string(hunt.code));
            revalidate_report("hunt-" + std::to_string(n) + ".jsonl", hunt.out, true);
        }
        auto wide = run_cli({"verify", "--gen", "n=9,samples=200,seed=1", "--check", "pipeline"});
        revalidate_report("random-9.jsonl", wide.out, true);

        // Planted claim violations: anomaly certificates whose witnesses must
        // still validate.
        struct Plant {
            std::array<int, 5> sizes;
            std::vector<std::vector<int>> extras;
        };
        const Plant plants[] = {
            {{2, 1, 1, 1, 1}, {{0, 2, 3, 4, 5}}},
            {{2, 2, 1, 1, 1}, {{0, 2, 4, 5, 6}}},
            {{1, 2, 1, 1, 1}, {{2, 3, 4, 5}, {0, 1, 2, 3, 4}, {0, 1, 4, 5, 7}}},
            {{1, 1, 1, 1, 1}, {{1, 2, 3, 4}, {0, 1, 2, 3}, {0, 1, 3, 4, 6}}},
            {{1, 1, 1, 2, 1}, {{0, 1, 3, 5}, {1, 2, 3, 4, 5}, {0, 1, 2, 3, 4, 6}}},
        };
        std::string planted_report, forged_report;
        std::size_t violations = 0;
        for (std::size_t i = 0; i < std::size(plants); ++i) {
            auto c = planted(plant_host(plants[i].sizes, plants[i].extras), seed_of(plants[i].sizes));
            v.require(!c.violations.empty(), "plant " + std::to_string(i) + " shows no violation");
            violations += c.violations.size();
            planted_report += graph_record(i, c).dump() + "\n";
            if (!c.violations.empty() && c.violations[0].witness) {
                auto forged = c;
                std::reverse(forged.violations[0].witness->mapping.begin(), forged.violations[0].witness->mapping.end());
                forged_report += graph_record(i, forged).dump() + "\n";
            }
        }
        revalidate_report("planted.jsonl", planted_report, true);
        // control: the validator must reject a forged witness
        revalidate_report("forged.jsonl", forged_report, false);
        v.detail = std::to_string(checked) + " records revalidated, " + std::to_string(violations) +
                   " planted violations, forged control rejected";
    });

    std::cout << (failures == 0 ? "all criteria PASS" : std::to_string(failures) + " criteria FAIL") << "\n";
    return failures == 0 ? 0 : 1;
}
