#include "cli.hpp"

#include "hadwiger/canonical.hpp"
#include "hadwiger/certificate_json.hpp"
#include "hadwiger/generate.hpp"
#include "hadwiger/graph6.hpp"
#include "hadwiger/invariants.hpp"
#include "hadwiger/theorems.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <chrono>
#include <condition_variable>
#include <fstream>
#include <iomanip>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

namespace hadwiger::cli {

namespace {

    using Clock = std::chrono::steady_clock;

    enum class Tally { Verified, HypothesisFailed, Anomaly, Undecided, Filtered, Error };

    struct Settings {
        std::string input;
        std::string gen;
        std::string check = "pipeline";
        std::string format = "json";
        double minor_budget = 0;  // seconds, 0 = unlimited
        int minor_max_n = 14;
        int h_max_n = 10;
        int jobs = 1;
        bool revalidate = false;
        bool timing = false;
        bool hunt = false;
    };

    struct Item {
        std::uint64_t index = 0;
        std::optional<int> line;
        std::optional<std::uint64_t> seed;
        std::optional<Graph> graph;
        std::string error;
    };

    struct Result {
        Tally tally = Tally::Verified;
        std::string text;  // complete output lines, possibly empty
    };

    struct Summary {
        std::uint64_t verified = 0, hypothesis_failed = 0, anomalies = 0, undecided = 0, filtered = 0, errors = 0;

        void add(Tally t)
        {
            switch (t) {
            case Tally::Verified: ++verified; break;
            case Tally::HypothesisFailed: ++hypothesis_failed; break;
            case Tally::Anomaly: ++anomalies; break;
            case Tally::Undecided: ++undecided; break;
            case Tally::Filtered: ++filtered; break;
            case Tally::Error: ++errors; break;
            }
        }
        std::uint64_t total() const { return verified + hypothesis_failed + anomalies + undecided; }
        int exit_code() const { return anomalies > 0 ? kExitAnomaly : errors > 0 ? kExitError : kExitOk; }
    };

    std::optional<std::chrono::duration<double>> budget(const Settings& s)
    {
        if (s.minor_budget <= 0) return std::nullopt;
        return std::chrono::duration<double>(s.minor_budget);
    }

    MinorSearchOptions search_options(const Settings& s)
    {
        MinorSearchOptions o;
        if (auto b = budget(s)) o.deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(*b);
        return o;
    }

    const char* tally_name(Tally t)
    {
        switch (t) {
        case Tally::Verified: return "verified";
        case Tally::HypothesisFailed: return "hypothesis_failed";
        case Tally::Anomaly: return "anomaly";
        case Tally::Undecided: return "undecided";
        case Tally::Filtered: return "filtered";
        case Tally::Error: return "error";
        }
        return "unknown";
    }

    Tally tally_of(Outcome o)
    {
        switch (o) {
        case Outcome::Verified: return Tally::Verified;
        case Outcome::HypothesisFailed: return Tally::HypothesisFailed;
        case Outcome::Anomaly: return Tally::Anomaly;
        }
        return Tally::Anomaly;
    }

    Json record_head(const Item& item, const char* check)
    {
        Json j;
        j["record"] = "graph";
        j["index"] = item.index;
        if (item.line) j["line"] = *item.line;
        if (item.seed) j["seed"] = *item.seed;
        j["check"] = check;
        return j;
    }

    std::string where(const Item& item)
    {
        if (item.line) return "line " + std::to_string(*item.line);
        if (item.seed) return "seed " + std::to_string(*item.seed);
        return "#" + std::to_string(item.index);
    }

    std::string yes_no(const Json& j)
    {
        if (j.is_null()) return "-";
        return j.get<bool>() ? "yes" : "no";
    }

    // ---- per-graph checks ----------------------------------------------

    Result check_pipeline(const Settings& s, const Item& item, const Graph& g)
    {
        PipelineOptions opts;
        opts.minor_check_max_n = s.minor_max_n;
        opts.minor_budget = budget(s);
        auto cert = verify_pipeline(g, opts);

        auto rv = revalidate(cert);
        Tally tally = rv.ok ? tally_of(cert.outcome) : Tally::Anomaly;

        Result r{tally, {}};
        if (s.format == "json") {
            Json j = record_head(item, "pipeline");
            j["outcome"] = rv.ok ? to_string(cert.outcome) : "anomaly";
            j["branch"] = to_string(cert.branch);
            j["certificate"] = to_json(cert);
            if (!rv.ok) j["revalidation_failures"] = rv.failures;
            r.text = j.dump() + "\n";
            return r;
        }
        std::ostringstream line;
        line << std::left << std::setw(12) << where(item) << std::right << std::setw(4) << g.order() << "  "
             << std::left << std::setw(18) << to_string(cert.branch) << std::setw(18) << tally_name(tally);
        if (cert.bound)
            line << "omega=" << cert.bound->omega << " max|H|=" << cert.bound->max_cover
                 << " ceil((n+2)/4)=" << cert.bound->cover_bound;
        if (cert.minor) line << " K" << cert.minor->threshold << "-minor=" << to_string(cert.minor->status);
        for (const auto& a : cert.anomalies) line << " [" << a << "]";
        for (const auto& f : rv.failures) line << " [revalidation: " << f << "]";
        r.text = line.str() + "\n";
        return r;
    }

    Result check_invariants(const Settings& s, const Item& item, const Graph& g)
    {
        int n = g.order();
        auto inv = compute_invariants(g);
        auto coloring = chromatic_coloring(g);
        int half = ceil_div(n, 2);

        Json j = record_head(item, "invariants");
        Json h = nullptr, h_exact = nullptr, at_least_half = nullptr, theorem2 = nullptr;
        std::optional<MinorWitness> witness;
        Tally tally = inv.alpha > 2 ? Tally::HypothesisFailed : Tally::Verified;

        if (n <= s.h_max_n) {
            auto hr = hadwiger_number(g, search_options(s));
            h = hr.h;
            h_exact = hr.exact;
            witness = hr.witness;
            if (hr.exact || hr.h >= half) at_least_half = hr.h >= half;
            if (hr.exact && inv.alpha == 2) theorem2 = (hr.h >= inv.chi) == (hr.h >= half);
            if (inv.alpha <= 2) {
                if (hr.exact && hr.h < inv.chi) tally = Tally::Anomaly;
                else if (!hr.exact && hr.h < inv.chi) tally = Tally::Undecided;
            }
        }
        else {
            auto mr = search_clique_minor(g, half, search_options(s));
            if (mr.status != MinorStatus::TimedOut) at_least_half = mr.status == MinorStatus::Found;
            if (mr.witness) witness = mr.witness;
            if (inv.alpha <= 2 && mr.status == MinorStatus::Absent) tally = Tally::Anomaly;
            if (inv.alpha <= 2 && mr.status == MinorStatus::TimedOut) tally = Tally::Undecided;
        }
        if (theorem2.is_boolean() && !theorem2.get<bool>()) tally = Tally::Anomaly;
        bool seagull = seagull_condition(n, inv.omega);

        if (s.format == "json") {
            j["outcome"] = tally_name(tally);
            j["n"] = n;
            j["alpha"] = inv.alpha;
            j["omega"] = inv.omega;
            j["chi"] = inv.chi;
            j["h"] = h;
            j["h_exact"] = h_exact;
            j["h_at_least_half"] = at_least_half;
            j["theorem2"] = theorem2;
            j["seagull"] = seagull;
            if (n <= kGraph6MaxOrder) j["graph6"] = emit_graph6(g);
            j["coloring"] = coloring.color;
            if (witness) j["minor_witness"] = to_json(*witness);
            return {tally, j.dump() + "\n"};
        }
        std::ostringstream line;
        std::string h_text = h.is_null() ? (at_least_half.is_null() ? "?" : (at_least_half.get<bool>() ? ">=" : "<") +
                                                                                std::to_string(half))
                                         : std::to_string(h.get<int>()) + (h_exact.get<bool>() ? "" : "+");
        line << std::left << std::setw(12) << where(item) << std::right << std::setw(4) << n << std::setw(6)
             << inv.alpha << std::setw(6) << inv.omega << std::setw(6) << inv.chi << std::setw(6) << h_text
             << std::setw(10) << yes_no(theorem2) << std::setw(9) << (seagull ? "yes" : "no") << "\n";
        return {tally, line.str()};
    }

    Result check_theorem2(const Settings& s, const Item& item, const Graph& g)
    {
        Json j = record_head(item, "theorem2");
        int alpha = independence_number(g);
        if (alpha != 2) {
            j["outcome"] = tally_name(Tally::HypothesisFailed);
            j["n"] = g.order();
            j["alpha"] = alpha;
            if (s.format == "json") return {Tally::HypothesisFailed, j.dump() + "\n"};
            std::ostringstream line;
            line << std::left << std::setw(12) << where(item) << std::right << std::setw(4) << g.order()
                 << "  alpha=" << alpha << " (theorem needs alpha = 2)\n";
            return {Tally::HypothesisFailed, line.str()};
        }
        auto rep = theorem2_check(g, search_options(s));
        Tally tally = !rep.exact ? Tally::Undecided : rep.holds ? Tally::Verified : Tally::Anomaly;
        if (s.format == "json") {
            j["outcome"] = tally_name(tally);
            j["n"] = rep.n;
            j["alpha"] = alpha;
            j["h"] = rep.h;
            j["chi"] = rep.chi;
            j["h_exact"] = rep.exact;
            j["h_at_least_chi"] = rep.h_at_least_chi;
            j["h_at_least_half"] = rep.h_at_least_half;
            j["holds"] = rep.holds;
            if (rep.n <= kGraph6MaxOrder) j["graph6"] = emit_graph6(g);
            return {tally, j.dump() + "\n"};
        }
        std::ostringstream line;
        line << std::left << std::setw(12) << where(item) << std::right << std::setw(4) << rep.n << std::setw(6)
             << rep.h << std::setw(6) << rep.chi << "  " << (rep.holds ? "holds" : "FAILS")
             << (rep.exact ? "" : " (h not exact)") << "\n";
        return {tally, line.str()};
    }

    bool hunt_keeps(const Graph& g) { return is_w5_free(g).free && find_induced(g, PatternKind::C5).has_value(); }

    Result process(const Settings& s, const Item& item)
    {
        if (!item.graph) {
            Json j;
            j["record"] = "error";
            j["index"] = item.index;
            if (item.line) j["line"] = *item.line;
            j["message"] = item.error;
            if (s.format == "json") return {Tally::Error, j.dump() + "\n"};
            return {Tally::Error, where(item) + ": error: " + item.error + "\n"};
        }
        const Graph& g = *item.graph;
        if (s.hunt && !hunt_keeps(g)) return {Tally::Filtered, {}};

        auto start = Clock::now();
        Result r;
        if (s.check == "invariants")
            r = check_invariants(s, item, g);
        else if (s.check == "theorem2")
            r = check_theorem2(s, item, g);
        else
            r = check_pipeline(s, item, g);
        if (s.timing && s.format == "json" && !r.text.empty()) {
            auto ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
            auto j = Json::parse(r.text);
            j["elapsed_ms"] = ms;
            r.text = j.dump() + "\n";
        }
        return r;
    }

    // ---- input -----------------------------------------------------------

    bool read_graph6_file(const std::string& path, std::vector<Item>& items, std::ostream& err)
    {
        std::ifstream in(path);
        if (!in) {
            err << "error: cannot read '" << path << "'\n";
            return false;
        }
        std::string text;
        int line_no = 0;
        while (std::getline(in, text)) {
            ++line_no;
            if (!text.empty() && text.back() == '\r') text.pop_back();
            if (line_no == 1 && text.rfind(">>graph6<<", 0) == 0) text.erase(0, 10);
            if (text.empty()) continue;
            Item item;
            item.index = items.size();
            item.line = line_no;
            try {
                item.graph = parse_graph6(text);
            }
            catch (const std::exception& e) {
                item.error = e.what();
                err << path << ":" << line_no << ": " << e.what() << "\n";
            }
            items.push_back(std::move(item));
        }
        if (in.bad()) {
            err << "error: read failure on '" << path << "'\n";
            return false;
        }
        return true;
    }

    void generate_items(const CorpusSpec& spec, std::vector<Item>& items)
    {
        for_each_in_corpus(spec, [&](const Graph& g, std::uint64_t index, std::uint64_t seed) {
            Item item;
            item.index = index;
            if (spec.mode == CorpusMode::Random) item.seed = seed;
            item.graph = g;
            items.push_back(std::move(item));
        });
    }

    // ---- ordered parallel runner -----------------------------------------

    template <class F>
    void run_ordered(std::size_t count, int jobs, F&& work, const std::function<void(Result&)>& emit)
    {
        if (jobs <= 1 || count <= 1) {
            for (std::size_t i = 0; i < count; ++i) {
                auto r = work(i);
                emit(r);
            }
            return;
        }
        std::vector<std::optional<Result>> done(count);
        std::mutex m;
        std::condition_variable cv;
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (std::size_t i; (i = next.fetch_add(1)) < count;) {
                auto r = work(i);
                std::lock_guard lock(m);
                done[i] = std::move(r);
                cv.notify_one();
            }
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (std::size_t i = 0; i < count; ++i) {
            std::unique_lock lock(m);
            cv.wait(lock, [&] { return done[i].has_value(); });
            Result r = std::move(*done[i]);
            done[i].reset();
            lock.unlock();
            emit(r);
        }
        for (auto& t : pool) t.join();
    }

    void print_summary(const Settings& s, const Summary& sum, std::ostream& out, std::optional<double> elapsed_ms)
    {
        if (s.format == "json") {
            Json j;
            j["record"] = "summary";
            j["total"] = sum.total();
            j["verified"] = sum.verified;
            j["hypothesis_failed"] = sum.hypothesis_failed;
            j["anomalies"] = sum.anomalies;
            j["undecided"] = sum.undecided;
            j["filtered"] = sum.filtered;
            j["errors"] = sum.errors;
            if (elapsed_ms) j["elapsed_ms"] = *elapsed_ms;
            out << j.dump() << "\n";
            return;
        }
        out << "summary: total=" << sum.total() << " verified=" << sum.verified
            << " hypothesis_failed=" << sum.hypothesis_failed << " anomalies=" << sum.anomalies
            << " undecided=" << sum.undecided << " filtered=" << sum.filtered << " errors=" << sum.errors;
        if (elapsed_ms) out << " elapsed_ms=" << *elapsed_ms;
        out << "\n";
    }

    void print_header(const Settings& s, std::ostream& out)
    {
        if (s.format != "text") return;
        std::ostringstream h;
        h << std::left << std::setw(12) << "graph" << std::right << std::setw(4) << "n";
        if (s.check == "invariants")
            h << std::setw(6) << "alpha" << std::setw(6) << "omega" << std::setw(6) << "chi" << std::setw(6) << "h"
              << std::setw(10) << "theorem2" << std::setw(9) << "seagull";
        else if (s.check == "theorem2")
            h << std::setw(6) << "h" << std::setw(6) << "chi" << "  theorem2";
        else
            h << "  " << std::left << std::setw(18) << "branch" << std::setw(18) << "outcome" << "bound";
        out << h.str() << "\n";
    }

    int run_checks(const Settings& s, std::ostream& out, std::ostream& err)
    {
        std::vector<Item> items;
        bool io_ok = true;
        if (!s.input.empty()) {
            io_ok = read_graph6_file(s.input, items, err);
        }
        else {
            CorpusSpec spec;
            try {
                spec = parse_corpus_spec(s.gen);
            }
            catch (const std::exception& e) {
                err << "error: --gen: " << e.what() << "\n";
                return kExitError;
            }
            generate_items(spec, items);
        }

        auto start = Clock::now();
        Summary sum;
        print_header(s, out);
        run_ordered(
            items.size(), s.jobs,
            [&](std::size_t i) {
                try {
                    return process(s, items[i]);
                }
                catch (const std::exception& e) {
                    // Every stage reports through its certificate; reaching here is a bug.
                    Json j = record_head(items[i], s.check.c_str());
                    j["outcome"] = "anomaly";
                    j["exception"] = e.what();
                    return Result{Tally::Anomaly, j.dump() + "\n"};
                }
            },
            [&](Result& r) {
                sum.add(r.tally);
                out << r.text;
                out.flush();
            });
        std::optional<double> elapsed;
        if (s.timing) elapsed = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
        print_summary(s, sum, out, elapsed);
        if (!io_ok) return sum.anomalies > 0 ? kExitAnomaly : kExitError;
        return sum.exit_code();
    }

    // ---- revalidation of an existing report --------------------------------

    std::vector<std::string> revalidate_record(const Json& j)
    {
        std::vector<std::string> failures;
        if (auto it = j.find("certificate"); it != j.end()) {
            auto rv = revalidate(certificate_from_json(*it));
            failures = rv.failures;
        }
        if (j.contains("graph6") && (j.contains("minor_witness") || j.contains("coloring"))) {
            Graph g = parse_graph6(j.at("graph6").get<std::string>());
            if (auto it = j.find("minor_witness"); it != j.end()) {
                auto w = minor_witness_from_json(*it);
                if (!validate_minor_witness(g, w)) failures.push_back("minor witness does not validate");
                if (j.contains("h") && j["h"].is_number() && w.order() != j["h"].get<int>())
                    failures.push_back("minor witness order differs from h");
                if (j.value("h_at_least_half", Json()).is_boolean() && j["h_at_least_half"].get<bool>() &&
                    w.order() < ceil_div(g.order(), 2))
                    failures.push_back("minor witness below ceil(n/2)");
            }
            if (auto it = j.find("coloring"); it != j.end()) {
                Coloring c;
                c.color = it->get<std::vector<int>>();
                c.colors = j.at("chi").get<int>();
                if (!is_proper_coloring(g, c)) failures.push_back("coloring is not a proper chi-coloring");
            }
        }
        return failures;
    }

    int run_revalidate(const Settings& s, std::ostream& out, std::ostream& err)
    {
        std::ifstream in(s.input);
        if (!in) {
            err << "error: cannot read '" << s.input << "'\n";
            return kExitError;
        }
        std::uint64_t checked = 0, passed = 0, failed = 0, errors = 0;
        std::string text;
        int line_no = 0;
        while (std::getline(in, text)) {
            ++line_no;
            if (text.empty()) continue;
            Json rec;
            std::vector<std::string> failures;
            try {
                Json j = Json::parse(text);
                if (j.value("record", "") != "graph") continue;
                failures = revalidate_record(j);
                rec["index"] = j.value("index", Json());
            }
            catch (const std::exception& e) {
                ++errors;
                err << s.input << ":" << line_no << ": " << e.what() << "\n";
                Json e_rec{{"record", "error"}, {"line", line_no}, {"message", e.what()}};
                if (s.format == "json") out << e_rec.dump() << "\n";
                continue;
            }
            ++checked;
            bool ok = failures.empty();
            ok ? ++passed : ++failed;
            if (s.format == "json") {
                Json j;
                j["record"] = "revalidation";
                j["line"] = line_no;
                j["index"] = rec["index"];
                j["ok"] = ok;
                if (!ok) j["failures"] = failures;
                out << j.dump() << "\n";
            }
            else {
                out << "line " << line_no << ": " << (ok ? "ok" : "FAILED");
                for (const auto& f : failures) out << " [" << f << "]";
                out << "\n";
            }
        }
        if (s.format == "json")
            out << Json{{"record", "summary"}, {"checked", checked}, {"passed", passed}, {"failed", failed}, {"errors", errors}}
                       .dump()
                << "\n";
        else
            out << "summary: checked=" << checked << " passed=" << passed << " failed=" << failed << " errors=" << errors
                << "\n";
        if (failed > 0) return kExitAnomaly;
        return errors > 0 ? kExitError : kExitOk;
    }

    int run_enumerate(int n, const std::string& family, std::ostream& out, std::ostream& err)
    {
        std::vector<Graph> graphs;
        try {
            if (family == "alpha2")
                graphs = enumerate_alpha2(n);
            else if (family == "triangle-free")
                graphs = enumerate_triangle_free(n);
            else
                graphs = enumerate_all_graphs(n);
        }
        catch (const std::exception& e) {
            err << "error: " << e.what() << "\n";
            return kExitError;
        }
        for (const auto& g : graphs) out << emit_graph6(g) << "\n";
        return kExitOk;
    }

    void add_run_options(CLI::App* app, Settings& s, bool with_input)
    {
        if (with_input) {
            auto* input = app->add_option("--input", s.input, "graph6 file, one graph per line");
            auto* gen = app->add_option("--gen", s.gen, "generated corpus: n=N[,samples=S][,seed=X][,mode=exhaustive|random]");
            input->excludes(gen);
        }
        app->add_option("--minor-budget", s.minor_budget, "seconds per minor search, 0 for no limit")
            ->check(CLI::NonNegativeNumber);
        app->add_option("--format", s.format, "report format")->check(CLI::IsMember({"json", "text"}));
        app->add_option("--jobs", s.jobs, "worker threads; output order is unchanged")->check(CLI::PositiveNumber);
        app->add_flag("--timing", s.timing, "add wall-clock times to the report");
    }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Certificate-producing checks for graphs with independence number at most 2", "hadwiger-verify"};
    app.require_subcommand(1);

    Settings verify;
    auto* verify_cmd = app.add_subcommand("verify", "run a check on every input graph");
    add_run_options(verify_cmd, verify, true);
    verify_cmd->add_option("--check", verify.check, "which check to run")
        ->check(CLI::IsMember({"pipeline", "invariants", "theorem2"}));
    verify_cmd->add_option("--minor-max-n", verify.minor_max_n, "largest n for the ceil(n/2) minor cross-check");
    verify_cmd->add_option("--h-max-n", verify.h_max_n, "largest n for which invariants computes h exactly");
    verify_cmd->add_flag("--revalidate", verify.revalidate, "treat --input as a report and rerun its validators only");

    Settings hunt;
    hunt.hunt = true;
    int hunt_n = 0, hunt_samples = 100;
    std::uint64_t hunt_seed = 1;
    auto* hunt_cmd = app.add_subcommand("hunt", "random alpha<=2 graphs, kept when W5-free with an induced C5");
    add_run_options(hunt_cmd, hunt, false);
    hunt_cmd->add_option("--n", hunt_n, "vertices")->required()->check(CLI::Range(5, kMaxVertices));
    hunt_cmd->add_option("--samples", hunt_samples, "graphs to draw")->check(CLI::PositiveNumber);
    hunt_cmd->add_option("--seed", hunt_seed, "64-bit run seed");
    hunt_cmd->add_option("--minor-max-n", hunt.minor_max_n, "largest n for the ceil(n/2) minor cross-check");

    Settings inv;
    inv.check = "invariants";
    inv.format = "text";
    auto* inv_cmd = app.add_subcommand("invariants", "n, alpha, omega, chi, h and flags per graph");
    add_run_options(inv_cmd, inv, true);
    inv_cmd->add_option("--h-max-n", inv.h_max_n, "largest n for which h is computed exactly");

    int enum_n = 0;
    std::string family = "alpha2";
    auto* enum_cmd = app.add_subcommand("enumerate", "print one graph6 line per isomorphism class");
    enum_cmd->add_option("--n", enum_n, "vertices")->required()->check(CLI::Range(0, kMaxExhaustiveOrder));
    enum_cmd->add_option("--family", family, "graph family")->check(CLI::IsMember({"alpha2", "triangle-free", "all"}));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    }
    catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitError;
    }

    if (*enum_cmd) return run_enumerate(enum_n, family, out, err);

    if (*hunt_cmd) {
        std::ostringstream spec;
        spec << "n=" << hunt_n << ",samples=" << hunt_samples << ",seed=" << hunt_seed << ",mode=random";
        hunt.gen = spec.str();
        return run_checks(hunt, out, err);
    }

    Settings& s = *verify_cmd ? verify : inv;
    if (s.revalidate) {
        if (s.input.empty()) {
            err << "error: --revalidate needs --input\n";
            return kExitError;
        }
        return run_revalidate(s, out, err);
    }
    if (s.input.empty() && s.gen.empty()) {
        err << "error: one of --input or --gen is required\n";
        return kExitError;
    }
    return run_checks(s, out, err);
}

}  // namespace hadwiger::cli
