// switchdim: command-line driver.
//
// Exit codes: 0 success, 2 usage error, 3 verification failure, 1 internal error.

#include <CLI11.hpp>

#include <atomic>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include "switchdim/io.hpp"
#include "switchdim/selection.hpp"

using namespace switchdim;
using io::json;

namespace {

constexpr int kUsage = 2;
constexpr int kVerifyFailed = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string command;
    std::string family;
    std::string m;
    std::string graph_path;
    std::string switch_spec = "empty";
    std::string a = "1";
    std::string b = "2";
    std::string subspace = "E0+E1";
    std::string method = "structural";
    std::string format = "text";
    std::string out;
    std::string input;
    std::string dump_matrix;
    double tol = 1e-8;
    bool check = false;
    bool spherical = false;
    bool require_attained = false;
    unsigned parallel = 1;

    json to_json() const {
        json j{{"command", command}};
        auto put = [&](const char* key, const std::string& v) {
            if (!v.empty()) j[key] = v;
        };
        put("family", family);
        put("m", m);
        put("graph", graph_path);
        if (command == "analyze" || command == "realize") {
            j["switch"] = switch_spec;
            j["a"] = a;
            j["b"] = b;
        }
        if (command == "classify") {
            j["subspace"] = subspace;
            j["method"] = method;
        }
        if (command == "table") {
            j["format"] = format;
            j["check"] = check;
        }
        if (command == "verify-distset") {
            put("input", input);
            j["spherical"] = spherical;
        }
        if (command == "realize" || command == "verify-distset") {
            std::ostringstream t;
            t << tol;
            j["tol"] = t.str();
        }
        // parallelism is deliberately absent: output must not depend on it
        return j;
    }

    std::string header() const {
        std::string s = "switchdim " SWITCHDIM_VERSION " | " + command;
        const json j = to_json();
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (it.key() == "command") continue;
            s += " " + it.key() + "=" + (it->is_string() ? it->get<std::string>() : it->dump());
        }
        return s;
    }
};

json envelope(const RunConfig& cfg, json result) {
    return {{"version", SWITCHDIM_VERSION}, {"run_config", cfg.to_json()}, {"result", std::move(result)}};
}

void emit(const RunConfig& cfg, const std::string& text) {
    if (cfg.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(cfg.out);
    if (!f) throw UsageError("cannot write " + cfg.out);
    f << text;
}

Family family_of(const RunConfig& cfg) {
    try {
        return parse_family(cfg.family);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

int single_m(const RunConfig& cfg) {
    const auto [lo, hi] = parse_range(cfg.m);
    if (lo != hi) throw UsageError("--m takes a single value here");
    return lo;
}

Rational rational_arg(const std::string& text, const char* name) {
    try {
        return Rational::parse(text);
    } catch (const std::invalid_argument&) {
        throw UsageError(std::string("invalid --") + name + " '" + text + "'");
    }
}

struct Target {
    Graph graph;
    std::optional<Family> family;
    int m = 0;
};

Target load_target(const RunConfig& cfg) {
    Target t;
    if (!cfg.graph_path.empty()) {
        std::ifstream f(cfg.graph_path);
        if (!f) throw UsageError("cannot read " + cfg.graph_path);
        t.graph = io::graph_from_json(json::parse(f));
        return t;
    }
    if (cfg.family.empty() || cfg.m.empty()) throw UsageError("need FAMILY --m M or --graph FILE");
    t.family = family_of(cfg);
    t.m = single_m(cfg);
    t.graph = build_graph(*t.family, t.m);
    return t;
}

int cmd_graph(const RunConfig& cfg) {
    const Graph g = build_graph(family_of(cfg), single_m(cfg));
    json j = io::to_json(g);
    j["version"] = SWITCHDIM_VERSION;
    j["run_config"] = cfg.to_json();
    emit(cfg, j.dump(2) + "\n");
    return 0;
}

std::string signature_list(const TableRow& r) {
    std::string s;
    for (const auto& [p, q] : r.signatures) {
        if (!s.empty()) s += ", ";
        s += "(" + std::to_string(p) + "," + std::to_string(q) + ")";
    }
    return s;
}

int cmd_table(const RunConfig& cfg) {
    const Family f = family_of(cfg);
    const auto [lo, hi] = parse_range(cfg.m);
    if ((f == Family::johnson && lo < 4) || (f == Family::hamming && lo < 2))
        throw UsageError("m out of range (johnson m >= 4, hamming m >= 2)");
    if (cfg.format != "text" && cfg.format != "csv" && cfg.format != "json") throw UsageError("unknown --format " + cfg.format);

    const std::size_t count = static_cast<std::size_t>(hi - lo + 1);
    std::vector<TableRow> rows(count);
    std::vector<std::string> errors(count);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                rows[i] = minimum_dimensionality(f, lo + static_cast<int>(i));
            } catch (const std::exception& e) {
                errors[i] = e.what();
            }
        }
    };
    const unsigned threads = std::max(1U, std::min<unsigned>(cfg.parallel, static_cast<unsigned>(count)));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    for (std::size_t i = 0; i < count; ++i)
        if (!errors[i].empty()) throw std::runtime_error("m=" + std::to_string(lo + static_cast<int>(i)) + ": " + errors[i]);

    std::vector<std::string> problems;
    if (cfg.check) {
        for (const auto& r : rows) {
            if (!matches_golden(r)) {
                const GoldenRow g = golden_row(f, r.m);
                std::string want;
                for (const auto& [p, q] : g.signatures) want += " (" + std::to_string(p) + "," + std::to_string(q) + ")";
                problems.push_back("m=" + std::to_string(r.m) + ": got d=" + std::to_string(r.min_dim) + " " +
                                   signature_list(r) + ", expected d=" + std::to_string(g.d) + want);
            }
            if (f == Family::hamming && r.m >= 5)
                for (const auto& c : hamming_branch_check(r.m))
                    if (!c.ok())
                        problems.push_back("m=" + std::to_string(r.m) + " s=" + std::to_string(c.s) + ": t_m branch gives " +
                                           to_string(c.expected) + " but switching gives " + to_string(c.observed));
        }
    }

    std::ostringstream os;
    if (cfg.format == "json") {
        json arr = json::array();
        for (const auto& r : rows) arr.push_back(io::to_json(r));
        json result{{"rows", arr}};
        if (cfg.check) result["check"] = problems.empty() ? "pass" : "fail";
        os << envelope(cfg, result).dump(2) << "\n";
    } else if (cfg.format == "csv") {
        os << "# " << cfg.header() << "\n";
        os << "family,m,n,d,signatures,witnesses\n";
        for (const auto& r : rows) {
            std::string wit;
            for (const auto& w : r.witnesses) {
                if (!wit.empty()) wit += ";";
                wit += "a=" + w.a.to_string() + " b=" + w.b.to_string() + " U=" + w.description;
            }
            os << to_string(f) << "," << r.m << "," << r.n << "," << r.min_dim << ",\"" << signature_list(r) << "\",\"" << wit
               << "\"\n";
        }
    } else {
        os << "# " << cfg.header() << "\n";
        os << (f == Family::johnson ? "J(m,2)" : "H(2,m)") << "\n";
        os << std::setw(4) << "m" << std::setw(6) << "|V|" << std::setw(5) << "d" << "  (p,q)\n";
        for (const auto& r : rows)
            os << std::setw(4) << r.m << std::setw(6) << r.n << std::setw(5) << r.min_dim << "  " << signature_list(r) << "\n";
        os << "witnesses\n";
        for (const auto& r : rows)
            for (const auto& w : r.witnesses)
                os << "  m=" << r.m << " (" << w.signature.positive << "," << w.signature.negative << ") a=" << w.a
                   << " b=" << w.b << " U=" << w.description << "\n";
        if (cfg.check) os << "check: " << (problems.empty() ? "PASS" : "FAIL") << "\n";
    }
    emit(cfg, os.str());
    for (const auto& p : problems) std::cerr << "table mismatch: " << p << "\n";
    return problems.empty() ? 0 : kVerifyFailed;
}

Dissimilarity dissimilarity_arg(const RunConfig& cfg) {
    const Rational a = rational_arg(cfg.a, "a");
    const Rational b = rational_arg(cfg.b, "b");
    if (a == b) throw UsageError("--a and --b must differ");
    return Dissimilarity(a, b);
}

VertexSet switch_arg(const RunConfig& cfg, const Target& t) {
    try {
        return parse_switch_spec(cfg.switch_spec, t.graph, t.family, t.m);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    } catch (const std::out_of_range& e) {
        throw UsageError(e.what());
    }
}

int cmd_analyze(const RunConfig& cfg) {
    const Target t = load_target(cfg);
    const Dissimilarity d = dissimilarity_arg(cfg);
    const VertexSet u = switch_arg(cfg, t);
    if (!is_regular(t.graph)) throw UsageError("the base graph must be regular");
    const SwitchContext ctx(t.graph);
    const SwitchReport rep = switch_dimensionality(ctx, u, d);
    if (!cfg.dump_matrix.empty()) {
        std::ofstream f(cfg.dump_matrix);
        if (!f) throw UsageError("cannot write " + cfg.dump_matrix);
        write_csv(f, dissimilarity_matrix(seidel_switch(t.graph, u), d));
    }
    emit(cfg, envelope(cfg, io::to_json(rep, t.graph)).dump(2) + "\n");
    return 0;
}

int cmd_classify(const RunConfig& cfg) {
    const Family f = family_of(cfg);
    const int m = single_m(cfg);
    Subspace s;
    if (cfg.subspace == "E0+E1") s = Subspace::e0e1;
    else if (cfg.subspace == "E0+E2") s = Subspace::e0e2;
    else throw UsageError("--subspace must be E0+E1 or E0+E2");
    const SwitchContext ctx(build_graph(f, m));
    auto brute = [&] {
        if (ctx.graph.order() > 24) throw UsageError("brute force needs n <= 24");
        return brute_force_admissible(ctx.graph, *ctx.idem, s);
    };
    auto structural = [&] {
        if (!structural_supported(f, m, s)) throw UsageError("no structural rule for this family, m and subspace");
        return structural_admissible(f, m, s);
    };
    json result;
    int code = 0;
    if (cfg.method == "structural") result = io::to_json(structural(), ctx.graph);
    else if (cfg.method == "brute-force") result = io::to_json(brute(), ctx.graph);
    else if (cfg.method == "both") {
        const AdmissibleFamily a = structural();
        const AdmissibleFamily b = brute();
        const bool same = a.vertex_sets() == b.vertex_sets();
        result = io::to_json(a, ctx.graph);
        result["brute_force_agrees"] = same;
        if (!same) code = kVerifyFailed;
    } else {
        throw UsageError("--method must be structural, brute-force or both");
    }
    emit(cfg, envelope(cfg, result).dump(2) + "\n");
    return code;
}

int cmd_realize(const RunConfig& cfg) {
    const Target t = load_target(cfg);
    const Dissimilarity d = dissimilarity_arg(cfg);
    const VertexSet u = switch_arg(cfg, t);
    const Graph switched = seidel_switch(t.graph, u);
    const ExactMatrix target = dissimilarity_matrix(switched, d);
    const ExactMatrix f = gower_center(target, centroid_weights(t.graph.order()));
    PointConfiguration x = realize(f, target, cfg.tol);
    for (std::size_t v = 0; v < t.graph.order(); ++v) x.labels[v] = t.graph.label(v);
    const DistanceSetReport rep = verify(x, cfg.tol, cfg.spherical);
    json j = io::to_json(x, &rep);
    j["version"] = SWITCHDIM_VERSION;
    j["run_config"] = cfg.to_json();
    emit(cfg, j.dump(2) + "\n");
    return 0;
}

int cmd_verify(const RunConfig& cfg) {
    std::ifstream f(cfg.input);
    if (!f) throw UsageError("cannot read " + cfg.input);
    json j;
    try {
        j = json::parse(f);
    } catch (const json::parse_error& e) {
        throw UsageError(std::string("malformed JSON: ") + e.what());
    }
    PointConfiguration x;
    try {
        x = io::configuration_from_json(j, cfg.tol);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const DistanceSetReport rep = verify(x, cfg.tol, cfg.spherical);
    json result = io::to_json(rep);
    result["p"] = x.p;
    result["q"] = x.q;
    emit(cfg, envelope(cfg, result).dump(2) + "\n");
    if (cfg.require_attained && !rep.attains_bound) {
        std::cerr << "verification failed: " << rep.points << " points, bound "
                  << (rep.bound ? std::to_string(*rep.bound) : std::string("n/a")) << "\n";
        return kVerifyFailed;
    }
    if (cfg.spherical && cfg.require_attained && !rep.sphere) return kVerifyFailed;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Minimum dimensionality of pseudo-Euclidean representations over Seidel switching classes"};
    app.set_version_flag("--version", SWITCHDIM_VERSION);
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_family = [&](CLI::App* c, bool required) {
        auto* opt = c->add_option("family", cfg.family, "johnson (J(m,2)) or hamming (H(2,m))");
        if (required) opt->required();
        c->add_option("--m", cfg.m, "parameter m");
    };
    auto add_out = [&](CLI::App* c) { c->add_option("-o,--out", cfg.out, "output file (default stdout)"); };
    auto add_switch = [&](CLI::App* c) {
        c->add_option("--graph", cfg.graph_path, "graph JSON instead of a family");
        c->add_option("--switch", cfg.switch_spec,
                      "switching set: empty | clique:i | rows:I | cols:I | verts:LIST | random:SEED[:SIZE]");
        c->add_option("--a", cfg.a, "scalar square on edges (n or n/d)");
        c->add_option("--b", cfg.b, "scalar square on non-edges (n or n/d)");
    };

    auto* graph = app.add_subcommand("graph", "emit a family graph as JSON");
    add_family(graph, true);
    graph->get_option("--m")->required();
    add_out(graph);

    auto* table = app.add_subcommand("table", "minimum dimensionality table over a range of m");
    add_family(table, true);
    table->get_option("--m")->required();
    table->add_option("--format", cfg.format, "text | csv | json");
    table->add_flag("--check", cfg.check, "compare with the reference tables; exit 3 on drift");
    table->add_option("--parallel", cfg.parallel, "worker threads")->check(CLI::Range(1U, 256U));
    add_out(table);

    auto* analyze = app.add_subcommand("analyze", "signature of one switched dissimilarity");
    add_family(analyze, false);
    add_switch(analyze);
    analyze->add_option("--dump-matrix", cfg.dump_matrix, "write D' as exact CSV");
    add_out(analyze);

    auto* classify = app.add_subcommand("classify", "admissible switching sets");
    add_family(classify, true);
    classify->get_option("--m")->required();
    classify->add_option("--subspace", cfg.subspace, "E0+E1 or E0+E2");
    classify->add_option("--method", cfg.method, "structural | brute-force | both");
    add_out(classify);

    auto* realize_cmd = app.add_subcommand("realize", "coordinates in R^{p,q} for a switched dissimilarity");
    add_family(realize_cmd, false);
    add_switch(realize_cmd);
    realize_cmd->add_option("--tol", cfg.tol, "relative tolerance");
    realize_cmd->add_flag("--spherical", cfg.spherical, "report the spherical bound when a sphere is found");
    add_out(realize_cmd);

    auto* verify_cmd = app.add_subcommand("verify-distset", "distance-set report for a coordinates file");
    verify_cmd->add_option("input", cfg.input, "coordinates JSON")->required();
    verify_cmd->add_option("--tol", cfg.tol, "relative tolerance");
    verify_cmd->add_flag("--spherical", cfg.spherical, "use the spherical bound");
    verify_cmd->add_flag("--require-attained", cfg.require_attained, "exit 3 unless the bound is attained");
    add_out(verify_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kUsage;
    }

    try {
        if (graph->parsed()) { cfg.command = "graph"; return cmd_graph(cfg); }
        if (table->parsed()) { cfg.command = "table"; return cmd_table(cfg); }
        if (analyze->parsed()) { cfg.command = "analyze"; return cmd_analyze(cfg); }
        if (classify->parsed()) { cfg.command = "classify"; return cmd_classify(cfg); }
        if (realize_cmd->parsed()) { cfg.command = "realize"; return cmd_realize(cfg); }
        if (verify_cmd->parsed()) { cfg.command = "verify-distset"; return cmd_verify(cfg); }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kUsage;
}
