// polymatch: matching complexes of polygonal line tilings — construction,
// exact integral homology, reduction traces, wedge-of-spheres predictions,
// and prediction-vs-computation verification.
//
// Exit codes: 0 success/match, 1 verified mismatch, 2 usage or input error,
// 3 simplex budget exceeded.

#include <CLI11.hpp>

#include <chrono>
#include <cinttypes>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <unistd.h>

#include "polymatch/complex.hpp"
#include "polymatch/graph.hpp"
#include "polymatch/homology.hpp"
#include "polymatch/homotopy.hpp"
#include "polymatch/json_io.hpp"
#include "polymatch/reductions.hpp"

namespace fs = std::filesystem;
using namespace polymatch;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

long long default_budget() {
    if (const char* s = std::getenv("POLYMATCH_BUDGET")) {
        char* end = nullptr;
        long long v = std::strtoll(s, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return kDefaultSimplexBudget;
}

std::string default_cache_dir() {
    if (const char* s = std::getenv("POLYMATCH_CACHE_DIR")) return s;
    return "";
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw usage_error("cannot open " + path);
    Json j = Json::parse(in, nullptr, false);
    if (j.is_discarded()) throw usage_error("malformed JSON in " + path);
    return j;
}

void write_output(const Json& j, const std::string& out_path) {
    std::string text = dump(j);
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw usage_error("cannot write " + out_path);
    out << text;
}

Graph load_graph(const std::string& path) { return graph_from_json(read_json_file(path)); }

SimplicialComplex complex_of(const Graph& g, const std::string& kind, long long budget) {
    if (kind == "independence") return independence_complex(g, budget);
    if (kind == "matching") return matching_complex(g, budget);
    throw usage_error("kind must be 'independence' or 'matching'");
}

std::string hex64(uint64_t h) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016" PRIx64, h);
    return buf;
}

// ---- range parsing ("3", "1..4", "2,5,7") ----------------------------------

std::vector<int> parse_range(const std::string& spec) {
    std::vector<int> out;
    auto parse_int = [](const std::string& s) {
        size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos != s.size()) throw usage_error("bad integer in range: " + s);
        return v;
    };
    size_t dots = spec.find("..");
    if (dots != std::string::npos) {
        int lo = parse_int(spec.substr(0, dots));
        int hi = parse_int(spec.substr(dots + 2));
        for (int v = lo; v <= hi; ++v) out.push_back(v);
    } else {
        size_t start = 0;
        while (start <= spec.size()) {
            size_t comma = spec.find(',', start);
            std::string tok = spec.substr(start, comma == std::string::npos ? std::string::npos
                                                                            : comma - start);
            if (tok.empty()) throw usage_error("bad range: " + spec);
            out.push_back(parse_int(tok));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
    }
    if (out.empty()) throw usage_error("empty range: " + spec);
    return out;
}

// ---- family construction ----------------------------------------------------

Graph build_family(const std::string& family, int n, int t, int k) {
    if (family == "path") return path_graph(k);
    if (family == "cycle") return cycle_graph(k);
    if (family == "tiling") return polygon_line_tiling(n, t);
    if (family == "G") return g_graph(n, t);
    if (family == "H") return h_graph(n, t);
    throw usage_error("family must be one of path, cycle, tiling, G, H");
}

// ---- homology with cache -----------------------------------------------------

struct ComputedHomology {
    HomologyProfile profile;
    long long face_count = 0;
    int top_dim = -1;
    bool from_cache = false;
};

HomologyProfile homology_from_json(const Json& j) {
    HomologyProfile h;
    for (auto it = j["betti"].begin(); it != j["betti"].end(); ++it) {
        long long b = it.value().get<long long>();
        if (b != 0) h.betti[std::stoi(it.key())] = b;
    }
    for (auto it = j["torsion"].begin(); it != j["torsion"].end(); ++it) {
        std::vector<long long> tor = it.value().get<std::vector<long long>>();
        if (!tor.empty()) h.torsion[std::stoi(it.key())] = std::move(tor);
    }
    return h;
}

ComputedHomology brute_force_homology(const Graph& g, long long budget,
                                      const std::string& cache_dir,
                                      const std::string& cache_key) {
    fs::path cache_file;
    if (!cache_dir.empty()) {
        cache_file = fs::path(cache_dir) / (cache_key + "_" + hex64(g.digest()) + ".json");
        if (fs::exists(cache_file)) {
            Json j = read_json_file(cache_file.string());
            ComputedHomology out;
            out.profile = homology_from_json(j["homology"]);
            out.face_count = j["face_count"].get<long long>();
            out.top_dim = j["top_dim"].get<int>();
            out.from_cache = true;
            return out;
        }
    }
    SimplicialComplex k = independence_complex(g, budget);
    ChainComplex cc = chain_complex(k);
    ComputedHomology out;
    out.profile = reduced_homology(cc);
    out.face_count = k.face_count();
    out.top_dim = k.dim();
    if (!cache_dir.empty()) {
        fs::create_directories(cache_dir);
        Json j;
        j["key"] = cache_key;
        j["digest"] = hex64(g.digest());
        j["face_count"] = out.face_count;
        j["top_dim"] = out.top_dim;
        j["homology"] = homology_to_json(out.profile, out.top_dim);
        fs::path tmp = cache_file;
        tmp += ".tmp" + std::to_string(::getpid());
        std::ofstream f(tmp);
        f << dump(j);
        f.close();
        fs::rename(tmp, cache_file);
    }
    return out;
}

// ---- subcommands -------------------------------------------------------------

int run_build(const std::string& family, int n, int t, int k, const std::string& out) {
    Graph g = build_family(family, n, t, k);
    write_output(graph_to_json(g), out);
    return kExitOk;
}

int run_complex(const std::string& in, const std::string& kind, long long budget,
                const std::string& out) {
    Graph g = load_graph(in);
    write_output(complex_to_json(complex_of(g, kind, budget)), out);
    return kExitOk;
}

int run_homology(const std::string& in, const std::string& kind, long long budget,
                 const std::string& out) {
    Graph g = load_graph(in);
    SimplicialComplex k = complex_of(g, kind, budget);
    HomologyProfile h = reduced_homology(chain_complex(k));
    write_output(homology_to_json(h, k.dim()), out);
    return kExitOk;
}

Json prediction_json(const std::string& family, int n, int t) {
    HomotopyType predicted = family == "H" ? predict_H(n, t) : predict_G(n, t);
    Connectivity conn =
        family == "H" ? connectivity_of_type(predicted) : connectivity_G(n, t);
    Json j;
    j["family"] = family;
    j["n"] = n;
    j["t"] = t;
    Json ht = homotopy_type_to_json(predicted);
    j["type"] = ht["type"];
    j["spheres"] = ht["spheres"];
    j["connectivity"] = connectivity_to_json(conn);
    return j;
}

int run_predict(const std::string& family, int n, int t, const std::string& out) {
    if (family != "G" && family != "H") throw usage_error("family must be G or H");
    write_output(prediction_json(family, n, t), out);
    return kExitOk;
}

struct VerifyOutcome {
    Json report;
    int exit_code;
};

VerifyOutcome verify_instance(const std::string& family, int n, int t, long long budget,
                              const std::string& cache_dir) {
    if (family != "G" && family != "H") throw usage_error("family must be G or H");
    Graph g = family == "H" ? h_graph(n, t) : g_graph(n, t);
    HomotopyType predicted = family == "H" ? predict_H(n, t) : predict_G(n, t);
    Connectivity conn_pred =
        family == "H" ? connectivity_of_type(predicted) : connectivity_G(n, t);

    Json report;
    report["family"] = family;
    report["n"] = n;
    report["t"] = t;
    report["predicted"] = homotopy_type_to_json(predicted);
    report["connectivity_predicted"] = connectivity_to_json(conn_pred);

    auto start = std::chrono::steady_clock::now();
    std::string key = family + std::to_string(n) + "_" + std::to_string(t) + "_independence";
    try {
        ComputedHomology ch = brute_force_homology(g, budget, cache_dir, key);
        auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
        bool match = profile_matches_type(ch.profile, predicted);
        report["computed"] = homology_to_json(ch.profile, ch.top_dim);
        report["connectivity_computed"] = ch.profile.torsion_free()
                                              ? connectivity_to_json(connectivity_of_profile(ch.profile))
                                              : Json(nullptr);
        report["match"] = match;
        report["torsion_free"] = ch.profile.torsion_free();
        report["face_count"] = ch.face_count;
        report["budget_exceeded"] = false;
        report["elapsed_ms"] = elapsed;
        return {report, match ? kExitOk : kExitMismatch};
    } catch (const budget_exceeded& e) {
        auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
        report["computed"] = nullptr;
        report["connectivity_computed"] = nullptr;
        report["match"] = false;
        report["torsion_free"] = nullptr;
        report["face_count"] = nullptr;
        report["budget_exceeded"] = true;
        report["budget"] = e.budget;
        report["elapsed_ms"] = elapsed;
        return {report, kExitBudget};
    }
}

int run_verify(const std::string& family, int n, int t, long long budget,
               const std::string& cache_dir, const std::string& out) {
    VerifyOutcome vo = verify_instance(family, n, t, budget, cache_dir);
    write_output(vo.report, out);
    return vo.exit_code;
}

int run_reduce(const std::string& in, const std::string& out) {
    Graph g = load_graph(in);
    ReductionResult rr = reduce(g);
    Json j;
    j["steps"] = trace_to_json(rr.trace);
    try {
        HomotopyType t = evaluate(*rr.expr);
        j["status"] = "closed";
        j["type"] = homotopy_type_to_json(t);
    } catch (const unresolved_leaf&) {
        j["status"] = "unresolved_leaf";
        j["type"] = nullptr;
    }
    write_output(j, out);
    return kExitOk;
}

int run_table(const std::string& n_spec, const std::string& t_spec, const std::string& format,
              bool verify, long long budget, const std::string& cache_dir,
              const std::string& out) {
    std::vector<int> ns = parse_range(n_spec);
    std::vector<int> ts = parse_range(t_spec);
    if (format != "md" && format != "csv" && format != "json")
        throw usage_error("format must be md, csv or json");

    bool any_mismatch = false;
    Json rows = Json::array();
    for (int n : ns)
        for (int t : ts) {
            if (n < 2 || t < 0) throw usage_error("table: need n >= 2 and t >= 0");
            HomotopyType predicted = predict_G(n, t);
            Json row;
            row["n"] = n;
            row["t"] = t;
            row["predicted"] = predicted.to_string();
            row["connectivity"] = connectivity_to_json(connectivity_G(n, t));
            if (n % 3 == 2 && t >= 1)
                row["jmmv_bound"] = jmmv_lower_bound(n, t);
            else
                row["jmmv_bound"] = nullptr;
            std::string status = "predicted-only";
            if (verify) {
                VerifyOutcome vo = verify_instance("G", n, t, budget, cache_dir);
                if (vo.exit_code == kExitOk)
                    status = "verified";
                else if (vo.exit_code == kExitBudget)
                    status = "budget-exceeded";
                else {
                    status = "mismatch";
                    any_mismatch = true;
                }
            }
            row["status"] = status;
            rows.push_back(std::move(row));
        }

    std::string text;
    auto cell = [](const Json& v) -> std::string {
        if (v.is_null()) return "";
        if (v.is_string()) return v.get<std::string>();
        return v.dump();
    };
    if (format == "json") {
        text = dump(rows);
    } else if (format == "csv") {
        text = "n,t,predicted,connectivity,jmmv_bound,status\n";
        for (const Json& r : rows)
            text += cell(r["n"]) + "," + cell(r["t"]) + "," + cell(r["predicted"]) + "," +
                    cell(r["connectivity"]) + "," + cell(r["jmmv_bound"]) + "," +
                    cell(r["status"]) + "\n";
    } else {
        text = "| n | t | predicted | connectivity | jmmv_bound | status |\n";
        text += "|---|---|---|---|---|---|\n";
        for (const Json& r : rows)
            text += "| " + cell(r["n"]) + " | " + cell(r["t"]) + " | " + cell(r["predicted"]) +
                    " | " + cell(r["connectivity"]) + " | " + cell(r["jmmv_bound"]) + " | " +
                    cell(r["status"]) + " |\n";
    }
    if (out.empty())
        std::cout << text;
    else {
        std::ofstream f(out);
        if (!f) throw usage_error("cannot write " + out);
        f << text;
    }
    return any_mismatch ? kExitMismatch : kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"matching complexes of polygonal line tilings"};
    app.require_subcommand(1);

    long long budget = default_budget();
    std::string cache_dir = default_cache_dir();
    std::string family = "G", kind = "independence", format = "md";
    std::string in_path, out_path, n_spec, t_spec;
    int n = 0, t = 0, k = 0;
    bool table_verify = false;

    auto* cb = app.add_subcommand("build", "construct a graph and emit its JSON");
    cb->add_option("--family", family, "path|cycle|tiling|G|H")->required();
    cb->add_option("--n", n, "strand parameter (half the gon size)");
    cb->add_option("--t", t, "number of gons");
    cb->add_option("--k", k, "vertex count for path/cycle");
    cb->add_option("--out", out_path, "output file (default stdout)");

    auto* cc = app.add_subcommand("complex", "enumerate an independence or matching complex");
    cc->add_option("--in", in_path, "graph JSON file")->required();
    cc->add_option("--kind", kind, "independence|matching");
    cc->add_option("--budget", budget, "max faces before aborting");
    cc->add_option("--out", out_path, "output file (default stdout)");

    auto* ch = app.add_subcommand("homology", "exact reduced integral homology");
    ch->add_option("--in", in_path, "graph JSON file")->required();
    ch->add_option("--kind", kind, "independence|matching");
    ch->add_option("--budget", budget, "max faces before aborting");
    ch->add_option("--out", out_path, "output file (default stdout)");

    auto* cp = app.add_subcommand("predict", "closed-form homotopy type prediction");
    cp->add_option("--family", family, "G|H");
    cp->add_option("--n", n, "strand parameter")->required();
    cp->add_option("--t", t, "number of gons")->required();
    cp->add_option("--out", out_path, "output file (default stdout)");

    auto* cv = app.add_subcommand("verify", "compare prediction against brute force");
    cv->add_option("--family", family, "G|H");
    cv->add_option("--n", n, "strand parameter")->required();
    cv->add_option("--t", t, "number of gons")->required();
    cv->add_option("--budget", budget, "max faces before aborting");
    cv->add_option("--cache-dir", cache_dir, "cache directory for brute-force results");
    cv->add_option("--out", out_path, "output file (default stdout)");

    auto* cr = app.add_subcommand("reduce", "reduction trace and evaluated homotopy type");
    cr->add_option("--in", in_path, "graph JSON file")->required();
    cr->add_option("--out", out_path, "output file (default stdout)");

    auto* ct = app.add_subcommand("table", "prediction table over ranges of (n, t)");
    ct->add_option("--n", n_spec, "n range, e.g. 3 or 3..5 or 3,4")->required();
    ct->add_option("--t", t_spec, "t range")->required();
    ct->add_option("--format", format, "md|csv|json");
    ct->add_flag("--verify", table_verify, "run brute-force verification per row");
    ct->add_option("--budget", budget, "max faces before aborting");
    ct->add_option("--cache-dir", cache_dir, "cache directory for brute-force results");
    ct->add_option("--out", out_path, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (cb->parsed()) return run_build(family, n, t, k, out_path);
        if (cc->parsed()) return run_complex(in_path, kind, budget, out_path);
        if (ch->parsed()) return run_homology(in_path, kind, budget, out_path);
        if (cp->parsed()) return run_predict(family, n, t, out_path);
        if (cv->parsed()) return run_verify(family, n, t, budget, cache_dir, out_path);
        if (cr->parsed()) return run_reduce(in_path, out_path);
        if (ct->parsed())
            return run_table(n_spec, t_spec, format, table_verify, budget, cache_dir, out_path);
    } catch (const budget_exceeded& e) {
        std::cerr << e.what() << "\n";
        return kExitBudget;
    } catch (const usage_error& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
