// dnormal: double-normal graph toolkit command-line front end.
//
// Exit codes: 0 = property holds / success, 1 = property fails or the
// construction is infeasible, 2 = usage or input error.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dnormal/constructions.hpp"
#include "dnormal/geometry.hpp"
#include "dnormal/graph.hpp"
#include "dnormal/io.hpp"
#include "dnormal/rng.hpp"
#include "dnormal/search.hpp"

namespace {

using nlohmann::json;
using namespace dnormal;

constexpr const char* kToolVersion = "dnormal 0.1.0";
constexpr int kExitOk = 0;
constexpr int kExitPropertyFail = 1;
constexpr int kExitUsage = 2;

struct ManifestData {
    std::string subcommand;
    json params = json::object();
    std::vector<std::string> argv;  ///< exact invocation, replayed verbatim
    std::uint64_t seed = 0;
    std::vector<std::string> inputs;
};

void write_manifest(const std::string& out_path, const ManifestData& m,
                    double duration_ms) {
    json j;
    j["subcommand"] = m.subcommand;
    j["params"] = m.params;
    j["argv"] = m.argv;
    j["seed"] = m.seed;
    j["tool_version"] = kToolVersion;
    json inputs = json::object();
    for (const std::string& path : m.inputs) inputs[path] = hex64(fnv1a64_file(path));
    j["inputs"] = std::move(inputs);
    j["duration_ms"] = duration_ms;
    write_text_atomic(out_path + ".manifest.json", j.dump(2) + "\n");
}

class Stopwatch {
  public:
    double ms() const {
        return std::chrono::duration<double, std::milli>(clock::now() - start_).count();
    }

  private:
    using clock = std::chrono::steady_clock;
    clock::time_point start_ = clock::now();
};

PairMode parse_mode(const std::string& mode, double delta) {
    switch (pair_mode_kind_from_string(mode)) {
        case PairMode::Kind::Standard: return PairMode::standard();
        case PairMode::Kind::Strict: return PairMode::strict();
        case PairMode::Kind::Almost: return PairMode::almost(delta);
    }
    return PairMode::standard();
}

// ---------------------------------------------------------------- verify ---

struct VerifyArgs {
    std::string input;
    std::string mode = "standard";
    double delta = 0.0;
    double tol_abs = 1e-9;
    double tol_rel = 1e-9;
    std::string expect;  // complete | acute | nonobtuse | none
    std::string out;
    std::string graph_out;
};

int run_verify(const VerifyArgs& args) {
    const Tolerance tol{args.tol_abs, args.tol_rel};
    const PointSet ps = read_point_set(args.input, tol);
    const PairMode mode = parse_mode(args.mode, args.delta);

    json cert;
    bool pass = true;

    if (args.expect == "acute" || args.expect == "nonobtuse") {
        const bool acute = args.expect == "acute";
        json violations = json::array();
        for (std::size_t j = 0; j < ps.size(); ++j)
            for (std::size_t i = 0; i < ps.size(); ++i) {
                if (i == j) continue;
                for (std::size_t k = i + 1; k < ps.size(); ++k) {
                    if (k == j) continue;
                    const AngleClass c = classify_angle(ps[j], ps[i], ps[k], tol);
                    const bool bad = acute ? c.kind != AngleKind::Acute
                                           : c.kind == AngleKind::Obtuse;
                    if (bad) violations.push_back({i, j, k});
                }
            }
        pass = violations.empty();
        std::cout << "n=" << ps.size() << " dim=" << ps.dim() << " expect="
                  << args.expect << " -> " << (pass ? "pass" : "fail") << "\n";
        if (!pass)
            std::cout << violations.size() << " violating triples (i,vertex,k)\n";
        cert["pass"] = pass;
        cert["violations"] = std::move(violations);
    } else {
        const DnGraph g = build_graph(ps, mode, tol);
        std::cout << "n=" << g.size() << " mode=" << to_string(mode.kind)
                  << " edges=" << g.edge_count() << "\n";
        if (!args.graph_out.empty())
            write_text_atomic(args.graph_out, graph_to_json(g).dump(2) + "\n");
        json violations = json::array();
        if (args.expect == "complete") {
            for (std::size_t i = 0; i < g.size(); ++i)
                for (std::size_t j = i + 1; j < g.size(); ++j)
                    if (!g.edge(i, j)) violations.push_back({i, j});
            pass = violations.empty();
            if (!pass) {
                std::cout << violations.size() << " violating pairs:";
                for (const auto& v : violations)
                    std::cout << " (" << v[0].get<std::size_t>() << ","
                              << v[1].get<std::size_t>() << ")";
                std::cout << "\n";
            }
        } else if (!args.expect.empty() && args.expect != "none") {
            throw OutOfRange("unknown --expect value: " + args.expect);
        }
        cert["pass"] = pass;
        cert["violations"] = std::move(violations);
        cert["edges"] = g.edge_count();
    }

    if (!args.out.empty()) write_text_atomic(args.out, cert.dump(2) + "\n");
    return pass ? kExitOk : kExitPropertyFail;
}

// ------------------------------------------------------------- construct ---

struct ConstructArgs {
    std::string kind;
    std::size_t dim = 3;
    std::size_t m = 3;
    std::size_t simplex = 0;
    std::string acute_input;
    std::size_t parts_size = 1;
    double epsilon = 0.0;  // 0 = auto
    std::size_t rounds = 32;
    std::uint64_t seed = 0;
    double tol_abs = 1e-9;
    double tol_rel = 1e-9;
    std::string out;
};

int run_construct(const ConstructArgs& args, ManifestData& manifest) {
    const Tolerance tol{args.tol_abs, args.tol_rel};
    if (args.out.empty()) throw OutOfRange("construct requires --out");

    if (args.kind == "hypercube") {
        const PointSet ps = hypercube_vertices(args.dim);
        write_text_atomic(args.out, point_set_to_json(ps).dump(2) + "\n");
        std::cout << "wrote " << ps.size() << " points in dim " << ps.dim()
                  << " to " << args.out << "\n";
        return kExitOk;
    }
    if (args.kind == "simplex") {
        const PointSet ps = regular_simplex(args.m);
        write_text_atomic(args.out, point_set_to_json(ps).dump(2) + "\n");
        std::cout << "wrote " << ps.size() << " points in dim " << ps.dim()
                  << " to " << args.out << "\n";
        return kExitOk;
    }
    if (args.kind == "random-acute") {
        const PointSet ps = random_acute_set(args.dim, args.seed, args.rounds, tol);
        write_text_atomic(args.out, point_set_to_json(ps).dump(2) + "\n");
        std::cout << "wrote verified acute set of size " << ps.size()
                  << " in dim " << ps.dim() << " to " << args.out << "\n";
        return kExitOk;
    }
    if (args.kind == "km-embedding") {
        if (args.acute_input.empty() && args.simplex == 0)
            throw OutOfRange("km-embedding needs --acute-input or --simplex");
        PointSet base = args.acute_input.empty()
                            ? regular_simplex(args.simplex)
                            : read_point_set(args.acute_input, tol);
        if (!args.acute_input.empty()) manifest.inputs.push_back(args.acute_input);
        EmbeddingParams params;
        params.parts_size = args.parts_size;
        if (args.epsilon > 0.0) params.epsilon = args.epsilon;
        params.seed = args.seed;
        const EmbeddingResult result = km_embedding(base, params, tol);

        const auto& config = result.config;
        write_text_atomic(args.out,
                          point_set_to_json(config.point_set(), &config.part_of())
                                  .dump(2) +
                              "\n");
        json trace = trace_to_json(result.trace);
        trace["certificate"] = certificate_to_json(result.certificate);
        write_text_atomic(args.out + ".trace.json", trace.dump(2) + "\n");
        std::cout << "wrote " << config.point_set().size() << " points in dim "
                  << config.point_set().dim() << " (" << config.part_count()
                  << " parts of " << args.parts_size << "), certificate "
                  << (result.certificate.pass ? "pass" : "fail") << "\n";
        return kExitOk;
    }
    throw OutOfRange("unknown construct kind: " + args.kind);
}

// ---------------------------------------------------------------- bounds ---

struct BoundsArgs {
    std::size_t from = 2;
    std::size_t to = 10;
    std::string evidence;
    std::string out;
};

int run_bounds(const BoundsArgs& args) {
    if (args.from < 2 || args.from > args.to || args.to > 64)
        throw OutOfRange("bounds requires 2 <= from <= to <= 64");
    std::vector<AcuteEvidence> evidence;
    if (!args.evidence.empty())
        evidence = acute_evidence_from_records(read_result_records(args.evidence));
    const auto rows = bounds_table(args.from, args.to, evidence);

    std::cout << "  d  k_lower  k_upper  k1_upper  status\n";
    json jrows = json::array();
    for (const BoundsRow& r : rows) {
        char line[96];
        std::snprintf(line, sizeof(line), "%3zu  %7zu  %7zu  %8zu  %s%s", r.d,
                      r.k_lower, r.k_upper, r.k1_upper, r.status().c_str(),
                      r.k1_exact ? "" : " (k1 equality unattainable)");
        std::cout << line << "\n";
        json jr;
        jr["d"] = r.d;
        jr["k_lower"] = r.k_lower;
        jr["k_upper"] = r.k_upper;
        jr["k1_upper"] = r.k1_upper;
        jr["k1_exact"] = r.k1_exact;
        jr["status"] = r.status();
        jrows.push_back(std::move(jr));
    }
    if (!args.out.empty())
        write_text_atomic(args.out, json{{"rows", jrows}}.dump(2) + "\n");
    return kExitOk;
}

// --------------------------------------------------------------- density ---

struct DensityArgs {
    std::size_t dim = 2;
    std::vector<std::size_t> n_list;
    std::size_t samples = 100;
    std::uint64_t seed = 0;
    std::vector<std::string> inputs;
    std::string mode = "standard";
    double delta = 0.0;
    std::string out;
};

int run_density(const DensityArgs& args, ManifestData& manifest) {
    if (args.dim < 2) throw OutOfRange("density requires dim >= 2");
    const Tolerance tol;
    const PairMode mode = parse_mode(args.mode, args.delta);

    std::map<std::size_t, std::size_t> max_edges;
    for (std::size_t n : args.n_list) {
        if (n < 2) throw OutOfRange("density requires n >= 2");
        std::size_t best = 0;
        for (std::size_t s = 0; s < args.samples; ++s) {
            auto rng = make_engine(args.seed, (n << 20) + s);
            std::vector<Vec> pts(n, Vec(args.dim));
            for (Vec& p : pts)
                for (double& c : p) c = next_unit(rng);
            const PointSet ps(args.dim, std::move(pts), tol);
            best = std::max(best, build_graph(ps, mode, tol).edge_count());
        }
        if (args.samples > 0) max_edges[n] = best;
    }
    for (const std::string& path : args.inputs) {
        const auto [ps, parts] = read_point_set_with_parts(path, tol);
        manifest.inputs.push_back(path);
        const DnGraph g = build_graph(ps, mode, tol);
        // Partitioned inputs contribute their witnessed multipartite edge
        // count; the graph itself may be a proper supergraph.
        std::size_t edges = 0;
        if (parts.size() == ps.size()) {
            for (std::size_t i = 0; i < ps.size(); ++i)
                for (std::size_t j = i + 1; j < ps.size(); ++j)
                    if (parts[i] != parts[j] && g.edge(i, j)) ++edges;
        } else {
            edges = g.edge_count();
        }
        auto it = max_edges.find(ps.size());
        if (it == max_edges.end() || edges > it->second) max_edges[ps.size()] = edges;
    }

    std::ostringstream csv;
    csv << "n,max_edges,turan_fit\n";
    for (const auto& [n, edges] : max_edges) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.17g", turan_fit(n, edges));
        csv << n << "," << edges << "," << buf << "\n";
    }
    std::cout << csv.str();
    if (!args.out.empty()) write_text_atomic(args.out, csv.str());
    return kExitOk;
}

// ---------------------------------------------------------------- search ---

struct SearchArgs {
    SearchConfig config;
    std::string results = "dnormal_results.jsonl";
    std::string out;
};

int run_search(const SearchArgs& args) {
    const SearchResult result = search(args.config);
    std::cout << "dim=" << args.config.dim << " target=" << args.config.target_size
              << " best_margin=" << result.best_margin
              << " verified=" << (result.verified ? "true" : "false") << "\n";

    if (!args.out.empty()) {
        json j;
        j["dim"] = args.config.dim;
        j["size"] = args.config.target_size;
        j["margin"] = result.best_margin;
        j["verified"] = result.verified;
        j["seed"] = args.config.seed;
        j["delta"] = args.config.delta;
        j["history"] = result.history;
        j["points"] = point_set_to_json(result.best_points)["points"];
        write_text_atomic(args.out, j.dump(2) + "\n");
    }
    if (result.verified && !args.results.empty()) {
        ResultRecord rec;
        rec.dim = args.config.dim;
        rec.size = args.config.target_size;
        rec.margin = result.best_margin;
        rec.seed = args.config.seed;
        rec.delta = args.config.delta;
        rec.points = result.best_points.points();
        append_result_record(args.results, rec);
    }
    return result.verified ? kExitOk : kExitPropertyFail;
}

// ----------------------------------------------------------------- probe ---

struct ProbeArgs {
    std::size_t dim = 2;
    double delta = 0.05;
    SearchConfig budget;
    std::string out;
};

int run_probe(const ProbeArgs& args) {
    const ProbeReport report = probe_relaxed_bound(args.dim, args.delta, args.budget);
    std::cout << "dim=" << report.dim << " delta=" << report.delta
              << " target=" << report.target
              << " best_max_angle=" << report.best_max_angle << "\n"
              << report.outcome << "\n";
    if (!args.out.empty()) {
        json j;
        j["dim"] = report.dim;
        j["delta"] = report.delta;
        j["target"] = report.target;
        j["best_max_angle"] = report.best_max_angle;
        j["satisfied"] = report.satisfied;
        j["outcome"] = report.outcome;
        write_text_atomic(args.out, j.dump(2) + "\n");
    }
    return kExitOk;  // exploratory: both outcomes are reports, not failures
}

// ---------------------------------------------------------------- replay ---

int run_replay(const std::string& manifest_path, const std::string& out_override);

// ------------------------------------------------------------------ main ---

int dispatch(std::vector<std::string> args);

int run_replay(const std::string& manifest_path, const std::string& out_override) {
    std::ifstream in(manifest_path);
    if (!in) throw IoError("cannot open manifest " + manifest_path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw IoError(std::string("malformed manifest: ") + e.what());
    }
    if (!j.contains("argv") || !j["argv"].is_array())
        throw IoError("manifest needs the recorded \"argv\" array");

    std::vector<std::string> argv;
    for (const auto& item : j["argv"]) argv.push_back(item.get<std::string>());
    if (!out_override.empty()) {
        for (std::size_t i = 0; i + 1 < argv.size(); ++i)
            if (argv[i] == "--out") argv[i + 1] = out_override;
    }
    return dispatch(std::move(argv));
}

int dispatch(std::vector<std::string> args) {
    CLI::App app{"double-normal graph toolkit"};
    app.require_subcommand(1);

    // verify
    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "check properties of a point set");
    verify->add_option("input", verify_args.input, "points file (JSON or CSV)")
        ->required();
    verify->add_option("--mode", verify_args.mode, "standard|strict|almost");
    verify->add_option("--delta", verify_args.delta, "delta for almost mode");
    verify->add_option("--tol", verify_args.tol_abs, "absolute tolerance");
    verify->add_option("--tol-rel", verify_args.tol_rel, "relative tolerance");
    verify->add_option("--expect", verify_args.expect,
                       "complete|acute|nonobtuse|none");
    verify->add_option("--out", verify_args.out, "certificate JSON path");
    verify->add_option("--graph-out", verify_args.graph_out,
                       "write the double-normal graph as JSON");

    // construct
    ConstructArgs construct_args;
    auto* construct = app.add_subcommand("construct", "generate configurations");
    construct->add_option("kind", construct_args.kind,
                          "hypercube|simplex|random-acute|km-embedding")
        ->required();
    construct->add_option("--dim", construct_args.dim, "dimension");
    construct->add_option("--m", construct_args.m, "simplex point count");
    construct->add_option("--simplex", construct_args.simplex,
                          "km-embedding: use a regular simplex base of this size");
    construct->add_option("--acute-input", construct_args.acute_input,
                          "km-embedding: acute base point file");
    construct->add_option("--parts-size", construct_args.parts_size,
                          "km-embedding: points per part (N)");
    construct->add_option("--epsilon", construct_args.epsilon,
                          "km-embedding: explicit epsilon (0 = auto)");
    construct->add_option("--rounds", construct_args.rounds,
                          "random-acute: sampling rounds");
    construct->add_option("--seed", construct_args.seed, "random seed");
    construct->add_option("--tol", construct_args.tol_abs, "absolute tolerance");
    construct->add_option("--tol-rel", construct_args.tol_rel, "relative tolerance");
    construct->add_option("--out", construct_args.out, "output path")->required();

    // bounds
    BoundsArgs bounds_args;
    auto* bounds = app.add_subcommand("bounds", "per-dimension bound table");
    bounds->add_option("--from", bounds_args.from, "first dimension")->required();
    bounds->add_option("--to", bounds_args.to, "last dimension")->required();
    bounds->add_option("--evidence", bounds_args.evidence,
                       "results file with verified acute sets");
    bounds->add_option("--out", bounds_args.out, "JSON twin path");

    // density
    DensityArgs density_args;
    auto* density = app.add_subcommand("density", "edge-count density experiment");
    density->add_option("--dim", density_args.dim, "ambient dimension")->required();
    density->add_option("--n", density_args.n_list, "point counts to sample");
    density->add_option("--samples", density_args.samples, "random samples per n");
    density->add_option("--seed", density_args.seed, "random seed");
    density->add_option("--input", density_args.inputs,
                        "extra point files to include");
    density->add_option("--mode", density_args.mode, "standard|strict|almost");
    density->add_option("--delta", density_args.delta, "delta for almost mode");
    density->add_option("--out", density_args.out, "CSV output path");

    // search
    SearchArgs search_args;
    auto* searchcmd = app.add_subcommand("search", "anneal for large acute sets");
    searchcmd->add_option("--dim", search_args.config.dim, "dimension")->required();
    searchcmd->add_option("--target", search_args.config.target_size,
                          "points to place")->required();
    searchcmd->add_option("--restarts", search_args.config.restarts, "restarts");
    searchcmd->add_option("--steps", search_args.config.steps_per_restart,
                          "steps per restart");
    searchcmd->add_option("--temp", search_args.config.init_temperature,
                          "initial temperature");
    searchcmd->add_option("--cooling", search_args.config.cooling,
                          "cooling factor in (0,1)");
    searchcmd->add_option("--seed", search_args.config.seed, "random seed");
    searchcmd->add_option("--delta", search_args.config.delta,
                          "relaxation (0 = acute)");
    searchcmd->add_flag("--init-hypercube", search_args.config.init_hypercube,
                        "start from random hypercube vertices");
    searchcmd->add_option("--results", search_args.results,
                          "append-only results file for verified records");
    searchcmd->add_option("--out", search_args.out, "result JSON path");

    // probe
    ProbeArgs probe_args;
    auto* probe = app.add_subcommand("probe", "relaxed-angle feasibility probe");
    probe->add_option("--dim", probe_args.dim, "dimension (2 or 3)")->required();
    probe->add_option("--delta", probe_args.delta, "angle relaxation")->required();
    probe->add_option("--restarts", probe_args.budget.restarts, "restarts");
    probe->add_option("--steps", probe_args.budget.steps_per_restart,
                      "steps per restart");
    probe->add_option("--seed", probe_args.budget.seed, "random seed");
    probe->add_option("--out", probe_args.out, "report JSON path");

    // replay
    std::string replay_manifest;
    std::string replay_out;
    auto* replay = app.add_subcommand("replay", "re-run a recorded manifest");
    replay->add_option("manifest", replay_manifest, "manifest JSON path")
        ->required();
    replay->add_option("--out", replay_out, "override the recorded output path");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    Stopwatch watch;
    ManifestData manifest;
    manifest.subcommand = args.empty() ? "" : args.front();
    manifest.argv = args;

    auto record = [&](const char* key, const json& value) {
        manifest.params[key] = value;
    };

    int rc = kExitOk;
    std::string manifest_out;

    if (verify->parsed()) {
        manifest.inputs.push_back(verify_args.input);
        record("input", verify_args.input);  // positional: replay maps it back
        rc = run_verify(verify_args);
        manifest_out = verify_args.out;
    } else if (construct->parsed()) {
        record("kind", construct_args.kind);
        record("dim", construct_args.dim);
        record("m", construct_args.m);
        if (construct_args.simplex > 0) record("simplex", construct_args.simplex);
        if (!construct_args.acute_input.empty())
            record("acute-input", construct_args.acute_input);
        record("parts-size", construct_args.parts_size);
        if (construct_args.epsilon > 0.0) record("epsilon", construct_args.epsilon);
        record("rounds", construct_args.rounds);
        record("seed", construct_args.seed);
        record("out", construct_args.out);
        manifest.seed = construct_args.seed;
        rc = run_construct(construct_args, manifest);
        manifest_out = construct_args.out;
    } else if (bounds->parsed()) {
        record("from", bounds_args.from);
        record("to", bounds_args.to);
        if (!bounds_args.evidence.empty()) record("evidence", bounds_args.evidence);
        if (!bounds_args.out.empty()) record("out", bounds_args.out);
        rc = run_bounds(bounds_args);
        manifest_out = bounds_args.out;
    } else if (density->parsed()) {
        record("dim", density_args.dim);
        record("n", density_args.n_list);
        record("samples", density_args.samples);
        record("seed", density_args.seed);
        if (!density_args.inputs.empty()) record("input", density_args.inputs);
        record("mode", density_args.mode);
        if (!density_args.out.empty()) record("out", density_args.out);
        manifest.seed = density_args.seed;
        rc = run_density(density_args, manifest);
        manifest_out = density_args.out;
    } else if (searchcmd->parsed()) {
        record("dim", search_args.config.dim);
        record("target", search_args.config.target_size);
        record("restarts", search_args.config.restarts);
        record("steps", search_args.config.steps_per_restart);
        record("temp", search_args.config.init_temperature);
        record("cooling", search_args.config.cooling);
        record("seed", search_args.config.seed);
        record("delta", search_args.config.delta);
        if (search_args.config.init_hypercube) record("init-hypercube", true);
        if (!search_args.results.empty()) record("results", search_args.results);
        if (!search_args.out.empty()) record("out", search_args.out);
        manifest.seed = search_args.config.seed;
        rc = run_search(search_args);
        manifest_out = search_args.out;
    } else if (probe->parsed()) {
        record("dim", probe_args.dim);
        record("delta", probe_args.delta);
        record("restarts", probe_args.budget.restarts);
        record("steps", probe_args.budget.steps_per_restart);
        record("seed", probe_args.budget.seed);
        if (!probe_args.out.empty()) record("out", probe_args.out);
        manifest.seed = probe_args.budget.seed;
        rc = run_probe(probe_args);
        manifest_out = probe_args.out;
    } else if (replay->parsed()) {
        return run_replay(replay_manifest, replay_out);
    }

    if (!manifest_out.empty()) write_manifest(manifest_out, manifest, watch.ms());
    return rc;
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        return dispatch(std::move(args));
    } catch (const VerificationFailure& e) {
        std::cerr << "verification failed: " << e.what() << "\n";
        return kExitPropertyFail;
    } catch (const FeasibilityFailure& e) {
        std::cerr << "infeasible (part " << e.part << ", step " << e.step
                  << "): " << e.what() << "\n";
        return kExitPropertyFail;
    } catch (const NotAcute& e) {
        std::cerr << "not acute: " << e.what() << "\n";
        return kExitPropertyFail;
    } catch (const NumericalFailure& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitPropertyFail;
    } catch (const IoError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const GeometryError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
