#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "pclique/bundle.hpp"
#include "pclique/certificate.hpp"
#include "pclique/enumeration.hpp"
#include "pclique/errors.hpp"
#include "pclique/graph_io.hpp"
#include "pclique/hardness.hpp"
#include "pclique/oracle.hpp"
#include "pclique/randgen.hpp"
#include "pclique/recovery.hpp"
#include "pclique/serialize.hpp"
#include "pclique/theta.hpp"

using namespace pclique;
using io::Json;

namespace {

enum Exit : int {
    kOk = 0,
    kUsage = 2,
    kUnverified = 3,
    kAlgorithmError = 4,
    kNotConverged = 5,
};

struct Failure {
    int code;
    std::string message;
};

[[noreturn]] void fail(int code, const std::string& msg) { throw Failure{code, msg}; }

void emit(const Json& j, const std::string& out) {
    if (out.empty() || out == "-") {
        std::cout << j.dump(2) << '\n';
        return;
    }
    std::ofstream f(out);
    if (!f) fail(kUsage, "cannot write " + out);
    f << j.dump(2) << '\n';
}

std::size_t resolve_jobs(std::size_t flag) {
    if (const char* env = std::getenv("PLANTED_CLIQUE_THREADS")) {
        try {
            const long v = std::stol(env);
            if (v > 0) return static_cast<std::size_t>(v);
        } catch (const std::exception&) {
        }
    }
    return std::max<std::size_t>(1, flag);
}

// Small graphs addressable by name; anything else is read as a graph file.
Graph named_graph(const std::string& name) {
    auto sized = [&](const std::string& prefix) -> std::optional<std::size_t> {
        if (name.rfind(prefix, 0) != 0) return std::nullopt;
        return static_cast<std::size_t>(std::stoul(name.substr(prefix.size())));
    };
    if (name == "k4") return named::complete(4);
    if (name == "diamond") return named::diamond();
    if (name == "k33") {
        GraphBuilder b(6);
        for (Vertex u = 0; u < 3; ++u) {
            for (Vertex v = 3; v < 6; ++v) b.add_edge(u, v);
        }
        return std::move(b).build();
    }
    if (name == "prism") {
        GraphBuilder b(6);
        for (Vertex i = 0; i < 3; ++i) {
            b.add_edge(i, (i + 1) % 3);
            b.add_edge(3 + i, 3 + (i + 1) % 3);
            b.add_edge(i, 3 + i);
        }
        return std::move(b).build();
    }
    if (auto m = sized("edgeless")) return Graph(*m);
    if (auto m = sized("complete")) return named::complete(*m);
    if (auto m = sized("cycle")) return named::cycle(*m);
    if (auto m = sized("path")) return named::path(*m);
    return io::read_graph_file(name);
}

SolverConfig solver_flags(CLI::App* app, SolverConfig& cfg) {
    app->add_option("--eps", cfg.eps, "Target residual")->capture_default_str();
    app->add_option("--max-iters", cfg.max_iters, "Iteration cap")->capture_default_str();
    app->add_option("--relaxation", cfg.relaxation, "Mixing factor in [1, 1.9]")->capture_default_str();
    return cfg;
}

// ---------------------------------------------------------------- gen

struct GenArgs {
    std::size_t n = 0;
    double p = 0.5;
    std::size_t k = 0;
    std::string strategy = "random";
    std::size_t t_size = 0;
    std::uint64_t seed = 0;
    std::string out;
};

int run_gen(const GenArgs& a) {
    PlantedInstance inst;
    try {
        inst = generate(GenParams{a.n, a.p, a.k, a.seed}, strategy_from_string(a.strategy), a.t_size);
    } catch (const ParameterError& e) {
        fail(kUsage, e.what());
    } catch (const GenerationError& e) {
        fail(kUsage, e.what());
    }
    if (a.out.empty() || a.out == "-") {
        io::write_bundle(std::cout, inst);
    } else {
        std::ofstream f(a.out, std::ios::binary);
        if (!f) fail(kUsage, "cannot write " + a.out);
        io::write_bundle(f, inst);
    }
    return kOk;
}

// ---------------------------------------------------------------- recover

struct RecoverArgs {
    std::string algo = "theta";
    std::string in;
    std::size_t k = 0;
    std::string verify = "none";
    std::optional<std::size_t> s_guess;
    std::size_t depth_cap = 0;
    std::size_t budget = 0;
    bool first_success = false;
    double T = 3.0;
    std::size_t jobs = 1;
    std::string out;
    SolverConfig cfg;
};

int run_recover(const RecoverArgs& a) {
    io::LoadedInput input;
    try {
        input = io::load_input(a.in);
    } catch (const Error& e) {
        fail(kUsage, e.what());
    }
    // Independent-set instances are handed to the clique algorithms through
    // the complement.
    const bool complemented = input.instance && input.instance->independent();
    const Graph g = complemented ? complement(input.graph) : input.graph;
    const std::size_t k = a.k ? a.k : (input.instance ? input.instance->K.count() : 0);
    if (k == 0) fail(kUsage, "--k is required when the input has no ground truth");
    if (a.verify == "ground-truth" && !input.instance) fail(kUsage, "--verify ground-truth needs an instance bundle");

    RecoveryParams params;
    params.theta_cfg = a.cfg;
    params.s_guess = a.s_guess;
    params.branch_depth_cap = a.depth_cap;
    params.guess_candidate_budget = a.budget;
    params.guess_first_success = a.first_success;
    params.jobs = resolve_jobs(a.jobs);

    Json j;
    VertexSet clique;
    bool verified = false;
    try {
        if (a.algo == "theta") {
            const RecoveryReport rep = recover_theta(g, k, params);
            j = io::to_json(rep);
            clique = rep.clique;
            verified = rep.verified;
        } else if (a.algo == "guess") {
            const RecoveryReport rep = recover_guessing(g, k, params);
            j = io::to_json(rep);
            clique = rep.clique;
            verified = rep.verified;
        } else if (a.algo == "high-degree") {
            const RecoveryReport rep = recover_high_degree(g, k, params);
            j = io::to_json(rep);
            clique = rep.clique;
            verified = rep.verified;
        } else if (a.algo == "enumerate") {
            const SparseReport rep = recover_sparse(g, k, a.T);
            j = io::to_json(rep);
            clique = rep.listing.max_clique;
            verified = rep.verified;
        } else {
            fail(kUsage, "unknown --algo " + a.algo);
        }
    } catch (const ParameterError& e) {
        fail(kUsage, e.what());
    } catch (const Error& e) {
        Json err;
        err["schema"] = io::kRecoverySchema;
        err["algorithm"] = a.algo;
        err["k"] = k;
        err["verified"] = false;
        err["error"] = e.what();
        emit(err, a.out);
        return kAlgorithmError;
    }
    j["complemented"] = complemented;

    if (a.verify == "oracle") {
        try {
            const VertexSet best = max_clique_exact(g);
            j["oracle"] = {{"clique", io::to_json(best)}, {"clique_size", best.count()}};
            j["matches_oracle"] = best.count() == clique.count();
        } catch (const OracleUnavailable& e) {
            j["oracle"] = {{"unavailable", e.what()}};
        }
    } else if (a.verify == "ground-truth") {
        PlantedInstance inst = *input.instance;
        if (complemented) inst.planted = g;
        try {
            const GroundTruth gt = ground_truth_max_clique(inst);
            j["ground_truth"] = io::to_json(gt);
            j["matches_ground_truth"] = gt.clique.count() == clique.count();
            j["contains_K"] = inst.K.is_subset_of(clique);
        } catch (const OracleUnavailable& e) {
            j["ground_truth"] = {{"unavailable", e.what()}};
        }
    } else if (a.verify != "none") {
        fail(kUsage, "unknown --verify " + a.verify);
    }
    emit(j, a.out);
    return verified ? kOk : kUnverified;
}

// ---------------------------------------------------------------- theta

struct ThetaArgs {
    std::string in;
    bool complement = false;
    std::string contributions_out;
    std::string trace_out;
    std::string dump_b;
    std::string out;
    SolverConfig cfg;
};

int run_theta(ThetaArgs a) {
    Graph g;
    try {
        g = io::load_input(a.in).graph;
    } catch (const Error& e) {
        fail(kUsage, e.what());
    }
    if (a.complement) g = complement(g);
    std::ofstream trace;
    if (!a.trace_out.empty()) {
        trace.open(a.trace_out);
        if (!trace) fail(kUsage, "cannot write " + a.trace_out);
        a.cfg.trace_csv = &trace;
    }
    ThetaSolution sol;
    try {
        sol = theta(g, a.cfg);
    } catch (const ParameterError& e) {
        fail(kUsage, e.what());
    }
    Json j = io::to_json(sol);
    if (!a.contributions_out.empty()) {
        std::ofstream f(a.contributions_out);
        if (!f) fail(kUsage, "cannot write " + a.contributions_out);
        f << "vertex,contribution\n";
        for (std::size_t i = 0; i < sol.contributions.size(); ++i) f << i << ',' << sol.contributions[i] << '\n';
        j.erase("contributions");
        j["contributions_file"] = a.contributions_out;
    }
    if (!a.dump_b.empty()) {
        std::ofstream f(a.dump_b, std::ios::binary);
        if (!f) fail(kUsage, "cannot write " + a.dump_b);
        write_matrix_binary(f, sol.B);
    }
    emit(j, a.out);
    std::cerr << "theta = " << sol.value << " (" << to_string(sol.status) << ", " << sol.iterations
              << " iterations)\n";
    return sol.status == SolveStatus::Converged ? kOk : kNotConverged;
}

// ---------------------------------------------------------------- certify

struct CertifyArgs {
    std::string in;
    double lambda2_slack = 0.2;
    double varbound_slack = 0.25;
    std::string dump_m;
    std::string out;
};

int run_certify(const CertifyArgs& a) {
    io::LoadedInput input;
    try {
        input = io::load_input(a.in);
    } catch (const Error& e) {
        fail(kUsage, e.what());
    }
    if (!input.instance) fail(kUsage, "certify needs an instance bundle with ground truth");
    const PlantedInstance& inst = *input.instance;
    if (inst.independent()) fail(kUsage, "certify needs a planted clique, not an independent set");
    try {
        const VertexSet Q = extend_clique(inst);
        const Eigen::MatrixXd M = build_certificate(inst, Q);
        CertificateConfig cfg;
        cfg.lambda2_slack = a.lambda2_slack;
        const CertificateReport rep = verify_certificate(inst, Q, M, cfg);
        const VarBoundResult vb = empirical_varbound(inst, a.varbound_slack);
        if (!a.dump_m.empty()) {
            std::ofstream f(a.dump_m, std::ios::binary);
            if (!f) fail(kUsage, "cannot write " + a.dump_m);
            write_matrix_binary(f, M);
        }
        emit(io::to_json(rep, vb), a.out);
        return rep.valid ? kOk : kUnverified;
    } catch (const ParameterError& e) {
        fail(kUsage, e.what());
    } catch (const Error& e) {
        fail(kAlgorithmError, e.what());
    }
}

// ---------------------------------------------------------------- hardness

Json graph_edges(const Graph& g) {
    Json edges = Json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
    return edges;
}

Graph graph_from_json(const Json& j) {
    const std::size_t n = j.at("n").get<std::size_t>();
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<Vertex>(), e.at(1).get<Vertex>());
    return Graph::from_edges(n, edges);
}

struct HardnessArgs {
    std::string h = "diamond";
    std::size_t t = 1;
    std::size_t n = 16;
    double p = 0.5;
    std::size_t k = 0;
    std::size_t k_prime = 0;
    std::uint64_t seed = 0;
    double gamma = 1.0;
    std::string finder = "oracle";
    std::string in;
    std::string out;
    PlannerInput plan;
    std::optional<double> plan_alpha;
};

int run_reduce(const HardnessArgs& a) {
    try {
        const ReductionOutput r = reduce_3regular(named_graph(a.h), a.t);
        Json j = io::to_json(r);
        j["balanced"] = is_balanced(r.gadget);
        emit(j, a.out);
    } catch (const Error& e) {
        fail(kUsage, e.what());
    }
    return kOk;
}

int run_plant_h(const HardnessArgs& a) {
    try {
        const Graph h = named_graph(a.h);
        const PlantedHInstance inst = a.k ? plant_H_with_IS(a.n, a.p, h, a.k, a.k_prime, a.seed)
                                          : plant_H(a.n, a.p, h, a.seed);
        Json j = io::to_json(inst);
        j["h"] = {{"n", h.order()}, {"edges", graph_edges(h)}};
        j["graph"] = {{"n", inst.graph.order()}, {"edges", graph_edges(inst.graph)}};
        emit(j, a.out);
    } catch (const Error& e) {
        fail(kUsage, e.what());
    }
    return kOk;
}

int run_count_xh(const HardnessArgs& a) {
    Json in;
    {
        std::ifstream f(a.in);
        if (!f) fail(kUsage, "cannot read " + a.in);
        try {
            in = Json::parse(f);
        } catch (const std::exception& e) {
            fail(kUsage, std::string("malformed plant-h file: ") + e.what());
        }
    }
    try {
        const Graph g = graph_from_json(in.at("graph"));
        const Graph h = graph_from_json(in.at("h"));
        const double p = in.at("p").get<double>();
        const std::uint64_t count = count_XH(g, h, Partition{g.order(), h.order()});
        Json j;
        j["schema"] = "pclique.count-xh/1";
        j["count"] = count;
        j["expected"] = expected_XH(g.order(), p, h);
        j["likelihood_ratio"] = static_cast<double>(count) / expected_XH(g.order(), p, h);
        emit(j, a.out);
    } catch (const Error& e) {
        fail(kUsage, e.what());
    } catch (const nlohmann::json::exception& e) {
        fail(kUsage, std::string("malformed plant-h file: ") + e.what());
    }
    return kOk;
}

int run_algrand(const HardnessArgs& a) {
    try {
        const Graph h = named_graph(a.h);
        IndependentSetFinder finder;
        if (a.finder == "oracle") {
            finder = oracle_finder(a.seed);
        } else if (a.finder == "theta") {
            finder = [](const Graph& g, std::size_t k) -> std::optional<VertexSet> {
                try {
                    return recover_theta(complement(g), k).clique;
                } catch (const Error&) {
                    return std::nullopt;
                }
            };
        } else {
            fail(kUsage, "unknown --finder " + a.finder);
        }
        const AlgrandResult res = algrand(h, a.k_prime, a.n, a.p, a.k, a.gamma, finder, a.seed);
        emit(io::to_json(res), a.out);
        return kOk;
    } catch (const Error& e) {
        fail(kUsage, e.what());
    }
}

int run_plan(HardnessArgs a) {
    try {
        a.plan.alpha = a.plan_alpha;
        const PlannerOutput out = plan_hardness(a.plan);
        emit(io::to_json(out), a.out);
        std::cerr << out.verdict << '\n';
    } catch (const Error& e) {
        fail(kUsage, e.what());
    }
    return kOk;
}

// ---------------------------------------------------------------- bench

struct BenchArgs {
    std::vector<std::size_t> n{400};
    std::vector<double> p{0.5};
    std::vector<std::size_t> k{200};
    std::vector<std::string> strategy{"random"};
    std::vector<std::string> algo{"theta"};
    std::size_t t_size = 5;
    double T = 3.0;
    std::size_t trials = 1;
    std::uint64_t master_seed = 1;
    std::size_t jobs = 1;
    std::string out;
    SolverConfig cfg;
};

struct BenchRow {
    std::size_t n;
    double p;
    std::size_t k;
    std::string strategy;
    std::string algo;
    std::size_t trial;
    std::uint64_t seed;
    bool success = false;
    std::size_t clique_size = 0;
    double theta_value = 0.0;
    double wall_ms = 0.0;
    std::string error;
};

void run_bench_row(BenchRow& row, const BenchArgs& a) {
    const auto t0 = std::chrono::steady_clock::now();
    try {
        const PlantedInstance inst =
            generate(GenParams{row.n, row.p, row.k, row.seed}, strategy_from_string(row.strategy), a.t_size);
        const Graph g = inst.independent() ? complement(inst.planted) : inst.planted;
        RecoveryParams params;
        params.theta_cfg = a.cfg;
        VertexSet clique;
        if (row.algo == "theta") {
            const RecoveryReport rep = recover_theta(g, row.k, params);
            clique = rep.clique;
            row.theta_value = rep.theta_value;
        } else if (row.algo == "guess") {
            const RecoveryReport rep = recover_guessing(g, row.k, params);
            clique = rep.clique;
            row.theta_value = rep.theta_value;
        } else if (row.algo == "high-degree") {
            clique = recover_high_degree(g, row.k, params).clique;
        } else if (row.algo == "enumerate") {
            clique = recover_sparse(g, row.k, a.T).listing.max_clique;
        } else {
            throw ParameterError("unknown algorithm " + row.algo);
        }
        row.clique_size = clique.count();
        row.success = is_clique(g, clique) && row.clique_size >= row.k;
    } catch (const std::exception& e) {
        row.error = e.what();
    }
    row.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

int run_bench(const BenchArgs& a) {
    std::vector<BenchRow> rows;
    std::size_t index = 0;
    for (std::size_t n : a.n) {
        for (double p : a.p) {
            for (std::size_t k : a.k) {
                for (const std::string& s : a.strategy) {
                    for (const std::string& algo : a.algo) {
                        for (std::size_t t = 0; t < a.trials; ++t) {
                            rows.push_back({n, p, k, s, algo, t, derive_seed(a.master_seed, index++)});
                        }
                    }
                }
            }
        }
    }
    const std::size_t jobs = resolve_jobs(a.jobs);
    std::mutex mu;
    std::size_t next = 0;
    auto worker = [&] {
        for (;;) {
            std::size_t i;
            {
                std::lock_guard lock(mu);
                if (next == rows.size()) return;
                i = next++;
            }
            run_bench_row(rows[i], a);
        }
    };
    std::vector<std::thread> pool;
    for (std::size_t j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    std::ofstream file;
    if (!a.out.empty() && a.out != "-") {
        file.open(a.out);
        if (!file) fail(kUsage, "cannot write " + a.out);
    }
    std::ostream& out = file.is_open() ? static_cast<std::ostream&>(file) : std::cout;
    out << "n,p,k,strategy,algo,trial,seed,success,clique_size,theta_value,wall_ms,error\n";
    for (const BenchRow& r : rows) {
        out << r.n << ',' << r.p << ',' << r.k << ',' << r.strategy << ',' << r.algo << ',' << r.trial << ','
            << r.seed << ',' << (r.success ? 1 : 0) << ',' << r.clique_size << ',' << r.theta_value << ','
            << r.wall_ms << ',' << csv_escape(r.error) << '\n';
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Planted clique generation, recovery and certification"};
    app.require_subcommand(1);

    GenArgs gen;
    auto* g = app.add_subcommand("gen", "Generate a planted instance bundle");
    g->add_option("--n", gen.n, "Vertices")->required();
    g->add_option("--p", gen.p, "Edge probability")->capture_default_str();
    g->add_option("--k", gen.k, "Planted size")->capture_default_str();
    g->add_option("--strategy", gen.strategy,
                  "random | common-neighborhood | low-degree | is-random | is-low-degree")
        ->capture_default_str();
    g->add_option("--t-size", gen.t_size, "Size of T for common-neighborhood")->capture_default_str();
    g->add_option("--seed", gen.seed, "Instance seed")->capture_default_str();
    g->add_option("--out", gen.out, "Output file (default stdout)");

    RecoverArgs rec;
    auto* r = app.add_subcommand("recover", "Run a recovery algorithm");
    r->add_option("--algo", rec.algo, "theta | guess | high-degree | enumerate")->capture_default_str();
    r->add_option("--in", rec.in, "Bundle, edge list or DIMACS file")->required();
    r->add_option("--k", rec.k, "Target size (default |K| of a bundle)");
    r->add_option("--verify", rec.verify, "oracle | ground-truth | none")->capture_default_str();
    r->add_option("--s-guess", rec.s_guess, "Guess size for --algo guess");
    r->add_option("--depth-cap", rec.depth_cap, "Vertex-cover cap (0: ceil(10 ln n) + 20)");
    r->add_option("--budget", rec.budget, "Candidate cap for --algo guess (0: none)");
    r->add_flag("--first-success", rec.first_success, "Stop guessing at the first verified candidate");
    r->add_option("--T", rec.T, "Clique-size constant for --algo enumerate")->capture_default_str();
    r->add_option("--jobs", rec.jobs, "Worker threads")->capture_default_str();
    r->add_option("--out", rec.out, "Report file (default stdout)");
    solver_flags(r, rec.cfg);

    ThetaArgs th;
    auto* t = app.add_subcommand("theta", "Compute the Lovasz theta function");
    t->add_option("--in", th.in, "Graph file or bundle")->required();
    t->add_flag("--complement", th.complement, "Use the complement graph");
    t->add_option("--contributions", th.contributions_out, "Write contributions as CSV");
    t->add_option("--trace", th.trace_out, "Write the solver trace as CSV");
    t->add_option("--dump-b", th.dump_b, "Write B as row-major little-endian float64");
    t->add_option("--out", th.out, "Report file (default stdout)");
    solver_flags(t, th.cfg);

    CertifyArgs cert;
    auto* c = app.add_subcommand("certify", "Build and check the spectral certificate");
    c->add_option("--in", cert.in, "Instance bundle")->required();
    c->add_option("--lambda2-slack", cert.lambda2_slack, "Slack in the lambda2 reference bound")
        ->capture_default_str();
    c->add_option("--varbound-slack", cert.varbound_slack, "Slack in the variance bound")->capture_default_str();
    c->add_option("--dump-m", cert.dump_m, "Write M as row-major little-endian float64");
    c->add_option("--out", cert.out, "Report file (default stdout)");

    HardnessArgs hard;
    auto* h = app.add_subcommand("hardness", "Reduction gadgets and planted-copy experiments");
    h->require_subcommand(1);
    auto* h_reduce = h->add_subcommand("reduce", "Subdivide every edge of a 3-regular graph");
    auto* h_plant = h->add_subcommand("plant-h", "Plant a partition-obeying copy of h");
    auto* h_count = h->add_subcommand("count-xh", "Count partition-obeying copies in a plant-h output");
    h_count->add_option("--in", hard.in, "plant-h output")->required();
    auto* h_algrand = h->add_subcommand("algrand", "Run the repetition loop with an independent-set finder");
    auto* h_plan = h->add_subcommand("plan", "Admissible parameters and desk-scale feasibility");
    // --h names the gadget graph, so help is --help only.
    for (auto* sub : {h_reduce, h_plant, h_algrand}) sub->set_help_flag("--help", "Print this help message and exit");
    for (auto* sub : {h_plant, h_algrand}) {
        sub->add_option("--h", hard.h, "diamond | k4 | edgelessM | cycleM | pathM | graph file")
            ->capture_default_str();
        sub->add_option("--n", hard.n, "Vertices")->capture_default_str();
        sub->add_option("--p", hard.p, "Edge probability")->capture_default_str();
        sub->add_option("--k", hard.k, "Independent set size")->capture_default_str();
        sub->add_option("--k-prime", hard.k_prime, "Vertices of the set inside the copy")->capture_default_str();
        sub->add_option("--seed", hard.seed, "Seed")->capture_default_str();
    }
    h_reduce->add_option("--h", hard.h, "k4 | k33 | prism | graph file")->capture_default_str();
    h_reduce->add_option("--t", hard.t, "Subdivision parameter")->capture_default_str();
    h_algrand->add_option("--gamma", hard.gamma, "Success probability of the finder")->capture_default_str();
    h_algrand->add_option("--finder", hard.finder, "oracle | theta")->capture_default_str();
    h_plan->add_option("--delta", hard.plan.delta, "p = n^(delta - 1)")->capture_default_str();
    h_plan->add_option("--epsilon", hard.plan.epsilon, "Copy-count epsilon in (0, 1/7)")->capture_default_str();
    h_plan->add_option("--n", hard.plan.n, "Vertices")->capture_default_str();
    h_plan->add_option("--alpha", hard.plan_alpha, "Average degree (default: middle of the range)");
    h_plan->add_option("--rho-fraction", hard.plan.rho_fraction, "Fraction of the rho range")->capture_default_str();
    h_plan->add_option("--k-constant", hard.plan.k_constant, "c in c n^(1-delta) ln n <= k")->capture_default_str();
    for (auto* sub : {h_reduce, h_plant, h_count, h_algrand, h_plan}) {
        sub->add_option("--out", hard.out, "Output file (default stdout)");
    }

    BenchArgs bench;
    auto* b = app.add_subcommand("bench", "Sweep parameter grids and write one CSV row per trial");
    b->add_option("--n", bench.n, "Vertex counts")->delimiter(',');
    b->add_option("--p", bench.p, "Edge probabilities")->delimiter(',');
    b->add_option("--k", bench.k, "Planted sizes")->delimiter(',');
    b->add_option("--strategy", bench.strategy, "Planting strategies")->delimiter(',');
    b->add_option("--algo", bench.algo, "Algorithms")->delimiter(',');
    b->add_option("--t-size", bench.t_size, "Size of T for common-neighborhood")->capture_default_str();
    b->add_option("--T", bench.T, "Clique-size constant for enumerate")->capture_default_str();
    b->add_option("--trials", bench.trials, "Trials per grid point")->capture_default_str();
    b->add_option("--master-seed", bench.master_seed, "Seed fanned out to trials")->capture_default_str();
    b->add_option("--jobs", bench.jobs, "Worker threads")->capture_default_str();
    b->add_option("--out", bench.out, "CSV file (default stdout)");
    solver_flags(b, bench.cfg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kUsage;
    }

    try {
        if (g->parsed()) return run_gen(gen);
        if (r->parsed()) return run_recover(rec);
        if (t->parsed()) return run_theta(th);
        if (c->parsed()) return run_certify(cert);
        if (h_reduce->parsed()) return run_reduce(hard);
        if (h_plant->parsed()) return run_plant_h(hard);
        if (h_count->parsed()) return run_count_xh(hard);
        if (h_algrand->parsed()) return run_algrand(hard);
        if (h_plan->parsed()) return run_plan(hard);
        if (b->parsed()) return run_bench(bench);
    } catch (const Failure& f) {
        std::cerr << "error: " << f.message << '\n';
        return f.code;
    }
    return kUsage;
}
