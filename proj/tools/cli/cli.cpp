#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iomanip>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>

#include "ostar/construction.hpp"
#include "ostar/density.hpp"
#include "ostar/error.hpp"
#include "ostar/graph_io.hpp"
#include "ostar/monte_carlo.hpp"
#include "ostar/opt.hpp"
#include "ostar/parallel.hpp"
#include "ostar/search.hpp"
#include "ostar/verifier.hpp"

namespace ostar::cli {

namespace {

using Json = nlohmann::ordered_json;

Json header(const RunConfig& c) {
    Json j;
    j["version"] = kVersion;
    j["command"] = c.subcommand;
    return j;
}

void put_rational(Json& j, const std::string& key, const Rational& q) {
    j[key] = to_decimal(q);
    j[key + "_fraction"] = to_fraction(q);
}

void put_optional(Json& j, const std::string& key, const std::optional<Rational>& q) {
    if (q) {
        put_rational(j, key, *q);
    } else {
        j[key] = nullptr;
        j[key + "_fraction"] = nullptr;
    }
}

Format format_or(const RunConfig& c, Format fallback) { return c.format.value_or(fallback); }

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

std::string csv_double(double x) {
    std::ostringstream s;
    s << std::setprecision(17) << x;
    return s.str();
}

int cmd_opt(const RunConfig& c, std::ostream& out) {
    const StarSpec spec(c.k, c.l);
    const OptResult r = solve_opt(spec, {c.tol, 1024, c.workers});
    if (format_or(c, Format::Json) == Format::Csv) {
        out << "k,l,m,alpha,d,opt,inducibility,conjectural\n";
        out << spec.out_leaves() << ',' << spec.in_leaves() << ',' << spec.m() << ',' << csv_double(r.alpha_star) << ','
            << (r.d_star ? csv_double(*r.d_star) : "") << ',' << csv_double(r.opt_value) << ','
            << csv_double(r.inducibility) << ',' << (r.conjectural ? "true" : "false") << '\n';
        return kExitOk;
    }
    Json j = header(c);
    j["k"] = spec.out_leaves();
    j["l"] = spec.in_leaves();
    j["alpha"] = r.alpha_star;
    j["d"] = r.d_star ? Json(*r.d_star) : Json(nullptr);
    j["opt"] = r.opt_value;
    j["inducibility"] = r.inducibility;
    j["conjectural"] = r.conjectural;
    j["tol"] = c.tol;
    j["achieved_tol"] = r.tol;
    emit(out, j);
    return kExitOk;
}

int cmd_approx(const RunConfig& c, std::ostream& out) {
    const StarSpec spec(c.k, c.l);
    const TaylorApprox t = taylor_approx(spec);
    const OptResult r = solve_opt(spec, {c.tol, 1024, c.workers});
    Json j = header(c);
    j["k"] = spec.out_leaves();
    j["l"] = spec.in_leaves();
    j["alpha_hat"] = t.alpha_hat;
    j["d_hat"] = t.d_hat;
    j["value_hat"] = t.value_hat;
    j["alpha_star"] = r.alpha_star;
    j["d_star"] = *r.d_star;
    j["opt"] = r.opt_value;
    j["delta_alpha"] = t.alpha_hat - r.alpha_star;
    j["delta_d"] = t.d_hat - *r.d_star;
    j["relative_value_error"] = (t.value_hat - r.opt_value) / r.opt_value;
    emit(out, j);
    return kExitOk;
}

int cmd_table(const RunConfig& c, std::ostream& out) {
    if (c.m_min < 2 || c.m_max < c.m_min) throw Error(ErrorKind::RangeError, "need 2 <= m-min <= m-max");
    struct Row {
        int k, l;
        OptResult r;
    };
    std::vector<Row> rows;
    for (int m = c.m_min; m <= c.m_max; ++m) {
        for (int l = 1; 2 * l <= m; ++l) {
            const int k = m - l;
            if (k == 1 && l == 1) continue;
            rows.push_back({k, l, solve_opt(StarSpec(k, l), {c.tol, 1024, c.workers})});
        }
    }
    if (format_or(c, Format::Csv) == Format::Csv) {
        out << "k,l,m,alpha,d,opt,inducibility,conjectural\n";
        for (const Row& row : rows) {
            out << row.k << ',' << row.l << ',' << row.k + row.l << ',' << csv_double(row.r.alpha_star) << ','
                << (row.r.d_star ? csv_double(*row.r.d_star) : "") << ',' << csv_double(row.r.opt_value) << ','
                << csv_double(row.r.inducibility) << ',' << (row.r.conjectural ? "true" : "false") << '\n';
        }
        return kExitOk;
    }
    Json j = header(c);
    Json list = Json::array();
    for (const Row& row : rows) {
        list.push_back({{"k", row.k},
                        {"l", row.l},
                        {"m", row.k + row.l},
                        {"alpha", row.r.alpha_star},
                        {"d", row.r.d_star ? Json(*row.r.d_star) : Json(nullptr)},
                        {"opt", row.r.opt_value},
                        {"inducibility", row.r.inducibility},
                        {"conjectural", row.r.conjectural}});
    }
    j["rows"] = list;
    emit(out, j);
    return kExitOk;
}

Json mc_json(const RunConfig& c, const OrientedGraph& g, const StarSpec& spec) {
    const McEstimate e = monte_carlo_s(g, spec, c.samples, c.seed, c.workers);
    Json j = header(c);
    j["method"] = "monte-carlo";
    j["n"] = g.order();
    j["k"] = spec.out_leaves();
    j["l"] = spec.in_leaves();
    j["estimate"] = e.estimate;
    j["std_error"] = e.std_error;
    j["hits"] = e.hits;
    j["samples"] = e.samples;
    j["seed"] = e.seed;
    return j;
}

int cmd_density(const RunConfig& c, std::ostream& out) {
    const StarSpec spec(c.k, c.l);
    const OrientedGraph g = read_graph_file(c.in_path);
    if (g.order() > c.exact_limit) {
        emit(out, mc_json(c, g, spec));
        return kExitOk;
    }
    const DensityReport r = density_report(g, spec, c.workers);
    Json j = header(c);
    j["method"] = "exact";
    j["n"] = r.n;
    j["k"] = spec.out_leaves();
    j["l"] = spec.in_leaves();
    j["count"] = r.count;
    put_rational(j, "i_density", r.i_density);
    put_rational(j, "s_density", r.s_density);
    emit(out, j);
    return kExitOk;
}

int cmd_mc(const RunConfig& c, std::ostream& out) {
    const StarSpec spec(c.k, c.l);
    emit(out, mc_json(c, read_graph_file(c.in_path), spec));
    return kExitOk;
}

int cmd_construct(const RunConfig& c, std::ostream& out) {
    const StarSpec spec(c.k, c.l);
    ConstructionParams p{spec, c.n, 0.0, 0.0, c.seed_given ? BuildMode::Random : BuildMode::Balanced, c.seed};
    if (c.alpha && (c.d || spec.symmetric())) {
        p.alpha = *c.alpha;
        p.d = c.d.value_or(0.0);
    } else {
        const OptResult r = solve_opt(spec, {c.tol, 1024, c.workers});
        p.alpha = c.alpha.value_or(r.alpha_star);
        p.d = c.d.value_or(r.d_star.value_or(0.0));
    }
    const OrientedGraph g = build_construction(p);
    if (c.out_path.empty()) {
        write_graph(out, g);
        return kExitOk;
    }
    write_graph_file(c.out_path, g);
    const ClassSizes sizes = class_sizes(p);
    Json j = header(c);
    j["k"] = spec.out_leaves();
    j["l"] = spec.in_leaves();
    j["n"] = c.n;
    j["alpha"] = p.alpha;
    j["d"] = spec.symmetric() ? Json(nullptr) : Json(p.d);
    j["mode"] = p.mode == BuildMode::Balanced ? "balanced" : "random";
    j["seed"] = c.seed;
    j["sizes"] = {{"X", sizes.x}, {"Y1", sizes.y1}, {"Y2", sizes.y2}};
    j["arcs"] = g.arc_count();
    j["predicted_s"] = predict_s(p);
    j["out"] = c.out_path;
    emit(out, j);
    return kExitOk;
}

int cmd_search(const RunConfig& c, std::ostream& out) {
    const StarSpec spec(c.k, c.l);
    SearchResult r;
    if (c.exhaustive) {
        r = exhaustive_max(c.n, spec, c.workers);
    } else {
        LocalSearchOptions opt;
        opt.seed = c.seed;
        opt.max_moves = c.moves;
        opt.restarts = c.restarts;
        opt.workers = c.workers;
        r = local_search(spec, c.n, opt);
    }
    Json j = header(c);
    j["method"] = r.method == SearchMethod::Exhaustive ? "exhaustive" : "local";
    j["k"] = spec.out_leaves();
    j["l"] = spec.in_leaves();
    j["n"] = c.n;
    j["best_count"] = r.best_count;
    put_rational(j, "best_i", r.best_i);
    j["explored"] = r.explored;
    if (!r.restarts.empty()) {
        j["seed"] = c.seed;
        Json list = Json::array();
        for (const auto& s : r.restarts) {
            list.push_back({{"seed", s.seed}, {"count", s.count}, {"i", to_decimal(s.i_density)}, {"moves", s.moves}});
        }
        j["restarts"] = list;
    }
    if (c.out_path.empty()) {
        j["witness"] = to_graph_text(r.witness);
    } else {
        write_graph_file(c.out_path, r.witness);
        j["witness_file"] = c.out_path;
    }
    emit(out, j);
    return kExitOk;
}

Json degree_bound_suite(const RunConfig& c, bool& failed) {
    std::vector<StarSpec> specs;
    for (int m = 6; m <= 9; ++m) {
        for (int l = 1; 2 * l <= m; ++l) specs.emplace_back(m - l, l);
    }
    auto rng = stream_generator(c.seed, 0);
    std::size_t violations = 0;
    std::size_t vertices = 0;
    for (std::size_t i = 0; i < c.graphs; ++i) {
        const std::size_t n = 8 + static_cast<std::size_t>(uniform_below(rng, 13));
        const double p = 0.1 + 0.9 * uniform_unit(rng);
        const OrientedGraph g = random_oriented_graph(n, c.seed + i, p);
        violations += check_degree_bound(g, specs[i % specs.size()], c.workers).size();
        vertices += n;
    }
    failed = failed || violations > 0;
    return {{"suite", "degree-bound"}, {"graphs", c.graphs}, {"vertices", vertices}, {"violations", violations},
            {"passed", violations == 0}};
}

Json lemma_json(const RunConfig& c, bool& failed) {
    LemmaOptions opt;
    opt.seed = c.seed;
    Json checks = Json::array();
    bool ok = true;
    for (const LemmaCheck& l : lemma_suite(opt)) {
        ok = ok && l.passed();
        checks.push_back({{"name", l.name}, {"trials", l.trials}, {"failures", l.failures}, {"worst", l.worst}});
    }
    failed = failed || !ok;
    return {{"suite", "lemmas"}, {"checks", checks}, {"passed", ok}};
}

Json sweep_json(bool& failed) {
    const SweepReport r = arithmetic_sweeps(kSweepMinM, kSweepMaxM);
    Json bad = Json::array();
    for (const SweepCheck& s : r.checks) {
        if (!s.passed) bad.push_back({{"name", s.name}, {"m", s.m}, {"value", s.value}, {"bound", s.bound}});
    }
    const double a8 = to_double(sweep_a8_expression(6));
    failed = failed || r.failures() > 0;
    return {{"suite", "arithmetic"}, {"m_lo", r.m_lo}, {"m_hi", r.m_hi}, {"checks", r.checks.size()},
            {"failures", bad}, {"a8_at_m6", a8}, {"passed", r.failures() == 0}};
}

int cmd_verify(const RunConfig& c, std::ostream& out) {
    bool failed = false;
    Json j = header(c);
    j["seed"] = c.seed;
    Json suites = Json::array();
    if (c.suite == "degree-bound" || c.suite == "all") suites.push_back(degree_bound_suite(c, failed));
    if (c.suite == "lemmas" || c.suite == "all") suites.push_back(lemma_json(c, failed));
    if (c.suite == "arithmetic" || c.suite == "all") suites.push_back(sweep_json(failed));
    j["suites"] = suites;
    j["passed"] = !failed;
    emit(out, j);
    return failed ? kExitVerification : kExitOk;
}

int cmd_stats(const RunConfig& c, std::ostream& out) {
    const StarSpec spec(c.k, c.l);
    PartitionOptions opt;
    opt.seed = c.seed;
    opt.workers = c.workers;
    const PartitionStats st = partition_stats(read_graph_file(c.in_path), spec, std::nullopt, opt);
    Json j = header(c);
    j["k"] = spec.out_leaves();
    j["l"] = spec.in_leaves();
    j["X_size"] = st.x_side.count();
    put_rational(j, "alpha", st.alpha);
    put_optional(j, "beta", st.beta);
    put_optional(j, "gamma", st.gamma);
    put_optional(j, "D", st.D);
    j["S"] = st.S;
    j["S_exact"] = st.S_exact ? Json(to_fraction(*st.S_exact)) : Json(nullptr);
    j["S_approximate"] = !st.S_exact.has_value();
    j["S_radius"] = st.S_radius;
    put_optional(j, "S1", st.S1);
    put_optional(j, "S2", st.S2);
    put_optional(j, "d", st.d);
    put_rational(j, "d0", st.d0);
    if (!st.S_exact) j["seed"] = c.seed;
    emit(out, j);
    return kExitOk;
}

int cmd_stability(const RunConfig& c, std::ostream& out) {
    const StarSpec spec(c.k, c.l);
    const StabilityReport r = stability_report(read_graph_file(c.in_path), spec, c.eps);
    Json j = header(c);
    j["k"] = spec.out_leaves();
    j["l"] = spec.in_leaves();
    j["epsilon"] = r.epsilon;
    j["alpha_star"] = r.alpha_star;
    j["d_star"] = r.d_star;
    j["sizes"] = {{"X", r.x.count()}, {"Y1", r.y1.count()}, {"Y2", r.y2.count()}};
    j["condition_deltas"] = r.condition_deltas;
    j["violating_counts"] = r.violating_counts;
    j["satisfied"] = r.satisfied;
    emit(out, j);
    return kExitOk;
}

void add_spec(CLI::App* sub, RunConfig& c) {
    sub->add_option("--k", c.k, "out-leaves of the star")->required();
    sub->add_option("--l", c.l, "in-leaves of the star")->required();
}

void add_format(CLI::App* sub, RunConfig& c) {
    static const std::map<std::string, Format> formats{{"json", Format::Json}, {"csv", Format::Csv}};
    sub->add_option("--format", c.format, "json or csv")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
}

struct Parser {
    std::unique_ptr<CLI::App> app;
    CLI::App* construct = nullptr;
};

// Binds every flag to `c`. The returned app must not outlive `c`.
Parser make_parser(RunConfig& c) {
    Parser p;
    p.app = std::make_unique<CLI::App>("Inducibility of oriented stars", "ostar");
    CLI::App& app = *p.app;
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);
    app.add_option("--workers", c.workers, "worker threads (default: OSTAR_WORKERS or hardware concurrency)")
        ->check(CLI::PositiveNumber);

    auto* opt = app.add_subcommand("opt", "maximize the objective and report the inducibility");
    add_spec(opt, c);
    opt->add_option("--tol", c.tol, "objective tolerance")->check(CLI::PositiveNumber);
    add_format(opt, c);

    auto* approx = app.add_subcommand("approx", "series approximation of the maximizer and maximum");
    add_spec(approx, c);

    auto* table = app.add_subcommand("inducibility-table", "solver output for every star with m in range");
    table->add_option("--m-min", c.m_min, "smallest m (default 6)");
    table->add_option("--m-max", c.m_max, "largest m")->required();
    add_format(table, c);

    auto* density = app.add_subcommand("density", "exact induced-star count and densities");
    add_spec(density, c);
    density->add_option("--in", c.in_path, "graph file")->required()->check(CLI::ExistingFile);
    density->add_option("--exact-limit", c.exact_limit, "largest n counted exactly; Monte-Carlo above");
    density->add_option("--samples", c.samples, "Monte-Carlo samples above the exact limit");
    density->add_option("--seed", c.seed, "Monte-Carlo seed");

    auto* mc = app.add_subcommand("mc", "Monte-Carlo estimate of s(G)");
    add_spec(mc, c);
    mc->add_option("--in", c.in_path, "graph file")->required()->check(CLI::ExistingFile);
    mc->add_option("--samples", c.samples, "number of samples")->check(CLI::PositiveNumber);
    mc->add_option("--seed", c.seed, "seed");

    auto* construct = app.add_subcommand("construct", "build the bipartite construction");
    add_spec(construct, c);
    construct->add_option("--n", c.n, "number of vertices")->required();
    construct->add_option("--alpha", c.alpha, "share of X (default: solver maximizer)");
    construct->add_option("--d", c.d, "out-share of X vertices (default: solver maximizer)");
    auto* balanced = construct->add_flag("--balanced", c.balanced, "deterministic circulant orientation (default)");
    construct->add_option("--seed", c.seed, "random orientation with this seed")->excludes(balanced);
    construct->add_option("--out", c.out_path, "output graph file (stdout if omitted)");

    auto* search = app.add_subcommand("search", "exhaustive or local search for many induced stars");
    add_spec(search, c);
    search->add_option("--n", c.n, "number of vertices")->required();
    auto* exhaustive = search->add_flag("--exhaustive", c.exhaustive, "enumerate all labelled graphs (n <= 6)");
    auto* local = search->add_flag("--local", c.local, "hill climbing")->excludes(exhaustive);
    search->add_option("--seed", c.seed, "first restart seed")->needs(local);
    search->add_option("--moves", c.moves, "move cap per restart")->needs(local);
    search->add_option("--restarts", c.restarts, "number of restarts")->needs(local)->check(CLI::PositiveNumber);
    search->add_option("--out", c.out_path, "witness graph file (embedded in the report if omitted)");

    auto* verify = app.add_subcommand("verify", "run verification suites");
    verify->add_option("--suite", c.suite, "degree-bound, lemmas, arithmetic or all")
        ->check(CLI::IsMember({"degree-bound", "lemmas", "arithmetic", "all"}));
    verify->add_option("--seed", c.seed, "seed for sampled checks");
    verify->add_option("--graphs", c.graphs, "random graphs for the degree-bound suite");

    auto* stats = app.add_subcommand("stats", "partition parameters of a graph");
    add_spec(stats, c);
    stats->add_option("--in", c.in_path, "graph file")->required()->check(CLI::ExistingFile);
    stats->add_option("--seed", c.seed, "seed for the Monte-Carlo fallback");

    auto* stability = app.add_subcommand("stability", "three-part structure diagnostic");
    add_spec(stability, c);
    stability->add_option("--in", c.in_path, "graph file")->required()->check(CLI::ExistingFile);
    stability->add_option("--eps", c.eps, "window width")->check(CLI::PositiveNumber);

    p.construct = construct;
    return p;
}

void finish(const Parser& p, RunConfig& c) {
    c.subcommand = p.app->get_subcommands().front()->get_name();
    if (c.subcommand == "search" && !c.exhaustive && !c.local) {
        throw CLI::ValidationError("search", "one of --exhaustive or --local is required");
    }
    c.seed_given = p.construct->count("--seed") > 0;
}

}  // namespace

RunConfig parse(int argc, const char* const* argv) {
    RunConfig c;
    c.workers = default_workers();
    const Parser p = make_parser(c);
    p.app->parse(argc, argv);
    finish(p, c);
    return c;
}


int run(const RunConfig& c, std::ostream& out) {
    if (c.subcommand == "opt") return cmd_opt(c, out);
    if (c.subcommand == "approx") return cmd_approx(c, out);
    if (c.subcommand == "inducibility-table") return cmd_table(c, out);
    if (c.subcommand == "density") return cmd_density(c, out);
    if (c.subcommand == "mc") return cmd_mc(c, out);
    if (c.subcommand == "construct") return cmd_construct(c, out);
    if (c.subcommand == "search") return cmd_search(c, out);
    if (c.subcommand == "verify") return cmd_verify(c, out);
    if (c.subcommand == "stats") return cmd_stats(c, out);
    if (c.subcommand == "stability") return cmd_stability(c, out);
    throw Error(ErrorKind::DomainError, "unknown subcommand " + c.subcommand);
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig config;
    config.workers = default_workers();
    const Parser p = make_parser(config);
    try {
        p.app->parse(argc, argv);
        finish(p, config);
    } catch (const CLI::ParseError& e) {
        const int code = p.app->exit(e, out, err);
        if (code == 0) return kExitOk;
        err << p.app->help();
        return kExitDomain;
    }
    try {
        return run(config, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitDomain;
    }
}

}  // namespace ostar::cli
