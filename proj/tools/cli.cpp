#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "flowfw/errors.hpp"
#include "flowfw/metrics.hpp"
#include "flowfw/oracle.hpp"
#include "flowfw/perturb.hpp"
#include "flowfw/synthetic.hpp"

namespace flowfw::cli {

namespace fs = std::filesystem;

std::string_view method_name(Method m) {
    switch (m) {
        case Method::LeastSquares: return "ls";
        case Method::LeastSquaresInteger: return "ls-int";
        case Method::Poisson: return "poisson";
    }
    return "?";
}

Method parse_method(std::string_view name) {
    if (name == "ls") return Method::LeastSquares;
    if (name == "ls-int") return Method::LeastSquaresInteger;
    if (name == "poisson") return Method::Poisson;
    throw ConfigError("unknown loss '" + std::string(name) + "' (expected ls, ls-int or poisson)");
}

InstanceRun run_instance(const io::GraphInstance& inst, Method method, const RunOptions& opts) {
    SolverConfig cfg;
    cfg.max_iterations = opts.max_iterations;
    cfg.gap_tolerance = opts.gap_tolerance;
    cfg.time_limit_seconds = opts.time_limit_seconds;
    cfg.loss_kind = method == Method::Poisson ? LossKind::Poisson : LossKind::LeastSquares;
    cfg.early_termination = method == Method::LeastSquaresInteger;
    cfg.poisson_scale_mode = opts.poisson_scale;

    SolveResult res = solve(inst.graph, inst.flow, cfg);
    InstanceRun run;
    if (res.report.termination == Termination::EarlyExactMatch) {
        run.decomposition = integral_decomposition(res.active_set, inst.flow);
    } else {
        run.decomposition = conic_decomposition(res.active_set, inst.flow, cfg.loss_kind);
    }
    run.final_value = res.report.primal_trace.back();
    run.report = std::move(res.report);
    run.active_set = std::move(res.active_set);
    return run;
}

void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn) {
    const auto workers = static_cast<std::size_t>(std::max(1, jobs));
    if (workers == 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < std::min(workers, count); ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

int default_jobs() {
    if (const char* env = std::getenv("FLOWFW_JOBS")) {
        int v = 0;
        auto [ptr, ec] = std::from_chars(env, env + std::char_traits<char>::length(env), v);
        if (ec == std::errc{} && v > 0) return v;
    }
    return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

bool id_less(const std::string& a, const std::string& b) {
    auto as_int = [](const std::string& s) -> std::optional<long long> {
        long long v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
        return v;
    };
    auto ia = as_int(a);
    auto ib = as_int(b);
    if (ia && ib) return *ia != *ib ? *ia < *ib : a < b;
    return a < b;
}

namespace {

// ---------------------------------------------------------------- report

struct ReportRow {
    std::string id;
    std::string method;
    std::optional<double> path_error;
    std::optional<double> flow_error;
    std::optional<double> rel_flow_error;
    double n_paths = 0;
    std::optional<double> wall_time;
};

std::string fmt(std::optional<double> v) {
    if (!v) return "NA";
    std::ostringstream os;
    os.precision(6);
    os << *v;
    return os.str();
}

std::string fmt_time(std::optional<double> v) {
    if (!v) return "NA";
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << *v;
    return os.str();
}

constexpr const char* kReportHeader = "id\tmethod\tpath_error\tflow_error\trel_flow_error\tn_paths\twall_time\n";

// Rows plus '#' footer lines: arithmetic mean, shifted geometric mean (shift
// 1) and, with several methods, how often each method was best per column.
std::string write_report(const std::vector<ReportRow>& rows, const std::vector<std::string>& methods) {
    std::ostringstream os;
    os << kReportHeader;
    for (const auto& r : rows) {
        os << r.id << '\t' << r.method << '\t' << fmt(r.path_error) << '\t' << fmt(r.flow_error) << '\t'
           << fmt(r.rel_flow_error) << '\t' << fmt(r.n_paths) << '\t' << fmt_time(r.wall_time) << '\n';
    }
    using Getter = std::optional<double> (*)(const ReportRow&);
    const std::vector<Getter> columns = {
        [](const ReportRow& r) { return r.path_error; },
        [](const ReportRow& r) { return r.flow_error; },
        [](const ReportRow& r) { return r.rel_flow_error; },
        [](const ReportRow& r) -> std::optional<double> { return r.n_paths; },
        [](const ReportRow& r) { return r.wall_time; },
    };
    for (const auto& m : methods) {
        std::ostringstream mean, sgm;
        mean << "# mean\t" << m;
        sgm << "# sgm\t" << m;
        for (std::size_t c = 0; c < columns.size(); ++c) {
            std::vector<double> vals;
            for (const auto& r : rows) {
                if (r.method != m) continue;
                if (auto v = columns[c](r)) vals.push_back(*v);
            }
            if (vals.empty()) {
                mean << "\tNA";
                sgm << "\tNA";
            } else if (c == 4) {
                mean << '\t' << fmt_time(arithmetic_mean(vals));
                sgm << '\t' << fmt_time(shifted_geomean(vals, 1.0));
            } else {
                mean << '\t' << fmt(arithmetic_mean(vals));
                sgm << '\t' << fmt(shifted_geomean(vals, 1.0));
            }
        }
        os << mean.str() << '\n' << sgm.str() << '\n';
    }
    if (methods.size() > 1) {
        std::map<std::string, std::vector<const ReportRow*>> by_id;
        for (const auto& r : rows) by_id[r.id].push_back(&r);
        std::map<std::string, std::vector<int>> best;
        for (const auto& m : methods) best[m].assign(columns.size(), 0);
        for (const auto& [id, group] : by_id) {
            for (std::size_t c = 0; c < columns.size(); ++c) {
                std::optional<double> lo;
                for (const auto* r : group) {
                    if (auto v = columns[c](*r)) lo = lo ? std::min(*lo, *v) : *v;
                }
                if (!lo) continue;
                for (const auto* r : group) {
                    auto v = columns[c](*r);
                    if (v && std::abs(*v - *lo) <= 1e-9 * std::max(1.0, std::abs(*lo))) ++best[r->method][c];
                }
            }
        }
        for (const auto& m : methods) {
            os << "# best\t" << m;
            for (int v : best[m]) os << '\t' << v;
            os << '\n';
        }
    }
    return os.str();
}

// ---------------------------------------------------------------- decompose

struct DecomposeArgs {
    std::string input;
    std::string output;
    std::string loss = "ls";
    std::string poisson_scale = "outflow";
    RunOptions opts;
    bool verify = false;
    int jobs = 1;
};

// Checks a finished run against the brute-force references; empty on success.
std::string verify_run(const io::GraphInstance& inst, Method method, const InstanceRun& run) {
    const auto& trace = run.report.primal_trace;
    for (std::size_t i = 1; i < trace.size(); ++i) {
        if (trace[i] > trace[i - 1] + 1e-12 * std::max(1.0, std::abs(trace[i - 1]))) {
            return "primal trace increased at step " + std::to_string(i);
        }
    }
    if (method == Method::Poisson) return {};
    if (run.report.termination == Termination::EarlyExactMatch) {
        return exact_match(run.decomposition, inst.flow) ? std::string{} : "early exit without an exact match";
    }
    if (run.report.termination != Termination::GapConverged) return {};
    const auto ref = oracle::reference_ls_solution(inst.graph, inst.flow, 2000);
    if (run.final_value > ref.value + 1e-9) {
        std::ostringstream os;
        os << "primal " << run.final_value << " exceeds reference optimum " << ref.value;
        return os.str();
    }
    return {};
}

int cmd_decompose(const DecomposeArgs& a, std::ostream& out, std::ostream& err) {
    const Method method = parse_method(a.loss);
    RunOptions opts = a.opts;
    opts.poisson_scale = a.poisson_scale == "maxedge" ? PoissonScaleMode::MaxEdgeFlow : PoissonScaleMode::SourceOutflow;

    const auto instances = io::parse_graph_file(io::read_file(a.input));
    std::vector<std::optional<InstanceRun>> runs(instances.size());
    std::vector<std::string> errors(instances.size());
    std::vector<std::string> notes(instances.size());
    parallel_for(instances.size(), a.jobs, [&](std::size_t i) {
        try {
            runs[i] = run_instance(instances[i], method, opts);
            if (a.verify) {
                try {
                    auto problem = verify_run(instances[i], method, *runs[i]);
                    if (!problem.empty()) errors[i] = "verification failed: " + problem;
                    else notes[i] = "verify ok";
                } catch (const PathExplosionError&) {
                    notes[i] = "verify skipped (too many paths)";
                }
            }
        } catch (const std::exception& e) {
            errors[i] = e.what();
        }
    });

    std::string text;
    int status = kExitOk;
    for (std::size_t i = 0; i < instances.size(); ++i) {
        const auto& id = instances[i].id;
        if (!notes[i].empty()) err << "graph " << id << ": " << notes[i] << '\n';
        if (!errors[i].empty()) {
            err << "graph " << id << ": " << errors[i] << '\n';
            status = kExitInstanceError;
        }
        if (!runs[i]) continue;
        const auto& run = *runs[i];
        std::map<std::string, std::string> ann{
            {"loss", std::string(method_name(method))},
            {"termination", std::string(to_string(run.report.termination))},
            {"iterations", std::to_string(run.report.iterations)},
            {"wall_time", io::format_number(run.report.wall_time_seconds)},
        };
        text += io::write_path_section(id, run.decomposition, ann);
        out << id << '\t' << method_name(method) << '\t' << to_string(run.report.termination) << '\t'
            << run.report.iterations << '\t' << run.decomposition.size() << '\t' << fmt(run.final_value) << '\t'
            << fmt_time(run.report.wall_time_seconds) << '\n';
    }
    io::write_file(a.output, text);
    return status;
}

// ---------------------------------------------------------------- perturb

int cmd_perturb(const std::string& input, const std::string& dist, std::uint64_t seed, const std::string& output) {
    auto instances = io::parse_graph_file(io::read_file(input));
    for (auto& inst : instances) {
        const std::uint64_t s = instance_seed(seed, inst.id);
        inst.flow = dist == "binomial" ? perturb_binomial(inst.flow, s) : perturb_poisson(inst.flow, s);
    }
    io::write_file(output, io::write_graph_file(instances));
    return kExitOk;
}

// ---------------------------------------------------------------- evaluate

std::optional<double> wall_time_of(const io::PathSection& s) {
    auto it = s.annotations.find("wall_time");
    if (it == s.annotations.end()) return std::nullopt;
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(it->second.data(), it->second.data() + it->second.size(), v);
    if (ec != std::errc{}) return std::nullopt;
    return v;
}

ReportRow score(const std::string& id, const std::string& method, const FlowGraph& g, const Decomposition& d,
                const GroundTruth* truth, PathErrorMode mode, std::optional<double> wall_time) {
    ReportRow row{id, method, {}, {}, {}, static_cast<double>(d.size()), wall_time};
    if (truth) {
        row.path_error = static_cast<double>(path_error(d, *truth, mode));
        row.flow_error = flow_error(d, *truth);
        row.rel_flow_error = relative_flow_error(d, *truth, g);
    }
    return row;
}

int cmd_evaluate(const std::vector<std::string>& solutions, const std::string& truth_path,
                 const std::string& graph_path, const std::string& mode_name, const std::string& report_path,
                 std::ostream& out, std::ostream& err) {
    const PathErrorMode mode = mode_name == "one-sided" ? PathErrorMode::OneSided : PathErrorMode::Symmetric;
    const auto graphs = io::parse_graph_file(io::read_file(graph_path));
    std::map<std::string, const io::GraphInstance*> graph_by_id;
    for (const auto& g : graphs) graph_by_id[g.id] = &g;
    const auto truths = io::parse_truth_file(io::read_file(truth_path));

    std::vector<std::string> methods;
    std::vector<std::map<std::string, io::PathSection>> solution_sections;
    for (const auto& path : solutions) {
        methods.push_back(fs::path(path).stem().string());
        std::map<std::string, io::PathSection> by_id;
        for (auto& s : io::parse_truth_file(io::read_file(path))) by_id[s.id] = std::move(s);
        solution_sections.push_back(std::move(by_id));
    }

    std::vector<const io::PathSection*> ordered;
    for (const auto& t : truths) ordered.push_back(&t);
    std::stable_sort(ordered.begin(), ordered.end(),
                     [](const auto* a, const auto* b) { return id_less(a->id, b->id); });

    int status = kExitOk;
    std::vector<ReportRow> rows;
    for (const auto* t : ordered) {
        auto git = graph_by_id.find(t->id);
        if (git == graph_by_id.end()) {
            err << "graph " << t->id << ": no graph section for this truth section\n";
            status = kExitInstanceError;
            continue;
        }
        const FlowGraph& g = git->second->graph;
        try {
            const GroundTruth truth = io::to_ground_truth(g, *t);
            for (std::size_t k = 0; k < solutions.size(); ++k) {
                auto sit = solution_sections[k].find(t->id);
                if (sit == solution_sections[k].end()) {
                    err << "graph " << t->id << ": missing from solution " << solutions[k] << '\n';
                    status = kExitInstanceError;
                    continue;
                }
                const Decomposition d = io::to_decomposition(g, sit->second);
                rows.push_back(score(t->id, methods[k], g, d, &truth, mode, wall_time_of(sit->second)));
            }
        } catch (const FlowError& e) {
            err << "graph " << t->id << ": " << e.what() << '\n';
            status = kExitInstanceError;
        }
    }
    const std::string report = write_report(rows, methods);
    if (report_path.empty()) out << report;
    else io::write_file(report_path, report);
    return status;
}

// ---------------------------------------------------------------- bench

int cmd_bench(const std::string& dir, const std::string& losses, const RunOptions& opts, int jobs,
              const std::string& mode_name, const std::string& report_path, std::ostream& out, std::ostream& err) {
    std::vector<Method> methods;
    std::vector<std::string> method_names;
    std::stringstream ss(losses);
    for (std::string tok; std::getline(ss, tok, ',');) {
        if (tok.empty()) continue;
        methods.push_back(parse_method(tok));
        method_names.emplace_back(tok);
    }
    if (methods.empty()) throw ConfigError("--losses is empty");
    const PathErrorMode mode = mode_name == "one-sided" ? PathErrorMode::OneSided : PathErrorMode::Symmetric;

    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".graph") files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());

    struct Loaded {
        std::string stem;
        io::GraphInstance inst;
        std::optional<GroundTruth> truth;
    };
    std::vector<Loaded> loaded;
    int status = kExitOk;
    for (const auto& f : files) {
        std::map<std::string, io::PathSection> truths;
        fs::path truth_file = f;
        truth_file.replace_extension(".truth");
        if (fs::exists(truth_file)) {
            for (auto& s : io::parse_truth_file(io::read_file(truth_file.string()))) truths[s.id] = std::move(s);
        }
        for (auto& inst : io::parse_graph_file(io::read_file(f.string()))) {
            Loaded l{f.stem().string(), std::move(inst), std::nullopt};
            if (auto it = truths.find(l.inst.id); it != truths.end()) {
                try {
                    l.truth = io::to_ground_truth(l.inst.graph, it->second);
                } catch (const FlowError& e) {
                    err << "graph " << l.stem << '/' << l.inst.id << ": " << e.what() << '\n';
                    status = kExitInstanceError;
                }
            }
            loaded.push_back(std::move(l));
        }
    }
    std::stable_sort(loaded.begin(), loaded.end(), [](const Loaded& a, const Loaded& b) {
        if (a.stem != b.stem) return a.stem < b.stem;
        return id_less(a.inst.id, b.inst.id);
    });

    const std::size_t total = loaded.size() * methods.size();
    std::vector<std::optional<ReportRow>> rows(total);
    std::vector<std::string> errors(total);
    parallel_for(total, jobs, [&](std::size_t job) {
        const auto& l = loaded[job / methods.size()];
        const std::size_t k = job % methods.size();
        const std::string id = l.stem + "/" + l.inst.id;
        try {
            auto run = run_instance(l.inst, methods[k], opts);
            rows[job] = score(id, method_names[k], l.inst.graph, run.decomposition,
                              l.truth ? &*l.truth : nullptr, mode, run.report.wall_time_seconds);
        } catch (const std::exception& e) {
            errors[job] = "graph " + id + " (" + method_names[k] + "): " + e.what();
        }
    });
    std::vector<ReportRow> done;
    for (std::size_t j = 0; j < total; ++j) {
        if (!errors[j].empty()) {
            err << errors[j] << '\n';
            status = kExitInstanceError;
        }
        if (rows[j]) done.push_back(std::move(*rows[j]));
    }
    const std::string report = write_report(done, method_names);
    if (report_path.empty()) out << report;
    else io::write_file(report_path, report);
    return status;
}

// ---------------------------------------------------------------- generate

struct GenerateArgs {
    int count = 100;
    std::uint64_t seed = 1;
    int min_nodes = 6, max_nodes = 20;
    int min_extra = 2, max_extra = 30;
    int min_paths = 1, max_paths = 6;
    int max_weight = 50;
    std::string graph_out;
    std::string truth_out;
};

int cmd_generate(const GenerateArgs& a) {
    synthetic::InstanceSpec lo{a.min_nodes, a.min_extra, a.min_paths, 1};
    synthetic::InstanceSpec hi{a.max_nodes, a.max_extra, a.max_paths, a.max_weight};
    lo.max_weight = a.max_weight;
    const auto suite = synthetic::random_suite(a.count, lo, hi, a.seed);
    std::string graphs;
    std::string truths;
    for (const auto& inst : suite) {
        graphs += io::write_graph_section(inst.id, inst.graph, inst.truth.true_flow);
        truths += io::write_path_section(inst.id, inst.truth.as_decomposition());
    }
    io::write_file(a.graph_out, graphs);
    io::write_file(a.truth_out, truths);
    return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Sparse flow decomposition on DAGs with blended pairwise conditional gradients", "flowfw"};
    app.require_subcommand(1);

    auto add_solver_opts = [](CLI::App* sub, RunOptions& o) {
        sub->add_option("--gap-tol", o.gap_tolerance, "Frank-Wolfe gap tolerance")->check(CLI::NonNegativeNumber);
        sub->add_option("--max-iters", o.max_iterations, "Iteration limit")->check(CLI::PositiveNumber);
        sub->add_option("--time-limit", o.time_limit_seconds, "Per-instance time limit in seconds")
            ->check(CLI::PositiveNumber);
    };
    const int jobs_default = default_jobs();

    DecomposeArgs dec;
    dec.jobs = jobs_default;
    auto* decompose = app.add_subcommand("decompose", "Decompose every graph section into weighted paths");
    decompose->add_option("--input", dec.input, "Input .graph file")->required()->check(CLI::ExistingFile);
    decompose->add_option("--output", dec.output, "Output .paths file")->required();
    decompose->add_option("--loss", dec.loss, "ls, ls-int (integral early termination) or poisson")
        ->check(CLI::IsMember({"ls", "ls-int", "poisson"}));
    decompose->add_option("--poisson-scale", dec.poisson_scale, "Scale of the Poisson feasible set")
        ->check(CLI::IsMember({"outflow", "maxedge"}));
    decompose->add_flag("--verify", dec.verify, "Check results against brute-force references (small graphs)");
    decompose->add_option("--jobs", dec.jobs, "Worker threads")->check(CLI::PositiveNumber);
    add_solver_opts(decompose, dec.opts);

    std::string p_input, p_output, p_dist = "poisson";
    std::uint64_t p_seed = 0;
    auto* perturb = app.add_subcommand("perturb", "Replace edge flows with seeded noisy observations");
    perturb->add_option("--input", p_input, "Input .graph file")->required()->check(CLI::ExistingFile);
    perturb->add_option("--output", p_output, "Output .graph file")->required();
    perturb->add_option("--dist", p_dist, "poisson or binomial")->check(CLI::IsMember({"poisson", "binomial"}));
    perturb->add_option("--seed", p_seed, "Random seed")->required();

    std::vector<std::string> e_solutions;
    std::string e_truth, e_graph, e_report, e_mode = "symmetric";
    auto* evaluate = app.add_subcommand("evaluate", "Score solution files against ground truth");
    evaluate->add_option("--solution", e_solutions, "Solution .paths file(s); method name = file stem")
        ->required()->check(CLI::ExistingFile);
    evaluate->add_option("--truth", e_truth, "Ground-truth .truth file")->required()->check(CLI::ExistingFile);
    evaluate->add_option("--graph", e_graph, "Graph .graph file")->required()->check(CLI::ExistingFile);
    evaluate->add_option("--path-error", e_mode, "symmetric or one-sided")
        ->check(CLI::IsMember({"symmetric", "one-sided"}));
    evaluate->add_option("--report", e_report, "Output TSV (standard output if omitted)");

    std::string b_dir, b_losses = "ls,ls-int,poisson", b_report, b_mode = "symmetric";
    RunOptions b_opts;
    int b_jobs = jobs_default;
    auto* bench = app.add_subcommand("bench", "Run several losses over a directory of .graph/.truth files");
    bench->add_option("--input", b_dir, "Directory of .graph files")->required()->check(CLI::ExistingDirectory);
    bench->add_option("--losses", b_losses, "Comma-separated list of ls, ls-int, poisson");
    bench->add_option("--report", b_report, "Output TSV (standard output if omitted)");
    bench->add_option("--path-error", b_mode, "symmetric or one-sided")
        ->check(CLI::IsMember({"symmetric", "one-sided"}));
    bench->add_option("--jobs", b_jobs, "Worker threads")->check(CLI::PositiveNumber);
    add_solver_opts(bench, b_opts);

    GenerateArgs gen;
    auto* generate = app.add_subcommand("generate", "Write a seeded synthetic suite with ground truth");
    generate->add_option("--count", gen.count, "Number of instances")->check(CLI::PositiveNumber);
    generate->add_option("--seed", gen.seed, "Random seed");
    generate->add_option("--min-nodes", gen.min_nodes)->check(CLI::Range(3, 100000));
    generate->add_option("--max-nodes", gen.max_nodes)->check(CLI::Range(3, 100000));
    generate->add_option("--min-extra-edges", gen.min_extra)->check(CLI::NonNegativeNumber);
    generate->add_option("--max-extra-edges", gen.max_extra)->check(CLI::NonNegativeNumber);
    generate->add_option("--min-paths", gen.min_paths)->check(CLI::PositiveNumber);
    generate->add_option("--max-paths", gen.max_paths)->check(CLI::PositiveNumber);
    generate->add_option("--max-weight", gen.max_weight)->check(CLI::PositiveNumber);
    generate->add_option("--output-graph", gen.graph_out)->required();
    generate->add_option("--output-truth", gen.truth_out)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*decompose) return cmd_decompose(dec, out, err);
        if (*perturb) return cmd_perturb(p_input, p_dist, p_seed, p_output);
        if (*evaluate) return cmd_evaluate(e_solutions, e_truth, e_graph, e_mode, e_report, out, err);
        if (*bench) return cmd_bench(b_dir, b_losses, b_opts, b_jobs, b_mode, b_report, out, err);
        if (*generate) {
            if (gen.min_nodes > gen.max_nodes || gen.min_extra > gen.max_extra || gen.min_paths > gen.max_paths) {
                err << "generate: minimum exceeds maximum\n";
                return kExitUsage;
            }
            return cmd_generate(gen);
        }
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitInstanceError;
    }
    return kExitUsage;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv;
    argv.push_back("flowfw");
    for (const auto& a : args) argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace flowfw::cli
