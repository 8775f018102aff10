#pragma once

#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "flowfw/bpcg.hpp"
#include "flowfw/decompose.hpp"
#include "flowfw/io.hpp"

namespace flowfw::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInstanceError = 1;
inline constexpr int kExitUsage = 2;

// Subcommands: decompose, perturb, evaluate, bench, generate.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

enum class Method { LeastSquares, LeastSquaresInteger, Poisson };

std::string_view method_name(Method m);
Method parse_method(std::string_view name);

struct RunOptions {
    int max_iterations = 5000;
    double gap_tolerance = 1e-10;
    double time_limit_seconds = 1800.0;
    PoissonScaleMode poisson_scale = PoissonScaleMode::SourceOutflow;
};

struct InstanceRun {
    Decomposition decomposition;
    SolverReport report;
    double final_value = 0.0;
    ActiveSet active_set;
};

// Solves one instance with the given method and assembles its decomposition.
// ls-int returns the integral decomposition on an exact match and the conic
// least-squares decomposition otherwise.
InstanceRun run_instance(const io::GraphInstance& inst, Method method, const RunOptions& opts);

// Runs fn(0..count-1) on `jobs` worker threads.
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn);

// FLOWFW_JOBS, else hardware concurrency.
int default_jobs();

// Orders ids numerically when both parse as integers, lexicographically otherwise.
bool id_less(const std::string& a, const std::string& b);

}  // namespace flowfw::cli
