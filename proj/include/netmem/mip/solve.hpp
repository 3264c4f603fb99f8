#pragma once

#include <vector>

#include "netmem/mip/model.hpp"

namespace netmem::mip {

struct SolveOptions {
    double feas_tol = 1e-7;
    double int_tol = 1e-6;
    double gap_tol = 1e-6;       // relative branch-and-bound gap
    long node_limit = 50000;
    int pwl_segments = 32;       // consumers expanding quad terms read this
};

enum class SolveStatus { Optimal, Infeasible, Unbounded, NodeLimitReached };

struct SolveResult {
    SolveStatus status = SolveStatus::Infeasible;
    double objective = 0.0;
    std::vector<double> values;  // aligned with model.vars; empty unless a point exists
    double bb_gap = 0.0;         // relative bound gap at termination
    long nodes = 0;              // LP relaxations solved
    long iterations = 0;         // total simplex pivots
};

// LP solve; all variables treated as continuous.  quad_terms must be empty.
SolveResult solve_lp(const MipModel& model, const SolveOptions& opts = {});

// Best-first branch and bound over the binary variables.  quad_terms must be
// empty (expand first, see pwl.hpp).  Deterministic: fixed node-selection and
// branching tie-breaks.
SolveResult solve_milp(const MipModel& model, const SolveOptions& opts = {});

const char* to_string(SolveStatus s);

}  // namespace netmem::mip
