#include <algorithm>
#include <cmath>
#include <memory>
#include <queue>

#include "netmem/mip/solve.hpp"
#include "simplex.hpp"

namespace netmem::mip {

const char* to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::Optimal: return "optimal";
        case SolveStatus::Infeasible: return "infeasible";
        case SolveStatus::Unbounded: return "unbounded";
        case SolveStatus::NodeLimitReached: return "node_limit";
    }
    return "?";
}

namespace {

LpOutcome run_primal(BoundedSimplex& s) {
    LpOutcome out = s.solve_primal();
    if (out == LpOutcome::Stalled) out = s.solve_primal();  // one fresh retry
    if (out == LpOutcome::Stalled) throw ModelError("simplex failed to converge");
    return out;
}

struct BoundDelta {
    int var;
    double lb, ub;
    std::shared_ptr<BoundDelta> parent;
};

struct Node {
    double bound;
    long seq;
    std::shared_ptr<BoundDelta> delta;
};

struct NodeOrder {
    bool operator()(const Node& a, const Node& b) const {
        if (a.bound != b.bound) return a.bound > b.bound;
        return a.seq > b.seq;
    }
};

void apply_node(BoundedSimplex& s, const BoundDelta* d) {
    s.reset_bounds();
    for (; d != nullptr; d = d->parent.get()) s.set_bounds(d->var, d->lb, d->ub);
}

}  // namespace

SolveResult solve_lp(const MipModel& model, const SolveOptions& opts) {
    model.validate();
    if (!model.quad_terms.empty())
        throw ModelError("solve_lp requires quad_terms to be expanded first");

    BoundedSimplex s(model, opts);
    const LpOutcome out = run_primal(s);

    SolveResult res;
    res.nodes = 1;
    res.iterations = s.pivots();
    switch (out) {
        case LpOutcome::Optimal:
            res.status = SolveStatus::Optimal;
            res.objective = s.objective() + model.obj_offset;
            s.get_values(res.values);
            break;
        case LpOutcome::Infeasible: res.status = SolveStatus::Infeasible; break;
        case LpOutcome::Unbounded: res.status = SolveStatus::Unbounded; break;
        case LpOutcome::Stalled: throw ModelError("simplex failed to converge");
    }
    return res;
}

SolveResult solve_milp(const MipModel& model, const SolveOptions& opts) {
    model.validate();
    if (!model.quad_terms.empty())
        throw ModelError("solve_milp requires quad_terms to be expanded first");

    std::vector<int> binaries;
    for (size_t j = 0; j < model.vars.size(); ++j)
        if (model.vars[j].kind == VarKind::Binary) binaries.push_back(static_cast<int>(j));

    BoundedSimplex s(model, opts);
    SolveResult res;

    const LpOutcome root = run_primal(s);
    res.nodes = 1;
    if (root == LpOutcome::Infeasible) {
        res.status = SolveStatus::Infeasible;
        res.iterations = s.pivots();
        return res;
    }
    if (root == LpOutcome::Unbounded) {
        res.status = SolveStatus::Unbounded;
        res.iterations = s.pivots();
        return res;
    }

    // Most-fractional binary, ties broken by lowest index; -1 if integral.
    const auto fractional = [&](const std::vector<double>& x) {
        int best = -1;
        double best_dist = opts.int_tol;
        for (int j : binaries) {
            const double v = x[static_cast<size_t>(j)];
            const double dist = std::abs(v - std::floor(v + 0.5));
            if (dist > best_dist + 1e-12) {
                best_dist = dist;
                best = j;
            }
        }
        return best;
    };

    double inc_obj = kInf;
    std::vector<double> inc_values;
    bool have_inc = false;

    std::priority_queue<Node, std::vector<Node>, NodeOrder> open;
    long seq = 0;

    {
        std::vector<double> x;
        s.get_values(x);
        const double obj = s.objective() + model.obj_offset;
        const int frac = fractional(x);
        if (frac < 0) {
            res.status = SolveStatus::Optimal;
            res.objective = obj;
            res.values = std::move(x);
            res.bb_gap = 0.0;
            res.iterations = s.pivots();
            return res;
        }
        auto d0 = std::make_shared<BoundDelta>(BoundDelta{frac, 0.0, 0.0, nullptr});
        auto d1 = std::make_shared<BoundDelta>(BoundDelta{frac, 1.0, 1.0, nullptr});
        open.push({obj, seq++, d0});
        open.push({obj, seq++, d1});
    }

    const double big = 1e100;
    double last_bound = -big;
    bool node_limit_hit = false;

    while (!open.empty()) {
        const Node node = open.top();
        last_bound = node.bound;
        if (have_inc && inc_obj - node.bound <= opts.gap_tol * std::max(1.0, std::abs(inc_obj)))
            break;  // best-first: bound gap closed
        if (res.nodes >= opts.node_limit) {
            node_limit_hit = true;
            break;
        }
        open.pop();

        apply_node(s, node.delta.get());
        LpOutcome out = s.solve_dual();
        if (out == LpOutcome::Stalled) out = run_primal(s);
        ++res.nodes;
        if (out == LpOutcome::Infeasible) continue;
        if (out == LpOutcome::Unbounded)
            throw ModelError("unbounded node relaxation under a bounded root");

        const double obj = s.objective() + model.obj_offset;
        if (have_inc && inc_obj - obj <= opts.gap_tol * std::max(1.0, std::abs(inc_obj)))
            continue;

        std::vector<double> x;
        s.get_values(x);
        const int frac = fractional(x);
        if (frac < 0) {
            if (!have_inc || obj < inc_obj) {
                inc_obj = obj;
                inc_values = std::move(x);
                have_inc = true;
            }
            continue;
        }
        auto d0 = std::make_shared<BoundDelta>(BoundDelta{frac, 0.0, 0.0, node.delta});
        auto d1 = std::make_shared<BoundDelta>(BoundDelta{frac, 1.0, 1.0, node.delta});
        open.push({obj, seq++, d0});
        open.push({obj, seq++, d1});
    }

    res.iterations = s.pivots();
    const double open_bound = open.empty() ? (have_inc ? inc_obj : last_bound) : open.top().bound;
    if (node_limit_hit) {
        res.status = SolveStatus::NodeLimitReached;
        if (have_inc) {
            res.objective = inc_obj;
            res.values = std::move(inc_values);
            res.bb_gap = (inc_obj - open_bound) / std::max(1.0, std::abs(inc_obj));
        } else {
            res.objective = open_bound;
            res.bb_gap = kInf;
        }
        return res;
    }
    if (!have_inc) {
        res.status = SolveStatus::Infeasible;
        return res;
    }
    res.status = SolveStatus::Optimal;
    res.objective = inc_obj;
    res.values = std::move(inc_values);
    res.bb_gap = std::max(0.0, (inc_obj - open_bound) / std::max(1.0, std::abs(inc_obj)));
    return res;
}

}  // namespace netmem::mip
