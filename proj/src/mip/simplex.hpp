#pragma once

#include <Eigen/Dense>
#include <vector>

#include "netmem/mip/solve.hpp"

namespace netmem::mip {

enum class LpOutcome { Optimal, Infeasible, Unbounded, Stalled };

// Bounded-variable revised primal/dual simplex with an explicit dense basis
// inverse.  Columns are stored sparse; logical (slack) columns are implicit
// unit vectors.  Sized for the dispatch subproblems in this repo (a few
// hundred rows, a few thousand columns).
class BoundedSimplex {
public:
    BoundedSimplex(const MipModel& model, const SolveOptions& opts);

    // Replace bounds of a structural variable (branch-and-bound fixing).
    void set_bounds(int var, double lb, double ub);
    void reset_bounds();

    // Cold start: all-logical basis, composite phase 1, then phase 2.
    LpOutcome solve_primal();

    // Re-solve after bound changes, starting from the current (dual feasible)
    // basis.  Falls back to Stalled if it cannot make progress; caller should
    // then solve_primal().
    LpOutcome solve_dual();

    double objective() const;
    void get_values(std::vector<double>& out) const;  // structural vars only
    long pivots() const { return pivots_; }

private:
    enum Status : signed char { kNonbasicLower, kNonbasicUpper, kNonbasicFree, kBasic };

    int m_ = 0;     // rows
    int n_ = 0;     // structural columns
    int ntot_ = 0;  // n_ + m_ (logicals appended)

    std::vector<std::vector<std::pair<int, double>>> cols_;  // structural only
    Eigen::VectorXd b_;
    std::vector<double> cost_;           // ntot_, logicals zero
    std::vector<double> lb_, ub_;        // ntot_, current bounds
    std::vector<double> lb0_, ub0_;      // original bounds
    std::vector<Status> status_;
    std::vector<int> basis_;             // row -> column index
    std::vector<int> in_basis_;          // column -> row or -1
    Eigen::MatrixXd binv_;
    Eigen::VectorXd xb_;

    double feas_tol_;
    double dual_tol_ = 1e-9;
    double pivot_tol_ = 1e-8;
    long pivots_ = 0;
    int pivots_since_refactor_ = 0;

    double value_of(int j) const;
    double col_dot(const Eigen::VectorXd& w, int j) const;  // w . A_j
    Eigen::VectorXd ftran(int j) const;                     // Binv * A_j
    void install_logical_basis();
    void refactor();
    void recompute_xb();
    void update_binv(const Eigen::VectorXd& alpha, int r);
    void pivot(int enter, int leave_row, Status leave_status, const Eigen::VectorXd& alpha);

    // One primal phase; phase1 drives out bound violations with composite
    // costs, phase2 minimizes the real objective.
    LpOutcome primal_loop(bool phase1);
    double infeasibility() const;
};

}  // namespace netmem::mip
