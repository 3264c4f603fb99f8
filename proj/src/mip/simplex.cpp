#include "simplex.hpp"

#include <algorithm>
#include <cmath>

namespace netmem::mip {

namespace {
constexpr double kDegenEps = 1e-10;
}

BoundedSimplex::BoundedSimplex(const MipModel& model, const SolveOptions& opts)
    : feas_tol_(opts.feas_tol) {
    m_ = static_cast<int>(model.rows.size());
    n_ = static_cast<int>(model.vars.size());
    ntot_ = n_ + m_;

    cols_.assign(static_cast<size_t>(n_), {});
    for (int i = 0; i < m_; ++i)
        for (const auto& [j, a] : model.rows[static_cast<size_t>(i)].coeffs)
            if (a != 0.0) cols_[static_cast<size_t>(j)].push_back({i, a});

    b_.resize(m_);
    cost_.assign(static_cast<size_t>(ntot_), 0.0);
    lb_.resize(static_cast<size_t>(ntot_));
    ub_.resize(static_cast<size_t>(ntot_));
    for (int j = 0; j < n_; ++j) {
        cost_[static_cast<size_t>(j)] = model.obj[static_cast<size_t>(j)];
        lb_[static_cast<size_t>(j)] = model.vars[static_cast<size_t>(j)].lb;
        ub_[static_cast<size_t>(j)] = model.vars[static_cast<size_t>(j)].ub;
    }
    for (int i = 0; i < m_; ++i) {
        const Row& r = model.rows[static_cast<size_t>(i)];
        b_(i) = r.rhs;
        double slo = 0.0, shi = 0.0;
        switch (r.sense) {
            case RowSense::LE: slo = 0.0; shi = kInf; break;
            case RowSense::GE: slo = -kInf; shi = 0.0; break;
            case RowSense::EQ: slo = 0.0; shi = 0.0; break;
        }
        lb_[static_cast<size_t>(n_ + i)] = slo;
        ub_[static_cast<size_t>(n_ + i)] = shi;
    }
    lb0_ = lb_;
    ub0_ = ub_;
    status_.assign(static_cast<size_t>(ntot_), kNonbasicLower);
    basis_.assign(static_cast<size_t>(m_), -1);
    in_basis_.assign(static_cast<size_t>(ntot_), -1);
}

void BoundedSimplex::set_bounds(int var, double lb, double ub) {
    lb_[static_cast<size_t>(var)] = lb;
    ub_[static_cast<size_t>(var)] = ub;
    if (status_[static_cast<size_t>(var)] != kBasic) {
        if (std::isfinite(lb))
            status_[static_cast<size_t>(var)] = kNonbasicLower;
        else if (std::isfinite(ub))
            status_[static_cast<size_t>(var)] = kNonbasicUpper;
        else
            status_[static_cast<size_t>(var)] = kNonbasicFree;
    }
}

void BoundedSimplex::reset_bounds() {
    for (int j = 0; j < ntot_; ++j) {
        lb_[static_cast<size_t>(j)] = lb0_[static_cast<size_t>(j)];
        ub_[static_cast<size_t>(j)] = ub0_[static_cast<size_t>(j)];
    }
}

double BoundedSimplex::value_of(int j) const {
    switch (status_[static_cast<size_t>(j)]) {
        case kBasic: return xb_(in_basis_[static_cast<size_t>(j)]);
        case kNonbasicLower: return lb_[static_cast<size_t>(j)];
        case kNonbasicUpper: return ub_[static_cast<size_t>(j)];
        case kNonbasicFree: return 0.0;
    }
    return 0.0;
}

double BoundedSimplex::col_dot(const Eigen::VectorXd& w, int j) const {
    if (j >= n_) return w(j - n_);
    double s = 0.0;
    for (const auto& [r, a] : cols_[static_cast<size_t>(j)]) s += w(r) * a;
    return s;
}

Eigen::VectorXd BoundedSimplex::ftran(int j) const {
    if (j >= n_) return binv_.col(j - n_);
    Eigen::VectorXd alpha = Eigen::VectorXd::Zero(m_);
    for (const auto& [r, a] : cols_[static_cast<size_t>(j)]) alpha.noalias() += a * binv_.col(r);
    return alpha;
}

void BoundedSimplex::install_logical_basis() {
    std::fill(in_basis_.begin(), in_basis_.end(), -1);
    for (int j = 0; j < n_; ++j) {
        if (std::isfinite(lb_[static_cast<size_t>(j)]))
            status_[static_cast<size_t>(j)] = kNonbasicLower;
        else if (std::isfinite(ub_[static_cast<size_t>(j)]))
            status_[static_cast<size_t>(j)] = kNonbasicUpper;
        else
            status_[static_cast<size_t>(j)] = kNonbasicFree;
    }
    for (int i = 0; i < m_; ++i) {
        basis_[static_cast<size_t>(i)] = n_ + i;
        status_[static_cast<size_t>(n_ + i)] = kBasic;
        in_basis_[static_cast<size_t>(n_ + i)] = i;
    }
    binv_ = Eigen::MatrixXd::Identity(m_, m_);
    pivots_since_refactor_ = 0;
    recompute_xb();
}

void BoundedSimplex::refactor() {
    if (m_ == 0) return;
    Eigen::MatrixXd B = Eigen::MatrixXd::Zero(m_, m_);
    for (int i = 0; i < m_; ++i) {
        const int j = basis_[static_cast<size_t>(i)];
        if (j >= n_) {
            B(j - n_, i) = 1.0;
        } else {
            for (const auto& [r, a] : cols_[static_cast<size_t>(j)]) B(r, i) = a;
        }
    }
    binv_ = B.partialPivLu().solve(Eigen::MatrixXd::Identity(m_, m_));
    pivots_since_refactor_ = 0;
}

void BoundedSimplex::recompute_xb() {
    if (m_ == 0) return;
    Eigen::VectorXd rhs = b_;
    for (int j = 0; j < ntot_; ++j) {
        if (status_[static_cast<size_t>(j)] == kBasic) continue;
        const double v = value_of(j);
        if (v == 0.0) continue;
        if (j >= n_) {
            rhs(j - n_) -= v;
        } else {
            for (const auto& [r, a] : cols_[static_cast<size_t>(j)]) rhs(r) -= a * v;
        }
    }
    xb_.noalias() = binv_ * rhs;
}

void BoundedSimplex::update_binv(const Eigen::VectorXd& alpha, int r) {
    // Elementary transformation so that the entering column becomes e_r.
    const double piv = alpha(r);
    Eigen::VectorXd factor = alpha / piv;
    factor(r) = 1.0 - 1.0 / piv;  // so row r ends up divided by piv
    Eigen::RowVectorXd row_r = binv_.row(r);
    binv_.noalias() -= factor * row_r;
    ++pivots_since_refactor_;
}

void BoundedSimplex::pivot(int enter, int leave_row, Status leave_status,
                           const Eigen::VectorXd& alpha) {
    const int leave = basis_[static_cast<size_t>(leave_row)];
    update_binv(alpha, leave_row);
    basis_[static_cast<size_t>(leave_row)] = enter;
    in_basis_[static_cast<size_t>(enter)] = leave_row;
    in_basis_[static_cast<size_t>(leave)] = -1;
    status_[static_cast<size_t>(leave)] = leave_status;
    status_[static_cast<size_t>(enter)] = kBasic;
    ++pivots_;
    if (pivots_since_refactor_ >= 120) refactor();
    recompute_xb();
}

double BoundedSimplex::infeasibility() const {
    double s = 0.0;
    for (int i = 0; i < m_; ++i) {
        const int j = basis_[static_cast<size_t>(i)];
        const double v = xb_(i);
        if (v < lb_[static_cast<size_t>(j)] - feas_tol_) s += lb_[static_cast<size_t>(j)] - v;
        if (v > ub_[static_cast<size_t>(j)] + feas_tol_) s += v - ub_[static_cast<size_t>(j)];
    }
    return s;
}

LpOutcome BoundedSimplex::primal_loop(bool phase1) {
    const long max_iters = 20000 + 40L * (m_ + n_);
    long degen_run = 0;
    bool bland = false;

    for (long iter = 0; iter < max_iters; ++iter) {
        if (phase1 && infeasibility() <= feas_tol_ * (1.0 + m_)) return LpOutcome::Optimal;

        // Dual vector for the current (possibly composite) costs.
        Eigen::VectorXd cb = Eigen::VectorXd::Zero(m_);
        for (int i = 0; i < m_; ++i) {
            const int j = basis_[static_cast<size_t>(i)];
            if (phase1) {
                if (xb_(i) < lb_[static_cast<size_t>(j)] - feas_tol_)
                    cb(i) = -1.0;
                else if (xb_(i) > ub_[static_cast<size_t>(j)] + feas_tol_)
                    cb(i) = 1.0;
            } else {
                cb(i) = cost_[static_cast<size_t>(j)];
            }
        }
        Eigen::VectorXd y(m_);
        y.noalias() = binv_.transpose() * cb;

        // Pricing.
        int enter = -1;
        double best = 0.0;
        int dir = +1;
        for (int j = 0; j < ntot_; ++j) {
            const Status st = status_[static_cast<size_t>(j)];
            if (st == kBasic) continue;
            if (lb_[static_cast<size_t>(j)] == ub_[static_cast<size_t>(j)]) continue;  // fixed
            const double cj = phase1 ? 0.0 : cost_[static_cast<size_t>(j)];
            const double d = cj - col_dot(y, j);
            int t = 0;
            double score = 0.0;
            if (st == kNonbasicLower && d < -dual_tol_) { t = +1; score = -d; }
            else if (st == kNonbasicUpper && d > dual_tol_) { t = -1; score = d; }
            else if (st == kNonbasicFree && std::abs(d) > dual_tol_) { t = d < 0 ? +1 : -1; score = std::abs(d); }
            if (t == 0) continue;
            if (bland) { enter = j; dir = t; break; }
            if (score > best + kDegenEps) { best = score; enter = j; dir = t; }
        }
        if (enter < 0) {
            if (phase1) return infeasibility() <= feas_tol_ * (1.0 + m_) ? LpOutcome::Optimal
                                                                         : LpOutcome::Infeasible;
            return LpOutcome::Optimal;
        }

        Eigen::VectorXd alpha = ftran(enter);

        // Ratio test: first breakpoint among basic variables plus the
        // entering variable's own range.  Infeasible basics block at the
        // bound they are violating (phase 1 recovery).
        double theta = kInf;
        int leave_row = -1;
        Status leave_status = kNonbasicLower;
        const double range = ub_[static_cast<size_t>(enter)] - lb_[static_cast<size_t>(enter)];
        if (std::isfinite(range)) theta = range;

        double best_piv = 0.0;
        for (int i = 0; i < m_; ++i) {
            const double rate = -alpha(i) * dir;
            if (std::abs(rate) <= pivot_tol_) continue;
            const int j = basis_[static_cast<size_t>(i)];
            const double v = xb_(i);
            const double lo = lb_[static_cast<size_t>(j)];
            const double hi = ub_[static_cast<size_t>(j)];
            double target;
            Status st;
            if (rate > 0.0) {
                if (v < lo - feas_tol_) { target = lo; st = kNonbasicLower; }
                else if (v <= hi + feas_tol_ && std::isfinite(hi)) { target = hi; st = kNonbasicUpper; }
                else continue;
            } else {
                if (v > hi + feas_tol_) { target = hi; st = kNonbasicUpper; }
                else if (v >= lo - feas_tol_ && std::isfinite(lo)) { target = lo; st = kNonbasicLower; }
                else continue;
            }
            const double t_i = std::max(0.0, (target - v) / rate);
            const bool better =
                t_i < theta - kDegenEps ||
                (t_i < theta + kDegenEps && leave_row >= 0 &&
                 (std::abs(alpha(i)) > best_piv + kDegenEps ||
                  (std::abs(alpha(i)) > best_piv - kDegenEps &&
                   j < basis_[static_cast<size_t>(leave_row)])));
            if (leave_row < 0 && t_i <= theta + kDegenEps) {
                theta = std::min(theta, t_i);
                leave_row = i;
                leave_status = st;
                best_piv = std::abs(alpha(i));
            } else if (better) {
                theta = std::min(theta, t_i);
                leave_row = i;
                leave_status = st;
                best_piv = std::abs(alpha(i));
            }
        }

        if (leave_row < 0) {
            if (!std::isfinite(theta)) {
                if (phase1) return LpOutcome::Stalled;  // cannot happen with clean data
                return LpOutcome::Unbounded;
            }
            // Bound flip: entering moves across its whole range.
            status_[static_cast<size_t>(enter)] =
                status_[static_cast<size_t>(enter)] == kNonbasicLower ? kNonbasicUpper
                                                                      : kNonbasicLower;
            xb_.noalias() -= alpha * (dir * theta);
            ++pivots_;
            degen_run = 0;
            continue;
        }

        if (std::abs(alpha(leave_row)) < 1e-7 && pivots_since_refactor_ > 0) {
            refactor();
            recompute_xb();
            continue;  // retry with a fresh inverse
        }

        if (theta <= kDegenEps) {
            if (++degen_run > 2L * (m_ + 10) && !bland) bland = true;
        } else {
            degen_run = 0;
            if (bland) bland = false;
        }

        pivot(enter, leave_row, leave_status, alpha);
    }
    return LpOutcome::Stalled;
}

LpOutcome BoundedSimplex::solve_primal() {
    if (m_ == 0) {
        // No rows: every variable sits at its cost-preferred bound.
        for (int j = 0; j < n_; ++j) {
            const double c = cost_[static_cast<size_t>(j)];
            if (c > dual_tol_) {
                if (!std::isfinite(lb_[static_cast<size_t>(j)])) return LpOutcome::Unbounded;
                status_[static_cast<size_t>(j)] = kNonbasicLower;
            } else if (c < -dual_tol_) {
                if (!std::isfinite(ub_[static_cast<size_t>(j)])) return LpOutcome::Unbounded;
                status_[static_cast<size_t>(j)] = kNonbasicUpper;
            } else if (std::isfinite(lb_[static_cast<size_t>(j)])) {
                status_[static_cast<size_t>(j)] = kNonbasicLower;
            } else if (std::isfinite(ub_[static_cast<size_t>(j)])) {
                status_[static_cast<size_t>(j)] = kNonbasicUpper;
            } else {
                status_[static_cast<size_t>(j)] = kNonbasicFree;
            }
        }
        return LpOutcome::Optimal;
    }
    install_logical_basis();
    const LpOutcome p1 = primal_loop(true);
    if (p1 != LpOutcome::Optimal) return p1;
    return primal_loop(false);
}

LpOutcome BoundedSimplex::solve_dual() {
    if (m_ == 0) return solve_primal();
    recompute_xb();
    const long max_iters = 20000 + 40L * (m_ + n_);

    for (long iter = 0; iter < max_iters; ++iter) {
        // Most violated basic variable leaves.
        int leave_row = -1;
        double worst = feas_tol_;
        for (int i = 0; i < m_; ++i) {
            const int j = basis_[static_cast<size_t>(i)];
            const double v = xb_(i);
            const double viol_lo = lb_[static_cast<size_t>(j)] - v;
            const double viol_hi = v - ub_[static_cast<size_t>(j)];
            const double viol = std::max(viol_lo, viol_hi);
            if (viol > worst + kDegenEps ||
                (viol > worst - kDegenEps && leave_row >= 0 &&
                 j < basis_[static_cast<size_t>(leave_row)])) {
                worst = viol;
                leave_row = i;
            }
        }
        if (leave_row < 0) {
            // Primal feasible again; finish with a (normally empty) phase 2.
            return primal_loop(false);
        }

        const int jl = basis_[static_cast<size_t>(leave_row)];
        const bool below = xb_(leave_row) < lb_[static_cast<size_t>(jl)];
        const int sigma = below ? +1 : -1;  // required direction of x_leave

        Eigen::VectorXd cb = Eigen::VectorXd::Zero(m_);
        for (int i = 0; i < m_; ++i) cb(i) = cost_[static_cast<size_t>(basis_[static_cast<size_t>(i)])];
        Eigen::VectorXd y(m_);
        y.noalias() = binv_.transpose() * cb;
        Eigen::VectorXd er = binv_.row(leave_row).transpose();

        int enter = -1;
        double best_ratio = kInf;
        double best_piv = 0.0;
        for (int j = 0; j < ntot_; ++j) {
            const Status st = status_[static_cast<size_t>(j)];
            if (st == kBasic) continue;
            if (lb_[static_cast<size_t>(j)] == ub_[static_cast<size_t>(j)]) continue;
            const double arj = col_dot(er, j);
            if (std::abs(arj) <= pivot_tol_) continue;
            // x_leave rate per unit x_j move is -arj * (move sign).
            bool ok = false;
            if (st == kNonbasicLower || st == kNonbasicFree)
                ok = ok || (-arj * sigma > 0.0);  // x_j increases
            if (st == kNonbasicUpper || st == kNonbasicFree)
                ok = ok || (arj * sigma > 0.0);   // x_j decreases
            if (!ok) continue;
            const double d = cost_[static_cast<size_t>(j)] - col_dot(y, j);
            const double ratio = std::abs(d) / std::abs(arj);
            if (ratio < best_ratio - kDegenEps ||
                (ratio < best_ratio + kDegenEps &&
                 (std::abs(arj) > best_piv + kDegenEps ||
                  (std::abs(arj) > best_piv - kDegenEps && enter >= 0 && j < enter)))) {
                best_ratio = ratio;
                best_piv = std::abs(arj);
                enter = j;
            }
        }
        if (enter < 0) return LpOutcome::Infeasible;  // dual unbounded

        Eigen::VectorXd alpha = ftran(enter);
        if (std::abs(alpha(leave_row)) < 1e-7) {
            if (pivots_since_refactor_ > 0) {
                refactor();
                recompute_xb();
                continue;
            }
            return LpOutcome::Stalled;
        }
        pivot(enter, leave_row, below ? kNonbasicLower : kNonbasicUpper, alpha);
    }
    return LpOutcome::Stalled;
}

double BoundedSimplex::objective() const {
    double v = 0.0;
    for (int j = 0; j < n_; ++j) v += cost_[static_cast<size_t>(j)] * value_of(j);
    return v;
}

void BoundedSimplex::get_values(std::vector<double>& out) const {
    out.resize(static_cast<size_t>(n_));
    for (int j = 0; j < n_; ++j) out[static_cast<size_t>(j)] = value_of(j);
}

}  // namespace netmem::mip
