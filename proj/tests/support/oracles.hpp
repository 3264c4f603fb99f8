#pragma once

// Test-only oracles, independent of the simplex/branch-and-bound code paths
// they are used to check.

#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "netmem/mip/model.hpp"
#include "netmem/mip/solve.hpp"

namespace netmem::test {

// Deterministic PRNG (splitmix64) so expected values do not depend on the
// standard library's distribution implementations.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}
    uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    int uniform_int(int lo, int hi) {  // inclusive
        return lo + static_cast<int>(next() % static_cast<uint64_t>(hi - lo + 1));
    }
};

// Brute-force LP oracle: enumerates all vertices defined by activating n
// constraints among {rows as equalities, bounds}.  Exponential; use only for
// tiny models (n <= 5, rows <= 6).  All variables need finite bounds.
inline std::optional<double> enumerate_lp_min(const mip::MipModel& m) {
    const int n = static_cast<int>(m.vars.size());
    const int nr = static_cast<int>(m.rows.size());
    // Candidate hyperplanes: each row (as equality) and each bound.
    struct Plane {
        std::vector<double> a;
        double rhs;
    };
    std::vector<Plane> planes;
    for (const auto& r : m.rows) {
        Plane p{std::vector<double>(static_cast<size_t>(n), 0.0), r.rhs};
        for (auto [j, c] : r.coeffs) p.a[static_cast<size_t>(j)] += c;
        planes.push_back(std::move(p));
    }
    for (int j = 0; j < n; ++j) {
        Plane lo{std::vector<double>(static_cast<size_t>(n), 0.0), m.vars[static_cast<size_t>(j)].lb};
        lo.a[static_cast<size_t>(j)] = 1.0;
        planes.push_back(lo);
        Plane hi{std::vector<double>(static_cast<size_t>(n), 0.0), m.vars[static_cast<size_t>(j)].ub};
        hi.a[static_cast<size_t>(j)] = 1.0;
        planes.push_back(hi);
    }
    const int np = static_cast<int>(planes.size());

    const auto feasible = [&](const Eigen::VectorXd& x) {
        for (int j = 0; j < n; ++j) {
            if (x(j) < m.vars[static_cast<size_t>(j)].lb - 1e-7) return false;
            if (x(j) > m.vars[static_cast<size_t>(j)].ub + 1e-7) return false;
        }
        for (int i = 0; i < nr; ++i) {
            double lhs = 0.0;
            for (auto [j, c] : m.rows[static_cast<size_t>(i)].coeffs) lhs += c * x(j);
            switch (m.rows[static_cast<size_t>(i)].sense) {
                case mip::RowSense::LE: if (lhs > m.rows[static_cast<size_t>(i)].rhs + 1e-7) return false; break;
                case mip::RowSense::GE: if (lhs < m.rows[static_cast<size_t>(i)].rhs - 1e-7) return false; break;
                case mip::RowSense::EQ: if (std::abs(lhs - m.rows[static_cast<size_t>(i)].rhs) > 1e-7) return false; break;
            }
        }
        return true;
    };

    std::optional<double> best;
    std::vector<int> pick(static_cast<size_t>(n));
    const auto consider = [&](const std::vector<int>& sel) {
        Eigen::MatrixXd A(n, n);
        Eigen::VectorXd rhs(n);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) A(i, j) = planes[static_cast<size_t>(sel[static_cast<size_t>(i)])].a[static_cast<size_t>(j)];
            rhs(i) = planes[static_cast<size_t>(sel[static_cast<size_t>(i)])].rhs;
        }
        Eigen::FullPivLU<Eigen::MatrixXd> lu(A);
        if (!lu.isInvertible()) return;
        Eigen::VectorXd x = lu.solve(rhs);
        if (!feasible(x)) return;
        double obj = m.obj_offset;
        for (int j = 0; j < n; ++j) obj += m.obj[static_cast<size_t>(j)] * x(j);
        if (!best || obj < *best) best = obj;
    };
    // Enumerate n-subsets of planes.
    std::vector<int> idx;
    const std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == n) {
            consider(idx);
            return;
        }
        for (int i = start; i < np; ++i) {
            idx.push_back(i);
            rec(i + 1, depth + 1);
            idx.pop_back();
        }
    };
    rec(0, 0);
    return best;
}

// Exhaustive MILP oracle: enumerates every binary assignment, fixes the
// binaries through their bounds, and solves the residual LP.  Built before
// (and kept independent of) the branch-and-bound path it validates.
inline mip::SolveResult enumerate_milp(const mip::MipModel& model, const mip::SolveOptions& opts) {
    std::vector<int> binaries;
    for (size_t j = 0; j < model.vars.size(); ++j)
        if (model.vars[j].kind == mip::VarKind::Binary) binaries.push_back(static_cast<int>(j));
    const size_t nb = binaries.size();

    mip::SolveResult best;
    best.status = mip::SolveStatus::Infeasible;
    for (uint64_t mask = 0; mask < (1ULL << nb); ++mask) {
        mip::MipModel fixed = model;
        for (size_t b = 0; b < nb; ++b) {
            const double v = (mask >> b) & 1 ? 1.0 : 0.0;
            auto& var = fixed.vars[static_cast<size_t>(binaries[b])];
            var.lb = var.ub = v;
            var.kind = mip::VarKind::Continuous;
        }
        const mip::SolveResult r = mip::solve_lp(fixed, opts);
        if (r.status == mip::SolveStatus::Unbounded) return r;
        if (r.status != mip::SolveStatus::Optimal) continue;
        if (best.status != mip::SolveStatus::Optimal || r.objective < best.objective) best = r;
    }
    return best;
}

// Random MILP instances for the oracle-equivalence suites: <= 8 binaries,
// <= 10 continuous variables (finite bounds), <= 12 rows.
inline mip::MipModel random_milp(uint64_t seed) {
    Rng rng(seed);
    mip::MipModel m;
    const int nb = rng.uniform_int(1, 8);
    const int nc = rng.uniform_int(1, 10);
    for (int j = 0; j < nb; ++j)
        m.add_var("b" + std::to_string(j), 0.0, 1.0, mip::VarKind::Binary);
    for (int j = 0; j < nc; ++j) {
        const double lo = rng.uniform(-3.0, 0.0);
        const double hi = lo + rng.uniform(0.5, 4.0);
        m.add_var("x" + std::to_string(j), lo, hi);
    }
    const int n = nb + nc;
    for (int j = 0; j < n; ++j) m.add_obj(j, rng.uniform(-5.0, 5.0));
    const int nrows = rng.uniform_int(2, 12);
    for (int i = 0; i < nrows; ++i) {
        std::vector<std::pair<int, double>> coeffs;
        double mid = 0.0;
        const int nnz = rng.uniform_int(2, std::min(5, n));
        std::vector<int> used;
        for (int k = 0; k < nnz; ++k) {
            int j = rng.uniform_int(0, n - 1);
            bool dup = false;
            for (int u : used) dup |= (u == j);
            if (dup) continue;
            used.push_back(j);
            const double a = rng.uniform(-4.0, 4.0);
            coeffs.push_back({j, a});
            const auto& v = m.vars[static_cast<size_t>(j)];
            mid += a * 0.5 * (v.lb + v.ub);
        }
        if (coeffs.empty()) continue;
        const int sense_pick = rng.uniform_int(0, 2);
        const double slack = rng.uniform(-0.5, 2.5);
        using mip::RowSense;
        if (sense_pick == 0)
            m.add_row(std::move(coeffs), RowSense::LE, mid + slack);
        else if (sense_pick == 1)
            m.add_row(std::move(coeffs), RowSense::GE, mid - slack);
        else
            m.add_row(std::move(coeffs), RowSense::EQ, mid + rng.uniform(-0.3, 0.3));
    }
    return m;
}

}  // namespace netmem::test
