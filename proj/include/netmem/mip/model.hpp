#pragma once

#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "netmem/errors.hpp"

namespace netmem::mip {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

enum class VarKind { Continuous, Binary };
enum class RowSense { LE, EQ, GE };

struct Variable {
    std::string name;
    double lb = 0.0;
    double ub = kInf;
    VarKind kind = VarKind::Continuous;
};

struct Row {
    std::vector<std::pair<int, double>> coeffs;  // (variable index, coefficient)
    RowSense sense = RowSense::LE;
    double rhs = 0.0;
};

// Separable convex quadratic objective term: weight * (x - center)^2.
struct QuadTerm {
    int var = -1;
    double center = 0.0;
    double weight = 0.0;
};

// Sparse mixed-integer model, linear rows plus optional separable convex
// quadratic objective terms.  Minimization throughout.
struct MipModel {
    std::vector<Variable> vars;
    std::vector<Row> rows;
    std::vector<double> obj;  // dense, aligned with vars
    double obj_offset = 0.0;
    std::vector<QuadTerm> quad_terms;

    int add_var(std::string name, double lb, double ub, VarKind kind = VarKind::Continuous) {
        vars.push_back({std::move(name), lb, ub, kind});
        obj.push_back(0.0);
        return static_cast<int>(vars.size()) - 1;
    }

    void add_row(std::vector<std::pair<int, double>> coeffs, RowSense sense, double rhs) {
        rows.push_back({std::move(coeffs), sense, rhs});
    }

    void add_obj(int var, double coeff) { obj.at(static_cast<size_t>(var)) += coeff; }

    void add_quad(int var, double center, double weight) {
        quad_terms.push_back({var, center, weight});
    }

    int num_binaries() const {
        int n = 0;
        for (const auto& v : vars)
            if (v.kind == VarKind::Binary) ++n;
        return n;
    }

    // Throws ModelError on dangling references, inverted or non-[0,1] binary
    // bounds, negative quad weights, or non-finite data.
    void validate() const;

    // Human-readable LP-style listing for troubleshooting.
    std::string dump_lp() const;
};

}  // namespace netmem::mip
