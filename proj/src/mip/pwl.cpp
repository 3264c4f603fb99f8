#include "netmem/mip/pwl.hpp"

#include <cmath>
#include <string>

namespace netmem::mip {

MipModel expand_pwl(const MipModel& model, int segments, PwlForm form) {
    if (segments < 1) throw ModelError("expand_pwl requires segments >= 1");
    MipModel out = model;
    out.quad_terms.clear();

    int term_idx = 0;
    for (const QuadTerm& q : model.quad_terms) {
        const Variable& v = model.vars[static_cast<size_t>(q.var)];
        if (!std::isfinite(v.lb) || !std::isfinite(v.ub))
            throw UnboundedQuadVariable("quad variable '" + v.name + "' needs finite bounds");
        const std::string tag = "q" + std::to_string(term_idx++);
        if (q.weight == 0.0) continue;

        const double lo = v.lb, hi = v.ub;
        const double h = (hi - lo) / segments;
        const auto f = [&](double x) { return q.weight * (x - q.center) * (x - q.center); };
        if (h == 0.0) {  // fixed variable: the term is a constant
            out.obj_offset += f(lo);
            continue;
        }

        if (form == PwlForm::Epigraph) {
            const int z = out.add_var(tag + "_z", 0.0, kInf);
            out.add_obj(z, 1.0);
            for (int i = 0; i < segments; ++i) {
                const double x0 = lo + i * h;
                const double x1 = (i + 1 == segments) ? hi : lo + (i + 1) * h;
                const double slope = (f(x1) - f(x0)) / (x1 - x0);
                // z >= f(x0) + slope*(x - x0)
                out.add_row({{z, 1.0}, {q.var, -slope}}, RowSense::GE, f(x0) - slope * x0);
            }
        } else {
            // x = lo + sum(delta_i), delta_i in [0,h]; increasing secant
            // slopes make the fills self-ordering under minimization.
            std::vector<std::pair<int, double>> link{{q.var, -1.0}};
            for (int i = 0; i < segments; ++i) {
                const double x0 = lo + i * h;
                const double x1 = (i + 1 == segments) ? hi : lo + (i + 1) * h;
                const double slope = (f(x1) - f(x0)) / (x1 - x0);
                const int d = out.add_var(tag + "_d" + std::to_string(i), 0.0, x1 - x0);
                out.add_obj(d, slope);
                link.push_back({d, 1.0});
            }
            out.obj_offset += f(lo);
            out.add_row(std::move(link), RowSense::EQ, -lo);
        }
    }
    return out;
}

}  // namespace netmem::mip
