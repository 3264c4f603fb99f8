#include "netmem/mip/model.hpp"

#include <cmath>
#include <sstream>

namespace netmem::mip {

void MipModel::validate() const {
    const int n = static_cast<int>(vars.size());
    for (int j = 0; j < n; ++j) {
        const Variable& v = vars[j];
        if (std::isnan(v.lb) || std::isnan(v.ub))
            throw ModelError("variable '" + v.name + "' has NaN bound");
        if (v.lb > v.ub)
            throw ModelError("variable '" + v.name + "' has lb > ub");
        if (v.kind == VarKind::Binary && (v.lb < 0.0 || v.ub > 1.0))
            throw ModelError("binary variable '" + v.name + "' has bounds outside [0,1]");
        if (!std::isfinite(obj[static_cast<size_t>(j)]))
            throw ModelError("non-finite objective coefficient on '" + v.name + "'");
    }
    for (size_t i = 0; i < rows.size(); ++i) {
        const Row& r = rows[i];
        if (!std::isfinite(r.rhs))
            throw ModelError("row " + std::to_string(i) + " has non-finite rhs");
        for (const auto& [j, a] : r.coeffs) {
            if (j < 0 || j >= n)
                throw ModelError("row " + std::to_string(i) + " references unknown variable " +
                                 std::to_string(j));
            if (!std::isfinite(a))
                throw ModelError("row " + std::to_string(i) + " has non-finite coefficient");
        }
    }
    for (const QuadTerm& q : quad_terms) {
        if (q.var < 0 || q.var >= n)
            throw ModelError("quad term references unknown variable " + std::to_string(q.var));
        if (!(q.weight >= 0.0))
            throw ModelError("quad term on '" + vars[static_cast<size_t>(q.var)].name +
                             "' has negative weight");
        if (!std::isfinite(q.center))
            throw ModelError("quad term on '" + vars[static_cast<size_t>(q.var)].name +
                             "' has non-finite center");
    }
}

std::string MipModel::dump_lp() const {
    std::ostringstream os;
    os.precision(12);
    os << "minimize\n ";
    bool first = true;
    for (size_t j = 0; j < vars.size(); ++j) {
        if (obj[j] == 0.0) continue;
        os << (first ? " " : " + ") << obj[j] << " " << vars[j].name;
        first = false;
    }
    if (obj_offset != 0.0) os << " + " << obj_offset;
    for (const QuadTerm& q : quad_terms)
        os << " + " << q.weight << "*(" << vars[static_cast<size_t>(q.var)].name << " - "
           << q.center << ")^2";
    os << "\nsubject to\n";
    for (size_t i = 0; i < rows.size(); ++i) {
        os << " r" << i << ":";
        for (const auto& [j, a] : rows[i].coeffs)
            os << " " << (a >= 0 ? "+" : "") << a << " " << vars[static_cast<size_t>(j)].name;
        switch (rows[i].sense) {
            case RowSense::LE: os << " <= "; break;
            case RowSense::EQ: os << " = "; break;
            case RowSense::GE: os << " >= "; break;
        }
        os << rows[i].rhs << "\n";
    }
    os << "bounds\n";
    for (const auto& v : vars)
        os << " " << v.lb << " <= " << v.name << " <= " << v.ub << "\n";
    os << "binaries\n";
    for (const auto& v : vars)
        if (v.kind == VarKind::Binary) os << " " << v.name;
    os << "\nend\n";
    return os.str();
}

}  // namespace netmem::mip
