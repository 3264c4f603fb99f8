#pragma once

#include "netmem/mip/model.hpp"

namespace netmem::mip {

// Two equivalent encodings of the same piecewise-linear over-approximation
// (the chord interpolant of each quadratic through S+1 uniform breakpoints):
//
//   Epigraph: one epigraph variable per term, bounded below by the S secant
//             lines; adds S rows per term.
//   Delta:    incremental formulation with S bounded segment variables per
//             term and a single linking row; convexity orders the fills, so
//             no extra rows or binaries are needed.  Used on hot paths.
enum class PwlForm { Epigraph, Delta };

// Replaces every weight*(x-center)^2 term by its piecewise-linear
// over-approximation over [lb, ub] with `segments` uniform pieces.  The
// result has empty quad_terms.  Maximum over-approximation error per term is
// weight*h^2/4 with h = (ub-lb)/segments, attained mid-segment; the
// approximation is exact at the S+1 breakpoints.
// Throws UnboundedQuadVariable if a quad variable has an infinite bound.
MipModel expand_pwl(const MipModel& model, int segments, PwlForm form = PwlForm::Epigraph);

}  // namespace netmem::mip
