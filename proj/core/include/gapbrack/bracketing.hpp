#pragma once

#include <set>
#include <vector>

#include "gapbrack/dml.hpp"
#include "gapbrack/intervals.hpp"

namespace gapbrack {

/// S_lower is spectrally smaller than S_upper: dim(lower) >= dim(upper) and
/// lambda_k(lower) <= lambda_k(upper) + tol for k up to dim(upper).
bool spectrally_smaller(const Spectrum& lower, const Spectrum& upper, double tol);

/// Two-sided eigenvalue bracket for every potential supported in E0.
/// lower comes from virtualising the edges E0 (spectrally smaller), upper
/// from virtualising a vertex set V0 touching every edge of E0 (spectrally
/// larger, padded with 2 rho_inf up to full dimension). The interval union
/// is independent of the potential.
struct BracketingReport {
    Spectrum lower;                    // n- values, edge-virtualised graph
    Spectrum upper;                    // n+ values, compressed operator
    std::vector<double> padded_upper;  // n- values, padded with 2 rho_inf
    std::vector<Interval> intervals;   // J_k = [lower_k, padded_upper_k]
    IntervalSet localising_set;        // union of J_k, widened by tol/2 per side
    IntervalSet complement_gaps;       // certified gaps in [0, 2 rho_inf]
    double trace_bound = 0.0;          // upper bound on measure(localising_set)
    double rho_infinity = 0.0;
    double tol = 0.0;
};

BracketingReport bracketing_report(const WeightedGraph& w, const std::set<EdgeId>& e0,
                                   const std::set<VertexId>& v0, double tol = 1e-10);

/// Tr(S+) - Tr(S-) + 2 rho_inf (n- - n+), computed from exact matrix traces.
double trace_gap_bound(const BracketingReport& report);

/// With n- - n+ = 1 and Tr(S+) < Tr(S-) the localising set cannot cover
/// [0, 2 rho_inf]; equivalently the bound leaves positive gap measure.
bool certifies_gap(const BracketingReport& report);

} // namespace gapbrack
