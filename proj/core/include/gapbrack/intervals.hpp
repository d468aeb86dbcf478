#pragma once

#include <cstddef>
#include <vector>

namespace gapbrack {

struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    double width() const { return hi - lo; }
    bool is_point() const { return lo == hi; }
};

/// Canonical finite union of closed intervals inside [0, ambient_hi]:
/// sorted, pairwise disjoint, touching parts merged. Degenerate single-point
/// parts are kept (isolated eigenvalues are real data here). Complements use
/// closure semantics: the open gaps are reported as closed intervals.
class IntervalSet {
public:
    IntervalSet() = default;
    explicit IntervalSet(double ambient_hi) : ambient_hi_(ambient_hi) {}

    static IntervalSet from_intervals(std::vector<Interval> parts, double ambient_hi);

    const std::vector<Interval>& parts() const { return parts_; }
    double ambient_hi() const { return ambient_hi_; }
    bool empty() const { return parts_.empty(); }
    std::size_t size() const { return parts_.size(); }

    double measure() const;
    bool contains_point(double x, double tol = 0.0) const;

    /// True if other lies inside this set after widening this set's parts by tol.
    bool contains(const IntervalSet& other, double tol = 0.0) const;

    /// Parts of this set not covered by other (measure-wise).
    double measure_outside(const IntervalSet& other) const;

private:
    std::vector<Interval> parts_;
    double ambient_hi_ = 0.0;
};

IntervalSet interval_union(const IntervalSet& a, const IntervalSet& b);
IntervalSet interval_intersection(const IntervalSet& a, const IntervalSet& b);

/// Closure of [0, ambient_hi] minus a. Components narrower than min_width are
/// dropped (below that width a gap is not certifiable against solver error).
IntervalSet interval_complement(const IntervalSet& a, double ambient_hi,
                                double min_width = 0.0);

/// Image under the spectral reflection k(x) = 2 - x. Only meaningful when the
/// ambient interval is exactly [0, 2] (relative weight 1); errors otherwise.
IntervalSet kappa_reflect(const IntervalSet& s);

} // namespace gapbrack
