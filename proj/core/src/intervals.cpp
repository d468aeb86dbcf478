#include "gapbrack/intervals.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gapbrack/errors.hpp"

namespace gapbrack {

IntervalSet IntervalSet::from_intervals(std::vector<Interval> parts, double ambient_hi) {
    for (const Interval& p : parts)
        if (!(p.lo <= p.hi))
            throw validation_error("interval with lo > hi: [" + std::to_string(p.lo) + ", " +
                                   std::to_string(p.hi) + "]");
    std::sort(parts.begin(), parts.end(), [](const Interval& a, const Interval& b) {
        return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
    });
    IntervalSet out(ambient_hi);
    for (const Interval& p : parts) {
        if (!out.parts_.empty() && p.lo <= out.parts_.back().hi)
            out.parts_.back().hi = std::max(out.parts_.back().hi, p.hi);
        else
            out.parts_.push_back(p);
    }
    return out;
}

double IntervalSet::measure() const {
    double m = 0.0;
    for (const Interval& p : parts_) m += p.width();
    return m;
}

bool IntervalSet::contains_point(double x, double tol) const {
    for (const Interval& p : parts_)
        if (x >= p.lo - tol && x <= p.hi + tol) return true;
    return false;
}

bool IntervalSet::contains(const IntervalSet& other, double tol) const {
    for (const Interval& q : other.parts_) {
        bool covered = false;
        for (const Interval& p : parts_) {
            if (q.lo >= p.lo - tol && q.hi <= p.hi + tol) {
                covered = true;
                break;
            }
        }
        if (!covered) return false;
    }
    return true;
}

double IntervalSet::measure_outside(const IntervalSet& other) const {
    return measure() - interval_intersection(*this, other).measure();
}

IntervalSet interval_union(const IntervalSet& a, const IntervalSet& b) {
    std::vector<Interval> parts = a.parts();
    parts.insert(parts.end(), b.parts().begin(), b.parts().end());
    return IntervalSet::from_intervals(std::move(parts),
                                       std::max(a.ambient_hi(), b.ambient_hi()));
}

IntervalSet interval_intersection(const IntervalSet& a, const IntervalSet& b) {
    std::vector<Interval> parts;
    for (const Interval& p : a.parts()) {
        for (const Interval& q : b.parts()) {
            double lo = std::max(p.lo, q.lo);
            double hi = std::min(p.hi, q.hi);
            if (lo <= hi) parts.push_back({lo, hi});
        }
    }
    return IntervalSet::from_intervals(std::move(parts),
                                       std::max(a.ambient_hi(), b.ambient_hi()));
}

IntervalSet interval_complement(const IntervalSet& a, double ambient_hi, double min_width) {
    std::vector<Interval> gaps;
    double cursor = 0.0;
    for (const Interval& p : a.parts()) {
        double lo = std::max(0.0, std::min(p.lo, ambient_hi));
        double hi = std::max(0.0, std::min(p.hi, ambient_hi));
        if (lo > cursor) gaps.push_back({cursor, lo});
        cursor = std::max(cursor, hi);
    }
    if (cursor < ambient_hi) gaps.push_back({cursor, ambient_hi});
    std::erase_if(gaps, [min_width](const Interval& g) { return g.width() < min_width; });
    return IntervalSet::from_intervals(std::move(gaps), ambient_hi);
}

IntervalSet kappa_reflect(const IntervalSet& s) {
    if (std::fabs(s.ambient_hi() - 2.0) > 1e-12)
        throw validation_error(
            "the spectral reflection 2 - x needs the ambient interval [0, 2] "
            "(relative weight identically 1)");
    std::vector<Interval> parts;
    parts.reserve(s.size());
    for (const Interval& p : s.parts()) parts.push_back({2.0 - p.hi, 2.0 - p.lo});
    return IntervalSet::from_intervals(std::move(parts), 2.0);
}

} // namespace gapbrack
