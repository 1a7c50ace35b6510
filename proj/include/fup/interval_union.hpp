#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "fup/rational.hpp"

namespace fup {

// Sorted union of disjoint closed intervals. Touching or overlapping input
// intervals are merged on construction so the disjointness invariant holds;
// Lebesgue measure is unchanged by the merge.
template <typename T>
class BasicIntervalUnion {
public:
    struct Interval {
        T lo;
        T hi;
    };

    BasicIntervalUnion() = default;

    explicit BasicIntervalUnion(std::vector<Interval> intervals) {
        for (const auto& iv : intervals)
            if (!(iv.lo < iv.hi)) throw std::invalid_argument("IntervalUnion: need lo < hi");
        std::sort(intervals.begin(), intervals.end(),
                  [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
        for (auto& iv : intervals) {
            if (!parts_.empty() && iv.lo <= parts_.back().hi) {
                if (parts_.back().hi < iv.hi) parts_.back().hi = iv.hi;
            } else {
                parts_.push_back(iv);
            }
        }
    }

    static BasicIntervalUnion single(T lo, T hi) { return BasicIntervalUnion({Interval{lo, hi}}); }

    bool empty() const { return parts_.empty(); }
    std::size_t size() const { return parts_.size(); }
    const Interval& operator[](std::size_t i) const { return parts_[i]; }
    const std::vector<Interval>& intervals() const { return parts_; }

    T measure() const {
        T m{0};
        for (const auto& iv : parts_) m = m + (iv.hi - iv.lo);
        return m;
    }

    T span_lo() const { return parts_.front().lo; }
    T span_hi() const { return parts_.back().hi; }

    bool contains(const T& x) const {
        for (const auto& iv : parts_) {
            if (x < iv.lo) return false;
            if (!(iv.hi < x)) return true;
        }
        return false;
    }

    // measure of (set intersect (-inf, x])
    T measure_below(const T& x) const {
        T m{0};
        for (const auto& iv : parts_) {
            if (!(iv.lo < x)) break;
            m = m + (std::min(iv.hi, x) - iv.lo);
        }
        return m;
    }

    T measure_in(const T& a, const T& b) const {
        if (!(a < b)) return T{0};
        return measure_below(b) - measure_below(a);
    }

    // true iff every interval of this union lies inside some interval of outer
    bool subset_of(const BasicIntervalUnion& outer, T tol = T{0}) const {
        std::size_t j = 0;
        for (const auto& iv : parts_) {
            while (j < outer.parts_.size() && outer.parts_[j].hi + tol < iv.hi) ++j;
            if (j == outer.parts_.size()) return false;
            if (iv.lo + tol < outer.parts_[j].lo) return false;
        }
        return true;
    }

    BasicIntervalUnion translated(const T& t) const {
        BasicIntervalUnion r;
        r.parts_ = parts_;
        for (auto& iv : r.parts_) { iv.lo = iv.lo + t; iv.hi = iv.hi + t; }
        return r;
    }

private:
    std::vector<Interval> parts_;
};

using IntervalUnion = BasicIntervalUnion<double>;
using RationalIntervalUnion = BasicIntervalUnion<Rational>;

inline IntervalUnion to_double_union(const RationalIntervalUnion& u) {
    std::vector<IntervalUnion::Interval> iv;
    iv.reserve(u.size());
    for (const auto& p : u.intervals()) iv.push_back({p.lo.to_double(), p.hi.to_double()});
    return IntervalUnion(iv);
}

} // namespace fup
