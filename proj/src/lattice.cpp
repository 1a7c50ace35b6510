#include "fup/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fup {

Lattice2d Lattice2d::square(double a, int d) {
    Lattice2d l;
    l.d = d;
    l.time_spacing.assign(d, a);
    l.freq_spacing.assign(d, a);
    l.validate();
    return l;
}

void Lattice2d::validate() const {
    if (d < 1) throw std::invalid_argument("Lattice2d: d must be >= 1");
    if (static_cast<int>(time_spacing.size()) != d ||
        static_cast<int>(freq_spacing.size()) != d)
        throw std::invalid_argument("Lattice2d: spacing vectors must have length d");
    for (double a : time_spacing)
        if (!(a > 0)) throw std::invalid_argument("Lattice2d: spacings must be positive");
    for (double b : freq_spacing)
        if (!(b > 0)) throw std::invalid_argument("Lattice2d: spacings must be positive");
}

double Lattice2d::spacing(int axis) const {
    return axis < d ? time_spacing[axis] : freq_spacing[axis - d];
}

double Lattice2d::cell_volume() const {
    double v = 1.0;
    for (double a : time_spacing) v *= a;
    for (double b : freq_spacing) v *= b;
    return v;
}

namespace {

// lattice indices i with |set cap [i s - s/2, i s + s/2]| > 0
std::vector<long> axis_indices(const IntervalUnion& set, double s) {
    std::vector<long> idx;
    for (const auto& iv : set.intervals()) {
        const long lo = static_cast<long>(std::floor(iv.lo / s - 0.5)) - 1;
        const long hi = static_cast<long>(std::ceil(iv.hi / s + 0.5)) + 1;
        for (long i = lo; i <= hi; ++i) {
            const double a = i * s - 0.5 * s, b = i * s + 0.5 * s;
            if (std::min(b, iv.hi) > std::max(a, iv.lo)) idx.push_back(i);
        }
    }
    std::sort(idx.begin(), idx.end());
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
    return idx;
}

void cartesian_points(const Lattice2d& lattice, const std::vector<std::vector<long>>& per_axis,
                      std::vector<std::vector<double>>& out) {
    const int dim = lattice.ambient_dim();
    std::vector<std::size_t> cursor(dim, 0);
    while (true) {
        std::vector<double> p(dim);
        for (int k = 0; k < dim; ++k)
            p[k] = static_cast<double>(per_axis[k][cursor[k]]) * lattice.spacing(k);
        out.push_back(std::move(p));
        int k = dim - 1;
        while (k >= 0 && ++cursor[k] == per_axis[k].size()) cursor[k--] = 0;
        if (k < 0) break;
    }
}

} // namespace

LatticeRestriction lattice_restriction(const Lattice2d& lattice,
                                       const std::vector<IntervalUnion>& axes) {
    lattice.validate();
    if (static_cast<int>(axes.size()) != lattice.ambient_dim())
        throw std::invalid_argument("lattice_restriction: need one interval union per axis");
    LatticeRestriction r;
    r.lattice = lattice;
    r.source = "product";
    std::vector<std::vector<long>> per_axis;
    for (int k = 0; k < lattice.ambient_dim(); ++k) {
        if (axes[k].empty()) return r; // empty set -> empty restriction
        per_axis.push_back(axis_indices(axes[k], lattice.spacing(k)));
        if (per_axis.back().empty()) return r;
    }
    cartesian_points(lattice, per_axis, r.points);
    return r;
}

LatticeRestriction lattice_restriction(const Lattice2d& lattice,
                                       const std::function<bool(const std::vector<double>&)>& member,
                                       const std::vector<std::pair<double, double>>& bounding_box,
                                       int refine_levels) {
    lattice.validate();
    const int dim = lattice.ambient_dim();
    if (static_cast<int>(bounding_box.size()) != dim)
        throw std::invalid_argument("lattice_restriction: bounding box dimension mismatch");
    for (const auto& [lo, hi] : bounding_box)
        if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi))
            throw std::invalid_argument("lattice_restriction: set must be bounded");

    LatticeRestriction r;
    r.lattice = lattice;
    r.approximate = true;
    r.source = "predicate";

    std::vector<long> lo_idx(dim), hi_idx(dim);
    for (int k = 0; k < dim; ++k) {
        const double s = lattice.spacing(k);
        lo_idx[k] = static_cast<long>(std::floor(bounding_box[k].first / s - 0.5));
        hi_idx[k] = static_cast<long>(std::ceil(bounding_box[k].second / s + 0.5));
    }

    std::vector<long> cur(dim, 0);
    std::function<void(int)> walk = [&](int k) {
        if (k == dim) {
            // probe the cell on refining grids until a member point appears
            for (int level = 1; level <= refine_levels; ++level) {
                const int m = 1 << level;
                std::vector<int> g(dim, 0);
                while (true) {
                    std::vector<double> p(dim);
                    for (int j = 0; j < dim; ++j) {
                        const double s = lattice.spacing(j);
                        p[j] = cur[j] * s - 0.5 * s + s * (g[j] + 0.5) / m;
                    }
                    if (member(p)) {
                        std::vector<double> pt(dim);
                        for (int j = 0; j < dim; ++j) pt[j] = cur[j] * lattice.spacing(j);
                        r.points.push_back(std::move(pt));
                        return;
                    }
                    int j = dim - 1;
                    while (j >= 0 && ++g[j] == m) g[j--] = 0;
                    if (j < 0) break;
                }
            }
            return;
        }
        for (long i = lo_idx[k]; i <= hi_idx[k]; ++i) {
            cur[k] = i;
            walk(k + 1);
        }
    };
    walk(0);
    std::sort(r.points.begin(), r.points.end());
    return r;
}

namespace {

// number of lattice cells whose interior meets the open ball B_R(z)
long depth_at(const Lattice2d& lattice, const std::vector<double>& z, double R) {
    const int dim = lattice.ambient_dim();
    std::vector<std::vector<double>> axis_d2(dim); // squared axis distances per candidate index
    for (int k = 0; k < dim; ++k) {
        const double s = lattice.spacing(k);
        const long lo = static_cast<long>(std::floor((z[k] - R) / s - 1));
        const long hi = static_cast<long>(std::ceil((z[k] + R) / s + 1));
        for (long i = lo; i <= hi; ++i) {
            const double dk = std::max(std::abs(z[k] - i * s) - 0.5 * s, 0.0);
            if (dk < R) axis_d2[k].push_back(dk * dk);
        }
    }
    // count tuples with sum of squared axis distances < R^2
    long count = 0;
    std::function<void(int, double)> rec = [&](int k, double acc) {
        if (k == dim) { ++count; return; }
        for (double d2 : axis_d2[k]) {
            if (acc + d2 < R * R - 1e-15) rec(k + 1, acc + d2);
        }
    };
    rec(0, 0.0);
    return count;
}

} // namespace

int overlap_count(const Lattice2d& lattice, double R) {
    lattice.validate();
    if (!(R > 0)) throw std::invalid_argument("overlap_count: R must be positive");
    const int dim = lattice.ambient_dim();
    if (dim > 4) throw std::invalid_argument("overlap_count: supported up to d = 2");

    // refining grid search over the closed fundamental region
    std::vector<double> lo(dim), hi(dim);
    for (int k = 0; k < dim; ++k) {
        lo[k] = -0.5 * lattice.spacing(k);
        hi[k] = 0.5 * lattice.spacing(k);
    }
    const int per_axis = dim <= 2 ? 129 : 17;
    long best = 0;
    std::vector<double> best_z(dim, 0.0), z(dim);

    for (int round = 0; round < 4; ++round) {
        std::vector<int> g(dim, 0);
        long local_best = -1;
        std::vector<double> local_z(dim);
        while (true) {
            for (int k = 0; k < dim; ++k)
                z[k] = lo[k] + (hi[k] - lo[k]) * g[k] / (per_axis - 1.0);
            const long c = depth_at(lattice, z, R);
            if (c > local_best) { local_best = c; local_z = z; }
            int k = dim - 1;
            while (k >= 0 && ++g[k] == per_axis) g[k--] = 0;
            if (k < 0) break;
        }
        if (local_best > best) { best = local_best; best_z = local_z; }
        // zoom toward the best point
        for (int k = 0; k < dim; ++k) {
            const double w = 0.25 * (hi[k] - lo[k]);
            lo[k] = std::max(lo[k], best_z[k] - w);
            hi[k] = std::min(hi[k], best_z[k] + w);
        }
    }
    return static_cast<int>(best);
}

} // namespace fup
