#pragma once

#include <functional>
#include <string>
#include <vector>

#include "fup/interval_union.hpp"

namespace fup {

// Rectangular phase-space lattice in R^{2d} with a centered box fundamental
// region. Coordinates are ordered [x_1..x_d, w_1..w_d].
struct Lattice2d {
    int d = 1;
    std::vector<double> time_spacing; // a_1..a_d
    std::vector<double> freq_spacing; // b_1..b_d

    static Lattice2d square(double a, int d = 1);

    void validate() const;
    int ambient_dim() const { return 2 * d; }
    double spacing(int axis) const; // axis in [0, 2d)
    double cell_volume() const;
};

struct LatticeRestriction {
    Lattice2d lattice;
    // lattice point coordinates, each of length 2d, sorted lexicographically
    std::vector<std::vector<double>> points;
    bool approximate = false;
    std::string source; // description of the restricted set
};

// Lambda_Omega for a product set: per-axis interval scan, exact. `axes` must
// hold 2d interval unions in lattice coordinate order.
LatticeRestriction lattice_restriction(const Lattice2d& lattice,
                                       const std::vector<IntervalUnion>& axes);

// Membership-predicate route for bounded non-product sets: each cell is probed
// on a refining point grid; flagged approximate.
LatticeRestriction lattice_restriction(const Lattice2d& lattice,
                                       const std::function<bool(const std::vector<double>&)>& member,
                                       const std::vector<std::pair<double, double>>& bounding_box,
                                       int refine_levels = 4);

// gamma(R, Lambda) = sup over z in the fundamental region of the number of
// lattice cells meeting the open ball B_R(z); found by refining grid search
// over the fundamental region (d <= 2).
int overlap_count(const Lattice2d& lattice, double R);

} // namespace fup
